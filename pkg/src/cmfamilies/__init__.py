"""Calogero-Moser families, Lusztig families, cuspidal families, symplectic
leaves and rigid modules for the Coxeter types A, B, D and I2(m), at exact
rational parameters."""

from .cuspidal import (
    annotated_families,
    cuspidal_families,
    leaves_B,
    leaves_D,
    rigid_implies_cuspidal_check,
    rigid_modules,
)
from .exact import CherednikParameter, Cyclotomic, GroupRingElement, charged_residue, residue
from .families import (
    Family,
    FamilyPartition,
    clifford_descent,
    cm_families,
    lusztig_families,
    tau_twist,
)
from .symbols import BSymbol, bar, is_cuspidal_symbol, same_lusztig_family, symbol_of

__all__ = [
    "BSymbol",
    "CherednikParameter",
    "Cyclotomic",
    "Family",
    "FamilyPartition",
    "GroupRingElement",
    "annotated_families",
    "bar",
    "charged_residue",
    "clifford_descent",
    "cm_families",
    "cuspidal_families",
    "is_cuspidal_symbol",
    "leaves_B",
    "leaves_D",
    "lusztig_families",
    "residue",
    "rigid_implies_cuspidal_check",
    "rigid_modules",
    "same_lusztig_family",
    "symbol_of",
    "tau_twist",
]

__version__ = "0.1.0"
