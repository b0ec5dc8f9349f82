"""Loader for the bundled reference tables (JSON files in fixtures/)."""
from __future__ import annotations

import json
from fractions import Fraction
from functools import cache
from importlib import resources

from ..partitions import Bipartition
from ..reps import i2_labels, i2_two_dim_range


@cache
def load_fixture(name: str) -> dict:
    name = name.replace("-", "_")
    path = resources.files("cmfamilies") / "fixtures" / f"{name}.json"
    try:
        return json.loads(path.read_text())
    except FileNotFoundError:
        raise KeyError(f"unknown fixture {name!r}") from None


def _expand_tokens(labels: list[str], m: int) -> list[str]:
    """Replace the symbolic tokens used in the dihedral tables.

    "F" / "Chi" stand for all two-dimensional labels; "R" for the
    two-dimensional labels that are rigid at every nonzero parameter;
    "phi_(m-2)/2" for the label at the excluded even index.
    """
    two_dim = [f"phi_{i}" for i in i2_two_dim_range(m)]
    out: list[str] = []
    for lab in labels:
        if lab in ("F", "Chi"):
            out.extend(two_dim)
        elif lab == "R":
            excluded = {"phi_1"}
            if m % 2 == 0:
                excluded.add(f"phi_{(m - 2) // 2}")
            out.extend(l for l in two_dim if l not in excluded)
        elif lab == "phi_(m-2)/2":
            if m % 2 != 0:
                raise ValueError("even-m token in an odd-m row")
            out.append(f"phi_{(m - 2) // 2}")
        else:
            if lab not in i2_labels(m):
                raise ValueError(f"unknown label {lab!r} for m={m}")
            out.append(lab)
    return out


def _regime(m: int, a: Fraction, b: Fraction) -> str:
    if m % 2 == 1:
        if a != b:
            raise ValueError("odd m forces a = b")
        return "b=a>0" if a > 0 else "zero"
    if a == b:
        return "b=a>0" if a > 0 else "zero"
    if b > a:
        return "b>a>0" if a > 0 else "b>a=0"
    return "a>b>0" if b > 0 else "a>b=0"


def table1_rigid(m: int, a, b) -> list[str]:
    """Expected rigid labels from the reference table (nonzero parameters)."""
    a, b = Fraction(a), Fraction(b)
    data = load_fixture("dihedral_table1")
    rows = data["rows_odd"] if m % 2 else data["rows_even"]
    if a == b != 0:
        regime = "equal"
    elif a == -b != 0:
        regime = "opposite"
    elif a != 0 and b != 0:
        regime = "generic"
    elif (a == 0) != (b == 0):
        regime = "one_zero"
    else:
        raise ValueError("table covers nonzero parameters only")
    row = next(r for r in rows if r["regime"] == regime)
    return sorted(_expand_tokens(row["rigid"], m))


def table2_families(m: int, a, b) -> frozenset[frozenset[str]]:
    """Expected family partition from the reference table (a, b > 0 regimes only)."""
    a, b = Fraction(a), Fraction(b)
    data = load_fixture("dihedral_table2")
    rows = data["rows_odd"] if m % 2 else data["rows_even"]
    regime = _regime(m, a, b)
    row = next(r for r in rows if r["regime"] == regime)
    return frozenset(frozenset(_expand_tokens(f, m)) for f in row["families"])


def _eval_expr(expr: str, m: int, a: Fraction, b: Fraction) -> Fraction:
    return Fraction(eval(expr, {"__builtins__": {}},
                         {"m": Fraction(m), "a": a, "b": b}))


def table3_a_function(m: int, a, b) -> dict[str, Fraction]:
    """Expected a-function values per label for even m."""
    a, b = Fraction(a), Fraction(b)
    if m % 2:
        raise ValueError("table covers even m")
    data = load_fixture("dihedral_table3")
    if a == b > 0:
        regime = "b=a>0"
    elif b > a >= 0:
        regime = "b>a>=0"
    elif a > b >= 0:
        regime = "a>b>=0"
    else:
        raise ValueError("table covers nonnegative parameters with max > 0")
    row = next(r for r in data["rows"] if r["regime"] == regime)
    out = {}
    for i in i2_two_dim_range(m):
        out[f"phi_{i}"] = _eval_expr(row["values"]["phi"], m, a, b)
    for lab in ("1", "eps", "eps1", "eps2"):
        out[lab] = _eval_expr(row["values"][lab], m, a, b)
    return out


def table3_parabolic(m: int, a, b) -> dict[tuple[int, str], Fraction]:
    """a-function on the two rank-one parabolics."""
    a, b = Fraction(a), Fraction(b)
    vals = load_fixture("dihedral_table3")["parabolic"]
    return {
        (1, "1"): _eval_expr(vals["1"], m, a, b),
        (1, "psi"): _eval_expr(vals["psi1"], m, a, b),
        (2, "1"): _eval_expr(vals["1"], m, a, b),
        (2, "psi"): _eval_expr(vals["psi2"], m, a, b),
    }


def table4_j_induction(m: int, a, b) -> dict[tuple[int, str], set[str]]:
    """Expected j-induction constituents for even m, keyed by (parabolic, chi)."""
    a, b = Fraction(a), Fraction(b)
    if m % 2:
        raise ValueError("table covers even m")
    data = load_fixture("dihedral_table4")
    regime = _regime(m, a, b)
    row = next(r for r in data["rows"] if r["regime"] == regime)
    return {
        (1, "1"): set(_expand_tokens(row["P1_1"], m)),
        (1, "psi"): set(_expand_tokens(row["P1_psi"], m)),
        (2, "1"): set(_expand_tokens(row["P2_1"], m)),
        (2, "psi"): set(_expand_tokens(row["P2_psi"], m)),
    }


def fcusp_members(k: int, m: int) -> list[Bipartition]:
    data = load_fixture(f"fcusp_{k}_{m}")
    return [
        (tuple(p0), tuple(p1)) for p0, p1 in data["members"]
    ]
