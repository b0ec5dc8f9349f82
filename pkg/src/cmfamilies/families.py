"""Calogero-Moser and Lusztig family partitions of Irr W for types A, B, D
and I2(m), with the tau-twist symmetry and Clifford descent to type D."""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from . import symbols as sym
from .exact import CherednikParameter, charged_residue, residue
from .partitions import (
    Bipartition,
    DLabel,
    Partition,
    bipartitions,
    d_label,
    d_labels,
    partitions,
)
from .reps import i2_labels, i2_two_dim_range


@dataclass(frozen=True)
class Family:
    members: tuple
    is_singleton: bool
    k_invariant: int | None = None
    leaf_label: str | None = None
    cuspidal: bool = False

    @classmethod
    def of(cls, members, **kw) -> "Family":
        ms = tuple(sorted(members))
        if not ms:
            raise ValueError("families are nonempty")
        return cls(members=ms, is_singleton=len(ms) == 1, **kw)


@dataclass(frozen=True)
class FamilyPartition:
    type_tag: str
    size: int  # n, or m for I2
    param: CherednikParameter
    method: str  # "CM" | "Lusztig"
    families: tuple[Family, ...]

    def family_of(self, label) -> Family:
        for f in self.families:
            if label in f.members:
                return f
        raise KeyError(f"label {label!r} not in any family")

    def as_sets(self) -> frozenset[frozenset]:
        return frozenset(frozenset(f.members) for f in self.families)

    def all_labels(self) -> tuple:
        return tuple(sorted(x for f in self.families for x in f.members))


def _canonical(families: list, **meta) -> FamilyPartition:
    fams = sorted((Family.of(f) if not isinstance(f, Family) else f for f in families),
                  key=lambda f: f.members[0])
    return FamilyPartition(families=tuple(fams), **meta)


def _group_by(labels, keyfunc) -> list[tuple]:
    buckets: dict = {}
    for lab in labels:
        buckets.setdefault(keyfunc(lab), []).append(lab)
    return list(buckets.values())


def irr_labels(type_tag: str, size: int) -> tuple:
    if type_tag == "A":
        return partitions(size)
    if type_tag == "B":
        return bipartitions(size)
    if type_tag == "D":
        return d_labels(size)
    if type_tag == "I2":
        return i2_labels(size)
    raise ValueError(f"unknown type {type_tag!r}")


# ---------------------------------------------------------------------------
# Calogero-Moser families
# ---------------------------------------------------------------------------

def cm_families(type_tag: str, size: int, param: CherednikParameter) -> FamilyPartition:
    if param.type_tag != type_tag:
        raise ValueError("parameter shape does not match the requested type")
    meta = dict(type_tag=type_tag, size=size, param=param, method="CM")
    labels = irr_labels(type_tag, size)
    if param.is_zero():
        return _canonical([labels], **meta)

    if type_tag == "A":
        return _canonical([[lam] for lam in labels], **meta)

    if type_tag == "B":
        charge = (Fraction(0), param.c1, -param.kappa)
        return _canonical(
            _group_by(labels, lambda bp: charged_residue(bp, charge).key()), **meta
        )

    if type_tag == "D":
        if param.kappa == 0:
            return _canonical([labels], **meta)
        splits = [[lab] for lab in labels if lab[2] is not None]
        rest = [lab for lab in labels if lab[2] is None]
        grouped = _group_by(rest, lambda lab: (residue(lab[0]) + residue(lab[1])).key())
        return _canonical(splits + grouped, **meta)

    if type_tag == "I2":
        return _canonical(_group_by(labels, lambda lab: _euler_key(lab, size, param)), **meta)

    raise ValueError(f"unknown type {type_tag!r}")


def _euler_key(label: str, m: int, param: CherednikParameter) -> Fraction:
    """Euler pairing b*chi(s)/chi(1) + a*chi(t)/chi(1) with b = c(s), a = c(t)."""
    a, b = param.a, param.b
    if label.startswith("phi"):
        return Fraction(0)
    s_val, t_val = {
        "1": (1, 1),
        "eps": (-1, -1),
        "eps1": (1, -1),
        "eps2": (-1, 1),
    }[label]
    return b * s_val + a * t_val


# ---------------------------------------------------------------------------
# Lusztig families
# ---------------------------------------------------------------------------

def lusztig_families(type_tag: str, size: int, param: CherednikParameter) -> FamilyPartition:
    if param.type_tag != type_tag:
        raise ValueError("parameter shape does not match the requested type")
    if any(v < 0 for v in param.values):
        raise ValueError(
            "Lusztig families are defined for nonnegative parameters; "
            "twist by a linear character (tau) to reduce to this case"
        )
    meta = dict(type_tag=type_tag, size=size, param=param, method="Lusztig")
    labels = irr_labels(type_tag, size)
    if param.is_zero():
        return _canonical([labels], **meta)

    if type_tag == "A":
        return _canonical([[lam] for lam in labels], **meta)

    if type_tag == "B":
        return _canonical(_lusztig_b_groups(size, param), **meta)

    if type_tag == "D":
        b_param = CherednikParameter.type_B(0, param.kappa)
        b_part = lusztig_families("B", size, b_param)
        descended = clifford_descent(b_part)
        return replace(descended, method="Lusztig")

    if type_tag == "I2":
        return _canonical(_lusztig_i2_groups(size, param), **meta)

    raise ValueError(f"unknown type {type_tag!r}")


def _lusztig_b_groups(n: int, param: CherednikParameter) -> list[list[Bipartition]]:
    labels = bipartitions(n)
    c1, kappa = param.c1, param.kappa
    if kappa == 0:
        # degenerate case: families by |lam1|
        return _group_by(labels, lambda bp: sum(bp[1]))
    m = param.b_integral_m()
    if m is None:
        # non-integral rational c1/kappa: singletons
        return [[bp] for bp in labels]
    # integral case: normalize to kappa=1, c1=m and classify by symbol content
    N = max(n, 1)
    return _group_by(
        labels, lambda bp: sym.content_key(sym.symbol_of(bp, N, m, 1))
    )


def _lusztig_i2_groups(m: int, param: CherednikParameter) -> list[list[str]]:
    a, b = param.a, param.b
    F = [f"phi_{i}" for i in i2_two_dim_range(m)]
    if m % 2 == 1:
        # a = b > 0 is the only nonzero regime
        return [["1"], ["eps"], F]
    if a == b:  # both > 0
        return [["1"], ["eps"], ["eps1", "eps2"] + F]
    if a > 0 and b > 0:
        return [["1"], ["eps"], ["eps1"], ["eps2"], F]
    if b > a == 0:
        return [["1", "eps1"], ["eps", "eps2"], F]
    # a > b == 0
    return [["1", "eps2"], ["eps", "eps1"], F]


# ---------------------------------------------------------------------------
# Symmetries and descent
# ---------------------------------------------------------------------------

def swap_bipartition(bp: Bipartition) -> Bipartition:
    return (bp[1], bp[0])


def tau_twist(fp: FamilyPartition) -> FamilyPartition:
    """Type-B partition at (c1, kappa) -> partition at (-c1, kappa)."""
    if fp.type_tag != "B":
        raise ValueError("tau twist is a type-B operation")
    new_param = CherednikParameter.type_B(-fp.param.c1, fp.param.kappa)
    fams = [
        replace(f, members=tuple(sorted(swap_bipartition(bp) for bp in f.members)))
        for f in fp.families
    ]
    return _canonical(fams, type_tag="B", size=fp.size, param=new_param, method=fp.method)


def clifford_descent(fp: FamilyPartition) -> FamilyPartition:
    """Descend a B_n family partition at c1 = 0 to D_n.

    Each B_n family maps to the set of D_n constituents of the restrictions of
    its members; a singleton family {(lam, lam)} splits into the two singleton
    families {lam}_1 and {lam}_2.
    """
    if fp.type_tag != "B":
        raise ValueError("descent starts from a type-B partition")
    if fp.param.c1 != 0:
        raise ValueError("Clifford descent needs c1 = 0")
    n = fp.size
    d_param = CherednikParameter.type_D(fp.param.kappa)
    out: list[list[DLabel]] = []
    seen: set[frozenset] = set()
    for f in fp.families:
        members = set(f.members)
        if members != {swap_bipartition(bp) for bp in members}:
            raise AssertionError("family not stable under component swap at c1 = 0")
        if len(members) == 1:
            (bp,) = members
            if bp[0] == bp[1]:
                out.append([d_label(bp[0], bp[1], 1)])
                out.append([d_label(bp[0], bp[1], 2)])
                continue
        constituents: set[DLabel] = set()
        for lam, mu in members:
            if lam == mu:
                constituents.add(d_label(lam, mu, 1))
                constituents.add(d_label(lam, mu, 2))
            else:
                constituents.add(d_label(lam, mu))
        key = frozenset(constituents)
        if key not in seen:
            seen.add(key)
            out.append(sorted(constituents))
    return _canonical(out, type_tag="D", size=n, param=d_param, method=fp.method)


# ---------------------------------------------------------------------------
# j-induction
# ---------------------------------------------------------------------------

def degenerate_j_induction(mu: Bipartition, nu: Partition, c1) -> Bipartition:
    """j-induction from B_i x S_{n-i} at kappa = 0, c1 > 0.

    mu is a bipartition of i with mu[0] empty, nu a partition of n - i; the
    result must be (nu, mu[1]) with coefficient one.
    """
    from .partitions import lr_coefficient

    c1 = Fraction(c1)
    if c1 <= 0:
        raise ValueError("need c1 > 0")
    if mu[0] != ():
        raise ValueError("the first component of mu must be empty")
    i = sum(mu[1])
    n = i + sum(nu)
    # full induction via Littlewood-Richardson expansion, filtered by the
    # a-invariant a_lam = c1 * |lam^(1)|
    result: dict[Bipartition, int] = {}
    for lam in bipartitions(n):
        if sum(lam[1]) != i:  # a-invariant filter
            continue
        total = 0
        for r0 in range(sum(lam[0]) + 1):
            for a0 in partitions(r0):
                c_a0 = lr_coefficient(mu[0], a0, lam[0])
                if not c_a0:
                    continue
                for a1 in partitions(sum(nu) - r0):
                    c_a1 = lr_coefficient(mu[1], a1, lam[1])
                    if not c_a1:
                        continue
                    total += c_a0 * c_a1 * lr_coefficient(a0, a1, nu)
        if total:
            result[lam] = total
    if result != {(nu, mu[1]): 1}:
        raise AssertionError(f"degenerate j-induction is not a standard basis vector: {result}")
    return (nu, mu[1])


def dihedral_a_function(m: int, a, b) -> dict[str, Fraction]:
    """Lusztig a-values of Irr I2(m) at b = c(s), a = c(t) >= 0."""
    a, b = Fraction(a), Fraction(b)
    if a < 0 or b < 0 or (a == 0 and b == 0):
        raise ValueError("need a, b >= 0, not both zero")
    out: dict[str, Fraction] = {"1": Fraction(0)}
    if a == b:
        for i in i2_two_dim_range(m):
            out[f"phi_{i}"] = a
        out["eps"] = m * a
        out["eps1"] = a
        out["eps2"] = a
    elif b > a:
        for i in i2_two_dim_range(m):
            out[f"phi_{i}"] = b
        out["eps"] = Fraction(m, 2) * (a + b)
        out["eps1"] = a
        out["eps2"] = Fraction(m, 2) * (b - a) + a
    else:
        for i in i2_two_dim_range(m):
            out[f"phi_{i}"] = a
        out["eps"] = Fraction(m, 2) * (a + b)
        out["eps2"] = b
        out["eps1"] = Fraction(m, 2) * (a - b) + b
    if m % 2 == 1:
        out.pop("eps1", None)
        out.pop("eps2", None)
    return out


def dihedral_j_induction(m: int, a, b, parabolic: int, chi: str) -> dict[str, int]:
    """j-induction from P_1 = <s> or P_2 = <t>: the explicit induction
    decomposition filtered by equality of a-values."""
    from .reps import i2_induced_from_reflection

    a, b = Fraction(a), Fraction(b)
    ind = i2_induced_from_reflection(m, parabolic, chi)
    a_w = dihedral_a_function(m, a, b)
    sub_a = {(1, "1"): Fraction(0), (1, "psi"): b, (2, "1"): Fraction(0), (2, "psi"): a}
    target = sub_a[(parabolic, chi)]
    return {lab: int(mult) for lab, mult in ind.items() if a_w[lab] == target}
