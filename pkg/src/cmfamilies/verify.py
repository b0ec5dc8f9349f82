"""Theorem-verification suites: one per acceptance-grade check, shared by the
CLI `verify` subcommand and the test suite."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import fixtures as fx
from .cuspidal import (
    cuspidal_families,
    leaves_B,
    leaves_D,
    parabolic_order_refined,
    rigid_implies_cuspidal_check,
    rigid_modules,
)
from .exact import CherednikParameter, Cyclotomic
from .families import (
    cm_families,
    dihedral_j_induction,
    lusztig_families,
    tau_twist,
)
from .partitions import bipartitions, dagger, partitions, subpartitions_of_box
from .reps import (
    bn_character_dict,
    bn_inner_product,
    branching_reducibility_check,
    build_B_rep,
    build_dihedral_rep,
    build_symmetric_rep,
    i2_character_table,
    i2_classes,
    i2_labels,
    jucys_murphy_eigenvalue,
    mat_eq,
    mat_identity,
    mat_mul,
    sn_character,
    zee,
)

JOBS_ENV_VAR = "CMFAMILIES_JOBS"


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    detail: str


def _result(name: str, failures: list[str], checked: int) -> SuiteResult:
    if failures:
        return SuiteResult(name, False, f"{len(failures)} failure(s): " + "; ".join(failures[:5]))
    return SuiteResult(name, True, f"{checked} checks")


# ---------------------------------------------------------------------------
# Shared grids
# ---------------------------------------------------------------------------

def _b_grid(max_n: int):
    params = [CherednikParameter.type_B(m, 1) for m in range(8)]
    params += [
        CherednikParameter.type_B(1, 0),
        CherednikParameter.type_B(Fraction(1, 2), 1),
        CherednikParameter.type_B(3, 2),
    ]
    return [("B", n, p) for n in range(1, max_n + 1) for p in params]


def _i2_grid(lo: int = 5, hi: int = 16):
    out = []
    for m in range(lo, hi + 1):
        if m % 2:
            out.append(("I2", m, CherednikParameter.type_I2(1, 1)))
        else:
            for a, b in ((1, 1), (1, 2), (2, 1), (0, 1), (1, 0)):
                out.append(("I2", m, CherednikParameter.type_I2(a, b)))
    return out


def _full_grid(max_n: int = 8):
    grid = _b_grid(max_n)
    grid += [("D", n, CherednikParameter.type_D(1)) for n in range(2, max_n + 1)]
    grid += _i2_grid()
    grid += [
        ("A", n, CherednikParameter.type_A(c)) for n in range(1, max_n + 1) for c in (0, 1)
    ]
    return grid


# ---------------------------------------------------------------------------
# Suites (numbered to match the reported criteria)
# ---------------------------------------------------------------------------

def suite_1_families_equality(max_n: int = 8) -> SuiteResult:
    """CM partition equals Lusztig partition on the full grid."""
    failures = []
    grid = _full_grid(max_n)
    for type_tag, size, param in grid:
        cm = cm_families(type_tag, size, param).as_sets()
        lu = lusztig_families(type_tag, size, param).as_sets()
        if cm != lu:
            failures.append(f"{type_tag} {size} {param.to_json()}")
    return _result("1 families CM=Lusztig", failures, len(grid))


def suite_2_cuspidal_equality(max_n: int = 8) -> SuiteResult:
    """Cuspidal families agree between methods; type-B existence/shape/size."""
    failures = []
    checked = 0
    for type_tag, size, param in _full_grid(max_n):
        cm = {frozenset(f.members) for f in cuspidal_families(type_tag, size, param, "CM")}
        lu = {frozenset(f.members) for f in cuspidal_families(type_tag, size, param, "Lusztig")}
        checked += 1
        if cm != lu:
            failures.append(f"methods differ: {type_tag} {size} {param.to_json()}")
            continue
        if type_tag != "B" or param.is_zero() or param.kappa == 0:
            continue
        m = param.b_integral_m()
        if m is None:
            continue
        ks = [k for k in range(1, size + 1) if k * (k + abs(m)) == size]
        if not ks:
            if cm:
                failures.append(f"unexpected cuspidal: B {size} {param.to_json()}")
            continue
        (k,) = ks
        fcusp = {(lam, dagger(lam, k, abs(m))) for lam in subpartitions_of_box(k, abs(m))}
        if m < 0:
            fcusp = {(b, a) for a, b in fcusp}
        if len(cm) != 1:
            failures.append(f"not unique: B {size} {param.to_json()}")
        elif next(iter(cm)) != frozenset(fcusp):
            failures.append(f"not Fcusp: B {size} {param.to_json()}")
        elif len(fcusp) != comb(2 * k + abs(m), k):
            failures.append(f"wrong size: B {size} {param.to_json()}")
    # the two displayed instances
    for n, m, want in ((6, 1, 10), (3, 2, 4)):
        fams = cuspidal_families("B", n, CherednikParameter.type_B(m, 1), "CM")
        checked += 1
        if len(fams) != 1 or len(fams[0].members) != want:
            failures.append(f"display size: B {n} m={m}")
    return _result("2 cuspidal CM=Lusztig + Fcusp", failures, checked)


def suite_3_rigid_oracle_B(max_n: int = 5) -> SuiteResult:
    """Equation oracle matches the closed form for type B plus smooth points."""
    failures = []
    checked = 0
    points = []
    for n in range(1, max_n + 1):
        for m in range(-(n - 1), n):
            points.append((n, CherednikParameter.type_B(m, 1)))
    points.append((max_n - 1, CherednikParameter.type_B(Fraction(1, 2), 1)))
    points.append((max_n - 1, CherednikParameter.type_B(Fraction(7, 3), Fraction(1, 3))))
    for n, param in points:
        checked += 1
        cf = rigid_modules("B", n, param, "closed_form")
        orc = rigid_modules("B", n, param, "equation_oracle")
        if cf != orc:
            failures.append(f"B {n} {param.to_json()}")
    return _result("3 rigid closed_form=oracle (B)", failures, checked)


def suite_4_dihedral_table1(lo: int = 5, hi: int = 12) -> SuiteResult:
    """Families, rigids and cuspidals for I2(m) from first principles."""
    failures = []
    checked = 0
    for m in range(lo, hi + 1):
        if m % 2:
            params = [(1, 1)]
        else:
            params = [(1, 1), (-1, 1), (1, 2), (2, 1), (0, 1), (1, 0)]
        for a, b in params:
            param = CherednikParameter.type_I2(a, b)
            checked += 1
            orc = rigid_modules("I2", m, param, "equation_oracle")
            if orc != fx.table1_rigid(m, a, b):
                failures.append(f"rigid m={m} a={a} b={b}")
            if a >= 0 and b >= 0 and (a, b) != (0, 0):
                if cm_families("I2", m, param).as_sets() != fx.table2_families(m, a, b):
                    failures.append(f"families m={m} a={a} b={b}")
                cusp = cuspidal_families("I2", m, param, "CM")
                want = cuspidal_families("I2", m, param, "Lusztig")
                if [set(f.members) for f in cusp] != [set(f.members) for f in want]:
                    failures.append(f"cuspidal m={m} a={a} b={b}")
    return _result("4 dihedral table (families/rigid/cuspidal)", failures, checked)


def suite_5_dihedral_table4(ms=(6, 8, 10, 12, 14, 16)) -> SuiteResult:
    """j-induction from both rank-one parabolics matches the reference rows."""
    failures = []
    checked = 0
    for m in ms:
        for a, b in ((1, 1), (1, 2), (2, 1), (0, 1), (1, 0)):
            want = fx.table4_j_induction(m, a, b)
            for (p, chi), labels in want.items():
                checked += 1
                got = set(dihedral_j_induction(m, a, b, p, chi))
                if got != labels:
                    failures.append(f"m={m} a={a} b={b} P{p} {chi}")
    return _result("5 dihedral j-induction", failures, checked)


def suite_6_leaves(max_n: int = 8) -> SuiteResult:
    """Leaf dimensions, poset sanity, and cuspidal-leaf existence."""
    failures = []
    checked = 0

    def check(cond: bool, msg: str):
        nonlocal checked
        checked += 1
        if not cond:
            failures.append(msg)

    lp = leaves_B(6, 1, 1)
    check(sorted(l.dimension for l in lp.leaves) == [0, 8, 12], "B6 (1,1) dims")
    lp = leaves_D(4, 1)
    check(sorted(l.dimension for l in lp.leaves) == [0, 6], "D4 dims")
    for n in range(1, max_n + 1):
        lpd = leaves_B(n, 1, 0)
        check(
            all(l.dimension == 2 * len(l.index) for l in lpd.leaves),
            f"degenerate dims n={n}",
        )
        check(lpd.is_antisymmetric() and parabolic_order_refined(lpd), f"degenerate poset n={n}")
    posets = [leaves_B(n, m, 1) for n in range(1, max_n + 1) for m in range(4)]
    posets += [leaves_D(n, 1) for n in range(2, max_n + 1)]
    for lp in posets:
        check(lp.is_antisymmetric() and parabolic_order_refined(lp), "poset sanity")
    # cuspidal leaf exists iff the cuspidal family does (nonzero parameters)
    grid = [
        (t, s, p) for (t, s, p) in _full_grid(max_n) if t in ("B", "D") and not p.is_zero()
    ]
    for type_tag, size, param in grid:
        if type_tag == "B":
            lp = leaves_B(size, param.c1, param.kappa)
        else:
            lp = leaves_D(size, param.kappa)
        has_zero = bool(lp.zero_dimensional())
        has_cusp = bool(cuspidal_families(type_tag, size, param, "CM"))
        check(has_zero == has_cusp, f"leaf iff family: {type_tag} {size} {param.to_json()}")
    return _result("6 leaf posets", failures, checked)


def suite_7_rigid_implies_cuspidal(max_n: int = 8) -> SuiteResult:
    failures = []
    grid = _full_grid(max_n)
    for type_tag, size, param in grid:
        if not rigid_implies_cuspidal_check(type_tag, size, param):
            failures.append(f"{type_tag} {size} {param.to_json()}")
    return _result("7 rigid => cuspidal", failures, len(grid))


def _sn_relations_ok(lam) -> bool:
    rep = build_symmetric_rep(lam)
    n = sum(lam)
    one = mat_identity(rep.dim)
    g = rep.generators
    for a in range(1, n):
        if not mat_eq(mat_mul(g[f"s{a}"], g[f"s{a}"]), one):
            return False
    for a in range(1, n - 1):
        left = mat_mul(g[f"s{a}"], mat_mul(g[f"s{a + 1}"], g[f"s{a}"]))
        right = mat_mul(g[f"s{a + 1}"], mat_mul(g[f"s{a}"], g[f"s{a + 1}"]))
        if not mat_eq(left, right):
            return False
    for a in range(1, n):
        for b in range(a + 2, n):
            if not mat_eq(
                mat_mul(g[f"s{a}"], g[f"s{b}"]), mat_mul(g[f"s{b}"], g[f"s{a}"])
            ):
                return False
    return True


def _bn_relations_ok(bp) -> bool:
    rep = build_B_rep(bp)
    n = sum(bp[0]) + sum(bp[1])
    one = mat_identity(rep.dim)
    g = rep.generators
    for k in range(1, n + 1):
        if not mat_eq(mat_mul(g[f"eps{k}"], g[f"eps{k}"]), one):
            return False
        for j in range(k + 1, n + 1):
            if not mat_eq(
                mat_mul(g[f"eps{k}"], g[f"eps{j}"]), mat_mul(g[f"eps{j}"], g[f"eps{k}"])
            ):
                return False
    for a in range(1, n):
        if not mat_eq(mat_mul(g[f"s{a}"], g[f"s{a}"]), one):
            return False
        conj = mat_mul(g[f"s{a}"], mat_mul(g[f"eps{a}"], g[f"s{a}"]))
        if not mat_eq(conj, g[f"eps{a + 1}"]):
            return False
        for k in range(1, n + 1):
            if k in (a, a + 1):
                continue
            if not mat_eq(
                mat_mul(g[f"s{a}"], g[f"eps{k}"]), mat_mul(g[f"eps{k}"], g[f"s{a}"])
            ):
                return False
    for a in range(1, n - 1):
        left = mat_mul(g[f"s{a}"], mat_mul(g[f"s{a + 1}"], g[f"s{a}"]))
        right = mat_mul(g[f"s{a + 1}"], mat_mul(g[f"s{a}"], g[f"s{a + 1}"]))
        if not mat_eq(left, right):
            return False
    return True


def _i2_relations_ok(label, m) -> bool:
    rep = build_dihedral_rep(label, m)
    one = mat_identity(rep.dim, Cyclotomic.from_rational(m, 1), Cyclotomic.zero(m))
    s, t = rep.generators["s"], rep.generators["t"]
    if not (mat_eq(mat_mul(s, s), one) and mat_eq(mat_mul(t, t), one)):
        return False
    r = mat_mul(s, t)
    acc = one
    for _ in range(m):
        acc = mat_mul(r, acc)
    return mat_eq(acc, one)


def suite_8_structural(max_sn: int = 5, max_bn: int = 4, max_i2: int = 16) -> SuiteResult:
    failures = []
    checked = 0

    def check(cond: bool, msg: str):
        nonlocal checked
        checked += 1
        if not cond:
            failures.append(msg)

    # group relations
    for n in range(1, max_sn + 1):
        for lam in partitions(n):
            check(_sn_relations_ok(lam), f"Sn relations {lam}")
    for n in range(1, max_bn + 1):
        for bp in bipartitions(n):
            check(_bn_relations_ok(bp), f"Bn relations {bp}")
    for m in range(5, max_i2 + 1):
        for lab in i2_labels(m):
            check(_i2_relations_ok(lab, m), f"I2({m}) relations {lab}")

    # character orthonormality
    for n in range(1, max_sn + 1):
        labs = partitions(n)
        for i, lam in enumerate(labs):
            for nu in labs[i:]:
                ip = sum(
                    Fraction(sn_character(lam, mu) * sn_character(nu, mu), zee(mu))
                    for mu in partitions(n)
                )
                check(ip == (1 if lam == nu else 0), f"Sn orth {lam} {nu}")
    for n in range(1, max_bn + 1):
        labs = bipartitions(n)
        for i, bp1 in enumerate(labs):
            for bp2 in labs[i:]:
                ip = bn_inner_product(n, bn_character_dict(bp1), bn_character_dict(bp2))
                check(ip == (1 if bp1 == bp2 else 0), f"Bn orth {bp1} {bp2}")
    for m in range(5, max_i2 + 1):
        table = i2_character_table(m)
        labs = i2_labels(m)
        for i, l1 in enumerate(labs):
            for l2 in labs[i:]:
                total = Cyclotomic.zero(m)
                for cls, size in i2_classes(m):
                    total = total + table[l1][cls] * table[l2][cls].conjugate() * size
                check(total == (2 * m if l1 == l2 else 0), f"I2({m}) orth {l1} {l2}")

    # branching: induction from every proper maximal parabolic is reducible
    for n in (4, 5):
        for j in range(1, n):
            check(branching_reducibility_check("A", n, j), f"S{n} parabolic {j}")
    for n in (3, 4):
        for j in range(1, n + 1):
            check(branching_reducibility_check("B", n, j), f"B{n} parabolic {j}")

    # Jucys-Murphy element acts by l - b on the rectangle (l^b)
    for l in range(1, 7):
        for b in range(1, 7):
            if l * b <= 6:
                check(
                    jucys_murphy_eigenvalue((l,) * b) == l - b, f"JM ({l}^{b})"
                )
    return _result("8 structural oracles", failures, checked)


def suite_9_symmetries(max_n: int = 6) -> SuiteResult:
    """Component-swap twist for c1 -> -c1 and rescaling invariance."""
    failures = []
    checked = 0

    def check(cond: bool, msg: str):
        nonlocal checked
        checked += 1
        if not cond:
            failures.append(msg)

    for n in range(1, max_n + 1):
        for m in range(4):
            for kappa in (1, Fraction(1, 2)):
                pos = cm_families("B", n, CherednikParameter.type_B(m * kappa, kappa))
                neg = cm_families("B", n, CherednikParameter.type_B(-m * kappa, kappa))
                check(tau_twist(pos).as_sets() == neg.as_sets(), f"tau B {n} m={m} k={kappa}")
    scalars = (Fraction(2), Fraction(1, 3))
    points = [
        ("B", 4, CherednikParameter.type_B(1, 1)),
        ("B", max_n, CherednikParameter.type_B(2, 1)),
        ("B", max_n, CherednikParameter.type_B(1, 0)),
        ("A", max_n, CherednikParameter.type_A(1)),
        ("D", max_n, CherednikParameter.type_D(1)),
        ("I2", 8, CherednikParameter.type_I2(1, 2)),
        ("I2", 7, CherednikParameter.type_I2(1, 1)),
    ]
    for type_tag, size, param in points:
        base_cm = cm_families(type_tag, size, param).as_sets()
        base_lu = lusztig_families(type_tag, size, param).as_sets()
        for alpha in scalars:
            scaled = CherednikParameter(type_tag, tuple(alpha * v for v in param.values))
            check(
                cm_families(type_tag, size, scaled).as_sets() == base_cm,
                f"CM rescale {type_tag} {size} x{alpha}",
            )
            check(
                lusztig_families(type_tag, size, scaled).as_sets() == base_lu,
                f"Lusztig rescale {type_tag} {size} x{alpha}",
            )
    return _result("9 symmetry suites", failures, checked)


SUITES = {
    "1": suite_1_families_equality,
    "2": suite_2_cuspidal_equality,
    "3": suite_3_rigid_oracle_B,
    "4": suite_4_dihedral_table1,
    "5": suite_5_dihedral_table4,
    "6": suite_6_leaves,
    "7": suite_7_rigid_implies_cuspidal,
    "8": suite_8_structural,
    "9": suite_9_symmetries,
}


def _run_one(key: str) -> SuiteResult:
    return SUITES[key]()


def run_suites(keys=None, jobs: int | None = None) -> list[SuiteResult]:
    keys = list(SUITES) if keys in (None, "all") else list(keys)
    for k in keys:
        if k not in SUITES:
            raise KeyError(f"unknown suite {k!r}")
    if jobs is None:
        jobs = int(os.environ.get(JOBS_ENV_VAR, "1"))
    if jobs > 1 and len(keys) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_one, keys))
    return [SUITES[k]() for k in keys]
