"""Exact matrix representations and character theory for S_n, B_n and I2(m).

S_n irreducibles are built in Young's seminormal form (rational entries);
B_n irreducibles by explicit coset induction from B_r x B_{n-r}; dihedral
irreducibles from the standard two-dimensional matrices over Q(zeta_m).
Characters are computed combinatorially (Murnaghan-Nakayama for S_n, class
fusion for the wreath product) so that matrix traces have an independent
oracle to be checked against.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from itertools import combinations
from math import comb, factorial

from .exact import Cyclotomic
from .partitions import (
    Bipartition,
    Partition,
    bipartitions,
    hook_dimension,
    partitions,
)

Matrix = tuple[tuple, ...]


# ---------------------------------------------------------------------------
# Matrix helpers (entries: Fraction or Cyclotomic)
# ---------------------------------------------------------------------------

def mat_identity(d: int, one=Fraction(1), zero=Fraction(0)) -> Matrix:
    return tuple(tuple(one if i == j else zero for j in range(d)) for i in range(d))

def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    bt = list(zip(*b))
    return tuple(
        tuple(sum((a[i][t] * bt[j][t] for t in range(1, k)), a[i][0] * bt[j][0]) for j in range(m))
        for i in range(n)
    )

def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

def mat_scale(c, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)

def mat_trace(a: Matrix):
    t = a[0][0]
    for i in range(1, len(a)):
        t = t + a[i][i]
    return t

def mat_is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)

def mat_eq(a: Matrix, b: Matrix) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


# ---------------------------------------------------------------------------
# Standard tableaux and Young's seminormal form for S_n
# ---------------------------------------------------------------------------

@cache
def standard_tableaux(lam: Partition) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All standard tableaux of shape lam (entries 1..n), in a fixed order."""
    n = sum(lam)
    if n == 0:
        return ((),)

    def removable_corners(shape):
        for i, row in enumerate(shape):
            if row > 0 and (i == len(shape) - 1 or shape[i + 1] < row):
                yield i

    def build(shape, k):
        if k == 0:
            yield tuple(() for _ in shape)
            return
        for i in removable_corners(shape):
            smaller = list(shape)
            smaller[i] -= 1
            for t in build(tuple(smaller), k - 1):
                rows = list(t)
                rows[i] = rows[i] + (k,)
                yield tuple(rows)

    tabs = sorted(build(lam, n))
    return tuple(tabs)


def _tableau_positions(t) -> dict[int, tuple[int, int]]:
    return {v: (i, j) for i, row in enumerate(t) for j, v in enumerate(row)}


@cache
def symmetric_generator_matrices(lam: Partition) -> tuple[Matrix, ...]:
    """Seminormal matrices for the adjacent transpositions s_1 .. s_{n-1}."""
    n = sum(lam)
    tabs = standard_tableaux(lam)
    index = {t: i for i, t in enumerate(tabs)}
    d = len(tabs)
    mats = []
    for a in range(1, n):
        cols = [[Fraction(0)] * d for _ in range(d)]  # cols[j][i]
        for j, t in enumerate(tabs):
            pos = _tableau_positions(t)
            (ra, ca), (rb, cb) = pos[a], pos[a + 1]
            if ra == rb:
                cols[j][j] = Fraction(1)
            elif ca == cb:
                cols[j][j] = Fraction(-1)
            else:
                dist = (cb - rb) - (ca - ra)  # content(a+1) - content(a)
                swapped = tuple(
                    tuple(a + 1 if v == a else a if v == a + 1 else v for v in row) for row in t
                )
                partner = index[swapped]
                cols[j][j] = Fraction(1, dist)
                cols[j][partner] = Fraction(1) if dist > 0 else Fraction(1) - Fraction(1, dist * dist)
        mats.append(tuple(tuple(cols[j][i] for j in range(d)) for i in range(d)))
    return tuple(mats)


def sn_transposition_matrix(lam: Partition, j: int, k: int) -> Matrix:
    """Matrix of the transposition (j, k), 1 <= j < k <= n."""
    gens = symmetric_generator_matrices(lam)
    if j > k:
        j, k = k, j
    mat = gens[k - 2]  # s_{k-1}
    for i in range(k - 2, j - 1, -1):
        mat = mat_mul(mat_mul(gens[i - 1], mat), gens[i - 1])
    return mat


def jucys_murphy_eigenvalue(lam: Partition):
    """Scalar of z_n = sum_{j<n} s_{jn} on pi_lam; rectangles (l^b) give l-b.

    Returns the integer scalar, or the string "non-scalar" when z_n does not
    act by a scalar (exactly the non-rectangular shapes).
    """
    n = sum(lam)
    if n <= 1:
        return 0
    d = hook_dimension(lam)
    total = None
    for j in range(1, n):
        m = sn_transposition_matrix(lam, j, n)
        total = m if total is None else mat_add(total, m)
    diag = total[0][0]
    if mat_eq(total, mat_scale(diag, mat_identity(d))):
        assert diag.denominator == 1
        return int(diag)
    return "non-scalar"


# ---------------------------------------------------------------------------
# S_n characters (Murnaghan-Nakayama) and classes
# ---------------------------------------------------------------------------

def zee(mu: Partition) -> int:
    """Centralizer order of the class mu in S_n."""
    out = 1
    mult: dict[int, int] = {}
    for p in mu:
        mult[p] = mult.get(p, 0) + 1
    for p, m in mult.items():
        out *= factorial(m) * p**m
    return out


@cache
def sn_character(lam: Partition, mu: Partition) -> int:
    """chi_lam(mu) by the Murnaghan-Nakayama rule (beta-number form)."""
    if sum(lam) != sum(mu):
        raise ValueError("shape/class size mismatch")
    if not mu:
        return 1
    t = mu[0]
    rest = mu[1:]
    L = len(lam) + t  # enough beta numbers
    beta = sorted(lam[i] + (L - 1 - i) if i < len(lam) else (L - 1 - i) for i in range(L))
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - t
        if nb < 0 or nb in beta_set:
            continue
        between = sum(1 for x in beta if nb < x < b)
        new_beta = sorted(beta_set - {b} | {nb})
        # convert beta numbers back to a partition
        parts = tuple(x - i for i, x in enumerate(new_beta))
        newlam = tuple(p for p in reversed(parts) if p > 0)
        total += (-1) ** between * sn_character(newlam, rest)
    return total


def _merge(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


# ---------------------------------------------------------------------------
# B_n classes and characters (combinatorial)
# ---------------------------------------------------------------------------

BnClass = tuple[Partition, Partition]


@cache
def bn_classes(n: int) -> tuple[BnClass, ...]:
    """Conjugacy classes of B_n: pairs (alpha, beta) of partitions with total n.

    alpha holds positive cycle types, beta negative ones.
    """
    out = []
    for r in range(n + 1):
        for a in partitions(r):
            for b in partitions(n - r):
                out.append((a, b))
    return tuple(out)


def bn_centralizer_order(cls: BnClass) -> int:
    a, b = cls
    return (2 ** len(a)) * zee(a) * (2 ** len(b)) * zee(b)


def bn_class_size(n: int, cls: BnClass) -> int:
    return bn_order(n) // bn_centralizer_order(cls)


def bn_order(n: int) -> int:
    return 2**n * factorial(n)


def _submultisets(mu: Partition):
    """Distinct sub-multisets of a partition, as (sub, complement) pairs."""
    parts = sorted(set(mu))
    mults = [mu.count(p) for p in parts]

    def rec(i):
        if i == len(parts):
            yield (), ()
            return
        p, m = parts[i], mults[i]
        for take in range(m + 1):
            for sub, comp in rec(i + 1):
                yield (p,) * take + sub, (p,) * (m - take) + comp

    for sub, comp in rec(0):
        yield tuple(sorted(sub, reverse=True)), tuple(sorted(comp, reverse=True))


@cache
def bn_character(bp: Bipartition, cls: BnClass) -> int:
    """chi_{(lam0, lam1)} on the class (alpha, beta), via class fusion.

    chi is induced from B_r x B_{n-r} with the first factor the pullback of
    chi_{lam0} through B_r -> S_r and the second the gamma-twisted pullback
    of chi_{lam1}; gamma is (-1)^(number of negative cycles).
    """
    lam0, lam1 = bp
    r = sum(lam0)
    alpha, beta = cls
    n = sum(alpha) + sum(beta)
    total = Fraction(0)
    for a1, a2 in _submultisets(alpha):
        for b1, b2 in _submultisets(beta):
            if sum(a1) + sum(b1) != r:
                continue
            v1 = sn_character(lam0, _merge(a1, b1))
            v2 = sn_character(lam1, _merge(a2, b2)) * (-1) ** len(b2)
            z1 = bn_centralizer_order((a1, b1))
            z2 = bn_centralizer_order((a2, b2))
            total += Fraction(v1 * v2, z1 * z2)
    val = bn_centralizer_order(cls) * total
    assert val.denominator == 1
    return int(val)


def bn_dim(bp: Bipartition) -> int:
    r = sum(bp[0])
    n = r + sum(bp[1])
    return comb(n, r) * hook_dimension(bp[0]) * hook_dimension(bp[1])


def bn_inner_product(n: int, phi: dict, psi: dict) -> Fraction:
    """<phi, psi> over B_n for real-valued class functions (dicts class->value)."""
    return sum(
        (Fraction(phi[c] * psi[c], bn_centralizer_order(c)) for c in bn_classes(n)),
        Fraction(0),
    )


@cache
def bn_character_dict(bp: Bipartition) -> dict:
    n = sum(bp[0]) + sum(bp[1])
    return {c: bn_character(bp, c) for c in bn_classes(n)}


# ---------------------------------------------------------------------------
# Induced characters (class-fusion formula)
# ---------------------------------------------------------------------------

def induced_from_sj_bnj(nu: Partition, bp: Bipartition, n: int) -> dict:
    """Character of Ind from S_j x B_{n-j} of chi_nu x chi_bp, j = |nu|."""
    j = sum(nu)
    k = sum(bp[0]) + sum(bp[1])
    if j + k != n:
        raise ValueError("sizes must add to n")
    out = {}
    for cls in bn_classes(n):
        alpha, beta = cls
        total = Fraction(0)
        for mu, a_rest in _submultisets(alpha):
            if sum(mu) != j:
                continue
            sub_cls = (a_rest, beta)
            total += Fraction(
                sn_character(nu, mu) * bn_character(bp, sub_cls),
                zee(mu) * bn_centralizer_order(sub_cls),
            )
        val = bn_centralizer_order(cls) * total
        assert val.denominator == 1
        out[cls] = int(val)
    return out


def induced_from_br_bnr(bp0: Bipartition, bp1: Bipartition, n: int) -> dict:
    """Character of Ind from B_r x B_{n-r} of chi_bp0 x chi_bp1."""
    r = sum(bp0[0]) + sum(bp0[1])
    s = sum(bp1[0]) + sum(bp1[1])
    if r + s != n:
        raise ValueError("sizes must add to n")
    out = {}
    for cls in bn_classes(n):
        alpha, beta = cls
        total = Fraction(0)
        for a1, a2 in _submultisets(alpha):
            for b1, b2 in _submultisets(beta):
                if sum(a1) + sum(b1) != r:
                    continue
                c1, c2 = (a1, b1), (a2, b2)
                total += Fraction(
                    bn_character(bp0, c1) * bn_character(bp1, c2),
                    bn_centralizer_order(c1) * bn_centralizer_order(c2),
                )
        val = bn_centralizer_order(cls) * total
        assert val.denominator == 1
        out[cls] = int(val)
    return out


def induced_from_young(nu1: Partition, nu2: Partition, n: int) -> dict:
    """Character of Ind from S_j x S_{n-j} of chi_nu1 x chi_nu2 (inside S_n)."""
    if sum(nu1) + sum(nu2) != n:
        raise ValueError("sizes must add to n")
    out = {}
    for mu in partitions(n):
        total = Fraction(0)
        for m1, m2 in _submultisets(mu):
            if sum(m1) != sum(nu1):
                continue
            total += Fraction(sn_character(nu1, m1) * sn_character(nu2, m2), zee(m1) * zee(m2))
        val = zee(mu) * total
        assert val.denominator == 1
        out[mu] = int(val)
    return out


def sn_norm(n: int, phi: dict) -> Fraction:
    return sum((Fraction(phi[mu] ** 2, zee(mu)) for mu in partitions(n)), Fraction(0))


def decompose_bn(n: int, phi: dict) -> dict[Bipartition, int]:
    """Decompose a B_n class function into irreducible multiplicities."""
    out = {}
    for bp in bipartitions(n):
        m = bn_inner_product(n, phi, bn_character_dict(bp))
        assert m.denominator == 1
        if m:
            out[bp] = int(m)
    return out


def decompose_sn(n: int, phi: dict) -> dict[Partition, int]:
    out = {}
    for lam in partitions(n):
        chi = {mu: sn_character(lam, mu) for mu in partitions(n)}
        m = sum((Fraction(phi[mu] * chi[mu], zee(mu)) for mu in partitions(n)), Fraction(0))
        assert m.denominator == 1
        if m:
            out[lam] = int(m)
    return out


# ---------------------------------------------------------------------------
# B_n matrix representations by coset induction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MatrixRep:
    """Exact matrix model: generator name -> matrix."""

    group_tag: str
    label: object
    generators: dict = field(hash=False)
    dim: int


@cache
def b_rep_basis(bp: Bipartition):
    lam0, lam1 = bp
    r, n = sum(lam0), sum(lam0) + sum(lam1)
    d0, d1 = hook_dimension(lam0), hook_dimension(lam1)
    basis = []
    for A in combinations(range(1, n + 1), r):
        for i in range(d0):
            for j in range(d1):
                basis.append((A, i, j))
    return tuple(basis)


@cache
def build_B_rep(bp: Bipartition) -> MatrixRep:
    """Matrices of eps_1(-1), ..., eps_n(-1) and s_1, ..., s_{n-1} on pi_bp.

    The module is induced from B_r x B_{n-r}: basis vectors (A, i, j) where A
    is the r-subset of coordinates carrying the untwisted factor and (i, j)
    index seminormal bases of pi_{lam0} and pi_{lam1}.
    """
    lam0, lam1 = bp
    r = sum(lam0)
    n = r + sum(lam1)
    if n < 1:
        raise ValueError("need n >= 1")
    basis = b_rep_basis(bp)
    index = {b: k for k, b in enumerate(basis)}
    d = len(basis)
    gens0 = symmetric_generator_matrices(lam0)
    gens1 = symmetric_generator_matrices(lam1)
    generators: dict[str, Matrix] = {}

    for k in range(1, n + 1):
        generators[f"eps{k}"] = tuple(
            tuple(
                (Fraction(1) if k in basis[i][0] else Fraction(-1)) if i == j else Fraction(0)
                for j in range(d)
            )
            for i in range(d)
        )

    for a in range(1, n):
        cols = [[Fraction(0)] * d for _ in range(d)]
        for col, (A, i, j) in enumerate(basis):
            inA = a in A
            in1A = (a + 1) in A
            if inA and in1A:
                p = A.index(a)  # a+1 sits at p+1
                m = gens0[p]
                for i2 in range(len(m)):
                    if m[i2][i]:
                        cols[col][index[(A, i2, j)]] += m[i2][i]
            elif not inA and not in1A:
                comp = tuple(x for x in range(1, n + 1) if x not in A)
                q = comp.index(a)
                m = gens1[q]
                for j2 in range(len(m)):
                    if m[j2][j]:
                        cols[col][index[(A, i, j2)]] += m[j2][j]
            else:
                newA = tuple(sorted(set(A) ^ {a, a + 1}))
                cols[col][index[(newA, i, j)]] += Fraction(1)
        generators[f"s{a}"] = tuple(tuple(cols[j2][i2] for j2 in range(d)) for i2 in range(d))

    return MatrixRep(group_tag=f"B{n}", label=bp, generators=generators, dim=d)


def bn_transposition_matrix(rep: MatrixRep, j: int, k: int) -> Matrix:
    """Matrix of s_{jk} (plain transposition) in a built B_n rep."""
    if j > k:
        j, k = k, j
    gens = rep.generators
    mat = gens[f"s{k - 1}"]
    for i in range(k - 2, j - 1, -1):
        mat = mat_mul(mat_mul(gens[f"s{i}"], mat), gens[f"s{i}"])
    return mat


def bn_neg_transposition_matrix(rep: MatrixRep, j: int, k: int) -> Matrix:
    """Matrix of s_{jk,-1} = eps_j(-1) s_{jk} eps_j(-1)."""
    e = rep.generators[f"eps{j}"]
    return mat_mul(mat_mul(e, bn_transposition_matrix(rep, j, k)), e)


def bn_element_matrix(rep: MatrixRep, sigma: tuple[int, ...], signs: tuple[int, ...]) -> Matrix:
    """Matrix of the signed permutation (permutation matrix of sigma times the
    diagonal sign matrix), with sigma given in one-line notation (1-based)."""
    n = len(sigma)
    word = []
    s = list(sigma)
    # bubble sort s into the identity; the recorded swaps, applied in reverse,
    # build the permutation matrix
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if s[i] > s[i + 1]:
                s[i], s[i + 1] = s[i + 1], s[i]
                word.append(i + 1)
                changed = True
    mat = mat_identity(rep.dim)
    for a in reversed(word):
        mat = mat_mul(rep.generators[f"s{a}"], mat)
    for k in range(1, n + 1):
        if signs[k - 1] == -1:
            mat = mat_mul(mat, rep.generators[f"eps{k}"])
    return mat


def bn_class_representative(n: int, cls: BnClass) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """A signed permutation in the class (alpha, beta)."""
    alpha, beta = cls
    sigma = list(range(1, n + 1))
    signs = [1] * n
    pos = 0
    for part in alpha:
        block = list(range(pos + 1, pos + part + 1))
        for idx, v in enumerate(block):
            sigma[v - 1] = block[(idx + 1) % part]
        pos += part
    for part in beta:
        block = list(range(pos + 1, pos + part + 1))
        for idx, v in enumerate(block):
            sigma[v - 1] = block[(idx + 1) % part]
        signs[block[0] - 1] = -1
        pos += part
    return tuple(sigma), tuple(signs)


# ---------------------------------------------------------------------------
# Dihedral groups I2(m)
# ---------------------------------------------------------------------------

def i2_labels(m: int) -> tuple[str, ...]:
    if m < 5:
        raise ValueError("m >= 5 required")
    out = ["1", "eps"]
    if m % 2 == 0:
        out += ["eps1", "eps2"]
    out += [f"phi_{i}" for i in range(1, (m - 1) // 2 + 1)]
    return tuple(out)


def i2_two_dim_range(m: int) -> range:
    return range(1, (m - 1) // 2 + 1)


def i2_classes(m: int) -> tuple[tuple[str, int], ...]:
    """(name, size) pairs: e, r^l, and the reflection class(es)."""
    out = [("e", 1)]
    half = m // 2
    for l in range(1, (m - 1) // 2 + 1):
        out.append((f"r{l}", 2))
    if m % 2 == 0:
        out.append((f"r{half}", 1))
        out.append(("s", half))
        out.append(("t", half))
    else:
        out.append(("s", m))
    return tuple(out)


def i2_character(label: str, cls: str, m: int) -> Cyclotomic:
    """Character value as an element of Q(zeta_m)."""
    rat = lambda q: Cyclotomic.from_rational(m, q)
    if cls == "e":
        l = 0
    elif cls.startswith("r"):
        l = int(cls[1:])
    else:
        l = None  # reflection class
    if label == "1":
        return rat(1)
    if label == "eps":
        return rat(1) if l is not None else rat(-1)
    if label == "eps1":
        # eps1(r) = -1, eps1(s) = 1, eps1(t) = -1
        if l is not None:
            return rat((-1) ** l)
        return rat(1) if cls == "s" else rat(-1)
    if label == "eps2":
        if l is not None:
            return rat((-1) ** l)
        return rat(-1) if cls == "s" else rat(1)
    i = int(label.split("_")[1])
    if l is not None:
        return Cyclotomic.zeta(m, i * l) + Cyclotomic.zeta(m, -i * l)
    return rat(0)


def i2_character_table(m: int) -> dict[str, dict[str, Cyclotomic]]:
    return {
        lab: {cls: i2_character(lab, cls, m) for cls, _ in i2_classes(m)}
        for lab in i2_labels(m)
    }


def build_dihedral_rep(label: str, m: int) -> MatrixRep:
    """Matrices for the generating reflections s and t (r = s t)."""
    if m < 5:
        raise ValueError("m >= 5 required")
    if label not in i2_labels(m):
        raise ValueError(f"unknown dihedral label {label!r} for m={m}")
    rat = lambda q: Cyclotomic.from_rational(m, q)
    if label.startswith("phi"):
        i = int(label.split("_")[1])
        z = Cyclotomic.zeta
        s = ((rat(0), rat(1)), (rat(1), rat(0)))
        t = ((rat(0), z(m, -i)), (z(m, i), rat(0)))
        return MatrixRep(group_tag=f"I2_{m}", label=label, generators={"s": s, "t": t}, dim=2)
    vals = {"1": (1, 1), "eps": (-1, -1), "eps1": (1, -1), "eps2": (-1, 1)}[label]
    s = ((rat(vals[0]),),)
    t = ((rat(vals[1]),),)
    return MatrixRep(group_tag=f"I2_{m}", label=label, generators={"s": s, "t": t}, dim=1)


def i2_reflection_matrix(rep: MatrixRep, l: int, m: int) -> Matrix:
    """Matrix of the reflection s_l = r^l s, with r = s t."""
    s, t = rep.generators["s"], rep.generators["t"]
    r = mat_mul(s, t)
    out = s
    for _ in range(l % m):
        out = mat_mul(r, out)
    return out


def i2_class_rep_matrix(rep: MatrixRep, cls: str, m: int) -> Matrix:
    s, t = rep.generators["s"], rep.generators["t"]
    if cls == "e":
        return mat_identity(rep.dim, Cyclotomic.from_rational(m, 1), Cyclotomic.zero(m))
    if cls.startswith("r"):
        l = int(cls[1:])
        r = mat_mul(s, t)
        out = mat_identity(rep.dim, Cyclotomic.from_rational(m, 1), Cyclotomic.zero(m))
        for _ in range(l):
            out = mat_mul(r, out)
        return out
    return s if cls == "s" else t


def i2_induced_from_reflection(m: int, parabolic: int, chi: str) -> dict[str, Fraction]:
    """Decomposition of Ind_{P}^{W} chi for P = <s> (parabolic=1) or <t> (2).

    chi is "1" or "psi" (the nontrivial character of the order-2 subgroup).
    Returns irreducible label -> multiplicity, computed by Frobenius from the
    class-fusion induced character.
    """
    if parabolic not in (1, 2):
        raise ValueError("parabolic must be 1 or 2")
    if m % 2 == 1:
        refl_cls = "s"
    else:
        refl_cls = "s" if parabolic == 1 else "t"
    gen_value = Fraction(1) if chi == "1" else Fraction(-1)
    order = 2 * m
    classes = i2_classes(m)
    sizes = dict(classes)
    # induced character values
    ind = {}
    for cls, size in classes:
        if cls == "e":
            val = Fraction(order, 2)  # index of P
        elif cls == refl_cls:
            # only the generator of P meets this class
            val = Fraction(order, 2 * size) * gen_value
        else:
            val = Fraction(0)
        ind[cls] = val
    table = i2_character_table(m)
    out = {}
    for lab in i2_labels(m):
        total = Cyclotomic.zero(m)
        for cls, size in classes:
            total = total + table[lab][cls].conjugate() * (ind[cls] * size)
        mult = total.rational_value() / order
        assert mult.denominator == 1
        if mult:
            out[lab] = mult
    return out


# ---------------------------------------------------------------------------
# Generic operations used by the spec surface
# ---------------------------------------------------------------------------

def build_symmetric_rep(lam: Partition) -> MatrixRep:
    n = sum(lam)
    if n < 1:
        raise ValueError("need n >= 1")
    gens = symmetric_generator_matrices(lam)
    generators = {f"s{a}": gens[a - 1] for a in range(1, n)}
    return MatrixRep(group_tag=f"S{n}", label=lam, generators=generators, dim=hook_dimension(lam))


def induced_character(sub: tuple, chi: tuple, n_or_m: int) -> dict:
    """Frobenius induction for the supported parabolic descriptors.

    sub: ("young", j) in S_n; ("sj_bnj", j) or ("br_bnr", r) in B_n;
    ("P1",) or ("P2",) in I2(m).  chi is the subgroup irreducible label.
    """
    kind = sub[0]
    if kind == "young":
        nu1, nu2 = chi
        return induced_from_young(nu1, nu2, n_or_m)
    if kind == "sj_bnj":
        nu, bp = chi
        return induced_from_sj_bnj(nu, bp, n_or_m)
    if kind == "br_bnr":
        bp0, bp1 = chi
        return induced_from_br_bnr(bp0, bp1, n_or_m)
    if kind in ("P1", "P2"):
        return i2_induced_from_reflection(n_or_m, 1 if kind == "P1" else 2, chi)
    raise ValueError(f"unsupported subgroup descriptor {sub!r}")


def branching_reducibility_check(type_tag: str, n: int, descriptor) -> bool:
    """True iff every irreducible of the given parabolic induces reducibly.

    descriptor: for type A, an integer j meaning S_j x S_{n-j} (proper for
    1 <= j <= n-1); for type B, j meaning S_j x B_{n-j} (proper for
    1 <= j <= n); the string "W" means the full group (returns False).
    """
    if descriptor == "W":
        return False
    j = int(descriptor)
    if type_tag == "A":
        if not (1 <= j <= n - 1):
            raise ValueError("proper maximal Young subgroups have 1 <= j <= n-1")
        for nu1 in partitions(j):
            for nu2 in partitions(n - j):
                phi = induced_from_young(nu1, nu2, n)
                if sn_norm(n, phi) == 1:
                    return False
        return True
    if type_tag == "B":
        if not (1 <= j <= n):
            raise ValueError("maximal parabolics of B_n are S_j x B_{n-j}, 1 <= j <= n")
        for nu in partitions(j):
            for bp in bipartitions(n - j):
                phi = induced_from_sj_bnj(nu, bp, n)
                if bn_inner_product(n, phi, phi) == 1:
                    return False
        return True
    raise ValueError(f"unsupported type {type_tag!r}")
