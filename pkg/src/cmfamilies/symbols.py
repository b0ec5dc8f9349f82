"""Type-B symbol calculus: construction, shift, content, cuspidal predicate,
bar operation, and the family-size invariant."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .partitions import Bipartition


@dataclass(frozen=True)
class BSymbol:
    """Two-row symbol: beta has length N+m, gamma length N.

    Entries are exact rationals; beta_i = r (mod kappa), gamma_j = 0 (mod kappa).
    """

    beta: tuple[Fraction, ...]
    gamma: tuple[Fraction, ...]
    m: int
    kappa: Fraction
    r: Fraction

    def __post_init__(self):
        beta = tuple(Fraction(b) for b in self.beta)
        gamma = tuple(Fraction(g) for g in self.gamma)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "kappa", Fraction(self.kappa))
        object.__setattr__(self, "r", Fraction(self.r))
        if self.kappa <= 0:
            raise ValueError("kappa must be positive")
        if not (0 <= self.r < self.kappa):
            raise ValueError("need 0 <= r < kappa")
        if self.m < 0:
            raise ValueError("m must be nonnegative")
        if len(beta) != len(gamma) + self.m:
            raise ValueError("beta must have length N + m")
        for row in (beta, gamma):
            if any(x < 0 for x in row):
                raise ValueError("entries must be nonnegative")
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                raise ValueError("rows must be strictly increasing")
        for b in beta:
            if (b - self.r) % self.kappa != 0:
                raise ValueError("beta entries must be congruent to r mod kappa")
        for g in gamma:
            if g % self.kappa != 0:
                raise ValueError("gamma entries must be divisible by kappa")

    @property
    def N(self) -> int:
        return len(self.gamma)

    @property
    def c1(self) -> Fraction:
        return self.m * self.kappa + self.r

    def to_json(self) -> dict:
        return {
            "beta": [str(b) for b in self.beta],
            "gamma": [str(g) for g in self.gamma],
            "m": self.m,
            "kappa": str(self.kappa),
            "r": str(self.r),
        }

    @classmethod
    def from_json(cls, data: dict) -> "BSymbol":
        return cls(
            beta=tuple(Fraction(b) for b in data["beta"]),
            gamma=tuple(Fraction(g) for g in data["gamma"]),
            m=int(data["m"]),
            kappa=Fraction(data["kappa"]),
            r=Fraction(data["r"]),
        )


def symbol_of(bp: Bipartition, N: int, c1, kappa) -> BSymbol:
    """The symbol Sy^N_{(c1,kappa);n}(bp)."""
    c1, kappa = Fraction(c1), Fraction(kappa)
    if kappa <= 0:
        raise ValueError("kappa must be positive")
    if c1 < 0:
        raise ValueError("c1 must be nonnegative")
    m = int(c1 // kappa)
    r = c1 - m * kappa
    lam0, lam1 = bp
    if len(lam0) > N + m or len(lam1) > N:
        raise ValueError(f"N={N} not large enough for {bp}")

    def part(lam, i):  # 1-based part with zero padding
        return lam[i - 1] if i <= len(lam) else 0

    beta = tuple(kappa * (part(lam0, N + m - i + 1) + i - 1) + r for i in range(1, N + m + 1))
    gamma = tuple(kappa * (part(lam1, N - j + 1) + j - 1) for j in range(1, N + 1))
    s = BSymbol(beta=beta, gamma=gamma, m=m, kappa=kappa, r=r)
    n = sum(lam0) + sum(lam1)
    if weight(s) != expected_weight(n, N, c1, kappa):
        raise AssertionError("weight equation violated")
    return s


def weight(s: BSymbol) -> Fraction:
    return sum(s.beta, Fraction(0)) + sum(s.gamma, Fraction(0))


def expected_weight(n: int, N: int, c1, kappa) -> Fraction:
    c1, kappa = Fraction(c1), Fraction(kappa)
    m = int(c1 // kappa)
    r = c1 - m * kappa
    return n * kappa + kappa * N * N + N * (c1 - kappa) + kappa * comb(m, 2) + r * m


def symbol_bipartition(s: BSymbol) -> Bipartition:
    """Recover the labeled bipartition."""
    Nm, N = len(s.beta), s.N
    lam0 = [int((s.beta[i - 1] - s.r) / s.kappa) - (i - 1) for i in range(1, Nm + 1)]
    lam1 = [int(s.gamma[j - 1] / s.kappa) - (j - 1) for j in range(1, N + 1)]
    lam0 = tuple(p for p in reversed(lam0) if p > 0)
    lam1 = tuple(p for p in reversed(lam1) if p > 0)
    return (lam0, lam1)


def shift(s: BSymbol, i: int = 1) -> BSymbol:
    """i-fold shift: prepend r to beta and 0 to gamma, add kappa to older entries."""
    if i < 0:
        raise ValueError("shift count must be nonnegative")
    for _ in range(i):
        s = BSymbol(
            beta=(s.r,) + tuple(b + s.kappa for b in s.beta),
            gamma=(Fraction(0),) + tuple(g + s.kappa for g in s.gamma),
            m=s.m,
            kappa=s.kappa,
            r=s.r,
        )
    return s


def content(s: BSymbol) -> Counter:
    """Multiset of all entries of both rows."""
    return Counter(s.beta) + Counter(s.gamma)


def content_key(s: BSymbol) -> tuple:
    """Canonical hashable form of the content multiset."""
    return tuple(sorted(content(s).items()))


def normalize(s: BSymbol) -> BSymbol:
    """Integral form: entries (beta - r)/kappa and gamma/kappa, at kappa=1, r=0."""
    return BSymbol(
        beta=tuple((b - s.r) / s.kappa for b in s.beta),
        gamma=tuple(g / s.kappa for g in s.gamma),
        m=s.m,
        kappa=Fraction(1),
        r=Fraction(0),
    )


def same_lusztig_family(bp1: Bipartition, bp2: Bipartition, c1, kappa) -> bool:
    """Equality of symbol contents at a common N (integral case only)."""
    c1, kappa = Fraction(c1), Fraction(kappa)
    if kappa <= 0:
        raise ValueError("kappa must be positive")
    if (c1 / kappa).denominator != 1:
        raise ValueError("family comparison needs the integral case r = 0")
    n1 = sum(bp1[0]) + sum(bp1[1])
    n2 = sum(bp2[0]) + sum(bp2[1])
    N = max(n1, n2, 1)
    s1 = symbol_of(bp1, N, c1, kappa)
    s2 = symbol_of(bp2, N, c1, kappa)
    return content_key(s1) == content_key(s2)


def is_cuspidal_symbol(s: BSymbol) -> bool:
    """Content multiplicities n_i weakly decreasing in i >= 0 (no gaps)."""
    cnt = content(normalize(s))
    if not cnt:
        return True
    top = max(cnt)
    prev = None
    for i in range(int(top) + 1):
        ni = cnt.get(Fraction(i), 0)
        if prev is not None and ni > prev:
            return False
        prev = ni
    return True


def bar(s: BSymbol, t: int | None = None) -> BSymbol:
    """Sign-twist symbol: rows {0..t} minus {t - gamma_j} and {0..t} minus {t - beta_i}.

    Integral case only; t defaults to the largest entry of s.
    """
    if s.kappa != 1 or s.r != 0:
        raise ValueError("bar is defined in the integral case kappa=1, r=0")
    top = max((*s.beta, *s.gamma), default=Fraction(0))
    if t is None:
        t = int(top)
    if t < top:
        raise ValueError(f"t={t} below the largest entry {top}")
    full = set(range(t + 1))
    new_beta = tuple(sorted(Fraction(x) for x in full - {t - int(g) for g in s.gamma}))
    new_gamma = tuple(sorted(Fraction(x) for x in full - {t - int(b) for b in s.beta}))
    return BSymbol(beta=new_beta, gamma=new_gamma, m=s.m, kappa=s.kappa, r=s.r)


def family_k_invariant(s: BSymbol) -> tuple[int, int]:
    """(k_F, predicted family size C(2k+m, k)) from the content multiplicities."""
    cnt = content(normalize(s))
    doubled = sum(1 for c in cnt.values() if c == 2)
    k = s.N - doubled
    if k < 0:
        raise AssertionError("negative k invariant")
    return k, comb(2 * k + s.m, k)
