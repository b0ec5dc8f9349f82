"""Exact arithmetic: the group ring Z[Q], cyclotomic fields Q(zeta_m), and
Cherednik parameters as exact rationals."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterable

from .partitions import Bipartition, Partition, contents


# ---------------------------------------------------------------------------
# Group ring Z[Q]
# ---------------------------------------------------------------------------

class GroupRingElement:
    """Element of Z[Q]: finitely supported map exponent -> nonzero integer."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[Fraction, int]] = ()):
        acc: dict[Fraction, int] = {}
        for exp, coeff in terms:
            exp = Fraction(exp)
            acc[exp] = acc.get(exp, 0) + coeff
        self.terms: dict[Fraction, int] = {e: c for e, c in acc.items() if c != 0}

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return GroupRingElement(out.items())

    def shift(self, e) -> "GroupRingElement":
        """Multiply by x^e."""
        e = Fraction(e)
        return GroupRingElement(((exp + e, c) for exp, c in self.terms.items()))

    def substitute(self, alpha) -> "GroupRingElement":
        """x -> x^alpha on every term."""
        alpha = Fraction(alpha)
        return GroupRingElement(((exp * alpha, c) for exp, c in self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def key(self) -> tuple:
        """Canonical hashable form, usable for grouping into families."""
        return tuple(sorted(self.terms.items()))

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e, c in sorted(self.terms.items()):
            bits.append(f"{c}*x^({e})")
        return " + ".join(bits)

    def to_json(self) -> dict:
        return {str(e): c for e, c in sorted(self.terms.items())}

    @classmethod
    def from_json(cls, data: dict) -> "GroupRingElement":
        return cls(((Fraction(e), int(c)) for e, c in data.items()))


def residue(lam: Partition) -> GroupRingElement:
    """Res_lam(x) = sum over boxes of x^{ct(box)}."""
    return GroupRingElement(((Fraction(c), 1) for c in contents(lam)))


def charged_residue(bp: Bipartition, charge) -> GroupRingElement:
    """x^{m0} Res_{lam0}(x^{mp}) + x^{m1} Res_{lam1}(x^{mp})."""
    m0, m1, mp = (Fraction(v) for v in charge)
    a = residue(bp[0]).substitute(mp).shift(m0)
    b = residue(bp[1]).substitute(mp).shift(m1)
    return a + b


# ---------------------------------------------------------------------------
# Cyclotomic field Q(zeta_m)
# ---------------------------------------------------------------------------

def _poly_divmod_int(num: list[int], den: list[int]) -> list[int]:
    """Exact quotient of integer polynomials (den monic, remainder known zero)."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        coef = num[i + len(den) - 1]
        q[i] = coef
        if coef:
            for j, d in enumerate(den):
                num[i + j] -= coef * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("nonzero remainder in cyclotomic division")
    return q


@cache
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("m >= 1 required")
    num = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            num = _poly_divmod_int(num, list(cyclotomic_poly(d)))
    return tuple(num)


class Cyclotomic:
    """Residue class in Q[x]/Phi_m(x); x is a primitive m-th root of unity."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Iterable = ()):
        self.m = m
        phi = cyclotomic_poly(m)
        deg = len(phi) - 1
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > deg:
            cs = self._reduce(cs, phi)
        cs += [Fraction(0)] * (deg - len(cs))
        self.coeffs = tuple(cs)

    @staticmethod
    def _reduce(cs: list[Fraction], phi: tuple[int, ...]) -> list[Fraction]:
        deg = len(phi) - 1
        cs = list(cs)
        for i in range(len(cs) - 1, deg - 1, -1):
            c = cs[i]
            if c:
                for j in range(len(phi)):
                    cs[i - deg + j] -= c * phi[j]
        return cs[:deg]

    @classmethod
    def zero(cls, m: int) -> "Cyclotomic":
        return cls(m)

    @classmethod
    def from_rational(cls, m: int, q) -> "Cyclotomic":
        return cls(m, [Fraction(q)])

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> "Cyclotomic":
        k %= m
        return cls(m, [0] * k + [1])

    def _check(self, other: "Cyclotomic"):
        if self.m != other.m:
            raise ValueError("mixed conductors")

    def __add__(self, other):
        if not isinstance(other, Cyclotomic):
            other = Cyclotomic.from_rational(self.m, other)
        self._check(other)
        return Cyclotomic(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.m, [-a for a in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Cyclotomic):
            other = Cyclotomic.from_rational(self.m, other)
        return self + (-other)

    def __rsub__(self, other):
        return Cyclotomic.from_rational(self.m, other) - self

    def __mul__(self, other):
        if not isinstance(other, Cyclotomic):
            q = Fraction(other)
            return Cyclotomic(self.m, [a * q for a in self.coeffs])
        self._check(other)
        out = [Fraction(0)] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Cyclotomic(self.m, out)

    __rmul__ = __mul__

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation: zeta -> zeta^{-1}."""
        out = Cyclotomic.zero(self.m)
        for i, a in enumerate(self.coeffs):
            if a:
                out = out + Cyclotomic.zeta(self.m, -i) * a
        return out

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not rational")
        return self.coeffs[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(self.m, other)
        return isinstance(other, Cyclotomic) and self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.m, self.coeffs))

    def __repr__(self) -> str:
        bits = [f"{c}*z^{i}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(bits) if bits else "0"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def cyclotomic_sum_check(i: int, m: int) -> bool:
    """True iff sum_{l<m} zeta^{il} = 0; must equal (i mod m != 0)."""
    if m < 1:
        raise ValueError("m >= 1 required")
    total = Cyclotomic.zero(m)
    for l in range(m):
        total = total + Cyclotomic.zeta(m, i * l)
    return total.is_zero()


# ---------------------------------------------------------------------------
# Parameters
# ---------------------------------------------------------------------------

def parse_rational(text) -> Fraction:
    """Parse "p", "p/q", "-p/q" into an exact rational."""
    return Fraction(text)


@dataclass(frozen=True)
class CherednikParameter:
    """Exact rational parameter, shaped per reflection-group type."""

    type_tag: str  # "A" | "B" | "D" | "I2"
    values: tuple[Fraction, ...]

    _SHAPES = {"A": 1, "B": 2, "D": 1, "I2": 2}

    def __post_init__(self):
        if self.type_tag not in self._SHAPES:
            raise ValueError(f"unknown type {self.type_tag!r}")
        vals = tuple(Fraction(v) for v in self.values)
        if len(vals) != self._SHAPES[self.type_tag]:
            raise ValueError(f"type {self.type_tag} needs {self._SHAPES[self.type_tag]} value(s)")
        object.__setattr__(self, "values", vals)

    # constructors -----------------------------------------------------------
    @classmethod
    def type_A(cls, c) -> "CherednikParameter":
        return cls("A", (Fraction(c),))

    @classmethod
    def type_B(cls, c1, kappa) -> "CherednikParameter":
        return cls("B", (Fraction(c1), Fraction(kappa)))

    @classmethod
    def type_D(cls, kappa) -> "CherednikParameter":
        return cls("D", (Fraction(kappa),))

    @classmethod
    def type_I2(cls, a, b, m: int | None = None) -> "CherednikParameter":
        a, b = Fraction(a), Fraction(b)
        if m is not None and m % 2 == 1 and a != b:
            raise ValueError("odd m forces a = b (one reflection class)")
        return cls("I2", (a, b))

    # accessors --------------------------------------------------------------
    @property
    def c(self) -> Fraction:
        assert self.type_tag == "A"
        return self.values[0]

    @property
    def c1(self) -> Fraction:
        assert self.type_tag == "B"
        return self.values[0]

    @property
    def kappa(self) -> Fraction:
        if self.type_tag == "B":
            return self.values[1]
        assert self.type_tag == "D"
        return self.values[0]

    @property
    def a(self) -> Fraction:
        assert self.type_tag == "I2"
        return self.values[0]

    @property
    def b(self) -> Fraction:
        assert self.type_tag == "I2"
        return self.values[1]

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    # type-B classification --------------------------------------------------
    def b_integral_m(self) -> int | None:
        """For type B with kappa != 0: c1/kappa if it is an integer, else None."""
        assert self.type_tag == "B"
        if self.kappa == 0:
            return None
        q = self.c1 / self.kappa
        return int(q) if q.denominator == 1 else None

    def b_is_singular(self, n: int) -> bool:
        """Type B: parameter lies on the singular locus for B_n."""
        assert self.type_tag == "B"
        if self.is_zero():
            return True
        if self.kappa == 0:
            return True
        q = self.b_integral_m()
        return q is not None and abs(q) <= n - 1

    def to_json(self) -> dict:
        names = {"A": ["c"], "B": ["c1", "kappa"], "D": ["kappa"], "I2": ["a", "b"]}
        return {k: str(v) for k, v in zip(names[self.type_tag], self.values)}
