from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cmfamilies.exact import (
    CherednikParameter,
    Cyclotomic,
    GroupRingElement,
    charged_residue,
    cyclotomic_poly,
    cyclotomic_sum_check,
    parse_rational,
    residue,
)

rationals = st.builds(
    Fraction, st.integers(-50, 50), st.integers(1, 8)
)
elements = st.lists(st.tuples(rationals, st.integers(-5, 5)), max_size=6).map(
    GroupRingElement
)


@settings(max_examples=80)
@given(elements, elements, elements)
def test_group_ring_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert x + GroupRingElement() == x


@settings(max_examples=60)
@given(elements, rationals, rationals)
def test_group_ring_shift_substitute(x, e, a):
    assert x.shift(e).shift(-e) == x
    if a != 0:
        assert x.substitute(a).substitute(Fraction(1, 1) / a) == x
    assert x.substitute(a).shift(e) == x.shift(e / a).substitute(a) if a != 0 else True


def test_residue():
    assert residue((2, 1)).terms == {Fraction(-1): 1, Fraction(0): 1, Fraction(1): 1}
    assert residue(()).is_zero()


def test_charged_residue_example():
    # at charge (0, c1, -kappa) both parts contribute on shifted lattices
    el = charged_residue(((1,), (1,)), (0, 1, -1))
    assert el.terms == {Fraction(0): 1, Fraction(1): 1}


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_field_ops():
    for m in (5, 8, 12):
        z = Cyclotomic.zeta(m)
        acc = Cyclotomic.from_rational(m, 1)
        for _ in range(m):
            acc = acc * z
        assert acc == 1
        assert (z * z.conjugate()) == 1
        assert (z + z.conjugate()).conjugate() == z + z.conjugate()


@settings(max_examples=100)
@given(st.integers(1, 16).flatmap(lambda m: st.tuples(st.just(m), st.integers(0, 3 * m))))
def test_cyclotomic_sums(args):
    m, i = args
    assert cyclotomic_sum_check(i, m) == (i % m != 0)


def test_parse_rational():
    assert parse_rational("3/2") == Fraction(3, 2)
    assert parse_rational("-1") == -1
    with pytest.raises(ValueError):
        parse_rational("x")


def test_parameter_shapes():
    p = CherednikParameter.type_B("1/2", 1)
    assert p.c1 == Fraction(1, 2) and p.kappa == 1
    assert p.b_integral_m() is None
    assert CherednikParameter.type_B(3, 1).b_integral_m() == 3
    assert CherednikParameter.type_B(-2, 1).b_is_singular(3)
    assert not CherednikParameter.type_B(3, 1).b_is_singular(3)
    with pytest.raises(ValueError):
        CherednikParameter.type_I2(1, 2, m=7)
    with pytest.raises(ValueError):
        CherednikParameter("A", (1, 2))
    assert CherednikParameter.type_A(0).is_zero()
    assert CherednikParameter.type_B(1, 0).to_json() == {"c1": "1", "kappa": "0"}
