from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cmfamilies import fixtures as fx
from cmfamilies.exact import CherednikParameter
from cmfamilies.families import (
    clifford_descent,
    cm_families,
    degenerate_j_induction,
    dihedral_a_function,
    dihedral_j_induction,
    lusztig_families,
    swap_bipartition,
    tau_twist,
)


def test_type_a_singletons_and_zero():
    fp = cm_families("A", 4, CherednikParameter.type_A(1))
    assert all(f.is_singleton for f in fp.families)
    fp0 = cm_families("A", 4, CherednikParameter.type_A(0))
    assert len(fp0.families) == 1


def test_b_families_small_equal():
    for n in range(1, 7):
        for m in range(0, 4):
            p = CherednikParameter.type_B(m, 1)
            assert cm_families("B", n, p).as_sets() == lusztig_families("B", n, p).as_sets()


def test_b_degenerate_by_second_size():
    p = CherednikParameter.type_B(1, 0)
    fp = cm_families("B", 4, p)
    assert len(fp.families) == 5  # grouped by |lam1| = 0..4
    assert fp.as_sets() == lusztig_families("B", 4, p).as_sets()


def test_b_non_integral_singletons():
    p = CherednikParameter.type_B(Fraction(1, 2), 1)
    fp = lusztig_families("B", 5, p)
    assert all(f.is_singleton for f in fp.families)
    assert cm_families("B", 5, p).as_sets() == fp.as_sets()


def test_d_families_small_equal():
    for n in range(2, 7):
        p = CherednikParameter.type_D(1)
        assert cm_families("D", n, p).as_sets() == lusztig_families("D", n, p).as_sets()


def test_d4_cuspidal_class():
    fp = cm_families("D", 4, CherednikParameter.type_D(1))
    fam = fp.family_of(((2, 2), (), None))
    assert set(fam.members) == {
        ((2,), (1, 1), None),
        ((2, 1), (1,), None),
        ((2, 2), (), None),
    }


def test_d_split_labels_are_singletons():
    fp = cm_families("D", 2, CherednikParameter.type_D(1))
    for f in fp.families:
        for lab in f.members:
            if lab[2] is not None:
                assert f.is_singleton


def test_i2_families_match_reference():
    for m in range(5, 17):
        params = [(1, 1)] if m % 2 else [(1, 1), (1, 2), (2, 1), (0, 1), (1, 0)]
        for a, b in params:
            p = CherednikParameter.type_I2(a, b)
            assert cm_families("I2", m, p).as_sets() == fx.table2_families(m, a, b)
            assert lusztig_families("I2", m, p).as_sets() == fx.table2_families(m, a, b)


def test_lusztig_rejects_negative():
    with pytest.raises(ValueError):
        lusztig_families("B", 3, CherednikParameter.type_B(-1, 1))


@settings(max_examples=40)
@given(st.integers(1, 6), st.integers(0, 3))
def test_tau_twist_property(n, m):
    pos = cm_families("B", n, CherednikParameter.type_B(m, 1))
    neg = cm_families("B", n, CherednikParameter.type_B(-m, 1))
    assert tau_twist(pos).as_sets() == neg.as_sets()
    # tau is an involution on partitions of Irr
    assert tau_twist(tau_twist(pos)).as_sets() == pos.as_sets()


@settings(max_examples=40)
@given(
    st.integers(1, 6),
    st.sampled_from([Fraction(2), Fraction(1, 3), Fraction(5, 2)]),
    st.integers(0, 3),
)
def test_rescaling_invariance(n, alpha, m):
    base = cm_families("B", n, CherednikParameter.type_B(m, 1))
    scaled = cm_families("B", n, CherednikParameter.type_B(m * alpha, alpha))
    assert base.as_sets() == scaled.as_sets()
    lbase = lusztig_families("B", n, CherednikParameter.type_B(m, 1))
    lscaled = lusztig_families("B", n, CherednikParameter.type_B(m * alpha, alpha))
    assert lbase.as_sets() == lscaled.as_sets()


def test_clifford_descent_swap_stability():
    fp = lusztig_families("B", 4, CherednikParameter.type_B(0, 1))
    for f in fp.families:
        mem = set(f.members)
        assert {swap_bipartition(bp) for bp in mem} == mem
    down = clifford_descent(fp)
    assert down.type_tag == "D"


def test_degenerate_j_induction_examples():
    assert degenerate_j_induction(((), (1,)), (2,), 1) == ((2,), (1,))
    assert degenerate_j_induction(((), (2, 1)), (1, 1), 1) == ((1, 1), (2, 1))
    assert degenerate_j_induction(((), ()), (1,), 1) == ((1,), ())


def test_dihedral_a_function_sample():
    vals = dihedral_a_function(8, 1, 1)
    assert vals["1"] == 0 and vals["eps"] == 8
    assert vals["eps1"] == 1 and vals["phi_2"] == 1
    vals = dihedral_a_function(8, 1, 2)  # b > a > 0
    assert vals["eps"] == 12 and vals["eps2"] == 5 and vals["phi_1"] == 2


def test_dihedral_j_induction_matches_reference():
    for m in (6, 8, 10):
        for a, b in ((1, 1), (1, 2), (2, 1), (0, 1), (1, 0)):
            want = fx.table4_j_induction(m, a, b)
            for (p, chi), labels in want.items():
                assert set(dihedral_j_induction(m, a, b, p, chi)) == labels
