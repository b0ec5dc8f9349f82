from fractions import Fraction

import pytest

from cmfamilies import fixtures as fx
from cmfamilies.cuspidal import (
    annotated_families,
    cuspidal_families,
    leaves_B,
    leaves_D,
    parabolic_order_refined,
    rigid_implies_cuspidal_check,
    rigid_modules,
)
from cmfamilies.exact import CherednikParameter
from cmfamilies.partitions import dagger, subpartitions_of_box


def test_leaves_b61():
    lp = leaves_B(6, 1, 1)
    assert sorted(l.dimension for l in lp.leaves) == [0, 8, 12]
    assert [l.parabolic_label for l in lp.leaves] == ["B0", "B2", "B6"]
    assert lp.is_antisymmetric() and parabolic_order_refined(lp)
    deepest = next(l for l in lp.leaves if l.dimension == 0)
    assert set(lp.below(deepest)) == set()
    top = next(l for l in lp.leaves if l.dimension == 12)
    assert set(lp.below(top)) == {1, 2}


def test_leaves_b_formula():
    # n=4, m=0: k in {1,2}, dims {6,0}; n=3, m=0: k=1 dim 4 only; n=9: 0-dim at k=3
    dims = sorted(l.dimension for l in leaves_B(4, 0, 1).leaves)
    assert dims == [0, 6, 8]  # includes the open leaf k=0
    dims = sorted(l.dimension for l in leaves_B(3, 0, 1).leaves)
    assert dims == [4, 6]
    assert 0 in [l.dimension for l in leaves_B(9, 0, 1).leaves]


def test_leaves_nonsingular_open_only():
    lp = leaves_B(4, Fraction(1, 2), 1)
    assert len(lp.leaves) == 1 and lp.leaves[0].dimension == 8


def test_leaves_degenerate():
    lp = leaves_B(4, 1, 0)
    assert all(l.dimension == 2 * len(l.index) for l in lp.leaves)
    assert lp.is_antisymmetric() and parabolic_order_refined(lp)


def test_leaves_d4():
    lp = leaves_D(4, 1)
    assert sorted(l.dimension for l in lp.leaves) == [0, 6]
    with pytest.raises(ValueError):
        leaves_D(4, 0)


def test_leaves_json_shape():
    entry = leaves_B(6, 1, 1).to_json()[-1]
    assert set(entry) == {"k", "dim", "parabolic", "below"}
    assert entry["dim"] == 0 and entry["parabolic"] == "B6"


def test_cuspidal_b61_display():
    fams = cuspidal_families("B", 6, CherednikParameter.type_B(1, 1), "CM")
    assert len(fams) == 1
    want = {(lam, dagger(lam, 2, 1)) for lam in subpartitions_of_box(2, 1)}
    assert set(fams[0].members) == want
    assert len(want) == 10
    assert fams[0].leaf_label == "B6"


def test_cuspidal_b32_display():
    fams = cuspidal_families("B", 3, CherednikParameter.type_B(2, 1), "Lusztig")
    assert len(fams) == 1 and len(fams[0].members) == 4
    assert set(fams[0].members) == set(fx.fcusp_members(1, 2))


def test_cuspidal_none_when_no_rectangle():
    assert cuspidal_families("B", 5, CherednikParameter.type_B(0, 1), "CM") == []
    assert cuspidal_families("A", 4, CherednikParameter.type_A(1), "CM") == []
    assert cuspidal_families("B", 4, CherednikParameter.type_B(1, 0), "CM") == []


def test_cuspidal_zero_parameter():
    fams = cuspidal_families("B", 3, CherednikParameter.type_B(0, 0), "CM")
    assert len(fams) == 1 and len(fams[0].members) == 10  # all of Irr B_3


def test_cuspidal_i2_odd_convention():
    fams = cuspidal_families("I2", 7, CherednikParameter.type_I2(1, 1), "Lusztig")
    assert len(fams) == 1
    assert set(fams[0].members) == {"phi_1", "phi_2", "phi_3"}


def test_cuspidal_d4():
    fams = cuspidal_families("D", 4, CherednikParameter.type_D(1), "CM")
    assert len(fams) == 1 and fams[0].leaf_label == "D4"


def test_rigid_closed_form_examples():
    assert rigid_modules("B", 4, CherednikParameter.type_B(0, 1)) == [
        ((), (2, 2)),
        ((2, 2), ()),
    ]
    assert rigid_modules("B", 2, CherednikParameter.type_B(1, 1)) == [
        ((), (2,)),
        ((1, 1), ()),
    ]
    assert rigid_modules("D", 4, CherednikParameter.type_D(1)) == [((2, 2), (), None)]
    assert rigid_modules("A", 4, CherednikParameter.type_A(1)) == []
    got = rigid_modules("I2", 8, CherednikParameter.type_I2(-1, 1))
    assert got == ["1", "eps", "phi_1", "phi_2"]


def test_rigid_negative_m_swap():
    pos = rigid_modules("B", 2, CherednikParameter.type_B(1, 1))
    neg = rigid_modules("B", 2, CherednikParameter.type_B(-1, 1))
    assert sorted((b, a) for a, b in pos) == neg


def test_rigid_zero_parameter_all():
    labels = rigid_modules("B", 2, CherednikParameter.type_B(0, 0))
    assert len(labels) == 5


def test_rigid_oracle_matches_small():
    for n in (1, 2, 3):
        for m in range(-(n - 1), n):
            p = CherednikParameter.type_B(m, 1)
            assert rigid_modules("B", n, p, "closed_form") == rigid_modules(
                "B", n, p, "equation_oracle"
            )
    for m in (5, 6, 8):
        params = [(1, 1)] if m % 2 else [(1, 1), (-1, 1), (1, 2)]
        for a, b in params:
            p = CherednikParameter.type_I2(a, b)
            assert rigid_modules("I2", m, p, "closed_form") == rigid_modules(
                "I2", m, p, "equation_oracle"
            )
    for c in (0, 1):
        p = CherednikParameter.type_A(c)
        assert rigid_modules("A", 4, p, "closed_form") == rigid_modules(
            "A", 4, p, "equation_oracle"
        )


def test_rigid_oracle_rejects_out_of_scale():
    with pytest.raises(ValueError):
        rigid_modules("B", 6, CherednikParameter.type_B(1, 1), "equation_oracle")
    with pytest.raises(ValueError):
        rigid_modules("D", 4, CherednikParameter.type_D(1), "equation_oracle")
    with pytest.raises(ValueError):
        rigid_modules("I2", 18, CherednikParameter.type_I2(1, 1), "equation_oracle")


def test_rigid_labels_lie_in_cuspidal_family():
    p = CherednikParameter.type_B(1, 1)
    fp = annotated_families("B", 6, p, "CM")
    for lab in rigid_modules("B", 6, p):
        assert fp.family_of(lab).cuspidal


def test_rigid_implies_cuspidal_samples():
    assert rigid_implies_cuspidal_check("B", 6, CherednikParameter.type_B(1, 1))
    assert rigid_implies_cuspidal_check("I2", 8, CherednikParameter.type_I2(1, 1))
    assert rigid_implies_cuspidal_check("D", 5, CherednikParameter.type_D(1))
    assert rigid_implies_cuspidal_check("B", 5, CherednikParameter.type_B(Fraction(1, 2), 1))


def test_singleton_families_never_cuspidal():
    for n in range(1, 7):
        for m in range(0, 3):
            fp = annotated_families("B", n, CherednikParameter.type_B(m, 1), "CM")
            for f in fp.families:
                if f.is_singleton and not fp.param.is_zero():
                    assert not f.cuspidal
