import pytest

from cmfamilies import fixtures as fx
from cmfamilies.partitions import is_partition
from cmfamilies.symbols import BSymbol


def test_unknown_fixture():
    with pytest.raises(KeyError):
        fx.load_fixture("no-such-fixture")


def test_hyphen_alias():
    assert fx.load_fixture("fcusp-2-1") == fx.load_fixture("fcusp_2_1")


def test_every_fixture_has_source():
    for name in (
        "dihedral_table1",
        "dihedral_table2",
        "dihedral_table3",
        "dihedral_table4",
        "fcusp_2_1",
        "fcusp_1_2",
        "symbol_example_411",
        "d_cuspidal_symbols",
    ):
        assert fx.load_fixture(name)["source"]


def test_table1_has_five_even_regimes_total():
    data = fx.load_fixture("dihedral_table1")
    assert len(data["rows_even"]) == 4 and len(data["rows_odd"]) == 1


def test_fcusp_members_are_bipartitions():
    for k, m in ((2, 1), (1, 2)):
        mem = fx.fcusp_members(k, m)
        n = k * (k + m)
        for lam0, lam1 in mem:
            assert is_partition(lam0) or lam0 == ()
            assert is_partition(lam1) or lam1 == ()
            assert sum(lam0) + sum(lam1) == n
        assert len(set(mem)) == len(mem)


def test_symbol_fixtures_roundtrip():
    ex = fx.load_fixture("symbol_example_411")
    for key in ("symbol", "bar_symbol"):
        s = BSymbol.from_json(ex[key])
        assert BSymbol.from_json(s.to_json()) == s
    for case in fx.load_fixture("d_cuspidal_symbols")["cases"]:
        for sj in case["symbols"]:
            s = BSymbol.from_json(sj)
            assert BSymbol.from_json(s.to_json()) == s


def test_token_expansion():
    assert fx._expand_tokens(["F"], 8) == ["phi_1", "phi_2", "phi_3"]
    assert fx._expand_tokens(["R"], 8) == ["phi_2"]
    assert fx._expand_tokens(["R"], 9) == ["phi_2", "phi_3", "phi_4"]
    assert fx._expand_tokens(["R"], 6) == []
    with pytest.raises(ValueError):
        fx._expand_tokens(["bogus"], 8)


def test_table_regime_errors():
    with pytest.raises(ValueError):
        fx.table1_rigid(8, 0, 0)
    with pytest.raises(ValueError):
        fx.table3_a_function(7, 1, 1)
