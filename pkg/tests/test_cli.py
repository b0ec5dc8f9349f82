import json


from cmfamilies.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_families_json_schema(capsys):
    code, out, _ = run(
        capsys, "families", "--type", "B", "--n", "6", "--c1", "1", "--kappa", "1"
    )
    assert code == 0
    data = json.loads(out)
    assert data["type"] == "B" and data["n"] == 6
    assert data["param"] == {"c1": "1", "kappa": "1"}
    assert data["method"] == "CM"
    assert sum(len(f["members"]) for f in data["families"]) == 65
    cusp = [f for f in data["families"] if f["cuspidal"]]
    assert len(cusp) == 1 and len(cusp[0]["members"]) == 10


def test_families_both_equal_flag(capsys):
    code, out, _ = run(
        capsys,
        "families", "--type", "I2", "--m", "8", "--a", "1", "--b", "1",
        "--method", "both",
    )
    assert code == 0
    data = json.loads(out)
    assert data["equal"] is True
    assert len(data["partitions"]) == 2


def test_families_deterministic(capsys):
    args = ["families", "--type", "D", "--n", "4", "--kappa", "1"]
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_families_generic_flag(capsys):
    code, out, _ = run(
        capsys,
        "families", "--type", "B", "--n", "4", "--c1", "1/7", "--kappa", "3/5",
        "--generic",
    )
    data = json.loads(out)
    assert code == 0
    assert all(f["is_singleton"] for f in data["families"])


def test_rigid_oracle_json(capsys):
    code, out, _ = run(
        capsys,
        "rigid", "--type", "I2", "--m", "8", "--a", "1", "--b", "1",
        "--mode", "oracle",
    )
    data = json.loads(out)
    assert code == 0
    assert data["mode"] == "equation_oracle"
    assert data["rigid"] == ["eps1", "eps2", "phi_2", "phi_3"]


def test_leaves_json(capsys):
    code, out, _ = run(
        capsys, "leaves", "--type", "B", "--n", "6", "--c1", "1", "--kappa", "1"
    )
    data = json.loads(out)
    assert code == 0
    assert [e["dim"] for e in data] == [12, 8, 0]
    assert data[2]["parabolic"] == "B6" and data[2]["below"] == []


def test_symbols_text(capsys):
    code, out, _ = run(
        capsys,
        "symbols", "--type", "B", "--c1", "1", "--kappa", "1",
        "--bp", "[2,1|1]", "--enn", "3", "--format", "text",
    )
    assert code == 0
    assert out.strip() == "(0,1,3,5 ; 0,1,3)"


def test_text_bipartition_format(capsys):
    code, out, _ = run(
        capsys,
        "families", "--type", "B", "--n", "2", "--c1", "1", "--kappa", "1",
        "--format", "text",
    )
    assert code == 0
    assert "[1,1|]" in out and "[|2]" in out


def test_validation_exit_2(capsys):
    code, _, err = run(capsys, "families", "--type", "B", "--n", "3", "--c1", "1")
    assert code == 2 and "kappa" in err
    code, _, err = run(capsys, "families", "--type", "I2", "--a", "1", "--b", "1")
    assert code == 2 and "--m" in err
    code, _, err = run(
        capsys, "rigid", "--type", "D", "--n", "4", "--kappa", "1", "--mode", "oracle"
    )
    assert code == 2
    code, _, err = run(
        capsys,
        "families", "--type", "I2", "--m", "7", "--a", "1", "--b", "2",
    )
    assert code == 2  # odd m forces a = b
    code, _, err = run(
        capsys,
        "families", "--type", "B", "--n", "3", "--c1", "-1", "--kappa", "1",
        "--method", "Lusztig",
    )
    assert code == 2  # Lusztig method needs nonnegative parameters


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "5")
    assert code == 0
    assert out.startswith("[PASS]")


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2
