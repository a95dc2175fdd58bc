import json

import pytest

from meshlab.cli import main, split_patterns


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_involution_verbs(capsys):
    assert run(capsys, "phi", "--perm", "257189463") == (0, "862154973\n", "")
    assert run(capsys, "psi", "--perm", "931582674") == (0, "281743965\n", "")
    code, out, _ = run(capsys, "phi", "--perm", "257189463", "--trace")
    trace = json.loads(out)
    assert trace["output"] == "862154973"
    assert trace["panels"] == ["257189463", "286154973", "268154973", "862154973"]
    code, out, _ = run(capsys, "psi", "--perm", "931582674", "--pretty")
    assert out.split() == ["931582674", "281639547", "281593674", "281743659", "281743695", "281743965"]


def test_count(capsys):
    assert run(capsys, "count", "--perm", "123", "--pattern", "21|") == (0, "0\n", "")
    code, out, _ = run(capsys, "count", "--perm", "346512", "--pattern", "231|1,2;2,1", "--list")
    lines = out.splitlines()
    assert lines[0] == "6" and "2 3 6" in lines[1:]
    code, out, _ = run(capsys, "count", "--perm", "257189463", "--pattern", "EREC1", "--json")
    assert json.loads(out)["count"] == 5


def test_stats_and_transform(capsys):
    code, out, _ = run(capsys, "stats", "--perm", "257189463")
    data = json.loads(out)
    assert data["arec"] == 2 and data["erec"] == 5 and data["arec_positions"] == [4, 9]
    assert set(data) >= {"exc", "inv", "rec", "arec", "erec", "earec", "rar", "succ"}
    assert run(capsys, "transform", "--perm", "231", "--op", "inverse")[1] == "312\n"
    assert run(capsys, "transform", "--pattern", "Nr3", "--op", "complement")[1] == "21|0,1;0,2;1,0\n"


def test_dist(capsys):
    code, out, _ = run(capsys, "dist", "--n", "3", "--patterns", "21|,12|0,0;0,1;1,2", "--tsv", "--jobs", "1")
    assert out.splitlines() == ["0\t2\t1", "1\t1\t2", "2\t1\t2", "3\t0\t1"]
    code, out, _ = run(capsys, "dist", "--n", "3", "--patterns", "Nr3", "--jobs", "1")
    assert json.loads(out)["total"] == 6
    code, out, _ = run(capsys, "dist", "--n", "3", "--patterns", "INV21", "--against", "Nr3", "--jobs", "1")
    assert code == 1 and json.loads(out)["witness"] == {"vector": [1], "left": 2, "right": 4}
    code, out, _ = run(capsys, "dist", "--n", "5", "--patterns", "Nr23", "--against", "Nr24", "--jobs", "1")
    assert code == 0 and json.loads(out)["verdict"] == "equal"


def test_split_patterns():
    assert split_patterns("12|0,0;0,1,21|,Nr3") == ["12|0,0;0,1", "21|", "Nr3"]
    with pytest.raises(ValueError):
        split_patterns("12|0,,0")


def test_cf(capsys):
    code, out, _ = run(capsys, "cf", "--rule", "conjecture", "--order", "3")
    assert out.splitlines() == ["t^0: 1", "t^1: 1", "t^2: 1 + y", "t^3: 1 + 4·y + y^2"]
    code, out, _ = run(capsys, "cf", "--rule", "dkz", "--order", "5", "--z-correction",
                       "--compare-brute", "--jobs", "1")
    assert code == 0 and json.loads(out)["equal"] is True
    code, out, _ = run(capsys, "cf", "--rule", "conjecture", "--order", "6", "--compare-brute", "--jobs", "1")
    assert code == 0
    code, out, _ = run(capsys, "cf", "--rule", "dkz", "--order", "2", "--json")
    assert json.loads(out)["order"] == 2


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["phi"],
    ["phi", "--perm", "1123"],
    ["count", "--perm", "12", "--pattern", "21|3,3"],
    ["count", "--perm", "12", "--pattern", "Nr999"],
    ["transform", "--op", "inverse"],
    ["cf", "--rule", "conjecture", "--z-correction"],
    ["dist", "--n", "3", "--patterns", "Nr3", "--jobs", "0"],
    ["verify", "--suite", "everything"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err


def test_cap_is_a_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("MESHLAB_MAX_N", "4")
    code, _, err = run(capsys, "dist", "--n", "5", "--patterns", "Nr3", "--jobs", "1")
    assert code == 2 and "MESHLAB_MAX_N" in err


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "series", "--n", "4", "--jobs", "1")
    assert code == 0 and json.loads(out)["ok"] is True
    code, out, _ = run(capsys, "verify", "--suite", "tables", "--n", "3", "--jobs", "1")
    report = json.loads(out)
    # the literal joint triple is asserted and diverges from n = 2 on
    assert code == 1 and report["summary"]["failed"] == ["(Nr3,Nr48,Nr53)~(EREC1,Nr50,Nr54)"]
