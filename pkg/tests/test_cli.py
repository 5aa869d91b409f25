import json

from irrcount.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_gauss(capsys):
    code, out, _ = run(capsys, "gauss", "--q", "2", "--n", "4")
    assert code == 0 and out == "3"


def test_brute_F(capsys):
    code, out, _ = run(capsys, "brute", "F", "--q", "2", "--n", "3", "--traces", "1=0,2=0,3=0")
    assert code == 0 and out == "1"
    code, out, _ = run(capsys, "brute", "F", "--q", "2", "--n", "6", "--traces", "1=0,2=1,4=*")
    assert code == 0 and int(out) >= 0


def test_brute_I(capsys):
    code, out, _ = run(capsys, "brute", "I", "--q", "2", "--n", "4", "--coeffs", "0,0,1,1")
    assert code == 0 and out == "1"


def test_zeta(capsys):
    code, out, _ = run(capsys, "--json", "zeta", "--q", "2", "--curve", "0,1,0,1")
    assert code == 0
    payload = json.loads(out)
    assert payload["genus"] == 1 and payload["coeffs"] == ["2", "2"]


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--name", "thm:3traces", "--t", "0,0,0", "--n", "3")
    assert code == 0 and out == "1"
    code, out, _ = run(capsys, "table", "--list")
    assert code == 0 and "thm:q5l4" in out
    code, out, _ = run(capsys, "table", "--name", "5traces_wild4", "--t", "0,0,0,*,0", "--n", "8")
    assert code == 0


def test_kloosterman(capsys):
    code, out, _ = run(capsys, "kloosterman", "--n", "5", "--zeros-mod", "32")
    assert code == 0 and out == "6"
    code, out, _ = run(capsys, "--json", "kloosterman", "--n", "5")
    assert code == 0
    assert json.loads(out)["T"][:2] == [31, 31]


def test_derive_eval_verify_round_trip(tmp_path, capsys):
    path = tmp_path / "fs.json"
    code, _, _ = run(capsys, "derive", "--q", "3", "--l", "2", "--nbar", "1", "--out", str(path))
    assert code == 0
    code, out, _ = run(capsys, "eval", "--formula", str(path), "--t", "0,0", "--n", "4")
    assert code == 0
    from irrcount.ff_core import tower
    from irrcount.oracle import count_all_F_brute

    assert int(out) == int(count_all_F_brute(tower(3, 1, 4), 2)[0])
    code, out, _ = run(capsys, "verify", "--formula", str(path), "--n-range", "2..8")
    assert code == 0 and "all match" in out


def test_json_determinism(capsys):
    code1, out1, _ = run(capsys, "--json", "gauss", "--q", "5", "--n", "3")
    code2, out2, _ = run(capsys, "--json", "gauss", "--q", "5", "--n", "3")
    assert code1 == code2 == 0 and out1 == out2


def test_error_exit_codes(capsys):
    code, _, err = run(capsys, "--json", "table", "--name", "thm:3traces", "--t", "0,0,0", "--n", "4")
    assert code == 1
    assert json.loads(err)["error"] == "ValidityError"
    code, _, err = run(capsys, "brute", "F", "--q", "2", "--n", "64", "--traces", "1=0")
    assert code == 1 and "budget" in err.lower()


def test_budget_flag(capsys):
    code, _, err = run(capsys, "--budget", "100", "gauss", "--q", "2", "--n", "30")
    assert code == 0  # gauss needs no enumeration
    code, _, err = run(capsys, "--budget", "100", "brute", "F", "--q", "2", "--n", "10", "--traces", "1=0")
    assert code == 1


def test_jobs_flag(capsys):
    code1, out1, _ = run(capsys, "--jobs", "1", "brute", "F", "--q", "2", "--n", "9", "--traces", "1=1,3=0")
    code2, out2, _ = run(capsys, "--jobs", "4", "brute", "F", "--q", "2", "--n", "9", "--traces", "1=1,3=0")
    assert code1 == code2 == 0 and out1 == out2
