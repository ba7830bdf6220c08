import json
import subprocess
import sys

import pytest

from kappacalc.cli import main
from kappacalc.k3family import DEFAULT_A_VALUES, format_a_values


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_kappa_table_text(capsys):
    code, out, _ = run(capsys, "kappa-table", "--max", "3")
    assert code == 0
    rows = out.splitlines()
    assert rows[3].split(None, 1)[1] == "16/45 * l^6"
    assert "L_1 = -16" in out and "t2 = 24" in out


def test_kappa_table_csv(capsys):
    code, out, _ = run(capsys, "kappa-table", "--max", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["index,coefficient,power", "1,8,2"]


def test_kappa_table_unicode(capsys):
    _, out, _ = run(capsys, "kappa-table", "--max", "2", "--unicode")
    assert "8/3 * λ^4" in out


def test_bad_format_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["kappa-table", "--format", "xml"])
    assert exc.value.code != 0


def test_missing_a_value_error(capsys):
    code, out, err = run(capsys, "kappa-table", "--max", "9")
    assert code != 0 and out == "" and "a_9" in err


def test_a_values_override(tmp_path, capsys):
    f = tmp_path / "a.txt"
    f.write_text(format_a_values(DEFAULT_A_VALUES[:4]))
    code, out, _ = run(capsys, "kappa-table", "--max", "3", "--a-values", str(f), "--format", "csv")
    assert code == 0 and out.splitlines()[-1] == "3,16/45,6"
    code, _, err = run(capsys, "kappa-table", "--max", "4", "--a-values", str(f))
    assert code != 0
    f.write_text("a0 = 24\na1 = 89\n")
    _, out, _ = run(capsys, "kappa-table", "--max", "1", "--a-values", str(f), "--format", "csv")
    assert out.splitlines()[-1] != "1,8,2"
    code, _, err = run(capsys, "kappa-table", "--a-values", str(tmp_path / "nope.txt"))
    assert code != 0 and "cannot read" in err


def test_franke(capsys):
    code, out, _ = run(capsys, "franke", "so:3,19", "--format", "json")
    data = json.loads(out)
    assert code == 0 and (data["bound"], data["argmin_k"]) == (20, 1)
    code, out, _ = run(capsys, "franke", "sp:4")
    assert code == 0 and "<= 7" in out
    code, out, _ = run(capsys, "franke", "so:3,5", "--oracle", "--format", "json")
    assert all(p["agrees"] for p in json.loads(out)["parabolics"])
    code, _, err = run(capsys, "franke", "so:19,3")
    assert code != 0 and "p <= q" in err
    code, _, err = run(capsys, "franke", "so:12,20", "--oracle")
    assert code != 0


def test_other_commands(capsys):
    code, out, _ = run(capsys, "l-poly", "2")
    assert code == 0 and "L_2 = -1/45*p1^2 + 7/45*p2" in out and "L~_2 = -1/180*p1^2 + 7/180*p2" in out
    code, out, _ = run(capsys, "x-class", "2")
    assert code == 0 and out.strip() == "x_8 = 1/6*p1_plus^2"
    code, out, _ = run(capsys, "taut", "3", "--format", "json")
    data = json.loads(out)
    assert data["total_dim"] == 8 and data["kernel_is_orthogonal_complement"] is True
    assert data["vdg_basis"] == ["1", "u1", "u2", "u1*u2"]
    code, out, _ = run(capsys, "sl-image", "7", "--format", "json")
    data = json.loads(out)
    assert data["degrees"] == [5, 9] and 14 in data["nonzero_degrees"]
    code, out, _ = run(capsys, "nielsen-report", "2", "--format", "json")
    data = json.loads(out)
    assert (data["class_degree"], data["obstructs"], data["contradiction"]) == (12, True, True)
    assert data["kappa"] == {"coefficient": "8/3", "lambda_power": 4}
    code, _, _ = run(capsys, "taut", "9")
    assert code != 0


def test_solve_a(tmp_path, capsys):
    code, out, _ = run(capsys, "solve-a", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["a_values"][:5] == ["24", "88", "184", "352", "736"]
    assert data["non_integral"] == [5, 6, 7, 8]
    code, _, err = run(capsys, "solve-a", "--strict")
    assert code != 0 and "not an integer" in err
    target = tmp_path / "solved.txt"
    run(capsys, "solve-a", "--write", str(target))
    assert target.read_text() == format_a_values(DEFAULT_A_VALUES)
    bad = tmp_path / "bad.txt"
    bad.write_text("a0 = 24\na1 = 89\na2 = 184\na3 = 352\n")
    code, _, err = run(capsys, "solve-a", "--a-values", str(bad))
    assert code != 0 and "inconsistent" in err


COMMANDS = [
    ["kappa-table"],
    ["kappa-table", "--format", "json"],
    ["kappa-table", "--format", "csv"],
    ["franke", "so:3,19", "--oracle", "--format", "json"],
    ["l-poly", "4", "--format", "json"],
    ["x-class", "3", "--format", "csv"],
    ["taut", "4", "--format", "json"],
    ["sl-image", "9", "--format", "json"],
    ["nielsen-report", "3", "--format", "json"],
    ["solve-a", "--format", "json"],
]


@pytest.mark.parametrize("argv", COMMANDS, ids=" ".join)
def test_json_round_trip_and_determinism(argv, capsys):
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    if "json" in argv:
        assert json.dumps(json.loads(first), sort_keys=True, indent=2) + "\n" == first


def test_byte_identical_across_processes():
    cmd = [sys.executable, "-m", "kappacalc", "kappa-table", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
