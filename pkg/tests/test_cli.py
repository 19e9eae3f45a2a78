import json
import subprocess
import sys

import pytest

from siegelcomb.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def js(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out) if out.strip() else None


def test_hodge(capsys):
    code, out = js(capsys, "hodge", "--g", "2", "--lambda", "5,5")
    assert code == 0 and out["weights"] == [0, 6, 7, 13] and out["w"] == 13


def test_strata(capsys):
    assert js(capsys, "strata", "--g", "2") == (0, [3, 1, 0])


def test_lattice(capsys):
    code, out = js(capsys, "lattice", "--lambda", "1,1", "--p", "7")
    assert code == 0 and out["rank"] == 5 and out["p_free"] == {"7": True} and out["p_free_all"]


def test_roots_weyl_kostant(capsys):
    code, out = js(capsys, "roots", "--g", "2")
    assert code == 0 and out["cartan_matrix"] == [[2, -1], [-2, 2]] or out["cartan_matrix"] == [[2, -2], [-1, 2]]
    code, out = js(capsys, "weyl", "--g", "3")
    assert out["order"] == 48 and out["longest_length"] == 9
    code, out = js(capsys, "kostant", "--g", "3", "--r", "1")
    assert out["count"] == 6


def test_bgg_and_modp(capsys):
    code, out = js(capsys, "bgg", "--lambda", "2,1", "--p", "7")
    assert code == 0 and all(out["checks"].values())
    code, out = js(capsys, "kostant-modp", "--lambda", "0,0", "--r", "1")
    assert code == 0 and out["character_identity"] and out["levi_dimension_sum"] == 6


def test_claims(capsys):
    assert js(capsys, "claim84", "--lambda", "1,0")[1]["ok"]
    assert js(capsys, "claim87", "--lambda", "1,0,0", "--depth", "2")[1]["ok"]


def test_plethysm_commands(capsys):
    assert js(capsys, "traceless", "--g", "2", "--s", "2")[1]["dimension"] == 15
    code, out = js(capsys, "idempotent-check", "--g", "2", "--s", "3", "--p", "7")
    assert code == 0 and out["theta_squared_is_kappa_theta"] is False


def test_slopes(capsys):
    code, out = js(capsys, "slopes", "--t", "1,2", "--z", "1/2")
    assert code == 0 and out["consistent"] and out["solution"]["t"] == ["1", "2"]
    code, out = js(capsys, "solve-slopes", "--slopes", "0,1,2,4")
    assert code == 0 and not out["consistent"]
    code, out = js(capsys, "slopes", "--lambda", "1,0", "--mode", "displayed")
    assert out["solution"]["x"] == ["-3", "-1"]


def test_ao_satake(capsys):
    assert js(capsys, "ao", "--lambda", "5,3,1", "--valuations", "8,5,0")[1]["ao"]
    code, out = js(capsys, "satake", "--exponents", "0,1,2,3")
    assert out["image"]["exponents"] == [1, 2] and not out["zero"]


@pytest.mark.parametrize(
    "argv",
    [
        ["hodge", "--lambda", "1,2"],
        ["hodge", "--lambda", "1,0", "--c", "0"],
        ["hodge", "--lambda", "x"],
        ["hodge", "--g", "3", "--lambda", "1,0"],
        ["lattice", "--lambda", "2,1", "--p", "3"],
        ["bgg", "--lambda", "1,0", "--p", "4"],
        ["bgg", "--lambda", "1,0", "--p", "2"],
        ["weyl", "--g", "20"],
        ["nonsense"],
        ["hodge", "--bogus"],
        ["traceless", "--g", "3", "--s", "4", "--budget", "10"],
    ],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 1


def test_table_output_is_deterministic(capsys):
    a = run(capsys, "kostant", "--g", "2")
    b = run(capsys, "kostant", "--g", "2")
    assert a == b and a[0] == 0 and "entries" in a[1]


def test_verify_all_reports_failure():
    proc = subprocess.run([sys.executable, "-m", "siegelcomb.cli", "verify-all", "--g", "2"],
                          capture_output=True, text=True, timeout=600)
    assert proc.returncode == 2
    assert "[FAIL] 5." in proc.stderr
    assert proc.stderr.count("[PASS]") == 8
