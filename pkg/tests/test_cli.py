import json
import subprocess
import sys

import pytest

from rrcauchy.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_rr_json(capsys):
    code, out, _ = run(capsys, "verify", "rr", "--which", "first", "--order", "200", "--json")
    assert code == 0
    d = json.loads(out)
    assert d["status"] == "pass" and d["order"] == 200 and d["first_mismatch"] is None
    assert list(d)[-1] == "elapsed_ms"


def test_json_is_deterministic(capsys):
    blobs = []
    for _ in range(2):
        _, out, _ = run(capsys, "verify", "genthm", "--k", "2", "--i", "3", "--order", "50", "--json")
        d = json.loads(out)
        d.pop("elapsed_ms")
        blobs.append(json.dumps(d))
    assert blobs[0] == blobs[1]


def test_table2_text(capsys):
    code, out, _ = run(capsys, "verify", "table2")
    lines = [l for l in out.splitlines() if "A=" in l]
    assert code == 0 and len(lines) == 25
    assert "A=10" in lines[-1] and "transpose" in lines[-1]


def test_speculation_probe(capsys):
    code, out, _ = run(capsys, "probe", "speculation", "--k", "2", "--i", "2", "--rows", "2", "--order", "120")
    assert code in (0, 3)
    assert "speculation" in out


def test_speculation_pass_exit_zero(capsys):
    code, out, _ = run(capsys, "probe", "speculation", "--k", "1", "--i", "2", "--rows", "1", "--order", "80", "--json")
    assert code == 0 and json.loads(out)["solution"]["R"] == 1


def test_mutation_exit_one(capsys):
    code, out, _ = run(capsys, "verify", "macmahon", "--n-max", "10", "--mutate")
    assert code == 1 and "first mismatch at q^3" in out


@pytest.mark.parametrize(
    "argv,flag",
    [
        (["verify", "rr", "--order", "-1"], "--order"),
        (["verify", "rr", "--order", "lots"], "--order"),
        (["verify", "genthm", "--k", "1", "--i", "9"], "--i"),
        (["verify", "cauchy", "--k", "0"], "--k"),
        (["probe", "speculation", "--k", "1", "--rows", "3"], "--rows"),
        (["probe", "speculation", "--order", "10", "--margin", "20"], "--margin"),
        (["verify", "finite", "--n-max", "0"], "--n-max"),
        (["verify", "nope"], "nope"),
        ([], "command"),
    ],
)
def test_usage_errors(capsys, argv, flag):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert flag in err


def test_usage_error_names_range(capsys):
    _, _, err = run(capsys, "verify", "genthm", "--k", "2", "--i", "7")
    assert "1..6" in err


def test_out_file(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "finite", "--n-max", "5", "--out", str(target))
    assert code == 0 and "[PASS" in out
    assert json.loads(target.read_text())["identity"] == "finite"


def test_all_small(capsys):
    code, out, _ = run(capsys, "all", "--order", "20", "--jobs", "1", "--json")
    d = json.loads(out)
    assert code == 0 and d["status"] == "pass" and len(d["reports"]) == 12


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "rrcauchy", "verify", "rr", "--order", "10"], capture_output=True, text=True
    )
    assert out.returncode == 0 and out.stdout.startswith("[PASS")


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0 and "verify" in out
