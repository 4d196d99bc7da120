import json
import subprocess
import sys

from exotictilt import cli


def run_cli(capsys, *argv):
    code = cli.run(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_rootinfo(capsys):
    code, out, _ = run_cli(capsys, "rootinfo", "A2")
    assert code == 0
    assert "rank 2" in out and "|W| = 6" in out and "|Omega| = 3" in out


def test_unknown_spec_exits_2(capsys):
    code, _, err = run_cli(capsys, "rootinfo", "Z9")
    assert code == 2 and "unknown" in err


def test_length_and_reduced(capsys):
    code, out, _ = run_cli(capsys, "length", "A1", "t[1]")
    assert (code, out) == (0, "1")
    code, out, _ = run_cli(capsys, "reduced", "A1", "t[2]")
    assert code == 0 and out == "s0 s1"
    code, out, _ = run_cli(capsys, "length", "A2", "s1 s2*t[1,0]")
    assert code == 0


def test_wlambda_example(capsys):
    code, out, _ = run_cli(capsys, "wlambda", "A1", "[-1]")
    assert code == 0
    assert out == "w_lambda = o[-1], delta = 1"


def test_bruhat(capsys):
    code, out, _ = run_cli(capsys, "bruhat", "A1", "e", "s1")
    assert (code, out) == (0, "true")
    code, out, _ = run_cli(capsys, "bruhat", "A1", "s1", "t[1]")
    assert (code, out) == (0, "false")


def test_hecke_mul_quadratic(capsys):
    code, out, _ = run_cli(capsys, "hecke-mul", "A1", "s1", "s1")
    assert code == 0
    assert out == "T[e] + (-v + v^-1)*T[s1]"


def test_theta_text(capsys):
    code, out, _ = run_cli(capsys, "theta", "A1", "[-1]")
    assert code == 0
    assert out == "(v - v^-1)*T[o[-1]] + T[o[-1] s0]"


def test_kclass_bs_example(capsys):
    code, out, _ = run_cli(capsys, "kclass", "bs", "A1", "omega", "s1")
    assert code == 0
    assert out == "m[1] + v*m[-1]"


def test_kclass_line_delta(capsys):
    code, out, _ = run_cli(capsys, "kclass", "line", "A1", "[-2]")
    assert code == 0 and out == "(v^2 - 1)*m[0] + v*m[-2]"
    code, out, _ = run_cli(capsys, "kclass", "delta", "A1", "[-2]")
    assert code == 0 and out == "(v - v^-1)*m[0] + m[-2]"


def test_qanalogue_and_gamma(capsys):
    code, out, _ = run_cli(capsys, "qanalogue", "A2", "[1,1]", "[0,0]")
    assert (code, out) == (0, "v^2 + v")
    code, out, _ = run_cli(capsys, "gamma", "A1", "[0]", "[2]")
    assert (code, out) == (0, "v^2")


def test_tilt_commands(tmp_path, capsys):
    char = {"basis": "good", "mults": [{"weight": [1], "count": 1}]}
    path = tmp_path / "char.json"
    path.write_text(json.dumps(char))
    code, out, _ = run_cli(capsys, "tilt", "costd", "A1", str(path), "[-1]")
    assert (code, out) == (0, "v")
    code, out, _ = run_cli(capsys, "tilt", "dominant", "A1", "[1]")
    assert (code, out) == (0, "m[1] + v*m[-1]")
    wchar = {"basis": "Weyl", "mults": [{"weight": [1], "count": 1}]}
    wpath = tmp_path / "wchar.json"
    wpath.write_text(json.dumps(wchar))
    code, out, _ = run_cli(capsys, "tilt", "std", "A1", str(wpath), "[-1]")
    assert (code, out) == (0, "v^-1")
    code, out, _ = run_cli(
        capsys, "tilt", "dominant", "A1", "[1]", "--tilt-char", str(wpath))
    assert (code, out) == (0, "m[1] + v*m[-1]")


def test_tilt_wrong_basis_exits_2(tmp_path, capsys):
    char = {"basis": "good", "mults": [{"weight": [1], "count": 1}]}
    path = tmp_path / "char.json"
    path.write_text(json.dumps(char))
    code, _, err = run_cli(capsys, "tilt", "std", "A1", str(path), "[1]")
    assert code == 2 and "Weyl" in err


def test_reconcile(tmp_path, capsys):
    char = {"basis": "good", "mults": [{"weight": [1, 1], "count": 1}]}
    path = tmp_path / "char.json"
    path.write_text(json.dumps(char))
    code, out, _ = run_cli(capsys, "reconcile", "A2", str(path))
    assert (code, out) == (0, "match")


def test_verify_exit_codes(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, "verify", "A1", "--suite", "order",
                           "--radius", "2")
    assert code == 0 and "pass" in out
    from exotictilt.heckebraid import Report

    def failing(rs, which, radius, seed=0):
        rep = Report("rigged")
        rep.check(False, "counterexample lam=(1,)")
        return [rep]

    monkeypatch.setattr(cli.verify, "run_suites", failing)
    code, out, _ = run_cli(capsys, "verify", "A1")
    assert code == 1 and "counterexample" in out


def test_json_roundtrip(capsys):
    """Parsing emitted JSON and recomputing yields byte-identical documents."""
    cases = [
        ("kclass", "bs", "A2", "o[1,0]", "s1", "s2"),
        ("theta", "A2", "[-1,1]"),
        ("qanalogue", "B2", "[1,1]", "[0,0]"),
        ("rootinfo", "G2"),
    ]
    for argv in cases:
        code, out1, _ = run_cli(capsys, *argv, "--json")
        assert code == 0
        json.loads(out1)
        code, out2, _ = run_cli(capsys, *argv, "--json")
        assert out1 == out2


def test_cache_warm_and_cold_identical(tmp_path, capsys):
    cache = tmp_path / "cache.json"
    argv = ("qanalogue", "B2", "[2,2]", "[0,0]", "--cache", str(cache))
    code, cold, _ = run_cli(capsys, *argv)
    assert code == 0 and cache.exists()
    doc = json.loads(cache.read_text())
    assert doc["version"] == cli.CACHE_VERSION and doc["kostant"]["B2"]
    code, warm, _ = run_cli(capsys, *argv)
    assert (code, warm) == (0, cold)
    code, plain, _ = run_cli(capsys, *argv[:-2])
    assert plain == cold


def test_cache_version_mismatch_ignored(tmp_path, capsys):
    cache = tmp_path / "cache.json"
    cache.write_text(json.dumps(
        {"version": 999, "kostant": {"A1": {"2": [[5, 7]]}}}))
    code, out, _ = run_cli(capsys, "qanalogue", "A1", "[2]", "[0]",
                           "--cache", str(cache))
    assert (code, out) == (0, "v")


def test_cache_env_var(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("EXOTIC_CACHE_DIR", str(tmp_path))
    code, out, _ = run_cli(capsys, "qanalogue", "A1", "[2]", "[0]")
    assert (code, out) == (0, "v")
    assert (tmp_path / "exotictilt-cache.json").exists()


def test_parse_errors_exit_2(capsys):
    code, _, err = run_cli(capsys, "length", "A1", "q9")
    assert code == 2 and "token" in err
    code, _, err = run_cli(capsys, "wlambda", "A1", "[1,2]")
    assert code == 2
    code, _, err = run_cli(capsys, "kclass", "bs", "A2", "s1")
    assert code == 2    # s1 is not a length-0 element


def test_console_script_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "exotictilt.cli", "kclass", "bs", "A1",
         "omega", "s1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "m[1] + v*m[-1]"
