from __future__ import annotations

import json
import subprocess
import sys

import pytest

from cherednik.cli import EXIT_FAIL, EXIT_INCONSISTENT, EXIT_OK, EXIT_USAGE, emit, main, parse, run


def run_json(capsys, *argv):
    code, report = run([*argv, "--json"])
    out = capsys.readouterr().out
    return code, report, (json.loads(out) if out.strip() else None)


def status_of(report, name):
    return next(c["status"] for c in report["checks"] if c["name"] == name)


def test_check_outside_F(capsys):
    code, report, printed = run_json(capsys, "check", "--n", "2", "--c", "-1,0")
    assert code == EXIT_FAIL
    assert printed["data"]["in_F"] is False
    assert [1, 2] in printed["data"]["witnesses"]
    assert printed == parse(emit(report))


def test_check_semisimple(capsys):
    code, _r, printed = run_json(capsys, "check", "--n", "2", "--c", "1/2,0")
    assert code == EXIT_OK and printed["data"]["semisimple"] is True


def test_check_zero_parameters(capsys):
    code, _r, printed = run_json(capsys, "check", "--n", "3", "--c", "0,0,0")
    assert code == EXIT_OK and printed["data"]["in_F"] is True


@pytest.mark.parametrize("c", ["-1,0", "1,0"])
def test_normalize_n2(capsys, c):
    code, _r, printed = run_json(capsys, "normalize", "--n", "2", "--c", c)
    assert code == EXIT_OK
    assert printed["data"]["c_prime"] == [1, 0]


def test_normalize_n3(capsys):
    code, _r, printed = run_json(capsys, "normalize", "--n", "3", "--c", "4,-2,0")
    assert code == EXIT_OK
    assert all(d % 3 == 0 for d in printed["data"]["difference"])


def test_normalize_rejects_float_mode(capsys):
    code, _r = run(["normalize", "--n", "2", "--c", "1,0", "--mode", "float"])
    assert code == EXIT_USAGE


def test_verify_all_in_F(capsys):
    code, report, printed = run_json(capsys, "verify-all", "--n", "2", "--c", "1,0", "--max-degree", "8")
    assert code == EXIT_OK
    assert all(c["status"] in ("pass", "skip") for c in printed["checks"])
    assert printed["data"]["dim_end"] == 2
    assert printed == parse(emit(report))


def test_verify_all_outside_F(capsys):
    code, _r, printed = run_json(capsys, "verify-all", "--n", "2", "--c", "-1,0")
    assert code == EXIT_FAIL
    assert status_of(printed, "psi generates M") == "fail"
    assert printed["data"]["dim_end"] > 2
    assert status_of(printed, "eta satisfies the Hecke relation") == "pass"
    assert status_of(printed, "eta commutes with x, s, xi") == "pass"


def test_verify_all_n4_zero(capsys):
    code, _r, printed = run_json(capsys, "verify-all", "--n", "4", "--c", "0,0,0,0", "--mode", "exact")
    assert code == EXIT_OK
    assert all(c["status"] == "pass" for c in printed["checks"])


def test_float_mode_hecke(capsys):
    code, _r, printed = run_json(capsys, "hecke", "--n", "2", "--c", "0.3+0.7i,0", "--mode", "float")
    assert code == EXIT_OK
    assert printed["data"]["annihilation_residual"] < 1e-8
    assert printed["config"]["mode"] == "float"


@pytest.mark.parametrize("cmd", ["end-dim", "hom", "matrices", "hecke"])
def test_other_commands_run(capsys, cmd):
    code, report, printed = run_json(capsys, cmd, "--n", "3", "--c", "1/2,1/3,0")
    assert code == EXIT_OK
    assert printed == parse(emit(report))


def test_determinism_apart_from_timing(capsys):
    argv = ["verify-all", "--n", "3", "--c", "1,-1,0", "--seed", "7"]
    _c1, a, _ = run_json(capsys, *argv)
    _c2, b, _ = run_json(capsys, *argv)
    a, b = parse(emit(a)), parse(emit(b))
    a.pop("timing_s"), b.pop("timing_s")
    assert a == b


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--n", "2", "--c", "1,1"],
        ["check", "--n", "2", "--c", "1,2,0"],
        ["check", "--n", "2", "--c", "a,0"],
        ["check", "--n", "2"],
        ["bogus", "--n", "2", "--c", "0,0"],
        ["check", "--n", "2", "--c", "1,,0"],
        ["check", "--n", "2", "--c", "0,0", "--max-degree", "1"],
        ["check", "--n", "0", "--c", "0"],
        ["hom", "--n", "2", "--c", "0,0", "--t", "1"],
    ],
)
def test_usage_errors(capsys, argv):
    assert main(argv) == EXIT_USAGE
    assert "usage error" in capsys.readouterr().err


def test_last_parameter_message(capsys):
    main(["check", "--n", "2", "--c", "1,1"])
    assert "c_n = 0" in capsys.readouterr().err


def test_inconsistency_exit_code(capsys, monkeypatch):
    from cherednik import cli
    from cherednik.scalars import ConsistencyError

    def broken(cfg, rep):
        raise ConsistencyError("routes disagree")

    monkeypatch.setitem(cli.HANDLERS, "check", broken)
    assert main(["check", "--n", "2", "--c", "0,0"]) == EXIT_INCONSISTENT


def test_text_output(capsys):
    assert main(["check", "--n", "2", "--c", "-1,0"]) == EXIT_FAIL
    out = capsys.readouterr().out
    assert "[FAIL] good parameter set" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cherednik", "check", "--n", "2", "--c", "-1,0", "--json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == EXIT_FAIL
    assert json.loads(proc.stdout)["data"]["in_F"] is False
