import pathlib
import shlex
import subprocess
import sys

import pytest

from treelang.cli import main

CASES = sorted((pathlib.Path(__file__).parent / "golden" / "cli").glob("*.txt"))


@pytest.fixture(params=CASES, ids=lambda p: p.stem)
def case(request):
    head, _, expected = request.param.read_text().partition("\n")
    return shlex.split(head[2:]), expected


def test_golden(case, capsys):
    argv, expected = case
    assert main(argv) == 0
    assert capsys.readouterr().out == expected


def test_golden_output_is_repeatable(capsys):
    main(["pda", "build", "--tree", "ud", "--pattern", "u0d0u1u1d1d1"])
    first = capsys.readouterr().out
    main(["pda", "build", "--tree", "ud", "--pattern", "u0d0u1u1d1d1"])
    assert capsys.readouterr().out == first


def _run(argv, capsys):
    rc = main(argv)
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_build_then_run(tmp_path, capsys):
    path = str(tmp_path / "edge.pda")
    assert main(["pda", "build", "--tree", "ud", "--out", path]) == 0
    rc, out, _ = _run(["pda", "run", "--in", path, "--word", "u0 d0 u1 d1", "--trace"], capsys)
    assert rc == 0
    assert out.splitlines()[1] == "  (q0, u0 d0 u1 d1, Z)"
    assert out.endswith("accepted: yes\nruns: 1\n")

    rc, out, err = _run(["pda", "run", "--in", path, "--word", "u1d1u1d1"], capsys)
    assert rc == 1 and "accepted: no" in out and err == "error: word rejected\n"

    rc, out, _ = _run(["pda", "lang", "--in", path, "--max-len", "4"], capsys)
    assert out.splitlines() == ["u1 d1", "u0 d0 u1 d1", "u0 u1 d1 d0", "u1 d1 u0 d0", "u1 u1 d1 d1"]

    rc, out, _ = _run(["pda", "check-unambiguous", "--in", path, "--max-len", "8"], capsys)
    assert rc == 0 and out == "words: 76\nambiguous: 0\n"


def test_check_unambiguous_fails_on_ambiguous_machine(tmp_path, capsys):
    path = tmp_path / "amb.pda"
    path.write_text("states: s, p, r, f\nalphabet: a, b\nstack: Z\ninitial: s\n"
                    "start-symbol: Z\nfinal: f\ntransitions:\n"
                    "s, a, Z -> p, Z\ns, a, Z -> r, Z\np, b, Z -> f, Z\nr, b, Z -> f, Z\n")
    rc, out, err = _run(["pda", "check-unambiguous", "--in", str(path), "--max-len", "3"], capsys)
    assert rc == 1
    assert err == "error: ambiguous word: a b (2 runs)\n"


def test_dot_to_file(tmp_path):
    path = tmp_path / "y.dot"
    assert main(["pda", "build", "--tree", "uududd", "--format", "dot", "--out", str(path)]) == 0
    assert path.read_text().startswith("digraph pda {")


@pytest.mark.parametrize("argv,code,reason", [
    (["encode", "--source", "uudd", "--target", "ud", "--map", "1,0,0"], 1, "root-preserving"),
    (["encode", "--source", "uudd", "--target", "ud", "--map", "0,0,0"], 1, "surjective-on-vertices"),
    (["encode", "--source", "uudd", "--target", "ud", "--map", "0,x"], 2, "malformed vertex map"),
    (["encode", "--source", "uxd", "--target", "ud", "--map", "0"], 2, "not a Dyck word"),
    (["decode", "--target", "ud", "--word", "u1 d0"], 2, "paired"),
    (["series", "--stat", "edges", "--method", "formula"], 2, "no generating-function formula"),
    (["series", "--stat", "kl"], 2, "needs --leaf-bound"),
    (["series", "--guess", "2"], 2, "--guess expects"),
    (["pda", "run", "--in", "/nonexistent/file"], 2, "cannot read"),
    (["pda", "build"], 2, "needs --tree"),
    (["enumerate", "contractions", "--source", "ud"], 2, "needs --source and --target"),
])
def test_failures(argv, code, reason, capsys):
    rc, _, err = _run(argv, capsys)
    assert rc == code
    assert err.startswith("error: ") and reason in err
    assert err.count("\n") == 1


def test_unknown_flag_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["series", "--bogus"])
    assert exc.value.code == 2


def test_budget_env(monkeypatch, capsys):
    monkeypatch.setenv("TREELANG_MAX_EDGES", "3")
    rc, _, err = _run(["enumerate", "trees", "--edges", "4"], capsys)
    assert rc == 2 and "exceeds budget 3" in err
    rc, _, _ = _run(["series", "--stat", "starnorm", "--order", "20"], capsys)
    assert rc == 0  # the formula path does not enumerate
    rc, _, _ = _run(["series", "--stat", "subtrees", "--order", "4"], capsys)
    assert rc == 2


def test_verify_worked_examples_suite(capsys):
    rc, out, _ = _run(["verify", "--suite", "paper-examples"], capsys)
    assert rc == 0
    lines = out.splitlines()
    assert all(ln.startswith("[PASS]") for ln in lines[:-1])
    assert lines[-1] == f"{len(lines) - 1}/{len(lines) - 1} criteria passed"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "treelang", "series", "--order", "6"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "1,1,2,5,14,42,132\n"
