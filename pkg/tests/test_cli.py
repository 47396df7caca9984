import csv
import io
import subprocess
import sys

import pytest

from afmatrix.cli import EXIT_PARSE, EXIT_QUERY, EXIT_USAGE, render_answer, run
from afmatrix.framework import parse_af
from afmatrix.oracle import SemanticsKind as K, enumerate_brute
from afmatrix.solver import TaskSpec

from conftest import X_APX


@pytest.fixture
def x_file(tmp_path):
    path = tmp_path / "x.apx"
    path.write_text(X_APX + "\n")
    return str(path)


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "problem, query, expected",
    [
        ("EE-ST", None, "[[a,c],[b,d]]"),
        ("EE-CO", None, "[[],[a,c],[b,d]]"),
        ("SE-ST", None, "[a,c]"),
        ("DC-CO", "b", "YES"),
        ("DC-ST", "a", "YES"),
        ("DS-CO", "a", "NO"),
        ("DS-ST", "a", "NO"),
    ],
)
def test_running_example(capsys, x_file, problem, query, expected):
    argv = ["--problem", problem, "--file", x_file]
    if query:
        argv += ["--arg", query]
    code, out, _ = call(capsys, *argv)
    assert code == 0
    assert out == expected + "\n"


def test_self_attacker_has_no_stable(capsys, tmp_path):
    f = tmp_path / "selfatk.apx"
    f.write_text("arg(a).\natt(a,a).\n")
    assert call(capsys, "--problem", "SE-ST", "--file", str(f))[1] == "NO\n"
    assert call(capsys, "--problem", "EE-ST", "--file", str(f))[1] == "[]\n"
    assert call(capsys, "--problem", "DS-ST", "--file", str(f), "--arg", "a")[1] == "YES\n"


def test_iccma_numeric_ordering(capsys, tmp_path):
    f = tmp_path / "n.af"
    lines = ["p af 11"] + [f"{i} {i + 1}" for i in range(1, 11)]
    f.write_text("\n".join(lines) + "\n")
    code, out, _ = call(capsys, "-p", "SE-ST", "-f", str(f))
    assert code == 0
    assert out == "[1,3,5,7,9,11]\n"


def test_limit(capsys, x_file):
    code, out, _ = call(capsys, "-p", "EE-CO", "-f", x_file, "--limit", "1")
    assert code == 0 and out.count("[") == 2


def test_oracle_flag_agrees(capsys, x_file):
    for problem in ("EE-ST", "EE-CO"):
        a = call(capsys, "-p", problem, "-f", x_file)[1]
        b = call(capsys, "-p", problem, "-f", x_file, "--oracle")[1]
        assert a == b


def test_trace_and_stats_go_to_stderr(capsys, x_file):
    code, out, err = call(capsys, "-p", "EE-ST", "-f", x_file, "--trace", "--stats")
    assert out == "[[a,c],[b,d]]\n"
    assert "mode=ST off={b,c,d} def={a,b,c,d} att={b,c,d} ext={}" in err
    assert "nodes" in err
    assert "states_expanded=" in err


@pytest.mark.parametrize(
    "argv, code",
    [
        (["-p", "EE-PR", "-f", "X"], EXIT_USAGE),
        (["-p", "DC-ST", "-f", "X"], EXIT_USAGE),
        (["-f", "X"], EXIT_USAGE),
        (["-p", "EE-ST", "-f", "X", "--bogus"], EXIT_USAGE),
        (["-p", "EE-ST", "-f", "X", "--limit", "0"], EXIT_USAGE),
        (["-p", "DC-ST", "-f", "X", "-a", "zz"], EXIT_QUERY),
        (["-p", "EE-ST", "-f", "/nonexistent/file.apx"], EXIT_PARSE),
    ],
)
def test_error_exit_codes(capsys, x_file, argv, code):
    argv = [x_file if a == "X" else a for a in argv]
    assert run(argv) == code
    assert capsys.readouterr().err.strip()


def test_parse_error_exit(capsys, tmp_path):
    f = tmp_path / "bad.apx"
    f.write_text("arg(a).\natt(a,b).\n")
    code, out, err = call(capsys, "-p", "EE-ST", "-f", str(f))
    assert code == EXIT_PARSE and out == ""
    assert len(err.strip().splitlines()) == 1


def test_supports(capsys):
    code, out, _ = call(capsys, "supports")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 8
    assert "EE-ST" in lines and "DS-CO" in lines


def test_gen(capsys):
    assert call(capsys, "gen", "-n", "0", "-p", "0.5")[1] == ""
    out = call(capsys, "gen", "-n", "4", "-p", "0", "--seed", "1")[1]
    af = parse_af(out)
    assert af.n == 4 and not af.attacks
    again = call(capsys, "gen", "-n", "12", "-p", "0.15", "--seed", "7")[1]
    assert again == call(capsys, "gen", "-n", "12", "-p", "0.15", "--seed", "7")[1]
    assert call(capsys, "gen", "-n", "3", "-p", "1.5")[0] == EXIT_USAGE


def test_gen_instance_matches_oracle(capsys, tmp_path):
    text = call(capsys, "gen", "-n", "12", "-p", "0.15", "--seed", "7")[1]
    f = tmp_path / "g.apx"
    f.write_text(text)
    out = call(capsys, "-p", "EE-ST", "-f", str(f))[1].strip()
    af = parse_af(text)
    expected = render_answer(af, TaskSpec("EE", "ST"), enumerate_brute(af, K.STABLE))
    assert out == expected


def test_bench_writes_csv_and_figure(capsys, tmp_path):
    fig = tmp_path / "bench.png"
    code, out, _ = call(capsys, "bench", "--sizes", "5,10", "-p", "0.1,0.3",
                        "--seeds", "2", "--figure", str(fig))
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 8
    assert {"states_expanded", "peak_frontier", "seconds"} <= set(rows[0])
    assert fig.stat().st_size > 0


def test_entry_point_subprocess(x_file):
    proc = subprocess.run(
        [sys.executable, "-m", "afmatrix", "--problem", "EE-ST", "--file", x_file],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "[[a,c],[b,d]]\n"
    bad = subprocess.run(
        [sys.executable, "-m", "afmatrix", "--problem", "EE-ST"],
        capture_output=True, text=True, check=False,
    )
    assert bad.returncode == EXIT_USAGE
    assert bad.stdout == "" and bad.stderr
