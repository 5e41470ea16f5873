import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from fmqchar.cli import EXIT_AMBIGUOUS, EXIT_FAILURE, EXIT_LIMIT, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main

C3 = ["--algebra", "C3", "--highest", "Y[1,4] Y[2,1] Y[3,-2]"]
DATA = Path(__file__).resolve().parents[1] / "src" / "fmqchar" / "data" / "c2_square_tableaux.txt"


def call(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def call_json(*argv):
    code, text = call(*argv, "--format", "json")
    return code, json.loads(text)


def test_a2_run():
    code, d = call_json("run", "--algebra", "A2", "--highest", "Y[1,2] Y[2,-1]")
    assert code == EXIT_OK and d["status"] == "complete"
    assert d["n_terms"] == 8 and d["total"] == 8
    assert d["dominant"] == [["Y[1,2] Y[2,-1]", 1]]


def test_c3_plain_fails():
    code, d = call_json("run", *C3)
    assert code == EXIT_FAILURE and d["status"] == "failure"
    f = d["failure"]
    assert f["weight"] == [1, 0, 1]
    assert f["offenders"] == [{"monomial": "Y[1,2] Y[2,-1] Y[2,3]^-1 Y[3,2]", "coefficient": 1,
                               "coloring": [1, 0, 0], "deficient_nodes": [2]}]
    code, text = call("run", *C3)
    assert "FAILED at weight (1, 0, 1)" in text and "Y[1,2] Y[2,-1] Y[2,3]^-1 Y[3,2]" in text


def test_c3_modified():
    code, d = call_json("run", *C3, "--mode", "modified")
    assert code == EXIT_OK and d["total"] == 896
    assert [r["injected"] for r in d["injections"]] == ["Y[2,-1] Y[2,1]"]
    assert sum(w["multiplicity"] for w in d["weights"]) == 896


def test_json_is_deterministic():
    argv = ("run", "--algebra", "C2", "--highest", "Y[2,-1] Y[2,1]", "--format", "json", "--trace")
    assert call(*argv)[1] == call(*argv)[1]


def test_trace_output():
    code, d = call_json("run", "--algebra", "A2", "--highest", "Y[1,2] Y[2,-1]", "--trace")
    assert d["trace"][0] == {"weight": [1, 1], "monomial": "Y[1,2] Y[2,-1]", "node": 1,
                             "added": [["Y[1,2] Y[2,-1]", 1], ["Y[1,4]^-1 Y[2,-1] Y[2,3]", 1]]}


def test_tableaux_match():
    code, d = call_json("tableaux", "--algebra", "A2", "--highest", "Y[1,2] Y[2,-1]", "--shape", "2,1")
    assert code == EXIT_OK and d["status"] == "match" and d["n_tableaux"] == 8
    code, d = call_json("tableaux", "--algebra", "C2", "--highest", "Y[2,-1] Y[2,1]", "--shape", "2,2",
                        "--candidates", str(DATA))
    assert code == EXIT_OK and d["n_tableaux"] == 25 and d["total"] == 25


def test_tableaux_mismatch():
    code, d = call_json("tableaux", "--algebra", "C2", "--highest", "Y[2,-1]", "--shape", "1,1")
    assert code == EXIT_MISMATCH and d["mismatches"] == [["Y[2,1] Y[2,3]^-1", 0, 1]]
    code, text = call("tableaux", "--algebra", "A2", "--highest", "Y[1,2] Y[2,-1]", "--shape", "3")
    assert code == EXIT_MISMATCH and text.startswith("mismatch")


def test_tableaux_on_failure():
    code, _ = call("tableaux", *C3, "--shape", "3,2,1")
    assert code == EXIT_FAILURE


def test_limit_exit():
    code, d = call_json("run", *C3, "--max-terms", "5")
    assert code == EXIT_LIMIT and d["status"] == "limit"


@pytest.mark.parametrize("argv", [
    ["run", "--algebra", "X9", "--highest", "Y[1,0]"],
    ["run", "--algebra", "A2", "--highest", "Y[1,0"],
    ["run", "--algebra", "A2", "--highest", "Y[1,0]^-1"],
    ["run", "--algebra", "A2", "--highest", "Y[3,0]"],
    ["run", "--algebra", "A2", "--highest", "Y[1,0]", "--max-height", "0"],
    ["tableaux", "--algebra", "D4", "--highest", "Y[1,0]", "--shape", "1"],
    ["tableaux", "--algebra", "A2", "--highest", "Y[1,0]", "--shape", "1,2"],
    ["tableaux", "--algebra", "A2", "--highest", "Y[1,0]", "--shape", "1", "--candidates", "/nonexistent"],
])
def test_usage_errors(argv, capsys):
    assert call(*argv)[0] == EXIT_USAGE
    assert "error" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [[], ["run"], ["run", "--algebra", "A2"], ["bogus"],
                                  ["run", "--algebra", "A2", "--highest", "Y[1,0]", "--mode", "x"]])
def test_argparse_errors(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv, io.StringIO())
    assert exc.value.code == EXIT_USAGE


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fmqchar", "run", "--algebra", "A1", "--highest", "Y[1,0]"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "completed: 2 monomials" in proc.stdout


def test_exit_code_constants():
    assert (EXIT_OK, EXIT_USAGE, EXIT_FAILURE, EXIT_AMBIGUOUS, EXIT_LIMIT, EXIT_MISMATCH) == (0, 1, 2, 3, 4, 5)
