import json
import subprocess
import sys

import pytest

from oracles import brute_matrix
from parikh.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_matrix(capsys):
    code, out, _ = run(capsys, "matrix", "babcc", "--order", "abc")
    assert code == 0
    assert out == "1 1 1 2\n0 1 2 4\n0 0 1 2\n0 0 0 1\n"
    code, out, _ = run(capsys, "matrix", "-", "--order", "abc")
    assert out == "1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n"
    code, out, _ = run(capsys, "matrix", "abc", "--order", "cab")
    expected = "\n".join(" ".join(map(str, r)) for r in brute_matrix("abc", "cab")) + "\n"
    assert out == expected


def test_matrix_json(capsys):
    code, out, _ = run(capsys, "--json", "matrix", "babcc", "--order", "abc")
    doc = json.loads(out)
    assert list(doc) == ["command", "inputs", "result"]
    assert doc["result"] == [[1, 1, 1, 2], [0, 1, 2, 4], [0, 0, 1, 2], [0, 0, 0, 1]]
    # global flags may also follow the subcommand
    code, out2, _ = run(capsys, "matrix", "babcc", "--order", "abc", "--json")
    assert out2 == out


def test_usage_errors(capsys):
    assert run(capsys, "matrix", "abX", "--order", "abc")[0] == 2
    assert run(capsys, "matrix", "abd", "--order", "abc")[0] == 2
    assert run(capsys, "equiv", "ab", "ba", "--relation", "m")[0] == 2
    assert run(capsys, "equiv", "ab", "ba", "--relation", "weak")[0] == 2
    assert run(capsys, "verify", "--theorem", "7.7", "--max-len", "3")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["equiv", "ab"])
    assert exc.value.code == 2


def test_count(capsys):
    assert run(capsys, "count", "aabab", "ab")[1] == "5\n"
    assert run(capsys, "count", "baacbc", "abc")[1] == "2\n"
    assert run(capsys, "count", "abc", "-")[1] == "1\n"


def test_equiv(capsys):
    code, out, _ = run(capsys, "equiv", "bccaabcba", "cbabccaab", "--relation", "strong")
    assert (code, out) == (0, "equivalent\n")
    code, out, _ = run(capsys, "equiv", "bccaabcba", "cbabccaab", "--relation", "strong", "--by-orderings")
    assert out == "equivalent\n"
    code, out, _ = run(capsys, "equiv", "bccaabcba", "cbabccaab", "--relation", "mse")
    assert (code, out) == (0, "not equivalent\n")
    code, out, _ = run(capsys, "equiv", "acb", "cba", "--relation", "weak", "--alphabet", "abc")
    assert (code, out) == (0, "not related\n")
    code, out, _ = run(capsys, "equiv", "acb", "cab", "--relation", "weak", "--alphabet", "abc")
    assert out == "related\nwitness ordering: abc\n"
    code, out, _ = run(capsys, "equiv", "acb", "cab", "--relation", "strong")
    assert out == "not equivalent\nseparating pattern: ac (1 vs 0)\n"
    code, out, _ = run(capsys, "equiv", "cab", "acb", "--relation", "one", "--order", "abc")
    assert out.startswith("equivalent")
    code, out, _ = run(capsys, "equiv", "abc", "cba", "--relation", "parikh")
    assert out == "equivalent\n"
    code, out, _ = run(capsys, "equiv", "cbbabcab", "bcabcbba", "--relation", "m", "--order", "abc")
    assert out == "equivalent\n"
    code, out, _ = run(capsys, "equiv", "cbbabcab", "bcabcbba", "--relation", "me", "--order", "abc")
    assert out == "not equivalent\n"


def test_equiv_trace(capsys):
    code, out, _ = run(capsys, "equiv", "baaabbba", "abbaabab", "--relation", "me", "--order", "ab", "--trace")
    assert out.splitlines() == [
        "equivalent",
        "E2 @ (0,1)/(3,4): baaabbba -> abababba",
        "E2 @ (2,3)/(6,7): abababba -> abbaabab",
    ]
    code, out, _ = run(capsys, "--json", "equiv", "baaabbba", "abbaabab", "--relation", "mse", "--trace")
    doc = json.loads(out)
    assert list(doc) == ["command", "inputs", "result", "certificate"]
    assert doc["result"] == {"verdict": True}
    assert len(doc["certificate"]["trace"]) == 2


def test_budget_exit(capsys):
    code, _, err = run(capsys, "--budget", "2", "equiv", "acacacac", "cacacaca", "--relation", "me", "--order", "abc")
    assert code == 3 and "exceeded" in err
    assert run(capsys, "--budget", "100", "census", "--alphabet", "abc", "--max-len", "8", "--relation", "m")[0] == 3


def test_census(capsys):
    code, out, _ = run(capsys, "census", "--alphabet", "ab", "--max-len", "0", "--relation", "m")
    assert code == 0 and out.splitlines()[-1].split() == ["total", "1", "1"]
    code, out, _ = run(capsys, "--json", "census", "--alphabet", "abc", "--max-len", "4", "--relation", "strong")
    doc = json.loads(out)
    assert doc["result"]["words_total"] == 121


def test_find_gap(capsys):
    code, out, _ = run(capsys, "find-gap", "--alphabet", "abc", "--max-len", "7", "--coarse", "m", "--fine", "me", "--order", "abc")
    assert out == "0 pairs\n"
    code, out, _ = run(capsys, "find-gap", "--alphabet", "abc", "--max-len", "8", "--coarse", "m", "--fine", "me", "--order", "abc")
    assert "bcabcbba cbbabcab" in out.splitlines()


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "2.9", "--max-len", "4")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "--json", "verify", "--theorem", "4.2", "--max-len", "5")
    doc = json.loads(out)
    assert doc["result"]["passed"] and doc["result"]["violations"] == 0


def test_verify_failure_exit(capsys, monkeypatch):
    from parikh import verify as verify_mod
    from parikh.ternary import StratumRow, VerifyReport

    def broken(max_len, budget):
        return VerifyReport("broken", max_len, rows=[StratumRow(0, 1, 1, 1)])

    monkeypatch.setitem(verify_mod.THEOREMS, "2.3", broken)
    code, out, _ = run(capsys, "verify", "--theorem", "2.3", "--max-len", "1")
    assert code == 1 and out.startswith("FAIL")


def test_chain_and_witness(capsys):
    code, out, _ = run(capsys, "chain", "acb", "cba", "--alphabet", "abc")
    assert out.split() == ["acb", "cab", "cba"]
    code, out, _ = run(capsys, "witness", "abc", "cba")
    assert out == "adbec\n"
    assert run(capsys, "chain", "ab", "abb", "--alphabet", "abc")[0] == 2


def test_deterministic_output(capsys):
    argv = ["--json", "find-gap", "--alphabet", "abc", "--max-len", "8", "--coarse", "m", "--fine", "me"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "parikh", "matrix", "babcc", "--order", "abc"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout == "1 1 1 2\n0 1 2 4\n0 0 1 2\n0 0 0 1\n"
