import io
import json
import subprocess
import sys

import pytest

from firlab.cli import SCHEMA, run_command


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, _ = run("--json", *argv)
    return code, json.loads(out)


def test_llcm_text():
    assert run("--field", "gf(2,2)", "llcm", "t+1", "t+w")[:2] == (0, "t^2 + 1\n")


def test_options_after_subcommand():
    assert run("llcm", "t+1", "t+w", "--field", "gf(2,2)")[:2] == (0, "t^2 + 1\n")


def test_similar_golden_json():
    code, doc = run_json("--field", "gf(2,2)", "similar", "t+1", "t+w")
    assert code == 0
    assert doc == {
        "command": "similar",
        "field": "gf(2,2)",
        "ok": True,
        "result": {"similar": True, "witness": "w + 1"},
        "schema": SCHEMA,
    }


def test_json_is_deterministic():
    a = run("--json", "--field", "gf(2,2)", "wedderburn", "t^2+1")[1]
    b = run("--json", "--field", "gf(2,2)", "wedderburn", "t^2+1")[1]
    assert a == b
    doc = json.loads(a)
    assert doc["result"]["fully_reducible"] is True
    assert sorted(doc["result"]["decomposition"]) == ["t + 1", "t + w"]


@pytest.mark.parametrize(
    "argv,key,value",
    [
        (("mul", "t+w", "t+1"), "product", "t^2 + (w + 1)*t + w"),
        (("divr", "t^2+1", "t+w"), "quotient", "t + w + 1"),
        (("rgcd", "t^2+1", "t+w"), "gcd", "t + w"),
        (("conj", "t+1", "t+w"), "conjugate", "t + w + 1"),
        (("factor", "t^2+w"), "length", 1),
        (("atoms", "2"), "count", 5),
        (("lambda-dim", "t^2+1", "t+1"), "dim_over_eigenring", 2),
        (("rank", "t+1", "t+w", "t+w^2"), "rank", 2),
        (("basis", "t+1", "t+w", "t+w^2"), "basis", ["t + 1", "t + w"]),
        (("closure", "t+1", "t+w"), "closure", ["t + 1", "t + w", "t + w + 1"]),
        (("vset", "t^2+1"), "rank", 2),
        (("eigenring", "t+1"), "dimension", 1),
        (("classes", "t+1", "t+w", "t^2+w"), "rank", 3),
    ],
)
def test_commands(argv, key, value):
    code, doc = run_json("--field", "gf(2,2)", *argv)
    assert code == 0
    assert doc["result"][key] == value


def test_series_commands():
    assert run("series-sum", "4", "6")[1] == "2R\n"
    assert run("series-intersect", "x/2", "x/3")[1] == "xR\n"
    code, doc = run_json("series-witness", "10")
    assert code == 0 and doc["result"]["atoms"] == 10


def test_product_and_rank_theorems():
    code, doc = run_json("--field", "gf(2,2)", "product-check", "t+w", "t+1")
    assert code == 0 and doc["result"]["verdicts"]["i"] is False
    code, doc = run_json("--field", "gf(2,2)", "check-rank-theorems", "t+1,t+w", "t+w^2", "--product", "t+1", "t+1")
    assert code == 0 and doc["result"]["all_equal"]


def test_wedderburn_suite_and_suite():
    code, doc = run_json("--field", "gf(2,2)", "wedderburn-suite", "--degree", "2")
    assert code == 0 and doc["result"]["inconsistent"] == 0
    assert doc["result"]["polynomials"] == 1 + 4 + 16
    code, doc = run_json("suite", "--samples", "5", "--fields", "gf(2,2)")
    assert code == 0 and doc["result"]["violations"] == 0


def test_exit_code_usage_errors():
    assert run("--field", "gf(2,2)", "mul", "t+", "t")[0] == 2
    assert run("--field", "gf(4,1)", "mul", "t", "t")[0] == 2
    assert run("nosuchcommand")[0] == 2
    assert run("--field", "gf(2,2)", "eigenring", "t^2+1")[0] == 2


def test_not_computable_is_reported():
    code, doc = run_json("--field", "funfield(2)", "divl", "x*t", "t")
    assert code == 0 and doc["result"]["computable"] is False


def test_module_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "firlab", "--field", "gf(2,2)", "llcm", "t+1", "t+w"],
        capture_output=True, text=True,
    )
    assert r.returncode == 0 and r.stdout == "t^2 + 1\n"


def test_exit_code_for_failed_identity(monkeypatch):
    from firlab import algset
    from firlab.algset import Identity

    monkeypatch.setattr(algset, "rank_theorems_check", lambda d, g: [Identity("forced", 1, 2, False)])
    code, _, _ = run("--field", "gf(2,2)", "check-rank-theorems", "t+1", "t+w")
    assert code == 1
