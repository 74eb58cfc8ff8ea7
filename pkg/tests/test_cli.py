import json
import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from secmod.cli import format_module, main, parse_gens, parse_module_expr
from secmod.errors import ParseError
from secmod.harness import CorpusSpec, corpus_generate
from secmod.lattice import enumerate_submodules
from secmod.modules import make_module


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


# -- parsing ---------------------------------------------------------------

@pytest.mark.parametrize("text, factors, ring", [
    ("Z6 + Z10", (2, 30), 30),
    ("Z2^3", (2, 2, 2), 2),
    ("Z2+Z4", (2, 4), 4),
    ("  Z2 +   Z4 ", (2, 4), 4),
    ("Z1", (), 1),
    ("Z1 + Z4 + Z1", (4,), 4),
    ("Z2 + Z4 over Z8", (2, 4), 8),
    ("Z3^2+Z9", (3, 3, 9), 9),
])
def test_parse(text, factors, ring):
    M = parse_module_expr(text)
    assert (M.factors, M.modulus) == (factors, ring)


@pytest.mark.parametrize("text, position", [
    ("Z0", 1),
    ("Z2 +", 4),
    ("Z2 * Z3", 3),
    ("2", 0),
    ("Z", 1),
    ("Z2^0", 3),
    ("", 0),
    ("Z4 over Z6", 3),
    ("Z2 Z3", 3),
])
def test_parse_errors_carry_positions(text, position):
    with pytest.raises(ParseError) as info:
        parse_module_expr(text)
    assert info.value.position == position


def test_ring_flag():
    assert parse_module_expr("Z4", ring=12).modulus == 12
    assert parse_module_expr("Z4 over Z8", ring=8).modulus == 8
    with pytest.raises(ParseError):
        parse_module_expr("Z4 over Z8", ring=16)
    with pytest.raises(ParseError):
        parse_module_expr("Z4", ring=6)


def test_print_parse_round_trip_over_the_corpus():
    for M in corpus_generate(CorpusSpec(64)):
        assert parse_module_expr(format_module(M)) == M


@given(st.lists(st.integers(2, 60), max_size=4), st.integers(1, 4))
def test_round_trip_with_ring(factors, k):
    M = make_module(None, factors)
    M = make_module(M.modulus * k, factors)
    assert parse_module_expr(format_module(M)) == M


def test_parse_gens():
    assert parse_gens("1,3;0,6") == [[1, 3], [0, 6]]
    assert parse_gens("") == []
    with pytest.raises(ParseError):
        parse_gens("1,x")


# -- commands --------------------------------------------------------------

def test_enumerate_json(capsys):
    status, out, _ = run(capsys, "enumerate", "Z2 + Z4")
    doc = json.loads(out)
    L = enumerate_submodules(make_module(None, [2, 4]))
    assert status == 0 and doc["schema_version"] == "1"
    assert doc["module"] == {"ring": 4, "invariant_factors": [2, 4], "order": 8}
    assert [n["order"] for n in doc["nodes"]] == [N.order for N in L]
    assert sorted(map(tuple, doc["covers"])) == sorted(L.cover_edges())


def test_enumerate_dot(capsys):
    status, out, _ = run(capsys, "enumerate", "Z12", "--dot")
    assert status == 0 and out.startswith('digraph "Z12"')
    nodes = [line for line in out.splitlines() if "label=" in line]
    edges = [line for line in out.splitlines() if "->" in line]
    # divisor lattice of 12: 6 nodes, covers are the prime-index steps
    assert len(nodes) == 6 and len(edges) == 7
    assert 'label="<0>\\norder 1"' in nodes[0]
    assert 'strongly_two_abs_secondary="true"' in nodes[-1]
    assert 'completely_irreducible="false"' in nodes[-1]


def test_classify_example(capsys):
    status, out, _ = run(capsys, "classify", "Z6 + Z10")
    doc = json.loads(out)
    assert status == 0
    top = doc["rows"][-1]
    assert top["order"] == 60 and top["strongly_two_abs_secondary"] is False
    assert doc["module_flags"] == {"comultiplication": False, "cocyclic": False}


def test_sec(capsys):
    status, out, _ = run(capsys, "sec", "Z12", "--submodule", "3")
    doc = json.loads(out)
    assert status == 0
    assert doc["submodule"]["order"] == 4 and doc["second_radical"] == {"gens": [[6]], "order": 2}
    status, out, _ = run(capsys, "sec", "Z6 + Z10")
    assert json.loads(out)["second_radical"]["order"] == 60


def test_check(capsys):
    status, out, _ = run(capsys, "check", "t1.5", "Z12")
    doc = json.loads(out)
    assert status == 0 and doc["summary"]["violations"] == 0
    assert doc["reports"][0]["instances_checked"] == 5
    status, out, _ = run(capsys, "check", "all", "--corpus", "6", "--samples", "5")
    doc = json.loads(out)
    assert status == 0 and len(doc["reports"]) == 7 * 18


def test_check_logs_vacuity(capsys):
    status, _, err = run(capsys, "-v", "check", "t9.4", "Z2^2")
    assert status == 0 and "t9.4 on Z2 + Z2" in err and "vacuous" in err


def test_search_and_corpus(capsys):
    status, out, _ = run(capsys, "search", "strongly-2-abs-secondary", "2-abs-second", "--corpus", "8")
    doc = json.loads(out)
    assert status == 1 and "Z8" in [w["module"]["expr"] for w in doc["witnesses"]]
    status, out, _ = run(capsys, "search", "second", "second", "--corpus", "8")
    assert status == 0 and json.loads(out)["result"] == "none up to bound"
    status, out, _ = run(capsys, "corpus", "8")
    assert status == 0 and len(json.loads(out)["modules"]) == 11


@pytest.mark.parametrize("argv, kind", [
    (["enumerate", "Z0"], "parse"),
    (["frobnicate"], "usage"),
    (["check", "t1.5"], "usage"),
    (["check", "t1.5", "Z4", "--corpus", "4"], "usage"),
    (["check", "t0.0", "Z4"], "UnknownIdError"),
    (["search", "second", "third", "--corpus", "4"], "usage"),
    (["corpus", "0"], "usage"),
])
def test_errors_exit_2_with_json_on_stderr(capsys, argv, kind):
    status, out, err = run(capsys, *argv)
    assert status == 2 and out == ""
    assert json.loads(err)["error"] == kind


def test_bound_exceeded_exits_3(capsys):
    status, _, err = run(capsys, "enumerate", "Z2^6", "--max-nodes", "50")
    assert status == 3 and json.loads(err)["partial_count"] == 51


def test_classify_is_byte_stable_across_workers(capsys):
    outs = {run(capsys, "classify", "Z2^2 + Z4", "--workers", w)[1] for w in ("1", "2", "4")}
    assert len(outs) == 1


def test_entry_point_and_env_bound():
    env = dict(os.environ, SECMOD_MAX_LATTICE="10")
    proc = subprocess.run([sys.executable, "-m", "secmod.cli", "enumerate", "Z2^4"],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 3 and json.loads(proc.stderr)["error"] == "bound-exceeded"
    proc = subprocess.run([sys.executable, "-m", "secmod.cli", "corpus", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and len(json.loads(proc.stdout)["modules"]) == 5
