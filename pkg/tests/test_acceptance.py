"""Acceptance criteria 1-9.  Each test prints one PASS/FAIL line, then asserts."""
import json
import subprocess
import sys
import time

import pytest

from secmod.classify import is_strongly_2_absorbing_secondary
from secmod.cli import main
from secmod.harness import CorpusSpec, corpus_generate
from secmod.ideals import (
    RingSpec,
    divisors,
    ideal_radical,
    is_2_absorbing_ideal,
    is_2_absorbing_primary_ideal,
    is_primary_ideal,
    is_prime_ideal,
)
from secmod.lattice import enumerate_submodules, second_radical
from secmod.modules import annihilator, make_module


@pytest.fixture
def verdict(capsys):
    """Print ``ACCEPTANCE <n> PASS|FAIL ...`` outside pytest's capture, then assert."""
    def emit(number, ok, detail, elapsed, limit=None):
        within = limit is None or elapsed < limit
        budget = f" (limit {limit:g} s)" if limit else ""
        line = (f"ACCEPTANCE {number} {'PASS' if ok and within else 'FAIL'}: "
                f"{detail}; {elapsed:.2f} s{budget}")
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
        assert within, line
    return emit


def _corpus_64():
    return corpus_generate(CorpusSpec(64))


def test_1_example_modules(verdict, fresh_lattices):
    t = time.perf_counter()
    Z6, Z10, M = make_module(None, [6]), make_module(None, [10]), make_module(None, [6, 10])
    got = (
        is_strongly_2_absorbing_secondary(Z6.whole()),
        is_strongly_2_absorbing_secondary(Z10.whole()),
        is_strongly_2_absorbing_secondary(M.whole()),
        second_radical(M.whole()) == M.whole(),
    )
    elapsed = time.perf_counter() - t
    verdict(1, got == (True, True, False, True),
            f"Z6, Z10 strongly 2-abs secondary, Z6+Z10 not, sec(Z6+Z10) = whole: {got}",
            elapsed, 1)


def test_2_three_modes_agree(verdict):
    t = time.perf_counter()
    modules = _corpus_64() + [make_module(None, [n]) for n in range(65, 201)]
    checked, bad = 0, []
    for M in modules:
        L = enumerate_submodules(M)
        for N in list(L)[1:]:
            checked += 1
            modes = [is_strongly_2_absorbing_secondary(N, L, m) for m in "abc"]
            if len(set(modes)) > 1:
                bad.append((str(M), N.gens, modes))
    elapsed = time.perf_counter() - t
    verdict(2, not bad, f"{checked} nonzero submodules over {len(modules)} modules, "
                        f"{len(bad)} discrepancies", elapsed, 300)


def test_3_annihilator_biconditional_on_cyclic_modules(verdict):
    t = time.perf_counter()
    checked, bad = 0, []
    for n in range(1, 513):
        M = make_module(None, [n] if n > 1 else [])
        L = enumerate_submodules(M)
        for N in list(L)[1:]:
            checked += 1
            if is_strongly_2_absorbing_secondary(N, L) != is_2_absorbing_primary_ideal(annihilator(N)):
                bad.append((n, N.gens))
    elapsed = time.perf_counter() - t
    verdict(3, not bad, f"Z/n for n <= 512: {checked} submodules, {len(bad)} failures", elapsed, 120)


def test_4_ideal_predicates_fast_vs_brute(verdict):
    t = time.perf_counter()
    preds = (is_prime_ideal, is_primary_ideal, is_2_absorbing_ideal, is_2_absorbing_primary_ideal)
    checked, bad = 0, []
    for n in range(2, 361):
        R = RingSpec(n)
        for d in divisors(n)[1:]:
            I = R.ideal(d)
            for p in preds:
                checked += 1
                if p(I) != p(I, method="brute"):
                    bad.append((n, d, p.__name__))
    elapsed = time.perf_counter() - t
    verdict(4, not bad, f"{checked} (ideal, predicate) pairs for n <= 360, {len(bad)} disagreements",
            elapsed)


def test_5_second_radical_two_ways(verdict):
    t = time.perf_counter()
    checked, bad = 0, []
    for M in _corpus_64():
        L = enumerate_submodules(M)
        for N in L:
            checked += 1
            S = second_radical(N)
            if second_radical(N, L, mode="definition") != S:
                bad.append((str(M), N.gens, "definition"))
            if not N.is_zero and annihilator(S) != ideal_radical(annihilator(N)):
                bad.append((str(M), N.gens, "annihilator"))
    elapsed = time.perf_counter() - t
    verdict(5, not bad, f"{checked} submodules of the order <= 64 corpus, {len(bad)} failures", elapsed)


def test_6_meets_of_completely_irreducibles(verdict):
    t = time.perf_counter()
    checked, bad = 0, []
    for M in _corpus_64():
        L = enumerate_submodules(M)
        ci = L.ci_mask
        for i, N in enumerate(L):
            if N.is_whole:
                continue
            checked += 1
            meet = M.whole().mask
            above = L.up[i] & ci
            while above:
                j = (above & -above).bit_length() - 1
                above ^= 1 << j
                meet &= L[j].mask
            if meet != N.mask:
                bad.append((str(M), N.gens))
    elapsed = time.perf_counter() - t
    verdict(6, not bad, f"{checked} proper submodules, {len(bad)} failures", elapsed)


def test_7_search_reproduces_the_z8_separation(verdict, capsys):
    t = time.perf_counter()
    status = main(["search", "strongly-2-abs-secondary", "2-abs-second", "--corpus", "8"])
    out = capsys.readouterr().out
    elapsed = time.perf_counter() - t
    witnesses = json.loads(out)["witnesses"]
    z8_whole = any(w["module"]["expr"] == "Z8" and w["is_whole_module"] for w in witnesses)
    verdict(7, status == 1 and z8_whole,
            f"exit {status}, {len(witnesses)} witnesses, Z8 itself among them: {z8_whole}", elapsed)


def test_8_full_harness_on_corpus_48(verdict, capsys):
    t = time.perf_counter()
    status = main(["-v", "check", "all", "--corpus", "48"])
    out, err = capsys.readouterr()
    elapsed = time.perf_counter() - t
    doc = json.loads(out)
    ids = {r["theorem_id"] for r in doc["reports"]}
    logged = all(any(line.startswith(f"secmod: {tid} on ") for line in err.splitlines())
                 for tid in ("t9.4", "t9.5", "p9.12", "t9.8"))
    part_d = "part d:" in err
    ok = status == 0 and doc["summary"]["violations"] == 0 and len(ids) == 18 and logged and part_d
    verdict(8, ok, f"exit {status}, {len(doc['modules'])} modules x {len(ids)} theorems, "
                   f"{doc['summary']['instances_checked']} instances "
                   f"({doc['summary']['vacuous_instances']} vacuous), "
                   f"{doc['summary']['violations']} violations, vacuity logged: {logged and part_d}",
            elapsed, 900)


def test_9_classify_is_byte_identical_across_worker_counts(verdict):
    t = time.perf_counter()
    outs = []
    for workers in ("1", "4"):
        proc = subprocess.run([sys.executable, "-m", "secmod.cli", "classify", "Z2^2 + Z4",
                               "--workers", workers], capture_output=True)
        outs.append((proc.returncode, proc.stdout))
    elapsed = time.perf_counter() - t
    same = outs[0] == outs[1] and outs[0][0] == 0 and len(outs[0][1]) > 0
    verdict(9, same, f"two processes, workers 1 and 4, {len(outs[0][1])} bytes, identical: {same}",
            elapsed)
