"""Acceptance suite: one test per release criterion.

Each test prints a single ``criterion N: PASS|FAIL ...`` line; the lines are
also repeated in pytest's terminal summary, so a plain
``pytest tests/test_acceptance.py`` shows them.
"""

import os
import random
import sys
import time

import numpy as np
import pytest

from roughtopo import KINDS, SetFamily, generate_topology, is_topology, lower_approx, upper_approx
from roughtopo.cli import example_entries, example_relation, main
from roughtopo.core import integer_universe
from roughtopo.harness import RelationBatch, SweepConfig, replay, run_suite
from roughtopo.harness.batch import AND, OR, P, S
from roughtopo.topology import generate_opens

import oracles

MAX_N = 4


RESULTS: dict[int, str] = {}


def _report(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[number] = line
    print(line)
    return ok


def _clause(report, name):
    return next(c for c in report.clauses if c.name == name)


def test_criterion_1_golden_example():
    start = time.perf_counter()
    entries = example_entries()
    R = example_relation()
    X = R.universe.subset(["a", "c", "d"])
    lo, up = lower_approx(R, KINDS[S], X), upper_approx(R, KINDS[S], X)
    elapsed = time.perf_counter() - start
    matched = sum(e["match"] for e in entries)
    ok = (
        len(entries) == 24
        and matched == 24
        and lo.labels == ("a", "b", "c", "d")
        and up.labels == ("a", "b", "c")
        and up < lo
        and elapsed < 1.0
    )
    _report(1, ok, f"{matched}/24 sets match, lower_s(X)={lo} ⊃ upper_s(X)={up}, {elapsed * 1000:.0f} ms")
    assert ok


def test_criterion_2_unconditional_laws():
    start = time.perf_counter()
    reports = run_suite(SweepConfig(max_n=MAX_N, props=("P01", "P02", "P03", "P07", "P15"), workers=os.cpu_count() or 1))
    elapsed = time.perf_counter() - start
    failures = [(r.prop, r.n) for r in reports if not r.holds]
    complete = all(r.relations_checked == 1 << (r.n * r.n) for r in reports) and len(reports) == 5 * MAX_N
    pair_counts = {r.n: r.subsets_checked for r in reports if r.prop == "P03"}
    ok = not failures and complete and elapsed < 120 and pair_counts[MAX_N] > 0
    _report(2, ok, f"P01 P02 P03 P07 P15 at n=1..{MAX_N}: failures={failures or 'none'}, {elapsed:.1f} s")
    assert ok


def _independent_counts(n):
    """Hypothesis counts computed straight from the pair-set definitions."""
    counts = dict.fromkeys(("reflexive", "symmetric", "transitive", "serial", "inverse_serial", "sym_serial", "tolerance"), 0)
    for code in range(1 << (n * n)):
        prof = oracles.profile(n, oracles.relation_pairs(n, code))
        for key in ("reflexive", "symmetric", "transitive", "serial", "inverse_serial", "tolerance"):
            counts[key] += prof[key]
        counts["sym_serial"] += prof["symmetric"] and (prof["serial"] or prof["inverse_serial"])
    return counts


def test_criterion_3_conditional_laws():
    props = ("P04", "P05", "P06", "P16", "P17", "P18", "P19", "P20")
    reports = {(r.prop, r.n): r for r in run_suite(SweepConfig(max_n=MAX_N, props=props, workers=os.cpu_count() or 1))}
    failures = [key for key, r in reports.items() if not r.holds]
    expected_key = {
        "P04": "reflexive",
        "P05": "symmetric",
        "P06": "transitive",
        "P16": "serial",
        "P17": "inverse_serial",
        "P18": "sym_serial",
        "P19": "reflexive",
        "P20": "tolerance",
    }
    count_mismatches = []
    for n in range(1, MAX_N + 1):
        counts = _independent_counts(n)
        assert counts["reflexive"] == 2 ** (n * n - n)
        for prop, key in expected_key.items():
            r = reports[prop, n]
            if r.hypothesis_satisfied != counts[key] or r.vacuous != (1 << n * n) - counts[key]:
                count_mismatches.append((prop, n))
    vac = ", ".join(f"n={n}:{reports['P04', n].vacuous}" for n in range(1, MAX_N + 1))
    ok = not failures and not count_mismatches
    _report(3, ok, f"failures={failures or 'none'}, count mismatches={count_mismatches or 'none'}, P04 vacuous {vac}")
    assert ok


def test_criterion_4_subbase_characterizations():
    reports = {(r.prop, r.n): r for r in run_suite(SweepConfig(max_n=MAX_N, props=("P08", "P09", "P10", "P11"), limit=50))}
    problems = []
    for n in range(1, MAX_N + 1):
        for prop in ("P08", "P09"):
            r = reports[prop, n]
            if len(r.clauses) != 2 or not r.holds or not all(c.gating for c in r.clauses):
                problems.append((prop, n))
        for prop in ("P10", "P11"):
            forward = reports[prop, n].clauses[0]
            if not forward.gating or forward.violations:
                problems.append((prop, n, "forward"))
    p11 = reports["P11", 2]
    converse = _clause(p11, "S_s∨p covers ⇒ serial ∨ inverse serial")
    witnesses = [cx["relation"]["pairs"] for cx in p11.counterexamples]
    found = converse.violations > 0 and [["1", "2"]] in witnesses and all(replay(cx) for cx in p11.counterexamples)
    ok = not problems and found
    _report(4, ok, f"P08/P09 both ways, P10/P11 forward: problems={problems or 'none'}; P11 converse at n=2: {converse.violations} counterexamples incl. R={{(1,2)}}")
    assert ok


def _distinct_covering_families(n):
    b = RelationBatch.from_code_range(n, 0, 1 << (n * n))
    full = (1 << n) - 1
    families = set()
    nbhd = np.asarray(b.nbhd)
    for i in range(b.m):
        for k in range(len(KINDS)):
            fam = frozenset(int(m) for m in nbhd[i, k])
            union = 0
            for m in fam:
                union |= m
            if union == full:
                families.add(fam)
    return families


def _to_sets(masks):
    return [frozenset(i for i in range(m.bit_length()) if m >> i & 1) for m in masks]


def test_criterion_5_topology_correctness():
    checked = 0
    disagreements = []
    not_topologies = []
    for n in range(1, MAX_N + 1):
        u = integer_universe(n)
        for fam in _distinct_covering_families(n):
            T = generate_topology(SetFamily.from_masks(u, fam))
            if not is_topology(T.opens):
                not_topologies.append((n, sorted(fam)))
            ours = set(_to_sets(T.opens.masks))
            subbase = _to_sets(fam)
            if ours != oracles.topology_by_naive_fixpoint(n, subbase) or ours != oracles.topology_by_powerset(n, subbase):
                disagreements.append((n, sorted(fam)))
            checked += 1
    rng = random.Random(20240501)
    random_bad = 0
    for _ in range(1000):
        sets = [rng.randrange(32) for _ in range(rng.randint(1, 8))]
        union = 0
        for s in sets:
            union |= s
        sets.append(31 & ~union)
        ours = set(_to_sets(generate_opens(5, sets)))
        subbase = _to_sets(sets)
        if ours != oracles.topology_by_naive_fixpoint(5, subbase) or ours != oracles.topology_by_powerset(5, subbase):
            random_bad += 1
        elif not is_topology(SetFamily.from_masks(integer_universe(5), generate_opens(5, sets))):
            random_bad += 1
    ok = not disagreements and not not_topologies and random_bad == 0
    _report(5, ok, f"{checked} distinct covering families at n≤{MAX_N} (every relation and kind), 1000 random subbases at n=5: disagreements={len(disagreements) + random_bad}, non-topologies={len(not_topologies)}")
    assert ok


def test_criterion_6_collapse():
    reports = run_suite(SweepConfig(max_n=MAX_N, props=("P13", "P20"), workers=os.cpu_count() or 1))
    failures = [(r.prop, r.n) for r in reports if not r.holds]
    # Direct check of the approximation collapse over all symmetric serial relations.
    direct_bad = 0
    collapsed = 0
    for n in range(1, MAX_N + 1):
        b = RelationBatch.from_code_range(n, 0, 1 << (n * n))
        sel = np.asarray(b.symmetric) & np.asarray(b.serial)
        lower, upper = np.asarray(b.lower)[sel], np.asarray(b.upper)[sel]
        collapsed += int(sel.sum())
        for k in (P, AND, OR):
            direct_bad += int((lower[:, k] != lower[:, S]).sum() + (upper[:, k] != upper[:, S]).sum())
        tol = np.asarray(b.tolerance)
        X = np.arange(1 << n)
        lo, up = np.asarray(b.lower)[tol][:, S], np.asarray(b.upper)[tol][:, S]
        direct_bad += int(((lo & ~X) != 0).sum() + ((X & ~up) != 0).sum())
    ok = not failures and direct_bad == 0
    _report(6, ok, f"P13 P20 at n=1..{MAX_N}: failures={failures or 'none'}; {collapsed} symmetric serial relations collapse directly, violations={direct_bad}")
    assert ok


def test_criterion_7_determinism(tmp_path, capsys):
    paths = [tmp_path / name for name in ("first.json", "second.json", "serial.json")]
    many = str(max(2, os.cpu_count() or 2))
    codes = [
        main(["verify", "--max-n", str(MAX_N), "--report", str(paths[0]), "--workers", many]),
        main(["verify", "--max-n", str(MAX_N), "--report", str(paths[1]), "--workers", many]),
        main(["verify", "--max-n", str(MAX_N), "--report", str(paths[2]), "--workers", "1"]),
    ]
    capsys.readouterr()
    blobs = [p.read_bytes() for p in paths]
    ok = codes == [0, 0, 0] and blobs[0] == blobs[1] == blobs[2]
    _report(7, ok, f"two runs with {many} workers and one serial run: {len(blobs[0])} bytes each, identical={blobs[0] == blobs[1] == blobs[2]}")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
