import json

import numpy as np
import pytest

from roughtopo import (
    KINDS,
    BinaryRelation,
    base_conditions,
    is_cover,
    lower_approx,
    make_relation,
    neighborhood_family,
    relation_profile,
    upper_approx,
)
from roughtopo.core import integer_universe
from roughtopo.errors import InvalidConfig, SizeOutOfRange, UnknownProposition
from roughtopo.harness import (
    CATALOG,
    RelationBatch,
    SweepConfig,
    check_proposition,
    enumerate_relations,
    find_counterexamples,
    replay,
    reports_to_json,
    run_suite,
)


def test_catalog_ids():
    assert [p.id for p in CATALOG] == [f"P{i:02d}" for i in range(1, 23)]
    assert all(p.source and p.title and p.clauses for p in CATALOG)


@pytest.mark.parametrize("n,count", [(1, 2), (2, 16), (3, 512)])
def test_enumerate_counts(n, count):
    rels = list(enumerate_relations(n))
    assert len(rels) == count
    assert [r.encode() for r in rels] == list(range(count))


def test_enumerate_ends():
    rels = list(enumerate_relations(3))
    u = integer_universe(3)
    assert rels[0] == BinaryRelation.empty(u)
    assert rels[-1] == BinaryRelation.full(u)
    assert [r.pairs() for r in enumerate_relations(1)] == [[], [("1", "1")]]


@pytest.mark.parametrize("n", [0, 5])
def test_enumerate_range(n):
    with pytest.raises(SizeOutOfRange):
        next(enumerate_relations(n))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_batch_agrees_with_scalar_library(n):
    b = RelationBatch.from_code_range(n, 0, 1 << (n * n))
    u = b.universe
    subsets = u.all_subsets()
    for i in range(b.m):
        R = b.relation(i)
        prof = relation_profile(R)
        for flag in ("serial", "inverse_serial", "reflexive", "symmetric", "transitive", "preorder", "tolerance", "equivalence"):
            assert bool(getattr(b, flag)[i]) == getattr(prof, flag)
        for k_idx, k in enumerate(KINDS):
            assert bool(b.cover[i, k_idx]) == is_cover(neighborhood_family(R, k))
            for X in subsets:
                assert b.lower[i, k_idx, X.mask] == lower_approx(R, k, X).mask
                assert b.upper[i, k_idx, X.mask] == upper_approx(R, k, X).mask


def test_batch_agrees_on_random_n4_and_n6():
    rng = np.random.default_rng(7)
    for n in (4, 6):
        rows = rng.integers(0, 1 << n, size=(50, n))
        b = RelationBatch(n, rows, range(50))
        u = b.universe
        for i in range(b.m):
            R = b.relation(i)
            for k_idx, k in enumerate(KINDS):
                for m in rng.integers(0, 1 << n, size=8):
                    X = u.from_mask(int(m))
                    assert b.lower[i, k_idx, X.mask] == lower_approx(R, k, X).mask
                    assert b.upper[i, k_idx, X.mask] == upper_approx(R, k, X).mask


def test_check_proposition_examples(example, abcd):
    assert check_proposition("P04", BinaryRelation.identity(abcd)) is None
    assert not relation_profile(example).serial
    assert check_proposition("P16", example) is None
    cx = check_proposition("P11", make_relation(integer_universe(2), [("1", "2")]))
    assert cx is not None
    assert cx["clause"] == "S_s∨p covers ⇒ serial ∨ inverse serial"
    assert cx["gating"] is False
    assert cx["relation"] == {"universe": ["1", "2"], "pairs": [["1", "2"]]}


def test_check_proposition_keeps_caller_labels(abcd):
    R = make_relation(abcd, [("a", "b"), ("b", "a"), ("c", "d"), ("d", "c"), ("a", "a")])
    cx = check_proposition("P21", R)
    if cx is not None:
        assert cx["relation"]["universe"] == ["a", "b", "c", "d"]


def test_unknown_proposition(abcd):
    with pytest.raises(UnknownProposition):
        check_proposition("P99", BinaryRelation.identity(abcd))


def test_preorder_succ_or_pred_base_failure():
    # 1 ≤ 3 and 2 ≤ 3: the s∨p neighborhoods {1,3} and {2,3} meet in {3},
    # and no neighborhood sits inside {3}.
    u = integer_universe(3)
    R = make_relation(u, [("1", "1"), ("2", "2"), ("3", "3"), ("1", "3"), ("2", "3")])
    assert relation_profile(R).preorder
    assert not base_conditions(neighborhood_family(R, KINDS[3]))
    found = find_counterexamples("P22", R)
    assert [cx["clause"] for cx in found] == ["S_s∨p is a base"]
    assert found[0]["witness"]["B2_fails_at"]["points"] == ["3"]


def test_run_suite_n3_shape_and_unconditional_laws():
    reports = run_suite(SweepConfig(max_n=3))
    assert len(reports) == 22 * 3
    assert [(r.n, r.prop) for r in reports[:2]] == [(1, "P01"), (1, "P02")]
    for r in reports:
        assert r.relations_checked == 1 << (r.n * r.n)
        assert r.relations_checked == r.hypothesis_satisfied + r.vacuous
        if r.prop in {"P01", "P02", "P03", "P04", "P05", "P06", "P07", "P15"}:
            assert r.holds and r.counterexamples == []
        assert r.gating_holds


def test_p11_converse_witness():
    (r1, r2) = run_suite(SweepConfig(max_n=2, props=("P11",)))
    assert r1.holds
    assert not r2.holds and r2.gating_holds
    assert r2.counterexample_count == 2
    assert r2.counterexamples[0]["relation"]["pairs"] == [["1", "2"]]
    assert r2.counterexamples[1]["relation"]["pairs"] == [["2", "1"]]


def test_hypothesis_counts_are_plausible():
    reports = {(r.prop, r.n): r for r in run_suite(SweepConfig(max_n=3, props=("P04", "P05", "P06", "P12", "P22")))}
    for n in (1, 2, 3):
        assert reports["P04", n].hypothesis_satisfied == 2 ** (n * n - n)
        assert reports["P05", n].hypothesis_satisfied == 2 ** (n * (n + 1) // 2)
        assert reports["P12", n].hypothesis_satisfied == 2 ** (n * (n + 1) // 2)
    # labelled transitive relations and preorders: 2, 13, 171 and 1, 4, 29
    assert [reports["P06", n].hypothesis_satisfied for n in (1, 2, 3)] == [2, 13, 171]
    assert [reports["P22", n].hypothesis_satisfied for n in (1, 2, 3)] == [1, 4, 29]


def test_counterexample_cap_keeps_exact_counts():
    full = run_suite(SweepConfig(max_n=3, min_n=3, props=("P21",), limit=1000))[0]
    capped = run_suite(SweepConfig(max_n=3, min_n=3, props=("P21",), limit=3))[0]
    assert capped.counterexample_count == full.counterexample_count > 3
    assert capped.counterexamples == full.counterexamples[:3]
    indices = [cx["index"] for cx in full.counterexamples]
    assert indices == sorted(indices)


def test_every_counterexample_replays():
    reports = run_suite(SweepConfig(max_n=3, limit=25))
    replayed = 0
    for r in reports:
        for cx in r.counterexamples:
            assert replay(cx), cx
            replayed += 1
    assert replayed > 50


def test_replay_rejects_doctored_counterexample():
    r = run_suite(SweepConfig(max_n=2, min_n=2, props=("P11",)))[0]
    cx = dict(r.counterexamples[0])
    cx["relation"] = {"universe": ["1", "2"], "pairs": [["1", "1"]]}
    assert not replay(cx)


def test_parallel_matches_serial():
    base = SweepConfig(max_n=3)
    serial = reports_to_json(base, run_suite(base))
    parallel_cfg = SweepConfig(max_n=3, workers=4)
    assert reports_to_json(parallel_cfg, run_suite(parallel_cfg)) == serial


def test_sampled_mode_is_reproducible():
    cfg = SweepConfig(mode="sampled", max_n=5, min_n=5, seed=42, sample_count=1000)
    first = reports_to_json(cfg, run_suite(cfg))
    assert reports_to_json(cfg, run_suite(cfg)) == first
    doc = json.loads(first)
    assert doc["config"]["seed"] == 42
    assert all(r["relations_checked"] == 1000 for r in doc["reports"])
    other = SweepConfig(mode="sampled", max_n=5, min_n=5, seed=43, sample_count=1000)
    assert reports_to_json(other, run_suite(other)) != first


def test_sampled_n8_runs():
    reports = run_suite(SweepConfig(mode="sampled", max_n=8, min_n=8, seed=1, sample_count=20))
    assert all(r.gating_holds for r in reports)


@pytest.mark.parametrize(
    "cfg",
    [
        SweepConfig(max_n=5),
        SweepConfig(max_n=0),
        SweepConfig(mode="sampled", max_n=9, seed=1),
        SweepConfig(mode="sampled", max_n=3),
        SweepConfig(mode="bogus"),
        SweepConfig(props=("P23",)),
        SweepConfig(limit=-1),
    ],
)
def test_invalid_configs(cfg):
    with pytest.raises(InvalidConfig):
        run_suite(cfg)


def test_report_json_layout():
    cfg = SweepConfig(max_n=2, props=("P09",))
    doc = json.loads(reports_to_json(cfg, run_suite(cfg)))
    assert doc["config"] == {"mode": "exhaustive", "min_n": 1, "max_n": 2, "props": ["P09"], "limit": 10}
    rep = doc["reports"][1]
    assert rep["prop"] == "P09" and rep["n"] == 2 and rep["relations_checked"] == 16
    assert rep["holds"] is True and rep["counterexamples"] == []
    assert "elapsed_ms" not in rep
    timed = json.loads(reports_to_json(cfg, run_suite(cfg), timings=True))
    assert "elapsed_ms" in timed["reports"][0]
