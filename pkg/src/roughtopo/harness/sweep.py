"""Running the catalog over relation sweeps and collecting reports."""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable, Sequence

import numpy as np

from ..core import BinaryRelation
from ..errors import InvalidConfig, SizeOutOfRange, UnknownProposition
from ..relfile import relation_to_dict
from .batch import BATCH_MAX_N, EXHAUSTIVE_MAX_N, RelationBatch
from .catalog import BY_ID, CATALOG, Proposition

MODES = ("exhaustive", "sampled")


@dataclass(frozen=True)
class SweepConfig:
    max_n: int = 4
    mode: str = "exhaustive"
    sample_count: int = 1000
    seed: int | None = None
    props: tuple[str, ...] = ()
    min_n: int = 1
    limit: int = 10
    # Not part of the report: results are identical for any worker count.
    workers: int = 1

    def validate(self) -> None:
        if self.mode not in MODES:
            raise InvalidConfig(f"mode must be one of {MODES}, got {self.mode!r}")
        if not 1 <= self.min_n <= self.max_n:
            raise InvalidConfig(f"need 1 <= min_n <= max_n, got min_n={self.min_n}, max_n={self.max_n}")
        cap = EXHAUSTIVE_MAX_N if self.mode == "exhaustive" else BATCH_MAX_N
        if self.max_n > cap:
            raise InvalidConfig(f"{self.mode} mode supports n <= {cap}, got max_n={self.max_n}")
        if self.mode == "sampled":
            if self.seed is None:
                raise InvalidConfig("sampled mode requires a seed")
            if not 0 <= self.seed < 2**64:
                raise InvalidConfig("seed must be a 64-bit unsigned integer")
            if self.sample_count < 1:
                raise InvalidConfig("sample_count must be positive")
        if self.limit < 0:
            raise InvalidConfig("limit must be non-negative")
        if self.workers < 1:
            raise InvalidConfig("workers must be positive")
        for p in self.props:
            if p not in BY_ID:
                raise InvalidConfig(f"unknown proposition {p!r}")

    def selected(self) -> list[Proposition]:
        wanted = set(self.props)
        return [p for p in CATALOG if not wanted or p.id in wanted]

    def as_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"mode": self.mode, "min_n": self.min_n, "max_n": self.max_n}
        if self.mode == "sampled":
            out["seed"] = self.seed
            out["sample_count"] = self.sample_count
        out["props"] = [p.id for p in self.selected()]
        out["limit"] = self.limit
        return out


@dataclass
class ClauseStats:
    name: str
    gating: bool
    hypothesis_satisfied: int = 0
    violations: int = 0


@dataclass
class PropositionReport:
    prop: str
    title: str
    n: int
    relations_checked: int = 0
    hypothesis_satisfied: int = 0
    subsets_checked: int = 0
    counterexample_count: int = 0
    gating_counterexample_count: int = 0
    clauses: list[ClauseStats] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def vacuous(self) -> int:
        return self.relations_checked - self.hypothesis_satisfied

    @property
    def holds(self) -> bool:
        return self.counterexample_count == 0

    @property
    def gating_holds(self) -> bool:
        return self.gating_counterexample_count == 0

    @property
    def status(self) -> str:
        if not self.gating_holds:
            return "FAIL"
        return "PASS" if self.holds else "REPORTED"

    def to_dict(self, timings: bool = False) -> dict[str, Any]:
        out = {
            "prop": self.prop,
            "title": self.title,
            "n": self.n,
            "relations_checked": self.relations_checked,
            "hypothesis_satisfied": self.hypothesis_satisfied,
            "vacuous": self.vacuous,
            "subsets_checked": self.subsets_checked,
            "holds": self.holds,
            "gating_holds": self.gating_holds,
            "status": self.status,
            "counterexample_count": self.counterexample_count,
            "clauses": [asdict(c) for c in self.clauses],
            "counterexamples": self.counterexamples,
        }
        if timings:
            out["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return out


def _counterexample(prop: Proposition, ci: int, b: RelationBatch, i: int, witness: dict) -> dict:
    clause = prop.clauses[ci]
    return {
        "prop": prop.id,
        "clause": clause.name,
        "gating": clause.gating,
        "index": b.index[i],
        "code": b.code(i),
        "relation": relation_to_dict(b.relation(i)),
        "witness": witness,
    }


def _evaluate(prop: Proposition, b: RelationBatch, limit: int | None) -> tuple[PropositionReport, list[tuple]]:
    """Run every clause of ``prop`` on ``b``; returns partial stats and sortable counterexamples."""
    started = time.perf_counter()
    rep = PropositionReport(prop.id, prop.title, b.n, relations_checked=b.m)
    any_hyp = np.zeros(b.m, dtype=bool)
    found: list[tuple] = []
    for ci, clause in enumerate(prop.clauses):
        hyp = np.asarray(clause.hypothesis(b), dtype=bool)
        any_hyp |= hyp
        check = clause.check(b, hyp)
        bad = check.bad & hyp[:, None]
        violating = np.flatnonzero(bad.any(axis=1))
        rep.clauses.append(ClauseStats(clause.name, clause.gating, int(hyp.sum()), len(violating)))
        rep.counterexample_count += len(violating)
        if clause.gating:
            rep.gating_counterexample_count += len(violating)
        take = violating if limit is None else violating[:limit]
        for i in take:
            w = int(np.argmax(bad[i]))
            found.append((b.index[i], ci, _counterexample(prop, ci, b, int(i), check.describe(int(i), w))))
    rep.hypothesis_satisfied = int(any_hyp.sum())
    per_relation = {"X": 1 << b.n, "XY": 1 << (2 * b.n)}.get(prop.quantifier, 0)
    rep.subsets_checked = rep.hypothesis_satisfied * per_relation
    rep.elapsed = time.perf_counter() - started
    return rep, found


def find_counterexamples(prop_id: str, R: BinaryRelation) -> list[dict]:
    """First counterexample of every violated clause of ``prop_id`` for R, in clause order."""
    try:
        prop = BY_ID[prop_id]
    except KeyError:
        raise UnknownProposition(prop_id) from None
    if R.n > BATCH_MAX_N:
        raise SizeOutOfRange(f"proposition checks support n <= {BATCH_MAX_N}, got {R.n}")
    # Relabel onto {1..n}; the witness is reported with the caller's labels.
    b = RelationBatch(R.n, np.array([R.rows], dtype=np.int64), [R.encode()])
    _, found = _evaluate(prop, b, None)
    out = []
    for _, _, cx in found:
        cx["relation"] = relation_to_dict(R)
        cx["witness"] = _relabel(cx["witness"], b.universe.labels, R.universe.labels)
        out.append(cx)
    return out


def check_proposition(prop_id: str, R: BinaryRelation) -> dict | None:
    found = find_counterexamples(prop_id, R)
    return found[0] if found else None


def _relabel(value: Any, old: Sequence[str], new: Sequence[str]) -> Any:
    if old == new:
        return value
    mapping = dict(zip(old, new))
    if isinstance(value, dict):
        return {k: _relabel(v, old, new) for k, v in value.items()}
    if isinstance(value, list):
        return [_relabel(v, old, new) for v in value]
    if isinstance(value, str) and value in mapping:
        return mapping[value]
    return value


def replay(counterexample: dict) -> bool:
    """Whether a recorded counterexample still reproduces when checked in isolation."""
    from ..relfile import relation_from_dict

    R = relation_from_dict(counterexample["relation"])
    return any(
        cx["clause"] == counterexample["clause"] and cx["witness"] == counterexample["witness"]
        for cx in find_counterexamples(counterexample["prop"], R)
    )


# -- chunked execution -------------------------------------------------------


def _chunk_size(n: int) -> int:
    # Keeps the subset-pair arrays of P03 around a few tens of MB.
    return max(1, min(4096, (1 << 19) >> (2 * n)))


@dataclass(frozen=True)
class _Task:
    n: int
    props: tuple[str, ...]
    limit: int
    start: int = 0
    stop: int = 0
    rows: np.ndarray | None = None
    index: tuple[int, ...] = ()


def _run_task(task: _Task) -> list[tuple[PropositionReport, list[tuple]]]:
    if task.rows is None:
        b = RelationBatch.from_code_range(task.n, task.start, task.stop)
    else:
        b = RelationBatch(task.n, task.rows, task.index)
    return [_evaluate(BY_ID[p], b, task.limit) for p in task.props]


def _sample_rows(n: int, seed: int, count: int) -> np.ndarray:
    rng = np.random.default_rng([seed, n])
    return rng.integers(0, 1 << n, size=(count, n), dtype=np.int64)


def _tasks(cfg: SweepConfig, n: int) -> list[_Task]:
    props = tuple(p.id for p in cfg.selected())
    size = _chunk_size(n)
    if cfg.mode == "exhaustive":
        total = 1 << (n * n)
        return [_Task(n, props, cfg.limit, s, min(total, s + size)) for s in range(0, total, size)]
    rows = _sample_rows(n, cfg.seed, cfg.sample_count)
    return [
        _Task(n, props, cfg.limit, rows=rows[s : s + size], index=tuple(range(s, min(len(rows), s + size))))
        for s in range(0, len(rows), size)
    ]


def _merge(parts: Iterable[tuple[PropositionReport, list[tuple]]], limit: int) -> PropositionReport:
    parts = list(parts)
    first = parts[0][0]
    rep = PropositionReport(first.prop, first.title, first.n)
    rep.clauses = [ClauseStats(c.name, c.gating) for c in first.clauses]
    found: list[tuple] = []
    for part, cx in parts:
        rep.relations_checked += part.relations_checked
        rep.hypothesis_satisfied += part.hypothesis_satisfied
        rep.subsets_checked += part.subsets_checked
        rep.counterexample_count += part.counterexample_count
        rep.gating_counterexample_count += part.gating_counterexample_count
        rep.elapsed += part.elapsed
        for total, c in zip(rep.clauses, part.clauses):
            total.hypothesis_satisfied += c.hypothesis_satisfied
            total.violations += c.violations
        found.extend(cx)
    found.sort(key=lambda t: (t[0], t[1]))
    rep.counterexamples = [cx for _, _, cx in found[:limit]]
    return rep


def run_suite(cfg: SweepConfig) -> list[PropositionReport]:
    """One report per selected proposition per n, ordered by n then proposition id."""
    cfg.validate()
    sizes = range(cfg.min_n, cfg.max_n + 1)
    tasks = {n: _tasks(cfg, n) for n in sizes}
    flat = [t for n in sizes for t in tasks[n]]
    if cfg.workers > 1 and len(flat) > 1:
        with ProcessPoolExecutor(max_workers=min(cfg.workers, len(flat))) as pool:
            results = list(pool.map(_run_task, flat))
    else:
        results = [_run_task(t) for t in flat]

    reports = []
    pos = 0
    props = cfg.selected()
    for n in sizes:
        chunk_results = results[pos : pos + len(tasks[n])]
        pos += len(tasks[n])
        for k in range(len(props)):
            reports.append(_merge((r[k] for r in chunk_results), cfg.limit))
    return reports


def default_workers() -> int:
    return max(1, os.cpu_count() or 1)


def reports_to_json(cfg: SweepConfig, reports: Sequence[PropositionReport], timings: bool = False) -> str:
    doc = {"config": cfg.as_dict(), "reports": [r.to_dict(timings) for r in reports]}
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
