"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 unmet precondition
(family is not a cover), 3 verification or golden-example mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .approximation import lower_approx, upper_approx
from .core import BinaryRelation, ElementSet, make_relation, make_universe, relation_profile
from .errors import NotACover, RoughTopoError
from .harness.catalog import BY_ID
from .harness.sweep import SweepConfig, default_workers, reports_to_json, run_suite
from .neighborhood import KINDS, NeighborhoodKind, neighborhood, neighborhood_family
from .relfile import load_relation, relation_to_dict
from .topology import (
    base_conditions,
    claimed_subbase_condition,
    generate_topology,
    is_base,
    is_cover,
    to_dot,
)

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_MISMATCH = 0, 1, 2, 3

_CONDITION_TEXT = {
    NeighborhoodKind.SUCCESSOR: "inverse serial",
    NeighborhoodKind.PREDECESSOR: "serial",
    NeighborhoodKind.SUCC_AND_PRED: "symmetric and (serial or inverse serial)",
    NeighborhoodKind.SUCC_OR_PRED: "serial or inverse serial",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2, which is reserved
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(X: ElementSet) -> str:
    return str(X)


def _parse_set(R: BinaryRelation, text: str) -> ElementSet:
    labels = [s.strip() for s in text.split(",") if s.strip()]
    return R.universe.subset(labels)


def _parse_kind(token: str) -> NeighborhoodKind:
    try:
        return NeighborhoodKind.parse(token)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _table(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  " + "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


# -- analyze -------------------------------------------------------------------


def cmd_analyze(args: argparse.Namespace) -> int:
    R = load_relation(args.relation)
    kinds = args.kind or list(KINDS)
    X = _parse_set(R, args.set) if args.set is not None else None
    labels = R.universe.labels
    prof = relation_profile(R)
    nbhd = {k: {x: neighborhood(R, k, x) for x in labels} for k in kinds}
    approx = {k: (lower_approx(R, k, X), upper_approx(R, k, X)) for k in kinds} if X is not None else {}

    if args.format == "json":
        doc: dict = {
            "relation": relation_to_dict(R),
            "profile": prof.as_dict(),
            "neighborhoods": {k.symbol: {x: list(s.labels) for x, s in nbhd[k].items()} for k in kinds},
        }
        if X is not None:
            doc["X"] = list(X.labels)
            doc["approximations"] = {
                k.symbol: {"lower": list(lo.labels), "upper": list(up.labels)} for k, (lo, up) in approx.items()
            }
        print(json.dumps(doc, indent=2, ensure_ascii=False))
        return EXIT_OK

    print("universe: " + " ".join(labels))
    print("relation: " + (" ".join(f"({x},{y})" for x, y in R.pairs()) or "(empty)"))
    print("profile:  " + " ".join(f"{k}={'yes' if v else 'no'}" for k, v in prof.as_dict().items()))
    print()
    print("neighborhoods")
    rows = [["x"] + [f"R_{k.symbol}(x)" for k in kinds]]
    rows += [[x] + [_fmt(nbhd[k][x]) for k in kinds] for x in labels]
    print(_table(rows))
    if X is not None:
        print()
        print(f"approximations of X = {_fmt(X)}")
        rows = [["kind", "lower", "upper"]]
        rows += [[k.symbol, _fmt(lo), _fmt(up)] for k, (lo, up) in approx.items()]
        print(_table(rows))
        for k, (lo, up) in approx.items():
            if not lo <= up:
                print(f"note: lower_{k.symbol}(X) is not contained in upper_{k.symbol}(X)")
    return EXIT_OK


# -- topology ------------------------------------------------------------------


def cmd_topology(args: argparse.Namespace) -> int:
    R = load_relation(args.relation)
    kind = args.kind
    fam = neighborhood_family(R, kind)
    covers = is_cover(fam)
    condition = claimed_subbase_condition(R, kind)
    try:
        T = generate_topology(fam)
    except NotACover as exc:
        if not args.dot:
            print(f"family S_{kind.symbol}: {fam}")
            print("covers U: no")
            print(f"subbase condition ({_CONDITION_TEXT[kind]}): {'yes' if condition else 'no'}")
        print(f"error: S_{kind.symbol} is not a cover; uncovered: {' '.join(exc.uncovered.labels)}", file=sys.stderr)
        return EXIT_PRECONDITION

    if args.dot:
        sys.stdout.write(to_dot(T, name=f"T_{kind.value.replace('^', 'and')}"))
        return EXIT_OK
    print(f"family S_{kind.symbol}: {fam}")
    print(f"covers U: {'yes' if covers else 'no'}")
    print(f"subbase condition ({_CONDITION_TEXT[kind]}): {'yes' if condition else 'no'}")
    print(f"topology T_{kind.symbol}: {len(T)} open sets")
    for o in T.opens:
        print(f"  {o}")
    if args.check_base:
        print(f"base conditions B1/B2 on S_{kind.symbol}: {'yes' if base_conditions(fam) else 'no'}")
        print(f"S_{kind.symbol} is a base of T_{kind.symbol}: {'yes' if is_base(fam, T) else 'no'}")
    return EXIT_OK


# -- verify --------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    props = tuple(p.strip().upper() for p in args.props.split(",") if p.strip()) if args.props else ()
    seed = args.seed
    if args.mode == "sampled" and seed is None:
        seed = 0
    cfg = SweepConfig(
        max_n=args.max_n,
        min_n=args.min_n,
        mode=args.mode,
        sample_count=args.samples,
        seed=seed,
        props=props,
        limit=args.limit,
        workers=args.workers or default_workers(),
    )
    cfg.validate()
    reports = run_suite(cfg)
    if args.report:
        text = reports_to_json(cfg, reports, timings=args.timings)
        if args.report == "-":
            sys.stdout.write(text)
        else:
            Path(args.report).write_text(text, encoding="utf-8")

    out = sys.stderr if args.report == "-" else sys.stdout
    by_prop: dict[str, list] = {}
    for r in reports:
        by_prop.setdefault(r.prop, []).append(r)
    gating_failed = False
    for prop_id, reps in by_prop.items():
        statuses = {r.status for r in reps}
        status = "FAIL" if "FAIL" in statuses else "REPORTED" if "REPORTED" in statuses else "PASS"
        gating_failed |= status == "FAIL"
        counts = " ".join(
            f"n={r.n}:{r.hypothesis_satisfied}/{r.relations_checked}" + (f"!{r.counterexample_count}" if r.counterexample_count else "")
            for r in reps
        )
        print(f"{prop_id} {status:<8} {BY_ID[prop_id].title}", file=out)
        print(f"    hypothesis/relations{'!counterexamples' if status != 'PASS' else ''}: {counts}", file=out)
        if status != "PASS":
            first = next(cx for r in reps for cx in r.counterexamples)
            pairs = " ".join(f"({x},{y})" for x, y in first["relation"]["pairs"]) or "(empty)"
            kind = "gating" if first["gating"] else "exploratory"
            print(f"    first counterexample [{kind}] {first['clause']}: n={len(first['relation']['universe'])} R={{{pairs}}}", file=out)
    if args.expect_hold and gating_failed:
        return EXIT_MISMATCH
    return EXIT_OK


# -- example -------------------------------------------------------------------

EXAMPLE_UNIVERSE = ("a", "b", "c", "d")
EXAMPLE_PAIRS = (("a", "a"), ("a", "c"), ("b", "c"), ("c", "a"), ("c", "d"))
EXAMPLE_SET = ("a", "c", "d")

_S, _P, _AND, _OR = KINDS
EXAMPLE_NEIGHBORHOODS = {
    _S: {"a": "ac", "b": "c", "c": "ad", "d": ""},
    _P: {"a": "ac", "b": "", "c": "ab", "d": "c"},
    _AND: {"a": "ac", "b": "", "c": "a", "d": ""},
    _OR: {"a": "ac", "b": "c", "c": "abd", "d": "c"},
}
EXAMPLE_APPROXIMATIONS = {
    _S: ("abcd", "abc"),
    _P: ("abd", "acd"),
    _AND: ("abcd", "ac"),
    _OR: ("abd", "abcd"),
}


def example_relation() -> BinaryRelation:
    return make_relation(make_universe(EXAMPLE_UNIVERSE), EXAMPLE_PAIRS)


def example_entries() -> list[dict]:
    """Computed versus expected values for the built-in example, 24 entries."""
    R = example_relation()
    u = R.universe
    X = u.subset(EXAMPLE_SET)
    entries = []
    for k in KINDS:
        for x in EXAMPLE_UNIVERSE:
            got = neighborhood(R, k, x)
            want = u.subset(EXAMPLE_NEIGHBORHOODS[k][x])
            entries.append({"name": f"R_{k.symbol}({x})", "expected": list(want.labels), "computed": list(got.labels), "match": got == want})
    for k in KINDS:
        lo_want, up_want = (u.subset(s) for s in EXAMPLE_APPROXIMATIONS[k])
        for name, got, want in (
            (f"lower_{k.symbol}(X)", lower_approx(R, k, X), lo_want),
            (f"upper_{k.symbol}(X)", upper_approx(R, k, X), up_want),
        ):
            entries.append({"name": name, "expected": list(want.labels), "computed": list(got.labels), "match": got == want})
    return entries


def cmd_example(args: argparse.Namespace) -> int:
    R = example_relation()
    X = R.universe.subset(EXAMPLE_SET)
    entries = example_entries()
    matched = sum(e["match"] for e in entries)
    lo, up = lower_approx(R, _S, X), upper_approx(R, _S, X)
    anomaly = up < lo

    if args.format == "json":
        doc = {
            "relation": relation_to_dict(R),
            "X": list(X.labels),
            "matched": matched,
            "total": len(entries),
            "entries": entries,
            "anomaly": {"lower_s": list(lo.labels), "upper_s": list(up.labels), "lower_strictly_contains_upper": anomaly},
        }
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        print("relation: " + " ".join(f"({x},{y})" for x, y in R.pairs()))
        print(f"X = {X}")
        rows = [["", "expected", "computed", ""]]
        for e in entries:
            rows.append([e["name"], "{" + ",".join(e["expected"]) + "}", "{" + ",".join(e["computed"]) + "}", "ok" if e["match"] else "MISMATCH"])
        print(_table(rows))
        print(f"{matched}/{len(entries)} sets match")
        if anomaly:
            print(f"lower_s(X) = {lo} strictly contains upper_s(X) = {up}: d has no successor")
    return EXIT_OK if matched == len(entries) else EXIT_MISMATCH


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="roughtopo", description="Rough approximations and relation-induced topologies.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="profile, neighborhoods and approximations of a relation")
    p.add_argument("relation", help="relation file (JSON or text)")
    p.add_argument("--set", help='comma-separated labels of X; "" is the empty set')
    p.add_argument("--kind", action="append", type=_parse_kind, help="restrict to a neighborhood kind (repeatable)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("topology", help="topology generated by a neighborhood family")
    p.add_argument("relation")
    p.add_argument("--kind", type=_parse_kind, default=NeighborhoodKind.SUCCESSOR, help="s, p, and, or")
    p.add_argument("--check-base", action="store_true", help="also test base conditions B1/B2")
    p.add_argument("--dot", action="store_true", help="print the Hasse diagram of the opens as DOT")
    p.set_defaults(func=cmd_topology)

    p = sub.add_parser("verify", help="run the proposition catalog over relation sweeps")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--props", help="comma-separated ids, e.g. P01,P11 (default: all)")
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--seed", type=int, help="sampled mode seed (default 0)")
    p.add_argument("--samples", type=int, default=1000, help="relations per size in sampled mode")
    p.add_argument("--report", help="write the JSON report here ('-' for stdout)")
    p.add_argument("--limit", type=int, default=10, help="counterexamples kept per report")
    p.add_argument("--workers", type=int, default=0, help="worker processes (0: one per CPU)")
    p.add_argument("--timings", action="store_true", help="include elapsed_ms in the report")
    p.add_argument("--expect-hold", action="store_true", help="exit 3 if a gating proposition fails")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("example", help="reproduce the built-in worked example")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_example)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (RoughTopoError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
