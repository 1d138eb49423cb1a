"""The proposition catalog P01..P22.

Each proposition is a list of clauses. A clause pairs a relation-level
hypothesis with a vectorised check that returns, per relation, a boolean
row of violations laid out in canonical witness order (law, then kind,
then subset). Gating clauses are claims with a proof behind them. The
remaining clauses, such as converses and unproven remarks, are searched
and reported but never fail a run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..core import bits
from ..topology import generate_opens
from .batch import AND, OR, P, S, RelationBatch, canonical_order, canonical_pairs, subset_of

KIND_SYMBOLS = ("s", "p", "s∧p", "s∨p")


@dataclass
class Check:
    bad: np.ndarray  # (m, W) bool
    describe: Callable[[int, int], dict]


@dataclass(frozen=True)
class Clause:
    name: str
    hypothesis: Callable[[RelationBatch], np.ndarray]
    check: Callable[[RelationBatch, np.ndarray], Check]
    gating: bool = True


@dataclass(frozen=True)
class Proposition:
    id: str
    title: str
    source: str
    clauses: tuple[Clause, ...]
    # "X", "XY" or "" -- what the subset quantifier ranges over
    quantifier: str = ""


def _labels(b: RelationBatch, mask) -> list[str]:
    return [b.universe.labels[i] for i in bits(int(mask))]


def _always(b: RelationBatch) -> np.ndarray:
    return np.ones(b.m, dtype=bool)


# -- set-law plumbing --------------------------------------------------------


@dataclass
class Law:
    text: str
    kind: int | None
    lhs: np.ndarray
    rhs: np.ndarray
    op: str  # "eq" or "sub"
    where: Callable[[int], dict] = field(default=lambda w: {})


def _law_check(b: RelationBatch, laws: list[Law]) -> Check:
    blocks, offsets = [], []
    pos = 0
    for law in laws:
        lhs = np.broadcast_to(law.lhs, (b.m,) + np.shape(law.lhs)[-1:])
        rhs = np.broadcast_to(law.rhs, lhs.shape)
        law.lhs, law.rhs = lhs, rhs
        ok = (lhs == rhs) if law.op == "eq" else subset_of(lhs, rhs)
        blocks.append(~ok)
        offsets.append(pos)
        pos += lhs.shape[1]
    bad = np.concatenate(blocks, axis=1)

    def describe(i: int, p: int) -> dict:
        k = int(np.searchsorted(offsets, p, side="right")) - 1
        law, w = laws[k], p - offsets[k]
        out: dict = {"law": law.text}
        if law.kind is not None:
            out["kind"] = KIND_SYMBOLS[law.kind]
        out.update(law.where(w))
        out["observed"] = _labels(b, law.lhs[i, w])
        out["expected"] = _labels(b, law.rhs[i, w])
        return out

    return Check(bad, describe)


def _x_where(b: RelationBatch, xs: np.ndarray) -> Callable[[int], dict]:
    return lambda w: {"X": _labels(b, xs[w])}


def _xy_where(b: RelationBatch, xs: np.ndarray, ys: np.ndarray) -> Callable[[int], dict]:
    return lambda w: {"X": _labels(b, xs[w]), "Y": _labels(b, ys[w])}


def _laws(build: Callable[[RelationBatch], list[Law]]) -> Callable[[RelationBatch, np.ndarray], Check]:
    return lambda b, hyp: _law_check(b, build(b))


# -- P01..P06: operator laws -------------------------------------------------


def _duality(b: RelationBatch) -> list[Law]:
    xs = canonical_order(b.n)
    comp = b.full ^ xs
    where = _x_where(b, xs)
    laws = []
    for k in range(4):
        laws.append(Law("lower(X) = (upper(Xᶜ))ᶜ", k, b.lower_at(k, xs), b.full & ~b.upper_at(k, comp), "eq", where))
        laws.append(Law("upper(X) = (lower(Xᶜ))ᶜ", k, b.upper_at(k, xs), b.full & ~b.lower_at(k, comp), "eq", where))
    return laws


def _units(b: RelationBatch) -> list[Law]:
    full = np.array([b.full])
    empty = np.array([0])
    laws = []
    for k in range(4):
        laws.append(Law("lower(U) = U", k, b.lower_at(k, full), full, "eq", lambda w: {"X": list(b.universe.labels)}))
        laws.append(Law("upper(∅) = ∅", k, b.upper_at(k, empty), empty, "eq", lambda w: {"X": []}))
    return laws


def _multiplicative(b: RelationBatch) -> list[Law]:
    xs, ys = canonical_pairs(b.n)
    where = _xy_where(b, xs, ys)
    laws = []
    for k in range(4):
        laws.append(Law("lower(X∩Y) = lower(X) ∩ lower(Y)", k, b.lower_at(k, xs & ys), b.lower_at(k, xs) & b.lower_at(k, ys), "eq", where))
        laws.append(Law("upper(X∪Y) = upper(X) ∪ upper(Y)", k, b.upper_at(k, xs | ys), b.upper_at(k, xs) | b.upper_at(k, ys), "eq", where))
    return laws


def _reflexive_laws(b: RelationBatch) -> list[Law]:
    xs = canonical_order(b.n)
    where = _x_where(b, xs)
    laws = []
    for k in range(4):
        laws.append(Law("lower(X) ⊆ X", k, b.lower_at(k, xs), xs, "sub", where))
        laws.append(Law("X ⊆ upper(X)", k, xs, b.upper_at(k, xs), "sub", where))
    return laws


def _symmetric_laws(b: RelationBatch) -> list[Law]:
    xs = canonical_order(b.n)
    where = _x_where(b, xs)
    laws = []
    for k in range(4):
        laws.append(Law("X ⊆ lower(upper(X))", k, xs, b.lower_at(k, b.upper_at(k, xs)), "sub", where))
        laws.append(Law("upper(lower(X)) ⊆ X", k, b.upper_at(k, b.lower_at(k, xs)), xs, "sub", where))
    return laws


def _transitive_laws(b: RelationBatch) -> list[Law]:
    xs = canonical_order(b.n)
    where = _x_where(b, xs)
    laws = []
    # s∨p is excluded: R ∪ R⁻¹ need not be transitive when R is.
    for k in (S, P, AND):
        lo = b.lower_at(k, xs)
        up = b.upper_at(k, xs)
        laws.append(Law("lower(X) ⊆ lower(lower(X))", k, lo, b.lower_at(k, lo), "sub", where))
        laws.append(Law("upper(upper(X)) ⊆ upper(X)", k, b.upper_at(k, up), up, "sub", where))
    return laws


# -- P07 and P15..P20: comparisons between kinds ----------------------------


def _sandwich(b: RelationBatch, hyp: np.ndarray) -> Check:
    nb = b.nbhd
    where = lambda w: {"x": b.universe.labels[w]}
    pairs = [(AND, S), (S, OR), (AND, P), (P, OR)]
    laws = [
        Law(f"R_{KIND_SYMBOLS[i]}(x) ⊆ R_{KIND_SYMBOLS[j]}(x)", None, nb[:, i, :], nb[:, j, :], "sub", where)
        for i, j in pairs
    ]
    return _law_check(b, laws)


def _chain_laws(b: RelationBatch, links: list[tuple[str, int | None, str, int | None]]) -> list[Law]:
    """Inclusions ``a ⊆ b`` between named approximations; ``("X", None)`` is X itself."""
    xs = canonical_order(b.n)
    where = _x_where(b, xs)

    def value(name: str, k: int | None) -> np.ndarray:
        if name == "X":
            return np.broadcast_to(xs, (b.m, len(xs)))
        return b.lower_at(k, xs) if name == "lower" else b.upper_at(k, xs)

    def text(name: str, k: int | None) -> str:
        return "X" if name == "X" else f"{name}_{KIND_SYMBOLS[k]}(X)"

    return [
        Law(f"{text(a, ka)} ⊆ {text(c, kc)}", None, value(a, ka), value(c, kc), "sub", where)
        for a, ka, c, kc in links
    ]


def _chain(links):
    return lambda b, hyp: _law_check(b, _chain_laws(b, links))


_KIND_CHAINS = [
    ("lower", OR, "lower", S),
    ("lower", S, "lower", AND),
    ("lower", OR, "lower", P),
    ("lower", P, "lower", AND),
    ("upper", AND, "upper", S),
    ("upper", S, "upper", OR),
    ("upper", AND, "upper", P),
    ("upper", P, "upper", OR),
]

_SERIAL_CHAIN = [("lower", OR, "lower", S), ("lower", S, "upper", S), ("upper", S, "upper", OR)]
_INVERSE_SERIAL_CHAIN = [("lower", OR, "lower", P), ("lower", P, "upper", P), ("upper", P, "upper", OR)]


def _seven_term(k: int) -> list[tuple]:
    return [
        ("lower", OR, "lower", k),
        ("lower", k, "lower", AND),
        ("lower", AND, "X", None),
        ("X", None, "upper", AND),
        ("upper", AND, "upper", k),
        ("upper", k, "upper", OR),
    ]


_REFLEXIVE_SANDWICH = [link for k in range(4) for link in (("lower", k, "X", None), ("X", None, "upper", k))]


def _collapse(b: RelationBatch, hyp: np.ndarray) -> Check:
    xs = canonical_order(b.n)
    where = _x_where(b, xs)
    laws = []
    for k in (P, AND, OR):
        laws.append(Law(f"lower_s(X) = lower_{KIND_SYMBOLS[k]}(X)", None, b.lower_at(S, xs), b.lower_at(k, xs), "eq", where))
        laws.append(Law(f"upper_s(X) = upper_{KIND_SYMBOLS[k]}(X)", None, b.upper_at(S, xs), b.upper_at(k, xs), "eq", where))
    laws += _chain_laws(b, [("lower", S, "X", None), ("X", None, "upper", S)])
    return _law_check(b, laws)


# -- P08..P12: subbase characterisations -------------------------------------


def _relation_check(b: RelationBatch, bad: np.ndarray, info: Callable[[int], dict]) -> Check:
    return Check(bad.reshape(b.m, 1), lambda i, w: info(i))


def _uncovered(b: RelationBatch, k: int) -> Callable[[int], dict]:
    def info(i: int) -> dict:
        union = int(np.bitwise_or.reduce(b.nbhd[i, k]))
        return {"family": KIND_SYMBOLS[k], "uncovered": _labels(b, b.full & ~union)}

    return info


def _flags(b: RelationBatch, names: tuple[str, ...], k: int | None = None) -> Callable[[int], dict]:
    def info(i: int) -> dict:
        out: dict = {name: bool(getattr(b, name)[i]) for name in names}
        if k is not None:
            out["family"] = KIND_SYMBOLS[k]
            out["covers"] = bool(b.cover[i, k])
        return out

    return info


def _cover_forward(k: int, hyp: Callable[[RelationBatch], np.ndarray], name: str, gating: bool = True) -> Clause:
    return Clause(
        name,
        hyp,
        lambda b, h: _relation_check(b, ~b.cover[:, k], _uncovered(b, k)),
        gating,
    )


def _cover_converse(
    k: int, prop: Callable[[RelationBatch], np.ndarray], flags: tuple[str, ...], name: str, gating: bool
) -> Clause:
    return Clause(
        name,
        lambda b: b.cover[:, k],
        lambda b, h: _relation_check(b, ~prop(b), _flags(b, flags, k)),
        gating,
    )


def _sym_and_some_serial(b: RelationBatch) -> np.ndarray:
    return b.symmetric & (b.serial | b.inverse_serial)


def _serial_or_inverse(b: RelationBatch) -> np.ndarray:
    return b.serial | b.inverse_serial


# -- families and topologies -------------------------------------------------


def _families_equal(b: RelationBatch, i: int, j: int) -> np.ndarray:
    a, c = b.nbhd[:, i, :], b.nbhd[:, j, :]
    a_in_c = (a[:, :, None] == c[:, None, :]).any(axis=2).all(axis=1)
    c_in_a = (c[:, :, None] == a[:, None, :]).any(axis=2).all(axis=1)
    return a_in_c & c_in_a


def _pointwise(b: RelationBatch, i: int, j: int) -> np.ndarray:
    return subset_of(b.nbhd[:, i, :], b.nbhd[:, j, :]).all(axis=1)


def _refines(b: RelationBatch, i: int, j: int) -> np.ndarray:
    return subset_of(b.nbhd[:, i, :, None], b.nbhd[:, j, None, :]).any(axis=2).all(axis=1)


def _opens(b: RelationBatch, i: int, k: int) -> frozenset[int] | None:
    """Induced topology of kind k for relation i, or None if the family is not a cover."""
    if not b.cover[i, k]:
        return None
    return generate_opens(b.n, frozenset(int(m) for m in b.nbhd[i, k]))


def _family_collapse(b: RelationBatch, hyp: np.ndarray) -> Check:
    others = (P, AND, OR)
    bad = np.stack([~_families_equal(b, S, k) for k in others], axis=1)

    def describe(i: int, w: int) -> dict:
        k = others[w]
        return {
            "law": f"S_s = S_{KIND_SYMBOLS[k]}",
            "S_s": sorted(_labels(b, m) for m in set(b.nbhd[i, S])),
            f"S_{KIND_SYMBOLS[k]}": sorted(_labels(b, m) for m in set(b.nbhd[i, k])),
        }

    return Check(bad, describe)


def _render_opens(b: RelationBatch, opens: frozenset[int] | None):
    if opens is None:
        return None
    return [_labels(b, m) for m in sorted(opens, key=lambda m: (bin(m).count("1"), tuple(bits(m))))]


def _topology_collapse(b: RelationBatch, hyp: np.ndarray) -> Check:
    others = (P, AND, OR)
    bad = np.zeros((b.m, len(others)), dtype=bool)
    for i in np.flatnonzero(hyp):
        base = _opens(b, i, S)
        for w, k in enumerate(others):
            other = _opens(b, i, k)
            bad[i, w] = base is None or other is None or base != other

    def describe(i: int, w: int) -> dict:
        k = others[w]
        return {
            "law": f"T_s = T_{KIND_SYMBOLS[k]}",
            "T_s": _render_opens(b, _opens(b, i, S)),
            f"T_{KIND_SYMBOLS[k]}": _render_opens(b, _opens(b, i, k)),
        }

    return Check(bad, describe)


def _class_unions(classes: set[int]) -> frozenset[int]:
    out = {0}
    for c in classes:
        out |= {o | c for o in out}
    return frozenset(out)


def _pawlak(b: RelationBatch, hyp: np.ndarray) -> Check:
    """Equivalence relations: neighborhoods are classes, opens are unions of classes and clopen."""
    texts = ("R_k(x) = [x] for all x", "opens = unions of classes", "every open set is closed")
    bad = np.zeros((b.m, 4 * len(texts)), dtype=bool)
    for i in np.flatnonzero(hyp):
        classes = [int(r) for r in b.rows[i]]
        unions = _class_unions(set(classes))
        for k in range(4):
            opens = _opens(b, i, k)
            base = 3 * k
            bad[i, base] = [int(m) for m in b.nbhd[i, k]] != classes
            bad[i, base + 1] = opens != unions
            bad[i, base + 2] = opens is None or any(b.full & ~o not in opens for o in opens)

    def describe(i: int, w: int) -> dict:
        k, t = divmod(w, len(texts))
        return {
            "law": texts[t],
            "kind": KIND_SYMBOLS[k],
            "classes": sorted(_labels(b, m) for m in set(b.rows[i])),
            "opens": _render_opens(b, _opens(b, i, k)),
        }

    return Check(bad, describe)


# Pairs (finer, coarser) with the hypothesis under which S_finer ⪯ S_coarser is claimed.
_REFINEMENT_CLAIMS: tuple[tuple[int, int, str], ...] = (
    (AND, S, "reflexive"),
    (AND, P, "reflexive"),
    (S, OR, "reflexive"),
    (P, OR, "reflexive"),
    (P, OR, "serial"),
    (S, OR, "inverse_serial"),
)


def _refinement_hypothesis(b: RelationBatch) -> np.ndarray:
    return b.reflexive | b.serial | b.inverse_serial


def _applicable(b: RelationBatch) -> np.ndarray:
    return np.stack([getattr(b, h) for _, _, h in _REFINEMENT_CLAIMS], axis=1)


def _refinement_families(b: RelationBatch, hyp: np.ndarray) -> Check:
    ok = np.stack([_refines(b, i, j) for i, j, _ in _REFINEMENT_CLAIMS], axis=1)
    bad = _applicable(b) & ~ok

    def describe(i: int, w: int) -> dict:
        a, c, h = _REFINEMENT_CLAIMS[w]
        return {
            "law": f"S_{KIND_SYMBOLS[a]} ⪯ S_{KIND_SYMBOLS[c]}",
            "hypothesis": h,
            f"S_{KIND_SYMBOLS[a]}": sorted(_labels(b, m) for m in set(b.nbhd[i, a])),
            f"S_{KIND_SYMBOLS[c]}": sorted(_labels(b, m) for m in set(b.nbhd[i, c])),
        }

    return Check(bad, describe)


def _refinement_topologies(reading: str) -> Callable[[RelationBatch, np.ndarray], Check]:
    """Topology-level ordering T_a ⪯ T_c read as T_a ⊆ T_c ("subset") or T_a ⊇ T_c ("superset")."""

    def check(b: RelationBatch, hyp: np.ndarray) -> Check:
        app = _applicable(b)
        bad = np.zeros_like(app)
        for i in np.flatnonzero(hyp):
            for w, (a, c, _) in enumerate(_REFINEMENT_CLAIMS):
                if not app[i, w]:
                    continue
                ta, tc = _opens(b, i, a), _opens(b, i, c)
                if ta is None or tc is None:
                    bad[i, w] = True
                else:
                    bad[i, w] = not (ta <= tc if reading == "subset" else ta >= tc)

        def describe(i: int, w: int) -> dict:
            a, c, h = _REFINEMENT_CLAIMS[w]
            op = "⊆" if reading == "subset" else "⊇"
            return {
                "law": f"T_{KIND_SYMBOLS[a]} {op} T_{KIND_SYMBOLS[c]}",
                "hypothesis": h,
                f"T_{KIND_SYMBOLS[a]}": _render_opens(b, _opens(b, i, a)),
                f"T_{KIND_SYMBOLS[c]}": _render_opens(b, _opens(b, i, c)),
            }

        return Check(bad, describe)

    return check


_ORDERED_KIND_PAIRS = tuple((i, j) for i in range(4) for j in range(4) if i != j)


def _pointwise_vs_refinement(direction: str) -> Callable[[RelationBatch, np.ndarray], Check]:
    def check(b: RelationBatch, hyp: np.ndarray) -> Check:
        cols = []
        for i, j in _ORDERED_KIND_PAIRS:
            pw, rf = _pointwise(b, i, j), _refines(b, i, j)
            cols.append(pw & ~rf if direction == "forward" else rf & ~pw)
        bad = np.stack(cols, axis=1)

        def describe(r: int, w: int) -> dict:
            i, j = _ORDERED_KIND_PAIRS[w]
            out: dict = {
                "law": (
                    f"R_{KIND_SYMBOLS[i]}(x) ⊆ R_{KIND_SYMBOLS[j]}(x) ∀x ⇒ S_{KIND_SYMBOLS[i]} ⪯ S_{KIND_SYMBOLS[j]}"
                    if direction == "forward"
                    else f"S_{KIND_SYMBOLS[i]} ⪯ S_{KIND_SYMBOLS[j]} ⇒ R_{KIND_SYMBOLS[i]}(x) ⊆ R_{KIND_SYMBOLS[j]}(x) ∀x"
                )
            }
            bad_x = [x for x in range(b.n) if int(b.nbhd[r, i, x]) & ~int(b.nbhd[r, j, x])]
            if bad_x:
                x = bad_x[0]
                out["x"] = b.universe.labels[x]
                out[f"R_{KIND_SYMBOLS[i]}(x)"] = _labels(b, b.nbhd[r, i, x])
                out[f"R_{KIND_SYMBOLS[j]}(x)"] = _labels(b, b.nbhd[r, j, x])
            return out

        return Check(bad, describe)

    return check


def _base_conditions(b: RelationBatch, k: int) -> np.ndarray:
    fam = b.nbhd[:, k, :]
    meet = fam[:, :, None] & fam[:, None, :]
    inside = subset_of(fam[:, None, None, :], meet[:, :, :, None])
    reach = np.bitwise_or.reduce(np.where(inside, fam[:, None, None, :], 0), axis=3)
    return b.cover[:, k] & subset_of(meet, reach).all(axis=(1, 2))


def _preorder_base(k: int) -> Callable[[RelationBatch, np.ndarray], Check]:
    def check(b: RelationBatch, hyp: np.ndarray) -> Check:
        def describe(i: int, w: int) -> dict:
            fam = [int(m) for m in b.nbhd[i, k]]
            out: dict = {"family": KIND_SYMBOLS[k], "members": sorted(_labels(b, m) for m in set(fam))}
            for x in fam:
                for y in fam:
                    meet = x & y
                    reach = 0
                    for z in fam:
                        if z & ~meet == 0:
                            reach |= z
                    if meet & ~reach:
                        out["B2_fails_at"] = {"X": _labels(b, x), "Y": _labels(b, y), "points": _labels(b, meet & ~reach)}
                        return out
            return out

        return Check(~_base_conditions(b, k).reshape(b.m, 1), describe)

    return check


# -- the catalog --------------------------------------------------------------


def _hyp(name: str) -> Callable[[RelationBatch], np.ndarray]:
    return lambda b: getattr(b, name)


CATALOG: tuple[Proposition, ...] = (
    Proposition(
        "P01", "duality of lower and upper approximations", "operator laws L0/U0",
        (Clause("duality", _always, _laws(_duality)),), "X",
    ),
    Proposition(
        "P02", "lower(U) = U and upper(∅) = ∅", "operator laws L1/U1",
        (Clause("units", _always, _laws(_units)),), "",
    ),
    Proposition(
        "P03", "lower distributes over ∩, upper over ∪", "operator laws L2/U2",
        (Clause("multiplicativity", _always, _laws(_multiplicative)),), "XY",
    ),
    Proposition(
        "P04", "reflexive ⇒ lower(X) ⊆ X ⊆ upper(X)", "operator laws L3/U3",
        (Clause("reflexive", _hyp("reflexive"), _laws(_reflexive_laws)),), "X",
    ),
    Proposition(
        "P05", "symmetric ⇒ X ⊆ lower(upper X), upper(lower X) ⊆ X", "operator laws L4/U4",
        (Clause("symmetric", _hyp("symmetric"), _laws(_symmetric_laws)),), "X",
    ),
    Proposition(
        "P06", "transitive ⇒ lower ⊆ lower∘lower, upper∘upper ⊆ upper (kinds s, p, s∧p)", "operator laws L5/U5",
        (Clause("transitive", _hyp("transitive"), _laws(_transitive_laws)),), "X",
    ),
    Proposition(
        "P07", "R_s∧p ⊆ R_s, R_p ⊆ R_s∨p pointwise", "neighborhood sandwich",
        (Clause("sandwich", _always, _sandwich),), "",
    ),
    Proposition(
        "P08", "S_s covers U ⇔ R inverse serial", "successor subbase theorem",
        (
            _cover_forward(S, _hyp("inverse_serial"), "inverse serial ⇒ S_s covers"),
            _cover_converse(S, _hyp("inverse_serial"), ("inverse_serial",), "S_s covers ⇒ inverse serial", True),
        ),
    ),
    Proposition(
        "P09", "S_p covers U ⇔ R serial", "predecessor subbase theorem",
        (
            _cover_forward(P, _hyp("serial"), "serial ⇒ S_p covers"),
            _cover_converse(P, _hyp("serial"), ("serial",), "S_p covers ⇒ serial", True),
        ),
    ),
    Proposition(
        "P10", "S_s∧p covers U ⇔ R symmetric and (serial or inverse serial)", "s∧p subbase theorem",
        (
            _cover_forward(AND, _sym_and_some_serial, "symmetric ∧ (serial ∨ inverse serial) ⇒ S_s∧p covers"),
            _cover_converse(
                AND, _sym_and_some_serial, ("symmetric", "serial", "inverse_serial"),
                "S_s∧p covers ⇒ symmetric ∧ (serial ∨ inverse serial)", False,
            ),
        ),
    ),
    Proposition(
        "P11", "S_s∨p covers U ⇔ R serial or inverse serial", "s∨p subbase theorem",
        (
            _cover_forward(OR, _serial_or_inverse, "serial ∨ inverse serial ⇒ S_s∨p covers"),
            _cover_converse(
                OR, _serial_or_inverse, ("serial", "inverse_serial"),
                "S_s∨p covers ⇒ serial ∨ inverse serial", False,
            ),
        ),
    ),
    Proposition(
        "P12", "symmetric ⇒ (serial ⇔ inverse serial)", "symmetric seriality",
        (
            Clause(
                "symmetric ⇒ (serial ⇔ inverse serial)",
                _hyp("symmetric"),
                lambda b, h: _relation_check(b, b.serial != b.inverse_serial, _flags(b, ("serial", "inverse_serial"))),
            ),
        ),
    ),
    Proposition(
        "P13", "symmetric ∧ serial ⇒ the four families and topologies coincide", "collapse for symmetric relations",
        (
            Clause("families coincide", lambda b: b.symmetric & b.serial, _family_collapse),
            Clause("topologies coincide", lambda b: b.symmetric & b.serial, _topology_collapse),
            Clause("equivalence: classes, unions of classes, clopen", _hyp("equivalence"), _pawlak),
        ),
    ),
    Proposition(
        "P14", "refinement S_i ⪯ S_j (reflexive, serial, inverse serial) and topology readings", "refinement propositions",
        (
            Clause("family refinement", _refinement_hypothesis, _refinement_families),
            Clause("topology reading T_i ⊆ T_j", _refinement_hypothesis, _refinement_topologies("subset"), False),
            Clause("topology reading T_i ⊇ T_j", _refinement_hypothesis, _refinement_topologies("superset"), False),
        ),
    ),
    Proposition(
        "P15", "inclusion chains between the four kinds", "approximation inclusion chains",
        (Clause("chains", _always, _chain(_KIND_CHAINS)),), "X",
    ),
    Proposition(
        "P16", "serial ⇒ lower_s∨p ⊆ lower_s ⊆ upper_s ⊆ upper_s∨p", "serial approximation chain",
        (Clause("serial", _hyp("serial"), _chain(_SERIAL_CHAIN)),), "X",
    ),
    Proposition(
        "P17", "inverse serial ⇒ lower_s∨p ⊆ lower_p ⊆ upper_p ⊆ upper_s∨p", "inverse serial approximation chain",
        (Clause("inverse serial", _hyp("inverse_serial"), _chain(_INVERSE_SERIAL_CHAIN)),), "X",
    ),
    Proposition(
        "P18", "symmetric ∧ (serial ∨ inverse serial) ⇒ lower_s∧p ⊆ upper_s∧p", "symmetric s∧p inclusion",
        (Clause("symmetric and serial", _sym_and_some_serial, _chain([("lower", AND, "upper", AND)])),), "X",
    ),
    Proposition(
        "P19", "reflexive ⇒ lower_i ⊆ X ⊆ upper_i and the two seven-term chains", "reflexive approximation chains",
        (
            Clause("sandwich", _hyp("reflexive"), _chain(_REFLEXIVE_SANDWICH)),
            Clause("chain through p", _hyp("reflexive"), _chain(_seven_term(P))),
            Clause("chain through s", _hyp("reflexive"), _chain(_seven_term(S))),
        ),
        "X",
    ),
    Proposition(
        "P20", "tolerance ⇒ all lower approximations equal, all upper equal, lower ⊆ X ⊆ upper", "tolerance collapse",
        (Clause("tolerance", _hyp("tolerance"), _collapse),), "X",
    ),
    Proposition(
        "P21", "pointwise R_i ⊆ R_j ⇔ S_i ⪯ S_j", "pointwise inclusion versus refinement",
        (
            Clause("pointwise ⇒ refinement", _always, _pointwise_vs_refinement("forward")),
            Clause("refinement ⇒ pointwise", _always, _pointwise_vs_refinement("converse"), False),
        ),
    ),
    Proposition(
        "P22", "preorder ⇒ each S_i satisfies base conditions B1, B2", "preorder base remark",
        tuple(Clause(f"S_{KIND_SYMBOLS[k]} is a base", _hyp("preorder"), _preorder_base(k), False) for k in range(4)),
    ),
)

BY_ID = {p.id: p for p in CATALOG}
