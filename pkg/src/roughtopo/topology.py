"""Finite topologies generated by relation-induced subbases.

Open sets are handled as integer masks internally; :class:`Topology` wraps
them in a :class:`SetFamily` for callers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .core import BinaryRelation, ElementSet, Universe, complement, relation_profile
from .errors import NotACover, NotATopology, NotSubfamily, UniverseMismatch
from .neighborhood import NeighborhoodKind, SetFamily, neighborhood_family


@lru_cache(maxsize=1 << 16)
def _generate(full: int, subbase: frozenset[int]) -> frozenset[int]:
    # Finite intersections first (U is the empty intersection) ...
    base = set(subbase) | {full}
    frontier = list(base)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(base):
                c = a & b
                if c not in base:
                    base.add(c)
                    fresh.append(c)
        frontier = fresh
    # ... then every union of basic sets (the empty union is ∅).
    opens = {0}
    for b in base:
        opens |= {o | b for o in opens}
    return frozenset(opens)


def generate_opens(n: int, subbase: Iterable[int]) -> frozenset[int]:
    """Open sets, as masks, of the topology generated by ``subbase`` on n points.

    Does not check the cover condition; callers that need it use
    :func:`generate_topology`.
    """
    return _generate((1 << n) - 1, frozenset(subbase))


def _is_topology_masks(full: int, opens: frozenset[int]) -> bool:
    if 0 not in opens or full not in opens:
        return False
    items = list(opens)
    for i, a in enumerate(items):
        for b in items[i + 1 :]:
            if a | b not in opens or a & b not in opens:
                return False
    return True


@dataclass(frozen=True)
class Topology:
    universe: Universe
    opens: SetFamily

    def __post_init__(self) -> None:
        if self.opens.universe != self.universe:
            raise UniverseMismatch()
        if not _is_topology_masks(self.universe.full_mask, self.opens.masks):
            raise NotATopology(f"{self.opens} violates the topology axioms")

    @classmethod
    def from_masks(cls, universe: Universe, masks: Iterable[int]) -> Topology:
        return cls(universe, SetFamily.from_masks(universe, masks))

    @classmethod
    def discrete(cls, universe: Universe) -> Topology:
        return cls.from_masks(universe, range(1 << universe.size))

    @classmethod
    def indiscrete(cls, universe: Universe) -> Topology:
        return cls.from_masks(universe, (0, universe.full_mask))

    def closed_sets(self) -> SetFamily:
        full = self.universe.full_mask
        return SetFamily.from_masks(self.universe, (full & ~m for m in self.opens.masks))

    def __len__(self) -> int:
        return len(self.opens)

    def __str__(self) -> str:
        return str(self.opens)


class TopologyOrder(enum.Enum):
    EQUAL = "equal"
    STRICTLY_SUPERSET = "strictly_superset"
    STRICTLY_SUBSET = "strictly_subset"
    INCOMPARABLE = "incomparable"


def is_cover(F: SetFamily) -> bool:
    return F.union().mask == F.universe.full_mask


def claimed_subbase_condition(R: BinaryRelation, kind: NeighborhoodKind) -> bool:
    """Relation-side condition under which each neighborhood family is claimed to be a subbase."""
    prof = relation_profile(R)
    if kind is NeighborhoodKind.SUCCESSOR:
        return prof.inverse_serial
    if kind is NeighborhoodKind.PREDECESSOR:
        return prof.serial
    if kind is NeighborhoodKind.SUCC_AND_PRED:
        return prof.symmetric and (prof.serial or prof.inverse_serial)
    return prof.serial or prof.inverse_serial


def generate_topology(S: SetFamily) -> Topology:
    uncovered = complement(S.union())
    if uncovered:
        raise NotACover(uncovered)
    return Topology.from_masks(S.universe, generate_opens(S.universe.size, S.masks))


def induced_topology(R: BinaryRelation, kind: NeighborhoodKind) -> Topology:
    return generate_topology(neighborhood_family(R, kind))


def is_topology(F: SetFamily) -> bool:
    return _is_topology_masks(F.universe.full_mask, F.masks)


def is_base(B: SetFamily, T: Topology) -> bool:
    """Whether every open set of T is a union of members of B (B must lie inside T)."""
    if B.universe != T.universe:
        raise UniverseMismatch()
    opens = T.opens.masks
    for b in B.members:
        if b.mask not in opens:
            raise NotSubfamily(b)
    for o in opens:
        covered = 0
        for b in B.masks:
            if b & ~o == 0:
                covered |= b
        if covered != o:
            return False
    return True


def base_conditions(B: SetFamily) -> bool:
    if not is_cover(B):
        return False
    members = list(B.masks)
    for i, x in enumerate(members):
        for y in members[i:]:
            meet = x & y
            # Points of x∩y that sit inside some member contained in x∩y.
            reachable = 0
            for z in members:
                if z & ~meet == 0:
                    reachable |= z
            if meet & ~reachable:
                return False
    return True


def interior(T: Topology, X: ElementSet) -> ElementSet:
    if X.universe != T.universe:
        raise UniverseMismatch()
    out = 0
    for o in T.opens.masks:
        if o & ~X.mask == 0:
            out |= o
    return ElementSet(T.universe, out)


def closure(T: Topology, X: ElementSet) -> ElementSet:
    if X.universe != T.universe:
        raise UniverseMismatch()
    full = T.universe.full_mask
    out = full
    for o in T.opens.masks:
        closed = full & ~o
        if X.mask & ~closed == 0:
            out &= closed
    return ElementSet(T.universe, out)


def refines(F1: SetFamily, F2: SetFamily) -> bool:
    """Cover refinement: each member of F1 lies inside some member of F2."""
    if F1.universe != F2.universe:
        raise UniverseMismatch()
    targets = F2.masks
    return all(any(a & ~b == 0 for b in targets) for a in F1.masks)


def compare_topologies(T1: Topology, T2: Topology) -> TopologyOrder:
    if T1.universe != T2.universe:
        raise UniverseMismatch()
    a, b = T1.opens.masks, T2.opens.masks
    if a == b:
        return TopologyOrder.EQUAL
    if a < b:
        return TopologyOrder.STRICTLY_SUBSET
    if a > b:
        return TopologyOrder.STRICTLY_SUPERSET
    return TopologyOrder.INCOMPARABLE


def hasse_edges(T: Topology) -> list[tuple[ElementSet, ElementSet]]:
    """Covering pairs (A, B): A ⊂ B with no open set strictly between them."""
    members = T.opens.members
    edges = []
    for a in members:
        for b in members:
            if not a < b:
                continue
            if any(a < c < b for c in members):
                continue
            edges.append((a, b))
    return edges


def to_dot(T: Topology, name: str = "topology") -> str:
    ids = {s.mask: f"o{i}" for i, s in enumerate(T.opens.members)}
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for s in T.opens.members:
        lines.append(f'  {ids[s.mask]} [label="{s}"];')
    for a, b in hasse_edges(T):
        lines.append(f"  {ids[a.mask]} -> {ids[b.mask]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
