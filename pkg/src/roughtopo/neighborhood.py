"""Successor, predecessor and the two mixed neighborhood operators."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .core import BinaryRelation, ElementSet, Universe, canonical_key
from .errors import UniverseMismatch


class NeighborhoodKind(enum.Enum):
    SUCCESSOR = "s"
    PREDECESSOR = "p"
    SUCC_AND_PRED = "s^p"
    SUCC_OR_PRED = "svp"

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @classmethod
    def parse(cls, token: str) -> NeighborhoodKind:
        """Accepts ``s``, ``p``, ``and``/``s^p``/``s∧p`` and ``or``/``svp``/``s∨p`` (plus long names)."""
        key = token.strip().lower().replace("_", "-")
        try:
            return _ALIASES[key]
        except KeyError:
            raise ValueError(f"unknown neighborhood kind {token!r}") from None


KINDS = tuple(NeighborhoodKind)

_SYMBOLS = {
    NeighborhoodKind.SUCCESSOR: "s",
    NeighborhoodKind.PREDECESSOR: "p",
    NeighborhoodKind.SUCC_AND_PRED: "s∧p",
    NeighborhoodKind.SUCC_OR_PRED: "s∨p",
}

_ALIASES = {
    "s": NeighborhoodKind.SUCCESSOR,
    "successor": NeighborhoodKind.SUCCESSOR,
    "p": NeighborhoodKind.PREDECESSOR,
    "predecessor": NeighborhoodKind.PREDECESSOR,
    "and": NeighborhoodKind.SUCC_AND_PRED,
    "s^p": NeighborhoodKind.SUCC_AND_PRED,
    "s∧p": NeighborhoodKind.SUCC_AND_PRED,
    "p^s": NeighborhoodKind.SUCC_AND_PRED,
    "succ-and-pred": NeighborhoodKind.SUCC_AND_PRED,
    "or": NeighborhoodKind.SUCC_OR_PRED,
    "svp": NeighborhoodKind.SUCC_OR_PRED,
    "s∨p": NeighborhoodKind.SUCC_OR_PRED,
    "pvs": NeighborhoodKind.SUCC_OR_PRED,
    "succ-or-pred": NeighborhoodKind.SUCC_OR_PRED,
}


def neighborhood_masks(R: BinaryRelation, kind: NeighborhoodKind) -> tuple[int, ...]:
    """Neighborhood of every element as bit masks, indexed by element."""
    rows, cols = R.rows, R.cols
    if kind is NeighborhoodKind.SUCCESSOR:
        return rows
    if kind is NeighborhoodKind.PREDECESSOR:
        return cols
    if kind is NeighborhoodKind.SUCC_AND_PRED:
        return tuple(r & c for r, c in zip(rows, cols))
    return tuple(r | c for r, c in zip(rows, cols))


def neighborhood(R: BinaryRelation, kind: NeighborhoodKind, x: str | int) -> ElementSet:
    i = R.universe.index(x)
    return ElementSet(R.universe, neighborhood_masks(R, kind)[i])


@dataclass(frozen=True)
class SetFamily:
    """A deduplicated family of subsets kept in canonical order.

    Build it with :meth:`of` or :meth:`from_masks`; the constructor assumes
    ``members`` is already canonical.
    """

    universe: Universe
    members: tuple[ElementSet, ...]

    @classmethod
    def from_masks(cls, universe: Universe, masks: Iterable[int]) -> SetFamily:
        ordered = sorted(set(masks), key=canonical_key)
        return cls(universe, tuple(ElementSet(universe, m) for m in ordered))

    @classmethod
    def of(cls, universe: Universe, sets: Iterable[ElementSet | Iterable[str]]) -> SetFamily:
        masks = []
        for s in sets:
            if isinstance(s, ElementSet):
                if s.universe != universe:
                    raise UniverseMismatch()
                masks.append(s.mask)
            else:
                masks.append(universe.subset(s).mask)
        return cls.from_masks(universe, masks)

    @property
    def masks(self) -> frozenset[int]:
        return frozenset(s.mask for s in self.members)

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, X: ElementSet) -> bool:
        return X.universe == self.universe and X.mask in self.masks

    def union(self) -> ElementSet:
        mask = 0
        for s in self.members:
            mask |= s.mask
        return ElementSet(self.universe, mask)

    def __str__(self) -> str:
        return "{" + ", ".join(str(s) for s in self.members) + "}"

    def __repr__(self) -> str:
        return f"SetFamily({self})"


def neighborhood_family(R: BinaryRelation, kind: NeighborhoodKind) -> SetFamily:
    """The family of all ``kind`` neighborhoods; empty neighborhoods stay in."""
    return SetFamily.from_masks(R.universe, neighborhood_masks(R, kind))


def check_neighborhood_sandwich(R: BinaryRelation) -> bool:
    s = neighborhood_masks(R, NeighborhoodKind.SUCCESSOR)
    p = neighborhood_masks(R, NeighborhoodKind.PREDECESSOR)
    both = neighborhood_masks(R, NeighborhoodKind.SUCC_AND_PRED)
    either = neighborhood_masks(R, NeighborhoodKind.SUCC_OR_PRED)

    def sub(a: int, b: int) -> bool:
        return a & ~b == 0

    return all(
        sub(both[x], s[x]) and sub(s[x], either[x]) and sub(both[x], p[x]) and sub(p[x], either[x])
        for x in range(R.n)
    )
