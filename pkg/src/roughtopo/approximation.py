"""Lower and upper rough approximations for each neighborhood kind.

An element whose neighborhood is empty belongs to every lower approximation
and to no upper approximation. That is what lets the lower approximation
exceed the upper one for non-serial relations; nothing here clips it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import BinaryRelation, ElementSet
from .errors import UniverseMismatch
from .neighborhood import KINDS, NeighborhoodKind, neighborhood_masks

K = NeighborhoodKind


def _lower_mask(nbhd: tuple[int, ...], x_mask: int) -> int:
    out = 0
    for i, m in enumerate(nbhd):
        if m & ~x_mask == 0:
            out |= 1 << i
    return out


def _upper_mask(nbhd: tuple[int, ...], x_mask: int) -> int:
    out = 0
    for i, m in enumerate(nbhd):
        if m & x_mask:
            out |= 1 << i
    return out


def lower_approx(R: BinaryRelation, kind: NeighborhoodKind, X: ElementSet) -> ElementSet:
    if X.universe != R.universe:
        raise UniverseMismatch()
    return ElementSet(R.universe, _lower_mask(neighborhood_masks(R, kind), X.mask))


def upper_approx(R: BinaryRelation, kind: NeighborhoodKind, X: ElementSet) -> ElementSet:
    if X.universe != R.universe:
        raise UniverseMismatch()
    return ElementSet(R.universe, _upper_mask(neighborhood_masks(R, kind), X.mask))


@dataclass(frozen=True)
class ApproximationPair:
    kind: NeighborhoodKind
    lower: ElementSet
    upper: ElementSet


class TableInvariantError(AssertionError):
    """Raised when an approximation table breaks the kind-ordering chains."""


@dataclass(frozen=True)
class ApproximationTable:
    X: ElementSet
    pairs: tuple[ApproximationPair, ...]

    def __getitem__(self, kind: NeighborhoodKind) -> ApproximationPair:
        for pair in self.pairs:
            if pair.kind is kind:
                return pair
        raise KeyError(kind)

    def lower(self, kind: NeighborhoodKind) -> ElementSet:
        return self[kind].lower

    def upper(self, kind: NeighborhoodKind) -> ElementSet:
        return self[kind].upper

    def chain_violations(self) -> list[str]:
        """Inclusions between kinds that fail; always empty for a correct table."""
        lo, up = self.lower, self.upper
        checks = [
            ("lower_s∨p ⊆ lower_s", lo(K.SUCC_OR_PRED) <= lo(K.SUCCESSOR)),
            ("lower_s ⊆ lower_s∧p", lo(K.SUCCESSOR) <= lo(K.SUCC_AND_PRED)),
            ("lower_s∨p ⊆ lower_p", lo(K.SUCC_OR_PRED) <= lo(K.PREDECESSOR)),
            ("lower_p ⊆ lower_s∧p", lo(K.PREDECESSOR) <= lo(K.SUCC_AND_PRED)),
            ("upper_s∧p ⊆ upper_s", up(K.SUCC_AND_PRED) <= up(K.SUCCESSOR)),
            ("upper_s ⊆ upper_s∨p", up(K.SUCCESSOR) <= up(K.SUCC_OR_PRED)),
            ("upper_s∧p ⊆ upper_p", up(K.SUCC_AND_PRED) <= up(K.PREDECESSOR)),
            ("upper_p ⊆ upper_s∨p", up(K.PREDECESSOR) <= up(K.SUCC_OR_PRED)),
        ]
        return [name for name, ok in checks if not ok]


def approximation_table(R: BinaryRelation, X: ElementSet) -> ApproximationTable:
    table = ApproximationTable(
        X,
        tuple(ApproximationPair(k, lower_approx(R, k, X), upper_approx(R, k, X)) for k in KINDS),
    )
    broken = table.chain_violations()
    if broken:
        raise TableInvariantError(f"approximation chain broken for X={X}: {', '.join(broken)}")
    return table
