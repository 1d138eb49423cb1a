"""Universes, element sets, binary relations and relation properties.

Sets are stored as integer bit masks (bit ``i`` is the element with index
``i``), so a universe can hold at most :data:`MAX_UNIVERSE` elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateLabel,
    EmptyUniverse,
    UniverseMismatch,
    UniverseTooLarge,
    UnknownLabel,
)

MAX_UNIVERSE = 64


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def canonical_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key for subsets: cardinality first, then member indices."""
    members = tuple(bits(mask))
    return (len(members), members)


@dataclass(frozen=True)
class Universe:
    labels: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        labels = tuple(str(label) for label in self.labels)
        if not labels:
            raise EmptyUniverse()
        if len(labels) > MAX_UNIVERSE:
            raise UniverseTooLarge(len(labels), MAX_UNIVERSE)
        index: dict[str, int] = {}
        for i, label in enumerate(labels):
            if label in index:
                raise DuplicateLabel(label)
            index[label] = i
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", index)

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, label: str | int) -> int:
        """Index of ``label``; plain ints are taken as indices and range-checked."""
        if isinstance(label, int) and not isinstance(label, bool):
            if 0 <= label < len(self.labels):
                return label
            raise UnknownLabel(label)
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(label) from None

    def label(self, i: int) -> str:
        return self.labels[i]

    def subset(self, labels: Iterable[str | int]) -> ElementSet:
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return ElementSet(self, mask)

    def from_mask(self, mask: int) -> ElementSet:
        return ElementSet(self, mask)

    def empty(self) -> ElementSet:
        return ElementSet(self, 0)

    def full(self) -> ElementSet:
        return ElementSet(self, self.full_mask)

    def all_subsets(self) -> list[ElementSet]:
        """Every subset, in canonical order (cardinality, then members)."""
        masks = sorted(range(1 << self.size), key=canonical_key)
        return [ElementSet(self, m) for m in masks]

    def __repr__(self) -> str:
        return f"Universe({list(self.labels)!r})"


def make_universe(labels: Sequence[str]) -> Universe:
    return Universe(tuple(labels))


def integer_universe(n: int) -> Universe:
    """The universe {1, ..., n} used by the exhaustive harness."""
    return Universe(tuple(str(i) for i in range(1, n + 1)))


@dataclass(frozen=True)
class ElementSet:
    """A subset of a universe. Supports ``& | - ^ ~`` and ``<= < >= >``."""

    universe: Universe
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.universe.size:
            raise ValueError(f"mask {self.mask:#x} has bits outside the universe")

    def _check(self, other: ElementSet) -> None:
        if self.universe != other.universe:
            raise UniverseMismatch()

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.universe.labels[i] for i in bits(self.mask))

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, label: object) -> bool:
        try:
            i = self.universe.index(label)  # type: ignore[arg-type]
        except UnknownLabel:
            return False
        return bool(self.mask >> i & 1)

    def __and__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.universe, self.mask & other.mask)

    def __or__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.universe, self.mask | other.mask)

    def __sub__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.universe, self.mask & ~other.mask)

    def __xor__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.universe, self.mask ^ other.mask)

    def __invert__(self) -> ElementSet:
        return complement(self)

    def issubset(self, other: ElementSet) -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __le__(self, other: ElementSet) -> bool:
        return self.issubset(other)

    def __lt__(self, other: ElementSet) -> bool:
        return self.issubset(other) and self.mask != other.mask

    def __ge__(self, other: ElementSet) -> bool:
        return other.issubset(self)

    def __gt__(self, other: ElementSet) -> bool:
        return other.issubset(self) and self.mask != other.mask

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return canonical_key(self.mask)

    def __str__(self) -> str:
        return "{" + ",".join(self.labels) + "}"

    def __repr__(self) -> str:
        return f"ElementSet({str(self)})"


def complement(X: ElementSet) -> ElementSet:
    return ElementSet(X.universe, X.universe.full_mask & ~X.mask)


def _transpose_rows(rows: Sequence[int], n: int) -> tuple[int, ...]:
    cols = [0] * n
    for i, row in enumerate(rows):
        for j in bits(row):
            cols[j] |= 1 << i
    return tuple(cols)


@dataclass(frozen=True)
class BinaryRelation:
    """A relation on a universe, stored as one successor mask per row.

    ``rows[x]`` has bit ``y`` set iff ``(x, y)`` is in the relation.
    """

    universe: Universe
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.rows)
        if len(rows) != self.universe.size:
            raise ValueError(
                f"relation has {len(rows)} rows for a universe of size {self.universe.size}"
            )
        full = self.universe.full_mask
        if any(r < 0 or r & ~full for r in rows):
            raise ValueError("relation row has bits outside the universe")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return self.universe.size

    @cached_property
    def cols(self) -> tuple[int, ...]:
        """Predecessor masks: ``cols[y]`` has bit ``x`` set iff ``(x, y)`` is in R."""
        return _transpose_rows(self.rows, self.n)

    @property
    def matrix(self) -> list[list[bool]]:
        return [[bool(row >> j & 1) for j in range(self.n)] for row in self.rows]

    def contains(self, x: str | int, y: str | int) -> bool:
        i, j = self.universe.index(x), self.universe.index(y)
        return bool(self.rows[i] >> j & 1)

    def pairs(self) -> list[tuple[str, str]]:
        """Pairs in row-major order."""
        labels = self.universe.labels
        return [(labels[i], labels[j]) for i, row in enumerate(self.rows) for j in bits(row)]

    def transpose(self) -> BinaryRelation:
        return BinaryRelation(self.universe, self.cols)

    def encode(self) -> int:
        """Row-major encoding: pair ``(i, j)`` is bit ``i*n + j``."""
        n = self.n
        return sum(row << (i * n) for i, row in enumerate(self.rows))

    @classmethod
    def decode(cls, universe: Universe, code: int) -> BinaryRelation:
        n = universe.size
        full = universe.full_mask
        return cls(universe, tuple((code >> (i * n)) & full for i in range(n)))

    @classmethod
    def empty(cls, universe: Universe) -> BinaryRelation:
        return cls(universe, (0,) * universe.size)

    @classmethod
    def identity(cls, universe: Universe) -> BinaryRelation:
        return cls(universe, tuple(1 << i for i in range(universe.size)))

    @classmethod
    def full(cls, universe: Universe) -> BinaryRelation:
        return cls(universe, (universe.full_mask,) * universe.size)

    @classmethod
    def from_partition(cls, universe: Universe, blocks: Iterable[Iterable[str]]) -> BinaryRelation:
        """Equivalence relation whose classes are ``blocks`` (missing elements become singletons)."""
        rows = [1 << i for i in range(universe.size)]
        for block in blocks:
            mask = universe.subset(block).mask
            for i in bits(mask):
                rows[i] |= mask
        return cls(universe, tuple(rows))

    def __repr__(self) -> str:
        return f"BinaryRelation({list(self.universe.labels)!r}, {self.pairs()!r})"


def make_relation(u: Universe, pairs: Iterable[Sequence[str]]) -> BinaryRelation:
    rows = [0] * u.size
    for pair in pairs:
        x, y = pair
        rows[u.index(x)] |= 1 << u.index(y)
    return BinaryRelation(u, tuple(rows))


@dataclass(frozen=True)
class RelationProfile:
    serial: bool
    inverse_serial: bool
    reflexive: bool
    symmetric: bool
    transitive: bool

    @property
    def preorder(self) -> bool:
        return self.reflexive and self.transitive

    @property
    def tolerance(self) -> bool:
        return self.reflexive and self.symmetric

    @property
    def equivalence(self) -> bool:
        return self.reflexive and self.symmetric and self.transitive

    def as_dict(self) -> dict[str, bool]:
        return {
            name: getattr(self, name)
            for name in (
                "serial",
                "inverse_serial",
                "reflexive",
                "symmetric",
                "transitive",
                "preorder",
                "tolerance",
                "equivalence",
            )
        }


def relation_profile(R: BinaryRelation) -> RelationProfile:
    rows, cols = R.rows, R.cols
    # R∘R ⊆ R: everything reachable in two steps from x is already a successor of x.
    transitive = all(
        all(rows[y] & ~rows[x] == 0 for y in bits(rows[x])) for x in range(R.n)
    )
    return RelationProfile(
        serial=all(rows),
        inverse_serial=all(cols),
        reflexive=all(row >> i & 1 for i, row in enumerate(rows)),
        symmetric=rows == cols,
        transitive=transitive,
    )
