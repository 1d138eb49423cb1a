"""Relation enumeration and a numpy view over a batch of relations.

A batch stores each relation as an ``(m, n)`` array of successor row masks.
Everything else (neighborhoods, approximation tables, property flags) is
derived lazily and vectorised over the batch.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from typing import Iterator, Sequence

import numpy as np

from ..core import BinaryRelation, Universe, canonical_key, integer_universe
from ..errors import SizeOutOfRange

EXHAUSTIVE_MAX_N = 4
BATCH_MAX_N = 8

# Kind axis order used by every array in this module.
S, P, AND, OR = 0, 1, 2, 3


def enumerate_relations(n: int) -> Iterator[BinaryRelation]:
    """All 2^(n²) relations on {1..n} in increasing row-major code order."""
    if not 1 <= n <= EXHAUSTIVE_MAX_N:
        raise SizeOutOfRange(f"exhaustive enumeration needs 1 <= n <= {EXHAUSTIVE_MAX_N}, got {n}")
    u = integer_universe(n)
    for code in range(1 << (n * n)):
        yield BinaryRelation.decode(u, code)


@lru_cache(maxsize=None)
def canonical_order(n: int) -> np.ndarray:
    """Subset masks of an n-element universe in canonical order."""
    return np.array(sorted(range(1 << n), key=canonical_key), dtype=np.int64)


@lru_cache(maxsize=None)
def canonical_pairs(n: int) -> tuple[np.ndarray, np.ndarray]:
    """(X, Y) masks for all subset pairs, lexicographic in canonical order."""
    order = canonical_order(n)
    xs = np.repeat(order, len(order))
    ys = np.tile(order, len(order))
    return xs, ys


def rows_from_codes(n: int, codes: np.ndarray) -> np.ndarray:
    full = (1 << n) - 1
    codes = np.asarray(codes, dtype=np.int64)
    return np.stack([(codes >> (i * n)) & full for i in range(n)], axis=1)


def codes_from_rows(n: int, rows: np.ndarray) -> list[int]:
    return [sum(int(r) << (i * n) for i, r in enumerate(row)) for row in rows]


def subset_of(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a & ~b) == 0


class RelationBatch:
    """m relations on the universe {1..n}, vectorised.

    ``index`` holds each relation's position in the overall stream (its code
    for exhaustive sweeps, its sample number for sampled ones).
    """

    def __init__(self, n: int, rows: np.ndarray, index: Sequence[int]) -> None:
        if not 1 <= n <= BATCH_MAX_N:
            raise SizeOutOfRange(f"batched checks need 1 <= n <= {BATCH_MAX_N}, got {n}")
        self.n = n
        self.rows = np.asarray(rows, dtype=np.int64).reshape(-1, n)
        self.index = list(index)
        self.m = len(self.rows)
        self.full = (1 << n) - 1
        self.universe: Universe = integer_universe(n)

    @classmethod
    def from_code_range(cls, n: int, start: int, stop: int) -> RelationBatch:
        codes = np.arange(start, stop, dtype=np.int64)
        return cls(n, rows_from_codes(n, codes), range(start, stop))

    @classmethod
    def from_relations(cls, relations: Sequence[BinaryRelation]) -> RelationBatch:
        n = relations[0].n
        rows = np.array([r.rows for r in relations], dtype=np.int64).reshape(-1, n)
        return cls(n, rows, range(len(relations)))

    def relation(self, i: int) -> BinaryRelation:
        return BinaryRelation(self.universe, tuple(int(r) for r in self.rows[i]))

    def code(self, i: int) -> int:
        return sum(int(r) << (k * self.n) for k, r in enumerate(self.rows[i]))

    # -- neighborhoods ---------------------------------------------------

    @cached_property
    def cols(self) -> np.ndarray:
        cols = np.zeros_like(self.rows)
        for i in range(self.n):
            for j in range(self.n):
                cols[:, j] |= ((self.rows[:, i] >> j) & 1) << i
        return cols

    @cached_property
    def nbhd(self) -> np.ndarray:
        """(m, 4, n): neighborhood mask per kind and element."""
        r, c = self.rows, self.cols
        return np.stack([r, c, r & c, r | c], axis=1)

    @cached_property
    def cover(self) -> np.ndarray:
        """(m, 4): whether each neighborhood family covers the universe."""
        return np.bitwise_or.reduce(self.nbhd, axis=2) == self.full

    # -- relation properties ---------------------------------------------

    @cached_property
    def serial(self) -> np.ndarray:
        return (self.rows != 0).all(axis=1)

    @cached_property
    def inverse_serial(self) -> np.ndarray:
        return (self.cols != 0).all(axis=1)

    @cached_property
    def reflexive(self) -> np.ndarray:
        diag = np.stack([(self.rows[:, i] >> i) & 1 for i in range(self.n)], axis=1)
        return diag.all(axis=1).astype(bool)

    @cached_property
    def symmetric(self) -> np.ndarray:
        return (self.rows == self.cols).all(axis=1)

    @cached_property
    def transitive(self) -> np.ndarray:
        two_step = np.zeros_like(self.rows)
        for y in range(self.n):
            has_y = ((self.rows >> y) & 1).astype(bool)
            two_step |= np.where(has_y, self.rows[:, y : y + 1], 0)
        return subset_of(two_step, self.rows).all(axis=1)

    @property
    def preorder(self) -> np.ndarray:
        return self.reflexive & self.transitive

    @property
    def tolerance(self) -> np.ndarray:
        return self.reflexive & self.symmetric

    @property
    def equivalence(self) -> np.ndarray:
        return self.reflexive & self.symmetric & self.transitive

    # -- approximations ----------------------------------------------------

    @cached_property
    def lower(self) -> np.ndarray:
        """(m, 4, 2^n): lower approximation, last axis indexed by subset mask."""
        xs = np.arange(1 << self.n, dtype=np.int64)
        outside = self.full & ~xs
        out = np.zeros((self.m, 4, 1 << self.n), dtype=np.int64)
        for i in range(self.n):
            inside = (self.nbhd[:, :, i, None] & outside) == 0
            out |= inside.astype(np.int64) << i
        return out

    @cached_property
    def upper(self) -> np.ndarray:
        """(m, 4, 2^n): upper approximation, last axis indexed by subset mask."""
        xs = np.arange(1 << self.n, dtype=np.int64)
        out = np.zeros((self.m, 4, 1 << self.n), dtype=np.int64)
        for i in range(self.n):
            meets = (self.nbhd[:, :, i, None] & xs) != 0
            out |= meets.astype(np.int64) << i
        return out

    def lower_at(self, kind: int, masks: np.ndarray) -> np.ndarray:
        """Lower approximation of per-relation (m, W) or shared (W,) masks."""
        return _gather(self.lower[:, kind, :], masks)

    def upper_at(self, kind: int, masks: np.ndarray) -> np.ndarray:
        return _gather(self.upper[:, kind, :], masks)


def _gather(table: np.ndarray, masks: np.ndarray) -> np.ndarray:
    if masks.ndim == 1:
        return table[:, masks]
    return np.take_along_axis(table, masks, axis=1)
