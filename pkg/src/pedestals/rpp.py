"""Reverse plane partitions: non-negative fillings of a poset that never
decrease along the order, with bounded enumeration and pointwise arithmetic."""

from __future__ import annotations

from typing import Iterator, Mapping, Sequence

from .errors import (
    MissingValueError,
    NegativeEntryError,
    NotMonotoneError,
    PosetMismatchError,
    ShapeMismatchError,
    UnknownLabelError,
)
from .posets import Label, Poset, as_poset, canonical_extension, young_poset
from .shapes import Partition


class ReversePlanePartition:
    """Filling of a poset by non-negative integers, non-decreasing along the
    order.  Values are stored densely, aligned with poset.elements."""

    __slots__ = ("poset", "values")

    def __init__(self, poset: Poset, values: Sequence[int]) -> None:
        self.poset = poset
        self.values = tuple(int(v) for v in values)
        if len(self.values) != poset.n:
            raise MissingValueError(
                f"{len(self.values)} values for {poset.n} elements"
            )
        for v in self.values:
            if v < 0:
                raise NegativeEntryError(f"negative entry {v}")
        for ia, ib in poset._cover_idx:
            if self.values[ia] > self.values[ib]:
                raise NotMonotoneError(
                    f"value decreases along {poset.elements[ia]!r} < {poset.elements[ib]!r}"
                )

    @property
    def volume(self) -> int:
        return sum(self.values)

    def value_at(self, label: Label) -> int:
        return self.values[self.poset.index_of(label)]

    def monomial(self) -> tuple[int, ...]:
        """Sorted value tuple, the index tuple this filling contributes to a series."""
        return tuple(sorted(self.values))

    def rows(self) -> tuple[tuple[int, ...], ...]:
        """Row-array view; only available over a Young-diagram poset."""
        shape = self.poset.shape
        if shape is None:
            raise ShapeMismatchError("filling is not over a Young diagram")
        out = []
        pos = 0
        for width in shape.parts:
            out.append(self.values[pos:pos + width])
            pos += width
        return tuple(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ReversePlanePartition):
            return NotImplemented
        return self.poset == other.poset and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.poset, self.values))

    def __repr__(self) -> str:
        return f"ReversePlanePartition({list(self.values)})"


def make_rpp(
    poset: Poset, values: Mapping[Label, int] | Sequence[int]
) -> ReversePlanePartition:
    """Validated filling from a label-to-value mapping or a dense sequence."""
    if isinstance(values, Mapping):
        for label in values:
            if label not in poset._index:
                raise UnknownLabelError(f"{label!r} is not an element")
        try:
            dense = tuple(values[e] for e in poset.elements)
        except KeyError as missing:
            raise MissingValueError(f"no value for element {missing}") from None
        return ReversePlanePartition(poset, dense)
    return ReversePlanePartition(poset, tuple(values))


def rpp_from_rows(
    shape: Partition, rows: Sequence[Sequence[int]]
) -> ReversePlanePartition:
    """Filling of a Young diagram given as row arrays."""
    rows = tuple(tuple(row) for row in rows)
    if tuple(len(row) for row in rows) != shape.parts:
        raise MissingValueError(f"row lengths do not match shape {shape}")
    return ReversePlanePartition(
        young_poset(shape), tuple(v for row in rows for v in row)
    )


def volume(filling: ReversePlanePartition) -> int:
    """Sum of all entries."""
    return filling.volume


def enumerate_rpp(
    target: Poset | Partition, max_volume: int
) -> Iterator[ReversePlanePartition]:
    """Every filling of volume at most max_volume, exactly once.

    DFS along the canonical linear extension: each element ranges from the
    max of its already-assigned lower covers up to the remaining volume
    budget, so emission is lexicographic on the value sequence in extension
    order.
    """
    poset = as_poset(target)
    if max_volume < 0:
        return
    n = poset.n
    ext = canonical_extension(poset)
    idx_order = [poset.index_of(e) for e in ext.order]
    values = [0] * n

    def rec(k: int, used: int) -> Iterator[ReversePlanePartition]:
        if k == n:
            yield ReversePlanePartition(poset, tuple(values))
            return
        i = idx_order[k]
        lo = 0
        for p in poset._preds[i]:
            if values[p] > lo:
                lo = values[p]
        for v in range(lo, max_volume - used + 1):
            values[i] = v
            yield from rec(k + 1, used + v)
        values[i] = 0

    yield from rec(0, 0)


def enumerate_column_strict(
    shape: Partition, max_entry: int
) -> Iterator[ReversePlanePartition]:
    """Fillings with entries in {0..max_entry}, weakly increasing along rows
    and strictly increasing down columns; row-major DFS, lexicographic
    emission."""
    if max_entry < 0:
        return
    poset = young_poset(shape)
    parts = shape.parts
    cells = tuple(shape.cells())
    n = len(cells)
    grid = [[0] * p for p in parts]

    def rec(pos: int) -> Iterator[ReversePlanePartition]:
        if pos == n:
            yield ReversePlanePartition(
                poset, tuple(v for row in grid for v in row)
            )
            return
        i, j = cells[pos]
        lo = 0
        if j > 1:
            lo = grid[i - 1][j - 2]
        if i > 1:
            lo = max(lo, grid[i - 2][j - 1] + 1)
        for v in range(lo, max_entry + 1):
            grid[i - 1][j - 1] = v
            yield from rec(pos + 1)
        grid[i - 1][j - 1] = 0

    yield from rec(0)


def pi_sort(filling: ReversePlanePartition) -> Partition:
    """All entries listed in non-increasing order, zeros dropped: a partition
    of the volume with at most n parts."""
    return Partition(tuple(sorted(filling.values, reverse=True)))


def _require_same_poset(a: ReversePlanePartition, b: ReversePlanePartition) -> None:
    if a.poset != b.poset:
        raise PosetMismatchError("fillings live over different posets")


def rpp_sub(
    a: ReversePlanePartition, b: ReversePlanePartition
) -> ReversePlanePartition:
    """Pointwise difference, validated as a filling.

    Raises NegativeEntryError or NotMonotoneError when the result is not a
    filling; on inputs produced by the splitting map this signals a bug, not
    a user error.
    """
    _require_same_poset(a, b)
    diff = [x - y for x, y in zip(a.values, b.values)]
    for d in diff:
        if d < 0:
            raise NegativeEntryError("subtraction went below zero")
    return ReversePlanePartition(a.poset, diff)


def rpp_add(
    a: ReversePlanePartition, b: ReversePlanePartition
) -> ReversePlanePartition:
    """Pointwise sum (always a valid filling for valid inputs)."""
    _require_same_poset(a, b)
    return ReversePlanePartition(
        a.poset, tuple(x + y for x, y in zip(a.values, b.values))
    )
