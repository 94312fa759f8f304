"""Integer partitions, Young diagrams, standard Young tableaux, and the
descent statistics maj and comaj."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod
from typing import Iterable, Iterator

from .errors import InvalidTableauError, NegativePartError, NonMonotoneError

# A node of a Young diagram: (row, column), both 1-based.
Node = tuple[int, int]


@dataclass(frozen=True)
class Partition:
    """Integer partition with non-increasing positive parts.

    Identified with its Young diagram, the node set
    {(i, j) : 1 <= i <= len(parts), 1 <= j <= parts[i-1]}.
    Trailing zero parts are stripped on construction.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        for p in parts:
            if p < 0:
                raise NegativePartError(f"negative part {p}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise NonMonotoneError(f"parts increase from {a} to {b}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        """Total number of nodes."""
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __contains__(self, node: Node) -> bool:
        i, j = node
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    def cells(self) -> Iterator[Node]:
        """Nodes in row-major order: row 1 left to right, then row 2, and so on."""
        for i, width in enumerate(self.parts, start=1):
            for j in range(1, width + 1):
                yield (i, j)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate a sequence of parts; trailing zeros are stripped."""
    return Partition(tuple(parts))


def conjugate(shape: Partition) -> Partition:
    """Transposed diagram: column lengths become the parts."""
    width = shape.parts[0] if shape.parts else 0
    return Partition(
        tuple(sum(1 for p in shape.parts if p >= j) for j in range(1, width + 1))
    )


def hook_multiset(shape: Partition) -> tuple[int, ...]:
    """Hook lengths of all nodes (arm + leg + 1), sorted non-increasingly."""
    conj = conjugate(shape).parts
    hooks = [
        shape.parts[i - 1] - j + conj[j - 1] - i + 1 for (i, j) in shape.cells()
    ]
    return tuple(sorted(hooks, reverse=True))


def l_stat(shape: Partition) -> int:
    """Row-weight statistic: the sum of (i - 1) over all nodes (i, j)."""
    return sum((i - 1) * p for i, p in enumerate(shape.parts, start=1))


@dataclass(frozen=True)
class StandardTableau:
    """Bijective filling of a Young diagram by 1..n, increasing along every
    row and down every column."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if tuple(len(row) for row in rows) != self.shape.parts:
            raise InvalidTableauError(
                f"row lengths {[len(r) for r in rows]} do not match shape {self.shape}"
            )
        n = self.shape.n
        if sorted(v for row in rows for v in row) != list(range(1, n + 1)):
            raise InvalidTableauError("entries are not a bijection onto 1..n")
        for row in rows:
            for a, b in zip(row, row[1:]):
                if a >= b:
                    raise InvalidTableauError(f"row entries do not increase: {row}")
        for i in range(1, len(rows)):
            for j in range(len(rows[i])):
                if rows[i - 1][j] >= rows[i][j]:
                    raise InvalidTableauError(
                        f"column {j + 1} does not increase between rows {i} and {i + 1}"
                    )

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> StandardTableau:
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        return cls(make_partition(len(row) for row in rows), rows)

    def entry(self, i: int, j: int) -> int:
        """Value at node (i, j), 1-based."""
        return self.rows[i - 1][j - 1]

    def row_of(self, value: int) -> int:
        """1-based row index containing the given value."""
        for i, row in enumerate(self.rows, start=1):
            if value in row:
                return i
        raise InvalidTableauError(f"value {value} not present")

    def reading_word(self) -> tuple[int, ...]:
        """Entries read row by row, top to bottom."""
        return tuple(v for row in self.rows for v in row)

    def transpose(self) -> StandardTableau:
        """The reflected tableau, a standard tableau of the conjugate shape."""
        conj = conjugate(self.shape)
        rows = tuple(
            tuple(self.rows[i][j] for i in range(height))
            for j, height in enumerate(conj.parts)
        )
        return StandardTableau(conj, rows)

    def __str__(self) -> str:
        return " | ".join(" ".join(map(str, row)) for row in self.rows)


def descents(tab: StandardTableau) -> frozenset[int]:
    """Positions i such that i + 1 sits in a strictly lower row than i."""
    row = {v: i for i, r in enumerate(tab.rows, start=1) for v in r}
    n = tab.shape.n
    return frozenset(i for i in range(1, n) if row[i + 1] > row[i])


def maj(tab: StandardTableau) -> int:
    """Sum of the descent positions."""
    return sum(descents(tab))


def comaj(tab: StandardTableau) -> int:
    """Sum of n - i over the descent positions i."""
    n = tab.shape.n
    return sum(n - i for i in descents(tab))


def enumerate_syt(shape: Partition) -> Iterator[StandardTableau]:
    """Every standard tableau of the shape exactly once.

    Emission order is lexicographic on the row-reading word: nodes are filled
    in row-major order and candidate values are tried in increasing order.
    """
    parts = shape.parts
    n = shape.n
    cells = tuple(shape.cells())
    grid = [[0] * p for p in parts]
    used = [False] * (n + 1)

    def fill(pos: int) -> Iterator[StandardTableau]:
        if pos == n:
            yield StandardTableau(shape, tuple(tuple(row) for row in grid))
            return
        i, j = cells[pos]
        lo = 1
        if j > 1:
            lo = grid[i - 1][j - 2] + 1
        if i > 1:
            lo = max(lo, grid[i - 2][j - 1] + 1)
        for v in range(lo, n + 1):
            if used[v]:
                continue
            used[v] = True
            grid[i - 1][j - 1] = v
            yield from fill(pos + 1)
            used[v] = False
        grid[i - 1][j - 1] = 0

    yield from fill(0)


def syt_count(shape: Partition) -> int:
    """Number of standard tableaux, n! divided by the product of the hooks.

    Exact integer arithmetic throughout; the division is always exact.
    """
    return factorial(shape.n) // prod(hook_multiset(shape))


def partitions(n: int, max_parts: int | None = None) -> Iterator[Partition]:
    """All partitions of n (with at most max_parts parts when given), in
    descending lexicographic order: (n,) first, (1, ..., 1) last."""
    slots = n if max_parts is None else max_parts

    def rec(remaining: int, largest: int, room: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if room == 0 or largest == 0:
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first, room - 1):
                yield (first,) + rest

    for parts in rec(n, n, slots):
        yield Partition(parts)
