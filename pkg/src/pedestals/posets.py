"""Finite posets with a precomputed closure, and their linear extensions.

Young diagrams embed through young_poset: nodes ordered componentwise, so
standard tableaux and linear extensions are two views of the same object.
"""

from __future__ import annotations

import random
import string
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import (
    CycleError,
    InvalidExtensionError,
    ShapeMismatchError,
    UnknownLabelError,
)
from .shapes import Partition, StandardTableau

Label = Hashable


class Poset:
    """Strict partial order on a finite labelled element list.

    The strict order is stored densely, one bitmask per element (bit j of
    _above[i] set iff element i precedes element j), so order queries are
    O(1) and validation loops are cheap at desk scale.  Equality and hashing
    look at the element list and the generating cover pairs only; the
    optional shape is bookkeeping for serialization.
    """

    __slots__ = ("elements", "covers", "shape", "_index", "_above", "_below",
                 "_succs", "_preds", "_cover_idx")

    def __init__(
        self,
        elements: Iterable[Label],
        covers: Iterable[tuple[Label, Label]],
        shape: Partition | None = None,
    ) -> None:
        self.elements = tuple(elements)
        self.shape = shape
        index: dict[Label, int] = {}
        for i, e in enumerate(self.elements):
            if e in index:
                raise ValueError(f"duplicate element label {e!r}")
            index[e] = i
        self._index = index
        n = len(self.elements)

        succs: list[list[int]] = [[] for _ in range(n)]
        preds: list[list[int]] = [[] for _ in range(n)]
        pairs: set[tuple[int, int]] = set()
        for a, b in covers:
            if a not in index:
                raise UnknownLabelError(f"cover references unknown element {a!r}")
            if b not in index:
                raise UnknownLabelError(f"cover references unknown element {b!r}")
            ia, ib = index[a], index[b]
            if ia == ib:
                raise CycleError(f"self-cover on {a!r}")
            if (ia, ib) in pairs:
                continue
            pairs.add((ia, ib))
            succs[ia].append(ib)
            preds[ib].append(ia)
        self._cover_idx = tuple(sorted(pairs))
        self.covers = tuple(
            (self.elements[ia], self.elements[ib]) for ia, ib in self._cover_idx
        )
        self._succs = tuple(tuple(sorted(s)) for s in succs)
        self._preds = tuple(tuple(sorted(p)) for p in preds)

        indeg = [len(p) for p in self._preds]
        topo: list[int] = []
        avail = [i for i in range(n) if indeg[i] == 0]
        while avail:
            i = avail.pop()
            topo.append(i)
            for s in self._succs[i]:
                indeg[s] -= 1
                if indeg[s] == 0:
                    avail.append(s)
        if len(topo) < n:
            raise CycleError("covers contain a directed cycle")

        above = [0] * n
        for i in reversed(topo):
            mask = 0
            for s in self._succs[i]:
                mask |= (1 << s) | above[s]
            above[i] = mask
        below = [0] * n
        for i in topo:
            mask = 0
            for p in self._preds[i]:
                mask |= (1 << p) | below[p]
            below[i] = mask
        self._above = tuple(above)
        self._below = tuple(below)

    @property
    def n(self) -> int:
        return len(self.elements)

    def index_of(self, label: Label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(f"{label!r} is not an element") from None

    def less(self, a: Label, b: Label) -> bool:
        """Strict order: does a precede b?"""
        return (self._above[self.index_of(a)] >> self.index_of(b)) & 1 == 1

    def less_idx(self, i: int, j: int) -> bool:
        return (self._above[i] >> j) & 1 == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self.covers == other.covers

    def __hash__(self) -> int:
        return hash((self.elements, self.covers))

    def __repr__(self) -> str:
        return f"Poset({self.n} elements, {len(self.covers)} covers)"


def poset_from_covers(
    elements: Iterable[Label], covers: Iterable[tuple[Label, Label]]
) -> Poset:
    """Validated poset with the closure of the given cover pairs."""
    return Poset(elements, covers)


def young_poset(shape: Partition) -> Poset:
    """Componentwise order on the diagram: (i,j) is covered by (i,j+1) and
    (i+1,j) whenever those nodes lie in the diagram.  Elements are listed in
    row-major order."""
    cells = tuple(shape.cells())
    covers = []
    for (i, j) in cells:
        if (i, j + 1) in shape:
            covers.append(((i, j), (i, j + 1)))
        if (i + 1, j) in shape:
            covers.append(((i, j), (i + 1, j)))
    return Poset(cells, covers, shape=shape)


class LinearExtension:
    """Permutation of the poset's elements compatible with the poset order."""

    __slots__ = ("poset", "order", "_rank")

    def __init__(self, poset: Poset, order: Sequence[Label]) -> None:
        self.poset = poset
        self.order = tuple(order)
        if len(self.order) != poset.n:
            raise InvalidExtensionError(
                f"order lists {len(self.order)} elements, poset has {poset.n}"
            )
        rank: dict[Label, int] = {}
        for k, e in enumerate(self.order):
            if e not in poset._index or e in rank:
                raise InvalidExtensionError(
                    "order is not a permutation of the poset's elements"
                )
            rank[e] = k
        self._rank = rank
        placed = 0
        for e in self.order:
            i = poset.index_of(e)
            if poset._below[i] & ~placed:
                raise InvalidExtensionError(
                    f"{e!r} appears before an element below it"
                )
            placed |= 1 << i

    def rank_of(self, label: Label) -> int:
        """0-based position of the label in the order."""
        return self._rank[label]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearExtension):
            return NotImplemented
        return self.poset == other.poset and self.order == other.order

    def __hash__(self) -> int:
        return hash((self.poset, self.order))

    def __repr__(self) -> str:
        return f"LinearExtension({list(self.order)})"


def linear_extensions(poset: Poset) -> Iterator[LinearExtension]:
    """Every linear extension exactly once.

    Backtracks over the currently minimal elements, trying candidates in
    element-list order, so emission is lexicographic on element indices.
    """
    n = poset.n
    indeg = [len(p) for p in poset._preds]
    placed = [False] * n
    prefix: list[int] = []

    def rec() -> Iterator[LinearExtension]:
        if len(prefix) == n:
            yield LinearExtension(poset, tuple(poset.elements[i] for i in prefix))
            return
        for i in range(n):
            if placed[i] or indeg[i] != 0:
                continue
            placed[i] = True
            prefix.append(i)
            for s in poset._succs[i]:
                indeg[s] -= 1
            yield from rec()
            for s in poset._succs[i]:
                indeg[s] += 1
            prefix.pop()
            placed[i] = False

    yield from rec()


def canonical_extension(poset: Poset) -> LinearExtension:
    """First linear extension in enumeration order.

    For a Young-diagram poset this is the row-superstandard filling (rows
    filled left to right, top to bottom).
    """
    return next(linear_extensions(poset))


def extension_of_tableau(tab: StandardTableau) -> LinearExtension:
    """The linear extension of the diagram order that ranks each node by its
    tableau entry."""
    seq: list[Label] = [()] * tab.shape.n
    for i, row in enumerate(tab.rows, start=1):
        for j, v in enumerate(row, start=1):
            seq[v - 1] = (i, j)
    return LinearExtension(young_poset(tab.shape), tuple(seq))


def tableau_of_extension(shape: Partition, ext: LinearExtension) -> StandardTableau:
    """Inverse of extension_of_tableau; the node of rank k receives entry k+1."""
    if ext.poset != young_poset(shape):
        raise ShapeMismatchError(f"extension is not over the diagram order of {shape}")
    rows = tuple(
        tuple(ext.rank_of((i, j)) + 1 for j in range(1, width + 1))
        for i, width in enumerate(shape.parts, start=1)
    )
    return StandardTableau(shape, rows)


def as_poset(target: Poset | Partition) -> Poset:
    """Pass posets through; coerce a Partition to its diagram order."""
    if isinstance(target, Poset):
        return target
    if isinstance(target, Partition):
        return young_poset(target)
    raise TypeError(f"expected Poset or Partition, got {type(target).__name__}")


def random_connected_posets(count: int, max_size: int, seed: int) -> list[Poset]:
    """Deterministic corpus of distinct connected posets.

    Each poset has 2..max_size elements labelled 'a', 'b', ...; a random DAG
    on a shuffled topological order is transitively closed, reduced to its
    covers, and kept when the cover graph is connected and not seen before.
    """
    rng = random.Random(seed)
    out: list[Poset] = []
    seen: set[tuple[int, tuple[tuple[int, int], ...]]] = set()
    while len(out) < count:
        n = rng.randint(2, max_size)
        labels = tuple(string.ascii_lowercase[:n])
        topo = list(range(n))
        rng.shuffle(topo)
        density = rng.uniform(0.25, 0.65)
        above = [0] * n
        for a in range(n - 1, -1, -1):
            for b in range(a + 1, n):
                if rng.random() < density:
                    above[topo[a]] |= (1 << topo[b]) | above[topo[b]]
        covers = []
        for i in range(n):
            for j in range(n):
                if not (above[i] >> j) & 1:
                    continue
                if any((above[i] >> k) & 1 and (above[k] >> j) & 1 for k in range(n)):
                    continue
                covers.append((labels[i], labels[j]))
        adj = [0] * n
        for a, b in covers:
            ia, ib = labels.index(a), labels.index(b)
            adj[ia] |= 1 << ib
            adj[ib] |= 1 << ia
        component = 1
        frontier = [0]
        while frontier:
            i = frontier.pop()
            fresh = adj[i] & ~component
            for j in range(n):
                if (fresh >> j) & 1:
                    component |= 1 << j
                    frontier.append(j)
        if component != (1 << n) - 1:
            continue
        signature = (n, tuple(sorted((labels.index(a), labels.index(b)) for a, b in covers)))
        if signature in seen:
            continue
        seen.add(signature)
        out.append(Poset(labels, covers))
    return out
