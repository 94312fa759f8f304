"""Pedestals of pairs of linear extensions, the pedestal polynomial, and the
splitting of an arbitrary filling into a pedestal plus a partition.

Given a base extension P and a comparison extension Q over the same poset,
list the elements in Q-order.  An element is a disagreement node when its
immediate successor in Q-order comes earlier in P-order.  The pedestal of
(P, Q) assigns to the k-th element of Q-order the number of disagreement
nodes strictly before position k; it is a valid filling, non-decreasing
along Q-order with steps of 0 or 1, starting at 0.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import PosetMismatchError, TooManyPartsError
from .posets import (
    Label,
    LinearExtension,
    Poset,
    as_poset,
    canonical_extension,
    linear_extensions,
)
from .ring import Series, SeriesMismatch, UniPoly, first_series_mismatch
from .rpp import ReversePlanePartition, pi_sort, rpp_add, rpp_sub
from .shapes import Partition


def _require_same_poset(p_ext: LinearExtension, q_ext: LinearExtension) -> None:
    if p_ext.poset != q_ext.poset:
        raise PosetMismatchError("extensions live over different posets")


def disagreement_nodes(
    p_ext: LinearExtension, q_ext: LinearExtension
) -> tuple[Label, ...]:
    """Elements whose immediate successor in q_ext comes earlier in p_ext,
    listed in q_ext order."""
    _require_same_poset(p_ext, q_ext)
    order = q_ext.order
    return tuple(
        order[k]
        for k in range(len(order) - 1)
        if p_ext.rank_of(order[k + 1]) < p_ext.rank_of(order[k])
    )


@dataclass(frozen=True)
class Pedestal:
    """A filling produced by comparing two extensions, tagged with the pair
    that generated it."""

    rpp: ReversePlanePartition
    p_ext: LinearExtension
    q_ext: LinearExtension

    @property
    def volume(self) -> int:
        return self.rpp.volume

    def monomial(self) -> tuple[int, ...]:
        return self.rpp.monomial()


def pedestal(p_ext: LinearExtension, q_ext: LinearExtension) -> Pedestal:
    """The pedestal of the pair: position k of q_ext receives the count of
    disagreement nodes strictly before it."""
    _require_same_poset(p_ext, q_ext)
    poset = p_ext.poset
    n = poset.n
    order = q_ext.order
    values = [0] * n
    count = 0
    for k, e in enumerate(order):
        values[poset.index_of(e)] = count
        if k + 1 < n and p_ext.rank_of(order[k + 1]) < p_ext.rank_of(e):
            count += 1
    return Pedestal(ReversePlanePartition(poset, values), p_ext, q_ext)


def pedestal_polynomial(p_ext: LinearExtension) -> Series:
    """Sum, over every linear extension of the poset, of the monomial of its
    pedestal relative to the base extension.

    Homogeneous of degree n; the coefficients total the number of linear
    extensions.  The extension stream is consumed one at a time, so memory
    stays proportional to the number of distinct monomials.
    """
    poset = p_ext.poset
    terms: dict[tuple[int, ...], int] = {}
    for q_ext in linear_extensions(poset):
        m = pedestal(p_ext, q_ext).monomial()
        terms[m] = terms.get(m, 0) + 1
    return Series(poset.n, terms)


@dataclass(frozen=True)
class IndependenceMismatch:
    """Two base extensions with different pedestal polynomials."""

    reference: LinearExtension
    other: LinearExtension
    mismatch: SeriesMismatch


def independence_report(poset: Poset, threads: int = 1) -> IndependenceMismatch | None:
    """Compare the pedestal polynomial of every base extension against the
    canonical one; None when they all agree.

    threads > 1 computes the polynomials in a thread pool; results are merged
    in submission order, so the outcome is identical to the sequential run.
    """
    exts = list(linear_extensions(poset))
    if not exts:
        return None
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            polys = list(pool.map(pedestal_polynomial, exts))
    else:
        polys = [pedestal_polynomial(e) for e in exts]
    reference = polys[0]
    for ext, poly in zip(exts[1:], polys[1:]):
        mismatch = first_series_mismatch(reference, poly)
        if mismatch is not None:
            return IndependenceMismatch(exts[0], ext, mismatch)
    return None


def verify_independence(poset: Poset, threads: int = 1) -> bool:
    """True iff the pedestal polynomial is the same for every base extension."""
    return independence_report(poset, threads=threads) is None


def pedestal_set_witness(
    poset: Poset,
) -> tuple[LinearExtension, LinearExtension] | None:
    """Two base extensions whose pedestal SETS differ, if any exist.

    The polynomial never depends on the base extension; the underlying set of
    fillings generally does, and this hunts for a concrete example.
    """
    exts = list(linear_extensions(poset))
    sets = [
        frozenset(pedestal(p, q).rpp.values for q in exts) for p in exts
    ]
    for k in range(1, len(exts)):
        if sets[k] != sets[0]:
            return exts[0], exts[k]
    return None


def pi_poly(target: Poset | Partition) -> UniPoly:
    """Volume generating polynomial of the pedestals of the canonical base
    extension: the coefficient of x^k counts extensions whose pedestal has
    volume k."""
    poset = as_poset(target)
    p_ext = canonical_extension(poset)
    counts: dict[int, int] = {}
    for q_ext in linear_extensions(poset):
        v = pedestal(p_ext, q_ext).volume
        counts[v] = counts.get(v, 0) + 1
    if not counts:
        return UniPoly((1,))
    coeffs = [0] * (max(counts) + 1)
    for v, c in counts.items():
        coeffs[v] = c
    return UniPoly(coeffs)


def tableau_from_rpp(
    p_ext: LinearExtension, filling: ReversePlanePartition
) -> LinearExtension:
    """The extension that sorts elements by value, ties broken by the base
    extension.  Always a linear extension of the poset."""
    if filling.poset != p_ext.poset:
        raise PosetMismatchError("filling lives over a different poset")
    order = sorted(
        p_ext.poset.elements,
        key=lambda e: (filling.value_at(e), p_ext.rank_of(e)),
    )
    return LinearExtension(p_ext.poset, order)


def b_st(
    p_ext: LinearExtension, filling: ReversePlanePartition
) -> tuple[Pedestal, Partition]:
    """Split a filling into the pedestal of its induced extension and the
    partition of the leftover values.

    The difference filling is always valid for genuine inputs, the partition
    has at most n parts, volumes add up, and the filling's monomial is the
    star product of the two pieces' monomials.
    """
    q_ext = tableau_from_rpp(p_ext, filling)
    ped = pedestal(p_ext, q_ext)
    rest = rpp_sub(filling, ped.rpp)
    return ped, pi_sort(rest)


def b_st_inverse(
    p_ext: LinearExtension, q_ext: LinearExtension, mu: Partition
) -> ReversePlanePartition:
    """Rebuild a filling from its pedestal pair and partition.

    The partition is zero-padded to length n and distributed in ascending
    order along q_ext (rank k receives the k-th smallest padded part), then
    added pointwise to the pedestal.  The ascending order is forced: the
    addend must be non-decreasing along q_ext to be a filling and to make
    monomials factor under the star product.
    """
    _require_same_poset(p_ext, q_ext)
    poset = p_ext.poset
    n = poset.n
    if len(mu.parts) > n:
        raise TooManyPartsError(f"{mu} has more than {n} parts")
    padded = (0,) * (n - len(mu.parts)) + tuple(sorted(mu.parts))
    values = [0] * n
    for k, e in enumerate(q_ext.order):
        values[poset.index_of(e)] = padded[k]
    addend = ReversePlanePartition(poset, values)
    return rpp_add(pedestal(p_ext, q_ext).rpp, addend)
