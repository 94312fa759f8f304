"""The degree-n monomial ring under componentwise index addition, truncated
series built from fillings, one-variable polynomials, and the exact
verifiers for the identities the library is about."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import DegreeMismatchError, TooManyPartsError
from .posets import Poset, as_poset
from .rpp import enumerate_column_strict, enumerate_rpp
from .shapes import (
    Partition,
    StandardTableau,
    comaj,
    conjugate,
    enumerate_syt,
    hook_multiset,
    l_stat,
    maj,
    partitions,
)

# Canonical monomial form: a non-decreasing tuple of non-negative indices.
# x_{i_1,...,i_n} stands for the product x_{i_1}...x_{i_n}; the tuple is
# simultaneously the exponent vector of y_1^{i_1}...y_n^{i_n}.
Monomial = tuple[int, ...]


def make_monomial(indices: Iterable[int]) -> Monomial:
    """Validated canonical monomial."""
    m = tuple(int(i) for i in indices)
    for a, b in zip(m, m[1:]):
        if a > b:
            raise ValueError(f"indices not sorted: {m}")
    if m and m[0] < 0:
        raise ValueError(f"negative index in {m}")
    return m


def unit_monomial(n: int) -> Monomial:
    return (0,) * n


def monomial_volume(m: Monomial) -> int:
    return sum(m)


def star(m1: Monomial, m2: Monomial) -> Monomial:
    """Componentwise sum; adding two sorted tuples keeps the result sorted,
    and volumes add."""
    if len(m1) != len(m2):
        raise DegreeMismatchError(f"degrees {len(m1)} and {len(m2)} differ")
    return tuple(a + b for a, b in zip(m1, m2))


def monomial_of_partition(p: Partition, n: int) -> Monomial:
    """Ascending zero-padded index tuple of a partition with at most n parts."""
    if len(p.parts) > n:
        raise TooManyPartsError(f"{p} has more than {n} parts")
    return (0,) * (n - len(p.parts)) + tuple(sorted(p.parts))


class Series:
    """Finite integer combination of degree-n monomials.

    terms maps canonical monomials to non-zero coefficients; when truncation
    is set, every stored volume is at most that bound.
    """

    __slots__ = ("n", "terms", "truncation")

    def __init__(
        self,
        n: int,
        terms: Mapping[Monomial, int],
        truncation: int | None = None,
    ) -> None:
        self.n = n
        self.truncation = truncation
        clean: dict[Monomial, int] = {}
        for m, c in terms.items():
            if c == 0:
                continue
            m = make_monomial(m)
            if len(m) != n:
                raise DegreeMismatchError(f"monomial {m} has degree {len(m)}, not {n}")
            if truncation is not None and sum(m) > truncation:
                raise ValueError(f"monomial {m} exceeds truncation {truncation}")
            clean[m] = int(c)
        self.terms = clean

    def coefficient(self, m: Iterable[int]) -> int:
        return self.terms.get(tuple(m), 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in lexicographic monomial order (the serialization order)."""
        return sorted(self.terms.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None  # mutable dict inside

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"Series(n={self.n}, {len(self.terms)} terms)"

    def to_obj(self) -> dict:
        return {
            "n": self.n,
            "truncation": self.truncation,
            "terms": [
                {"indices": list(m), "coeff": c} for m, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_obj(cls, obj: Mapping) -> "Series":
        terms = {tuple(t["indices"]): t["coeff"] for t in obj["terms"]}
        return cls(obj["n"], terms, obj.get("truncation"))


def series_star(u: Series, v: Series, max_volume: int | None) -> Series:
    """Bilinear extension of the monomial product, discarding every product
    term of volume above the bound."""
    if u.n != v.n:
        raise DegreeMismatchError(f"degrees {u.n} and {v.n} differ")
    out: dict[Monomial, int] = {}
    for m1, c1 in u.terms.items():
        v1 = sum(m1)
        for m2, c2 in v.terms.items():
            if max_volume is not None and v1 + sum(m2) > max_volume:
                continue
            m = star(m1, m2)
            out[m] = out.get(m, 0) + c1 * c2
    return Series(u.n, out, truncation=max_volume)


class UniPoly:
    """Integer polynomial in one variable; coefficients ascending by degree,
    trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]) -> None:
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    def coefficient(self, degree: int) -> int:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return 0

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def shift(self, k: int) -> "UniPoly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return UniPoly((0,) * k + self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            self.coefficient(k) + other.coefficient(k) for k in range(size)
        )

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if not self.coeffs or not other.coeffs:
            return UniPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)})"

    def to_obj(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @staticmethod
    def one() -> "UniPoly":
        return UniPoly((1,))

    @staticmethod
    def one_minus_x_pow(k: int) -> "UniPoly":
        """1 - x^k."""
        return UniPoly((1,) + (0,) * (k - 1) + (-1,))


def bar_schur(target: Poset | Partition, max_volume: int) -> Series:
    """Sum of the monomials of every filling of volume at most max_volume;
    coefficients count the fillings sharing a monomial."""
    poset = as_poset(target)
    terms: dict[Monomial, int] = {}
    for filling in enumerate_rpp(poset, max_volume):
        m = filling.monomial()
        terms[m] = terms.get(m, 0) + 1
    return Series(poset.n, terms, truncation=max_volume)


def schur(shape: Partition, max_entry: int) -> Series:
    """Sum over column-strict fillings with entries at most max_entry: the
    classical Schur polynomial in the variables x_0..x_max_entry."""
    terms: dict[Monomial, int] = {}
    for filling in enumerate_column_strict(shape, max_entry):
        m = filling.monomial()
        terms[m] = terms.get(m, 0) + 1
    return Series(shape.n, terms)


def bar_s_row(n: int, max_volume: int) -> Series:
    """Every sorted degree-n monomial of volume at most max_volume, each with
    coefficient 1."""
    terms: dict[Monomial, int] = {}
    for v in range(max_volume + 1):
        for p in partitions(v, max_parts=n):
            terms[monomial_of_partition(p, n)] = 1
    return Series(n, terms, truncation=max_volume)


def principal_specialization(u: Series) -> UniPoly:
    """Substitute x_i by x^i: each monomial contributes its coefficient at
    degree equal to its volume."""
    by_volume: dict[int, int] = {}
    for m, c in u.terms.items():
        v = sum(m)
        by_volume[v] = by_volume.get(v, 0) + c
    if not by_volume:
        return UniPoly(())
    coeffs = [0] * (max(by_volume) + 1)
    for v, c in by_volume.items():
        coeffs[v] = c
    return UniPoly(coeffs)


@dataclass(frozen=True)
class SeriesMismatch:
    """First monomial (lexicographically) whose coefficients differ."""

    monomial: Monomial
    lhs: int
    rhs: int


def first_series_mismatch(u: Series, v: Series) -> SeriesMismatch | None:
    if u.n != v.n:
        raise DegreeMismatchError(f"degrees {u.n} and {v.n} differ")
    for m in sorted(set(u.terms) | set(v.terms)):
        cu, cv = u.terms.get(m, 0), v.terms.get(m, 0)
        if cu != cv:
            return SeriesMismatch(m, cu, cv)
    return None


@dataclass(frozen=True)
class PolyMismatch:
    """First degree at which two one-variable polynomials differ."""

    label: str
    degree: int
    lhs: int
    rhs: int


def first_poly_mismatch(label: str, u: UniPoly, v: UniPoly) -> PolyMismatch | None:
    for k in range(max(len(u.coeffs), len(v.coeffs))):
        if u.coefficient(k) != v.coefficient(k):
            return PolyMismatch(label, k, u.coefficient(k), v.coefficient(k))
    return None


@dataclass(frozen=True)
class SymmetryWitness:
    """A monomial whose coefficient changes under the swap x_t <-> x_{t+1}."""

    swap_index: int
    monomial: Monomial
    coefficient: int
    swapped_monomial: Monomial
    swapped_coefficient: int


def swap_adjacent(m: Monomial, t: int) -> Monomial:
    """Exchange the indices t and t+1 inside the monomial, re-sorting."""
    return tuple(
        sorted(t + 1 if i == t else t if i == t + 1 else i for i in m)
    )


def symmetry_witness(u: Series, t: int) -> SymmetryWitness | None:
    """First monomial (lex) violating invariance under x_t <-> x_{t+1}.

    Pairs whose swapped volume exceeds the truncation are skipped, so a
    truncated series is never blamed for its own cutoff.
    """
    for m in sorted(u.terms):
        ms = swap_adjacent(m, t)
        if u.truncation is not None and sum(ms) > u.truncation:
            continue
        c, cs = u.terms[m], u.terms.get(ms, 0)
        if c != cs:
            return SymmetryWitness(t, m, c, ms, cs)
    return None


def identity_01_report(
    target: Poset | Partition,
    p_ext=None,
    max_volume: int | None = None,
) -> SeriesMismatch | None:
    """Factorization check, truncated at the volume bound: the all-fillings
    series must equal the pedestal polynomial star-multiplied with the full
    monomial series.  Defaults: canonical extension, bound 2n."""
    from .pedestal import pedestal_polynomial
    from .posets import canonical_extension

    poset = as_poset(target)
    if p_ext is None:
        p_ext = canonical_extension(poset)
    if max_volume is None:
        max_volume = 2 * poset.n
    lhs = bar_schur(poset, max_volume)
    rhs = series_star(
        pedestal_polynomial(p_ext), bar_s_row(poset.n, max_volume), max_volume
    )
    return first_series_mismatch(lhs, rhs)


def verify_identity_01(
    target: Poset | Partition,
    p_ext=None,
    max_volume: int | None = None,
) -> bool:
    return identity_01_report(target, p_ext, max_volume) is None


def identity_04_report(shape: Partition) -> PolyMismatch | None:
    """Hook-product check: the volume generating polynomial of the pedestals
    times the product of (1 - x^hook) must equal (1-x)(1-x^2)...(1-x^n)."""
    from .pedestal import pi_poly

    lhs = pi_poly(shape)
    for h in hook_multiset(shape):
        lhs = lhs * UniPoly.one_minus_x_pow(h)
    rhs = UniPoly.one()
    for k in range(1, shape.n + 1):
        rhs = rhs * UniPoly.one_minus_x_pow(k)
    return first_poly_mismatch("hook-product", lhs, rhs)


def verify_identity_04(shape: Partition) -> bool:
    return identity_04_report(shape) is None


def maj_comaj_report(shape: Partition) -> PolyMismatch | None:
    """Descent-statistic check: the maj and comaj generating polynomials over
    all standard tableaux must both equal x^l times the pedestal-volume
    polynomial, where l is the row-weight statistic."""
    from .pedestal import pi_poly

    target = pi_poly(shape).shift(l_stat(shape))
    maj_counts: dict[int, int] = {}
    comaj_counts: dict[int, int] = {}
    for tab in enumerate_syt(shape):
        maj_counts[maj(tab)] = maj_counts.get(maj(tab), 0) + 1
        comaj_counts[comaj(tab)] = comaj_counts.get(comaj(tab), 0) + 1
    maj_poly = _poly_from_counts(maj_counts)
    comaj_poly = _poly_from_counts(comaj_counts)
    mismatch = first_poly_mismatch("maj", maj_poly, target)
    if mismatch is not None:
        return mismatch
    return first_poly_mismatch("comaj", comaj_poly, target)


def verify_maj_comaj(shape: Partition) -> bool:
    return maj_comaj_report(shape) is None


def _poly_from_counts(counts: Mapping[int, int]) -> UniPoly:
    if not counts:
        return UniPoly(())
    coeffs = [0] * (max(counts) + 1)
    for k, c in counts.items():
        coeffs[k] = c
    return UniPoly(coeffs)


@dataclass(frozen=True)
class FamilyCandidate:
    """A descent statistic viewed as an integer function on the standard
    tableaux, and whether some choice of base extension realizes it as a
    pedestal-volume profile."""

    name: str
    values: tuple[int, ...]
    member: bool
    matching_tableau: StandardTableau | None


@dataclass(frozen=True)
class FamilyReport:
    shape: Partition
    tableau_count: int
    family: tuple[tuple[int, ...], ...]
    candidates: tuple[FamilyCandidate, ...]

    @property
    def all_outside(self) -> bool:
        return not any(c.member for c in self.candidates)


def family_membership_check(shape: Partition) -> FamilyReport:
    """Pedestal-volume profiles of every base extension, versus the four
    descent-statistic candidates.

    A profile is the tuple, indexed by the standard tableaux in canonical
    enumeration order, of the pedestal volume each tableau gets from a fixed
    base extension.  The candidates are maj and comaj (shifted down by the
    row-weight statistic) and their pullbacks through transposition (shifted
    by the conjugate shape's row-weight statistic).
    """
    from .pedestal import pedestal
    from .posets import extension_of_tableau

    tabs = list(enumerate_syt(shape))
    exts = [extension_of_tableau(t) for t in tabs]
    family_map: dict[tuple[int, ...], StandardTableau] = {}
    for base_tab, base_ext in zip(tabs, exts):
        profile = tuple(pedestal(base_ext, q).rpp.volume for q in exts)
        family_map.setdefault(profile, base_tab)

    shift = l_stat(shape)
    conj_shift = l_stat(conjugate(shape))
    raw = [
        ("maj", tuple(maj(t) - shift for t in tabs)),
        ("comaj", tuple(comaj(t) - shift for t in tabs)),
        ("maj_transpose", tuple(maj(t.transpose()) - conj_shift for t in tabs)),
        ("comaj_transpose", tuple(comaj(t.transpose()) - conj_shift for t in tabs)),
    ]
    candidates = tuple(
        FamilyCandidate(name, values, values in family_map, family_map.get(values))
        for name, values in raw
    )
    return FamilyReport(shape, len(tabs), tuple(sorted(family_map)), candidates)
