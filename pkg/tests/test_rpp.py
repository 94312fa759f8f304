import pytest
from hypothesis import given, strategies as st

from pedestals import (
    MissingValueError,
    NegativeEntryError,
    NotMonotoneError,
    PosetMismatchError,
    canonical_extension,
    enumerate_column_strict,
    enumerate_rpp,
    hook_multiset,
    make_partition,
    make_rpp,
    partitions,
    pi_sort,
    poset_from_covers,
    rpp_add,
    rpp_from_rows,
    rpp_sub,
    volume,
    young_poset,
)

from oracles import hook_product_poly, naive_column_strict, naive_rpps, series_inverse


@st.composite
def poset_with_two_rpps(draw, max_size=5):
    n = draw(st.integers(1, max_size))
    labels = [f"e{i}" for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    poset = poset_from_covers(labels, [(labels[i], labels[j]) for i, j in chosen])
    ext = canonical_extension(poset)

    def one():
        values = {}
        for e in ext.order:
            i = poset.index_of(e)
            lo = max(
                (values[poset.elements[p]] for p in poset._preds[i]), default=0
            )
            values[e] = lo + draw(st.integers(0, 2))
        return make_rpp(poset, values)

    return one(), one()


def test_make_rpp_valid():
    q = rpp_from_rows(make_partition([2, 1]), [[0, 1], [0]])
    assert q.values == (0, 1, 0)
    assert q.volume == 1


def test_make_rpp_rejects_row_decrease():
    with pytest.raises(NotMonotoneError):
        rpp_from_rows(make_partition([2, 1]), [[1, 0], [0]])


def test_make_rpp_rejects_column_decrease():
    with pytest.raises(NotMonotoneError):
        rpp_from_rows(make_partition([1, 1]), [[1], [0]])


def test_all_zero_is_valid_everywhere():
    p = poset_from_covers(["a", "b", "c"], [("a", "b")])
    q = make_rpp(p, {"a": 0, "b": 0, "c": 0})
    assert q.volume == 0


def test_make_rpp_missing_value():
    p = poset_from_covers(["a", "b"], [])
    with pytest.raises(MissingValueError):
        make_rpp(p, {"a": 0})


def test_make_rpp_unknown_label():
    p = poset_from_covers(["a", "b"], [])
    with pytest.raises(Exception):
        make_rpp(p, {"a": 0, "b": 0, "c": 1})


def test_make_rpp_rejects_negative():
    p = poset_from_covers(["a"], [])
    with pytest.raises(NegativeEntryError):
        make_rpp(p, {"a": -1})


def test_volume_examples():
    assert volume(rpp_from_rows(make_partition([2, 1]), [[0, 1], [0]])) == 1
    assert volume(rpp_from_rows(make_partition([2, 1]), [[0, 2], [1]])) == 3


def test_enumerate_rpp_row_of_two():
    got = [q.values for q in enumerate_rpp(make_partition([2]), 2)]
    assert got == [(0, 0), (0, 1), (0, 2), (1, 1)]


def test_enumerate_rpp_volume_zero():
    p = poset_from_covers(["a", "b", "c"], [("a", "c"), ("b", "c")])
    got = list(enumerate_rpp(p, 0))
    assert len(got) == 1 and got[0].volume == 0


def test_enumerate_rpp_21_count():
    assert sum(1 for _ in enumerate_rpp(make_partition([2, 1]), 2)) == 6


def test_enumerate_rpp_negative_budget():
    assert list(enumerate_rpp(make_partition([2]), -1)) == []


def test_enumerate_rpp_matches_naive():
    cases = [
        (["a", "b", "c"], [("a", "b")], 3),
        (["a", "b", "c", "d"], [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")], 4),
        (["a", "b", "c"], [], 2),
    ]
    for elements, covers, bound in cases:
        p = poset_from_covers(elements, covers)
        ours = sorted(
            tuple(q.value_at(e) for e in elements) for q in enumerate_rpp(p, bound)
        )
        expected = sorted(
            tuple(vals[e] for e in elements)
            for vals in naive_rpps(elements, covers, bound)
        )
        assert ours == expected


def test_enumerate_rpp_no_duplicates_and_revalidates():
    for shape in [make_partition([2, 1]), make_partition([2, 2])]:
        seen = set()
        for q in enumerate_rpp(shape, 4):
            assert q.values not in seen
            seen.add(q.values)
            assert q.volume <= 4
            make_rpp(q.poset, q.values)  # revalidation must succeed


def test_rpp_counts_match_hook_generating_function():
    # the count of fillings by volume equals the expansion of
    # 1 / prod(1 - x^hook); exact power-series inversion as the oracle
    bound = 8
    for n in range(1, 6):
        for shape in partitions(n):
            counts = [0] * (bound + 1)
            for q in enumerate_rpp(shape, bound):
                counts[q.volume] += 1
            expected = series_inverse(hook_product_poly(hook_multiset(shape)), bound)
            assert counts == expected, shape


def test_column_strict_examples():
    assert [q.values for q in enumerate_column_strict(make_partition([1, 1]), 1)] == [(0, 1)]
    assert list(enumerate_column_strict(make_partition([1, 1]), 0)) == []
    got = [q.values for q in enumerate_column_strict(make_partition([2]), 1)]
    assert got == [(0, 0), (0, 1), (1, 1)]


def test_column_strict_matches_naive():
    for parts, bound in [((2, 1), 2), ((2, 2), 2), ((3, 1), 1)]:
        shape = make_partition(parts)
        ours = sorted(q.rows() for q in enumerate_column_strict(shape, bound))
        expected = sorted(naive_column_strict(parts, bound))
        assert ours == expected


def test_pi_sort_examples():
    q = rpp_from_rows(make_partition([2, 1]), [[0, 2], [1]])
    assert pi_sort(q) == make_partition([2, 1])
    zero = rpp_from_rows(make_partition([2, 1]), [[0, 0], [0]])
    assert pi_sort(zero) == make_partition([])
    ones = rpp_from_rows(make_partition([2, 1]), [[1, 1], [1]])
    assert pi_sort(ones) == make_partition([1, 1, 1])


def test_rpp_sub_examples():
    shape = make_partition([2, 1])
    a = rpp_from_rows(shape, [[0, 2], [1]])
    b = rpp_from_rows(shape, [[0, 1], [0]])
    assert rpp_sub(a, a).values == (0, 0, 0)
    assert rpp_sub(a, b).values == (0, 1, 1)
    with pytest.raises(NegativeEntryError):
        rpp_sub(rpp_from_rows(shape, [[0, 0], [1]]), b)


def test_rpp_sub_not_monotone():
    shape = make_partition([2])
    a = rpp_from_rows(shape, [[1, 1]])
    b = rpp_from_rows(shape, [[0, 1]])
    with pytest.raises(NotMonotoneError):
        rpp_sub(a, b)


def test_rpp_poset_mismatch():
    a = rpp_from_rows(make_partition([2]), [[0, 0]])
    b = make_rpp(poset_from_covers(["a", "b"], []), {"a": 0, "b": 0})
    with pytest.raises(PosetMismatchError):
        rpp_add(a, b)


def test_rows_view_roundtrip():
    shape = make_partition([3, 1])
    q = rpp_from_rows(shape, [[0, 1, 2], [1]])
    assert q.rows() == ((0, 1, 2), (1,))


@given(poset_with_two_rpps())
def test_add_then_sub_roundtrip(pair):
    a, b = pair
    total = rpp_add(a, b)
    assert rpp_sub(total, b) == a
    assert total.volume == a.volume + b.volume


@given(poset_with_two_rpps())
def test_pi_sort_properties(pair):
    a, _ = pair
    p = pi_sort(a)
    assert p.n == a.volume
    assert len(p.parts) <= a.poset.n
