"""Brute-force reference implementations, independent of the library's
algorithms, used to derive and cross-check expected values."""

from itertools import permutations, product


def naive_syt(parts):
    """All standard fillings of the shape, found by filtering every
    permutation of 1..n placed row-major.  Returns row tuples."""
    parts = tuple(parts)
    n = sum(parts)
    offsets = [sum(parts[:i]) for i in range(len(parts))]
    out = []
    for perm in permutations(range(1, n + 1)):
        rows = tuple(
            tuple(perm[offsets[i]:offsets[i] + parts[i]])
            for i in range(len(parts))
        )
        if any(a >= b for row in rows for a, b in zip(row, row[1:])):
            continue
        ok = True
        for i in range(1, len(rows)):
            for j in range(len(rows[i])):
                if rows[i - 1][j] >= rows[i][j]:
                    ok = False
        if ok:
            out.append(rows)
    return out


def naive_linear_extensions(elements, less_pairs):
    """All orderings of elements compatible with the given strict pairs,
    found by filtering every permutation."""
    less = set(less_pairs)
    out = []
    for perm in permutations(elements):
        pos = {e: k for k, e in enumerate(perm)}
        if all(pos[a] < pos[b] for a, b in less):
            out.append(perm)
    return out


def naive_rpps(elements, less_pairs, max_volume):
    """All value assignments (as dicts) non-decreasing along the pairs with
    total at most max_volume, by filtering the full product."""
    less = list(less_pairs)
    out = []
    for combo in product(range(max_volume + 1), repeat=len(elements)):
        if sum(combo) > max_volume:
            continue
        values = dict(zip(elements, combo))
        if all(values[a] <= values[b] for a, b in less):
            out.append(values)
    return out


def naive_column_strict(parts, max_entry):
    """All fillings of the shape with entries in 0..max_entry, weakly
    increasing along rows and strictly increasing down columns."""
    parts = tuple(parts)
    cells = [(i, j) for i, p in enumerate(parts) for j in range(p)]
    out = []
    for combo in product(range(max_entry + 1), repeat=len(cells)):
        values = dict(zip(cells, combo))
        if any(values[(i, j - 1)] > values[(i, j)] for (i, j) in cells if j > 0):
            continue
        if any(
            values[(i - 1, j)] >= values[(i, j)]
            for (i, j) in cells
            if i > 0 and (i - 1, j) in values
        ):
            continue
        out.append(tuple(tuple(values[(i, j)] for j in range(p)) for i, p in enumerate(parts)))
    return out


def poly_mul(a, b):
    """Coefficient-list product."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return out


def series_inverse(denom, up_to):
    """First up_to+1 coefficients of 1/denom for a polynomial with constant
    term 1."""
    assert denom[0] == 1
    inv = [0] * (up_to + 1)
    inv[0] = 1
    for k in range(1, up_to + 1):
        acc = 0
        for j in range(1, min(k, len(denom) - 1) + 1):
            acc += denom[j] * inv[k - j]
        inv[k] = -acc
    return inv


def hook_product_poly(hooks):
    """Coefficient list of the product of (1 - x^h) over the hooks."""
    out = [1]
    for h in hooks:
        out = poly_mul(out, [1] + [0] * (h - 1) + [-1])
    return out
