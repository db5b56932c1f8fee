"""Independent reference computations the fast paths are tested against.

Everything here deliberately avoids the library's bit formulas: Hadamard
matrices come from the doubling recursion, truth tables from the
column-doubling recursion, dot products from literal sums of products, and
the column-set oracle enumerates subsets outright.
"""

import itertools
from fractions import Fraction

import numpy as np


def sylvester_by_doubling(k: int):
    """H(2^k) via the block recursion [[H, H], [H, -H]]."""
    rows = [[1]]
    for _ in range(k):
        rows = [r + r for r in rows] + [r + [-x for x in r] for r in rows]
    return tuple(tuple(r) for r in rows)


def truth_by_recursion(m: int):
    """Truth table via doubling: copy the columns, append a +1/-1 row."""
    rows = [[1]]
    for _ in range(m - 1):
        width = len(rows[0])
        rows = [r + r for r in rows] + [[1] * width + [-1] * width]
    return tuple(tuple(r) for r in rows)


def pair_products_by_rows(m: int):
    """Pairwise-product table: literal products of truth-table row pairs."""
    truth = truth_by_recursion(m)
    rows = []
    for j in range(2, m + 1):
        for i in range(1, j):
            rows.append(tuple(a * b for a, b in zip(truth[i - 1], truth[j - 1])))
    return tuple(rows)


def naive_wht(values):
    """All dot products with the rows of the doubling-built Hadamard matrix."""
    n = len(values)
    k = n.bit_length() - 1
    assert 1 << k == n
    hadamard = sylvester_by_doubling(k)
    return [sum(h * v for h, v in zip(row, values)) for row in hadamard]


def row_dots(entries):
    """Pairwise dot products of the rows of a dense matrix, in pair order."""
    out = []
    for j in range(1, len(entries)):
        for i in range(j):
            out.append(sum(a * b for a, b in zip(entries[i], entries[j])))
    return tuple(out)


def column_product_sums(entries):
    """Sum of the pairwise-product vectors of every column (the column route)."""
    m = len(entries)
    n_pairs = m * (m - 1) // 2
    total = [0] * n_pairs
    for col in zip(*entries):
        pos = 0
        for j in range(1, m):
            for i in range(j):
                total[pos] = total[pos] + col[i] * col[j]
                pos += 1
    return tuple(total)


def brute_force_column_sets(m: int, chunk: int = 200_000):
    """All m-subsets of truth columns with orthogonal rows, by enumeration.

    Returns (solutions, subsets_checked).  Vectorised over the
    recursion-built truth table, so it shares no code with the engine.
    """
    truth = np.array(truth_by_recursion(m), dtype=np.int16)
    n_cols = truth.shape[1]
    pair_rows_arr = []
    for j in range(1, m):
        for i in range(j):
            pair_rows_arr.append(truth[i] * truth[j])
    products = np.array(pair_rows_arr, dtype=np.int16).T  # (columns, pairs)

    solutions = []
    checked = 0
    combos = itertools.combinations(range(n_cols), m)
    while True:
        block = list(itertools.islice(combos, chunk))
        if not block:
            break
        checked += len(block)
        idx = np.array(block, dtype=np.int64)
        sums = products[idx].sum(axis=1)
        for hit in np.flatnonzero(~sums.any(axis=1)):
            solutions.append(tuple(int(x) + 1 for x in block[hit]))
    return solutions, checked


def random_fraction(rng, num_range=9, den_range=9, allow_negative=True) -> Fraction:
    num = rng.randint(1, num_range)
    if allow_negative and rng.random() < 0.5:
        num = -num
    if rng.random() < 0.2:
        num = 0
    return Fraction(num, rng.randint(1, den_range))
