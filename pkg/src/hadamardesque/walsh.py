"""Bit-level oracles for sign tables and Sylvester Hadamard matrices.

The truth table of order m is the m x 2^(m-1) matrix whose columns are all
sign vectors (1, +-1, ..., +-1).  Column j encodes its signs in the bits of
j-1: row k (k >= 2) is negative exactly when bit k-2 of j-1 is set.  With
that convention, row k of the truth table is the Sylvester Hadamard row
with mask 2^(k-2) (row 1 is mask 0), and the coordinatewise product of two
truth rows is the Hadamard row whose mask is the XOR of theirs.  Everything
here is exposed as O(1) entry oracles; dense tables are materialised only
below a size cap.

A useful identity (not an operation): permuting the truth columns permutes
the columns of the pair-product table and of the Hadamard matrix the same
way, so all row-level statements are column-order free.

>>> truth_table(3).entries
((1, 1, 1, 1), (1, -1, 1, -1), (1, 1, -1, -1))
"""

from __future__ import annotations

from math import isqrt
from typing import Sequence

from .dense import DenseMatrix
from .errors import ResourceLimitError

# Operations that allocate 2^(m-1)-length vectors refuse beyond this.
MAX_VECTOR_M = 30
# Default cap for dense truth/pair-product tables.
DENSE_TABLE_CAP = 16
# Default entry budget for dense Hadamard/Kronecker construction.
DENSE_ENTRY_BUDGET = 1 << 22


def _check_order(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"order m must be a positive integer, got {m!r}")


def _check_vector_order(m: int) -> None:
    _check_order(m)
    if m > MAX_VECTOR_M:
        raise ValueError(
            f"order m={m} exceeds the cap {MAX_VECTOR_M} for 2^(m-1)-length vectors"
        )


def _check_column(m: int, j: int) -> None:
    if not 1 <= j <= 1 << (m - 1):
        raise IndexError(f"column {j} out of range [1, {1 << (m - 1)}] for m={m}")


# ---------------------------------------------------------------------------
# Sign columns and truth table


def truth_table_entry(m: int, row: int, col: int) -> int:
    """Entry of the order-m truth table at 1-based (row, col)."""
    _check_order(m)
    if not 1 <= row <= m:
        raise IndexError(f"row {row} out of range [1, {m}]")
    _check_column(m, col)
    if row == 1:
        return 1
    return -1 if (col - 1) >> (row - 2) & 1 else 1


def column_signs(m: int, j: int) -> tuple[int, ...]:
    """Column j of the truth table as a tuple of +-1 (leading +1)."""
    _check_order(m)
    _check_column(m, j)
    bits = j - 1
    return (1,) + tuple(-1 if bits >> k & 1 else 1 for k in range(m - 1))


def column_from_signs(signs: Sequence[int]) -> int:
    """Inverse of column_signs: the 1-based column index of a sign vector.

    The leading entry must be +1; callers normalise a negative-leading
    column by flipping its sign (the pairwise products are unchanged).
    """
    if not signs:
        raise ValueError("empty sign vector")
    if signs[0] != 1:
        raise ValueError("sign vector must start with +1")
    index = 0
    for k, s in enumerate(signs[1:]):
        if s == -1:
            index |= 1 << k
        elif s != 1:
            raise ValueError(f"sign vector entries must be +-1, got {s!r}")
    return index + 1


def truth_table(m: int, *, cap: int = DENSE_TABLE_CAP) -> DenseMatrix:
    """Dense m x 2^(m-1) truth table (guarded by `cap`)."""
    _check_vector_order(m)
    if m > cap:
        raise ResourceLimitError(
            f"dense truth table refused for m={m} > cap {cap}; use the entry oracle"
        )
    n = 1 << (m - 1)
    rows = tuple(
        tuple(truth_table_entry(m, k, j) for j in range(1, n + 1)) for k in range(1, m + 1)
    )
    return DenseMatrix(rows)


# ---------------------------------------------------------------------------
# Row pairs and their Hadamard row masks


def pair_count(m: int) -> int:
    _check_order(m)
    return m * (m - 1) // 2


def pair_index(i: int, j: int) -> int:
    """Linear index of the ordered row pair (i, j), i < j.

    Pairs are ordered (1,2), (1,3), (2,3), (1,4), (2,4), (3,4), ...
    """
    if not 1 <= i < j:
        raise ValueError(f"need 1 <= i < j, got ({i}, {j})")
    return (j - 1) * (j - 2) // 2 + i


def pair_rows(linear: int) -> tuple[int, int]:
    """Inverse of pair_index."""
    if linear < 1:
        raise ValueError(f"pair index must be >= 1, got {linear}")
    j = (1 + isqrt(8 * linear - 7)) // 2 + 1
    i = linear - (j - 1) * (j - 2) // 2
    return i, j


def row_mask(k: int) -> int:
    """Hadamard row mask of truth-table row k: 0 for row 1, else 2^(k-2)."""
    if k < 1:
        raise ValueError(f"row must be >= 1, got {k}")
    return 0 if k == 1 else 1 << (k - 2)


def hadamard_entry(mask: int, col: int) -> int:
    """Entry of the Sylvester Hadamard row with the given mask at 1-based col.

    Row mask+1 of the order-N Sylvester matrix is (-1)^popcount(mask & (col-1)).
    """
    if mask < 0 or col < 1:
        raise IndexError(f"bad Hadamard position mask={mask}, col={col}")
    return -1 if (mask & (col - 1)).bit_count() & 1 else 1


def pair_to_mask(m: int, linear: int) -> int:
    """Hadamard row mask of the pair-product row with the given linear index."""
    if not 1 <= linear <= pair_count(m):
        raise IndexError(f"pair index {linear} out of range [1, {pair_count(m)}]")
    i, j = pair_rows(linear)
    return row_mask(i) ^ row_mask(j)


def pair_masks(m: int) -> frozenset[int]:
    """Masks of the Hadamard rows realised by some row pair (m(m-1)/2 of them)."""
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    _check_vector_order(m)
    return frozenset(pair_to_mask(m, L) for L in range(1, pair_count(m) + 1))


def free_masks(m: int) -> frozenset[int]:
    """Masks of the remaining Hadamard rows, unconstrained by any row pair."""
    used = pair_masks(m)
    return frozenset(mask for mask in range(1 << (m - 1)) if mask not in used)


# ---------------------------------------------------------------------------
# Pairwise products


def pairwise_products(v: Sequence) -> tuple:
    """All products v_i * v_j for i < j, in pair_index order.

    >>> pairwise_products((1, -1, 1))
    (-1, 1, -1)
    """
    m = len(v)
    if m < 2:
        raise ValueError(f"need a vector of length >= 2, got {m}")
    out = []
    for j in range(1, m):
        for i in range(j):
            out.append(v[i] * v[j])
    return tuple(out)


def pair_product_entry(m: int, linear: int, col: int) -> int:
    """Entry of the pair-product table: product of two truth-table rows."""
    if not 1 <= linear <= pair_count(m):
        raise IndexError(f"pair index {linear} out of range [1, {pair_count(m)}]")
    _check_column(m, col)
    i, j = pair_rows(linear)
    return truth_table_entry(m, i, col) * truth_table_entry(m, j, col)


def pair_product_table(m: int, *, cap: int = DENSE_TABLE_CAP) -> DenseMatrix:
    """Dense m(m-1)/2 x 2^(m-1) table of columnwise pairwise products."""
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    _check_vector_order(m)
    if m > cap:
        raise ResourceLimitError(
            f"dense pair-product table refused for m={m} > cap {cap}; use the entry oracle"
        )
    n = 1 << (m - 1)
    rows = tuple(
        tuple(pair_product_entry(m, L, j) for j in range(1, n + 1))
        for L in range(1, pair_count(m) + 1)
    )
    return DenseMatrix(rows)


# ---------------------------------------------------------------------------
# Sylvester matrices and the fast transform


def sylvester(k: int, *, max_entries: int = DENSE_ENTRY_BUDGET) -> DenseMatrix:
    """The 2^k x 2^k Sylvester Hadamard matrix with +-1 entries."""
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"exponent k must be a nonnegative integer, got {k!r}")
    n = 1 << k
    if n * n > max_entries:
        raise ResourceLimitError(
            f"Sylvester matrix of order {n} exceeds the entry budget {max_entries}"
        )
    rows = tuple(
        tuple(-1 if (r & c).bit_count() & 1 else 1 for c in range(n)) for r in range(n)
    )
    return DenseMatrix(rows)


def kronecker(a: DenseMatrix, b: DenseMatrix, *, max_entries: int = DENSE_ENTRY_BUDGET) -> DenseMatrix:
    """Kronecker product: the block matrix [a_uv * b]."""
    out_rows = a.rows * b.rows
    out_cols = a.cols * b.cols
    if out_rows * out_cols > max_entries:
        raise ResourceLimitError(
            f"Kronecker product of size {out_rows}x{out_cols} exceeds the entry budget"
        )
    rows = []
    for ar in a.entries:
        for br in b.entries:
            rows.append(tuple(ae * be for ae in ar for be in br))
    return DenseMatrix(tuple(rows), is_exact=a.is_exact and b.is_exact)


def fwht(values: Sequence) -> list:
    """Fast Walsh-Hadamard transform in natural (Hadamard) row order.

    Returns the dot products of `values` with every row of the Sylvester
    matrix of matching order: out[mask] = <values, row mask+1>.  Exact over
    int/Fraction inputs; applying it twice multiplies the input by N.
    """
    n = len(values)
    if n == 0 or n & (n - 1):
        raise ValueError(f"length must be a power of two, got {n}")
    out = list(values)
    half = 1
    while half < n:
        for start in range(0, n, half * 2):
            for idx in range(start, start + half):
                x, y = out[idx], out[idx + half]
                out[idx] = x + y
                out[idx + half] = x - y
        half *= 2
    return out
