"""Reference matrices and values the implementation must reproduce exactly."""

from fractions import Fraction

H2 = ((1, 1), (1, -1))

H4 = (
    (1, 1, 1, 1),
    (1, -1, 1, -1),
    (1, 1, -1, -1),
    (1, -1, -1, 1),
)

T1 = ((1,),)

T2 = ((1, 1), (1, -1))

T3 = (
    (1, 1, 1, 1),
    (1, -1, 1, -1),
    (1, 1, -1, -1),
)

T4 = (
    (1, 1, 1, 1, 1, 1, 1, 1),
    (1, -1, 1, -1, 1, -1, 1, -1),
    (1, 1, -1, -1, 1, 1, -1, -1),
    (1, 1, 1, 1, -1, -1, -1, -1),
)

CT2 = ((1, -1),)

CT3 = (
    (1, -1, 1, -1),
    (1, 1, -1, -1),
    (1, -1, -1, 1),
)

CT4 = (
    (1, -1, 1, -1, 1, -1, 1, -1),
    (1, 1, -1, -1, 1, 1, -1, -1),
    (1, -1, -1, 1, 1, -1, -1, 1),
    (1, 1, 1, 1, -1, -1, -1, -1),
    (1, -1, 1, -1, -1, 1, -1, 1),
    (1, 1, -1, -1, -1, -1, 1, 1),
)

# 4x6 worked example: columns 2c1, c6, sqrt(3)c1, c8, sqrt(5)c5, 3c2.
EXAMPLE_MATRIX_TEXT = """4 6
2 1 sqrt(3) 1 sqrt(5) 3
2 -1 sqrt(3) -1 sqrt(5) -3
2 1 sqrt(3) -1 sqrt(5) 3
2 -1 sqrt(3) -1 -sqrt(5) 3
"""

EXAMPLE_WEIGHTED_COLUMNS = ((4, 1), (1, 6), (3, 1), (1, 8), (5, 5), (9, 2))

EXAMPLE_CRV = tuple(Fraction(x) for x in (7, 9, 0, 0, 5, 1, 0, 1))

# Derived by hand from the worked example and re-derived by oracle in tests:
# dot products of the rows in pair order.
EXAMPLE_DOTS = tuple(Fraction(x) for x in (1, 21, 3, 9, -5, 11))

# 4x5 matrix with two columns of modulus 1/sqrt(2) plus c6, c7, c4.
REMARK_MATRIX_TEXT = """4 5
sqrt(1/2) sqrt(1/2) 1 1 1
sqrt(1/2) sqrt(1/2) -1 1 -1
sqrt(1/2) sqrt(1/2) 1 -1 -1
sqrt(1/2) sqrt(1/2) -1 -1 1
"""

REMARK_CRV = tuple(Fraction(x) for x in (1, 0, 0, 1, 0, 1, 1, 0))

# The truth-column indices of the order-4 Sylvester matrix's columns, and
# the full solution set of the order-4 column-set search (derived by
# enumerating all 70 subsets; re-derived by the brute-force oracle in tests).
H4_COLUMN_SET = (1, 4, 6, 7)
M4_SOLUTIONS = ((1, 4, 6, 7), (2, 3, 5, 8))
