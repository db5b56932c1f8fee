"""Factoring an equal-modulus matrix and reading dot products off weights.

A matrix whose columns each carry one modulus factors into weighted sign
columns.  The per-column squared scales, summed per sign pattern, form a
weight vector from which every pairwise row dot product can be read
exactly -- no floating point anywhere.
"""

from hadamardesque import (
    column_representation,
    in_free_span,
    pair_rows,
    pairwise_dots,
    parse_matrix,
    to_hadamardesque,
)

TEXT = """4 6
2 1 sqrt(3) 1 sqrt(5) 3
2 -1 sqrt(3) -1 sqrt(5) -3
2 1 sqrt(3) -1 sqrt(5) 3
2 -1 sqrt(3) -1 -sqrt(5) 3
"""

matrix = parse_matrix(TEXT)
print("A 4x6 matrix with per-column moduli 2, 1, sqrt(3), 1, sqrt(5), 3:")
print(TEXT)

factored = to_hadamardesque(matrix)
print("Each column is sqrt(q) times a sign column (q, column index):")
for col in factored.columns:
    print(f"  q={col.q}  column {col.index}")

weights = column_representation(factored)
print(f"\nWeight vector (squared scales summed per sign column):")
print(" ", [str(v) for v in weights.values])

dots = pairwise_dots(factored)
print("\nPairwise row dot products, read from the weight spectrum:")
for linear, value in enumerate(dots.values, start=1):
    i, j = pair_rows(linear)
    print(f"  <row {i}, row {j}> = {value}")

check = in_free_span(weights)
print(f"\nRows orthogonal? {check.in_span}")
print("Violating pairs and residuals:", [(L, str(r)) for L, r in check.violations])
