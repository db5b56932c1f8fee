"""Building a matrix with any prescribed pairwise row dot products.

Pick any rational value for every row pair; a matrix with exactly those
dot products always exists.  The weight vector comes from an inverse Walsh
transform of the target spectrum, shifted along the all-ones direction
until nonnegative.
"""

from fractions import Fraction

from hadamardesque import (
    ConstructionOptions,
    construct_crv,
    format_matrix,
    pair_rows,
    pairwise_dots,
    realize_canonical,
)

m = 3
target = [Fraction(1), Fraction(1, 2), Fraction(-2)]
print(f"Target dot products for m={m} rows:")
for linear, value in enumerate(target, start=1):
    i, j = pair_rows(linear)
    print(f"  <row {i}, row {j}> = {value}")

weights = construct_crv(m, target)
print(f"\nConstructed weight vector: {[str(v) for v in weights.values]}")

matrix = realize_canonical(weights)
print("One column of scale sqrt(weight) per nonzero weight:")
print(format_matrix(matrix.dense()))

achieved = pairwise_dots(matrix)
print(f"Dot products of the result: {[str(v) for v in achieved.values]}")
assert list(achieved.values) == target

# Any extra all-ones shift changes the matrix but not a single dot product.
bigger = realize_canonical(
    construct_crv(m, target, ConstructionOptions(shift="minimal-integer"))
)
print(f"\nWith an integer shift the matrix grows to {bigger.n} columns,")
print(f"but the dots stay {[str(v) for v in pairwise_dots(bigger).values]}")

# The zero target is realized by the full truth table.
flat = realize_canonical(construct_crv(m, [0, 0, 0]))
print("\nZero target -> the truth table itself (all rows orthogonal):")
print(format_matrix(flat.dense()))
