"""Realizing rational targets with a single shared entry modulus.

For a rational target the realization can be squeezed into entries that
all share one modulus: +-1/d for an integer d, or, by doubling columns and
splitting the scale, the irrational modulus 1/(d*sqrt(2)).  For targets
that mix nonzero rationals with irrationals no such matrix exists: every
dot product of a uniform-modulus matrix is an integer multiple of the
squared modulus.
"""

from fractions import Fraction

from hadamardesque import (
    InfeasibleError,
    SqrtRational,
    format_matrix,
    pairwise_dots,
    realize_uniform_irrational,
    realize_uniform_rational,
)

m = 3
target = [Fraction(1), Fraction(1, 2), Fraction(-2)]
print(f"Target: {[str(t) for t in target]}")

rational = realize_uniform_rational(m, target)
(q,) = {c.q for c in rational.columns}
print(f"\nUniform rational realization: {rational.n} columns, every entry +-{SqrtRational.sqrt(q)}")
print("Column multiset (squared scale, column index, multiplicity):")
for col in rational.columns:
    print(f"  ({col.q}, {col.index}, {col.multiplicity})")
print(f"Dots: {[str(v) for v in pairwise_dots(rational).values]}")
if rational.n <= 24:
    print(format_matrix(rational.dense()))

irrational = realize_uniform_irrational(m, target)
(q2,) = {c.q for c in irrational.columns}
print(f"Uniform irrational realization: {irrational.n} columns, entry modulus sqrt({q2})")
print(f"Dots: {[str(v) for v in pairwise_dots(irrational).values]}")

print("\nA mixed rational/irrational target is provably unrealizable:")
try:
    realize_uniform_rational(3, [Fraction(1), SqrtRational.sqrt(2), Fraction(0)])
except InfeasibleError as exc:
    print(f"  InfeasibleError: {exc}")
