"""Hunting Hadamard matrices as lattice points.

An order-m Hadamard matrix is the same thing as an m-subset of the 2^(m-1)
sign columns whose 0/1 weight vector kills every pair-product row -- a
lattice point with m ones.  The engine backtracks over ascending column
indices with exact integer pair sums and parity/bound pruning.
"""

from hadamardesque import (
    SearchOptions,
    column_set_matrix,
    find_hadamard_column_sets,
    format_matrix,
    verify_column_set,
)

print("Order 4: exhaustive search over C(8,4)=70 subsets.")
report = find_hadamard_column_sets(4)
print(f"  solutions={report.solutions} nodes={report.nodes} exhaustive={report.exhaustive}")
for solution in report.solutions:
    print(f"  column set {solution}:")
    print(format_matrix(column_set_matrix(4, solution)))

print("Order 5 (odd): the root parity check empties the tree instantly.")
report = find_hadamard_column_sets(5)
print(f"  solutions={len(report.solutions)} nodes={report.nodes} exhaustive={report.exhaustive}")

print("\nOrder 6: exhaustive proof of nonexistence at desk scale.")
report = find_hadamard_column_sets(6)
print(f"  solutions={len(report.solutions)} nodes={report.nodes} exhaustive={report.exhaustive}")

print("\nOrder 8, first solution (three verification layers at emit):")
report = find_hadamard_column_sets(8, limit=1)
(solution,) = report.solutions
print(f"  found {solution} after {report.nodes} nodes in {report.elapsed:.2f}s")
print(f"  verify_column_set: {verify_column_set(8, solution)}")

print("\nSame search, normalized to force the all-ones column, 4 workers:")
report = find_hadamard_column_sets(
    8, limit=1, options=SearchOptions(workers=4, force_first_column=True)
)
print(f"  found {report.solutions[0]} (normalized={report.normalized})")
