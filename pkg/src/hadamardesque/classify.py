"""Equal-modulus-column matrices, their weight vectors, and classification.

A matrix is m-Hadamardesque when every column is a positive multiple of a
truth-table column: all coordinates of a column share one modulus and the
leading coordinate is positive.  Such a matrix is summarised exactly by its
representation vector (one nonnegative rational weight per truth column,
the sum of squared scales), and every pairwise row dot product is the dot
product of that vector with one pair-product row.  Orthogonality of rows is
therefore a spectral condition: the Walsh spectrum of the representation
vector must vanish on every pair mask.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dense import DenseMatrix
from .errors import ResourceLimitError, ShapeError
from .scalars import SqrtRational
from .walsh import (
    MAX_VECTOR_M,
    column_from_signs,
    column_signs,
    fwht,
    pair_count,
    pair_rows,
    pair_to_mask,
)

DEFAULT_FLOAT_TOL = 1e-9
DENSE_COLUMN_CAP = 10**6


@dataclass(frozen=True)
class WeightedColumn:
    """A truth-table column scaled by sqrt(q), repeated `multiplicity` times."""

    q: Fraction
    index: int
    multiplicity: int = 1

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        if self.q <= 0:
            raise ValueError(f"column weight must be positive, got {self.q}")
        if self.index < 1:
            raise ValueError(f"column index must be >= 1, got {self.index}")
        if self.multiplicity < 1:
            raise ValueError(f"multiplicity must be >= 1, got {self.multiplicity}")

    @property
    def scale(self):
        """The positive column scale sqrt(q), exact."""
        return SqrtRational.sqrt(self.q)


@dataclass(frozen=True)
class HadamardesqueMatrix:
    """An ordered multiset of weighted truth-table columns on m rows."""

    m: int
    columns: tuple[WeightedColumn, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"row count must be >= 1, got {self.m}")
        if not self.columns:
            raise ValueError("a matrix needs at least one column")
        limit = 1 << (self.m - 1)
        for col in self.columns:
            if col.index > limit:
                raise ValueError(
                    f"column index {col.index} out of range [1, {limit}] for m={self.m}"
                )

    @property
    def n(self) -> int:
        """Total column count, multiplicities included."""
        return sum(c.multiplicity for c in self.columns)

    def dense(self, *, max_columns: int = DENSE_COLUMN_CAP) -> DenseMatrix:
        """Expand to a dense exact matrix; entries are +-sqrt(q)."""
        if self.n > max_columns:
            raise ResourceLimitError(
                f"dense expansion to {self.n} columns exceeds the cap {max_columns}"
            )
        cols = []
        for col in self.columns:
            scale = col.scale
            signs = column_signs(self.m, col.index)
            expanded = tuple(s * scale for s in signs)
            cols.extend([expanded] * col.multiplicity)
        rows = tuple(tuple(c[k] for c in cols) for k in range(self.m))
        return DenseMatrix.from_rows(rows)


@dataclass(frozen=True)
class RepresentationVector:
    """Per-truth-column squared-scale weights; length 2^(m-1), all >= 0."""

    m: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if not 1 <= self.m <= MAX_VECTOR_M:
            raise ValueError(f"order m={self.m} out of range [1, {MAX_VECTOR_M}]")
        if len(self.values) != 1 << (self.m - 1):
            raise ValueError(
                f"expected {1 << (self.m - 1)} coordinates for m={self.m}, got {len(self.values)}"
            )
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if any(v < 0 for v in self.values):
            raise ValueError("representation vector coordinates must be nonnegative")

    def to_record(self) -> dict:
        return {"m": self.m, "v": [str(v) for v in self.values]}


@dataclass(frozen=True)
class PairwiseDots:
    """All pairwise row dot products, in pair_index order."""

    m: int
    values: tuple

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"pairwise dots need m >= 2, got {self.m}")
        if len(self.values) != pair_count(self.m):
            raise ValueError(
                f"expected {pair_count(self.m)} dot products for m={self.m}, "
                f"got {len(self.values)}"
            )

    def to_record(self) -> dict:
        from .scalars import format_scalar

        return {"m": self.m, "a": [format_scalar(v) for v in self.values]}


@dataclass(frozen=True)
class SpanCheck:
    """Result of a free-span membership test, with violating pairs on failure."""

    in_span: bool
    violations: tuple[tuple[int, Fraction], ...]

    def __bool__(self) -> bool:
        return self.in_span


@dataclass(frozen=True)
class Factorization:
    """Outcome of factoring a dense matrix into weighted truth columns."""

    matrix: HadamardesqueMatrix
    flipped_columns: tuple[int, ...]


# ---------------------------------------------------------------------------
# Factoring dense matrices


def _exact_square(entry) -> Fraction:
    if isinstance(entry, SqrtRational):
        return entry.square
    return Fraction(entry) ** 2


def _exact_sign(entry) -> int:
    if isinstance(entry, SqrtRational):
        return entry.sign
    return (entry > 0) - (entry < 0)


def factor_columns(matrix: DenseMatrix, tol: float | None = None) -> Factorization:
    """Factor each column as sqrt(q) times a truth column.

    Columns whose leading entry is negative are normalised by a global sign
    flip (their pairwise products are unchanged); the flipped input
    positions are reported.  Raises ShapeError for a zero column or a column
    whose entries do not share one modulus.
    """
    if matrix.is_exact:
        if tol:
            raise ValueError("exact matrices require tol=0")
        return _factor_exact(matrix)
    return _factor_float(matrix, DEFAULT_FLOAT_TOL if tol is None else tol)


def _factor_exact(matrix: DenseMatrix) -> Factorization:
    m = matrix.rows
    columns = []
    flipped = []
    for j in range(1, matrix.cols + 1):
        col = matrix.column(j)
        squares = {_exact_square(e) for e in col}
        if squares == {Fraction(0)}:
            raise ShapeError(f"column {j} is zero")
        if len(squares) != 1:
            raise ShapeError(f"column {j}: entries do not share a common modulus")
        signs = [_exact_sign(e) for e in col]
        if signs[0] < 0:
            signs = [-s for s in signs]
            flipped.append(j)
        columns.append(WeightedColumn(q=squares.pop(), index=column_from_signs(signs)))
    return Factorization(HadamardesqueMatrix(m, tuple(columns)), tuple(flipped))


def _factor_float(matrix: DenseMatrix, tol: float) -> Factorization:
    m = matrix.rows
    columns = []
    flipped = []
    for j in range(1, matrix.cols + 1):
        col = matrix.column(j)
        moduli = [abs(e) for e in col]
        top = max(moduli)
        if top == 0.0:
            raise ShapeError(f"column {j} is zero")
        if (top - min(moduli)) > tol * top:
            raise ShapeError(f"column {j}: entries do not share a common modulus")
        signs = [1 if e > 0 else -1 for e in col]
        if signs[0] < 0:
            signs = [-s for s in signs]
            flipped.append(j)
        mean = sum(moduli) / len(moduli)
        columns.append(
            WeightedColumn(q=Fraction(mean) ** 2, index=column_from_signs(signs))
        )
    return Factorization(HadamardesqueMatrix(m, tuple(columns)), tuple(flipped))


def to_hadamardesque(matrix: DenseMatrix, tol: float | None = None) -> HadamardesqueMatrix:
    """Factor a dense matrix into an m-Hadamardesque matrix (see factor_columns)."""
    return factor_columns(matrix, tol).matrix


# ---------------------------------------------------------------------------
# Representation vectors and dot products


def column_representation(matrix: HadamardesqueMatrix) -> RepresentationVector:
    """Sum the squared scales of every occurrence of each truth column."""
    if matrix.m > MAX_VECTOR_M:
        raise ValueError(f"order m={matrix.m} exceeds the vector cap {MAX_VECTOR_M}")
    values = [Fraction(0)] * (1 << (matrix.m - 1))
    for col in matrix.columns:
        values[col.index - 1] += col.q * col.multiplicity
    return RepresentationVector(matrix.m, tuple(values))


def pairwise_dots(matrix: HadamardesqueMatrix) -> PairwiseDots:
    """Exact pairwise row dot products, via the representation spectrum.

    The dot product of rows (i, j) equals the dot product of the
    representation vector with the pair-product row for (i, j), which is one
    Walsh spectrum coordinate.
    """
    if matrix.m < 2:
        raise ValueError("pairwise dots need at least two rows")
    spectrum = fwht(column_representation(matrix).values)
    values = tuple(
        spectrum[pair_to_mask(matrix.m, L)] for L in range(1, pair_count(matrix.m) + 1)
    )
    return PairwiseDots(matrix.m, values)


def _as_vector(v, m: int | None):
    if isinstance(v, RepresentationVector):
        if m is not None and m != v.m:
            raise ValueError(f"order mismatch: vector has m={v.m}, caller said m={m}")
        return v.m, list(v.values)
    values = list(v)
    n = len(values)
    if n == 0 or n & (n - 1):
        raise ValueError(f"vector length must be a power of two, got {n}")
    inferred = n.bit_length()  # n = 2^(m-1)  =>  m = log2(n) + 1
    if m is not None and m != inferred:
        raise ValueError(f"length {n} implies m={inferred}, caller said m={m}")
    return inferred, values


def in_free_span(v, m: int | None = None) -> SpanCheck:
    """Is v orthogonal to every pair-product row?

    Equivalently, does v lie in the span of the Hadamard rows that no row
    pair realises?  Accepts a RepresentationVector or any rational sequence
    of length 2^(m-1) (difference vectors may be negative).  On failure the
    violating pair indices are returned with their residual dot products.
    """
    order, values = _as_vector(v, m)
    if order == 1:
        return SpanCheck(True, ())
    spectrum = fwht(values)
    violations = []
    for L in range(1, pair_count(order) + 1):
        residual = spectrum[pair_to_mask(order, L)]
        if residual != 0:
            violations.append((L, residual))
    return SpanCheck(not violations, tuple(violations))


def same_pairwise_dots(v: RepresentationVector, w: RepresentationVector) -> SpanCheck:
    """Do two representation vectors force identical pairwise row dots?

    True exactly when their difference is orthogonal to every pair-product
    row; the difference may be negative coordinatewise.
    """
    if v.m != w.m:
        raise ValueError(f"order mismatch: {v.m} vs {w.m}")
    diff = [a - b for a, b in zip(v.values, w.values)]
    return in_free_span(diff, v.m)


# ---------------------------------------------------------------------------
# Hadamard tests


def _entries_unit(matrix: DenseMatrix) -> bool:
    return all(e == 1 or e == -1 for row in matrix.entries for e in row)


def _direct_row_dots_zero(matrix: DenseMatrix) -> bool:
    rows = matrix.entries
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            if sum(a * b for a, b in zip(rows[i], rows[j])) != 0:
                return False
    return True


def is_hadamard(matrix: DenseMatrix) -> bool:
    """Square, entries +-1, rows pairwise orthogonal (so M Mt = m I)."""
    if matrix.rows != matrix.cols:
        return False
    return _entries_unit(matrix) and _direct_row_dots_zero(matrix)


def is_partial_hadamard(matrix: DenseMatrix) -> bool:
    """Entries +-1 and rows pairwise orthogonal; the matrix may be rectangular.

    The direct dot-product verdict is cross-checked against the spectral
    criterion (representation vector in the free span); the two are
    equivalent, so a mismatch signals an internal error.
    """
    if not _entries_unit(matrix):
        return False
    if matrix.rows < 2:
        return True
    direct = _direct_row_dots_zero(matrix)
    rep = column_representation(to_hadamardesque(matrix))
    spectral = bool(in_free_span(rep))
    if direct != spectral:
        raise RuntimeError("direct and spectral orthogonality tests disagree")
    return direct


@dataclass(frozen=True)
class SquareClassification:
    """Three independently evaluated Hadamard criteria for a square matrix.

    * hadamard: entries +-1 and rows pairwise orthogonal (direct test).
    * sign_matrix_in_span: the matrix factors into weighted truth columns,
      has +-1 entries, and its representation vector lies in the free span.
    * lattice_point_in_span: the representation vector is a 0/1 vector with
      exactly m ones, and lies in the free span.
    """

    order: int
    hadamard: bool
    sign_matrix_in_span: bool
    lattice_point_in_span: bool
    representation: RepresentationVector | None
    flipped_columns: tuple[int, ...]
    violations: tuple[tuple[int, Fraction], ...]

    @property
    def verdicts_agree(self) -> bool:
        return self.hadamard == self.sign_matrix_in_span == self.lattice_point_in_span

    def to_record(self) -> dict:
        return {
            "order": self.order,
            "hadamard": self.hadamard,
            "sign_matrix_in_span": self.sign_matrix_in_span,
            "lattice_point_in_span": self.lattice_point_in_span,
            "verdicts_agree": self.verdicts_agree,
            "representation": None
            if self.representation is None
            else [str(v) for v in self.representation.values],
            "flipped_columns": list(self.flipped_columns),
            "violations": [
                {"pair": L, "rows": list(pair_rows(L)), "residual": str(r)}
                for L, r in self.violations
            ],
        }


def classify_square(matrix: DenseMatrix) -> SquareClassification:
    """Evaluate the three equivalent Hadamard criteria independently."""
    if matrix.rows != matrix.cols:
        raise ValueError(f"classification needs a square matrix, got {matrix.shape}")
    m = matrix.rows
    direct = is_hadamard(matrix)

    rep = None
    flipped: tuple[int, ...] = ()
    violations: tuple[tuple[int, Fraction], ...] = ()
    sign_in_span = False
    lattice = False
    try:
        factored = factor_columns(matrix, None if matrix.is_exact else DEFAULT_FLOAT_TOL)
    except ShapeError:
        factored = None
    if factored is not None:
        rep = column_representation(factored.matrix)
        flipped = factored.flipped_columns
        span = in_free_span(rep)
        violations = span.violations
        sign_in_span = _entries_unit(matrix) and span.in_span
        ones = sum(1 for v in rep.values if v == 1)
        zeros = sum(1 for v in rep.values if v == 0)
        lattice = ones == m and ones + zeros == len(rep.values) and span.in_span
    return SquareClassification(
        order=m,
        hadamard=direct,
        sign_matrix_in_span=sign_in_span,
        lattice_point_in_span=lattice,
        representation=rep,
        flipped_columns=flipped,
        violations=violations,
    )
