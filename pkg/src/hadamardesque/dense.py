"""Dense matrices with exact or float entries, plus the shared text format.

The text format is the interchange surface for every tool in the package:

    m n
    <row 1: n whitespace-separated tokens>
    ...
    <row m>

Exact entries use the tokens ``p``, ``p/q``, ``sqrt(p/q)``, ``-sqrt(p/q)``;
float mode uses decimal literals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import FormatError
from .scalars import SqrtRational, format_scalar, is_exact_token, parse_scalar


def _coerce_exact(entry):
    if isinstance(entry, bool):
        raise TypeError("bool is not a matrix entry")
    if isinstance(entry, int):
        return entry
    if isinstance(entry, Fraction):
        return entry
    if isinstance(entry, SqrtRational):
        return entry.as_fraction() if entry.is_rational else entry
    if isinstance(entry, float):
        raise TypeError(f"float entry {entry!r} in an exact matrix")
    raise TypeError(f"unsupported matrix entry {entry!r}")


@dataclass(frozen=True)
class DenseMatrix:
    """Immutable row-major matrix; entries exact scalars or floats."""

    entries: tuple[tuple, ...]
    is_exact: bool = True

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise ValueError("all rows must have equal length")

    @staticmethod
    def from_rows(rows: Sequence[Sequence], *, exact: bool = True) -> "DenseMatrix":
        if exact:
            data = tuple(tuple(_coerce_exact(e) for e in row) for row in rows)
        else:
            data = tuple(tuple(float(e) for e in row) for row in rows)
        return DenseMatrix(data, is_exact=exact)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def entry(self, i: int, j: int):
        """Entry at 1-based row i, column j."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"entry ({i},{j}) out of range for {self.rows}x{self.cols}")
        return self.entries[i - 1][j - 1]

    def row(self, i: int) -> tuple:
        if not 1 <= i <= self.rows:
            raise IndexError(f"row {i} out of range")
        return self.entries[i - 1]

    def column(self, j: int) -> tuple:
        if not 1 <= j <= self.cols:
            raise IndexError(f"column {j} out of range")
        return tuple(row[j - 1] for row in self.entries)

    def to_float(self) -> list[list[float]]:
        return [[float(e) for e in row] for row in self.entries]


def format_matrix(matrix: DenseMatrix) -> str:
    lines = [f"{matrix.rows} {matrix.cols}"]
    for row in matrix.entries:
        lines.append(" ".join(format_scalar(e) for e in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str, *, mode: str = "auto") -> DenseMatrix:
    """Parse the shared text format.

    mode="exact" rejects decimal literals; mode="float" forces floats;
    mode="auto" returns an exact matrix unless any token is a decimal
    literal, in which case the whole matrix is parsed as floats.
    """
    if mode not in ("auto", "exact", "float"):
        raise ValueError(f"unknown parse mode {mode!r}")
    lines = [(n, line) for n, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not lines:
        raise FormatError("empty matrix text")
    header_no, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise FormatError(f"line {header_no}: expected header 'm n', got {header.strip()!r}")
    n_rows, n_cols = int(parts[0]), int(parts[1])
    if n_rows < 1 or n_cols < 1:
        raise FormatError(f"line {header_no}: dimensions must be positive")
    body = lines[1:]
    if len(body) != n_rows:
        raise FormatError(f"expected {n_rows} rows after the header, found {len(body)}")

    tokens: list[tuple[int, list[str]]] = []
    for line_no, line in body:
        row_tokens = line.split()
        if len(row_tokens) != n_cols:
            raise FormatError(
                f"line {line_no}: expected {n_cols} entries, found {len(row_tokens)}"
            )
        tokens.append((line_no, row_tokens))

    effective = mode
    if mode == "auto":
        effective = "exact"
        for _, row_tokens in tokens:
            if any(not is_exact_token(tok) for tok in row_tokens):
                effective = "float"
                break

    rows = []
    for line_no, row_tokens in tokens:
        row = []
        for tok in row_tokens:
            try:
                row.append(parse_scalar(tok, mode=effective))
            except FormatError as exc:
                raise FormatError(f"line {line_no}: {exc}") from None
        rows.append(tuple(row))
    return DenseMatrix(tuple(rows), is_exact=(effective == "exact"))
