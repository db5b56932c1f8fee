"""Build equal-modulus matrices realizing any prescribed pairwise row dots.

Given a rational target vector a (one value per row pair), the inverse
Walsh transform of the sparse spectrum that places a_L on the pair mask of
L yields a weight vector whose dot with every pair-product row is exactly
a_L.  Shifting by a multiple of the all-ones vector (which is orthogonal to
every pair-product row) makes the weights nonnegative without changing any
dot product; the result is realizable as a matrix.

Three realizations are provided:

* canonical - one column of scale sqrt(v_i) per nonzero weight v_i;
* uniform rational - every entry is +-1/d for a single integer d;
* uniform irrational - every entry is +-1/(d*sqrt(2)).

The uniform flavors exist only for rational targets: in a matrix whose
entries all have modulus r, every pairwise row dot product is an integer
multiple of r^2, so a target mixing nonzero rationals and irrationals is
rejected as infeasible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .classify import HadamardesqueMatrix, RepresentationVector, WeightedColumn, PairwiseDots
from .errors import InfeasibleError
from .scalars import SqrtRational
from .walsh import MAX_VECTOR_M, fwht, pair_count, pair_to_mask

FLAVORS = ("canonical", "rational", "irrational")


@dataclass(frozen=True)
class ConstructionOptions:
    """Shift policy, realization flavor, and output expansion.

    shift: "minimal" (smallest exact shift), "minimal-integer" (smallest
    integer shift), or an explicit nonnegative-making value.
    """

    shift: object = "minimal"
    flavor: str = "canonical"
    expand: bool = False

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError(f"flavor must be one of {FLAVORS}, got {self.flavor!r}")
        if isinstance(self.shift, str) and self.shift not in ("minimal", "minimal-integer"):
            raise ValueError(f"unknown shift policy {self.shift!r}")


_UNIFORM_REASON = (
    "every pairwise row dot of a uniform-modulus matrix is an integer multiple "
    "of the squared entry modulus, so this target is unrealizable"
)
_EXACT_REASON = "the exact constructor realizes rational targets only"


def _target_fractions(m: int, a, *, reason: str = _EXACT_REASON) -> list[Fraction]:
    if isinstance(a, PairwiseDots):
        if a.m != m:
            raise ValueError(f"target has m={a.m}, caller said m={m}")
        a = a.values
    values = list(a)
    if len(values) != pair_count(m):
        raise ValueError(
            f"target needs {pair_count(m)} coordinates for m={m}, got {len(values)}"
        )
    out = []
    for pos, value in enumerate(values, start=1):
        if isinstance(value, SqrtRational):
            if not value.is_rational:
                raise InfeasibleError(
                    f"target coordinate {pos} is irrational ({value}); {reason}"
                )
            value = value.as_fraction()
        out.append(Fraction(value))
    return out


def _resolve_shift(shift, floor: Fraction) -> Fraction:
    """The shift to add to the raw weights, given the minimal feasible value."""
    if shift == "minimal":
        return floor
    if shift == "minimal-integer":
        return Fraction(math.ceil(floor))
    value = Fraction(shift)
    if value < floor:
        raise ValueError(f"explicit shift {value} leaves negative weights (need >= {floor})")
    return value


def construct_crv(m: int, a: Sequence, options: ConstructionOptions | None = None) -> RepresentationVector:
    """Nonnegative weight vector whose pair-row dots equal the target exactly.

    A zero target short-circuits to the all-ones weights (realized by the
    full truth table), since the minimal shift would otherwise produce the
    empty zero vector.
    """
    opts = options or ConstructionOptions()
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    if m > MAX_VECTOR_M:
        raise ValueError(f"m={m} exceeds the vector cap {MAX_VECTOR_M}")
    target = _target_fractions(m, a)
    n = 1 << (m - 1)
    explicit = not isinstance(opts.shift, str)
    if all(v == 0 for v in target) and not explicit:
        return RepresentationVector(m, (Fraction(1),) * n)
    spectrum = [Fraction(0)] * n
    for L, value in enumerate(target, start=1):
        spectrum[pair_to_mask(m, L)] = value
    raw = [v / n for v in fwht(spectrum)]
    shift = _resolve_shift(opts.shift, max(Fraction(0), -min(raw)))
    return RepresentationVector(m, tuple(v + shift for v in raw))


def realize_canonical(v: RepresentationVector) -> HadamardesqueMatrix:
    """One column of scale sqrt(v_i) per nonzero weight."""
    columns = tuple(
        WeightedColumn(q=value, index=i)
        for i, value in enumerate(v.values, start=1)
        if value != 0
    )
    if not columns:
        raise ValueError("all-zero weight vector: a matrix needs at least one column")
    return HadamardesqueMatrix(v.m, columns)


def realize_uniform_rational(m: int, a: Sequence, options: ConstructionOptions | None = None) -> HadamardesqueMatrix:
    """Realize a rational target with every entry equal to +-1/d.

    Two stages: first each weight p/q (lowest terms) becomes p*q copies of
    the truth column scaled by 1/q; then with d the lcm of the per-column
    denominators, each column at scale 1/q is replaced by (d/q)^2 copies at
    scale 1/d.  Weights, and hence all dot products, are unchanged.
    """
    opts = options or ConstructionOptions(flavor="rational")
    target = _target_fractions(m, a, reason=_UNIFORM_REASON)
    v = construct_crv(m, target, opts)
    staged = [
        (i, value.numerator, value.denominator)
        for i, value in enumerate(v.values, start=1)
        if value != 0
    ]
    if not staged:
        raise ValueError("all-zero weight vector: a matrix needs at least one column")
    d = math.lcm(*(den for _, _, den in staged))
    q = Fraction(1, d * d)
    columns = tuple(
        WeightedColumn(q=q, index=i, multiplicity=num * den * (d // den) ** 2)
        for i, num, den in staged
    )
    return HadamardesqueMatrix(m, columns)


def realize_uniform_irrational(m: int, a: Sequence, options: ConstructionOptions | None = None) -> HadamardesqueMatrix:
    """Realize a rational target with every entry equal to +-1/(d*sqrt(2)).

    Doubles every column of the uniform rational realization and halves the
    squared scale; weights and dot products are unchanged, but the shared
    entry modulus sqrt(1/(2 d^2)) is irrational.
    """
    base = realize_uniform_rational(m, a, options)
    columns = tuple(
        WeightedColumn(q=col.q / 2, index=col.index, multiplicity=col.multiplicity * 2)
        for col in base.columns
    )
    return HadamardesqueMatrix(m, columns)


def construct_matrix(m: int, a: Sequence, options: ConstructionOptions | None = None):
    """Dispatch on the requested flavor; honours options.expand."""
    opts = options or ConstructionOptions()
    if opts.flavor == "canonical":
        result = realize_canonical(construct_crv(m, a, opts))
    elif opts.flavor == "rational":
        result = realize_uniform_rational(m, a, opts)
    else:
        result = realize_uniform_irrational(m, a, opts)
    return result.dense() if opts.expand else result
