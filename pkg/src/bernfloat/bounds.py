"""A priori relative error bounds, and the special coefficient family
whose bound is dramatically smaller than the condition number suggests.

The special family is ``b0 * [(1-s) - 2**t * s]**n``: its Bernstein
coefficients satisfy ``b[j+1] = -2**t * b[j]`` exactly, binary64 preserves
that ratio through every intermediate of the de Casteljau triangle, and as
a consequence the evaluation behaves like a degree-n power of a single
rounded factor. That yields the improved relative bound
``(1 + |amplification| * gamma(3))**n - 1`` in place of the general
``gamma(3n) * cond``, where the amplification factor is
``((1-s) + 2**t*s) / ((1-s) - 2**t*s)`` and ``cond = |amplification|**n``.

All bounds are computed conservatively (never below their true rational
value) so dominance tests cannot fail through rounding of the bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .bernstein import BernsteinPoly, RationalLike, RationalPoly
from .evaluators import EvalTriangle
from .fpmodel import ceil_to_float, gamma, is_normal
from .oracle import RationalOrInf, condition_number

__all__ = [
    "PoleError",
    "FamilySpec",
    "detect_family",
    "amplification_factor",
    "improved_bound",
    "naive_bound",
    "decasteljau_bound",
    "VsBound",
    "vs_bound",
    "check_triangle_ratio",
    "VS_BOUND_MAX_DEGREE",
]

# Largest degree for which every binomial coefficient is exact in binary64;
# beyond it the VS rounding analysis loses one of its assumptions.
VS_BOUND_MAX_DEGREE = 56


class PoleError(ZeroDivisionError):
    """The amplification factor is undefined: s is the family's root."""


@dataclass(frozen=True)
class FamilySpec:
    """Parameters (b0, t, n) of a special-family polynomial.

    b0 is the leading binary64 coefficient, -2**t the exact consecutive
    coefficient ratio, n the degree. Validation requires every coefficient
    b0 * (-2**t)**j to be exactly representable, since the family's whole
    point is exact representability.
    """

    b0: float
    t: int
    n: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.b0) and self.b0 != 0.0):
            raise ValueError(f"b0 must be finite and nonzero, got {self.b0}")
        if self.n < 1:
            raise ValueError(f"degree must be >= 1, got {self.n}")
        extreme = Fraction(self.b0) * Fraction(2) ** (self.t * self.n)
        if not _representable(extreme):
            raise ValueError("family coefficients overflow or lose bits in binary64")

    def coefficients(self) -> BernsteinPoly:
        """The exact binary64 coefficient vector, built by exact scaling."""
        coeffs = [self.b0]
        for _ in range(self.n):
            coeffs.append(-math.ldexp(coeffs[-1], self.t))
        return BernsteinPoly(coeffs)


def _representable(x: Fraction) -> bool:
    try:
        f = float(x)
    except OverflowError:
        return False
    return math.isfinite(f) and Fraction(f) == x


def detect_family(p: BernsteinPoly) -> FamilySpec | None:
    """Recognize a special-family coefficient vector, bit-exactly.

    Returns the (b0, t, n) parameters iff every consecutive coefficient
    ratio equals the same -2**t exactly; no tolerance is involved because
    the improved bound's premises hold only for exact ratios. Any zero
    coefficient, degree 0, or a ratio that is not a negative power of two
    gives None.
    """
    b = p.coeffs
    if len(b) < 2 or any(c == 0.0 for c in b):
        return None
    m0, e0 = math.frexp(b[0])
    m1, e1 = math.frexp(b[1])
    if m1 != -m0:
        return None
    t = e1 - e0
    for j in range(len(b) - 1):
        try:
            expected = -math.ldexp(b[j], t)
        except OverflowError:
            return None
        if b[j + 1] != expected:
            return None
    return FamilySpec(b0=b[0], t=t, n=p.degree)


def amplification_factor(t: int, s: RationalLike | float) -> Fraction:
    """Exact value of ((1-s) + 2**t*s) / ((1-s) - 2**t*s).

    The condition number of the family polynomial at s is this factor's
    absolute value raised to the degree. Raises PoleError at the family's
    root s = 1/(1 + 2**t), where the factor is undefined.
    """
    s = Fraction(s)
    two_t = Fraction(2) ** t
    denom = (1 - s) - two_t * s
    if denom == 0:
        raise PoleError(f"amplification factor undefined at s = {s}")
    return ((1 - s) + two_t * s) / denom


def improved_bound(n: int, t: int, s: RationalLike | float) -> float:
    """Family-only relative error bound (1 + |amp| * gamma(3))**n - 1.

    Grows like n * |amp| * gamma(3) while the condition number grows like
    |amp|**n, so for ill-conditioned family points it is smaller than the
    general bound by many orders of magnitude. Conservative: the returned
    binary64 is >= the exact value of the formula.
    """
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    amp = abs(amplification_factor(t, s))
    exact = (1 + amp * Fraction(gamma(3))) ** n - 1
    return ceil_to_float(exact)


def naive_bound(n: int, t: int, s: RationalLike | float) -> float:
    """General-case bound gamma(3n) * |amp|**n specialized to the family.

    Equals gamma(3n) * cond, since the family's condition number is
    |amp|**n. Conservative in the same sense as ``improved_bound``.
    """
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    amp = abs(amplification_factor(t, s))
    exact = Fraction(gamma(3 * n)) * amp ** n
    return ceil_to_float(exact)


def decasteljau_bound(p: RationalPoly, s: RationalLike | float) -> RationalOrInf:
    """Relative a priori bound gamma(3n) * cond(p, s) for de Casteljau.

    Exact rational except for the conservative gamma factor; math.inf at a
    root of p where the companion polynomial is nonzero. Degree 0 gives 0:
    no floating-point operation is performed.
    """
    n = p.degree
    if n == 0:
        return Fraction(0)
    cond = condition_number(p, s)
    g = Fraction(gamma(3 * n))
    return math.inf if cond == math.inf else g * cond


class VsBound(NamedTuple):
    """VS relative bound plus a validity flag (False when degree > 56)."""

    value: RationalOrInf
    valid: bool


def vs_bound(p: RationalPoly, s: RationalLike | float) -> VsBound:
    """Relative a priori bound for the VS scheme at s in [0, 1].

    gamma(6n) * cond below the branch point s = 1/2 (the power chain
    carries the rounded complement), gamma(5n) * cond at and above it.
    For degree > 56 a binomial coefficient is no longer exact in binary64,
    which the underlying analysis assumes; the bound is still returned but
    flagged invalid.
    """
    s = Fraction(s)
    if not 0 <= s <= 1:
        raise ValueError(f"vs bound requires s in [0, 1], got {s}")
    n = p.degree
    valid = n <= VS_BOUND_MAX_DEGREE
    if n == 0:
        return VsBound(Fraction(0), valid)
    cond = condition_number(p, s)
    g = Fraction(gamma(5 * n if s >= Fraction(1, 2) else 6 * n))
    value: RationalOrInf = math.inf if cond == math.inf else g * cond
    return VsBound(value, valid)


def check_triangle_ratio(triangle: EvalTriangle, spec: FamilySpec) -> bool | None:
    """Verify the family ratio survives in the *computed* triangle.

    For a family input, every de Casteljau level inherits the exact
    coefficient ratio: ``levels[k][j+1] == -2**t * levels[k][j]`` with no
    round-off, as long as nothing overflows or underflows. The comparison
    is exact equality (signed zeros compare equal; they only arise when a
    level cancels to exactly zero and the ratio degenerates).

    Returns None (indeterminate) when the triangle contains a non-finite
    or subnormal value, since the exactness guarantee assumes neither
    overflow nor underflow. Raises ValueError if the triangle's input level
    does not match the spec's coefficients.
    """
    if triangle.levels[-1] != spec.coefficients().coeffs:
        raise ValueError("triangle was not produced from the spec's coefficients")

    for level in triangle.levels:
        for v in level:
            if v != 0.0 and not is_normal(v):
                return None
    for level in triangle.levels:
        for j in range(len(level) - 1):
            try:
                expected = -math.ldexp(level[j], spec.t)
            except OverflowError:
                return None
            if level[j + 1] != expected:
                return False
    return True
