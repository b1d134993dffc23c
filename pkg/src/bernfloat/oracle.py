"""Exact rational ground truth for polynomial values, condition numbers
and forward errors.

All arithmetic here is ``fractions.Fraction``: there is no rounding of any
kind until a caller explicitly converts a result to binary64. The single
infinite quantity that can arise (a relative measure at an exact zero) is
carried as ``math.inf`` rather than an exception so experiment pipelines
stay total.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .bernstein import RationalLike, RationalPoly, binomial

__all__ = [
    "eval_exact",
    "eval_abs_exact",
    "condition_number",
    "relative_error",
    "ErrorReport",
    "RationalOrInf",
]

# Fraction for finite quantities, math.inf for the flagged infinite case.
RationalOrInf = Union[Fraction, float]


def _as_exact_point(s: RationalLike | float) -> Fraction:
    # Fraction(float) is exact; binary64 points lose nothing here.
    return Fraction(s)


def eval_exact(p: RationalPoly, s: RationalLike | float) -> Fraction:
    """Exact value of p at s: sum_j b_j * C(n,j) * (1-s)**(n-j) * s**j."""
    s = _as_exact_point(s)
    n = p.degree
    r = 1 - s
    total = Fraction(0)
    for j, b in enumerate(p.coeffs):
        total += b * binomial(n, j) * r ** (n - j) * s ** j
    return total


def eval_abs_exact(p: RationalPoly, s: RationalLike | float) -> Fraction:
    """Exact value of the absolute-coefficient companion polynomial.

    This is ``sum_j |b_j| * B_{j,n}(s)``, the numerator of the condition
    number of evaluation. Only defined on [0, 1], where the basis functions
    are nonnegative.
    """
    s = _as_exact_point(s)
    if not 0 <= s <= 1:
        raise ValueError(f"absolute-value evaluation requires s in [0, 1], got {s}")
    return eval_exact(RationalPoly(abs(c) for c in p.coeffs), s)


def condition_number(p: RationalPoly, s: RationalLike | float) -> RationalOrInf:
    """Condition number of evaluation at s: ptilde(s) / |p(s)|.

    Infinite (returned as math.inf) at a root where ptilde is nonzero;
    defined as 1 when both vanish, which only happens for the identically
    zero polynomial.
    """
    s = _as_exact_point(s)
    value = eval_exact(p, s)
    abs_value = eval_abs_exact(p, s)
    if value == 0:
        return Fraction(1) if abs_value == 0 else math.inf
    return abs_value / abs(value)


@dataclass(frozen=True)
class ErrorReport:
    """Forward-error record for one computed value against the exact one.

    ``abs_error`` is exact; ``rel_error`` is exact when the true value is
    nonzero and math.inf when a nonzero result was computed at an exact
    zero. ``cond`` is carried along when the caller supplies it.
    """

    exact_value: Fraction
    computed_value: float
    abs_error: Fraction
    rel_error: RationalOrInf
    cond: RationalOrInf | None = None


def relative_error(
    exact: RationalLike,
    computed: float,
    cond: RationalOrInf | None = None,
) -> ErrorReport:
    """Exact forward error of a binary64 result against the true value."""
    if not math.isfinite(computed):
        raise ValueError(f"computed value must be finite, got {computed}")
    exact = Fraction(exact)
    abs_err = abs(exact - Fraction(computed))
    if exact != 0:
        rel: RationalOrInf = abs_err / abs(exact)
    elif abs_err == 0:
        rel = Fraction(0)
    else:
        rel = math.inf
    return ErrorReport(exact, computed, abs_err, rel, cond)
