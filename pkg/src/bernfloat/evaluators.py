"""The two binary64 evaluation algorithms under test.

``decasteljau`` runs the classic convex-combination triangle; ``vs`` runs
the Horner-style scheme on scaled Bernstein coefficients. Both are written
so that every floating-point operation is individually rounded: plain
CPython float arithmetic maps each ``*``/``+``/``-``/``/`` to one IEEE-754
binary64 operation, and no fused multiply-add can be introduced. The error
bounds checked elsewhere count these roundings one by one, so the exact
operation schedule here is part of the contract, not an implementation
detail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

from .bernstein import BernsteinPoly

__all__ = ["EvalTriangle", "decasteljau", "vs"]

PolyLike = Union[BernsteinPoly, Sequence[float]]


@dataclass(frozen=True)
class EvalTriangle:
    """All intermediates of one de Casteljau run.

    ``levels[k]`` has length k+1 and holds the computed values at level k;
    ``levels[n]`` is the input coefficient vector bit-for-bit and
    ``levels[0]`` is the single final result.
    """

    levels: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.levels) - 1
        if n < 0:
            raise ValueError("triangle must have at least one level")
        for k, level in enumerate(self.levels):
            if len(level) != k + 1:
                raise ValueError(f"level {k} must have {k + 1} entries, got {len(level)}")

    @property
    def degree(self) -> int:
        return len(self.levels) - 1

    @property
    def result(self) -> float:
        return self.levels[0][0]


def _as_poly(p: PolyLike) -> BernsteinPoly:
    return p if isinstance(p, BernsteinPoly) else BernsteinPoly(p)


def decasteljau(p: PolyLike, s: float) -> tuple[float, EvalTriangle]:
    """Evaluate p at s with the de Casteljau triangle.

    The complement ``r = 1 - s`` is rounded once up front and reused by
    every level; each triangle entry then costs exactly two multiplies and
    one add, giving the 3n rounding count behind the a priori error bound.
    Evaluation is defined for any finite s (the error bounds assume
    s in [0, 1]).

    Returns the computed value together with the full triangle of
    intermediates for invariant inspection.
    """
    p = _as_poly(p)
    s = float(s)
    if not math.isfinite(s):
        raise ValueError(f"evaluation point must be finite, got {s}")

    n = p.degree
    rhat = 1.0 - s
    levels: list[tuple[float, ...]] = [p.coeffs]
    current = p.coeffs
    for k in range(n - 1, -1, -1):
        current = tuple(
            (rhat * current[j]) + (s * current[j + 1]) for j in range(k + 1)
        )
        levels.append(current)
    levels.reverse()
    return current[0], EvalTriangle(tuple(levels))


def vs(p: PolyLike, s: float) -> float:
    """Evaluate p at s with the Horner-style VS scheme.

    Branches on s >= 1/2 so the Horner ratio ``sigma`` is computed from the
    larger of s and 1-s (the divisor is then >= 1/2, hence never zero on
    [0, 1]): for s >= 1/2 the coefficients are reversed and
    ``sigma = (1-s)/s``, otherwise ``sigma = s/(1-s)``. Each Horner step
    multiplies by the binomial coefficient, rounded to binary64 once; the
    final result is the power of the larger factor times the Horner sum.

    Only s in [0, 1] is accepted; the branch and sign logic assume it.
    Note the bounds derived for this scheme additionally assume the
    binomial coefficients are exact, which holds for degree <= 56.
    """
    p = _as_poly(p)
    s = float(s)
    if math.isnan(s):
        raise ValueError("evaluation point must not be NaN")
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"vs requires s in [0, 1], got {s}")

    n = p.degree
    rhat = 1.0 - s
    if s >= 0.5:
        sigma = rhat / s
        m = s
        c = p.coeffs[::-1]
    else:
        sigma = s / rhat
        m = rhat
        c = p.coeffs

    ph = c[n]
    for k in range(n - 1, -1, -1):
        ph = (sigma * ph) + (float(math.comb(n, k)) * c[k])

    mh = m if n >= 1 else 1.0
    for _ in range(n - 1):
        mh = mh * m
    return mh * ph
