"""Bernstein-form polynomials: binary64 and exact-rational representations.

A degree-n polynomial in Bernstein form is ``sum_j b_j * C(n,j) *
(1-s)**(n-j) * s**j``. ``BernsteinPoly`` carries the binary64 coefficient
vector the evaluation algorithms consume; ``RationalPoly`` carries exact
``fractions.Fraction`` coefficients and feeds the oracle. Rounding between
the two is explicit (``round_coeffs``) so that coefficient representability
is always a visible fact, never an accident.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "Rational",
    "RationalLike",
    "BernsteinPoly",
    "RationalPoly",
    "binomial",
    "poly_from_roots",
    "family_rational",
    "round_coeffs",
]

# Exact rational scalar; stdlib Fractions are always reduced with a
# positive denominator, which is exactly the invariant we need.
Rational = Fraction
RationalLike = Union[Fraction, int]

_BINOMIAL_MAX_N = 10 ** 4


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient C(n, k) for 0 <= k <= n <= 10**4."""
    if not (0 <= k <= n <= _BINOMIAL_MAX_N):
        raise ValueError(f"binomial out of range: n={n}, k={k}")
    return math.comb(n, k)


@dataclass(frozen=True)
class BernsteinPoly:
    """Binary64 Bernstein coefficients b_0..b_n of a degree-n polynomial."""

    coeffs: tuple[float, ...]

    def __init__(self, coeffs: Iterable[float]) -> None:
        cs = tuple(float(c) for c in coeffs)
        if len(cs) < 1:
            raise ValueError("a Bernstein polynomial needs at least one coefficient")
        if not all(math.isfinite(c) for c in cs):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def as_rational(self) -> "RationalPoly":
        """Exact promotion; every binary64 value is a rational."""
        return RationalPoly(Fraction(c) for c in self.coeffs)


@dataclass(frozen=True)
class RationalPoly:
    """Exact rational Bernstein coefficients, the oracle's representation."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike]) -> None:
        cs = tuple(Fraction(c) for c in coeffs)
        if len(cs) < 1:
            raise ValueError("a Bernstein polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def _multiply_by_linear(coeffs: Sequence[Fraction], root: Fraction) -> list[Fraction]:
    # Bernstein product of a degree-m form with (s - root), whose degree-1
    # coefficients are (-root, 1 - root); degree elevation is folded in:
    #   c_k = sum_j C(m,j) C(1,k-j) / C(m+1,k) * a_j * d_{k-j}
    m = len(coeffs) - 1
    d0, d1 = -root, 1 - root
    out: list[Fraction] = []
    for k in range(m + 2):
        acc = Fraction(0)
        if k <= m:
            acc += binomial(m, k) * coeffs[k] * d0
        if 1 <= k <= m + 1:
            acc += binomial(m, k - 1) * coeffs[k - 1] * d1
        out.append(acc / binomial(m + 1, k))
    return out


def poly_from_roots(roots: Iterable[RationalLike]) -> RationalPoly:
    """Exact Bernstein coefficients of prod_j (s - r_j).

    Built by repeated Bernstein-form multiplication with the linear factors,
    so the result is exact for rational roots. An empty root list gives the
    constant polynomial 1.
    """
    coeffs = [Fraction(1)]
    for r in roots:
        coeffs = _multiply_by_linear(coeffs, Fraction(r))
    return RationalPoly(coeffs)


def family_rational(b0: RationalLike, t: int, n: int) -> RationalPoly:
    """Exact coefficients b0 * (-2**t)**j of b0*[(1-s) - 2**t*s]**n.

    Consecutive coefficients of this family have the exact ratio -2**t,
    which binary64 preserves bit-for-bit as long as no overflow or
    underflow occurs.
    """
    if n < 1:
        raise ValueError(f"family degree must be >= 1, got {n}")
    b0 = Fraction(b0)
    ratio = -(Fraction(2) ** t)
    return RationalPoly(b0 * ratio ** j for j in range(n + 1))


def round_coeffs(p: RationalPoly) -> tuple[BernsteinPoly, bool]:
    """Round each coefficient to the nearest binary64 (ties to even).

    Returns the rounded polynomial together with an exactness flag that is
    True iff every coefficient was already representable. Raises
    ``OverflowError`` when a coefficient exceeds the finite binary64 range.
    """
    rounded = []
    exact = True
    for c in p.coeffs:
        try:
            f = float(c)
        except OverflowError:
            raise OverflowError(f"coefficient {c} overflows binary64") from None
        if math.isinf(f):
            raise OverflowError(f"coefficient {c} overflows binary64")
        rounded.append(f)
        exact = exact and Fraction(f) == c
    return BernsteinPoly(rounded), exact
