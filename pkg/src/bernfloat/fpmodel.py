"""Binary64 arithmetic model: unit roundoff, gamma quantities, exact scaling.

Everything here assumes IEEE-754 double precision with round-to-nearest,
ties-to-even (the CPython float semantics). The gamma quantities are the
standard bounds ``k*u / (1 - k*u)`` on the accumulated perturbation of k
correctly rounded operations; they are computed *conservatively* (never
below the true rational value) so that bound checks elsewhere stay valid
even after the bound itself is rounded.
"""

from __future__ import annotations

import math
import struct
import sys
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "unit_roundoff",
    "gamma",
    "gamma_exact",
    "GammaBound",
    "exact_scaling_holds",
    "ceil_to_float",
    "is_normal",
    "same_bits",
    "GAMMA_MAX_COUNT",
]

_U = 2.0 ** -53
_U_EXACT = Fraction(1, 2 ** 53)
_MIN_NORMAL = sys.float_info.min

# k*u < 1 holds up to k = 2**53 - 1, but gamma is meaningless as an error
# bound long before that; cap the count so callers catch unit mix-ups.
GAMMA_MAX_COUNT = 10 ** 9


def unit_roundoff() -> float:
    """Unit roundoff u of binary64, exactly 2**-53."""
    return _U


def gamma_exact(k: int) -> Fraction:
    """Exact rational value of k*u / (1 - k*u) = k / (2**53 - k)."""
    if k < 0 or k > GAMMA_MAX_COUNT:
        raise ValueError(f"rounding count must be in [0, {GAMMA_MAX_COUNT}], got {k}")
    return Fraction(k, 2 ** 53 - k)


def gamma(k: int) -> float:
    """Upper bound k*u/(1-k*u) for a product of k rounding perturbations.

    The result is rounded *upward*, so ``gamma(k) >= k*u/(1-k*u)`` holds
    exactly; dominance tests against it can never fail because of rounding
    inside the bound itself.

    Raises ``ValueError`` for k < 0 or k > GAMMA_MAX_COUNT.
    """
    return ceil_to_float(gamma_exact(k))


@dataclass(frozen=True)
class GammaBound:
    """A rounding count k together with the conservative bound gamma(k)."""

    k: int
    value: float

    def __post_init__(self) -> None:
        if self.k < 0 or self.k > GAMMA_MAX_COUNT:
            raise ValueError(f"invalid rounding count {self.k}")
        if self.value != gamma(self.k):
            raise ValueError("value is not the conservative gamma of k")

    @classmethod
    def of(cls, k: int) -> "GammaBound":
        return cls(k, gamma(k))


def ceil_to_float(x: Fraction | int) -> float:
    """Smallest binary64 value >= x (math.inf if x exceeds the finite range)."""
    try:
        f = float(x)
    except OverflowError:
        return math.inf
    if math.isinf(f):
        return f
    if Fraction(f) < x:
        f = math.nextafter(f, math.inf)
    return f


def is_normal(x: float) -> bool:
    """True iff x is finite, nonzero and not subnormal."""
    return math.isfinite(x) and abs(x) >= _MIN_NORMAL


def same_bits(a: float, b: float) -> bool:
    """Bit-pattern equality (distinguishes +0.0 from -0.0, unlike ==)."""
    return struct.pack("<d", a) == struct.pack("<d", b)


def exact_scaling_holds(a: float, b: float, t: int) -> bool | None:
    """Check the two power-of-two scaling identities bit-exactly.

    Verifies ``(-2**t * a) * b == -2**t * (a * b)`` and
    ``(-2**t * a) + (-2**t * b) == -2**t * (a + b)`` with every operation
    individually rounded. Both identities are guaranteed when no overflow
    or underflow occurs, so a False return indicates a broken float
    environment.

    Returns None (indeterminate) when any intermediate is zero, subnormal
    or non-finite; such cases are outside the guarantee and must be
    reported as skipped rather than as failures.
    """
    if not (-1000 <= t <= 1000):
        raise ValueError(f"scale exponent out of range: {t}")
    if not (math.isfinite(a) and math.isfinite(b)):
        return None

    sa = -math.ldexp(a, t)  # exact when the result is normal
    sb = -math.ldexp(b, t)
    ab = a * b
    apb = a + b
    lhs_mul = sa * b
    lhs_add = sa + sb
    rhs_mul = -math.ldexp(ab, t)
    rhs_add = -math.ldexp(apb, t)

    for v in (sa, sb, ab, apb, lhs_mul, lhs_add, rhs_mul, rhs_add):
        if not is_normal(v):
            return None
    return same_bits(lhs_mul, rhs_mul) and same_bits(lhs_add, rhs_add)
