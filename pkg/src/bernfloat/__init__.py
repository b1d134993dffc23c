"""Round-off error analysis for Bernstein-form polynomial evaluation.

The package pairs two binary64 evaluation algorithms (the de Casteljau
triangle and the Horner-style VS scheme) with an exact rational oracle,
the standard a priori error bounds for both, and a much tighter bound for
the coefficient family ``b0 * [(1-s) - 2**t*s]**n`` whose consecutive
coefficients keep their exact ratio through the computed triangle. The
``experiments`` module reproduces the error-vs-bound studies as
deterministic CSV tables, and the ``bernfloat`` CLI drives them.
"""

from .bernstein import (
    BernsteinPoly,
    Rational,
    RationalPoly,
    binomial,
    family_rational,
    poly_from_roots,
    round_coeffs,
)
from .bounds import (
    FamilySpec,
    PoleError,
    VsBound,
    amplification_factor,
    check_triangle_ratio,
    decasteljau_bound,
    detect_family,
    improved_bound,
    naive_bound,
    vs_bound,
)
from .evaluators import EvalTriangle, decasteljau, vs
from .fpmodel import GammaBound, exact_scaling_holds, gamma, gamma_exact, unit_roundoff
from .oracle import (
    ErrorReport,
    condition_number,
    eval_abs_exact,
    eval_exact,
    relative_error,
)

__all__ = [
    "BernsteinPoly",
    "Rational",
    "RationalPoly",
    "binomial",
    "family_rational",
    "poly_from_roots",
    "round_coeffs",
    "FamilySpec",
    "PoleError",
    "VsBound",
    "amplification_factor",
    "check_triangle_ratio",
    "decasteljau_bound",
    "detect_family",
    "improved_bound",
    "naive_bound",
    "vs_bound",
    "EvalTriangle",
    "decasteljau",
    "vs",
    "GammaBound",
    "exact_scaling_holds",
    "gamma",
    "gamma_exact",
    "unit_roundoff",
    "ErrorReport",
    "condition_number",
    "eval_abs_exact",
    "eval_exact",
    "relative_error",
]

__version__ = "0.1.0"
