"""Deterministic reproductions of the three error-vs-bound experiments.

Each experiment evaluates a fixed set of polynomials at a fixed grid of
binary64 points, measures the forward error of the evaluation algorithms
against the exact rational oracle, and tabulates the a priori bounds next
to the measured errors. Results are emitted as CSV with shortest
round-trip decimal fields, so two runs produce byte-identical files.

Evaluation points are the binary64 roundings of their defining formulas,
computed left-to-right with individually rounded operations (for example
``fl(fl(2j-1)/72)``); the powers 2.1**e are built by repeated
multiplication for the same reason. The oracle then evaluates at the exact
rational value of the rounded point: the error measured is purely the
algorithm's, never the point representation's.
"""

from __future__ import annotations

import csv
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import IO, Iterable, Union

from .bernstein import BernsteinPoly, RationalPoly, family_rational, poly_from_roots, round_coeffs
from .bounds import (
    FamilySpec,
    PoleError,
    VsBound,
    check_triangle_ratio,
    decasteljau_bound,
    detect_family,
    improved_bound,
    naive_bound,
    vs_bound,
)
from .evaluators import decasteljau, vs
from .fpmodel import ceil_to_float, exact_scaling_holds
from .oracle import RationalOrInf, condition_number, eval_exact, relative_error

__all__ = [
    "COLUMNS",
    "ExperimentRow",
    "CaseResult",
    "PreparedPoly",
    "prepare",
    "run_case",
    "fig1_cases",
    "fig2_cases",
    "fig3_cases",
    "fig1_experiment",
    "fig2_experiment",
    "fig3_experiment",
    "rows_from_cases",
    "emit_csv",
    "parse_csv",
    "verify_bound_dominance",
    "PropertySample",
    "sample_scaling_identities",
    "sample_family_triangles",
]

COLUMNS = (
    "experiment",
    "poly",
    "e_or_j",
    "s",
    "cond",
    "err_dc",
    "err_vs",
    "bound_dc",
    "bound_vs",
    "bound_improved",
    "bound_naive",
    "flags",
)

FLAG_POLE = "pole"
FLAG_EXACT_ZERO = "exact-zero"
FLAG_BOUND_INVALID = "bound-invalid"


@dataclass(frozen=True)
class ExperimentRow:
    """One CSV row: a point's measured errors and bounds, as binary64.

    Measured quantities are rounded to nearest; bounds are rounded upward,
    so the row-level invariant err <= bound survives serialization. Fields
    an experiment does not produce are None and serialize as empty.
    """

    experiment: str
    poly: str
    e_or_j: int
    s: float
    cond: float | None
    err_dc: float | None
    err_vs: float | None
    bound_dc: float | None
    bound_vs: float | None
    bound_improved: float | None
    bound_naive: float | None
    flags: tuple[str, ...] = ()


@dataclass(frozen=True)
class PreparedPoly:
    """A polynomial as the algorithms receive it.

    ``coeffs`` is the binary64 vector fed to both algorithms; ``exact`` is
    the same vector promoted back to rationals, which is the polynomial all
    errors are measured against. ``defining_exact`` records whether the
    defining rational coefficients were representable to begin with.
    """

    poly_id: str
    coeffs: BernsteinPoly
    exact: RationalPoly
    defining_exact: bool
    family: FamilySpec | None


def prepare(poly_id: str, defining: RationalPoly) -> PreparedPoly:
    coeffs, was_exact = round_coeffs(defining)
    return PreparedPoly(
        poly_id=poly_id,
        coeffs=coeffs,
        exact=coeffs.as_rational(),
        defining_exact=was_exact,
        family=detect_family(coeffs),
    )


@dataclass(frozen=True)
class CaseResult:
    """Full-precision record of one (polynomial, point) evaluation.

    Errors, condition number and algorithm bounds are exact rationals
    (math.inf for the flagged infinite cases); the two family bounds are
    the conservative binary64 values of their formulas. CSV rows are
    roundings of this record.
    """

    poly_id: str
    index: int
    s: float
    dc_value: float
    vs_value: float | None
    exact_value: Fraction
    cond: RationalOrInf
    err_dc: RationalOrInf
    err_vs: RationalOrInf | None
    bound_dc: RationalOrInf
    bound_vs: VsBound | None
    bound_improved: float | None
    bound_naive: float | None
    flags: tuple[str, ...]


def run_case(
    poly: PreparedPoly,
    index: int,
    s: float,
    *,
    with_vs: bool,
    with_improved: bool = False,
    with_naive: bool = False,
) -> CaseResult:
    """Evaluate one point with both algorithms and the oracle."""
    dc_value, _ = decasteljau(poly.coeffs, s)
    vs_value = vs(poly.coeffs, s) if with_vs else None

    s_exact = Fraction(s)
    exact_value = eval_exact(poly.exact, s_exact)
    cond = condition_number(poly.exact, s_exact)
    err_dc = relative_error(exact_value, dc_value).rel_error
    err_vs = relative_error(exact_value, vs_value).rel_error if with_vs else None
    bound_dc = decasteljau_bound(poly.exact, s_exact)
    bound_for_vs = vs_bound(poly.exact, s_exact) if with_vs else None

    flags: list[str] = []
    if exact_value == 0:
        flags.append(FLAG_EXACT_ZERO)
    if bound_for_vs is not None and not bound_for_vs.valid:
        flags.append(FLAG_BOUND_INVALID)

    bi = bn = None
    if poly.family is not None and (with_improved or with_naive):
        fam = poly.family
        try:
            if with_improved:
                bi = improved_bound(fam.n, fam.t, s)
            if with_naive:
                bn = naive_bound(fam.n, fam.t, s)
        except PoleError:
            flags.append(FLAG_POLE)
            bi = bn = None

    return CaseResult(
        poly_id=poly.poly_id,
        index=index,
        s=s,
        dc_value=dc_value,
        vs_value=vs_value,
        exact_value=exact_value,
        cond=cond,
        err_dc=err_dc,
        err_vs=err_vs,
        bound_dc=bound_dc,
        bound_vs=bound_for_vs,
        bound_improved=bi,
        bound_naive=bn,
        flags=tuple(flags),
    )


# ---------------------------------------------------------------------------
# Point grids
# ---------------------------------------------------------------------------

def growth_factor(e: int) -> float:
    """fl(2.1**e) built by left-to-right multiplication, one rounding each."""
    if e < 1:
        raise ValueError(f"exponent must be >= 1, got {e}")
    n = 2.1
    for _ in range(e - 1):
        n = n * 2.1
    return n


def point_u(e: int) -> float:
    """fl(1/4 + 6/(16*N)) with N = fl(2.1**e)."""
    n = growth_factor(e)
    return 0.25 + 6.0 / (16.0 * n)


def point_v(e: int) -> float:
    """fl(1/5 + 8/(25*N)) with N = fl(2.1**e)."""
    n = growth_factor(e)
    return 0.2 + 8.0 / (25.0 * n)


def point_w(e: int) -> float:
    """fl(1/6 + 10/(36*N)) with N = fl(2.1**e)."""
    n = growth_factor(e)
    return 1.0 / 6.0 + 10.0 / (36.0 * n)


# ---------------------------------------------------------------------------
# The three suites
# ---------------------------------------------------------------------------

def _poly_u() -> PreparedPoly:
    # (1 - 4s)**5 = [(1-s) - 3s]**5: coefficients (-3)**j, exactly representable.
    return prepare("u", RationalPoly(Fraction(-3) ** j for j in range(6)))


def _poly_v() -> PreparedPoly:
    # (1 - 5s)**5 = [(1-s) - 4s]**5: the family member with b0=1, t=2, n=5.
    return prepare("v", family_rational(1, 2, 5))


def _poly_w() -> PreparedPoly:
    # (1 - 6s)**5 = [(1-s) - 5s]**5: coefficients (-5)**j, exactly representable.
    return prepare("w", RationalPoly(Fraction(-5) ** j for j in range(6)))


def _poly_f() -> PreparedPoly:
    # prod_{j=1..20} (s - j/20); not representable, so rounding applies.
    return prepare("f", poly_from_roots(Fraction(j, 20) for j in range(1, 21)))


def _poly_g() -> PreparedPoly:
    # prod_{j=1..20} (s - 2/2**j); binomial denominators make it inexact too.
    return prepare("g", poly_from_roots(Fraction(2, 2 ** j) for j in range(1, 21)))


def _poly_h() -> PreparedPoly:
    # (s - 1/2)**20 = 2**-20 * [(1-s) - s]**20: family member, b0=2**-20, t=0.
    return prepare("h", family_rational(Fraction(1, 2 ** 20), 0, 20))


def fig1_cases(e_max: int = 45) -> list[CaseResult]:
    """Three near-root quintics, de Casteljau only, cond growing like N**5.

    Only the middle polynomial belongs to the special family, so only its
    rows carry the improved bound; the interesting outcome is how far its
    error falls below the general bound that the other two track.
    """
    if e_max < 1:
        raise ValueError(f"e_max must be >= 1, got {e_max}")
    suite = ((_poly_u(), point_u), (_poly_v(), point_v), (_poly_w(), point_w))
    cases = []
    for poly, point in suite:
        for e in range(1, e_max + 1):
            cases.append(
                run_case(poly, e, point(e), with_vs=False,
                         with_improved=poly.family is not None)
            )
    return cases


def fig2_cases() -> list[CaseResult]:
    """The family quintic on the exponential grid, naive vs improved bound."""
    poly = _poly_v()
    return [
        run_case(poly, e, point_v(e), with_vs=False, with_improved=True, with_naive=True)
        for e in range(1, 46)
    ]


def fig3_cases() -> list[CaseResult]:
    """Degree-20 comparison of de Casteljau and VS on three classic polynomials."""
    cases = []
    f = _poly_f()
    for j in range(1, 37):
        cases.append(run_case(f, j, float(2 * j - 1) / 72.0, with_vs=True))
    g = _poly_g()
    for j in range(1, 39):
        cases.append(run_case(g, j, float(j) / 39.0, with_vs=True))
    h = _poly_h()
    for j in range(1, 25):
        cases.append(run_case(h, j, float(4 * j) / 100.0, with_vs=True, with_improved=True))
    return cases


def _nearest_float(x: RationalOrInf | None) -> float | None:
    if x is None:
        return None
    if isinstance(x, float):
        return x
    try:
        return float(x)
    except OverflowError:
        return math.inf


def _ceil_float(x: RationalOrInf | None) -> float | None:
    if x is None:
        return None
    if isinstance(x, float):
        return x
    return ceil_to_float(x)


def rows_from_cases(experiment: str, cases: Iterable[CaseResult]) -> list[ExperimentRow]:
    """Round case records to CSV rows: errors to nearest, bounds upward."""
    rows = []
    for c in cases:
        rows.append(
            ExperimentRow(
                experiment=experiment,
                poly=c.poly_id,
                e_or_j=c.index,
                s=c.s,
                cond=_nearest_float(c.cond),
                err_dc=_nearest_float(c.err_dc),
                err_vs=_nearest_float(c.err_vs),
                bound_dc=_ceil_float(c.bound_dc),
                bound_vs=_ceil_float(c.bound_vs.value) if c.bound_vs is not None else None,
                bound_improved=c.bound_improved,
                bound_naive=c.bound_naive,
                flags=c.flags,
            )
        )
    return rows


def fig1_experiment(e_max: int = 45) -> list[ExperimentRow]:
    return rows_from_cases("fig1", fig1_cases(e_max))


def fig2_experiment() -> list[ExperimentRow]:
    return rows_from_cases("fig2", fig2_cases())


def fig3_experiment() -> list[ExperimentRow]:
    return rows_from_cases("fig3", fig3_cases())


# ---------------------------------------------------------------------------
# CSV serialization
# ---------------------------------------------------------------------------

def _format_field(value: float | None) -> str:
    if value is None:
        return ""
    return repr(value)  # shortest round-trip decimal


def emit_csv(rows: Iterable[ExperimentRow], destination: Union[str, Path, IO[str]]) -> None:
    """Write rows as UTF-8 CSV with a header, in the given order.

    Floats are serialized as shortest round-trip decimals, so parsing the
    file recovers every row bit-exactly and repeated runs are
    byte-identical.
    """
    if isinstance(destination, (str, Path)):
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            _write_rows(rows, fh)
    else:
        _write_rows(rows, destination)


def _write_rows(rows: Iterable[ExperimentRow], fh: IO[str]) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(COLUMNS)
    for r in rows:
        writer.writerow(
            [
                r.experiment,
                r.poly,
                str(r.e_or_j),
                _format_field(r.s),
                _format_field(r.cond),
                _format_field(r.err_dc),
                _format_field(r.err_vs),
                _format_field(r.bound_dc),
                _format_field(r.bound_vs),
                _format_field(r.bound_improved),
                _format_field(r.bound_naive),
                ";".join(r.flags),
            ]
        )


def parse_csv(source: Union[str, Path, IO[str]]) -> list[ExperimentRow]:
    """Read back a CSV produced by ``emit_csv``, bit-exactly."""
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8", newline="") as fh:
            return _read_rows(fh)
    return _read_rows(source)


def _read_rows(fh: IO[str]) -> list[ExperimentRow]:
    reader = csv.reader(fh)
    header = next(reader, None)
    if header is None or tuple(header) != COLUMNS:
        raise ValueError(f"unexpected CSV header: {header}")
    rows = []
    for rec in reader:
        if len(rec) != len(COLUMNS):
            raise ValueError(f"malformed CSV record: {rec}")
        opt = lambda text: None if text == "" else float(text)
        rows.append(
            ExperimentRow(
                experiment=rec[0],
                poly=rec[1],
                e_or_j=int(rec[2]),
                s=float(rec[3]),
                cond=opt(rec[4]),
                err_dc=opt(rec[5]),
                err_vs=opt(rec[6]),
                bound_dc=opt(rec[7]),
                bound_vs=opt(rec[8]),
                bound_improved=opt(rec[9]),
                bound_naive=opt(rec[10]),
                flags=tuple(rec[11].split(";")) if rec[11] else (),
            )
        )
    return rows


# ---------------------------------------------------------------------------
# Invariant suites (shared by the CLI check command and the test suite)
# ---------------------------------------------------------------------------

def verify_bound_dominance(cases: Iterable[CaseResult]) -> list[str]:
    """Exact-rational dominance check: every error at or below its bound.

    Returns one message per violation (empty list means all hold). The VS
    comparison is skipped where its bound is flagged invalid.
    """
    problems = []
    for c in cases:
        if not c.err_dc <= c.bound_dc:
            problems.append(
                f"{c.poly_id}[{c.index}]: de Casteljau error {float(c.err_dc):.3e} "
                f"exceeds bound {float(c.bound_dc):.3e}"
            )
        if c.err_vs is not None and c.bound_vs is not None and c.bound_vs.valid:
            if not c.err_vs <= c.bound_vs.value:
                problems.append(
                    f"{c.poly_id}[{c.index}]: VS error {float(c.err_vs):.3e} "
                    f"exceeds bound {float(c.bound_vs.value):.3e}"
                )
        if c.bound_improved is not None and not c.err_dc <= Fraction(c.bound_improved):
            problems.append(
                f"{c.poly_id}[{c.index}]: de Casteljau error {float(c.err_dc):.3e} "
                f"exceeds improved bound {c.bound_improved:.3e}"
            )
    return problems


@dataclass(frozen=True)
class PropertySample:
    """Outcome of a randomized invariant sweep."""

    total: int
    skipped: int
    failed: int

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _random_normal(rng: random.Random, min_exp: int, max_exp: int) -> float:
    sign = -1.0 if rng.random() < 0.5 else 1.0
    mantissa = 1.0 + rng.random()  # [1, 2)
    return sign * math.ldexp(mantissa, rng.randint(min_exp, max_exp))


def sample_scaling_identities(count: int, seed: int = 20240801) -> PropertySample:
    """Random sweep of the power-of-two scaling identities.

    Operands are drawn well inside the normal range so no case is skipped;
    any False is a genuine violation of the float model.
    """
    rng = random.Random(seed)
    skipped = failed = 0
    for _ in range(count):
        a = _random_normal(rng, -40, 40)
        b = _random_normal(rng, -40, 40)
        t = rng.randint(-30, 30)
        outcome = exact_scaling_holds(a, b, t)
        if outcome is None:
            skipped += 1
        elif not outcome:
            failed += 1
    return PropertySample(count, skipped, failed)


def sample_family_triangles(count: int, seed: int = 20240802) -> PropertySample:
    """Random sweep of the exact-ratio invariant through computed triangles."""
    rng = random.Random(seed)
    skipped = failed = 0
    for _ in range(count):
        spec = FamilySpec(
            b0=_random_normal(rng, -100, 100),
            t=rng.randint(-8, 8),
            n=rng.randint(1, 20),
        )
        s = rng.random()
        _, triangle = decasteljau(spec.coefficients(), s)
        outcome = check_triangle_ratio(triangle, spec)
        if outcome is None:
            skipped += 1
        elif not outcome:
            failed += 1
    return PropertySample(count, skipped, failed)
