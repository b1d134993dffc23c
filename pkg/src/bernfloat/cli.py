"""Command-line harness: run the experiments, evaluate ad hoc, self-check.

Exit codes: 0 on success, 1 when any bound is violated (which signals a
broken build or floating-point environment, never an expected outcome),
2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .bernstein import BernsteinPoly, family_rational
from .bounds import PoleError
from .evaluators import decasteljau
from .experiments import (
    CaseResult,
    emit_csv,
    fig1_cases,
    fig2_cases,
    fig3_cases,
    prepare,
    run_case,
    rows_from_cases,
    sample_family_triangles,
    sample_scaling_identities,
    verify_bound_dominance,
)
from .fpmodel import gamma, gamma_exact
from .oracle import eval_exact

__all__ = ["main"]


def parse_float_literal(text: str) -> float:
    """Parse a decimal or IEEE hexadecimal-significand float literal."""
    text = text.strip()
    try:
        value = float(text)
    except ValueError:
        try:
            value = float.fromhex(text)
        except ValueError:
            raise ValueError(f"not a float literal: {text!r}") from None
    if math.isnan(value):
        raise ValueError("NaN is not a valid input value")
    return value


def read_coefficient_file(path: Path) -> BernsteinPoly:
    """One coefficient per line; blank lines and #-comments are skipped.

    Hex-float literals (e.g. 0x1.8p-3) are recommended when the intended
    value must survive parsing exactly.
    """
    coeffs = []
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            coeffs.append(parse_float_literal(line))
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from None
    if not coeffs:
        raise ValueError(f"{path}: no coefficients found")
    return BernsteinPoly(coeffs)


def _run_figure(args: argparse.Namespace, name: str) -> int:
    if name == "fig1":
        cases = fig1_cases(args.emax)
    elif name == "fig2":
        cases = fig2_cases()
    else:
        cases = fig3_cases()
    rows = rows_from_cases(name, cases)
    emit_csv(rows, args.out)
    print(f"{name}: wrote {len(rows)} rows to {args.out}")
    problems = verify_bound_dominance(cases)
    for p in problems:
        print(f"BOUND VIOLATION: {p}", file=sys.stderr)
    return 1 if problems else 0


_EVAL_COLUMNS = (
    "poly", "s", "exact", "dc", "vs", "cond", "err_dc", "err_vs",
    "bound_dc", "bound_vs", "bound_improved", "bound_naive", "flags",
)


def _cmd_eval(args: argparse.Namespace) -> int:
    s = parse_float_literal(args.point)
    if args.coeffs is not None:
        coeffs = read_coefficient_file(Path(args.coeffs))
        poly = prepare(Path(args.coeffs).name, coeffs.as_rational())
    else:
        b0_text, t_text, n_text = args.family
        b0 = Fraction(parse_float_literal(b0_text))
        poly = prepare("family", family_rational(b0, int(t_text), int(n_text)))

    in_domain = 0.0 <= s <= 1.0
    flags: list[str] = []
    if in_domain:
        case = run_case(poly, 0, s, with_vs=True,
                        with_improved=poly.family is not None,
                        with_naive=poly.family is not None)
        flags.extend(case.flags)
        problems = verify_bound_dominance([case])
    else:
        # de Casteljau is defined everywhere; VS, cond and bounds are not.
        dc_value, _ = decasteljau(poly.coeffs, s)
        exact_value = eval_exact(poly.exact, Fraction(s))
        case = None
        problems = []
        flags.append("outside-unit-interval")

    def fmt(x) -> str:
        if x is None:
            return ""
        return repr(float(x))

    if case is not None:
        record = [
            poly.poly_id, fmt(s), fmt(case.exact_value), fmt(case.dc_value),
            fmt(case.vs_value), fmt(case.cond), fmt(case.err_dc), fmt(case.err_vs),
            fmt(case.bound_dc),
            fmt(case.bound_vs.value) if case.bound_vs is not None else "",
            fmt(case.bound_improved), fmt(case.bound_naive), ";".join(flags),
        ]
    else:
        record = [
            poly.poly_id, fmt(s), fmt(float(exact_value)), fmt(dc_value),
            "", "", "", "", "", "", "", "", ";".join(flags),
        ]

    if args.out is not None:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(_EVAL_COLUMNS)
            writer.writerow(record)
        print(f"eval: wrote 1 row to {args.out}")
    else:
        for key, value in zip(_EVAL_COLUMNS, record):
            print(f"{key} = {value}")

    for p in problems:
        print(f"BOUND VIOLATION: {p}", file=sys.stderr)
    return 1 if problems else 0


def _check_gamma_properties() -> list[str]:
    problems = []
    grid = (0, 1, 2, 3, 5, 7, 15, 60, 100, 1000, 10 ** 4)
    for j in grid:
        for k in grid:
            gj, gk, gjk = gamma_exact(j), gamma_exact(k), gamma_exact(j + k)
            if gj + gk + gj * gk > gjk:
                problems.append(f"gamma superadditivity fails at j={j}, k={k}")
    one_plus_u = Fraction(2 ** 53 + 1, 2 ** 53)
    power = Fraction(1)
    for j in range(1, 10 ** 4 + 1):
        power *= one_plus_u
        if power - 1 > Fraction(gamma(j)):
            problems.append(f"(1+u)**j - 1 exceeds gamma({j})")
            break
    return problems


def _cmd_check(args: argparse.Namespace) -> int:
    failures = 0

    def report(name: str, ok: bool, detail: str = "") -> None:
        nonlocal failures
        status = "PASS" if ok else "FAIL"
        print(f"[{status}] {name}{': ' + detail if detail else ''}")
        if not ok:
            failures += 1

    gamma_problems = _check_gamma_properties()
    report("gamma calculus properties", not gamma_problems,
           "; ".join(gamma_problems))

    scaling = sample_scaling_identities(args.scaling_samples, seed=args.seed)
    report(
        "power-of-two scaling identities",
        scaling.ok,
        f"{scaling.total - scaling.skipped} checked, {scaling.skipped} skipped, "
        f"{scaling.failed} failed",
    )

    triangles = sample_family_triangles(args.triangle_samples, seed=args.seed + 1)
    report(
        "family ratio through computed triangles",
        triangles.ok,
        f"{triangles.total - triangles.skipped} checked, {triangles.skipped} skipped, "
        f"{triangles.failed} failed",
    )

    cases: list[CaseResult] = fig1_cases() + fig2_cases() + fig3_cases()
    problems = verify_bound_dominance(cases)
    report("bound dominance across all experiment points", not problems,
           f"{len(cases)} cases" if not problems else "; ".join(problems[:5]))

    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bernfloat",
        description="Bernstein-form evaluation error experiments and checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one polynomial at one point")
    source = p_eval.add_mutually_exclusive_group(required=True)
    source.add_argument("--coeffs", metavar="FILE",
                        help="coefficient file, one decimal or hex-float literal per line")
    source.add_argument("--family", nargs=3, metavar=("B0", "T", "N"),
                        help="special-family polynomial b0*[(1-s) - 2**t*s]**n")
    p_eval.add_argument("--point", required=True, metavar="S",
                        help="evaluation point (decimal or hex-float literal)")
    p_eval.add_argument("--out", metavar="PATH", default=None,
                        help="write a one-row CSV instead of printing")
    p_eval.set_defaults(func=_cmd_eval)

    p_fig1 = sub.add_parser("fig1", help="near-root quintics: error vs general bound")
    p_fig1.add_argument("--emax", type=int, default=45, metavar="E",
                        help="largest exponent of the 2.1**e grid (default 45)")
    p_fig1.add_argument("--out", metavar="PATH", default="fig1.csv")
    p_fig1.set_defaults(func=lambda a: _run_figure(a, "fig1"))

    p_fig2 = sub.add_parser("fig2", help="family quintic: naive vs improved bound")
    p_fig2.add_argument("--out", metavar="PATH", default="fig2.csv")
    p_fig2.set_defaults(func=lambda a: _run_figure(a, "fig2"))

    p_fig3 = sub.add_parser("fig3", help="degree-20 de Casteljau vs VS comparison")
    p_fig3.add_argument("--out", metavar="PATH", default="fig3.csv")
    p_fig3.set_defaults(func=lambda a: _run_figure(a, "fig3"))

    p_check = sub.add_parser("check", help="run the invariant suites")
    p_check.add_argument("--scaling-samples", type=int, default=10 ** 6)
    p_check.add_argument("--triangle-samples", type=int, default=10 ** 4)
    p_check.add_argument("--seed", type=int, default=20240801)
    p_check.set_defaults(func=_cmd_check)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OverflowError, OSError, PoleError) as exc:
        parser.exit(2, f"error: {exc}\n")
        return 2  # unreachable; keeps type checkers happy


if __name__ == "__main__":
    sys.exit(main())
