#!/usr/bin/env python3
"""Walkthrough: evaluate a Bernstein-form polynomial two ways and check
both results against the exact rational oracle.

The polynomial here is (1 - 5s)^5 written in Bernstein form, whose
coefficients (1, -4, 16, -64, 256, -1024) are exact powers of two up to
sign. That makes it a member of the special family b0*[(1-s) - 2^t*s]^n
with b0=1, t=2, n=5 -- and the de Casteljau triangle then keeps the
coefficient ratio -4 *bit-exactly* at every level, which is what buys the
improved error bound.

Run: python3 demos/01_evaluate_and_verify.py
"""

from fractions import Fraction

from bernfloat import (
    check_triangle_ratio,
    decasteljau,
    decasteljau_bound,
    detect_family,
    eval_exact,
    family_rational,
    improved_bound,
    relative_error,
    round_coeffs,
    vs,
    vs_bound,
)

poly_exact = family_rational(1, 2, 5)
poly, was_exact = round_coeffs(poly_exact)
print("coefficients:", poly.coeffs)
print("representable without rounding:", was_exact)

spec = detect_family(poly)
print(f"family member detected: b0={spec.b0}, ratio=-2^{spec.t}, degree={spec.n}")

s = 0.31
dc_value, triangle = decasteljau(poly, s)
vs_value = vs(poly, s)
exact = eval_exact(poly.as_rational(), Fraction(s))

print(f"\nevaluation at s = {s!r}")
print(f"  de Casteljau : {dc_value!r}")
print(f"  VS           : {vs_value!r}")
print(f"  exact        : {float(exact)!r} (as binary64)")

print("\ntriangle levels (top = result, bottom = input):")
for k, level in enumerate(triangle.levels):
    print(f"  level {k}: " + ", ".join(repr(v) for v in level))
print("every level keeps the exact ratio -4:",
      check_triangle_ratio(triangle, spec))

err_dc = relative_error(exact, dc_value).rel_error
err_vs = relative_error(exact, vs_value).rel_error
general = decasteljau_bound(poly.as_rational(), Fraction(s))
improved = improved_bound(spec.n, spec.t, s)
vs_b = vs_bound(poly.as_rational(), Fraction(s))

print("\nrelative errors vs a priori bounds:")
print(f"  de Casteljau error : {float(err_dc):.3e}")
print(f"  improved bound     : {improved:.3e}   (family only)")
print(f"  general bound      : {float(general):.3e}   (gamma(3n) * cond)")
print(f"  VS error           : {float(err_vs):.3e}")
print(f"  VS bound           : {float(vs_b.value):.3e}   (gamma(6n) * cond, s < 1/2)")

assert err_dc <= Fraction(improved) <= Fraction(general)
assert err_vs <= vs_b.value
print("\nboth errors sit below their bounds, and the improved bound is the tighter one.")
