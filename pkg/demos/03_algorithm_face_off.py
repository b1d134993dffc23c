#!/usr/bin/env python3
"""Narrative version of the fig3 experiment: de Casteljau vs VS on three
degree-20 polynomials.

On f (roots at j/20) and g (roots at 2/2^j) the two algorithms make errors
of the same order -- there is no qualitative difference. The classic
tiebreaker h(s) = (s - 1/2)^20 looks like a decisive win for de Casteljau,
but h is a special-family member (b0 = 2^-20, t = 0): the triangle keeps
its coefficient ratio exactly and the improved bound applies, an advantage
no generic polynomial enjoys. h therefore says little about the two
algorithms on general inputs.

Run: python3 demos/03_algorithm_face_off.py
"""

import statistics

from bernfloat.experiments import fig3_cases

by_poly = {}
for case in fig3_cases():
    by_poly.setdefault(case.poly_id, []).append(case)

for pid in ("f", "g"):
    cases = by_poly[pid]
    med_dc = statistics.median(float(c.err_dc) for c in cases)
    med_vs = statistics.median(float(c.err_vs) for c in cases)
    print(f"{pid}: median relative error  de Casteljau {med_dc:.2e}   VS {med_vs:.2e}")

h = by_poly["h"]
wins = sum(1 for c in h if c.err_dc < c.err_vs)
worst_dc = max(float(c.err_dc) for c in h)
worst_vs = max(float(c.err_vs) for c in h)
print(f"\nh: de Casteljau strictly more accurate at {wins} of {len(h)} points")
print(f"h: worst relative error  de Casteljau {worst_dc:.2e}   VS {worst_vs:.2e}")

print("\nper-point picture on h (middle points are the ill-conditioned ones):")
print(f"{'s':>6} {'cond':>10} {'err dc':>10} {'err vs':>10} {'improved':>10}")
for c in h:
    print(
        f"{c.s:>6.2f} {float(c.cond):>10.2e} {float(c.err_dc):>10.2e} "
        f"{float(c.err_vs):>10.2e} {c.bound_improved:>10.2e}"
    )
