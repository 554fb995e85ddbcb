"""A certified lower bound for the Seshadri constant at ten general points.

If L_d(r^{m+1}) has its expected dimension (>= 0), then m/d bounds the
multi-point Seshadri constant from below.  The upper bound 1/sqrt(r) is
only ever checked squared: (H - eps*sum E)^2 >= 0.
"""

from fractions import Fraction

from seshadri import barkowski_targets, certified_lower_bound_search, nef_square_check

for dmax in (20, 30, 35):
    res = certified_lower_bound_search(10, dmax)
    print(f"d <= {dmax}: eps >= {res.lower_bound} via L_{res.witness[0]}(10^{res.witness[1] + 1})")

best = certified_lower_bound_search(10, 35)
print("certificate reference:", best.certificate_ref)
print("below 1/sqrt(10):", nef_square_check(10, best.lower_bound), float(best.lower_bound), 10 ** -0.5)
print("1/3 would be too big:", nef_square_check(10, Fraction(1, 3)))

t = barkowski_targets(3)
for r, target in t.rows():
    print(f"  r = {r:2d}: eps >= {target}")
