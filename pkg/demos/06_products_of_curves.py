"""Intersection numbers on blown-up surfaces and products of curves.

On C1 x C2 the class a*F1 + b*F2 has Seshadri constant min(a, b) at every
point, and blowing up a few points with small multiplicities keeps it.
"""

from seshadri import ProductPolarization, parse_divisor, self_intersection, seshadri_blownup_product, seshadri_product
from seshadri.surfaces import HypothesisViolatedError, intersect

print("eps(3F1 + 4F2) =", seshadri_product(3, 4))
print("after blowing up three simple points:", seshadri_blownup_product(ProductPolarization(4, 3, (1, 1, 1))))

# Heavier points break the hypothesis, and the pairing below shows why.
L = parse_divisor("Prod[r=3]: 3F1+4F2-2E1-2E2-2E3")
T = parse_divisor("Prod[r=3]: 2F2-E1-E2-E3")
print(f"L^2 = {self_intersection(L)}, L.T = {intersect(L, T)}")
try:
    seshadri_blownup_product(ProductPolarization(3, 4, (2, 2, 2)))
except HypothesisViolatedError as exc:
    print("refused:", exc)

print("nine points, eps = 1/3:", self_intersection(parse_divisor("P2[r=9]: H - 1/3*(E1..E9)")))
