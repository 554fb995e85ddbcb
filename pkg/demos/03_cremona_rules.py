"""Quasi-homogeneous systems: one big point plus n points of multiplicity m.

For L_d(1^{d-m}, n^m) the system is non-special as soon as d//m > n//2.
When the big point has multiplicity d-m+1, splitting off lines through it
reduces the problem to L_{d-n}(1^{d-n-m+1}, n^{m-1}).
"""

from seshadri import certify_quasi, cor63_reduce, prop62_test
from seshadri.quasi import prop62_system, quasi_system

for d, n, m in [(8, 3, 2), (6, 7, 3), (9, 4, 3)]:
    v = prop62_test(d, n, m)
    print(f"{prop62_system(d, n, m)}: {v.tag.value} {v.detail or ''}")

big = quasi_system(8, 6, 3, 3)
print(f"{big} reduces to {cor63_reduce(8, 3, 3)}")
v = certify_quasi(big)
print("certified by:", v.rule, v.detail)

# The reduction is tried once; here the reduced system is out of reach.
stuck = quasi_system(7, 6, 3, 2)
print(f"{stuck} -> {cor63_reduce(7, 3, 2)}: {certify_quasi(stuck).tag.value}")
