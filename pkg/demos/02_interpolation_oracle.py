"""The brute-force oracle: rank of the interpolation matrix over GF(p).

Each point of multiplicity m contributes m(m+1)/2 rows (the Taylor
coefficients that must vanish).  Full rank at random points proves
non-speciality; a persistent deficit is strong evidence of speciality.
"""

from seshadri import LinearSystem, actual_dimension

for d, n, m in [(4, 5, 2), (10, 12, 2), (35, 10, 11)]:
    report = actual_dimension(LinearSystem.homogeneous(d, n, m))
    print(f"L_{d}({n}^{m}): {report.rows}x{report.cols} matrix, rank {report.rank_max}, "
          f"dim {report.actual_dim_estimate} vs expected {report.expected_dim}")
    print(f"    {report.semantics}")
