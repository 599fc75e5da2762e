"""
Smoothing components and Milnor fibres
======================================

One report per chain k <= a representing zero: r = sum(a_i - k_i)
2-handles on an annulus x disk, b2 = r - 1.
"""

from cqs_milnor import all_reports, homotopy_description

for nq in [(4, 1), (5, 2), (19, 7), (6, 5)]:
    print(f"X{nq}")
    for rep in all_reports(nq):
        cells = homotopy_description(rep)["cells"]
        print(f"  k={rep.k}  r={rep.r}  b2={rep.b2}  chi={rep.euler_characteristic}  cells={cells}")
