"""
Recurrences versus brute-force polarization
===========================================

The polar value of a monomial is an average over index subsets; summing
those subsets directly costs exponentially many terms, while the scaled
recurrences fill a Pascal-like table. This script prints both counts and
times the two recurrence variants (sigma-then-divide and direct f).
"""

import random
import time
from fractions import Fraction

from polarize.curve import polar_value_curve, sigma_table_curve
from polarize.oracle import naive_terms_curve, naive_terms_rect, naive_terms_tri
from polarize.poly import Poly1, Poly2
from polarize.rect import polar_value_rect, sigma_table_rect
from polarize.tri import polar_value_tri, sigma_table_tri

print("curve    m  table-cells  naive-terms")
for m in (2, 4, 6, 8, 10, 12):
    print(f"      {m:4d} {sigma_table_curve([1] * m).cell_count:12d} {naive_terms_curve([1] * m):12d}")

print("rect   p,q  table-cells  naive-terms")
for p in (1, 2, 3, 4, 5, 6):
    print(f"      {p},{p}  {sigma_table_rect([1] * p, [1] * p).cell_count:11d} "
          f"{naive_terms_rect([1] * p, [1] * p):12d}")

print("tri      m  table-cells  naive-terms")
for m in (2, 4, 6, 8, 9):
    print(f"      {m:4d} {sigma_table_tri([(1, 1)] * m).cell_count:12d} "
          f"{naive_terms_tri([(1, 1)] * m):12d}")

rng = random.Random(0)


def rand():
    return Fraction(rng.randint(-50, 50), rng.randint(1, 20))


def bench(label, fn, poly, *args):
    for method in ("sigma", "direct"):
        start = time.perf_counter()
        for _ in range(20):
            fn(poly, *args, method=method)
        print(f"{label:>10} {method:>7}: {(time.perf_counter() - start) / 20 * 1e3:8.2f} ms")


m = 30
bench("curve 30", polar_value_curve, Poly1({k: rand() for k in range(m + 1)}),
      [rand() for _ in range(m)])
bench("rect 8x8", polar_value_rect, Poly2({(h, k): rand() for h in range(9) for k in range(9)}),
      [rand() for _ in range(8)], [rand() for _ in range(8)])
bench("tri 12", polar_value_tri, Poly2({(h, k): rand() for h in range(13) for k in range(13 - h)}),
      [(rand(), rand()) for _ in range(12)])
