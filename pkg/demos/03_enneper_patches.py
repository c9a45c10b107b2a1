"""
Enneper's surface as a triangular and as a rectangular patch
============================================================

x = u - u^3/3 + u v^2, y = v - v^3/3 + u^2 v, z = u^2 - v^2.

Polarizing by total degree gives a cubic triangular patch (10 points);
polarizing u and v separately gives a bicubic tensor-product patch (16 points).
Both nets describe the same surface.
"""

from fractions import Fraction

from polarize import RationalMap, lift_and_polarize, parse_poly2
from polarize.oracle import decasteljau_rect, decasteljau_tri

enneper = RationalMap([parse_poly2(s) for s in
                       ("u - u^3/3 + u v^2", "v - v^3/3 + u^2 v", "u^2 - v^2")])

tri = lift_and_polarize(enneper, 3, ((1, 0), (0, 1), (0, 0)))
for idx, pt in tri.items():
    print(idx, [str(c) for c in pt.affine])

rect = lift_and_polarize(enneper, (3, 3), ((-1, 1), (-1, 1)), kind="rect")
for row in rect.grid():
    print("  ".join("(" + ", ".join(str(c) for c in p.affine) + ")" for p in row))

uv = (Fraction(1, 5), Fraction(2, 7))
print(decasteljau_tri(tri, uv) == decasteljau_rect(rect, *uv) == enneper(*uv))

# A higher polarization degree (degree raising) gives a finer net of the same surface.
raised = lift_and_polarize(enneper, 5, ((1, 0), (0, 1), (0, 0)))
print(len(raised), decasteljau_tri(raised, uv) == enneper(*uv))
