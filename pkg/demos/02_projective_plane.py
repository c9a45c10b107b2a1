"""
The real projective plane in R^4 and its cross-cap shadow
=========================================================

Composing a rational parameterization of the sphere with
(x, y, z) -> (xy, yz, xz, x^2 - y^2) gives a degree-8 rational surface in R^4.
Polarizing by total degree yields a triangular net of 45 weighted points;
dropping one coordinate is a parallel projection to R^3, the cross-cap.
"""

from polarize import RationalMap, drop_coordinates, lift_and_polarize, parse_poly2
from polarize.formats import dumps_paper, emit_obj

coords = [
    "16 u v^2 (1 - u^2)",
    "8 u v (u^2 + 1) (v^2 - 1)",
    "4 v (1 - u^4) (v^2 - 1)",
    "4 v^2 (u^4 - 6 u^2 + 1)",
]
den = parse_poly2("(u^2 + 1)^2 (v^2 + 1)^2")
plane = RationalMap([parse_poly2(c) for c in coords], den)

# Standard frame r = (1,0), s = (0,1), t = (0,0); points come i-outer, j-inner.
net = lift_and_polarize(plane, 8, ((1, 0), (0, 1), (0, 0)))
print(len(net), "control points")
print(dumps_paper(net))

cross_cap = drop_coordinates(net, [2])
print(dumps_paper(cross_cap))

# The net only covers the triangle (1,0), (0,1), (0,0); nets over other
# triangles cover the rest of the parameter square [-1, 1]^2.
with open("cross_cap.obj", "wb") as fh:
    fh.write(emit_obj(cross_cap, samples=40))
print("wrote cross_cap.obj")
