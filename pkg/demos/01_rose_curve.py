"""
A rational rose as a Bézier curve
=================================

The four-petal rose x = 4t(1-t^2)^2(1-14t^2+t^4)/(1+t^2)^5,
y = 8t^2(1-t^2)(3-10t^2+3t^4)/(1+t^2)^5 has degree 10. Its control
polygon over [0, 1] carries weights because of the denominator.
"""

from polarize import RationalMap, format_ratio, lift_and_polarize, parse_poly1
from polarize.formats import dumps_paper, emit_obj
from polarize.oracle import decasteljau_curve

# Factored input is expanded to monomial form exactly.
x = parse_poly1("4 t (1 - t^2)^2 (1 - 14 t^2 + t^4)")
y = parse_poly1("8 t^2 (1 - t^2) (3 - 10 t^2 + 3 t^4)")
w = parse_poly1("(1 + t^2)^5")
rose = RationalMap([x, y], w)

# Each control point is (x, y, weight), with x and y already divided by the weight.
net = lift_and_polarize(rose, 10, (0, 1))
print(dumps_paper(net))

# The net determines the curve: de Casteljau reproduces the map exactly.
for t in ("1/3", "1/2", "3/4"):
    p = decasteljau_curve(net, t)
    print(t, [format_ratio(c) for c in p], p == rose(t))

# Over [-1, 1] some weights vanish, so the affine form of those points does
# not exist. Homogeneous output keeps (weighted coords, weight) instead.
wide = lift_and_polarize(rose, 10, (-1, 1), homogeneous=True)
for idx, pt in wide.items():
    print(idx, [format_ratio(c) for c in pt.homogeneous()])

# Polyline for an external plotter.
with open("rose.obj", "wb") as fh:
    fh.write(emit_obj(net, samples=200))
print("wrote rose.obj")
