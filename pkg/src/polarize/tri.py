"""Polar values of ``u^h v^k`` under total-degree polarization; triangular nets.

Layer ``i`` of the tetrahedral table holds ``sigma^i_{h,k}`` for h + k <= i,
the polar value scaled by ``C(i,h) C(i-h,k)``. Each new point argument
``(u_i, v_i)`` adds one layer via
``sigma^i_{h,k} = sigma^{i-1}_{h,k} + u_i sigma^{i-1}_{h-1,k} + v_i sigma^{i-1}_{h,k-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeError
from .nets import AffineFrame2, Point2, TriControlNet, make_point, tri_indices
from .poly import Poly2, RationalMap, resolve_degree
from .scalar import binomial, multinomial3

ONE = Fraction(1)
ZERO = Fraction(0)


@dataclass
class SigmaTableTri:
    args: tuple
    layers: list
    updates: int = 0

    @property
    def m(self) -> int:
        return len(self.args)

    @property
    def cell_count(self) -> int:
        return sum(len(layer) for layer in self.layers)

    def __getitem__(self, key) -> Fraction:
        i, h, k = key
        return self.layers[i].get((h, k), ZERO)

    def final(self) -> dict:
        return self.layers[-1]


def tri_cell_count(m: int) -> int:
    return sum((i + 1) * (i + 2) // 2 for i in range(m + 1))


def sigma_table_tri(args) -> SigmaTableTri:
    args = tuple(Point2.of(a) for a in args)
    layers = [{(0, 0): ONE}]
    updates = 0
    for i, (ui, vi) in enumerate(args, start=1):
        g = layers[-1].get
        cur = {(0, 0): ONE}
        for h in range(i + 1):
            for k in range(i - h + 1):
                if h == 0 and k == 0:
                    continue
                cur[(h, k)] = g((h, k), ZERO) + ui * g((h - 1, k), ZERO) + vi * g((h, k - 1), ZERO)
                updates += 1
        layers.append(cur)
    return SigmaTableTri(args, layers, updates)


def f_table_tri(args) -> list:
    """Polar values ``f^i_{h,k}`` by the direct (unscaled) recurrence."""
    args = tuple(Point2.of(a) for a in args)
    layers = [{(0, 0): ONE}]
    for i, (ui, vi) in enumerate(args, start=1):
        g = layers[-1].get
        cur = {(0, 0): ONE}
        for h in range(i + 1):
            for k in range(i - h + 1):
                if h == 0 and k == 0:
                    continue
                cur[(h, k)] = (Fraction(i - h - k, i) * g((h, k), ZERO)
                               + Fraction(h, i) * ui * g((h - 1, k), ZERO)
                               + Fraction(k, i) * vi * g((h, k - 1), ZERO))
        layers.append(cur)
    return layers


def _check_degree(p2: Poly2, m: int):
    if p2.total_degree() > m:
        raise DegreeError(f"polynomial of total degree {p2.total_degree()} exceeds {m}")


def combine_tri(p2: Poly2, top: dict, m: int) -> Fraction:
    # The multinomial here is C(m; h, l, m-h-l), the term count of sigma^m_{h,l}.
    return sum((a * top.get((h, l), ZERO) / multinomial3(m, h, l)
                for (h, l), a in p2.items()), ZERO)


def polar_value_tri(p2: Poly2, args, method: str = "sigma") -> Fraction:
    args = tuple(args)
    m = len(args)
    _check_degree(p2, m)
    if method == "sigma":
        return combine_tri(p2, sigma_table_tri(args).final(), m)
    if method == "direct":
        top = f_table_tri(args)[-1]
        return sum((a * top.get(e, ZERO) for e, a in p2.items()), ZERO)
    raise ValueError(f"unknown method {method!r}")


def control_args_tri(frame: AffineFrame2, i: int, j: int, k: int) -> tuple:
    return (frame.r,) * i + (frame.s,) * j + (frame.t,) * k


def tri_control_net(rmap: RationalMap, m: int | None = None, frame=None,
                    homogeneous: bool = False, method: str = "sigma") -> TriControlNet:
    """Triangular net ``b_{i,j,k}`` (i+j+k = m) over the frame (r, s, t).

    ``b_{i,j,k}`` is the polar value at r repeated i times, s repeated j
    times and t repeated k times. The default frame is ((1,0), (0,1), (0,0)).
    """
    if rmap.is_univariate:
        raise TypeError("triangular nets need a bivariate map")
    if frame is None:
        frame = AffineFrame2.standard()
    elif not isinstance(frame, AffineFrame2):
        frame = AffineFrame2(*frame)
    m = resolve_degree(rmap, "tri", m)
    polys = rmap.polys()
    points = {}
    for idx in tri_indices(m):
        args = control_args_tri(frame, *idx)
        if method == "sigma":
            top = sigma_table_tri(args).final()
            vals = [combine_tri(poly, top, m) for poly in polys]
        else:
            vals = [polar_value_tri(poly, args, method) for poly in polys]
        points[idx] = make_point(idx, vals[:-1], vals[-1], homogeneous)
    return TriControlNet(m, frame, points, homogeneous)


def closed_form_tri(m: int, count_r: int, count_s: int, count_t: int, h: int, k: int) -> Fraction:
    """Polar value of ``u^h v^k`` at count_r copies of (1,0), count_s of (0,1)
    and count_t of (0,0)."""
    if count_r + count_s + count_t != m:
        raise ValueError("counts must add up to m")
    den = multinomial3(m, h, k)
    if den == 0:
        return ZERO
    return Fraction(binomial(count_r, h) * binomial(count_s, k), den)
