"""Polar values of ``u^h v^k`` under bidegree polarization; rectangular nets.

Cells ``sigma[(i, j)][(h, k)]`` (``h <= i``, ``k <= j``) scale the polar value
by ``C(i,h) C(j,k)``. Layers are filled for i ascending, then j ascending:

* interior (h, k >= 1): from layer (i-1, j-1), four terms;
* h = 0, k >= 1: from layer (i, j-1) using v_j;
* k = 0, h >= 1: from layer (i-1, j) using u_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeError
from .nets import FramePair, RectControlNet, make_point, rect_indices
from .poly import Poly2, RationalMap, resolve_degree
from .scalar import as_ratio, binomial

ONE = Fraction(1)
ZERO = Fraction(0)


@dataclass
class SigmaTableRect:
    u_args: tuple
    v_args: tuple
    layers: dict
    updates: int = 0

    @property
    def p(self) -> int:
        return len(self.u_args)

    @property
    def q(self) -> int:
        return len(self.v_args)

    @property
    def cell_count(self) -> int:
        return sum(len(layer) for layer in self.layers.values())

    def __getitem__(self, key) -> Fraction:
        i, j, h, k = key
        return self.layers[(i, j)].get((h, k), ZERO)

    def final(self) -> dict:
        return self.layers[(self.p, self.q)]


def rect_cell_count(p: int, q: int) -> int:
    """Number of (i, j, h, k) cells with 0 <= h <= i <= p and 0 <= k <= j <= q."""
    return (p + 1) * (p + 2) // 2 * ((q + 1) * (q + 2) // 2)


def _fill(u_args, v_args, interior, v_edge, u_edge):
    p, q = len(u_args), len(v_args)
    layers = {}
    updates = 0
    for i in range(p + 1):
        for j in range(q + 1):
            cur = {(0, 0): ONE}
            for h in range(i + 1):
                for k in range(j + 1):
                    if h == 0 and k == 0:
                        continue
                    if h and k:
                        cur[(h, k)] = interior(layers[(i - 1, j - 1)], i, j, h, k,
                                               u_args[i - 1], v_args[j - 1])
                    elif h == 0:
                        cur[(h, k)] = v_edge(layers[(i, j - 1)], j, k, v_args[j - 1])
                    else:
                        cur[(h, k)] = u_edge(layers[(i - 1, j)], i, h, u_args[i - 1])
                    updates += 1
            layers[(i, j)] = cur
    return layers, updates


def _sigma_interior(prev, i, j, h, k, ui, vj):
    g = prev.get
    return (g((h, k), ZERO) + ui * g((h - 1, k), ZERO)
            + vj * g((h, k - 1), ZERO) + ui * vj * g((h - 1, k - 1), ZERO))


def _sigma_v_edge(prev, j, k, vj):
    return prev.get((0, k), ZERO) + vj * prev[(0, k - 1)]


def _sigma_u_edge(prev, i, h, ui):
    return prev.get((h, 0), ZERO) + ui * prev[(h - 1, 0)]


def sigma_table_rect(u_args, v_args) -> SigmaTableRect:
    u_args = tuple(as_ratio(x) for x in u_args)
    v_args = tuple(as_ratio(x) for x in v_args)
    layers, updates = _fill(u_args, v_args, _sigma_interior, _sigma_v_edge, _sigma_u_edge)
    return SigmaTableRect(u_args, v_args, layers, updates)


def _f_interior(prev, i, j, h, k, ui, vj):
    g = prev.get
    pq = i * j
    return (Fraction((i - h) * (j - k), pq) * g((h, k), ZERO)
            + Fraction(h * (j - k), pq) * ui * g((h - 1, k), ZERO)
            + Fraction((i - h) * k, pq) * vj * g((h, k - 1), ZERO)
            + Fraction(h * k, pq) * ui * vj * g((h - 1, k - 1), ZERO))


def _f_v_edge(prev, j, k, vj):
    return Fraction(j - k, j) * prev.get((0, k), ZERO) + Fraction(k, j) * vj * prev[(0, k - 1)]


def _f_u_edge(prev, i, h, ui):
    return Fraction(i - h, i) * prev.get((h, 0), ZERO) + Fraction(h, i) * ui * prev[(h - 1, 0)]


def f_table_rect(u_args, v_args) -> dict:
    """Polar values ``f^{i,j}_{h,k}`` by the direct recurrences, keyed like the sigma table."""
    u_args = tuple(as_ratio(x) for x in u_args)
    v_args = tuple(as_ratio(x) for x in v_args)
    layers, _ = _fill(u_args, v_args, _f_interior, _f_v_edge, _f_u_edge)
    return layers


def _check_degree(p2: Poly2, p: int, q: int):
    if p2.maxdeg_u() > p or p2.maxdeg_v() > q:
        raise DegreeError(
            f"polynomial of bidegree ({p2.maxdeg_u()}, {p2.maxdeg_v()}) exceeds ({p}, {q})")


def combine_rect(p2: Poly2, top: dict, p: int, q: int) -> Fraction:
    return sum((a * top.get((h, k), ZERO) / (binomial(p, h) * binomial(q, k))
                for (h, k), a in p2.items()), ZERO)


def polar_value_rect(p2: Poly2, u_args, v_args, method: str = "sigma") -> Fraction:
    u_args, v_args = tuple(u_args), tuple(v_args)
    p, q = len(u_args), len(v_args)
    _check_degree(p2, p, q)
    if method == "sigma":
        return combine_rect(p2, sigma_table_rect(u_args, v_args).final(), p, q)
    if method == "direct":
        top = f_table_rect(u_args, v_args)[(p, q)]
        return sum((a * top.get(e, ZERO) for e, a in p2.items()), ZERO)
    raise ValueError(f"unknown method {method!r}")


def control_args_rect(frames: FramePair, p: int, q: int, i: int, j: int):
    fu, fv = frames.frame_u, frames.frame_v
    return ((fu.r,) * (p - i) + (fu.s,) * i,
            (fv.r,) * (q - j) + (fv.s,) * j)


def rect_control_net(rmap: RationalMap, bidegree=None, frames=((0, 1), (0, 1)),
                     homogeneous: bool = False, method: str = "sigma") -> RectControlNet:
    """Rectangular net ``b_{i,j}`` of bidegree ``(p, q)`` over two line frames."""
    if rmap.is_univariate:
        raise TypeError("rectangular nets need a bivariate map")
    if not isinstance(frames, FramePair):
        frames = FramePair.of(*frames)
    p, q = resolve_degree(rmap, "rect", bidegree)
    polys = rmap.polys()
    points = {}
    for i, j in rect_indices(p, q):
        u_args, v_args = control_args_rect(frames, p, q, i, j)
        if method == "sigma":
            top = sigma_table_rect(u_args, v_args).final()
            vals = [combine_rect(poly, top, p, q) for poly in polys]
        else:
            vals = [polar_value_rect(poly, u_args, v_args, method) for poly in polys]
        points[(i, j)] = make_point((i, j), vals[:-1], vals[-1], homogeneous)
    return RectControlNet((p, q), frames, points, homogeneous)


def closed_form_rect(p: int, q: int, zeros_u: int, zeros_v: int, h: int, k: int) -> Fraction:
    """Polar value of ``u^h v^k`` with ``zeros_u`` u-arguments and ``zeros_v``
    v-arguments equal to 0 and the rest equal to 1."""
    den = binomial(p, h) * binomial(q, k)
    if den == 0:
        return ZERO
    return Fraction(binomial(p - zeros_u, h) * binomial(q - zeros_v, k), den)
