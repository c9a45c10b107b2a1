"""Slow reference implementations used to check the recurrences.

Polar values here come straight from their defining sums over index subsets
(exponential cost), and evaluation goes through de Casteljau or Bernstein
sums on the control net. None of this code shares a path with the
recurrence modules.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import prod

from .errors import FrameError, OracleLimitError, ZeroWeightError
from .nets import AffineFrame1, Point2
from .scalar import as_ratio, binomial

MAX_CURVE = 12
MAX_RECT = 12  # p + q
MAX_TRI = 9


def _limit(n, bound, what):
    if n > bound:
        raise OracleLimitError(f"{what} size {n} exceeds oracle limit {bound}")


# -- defining sums --------------------------------------------------------


def _subset_sum(k, args):
    """(sum over |I| = k of prod t_i, number of terms)."""
    total, terms = Fraction(0), 0
    for idx in combinations(range(len(args)), k):
        total += prod((args[i] for i in idx), start=Fraction(1))
        terms += 1
    return total, terms


def _disjoint_sum(h, k, pts):
    """Sum over disjoint I, J with |I| = h, |J| = k of prod u_i * prod v_j."""
    total, terms = Fraction(0), 0
    n = len(pts)
    for I in combinations(range(n), h):
        rest = [i for i in range(n) if i not in I]
        pu = prod((pts[i].u for i in I), start=Fraction(1))
        for J in combinations(rest, k):
            total += pu * prod((pts[j].v for j in J), start=Fraction(1))
            terms += 1
    return total, terms


def naive_polar_curve(k: int, args) -> Fraction:
    args = [as_ratio(t) for t in args]
    m = len(args)
    _limit(m, MAX_CURVE, "curve")
    if k < 0 or k > m:
        return Fraction(0)
    total, terms = _subset_sum(k, args)
    return total / terms


def naive_polar_rect(h: int, k: int, u_args, v_args) -> Fraction:
    u_args = [as_ratio(x) for x in u_args]
    v_args = [as_ratio(x) for x in v_args]
    _limit(len(u_args) + len(v_args), MAX_RECT, "rect")
    if not (0 <= h <= len(u_args) and 0 <= k <= len(v_args)):
        return Fraction(0)
    su, nu = _subset_sum(h, u_args)
    sv, nv = _subset_sum(k, v_args)
    return su * sv / (nu * nv)


def naive_polar_tri(h: int, k: int, args) -> Fraction:
    pts = [Point2.of(a) for a in args]
    _limit(len(pts), MAX_TRI, "tri")
    if h < 0 or k < 0 or h + k > len(pts):
        return Fraction(0)
    total, terms = _disjoint_sum(h, k, pts)
    return total / terms


def naive_polar_value(poly, args, kind: str) -> Fraction:
    """Polar value of a whole polynomial as a sum of monomial polar values."""
    if kind == "curve":
        return sum((a * naive_polar_curve(e, args) for e, a in poly.items()), Fraction(0))
    if kind == "rect":
        u_args, v_args = args
        return sum((a * naive_polar_rect(h, k, u_args, v_args) for (h, k), a in poly.items()),
                   Fraction(0))
    if kind == "tri":
        return sum((a * naive_polar_tri(h, k, args) for (h, k), a in poly.items()), Fraction(0))
    raise ValueError(kind)


# -- term counts of the naive method -------------------------------------


def naive_terms_curve(args) -> int:
    """Terms enumerated to polarize every monomial at every prefix t_1..t_i."""
    args = [as_ratio(t) for t in args]
    _limit(len(args), MAX_CURVE, "curve")
    return sum(_subset_sum(k, args[:i])[1] for i in range(len(args) + 1) for k in range(i + 1))


def naive_terms_rect(u_args, v_args) -> int:
    """Terms over the prefixes of the argument list u_1..u_p; v_1..v_q.

    Prefix n holds min(n, p) u-arguments and the first n-p v-arguments.
    """
    u_args = [as_ratio(x) for x in u_args]
    v_args = [as_ratio(x) for x in v_args]
    p, q = len(u_args), len(v_args)
    _limit(p + q, MAX_RECT, "rect")
    total = 0
    for n in range(p + q + 1):
        us, vs = u_args[:min(n, p)], v_args[:max(0, n - p)]
        for h in range(len(us) + 1):
            for k in range(len(vs) + 1):
                total += _subset_sum(h, us)[1] * _subset_sum(k, vs)[1]
    return total


def naive_terms_rect_grid(u_args, v_args) -> int:
    """Terms over every layer (i, j), 0 <= i <= p, 0 <= j <= q."""
    u_args = [as_ratio(x) for x in u_args]
    v_args = [as_ratio(x) for x in v_args]
    p, q = len(u_args), len(v_args)
    _limit(p + q, MAX_RECT, "rect")
    return sum(_subset_sum(h, u_args[:i])[1] * _subset_sum(k, v_args[:j])[1]
               for i in range(p + 1) for j in range(q + 1)
               for h in range(i + 1) for k in range(j + 1))


def naive_terms_tri(args) -> int:
    pts = [Point2.of(a) for a in args]
    _limit(len(pts), MAX_TRI, "tri")
    return sum(_disjoint_sum(h, k, pts[:i])[1]
               for i in range(len(pts) + 1)
               for h in range(i + 1) for k in range(i - h + 1))


# -- evaluation -----------------------------------------------------------


def _lerp(a, b, lam):
    return tuple(x + lam * (y - x) for x, y in zip(a, b))


def _finish(hom, homogeneous, where):
    if homogeneous:
        return hom
    w = hom[-1]
    if w == 0:
        raise ZeroWeightError(f"weight vanishes at {where}")
    return tuple(c / w for c in hom[:-1])


def _decasteljau_1d(rows, lam):
    rows = list(rows)
    while len(rows) > 1:
        rows = [_lerp(rows[i], rows[i + 1], lam) for i in range(len(rows) - 1)]
    return rows[0]


def decasteljau_curve(net, t, homogeneous: bool = False) -> tuple:
    """Point of a curve net at parameter ``t`` by repeated interpolation.

    Returns the affine point, or ``(c_1, ..., c_d, w)`` with ``homogeneous``.
    """
    if len(net) == 0:
        raise ValueError("empty net")
    lam = net.frame.local(t)
    hom = _decasteljau_1d((p.homogeneous() for p in net), lam)
    return _finish(hom, homogeneous, f"t = {t}")


def decasteljau_rect(net, u, v, homogeneous: bool = False) -> tuple:
    """Nested curve evaluation: collapse each row along v, then the column along u."""
    lu = net.frame.frame_u.local(u)
    lv = net.frame.frame_v.local(v)
    column = [_decasteljau_1d((p.homogeneous() for p in row), lv) for row in net.grid()]
    hom = _decasteljau_1d(column, lu)
    return _finish(hom, homogeneous, f"(u, v) = ({u}, {v})")


def decasteljau_tri(net, uv, homogeneous: bool = False) -> tuple:
    """Triangular de Casteljau in barycentric coordinates w.r.t. the net's frame."""
    lr, ls, lt = net.frame.barycentric(uv)
    m = net.degree
    level = {idx: p.homogeneous() for idx, p in net.items()}
    for n in range(m, 0, -1):
        nxt = {}
        for i in range(n):
            for j in range(n - i):
                k = n - 1 - i - j
                a, b, c = level[(i + 1, j, k)], level[(i, j + 1, k)], level[(i, j, k + 1)]
                nxt[(i, j, k)] = tuple(lr * x + ls * y + lt * z for x, y, z in zip(a, b, c))
        level = nxt
    return _finish(level[(0, 0, 0)], homogeneous, f"(u, v) = {tuple(uv)}")


def bernstein_value(m: int, k: int, t) -> Fraction:
    if not 0 <= k <= m:
        raise ValueError(f"need 0 <= k <= m, got k={k}, m={m}")
    t = as_ratio(t)
    return binomial(m, k) * (1 - t) ** (m - k) * t ** k


def bernstein_eval(net, t, homogeneous: bool = False) -> tuple:
    """Sum of ``B^m_k(t) b_k``; only defined for nets over the frame (0, 1)."""
    if net.frame != AffineFrame1(0, 1):
        raise FrameError("Bernstein evaluation needs a net over the frame (0, 1)")
    m = net.degree
    hom = None
    for (k,), p in net.items():
        b = bernstein_value(m, k, t)
        term = tuple(b * c for c in p.homogeneous())
        hom = term if hom is None else tuple(x + y for x, y in zip(hom, term))
    return _finish(hom, homogeneous, f"t = {t}")
