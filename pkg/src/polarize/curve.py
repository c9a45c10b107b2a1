"""Polar values of univariate monomials and Bézier control points of curves.

The scaled polar value ``sigma[i][k]`` of ``t^k`` over the first ``i``
arguments is the k-th elementary symmetric function of ``t_1 .. t_i``. It
obeys a Pascal-triangle recurrence, so one table of O(m^2) cells gives every
polar value ``f^m_k = sigma[m][k] / C(m, k)`` of a degree-m polarization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeError
from .nets import AffineFrame1, CurveControlNet, curve_indices, make_point
from .poly import Poly1, RationalMap, resolve_degree
from .scalar import as_ratio, binomial


@dataclass
class SigmaTableCurve:
    """Triangle ``rows[i][k]`` for ``0 <= k <= i <= m``."""

    args: tuple
    rows: list
    updates: int = 0

    @property
    def m(self) -> int:
        return len(self.args)

    @property
    def cell_count(self) -> int:
        return sum(len(r) for r in self.rows)

    def __getitem__(self, ik) -> Fraction:
        i, k = ik
        if k < 0 or k > i:
            return Fraction(0)
        return self.rows[i][k]

    def final(self) -> list:
        return self.rows[-1]


def sigma_table_curve(args) -> SigmaTableCurve:
    args = tuple(as_ratio(t) for t in args)
    rows = [[Fraction(1)]]
    updates = 0
    for i, ti in enumerate(args, start=1):
        prev = rows[-1]
        row = [Fraction(1)]
        for k in range(1, i + 1):
            above = prev[k] if k < i else 0
            row.append(above + ti * prev[k - 1])
            updates += 1
        rows.append(row)
    return SigmaTableCurve(args, rows, updates)


def f_table_curve(args) -> list:
    """Polar values ``f[i][k]`` computed directly, without the sigma scaling.

    Uses ``f^i_k = ((i-k)/i) f^{i-1}_k + (k/i) t_i f^{i-1}_{k-1}``.
    """
    args = tuple(as_ratio(t) for t in args)
    rows = [[Fraction(1)]]
    for i, ti in enumerate(args, start=1):
        prev = rows[-1]
        row = [Fraction(1)]
        for k in range(1, i + 1):
            above = prev[k] if k < i else 0
            row.append(Fraction(i - k, i) * above + Fraction(k, i) * ti * prev[k - 1])
        rows.append(row)
    return rows


def _check_degree(p: Poly1, m: int):
    if p.degree() > m:
        raise DegreeError(f"polynomial of degree {p.degree()} cannot be polarized at degree {m}")


def combine_curve(p: Poly1, sigma_row) -> Fraction:
    m = len(sigma_row) - 1
    return sum((a * sigma_row[k] / binomial(m, k) for k, a in p.items()), Fraction(0))


def polar_value_curve(p: Poly1, args, method: str = "sigma") -> Fraction:
    """Value of the degree-``len(args)`` polar form of ``p`` at ``args``.

    ``method="direct"`` runs the f-recurrence instead of sigma-then-divide;
    both give identical results.
    """
    args = tuple(args)
    m = len(args)
    _check_degree(p, m)
    if method == "sigma":
        return combine_curve(p, sigma_table_curve(args).final())
    if method == "direct":
        row = f_table_curve(args)[-1]
        return sum((a * row[k] for k, a in p.items()), Fraction(0))
    raise ValueError(f"unknown method {method!r}")


def control_args_curve(frame: AffineFrame1, m: int, j: int) -> tuple:
    """Argument tuple of ``b_j``: r repeated m-j times, then s repeated j times."""
    return (frame.r,) * (m - j) + (frame.s,) * j


def curve_control_points(rmap: RationalMap, m: int | None = None, frame=(0, 1),
                         homogeneous: bool = False, method: str = "sigma") -> CurveControlNet:
    """Control net of a (possibly rational) curve of degree ``m`` over ``frame``.

    Each coordinate of ``b_j`` is the polar value at (r, .., r, s, .., s).
    For rational maps the numerators and the denominator are polarized at the
    same arguments; the denominator's value is the weight.
    """
    if not rmap.is_univariate:
        raise TypeError("curve control points need a univariate map")
    if not isinstance(frame, AffineFrame1):
        frame = AffineFrame1(*frame)
    m = resolve_degree(rmap, "curve", m)
    polys = rmap.polys()
    points = {}
    for (j,) in curve_indices(m):
        args = control_args_curve(frame, m, j)
        if method == "sigma":
            row = sigma_table_curve(args).final()
            vals = [combine_curve(p, row) for p in polys]
        else:
            vals = [polar_value_curve(p, args, method) for p in polys]
        points[(j,)] = make_point((j,), vals[:-1], vals[-1], homogeneous)
    return CurveControlNet(m, frame, points, homogeneous)


def closed_form_polar_curve(count_r: int, count_s: int, r, s, k: int) -> Fraction:
    """Polar value of ``t^k`` when ``count_r`` arguments equal r and ``count_s`` equal s."""
    r, s = as_ratio(r), as_ratio(s)
    m = count_r + count_s
    if k < 0 or k > m:
        return Fraction(0)
    total = sum(
        binomial(count_r, k - j) * binomial(count_s, j) * r ** (k - j) * s ** j
        for j in range(k + 1)
    )
    return Fraction(total) / binomial(m, k)
