"""Affine frames, weighted control points and the three control-net shapes."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import NamedTuple

from .errors import FrameError, ZeroWeightError
from .scalar import as_ratio


class Point2(NamedTuple):
    u: Fraction
    v: Fraction

    @classmethod
    def of(cls, p) -> "Point2":
        if len(p) == 3:
            # Barycentric w.r.t. the standard frame ((1,0),(0,1),(0,0)).
            a, b, c = (as_ratio(x) for x in p)
            if a + b + c != 1:
                raise FrameError(f"barycentric point {tuple(p)} does not sum to 1")
            return cls(a, b)
        u, v = p
        return cls(as_ratio(u), as_ratio(v))


@dataclass(frozen=True)
class AffineFrame1:
    r: Fraction
    s: Fraction

    def __post_init__(self):
        object.__setattr__(self, "r", as_ratio(self.r))
        object.__setattr__(self, "s", as_ratio(self.s))
        if self.r == self.s:
            raise FrameError(f"degenerate frame: r = s = {self.r}")

    def local(self, t) -> Fraction:
        """Local coordinate of ``t``: 0 at r, 1 at s."""
        return (as_ratio(t) - self.r) / (self.s - self.r)

    def at(self, lam) -> Fraction:
        return self.r + as_ratio(lam) * (self.s - self.r)


@dataclass(frozen=True)
class FramePair:
    frame_u: AffineFrame1
    frame_v: AffineFrame1

    @classmethod
    def of(cls, fu, fv) -> "FramePair":
        if not isinstance(fu, AffineFrame1):
            fu = AffineFrame1(*fu)
        if not isinstance(fv, AffineFrame1):
            fv = AffineFrame1(*fv)
        return cls(fu, fv)


@dataclass(frozen=True)
class AffineFrame2:
    r: Point2
    s: Point2
    t: Point2

    def __post_init__(self):
        for name in ("r", "s", "t"):
            object.__setattr__(self, name, Point2.of(getattr(self, name)))
        if self._det() == 0:
            raise FrameError(f"frame points {self.r}, {self.s}, {self.t} are collinear")

    @classmethod
    def standard(cls) -> "AffineFrame2":
        return cls((1, 0), (0, 1), (0, 0))

    def _det(self) -> Fraction:
        a = (self.s.u - self.r.u, self.s.v - self.r.v)
        b = (self.t.u - self.r.u, self.t.v - self.r.v)
        return a[0] * b[1] - a[1] * b[0]

    def barycentric(self, uv) -> tuple:
        """Coordinates (l_r, l_s, l_t) of a point, summing to 1."""
        u, v = (as_ratio(x) for x in uv)
        r, s, t = self.r, self.s, self.t
        det = self._det()
        ls = ((u - r.u) * (t.v - r.v) - (v - r.v) * (t.u - r.u)) / det
        lt = ((s.u - r.u) * (v - r.v) - (s.v - r.v) * (u - r.u)) / det
        return (1 - ls - lt, ls, lt)

    def at(self, lr, ls, lt) -> Point2:
        r, s, t = self.r, self.s, self.t
        return Point2(lr * r.u + ls * s.u + lt * t.u, lr * r.v + ls * s.v + lt * t.v)


@dataclass(frozen=True)
class WeightedPoint:
    """A control point with its weight.

    Stored homogeneously: ``coords`` are the numerator polar values, so the
    affine point is ``coords / weight``. Polynomial maps give weight 1.
    """

    coords: tuple
    weight: Fraction = Fraction(1)

    @classmethod
    def from_affine(cls, affine, weight=1) -> "WeightedPoint":
        w = as_ratio(weight)
        return cls(tuple(as_ratio(a) * w for a in affine), w)

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def affine(self) -> tuple:
        if self.weight == 0:
            raise ZeroWeightError("point at infinity has no affine coordinates")
        return tuple(c / self.weight for c in self.coords)

    def homogeneous(self) -> tuple:
        return self.coords + (self.weight,)

    def display(self) -> tuple:
        """``(x1, ..., xd, w)`` with the x already divided by w."""
        return self.affine + (self.weight,)


@dataclass(frozen=True)
class _Net:
    degree: object
    frame: object
    points: dict = field(repr=False)
    homogeneous: bool = False

    def items(self):
        return self.points.items()

    def indices(self):
        return list(self.points)

    def __getitem__(self, index):
        if isinstance(index, int):
            index = (index,)
        return self.points[index]

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points.values())

    @property
    def dim(self) -> int:
        return next(iter(self.points.values())).dim

    def display(self) -> list:
        """Rows of ``(x1, ..., xd, w)`` in net order."""
        return [p.display() for p in self.points.values()]

    def with_points(self, points: dict):
        return replace(self, points=points)


@dataclass(frozen=True)
class CurveControlNet(_Net):
    """``b_0 .. b_m`` keyed by ``(j,)``."""

    kind = "curve"


@dataclass(frozen=True)
class RectControlNet(_Net):
    """``b_{i,j}`` keyed by ``(i, j)``, i outer, j inner."""

    kind = "rect"

    def grid(self) -> list:
        p, q = self.degree
        return [[self.points[(i, j)] for j in range(q + 1)] for i in range(p + 1)]


@dataclass(frozen=True)
class TriControlNet(_Net):
    """``b_{i,j,k}`` keyed by ``(i, j, k)`` with i+j+k = m, i outer, j inner."""

    kind = "tri"


def curve_indices(m: int):
    return [(j,) for j in range(m + 1)]


def rect_indices(p: int, q: int):
    return [(i, j) for i in range(p + 1) for j in range(q + 1)]


def tri_indices(m: int):
    return [(i, j, m - i - j) for i in range(m + 1) for j in range(m - i + 1)]


def make_point(index, coords, weight, homogeneous: bool) -> WeightedPoint:
    if weight == 0 and not homogeneous:
        raise ZeroWeightError(
            f"weight vanishes at net index {index}; request homogeneous output instead",
            index=index,
        )
    return WeightedPoint(tuple(coords), weight)
