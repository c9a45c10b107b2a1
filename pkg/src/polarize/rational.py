"""Weighted control nets of rational maps, and parallel projection of nets."""

from __future__ import annotations

from .curve import curve_control_points
from .nets import AffineFrame1, AffineFrame2, FramePair, WeightedPoint
from .poly import RationalMap
from .rect import rect_control_net
from .tri import tri_control_net


def lift_and_polarize(rmap: RationalMap, degree=None, frame=None, *,
                      kind: str | None = None, homogeneous: bool = False):
    """Polarize every numerator and the denominator at each net index.

    The result holds one :class:`WeightedPoint` per index, whose weight is the
    denominator's polar value and whose affine part is the numerators' polar
    values divided by it. ``kind`` ("curve", "rect" or "tri") is inferred from
    the map and frame when omitted: univariate maps give curves, a pair of
    line frames gives a rectangular net, anything else a triangular one.

    A vanishing weight raises :class:`~polarize.errors.ZeroWeightError`
    naming the index, unless ``homogeneous`` is set.
    """
    if kind is None:
        if rmap.is_univariate:
            kind = "curve"
        elif isinstance(frame, FramePair) or (
                frame is not None and len(frame) == 2 and not isinstance(frame, AffineFrame2)):
            kind = "rect"
        else:
            kind = "tri"
    if kind == "curve":
        return curve_control_points(rmap, degree, frame if frame is not None else AffineFrame1(0, 1),
                                    homogeneous=homogeneous)
    if kind == "rect":
        return rect_control_net(rmap, degree, frame if frame is not None else ((0, 1), (0, 1)),
                                homogeneous=homogeneous)
    if kind == "tri":
        return tri_control_net(rmap, degree, frame, homogeneous=homogeneous)
    raise ValueError(f"unknown net kind {kind!r}")


def project_coordinates(net, keep):
    """Parallel projection: keep only the listed coordinate positions (0-based).

    Weights are untouched, so the projected net describes the shadow of the
    same rational object.
    """
    keep = list(keep)
    dim = net.dim
    for c in keep:
        if not 0 <= c < dim:
            raise IndexError(f"coordinate {c} out of range for a {dim}-dimensional net")
    points = {
        idx: WeightedPoint(tuple(pt.coords[c] for c in keep), pt.weight)
        for idx, pt in net.items()
    }
    return net.with_points(points)


def drop_coordinates(net, drop):
    drop = set(drop)
    return project_coordinates(net, [c for c in range(net.dim) if c not in drop])
