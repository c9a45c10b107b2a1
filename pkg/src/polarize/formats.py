"""Serialization of control nets: canonical JSON, brace listings, OBJ meshes."""

from __future__ import annotations

import json
import warnings
from decimal import Decimal, localcontext
from fractions import Fraction

from .errors import ZeroWeightError
from .nets import (AffineFrame1, AffineFrame2, CurveControlNet, FramePair, RectControlNet,
                   TriControlNet, WeightedPoint)
from .oracle import decasteljau_curve, decasteljau_rect, decasteljau_tri
from .scalar import format_ratio, parse_ratio

# -- JSON -----------------------------------------------------------------


def _pair(a, b):
    return [format_ratio(a), format_ratio(b)]


def net_to_dict(net) -> dict:
    out = {"kind": net.kind}
    if net.kind == "curve":
        out["degree"] = net.degree
        out["frame"] = _pair(net.frame.r, net.frame.s)
    elif net.kind == "rect":
        out["bidegree"] = list(net.degree)
        out["frames"] = [_pair(f.r, f.s) for f in (net.frame.frame_u, net.frame.frame_v)]
    else:
        out["degree"] = net.degree
        out["frame"] = [_pair(*pt) for pt in (net.frame.r, net.frame.s, net.frame.t)]
    out["homogeneous"] = net.homogeneous
    points = []
    for idx, pt in net.items():
        entry = {"index": list(idx)}
        if net.homogeneous:
            entry["homogeneous"] = [format_ratio(c) for c in pt.coords]
        else:
            entry["affine"] = [format_ratio(c) for c in pt.affine]
        entry["weight"] = format_ratio(pt.weight)
        points.append(entry)
    out["points"] = points
    return out


def dumps_json(net) -> str:
    return json.dumps(net_to_dict(net), indent=2) + "\n"


def net_from_dict(data: dict):
    kind = data["kind"]
    homogeneous = bool(data.get("homogeneous", False))
    points = {}
    for entry in data["points"]:
        w = parse_ratio(entry["weight"])
        if homogeneous:
            pt = WeightedPoint(tuple(parse_ratio(c) for c in entry["homogeneous"]), w)
        else:
            pt = WeightedPoint.from_affine([parse_ratio(c) for c in entry["affine"]], w)
        points[tuple(entry["index"])] = pt
    if kind == "curve":
        frame = AffineFrame1(*(parse_ratio(x) for x in data["frame"]))
        return CurveControlNet(data["degree"], frame, points, homogeneous)
    if kind == "rect":
        fu, fv = ([parse_ratio(x) for x in f] for f in data["frames"])
        return RectControlNet(tuple(data["bidegree"]), FramePair.of(fu, fv), points, homogeneous)
    if kind == "tri":
        frame = AffineFrame2(*([parse_ratio(x) for x in pt] for pt in data["frame"]))
        return TriControlNet(data["degree"], frame, points, homogeneous)
    raise ValueError(f"unknown net kind {kind!r}")


def loads_json(text: str):
    return net_from_dict(json.loads(text))


# -- brace listing --------------------------------------------------------


def dumps_paper(net) -> str:
    """Nested-brace listing ``{{x, y, w}, ...}`` in net order.

    Each entry is the affine point followed by its weight (or the homogeneous
    coordinates followed by the weight when the net is homogeneous).
    """
    rows = []
    for pt in net:
        vals = pt.coords + (pt.weight,) if net.homogeneous else pt.display()
        rows.append("{" + ", ".join(format_ratio(v) for v in vals) + "}")
    return "{" + ", ".join(rows) + "}\n"


# -- OBJ ------------------------------------------------------------------


def _decimal(x, precision: int) -> str:
    with localcontext() as ctx:
        ctx.prec = precision
        d = Decimal(x.numerator) / Decimal(x.denominator)
        return format(d.normalize(), "f")


def emit_obj(net, samples: int = 16, precision: int = 12, skip_singular: bool = False) -> bytes:
    """Tessellate a net by exact evaluation on a uniform grid and write OBJ.

    Curves become a polyline (``l``), rectangular nets a quad grid and
    triangular nets a barycentric triangle grid. Vertex values are exact
    until rendered as decimals with ``precision`` significant digits.

    At a sample where the weight vanishes the mesh generation fails with
    :class:`ZeroWeightError`, or, with ``skip_singular``, the vertex and every
    element touching it are dropped with a warning.
    """
    if samples < 2:
        raise ValueError(f"need at least 2 samples per axis, got {samples}")
    if net.dim not in (2, 3):
        raise ValueError(f"OBJ output needs 2 or 3 coordinates, net has {net.dim}")
    n = samples - 1

    if net.kind == "curve":
        keys = [(i,) for i in range(samples)]
        evaluate = {(i,): (lambda i=i: decasteljau_curve(net, net.frame.at(Fraction(i, n))))
                    for i in range(samples)}
        cells = [[(i,), (i + 1,)] for i in range(n)]
    elif net.kind == "rect":
        fu, fv = net.frame.frame_u, net.frame.frame_v
        keys = [(i, j) for i in range(samples) for j in range(samples)]
        evaluate = {(i, j): (lambda i=i, j=j: decasteljau_rect(
            net, fu.at(Fraction(i, n)), fv.at(Fraction(j, n)))) for i, j in keys}
        cells = [[(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)]
                 for i in range(n) for j in range(n)]
    else:
        keys = [(a, b) for a in range(samples) for b in range(samples - a)]
        evaluate = {(a, b): (lambda a=a, b=b: decasteljau_tri(
            net, net.frame.at(Fraction(a, n), Fraction(b, n), Fraction(n - a - b, n))))
            for a, b in keys}
        cells = []
        for a in range(n):
            for b in range(n - a):
                cells.append([(a, b), (a + 1, b), (a, b + 1)])
                if a + b < n - 1:
                    cells.append([(a + 1, b), (a + 1, b + 1), (a, b + 1)])

    lines = [f"# polarize {net.kind} net, degree {net.degree}, {samples} samples per axis"]
    number = {}
    for key in keys:
        try:
            xyz = evaluate[key]()
        except ZeroWeightError:
            if not skip_singular:
                raise
            warnings.warn(f"skipping sample {key}: weight vanishes", RuntimeWarning)
            continue
        if len(xyz) == 2:
            xyz = xyz + (Fraction(0),)
        number[key] = len(number) + 1
        lines.append("v " + " ".join(_decimal(c, precision) for c in xyz))
    tag = "l" if net.kind == "curve" else "f"
    for cell in cells:
        if all(k in number for k in cell):
            lines.append(tag + " " + " ".join(str(number[k]) for k in cell))
    return ("\n".join(lines) + "\n").encode("ascii")
