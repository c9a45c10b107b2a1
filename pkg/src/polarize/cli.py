"""Command-line front end: ``polarize curve|rect|tri``.

Exit status: 0 success, 1 ``--verify`` mismatch, 2 parse/usage error,
3 degree or frame error, 4 vanishing weight.
"""

from __future__ import annotations

import argparse
import os
import sys
import warnings

from .curve import control_args_curve, curve_control_points
from .errors import DegreeError, FrameError, OracleLimitError, ParseError, ZeroWeightError
from .formats import dumps_json, dumps_paper, emit_obj
from .nets import AffineFrame1, AffineFrame2, FramePair, Point2
from .oracle import MAX_CURVE, MAX_RECT, MAX_TRI, naive_polar_value
from .parser import parse_poly1, parse_poly2
from .poly import RationalMap
from .rational import drop_coordinates
from .rect import control_args_rect, rect_control_net
from .scalar import parse_ratio
from .tri import control_args_tri, tri_control_net

EXIT_VERIFY, EXIT_PARSE, EXIT_DEGREE, EXIT_WEIGHT = 1, 2, 3, 4
ORACLE_ENV = "POLARIZE_MAX_ORACLE"


class UsageError(ParseError):
    pass


def _ratios(text: str, n: int, field: str) -> list:
    parts = text.split(",")
    if len(parts) != n:
        raise UsageError(f"{field}: expected {n} comma-separated values, got {text!r}")
    try:
        return [parse_ratio(p) for p in parts]
    except ParseError as e:
        raise UsageError(f"{field}: {e}") from None


def _ints(text: str, n: int, field: str) -> list:
    parts = text.split(",")
    if len(parts) != n or not all(p.strip().isdigit() for p in parts):
        raise UsageError(f"{field}: expected {n} comma-separated nonnegative integers, got {text!r}")
    return [int(p) for p in parts]


def parse_tri_frame(text: str) -> AffineFrame2:
    """``"(a,b);(c,d);(e,f)"`` in Cartesian form, or three barycentric triples."""
    chunks = [c.strip() for c in text.split(";")]
    if len(chunks) != 3:
        raise UsageError(f"--tri-frame: expected three ';'-separated points, got {text!r}")
    pts = []
    for c in chunks:
        if not (c.startswith("(") and c.endswith(")")):
            raise UsageError(f"--tri-frame: point {c!r} must be parenthesized")
        inner = c[1:-1]
        arity = inner.count(",") + 1
        if arity not in (2, 3):
            raise UsageError(f"--tri-frame: point {c!r} needs 2 or 3 coordinates")
        pts.append(Point2.of(_ratios(inner, arity, "--tri-frame")))
    return AffineFrame2(*pts)


def _parse_polys(args, parse):
    nums = []
    for i, src in enumerate(args.coord, start=1):
        try:
            nums.append(parse(src))
        except ParseError as e:
            raise UsageError(f"--coord #{i} ({src!r}): {e}") from None
    den = None
    if args.denom is not None:
        try:
            den = parse(args.denom)
        except ParseError as e:
            raise UsageError(f"--denom ({args.denom!r}): {e}") from None
        if den.is_zero():
            raise UsageError("--denom: the denominator is the zero polynomial")
    return nums, den


def build_net(args):
    """Run the conversion described by parsed CLI arguments."""
    if not args.coord:
        raise UsageError("at least one --coord expression is required")
    homogeneous = args.homogeneous
    if args.kind == "curve":
        nums, den = _parse_polys(args, parse_poly1)
        rmap = RationalMap(nums, den)
        frame = AffineFrame1(*_ratios(args.frame or "0,1", 2, "--frame"))
        net = curve_control_points(rmap, args.degree, frame, homogeneous=homogeneous)
    elif args.kind == "rect":
        nums, den = _parse_polys(args, parse_poly2)
        rmap = RationalMap(nums, den)
        bideg = None if args.bidegree is None else tuple(_ints(args.bidegree, 2, "--bidegree"))
        frames = FramePair.of(_ratios(args.frame_u or "0,1", 2, "--frame-u"),
                              _ratios(args.frame_v or "0,1", 2, "--frame-v"))
        net = rect_control_net(rmap, bideg, frames, homogeneous=homogeneous)
    else:
        nums, den = _parse_polys(args, parse_poly2)
        rmap = RationalMap(nums, den)
        frame = parse_tri_frame(args.tri_frame) if args.tri_frame else AffineFrame2.standard()
        net = tri_control_net(rmap, args.degree, frame, homogeneous=homogeneous)
    return rmap, net


def verify_net(rmap, net) -> list:
    """Recompute every homogeneous coordinate with the brute-force oracle.

    Returns the indices that disagree. The job size must not exceed
    ``$POLARIZE_MAX_ORACLE`` (nor the oracle's own hard limit).
    """
    raw = os.environ.get(ORACLE_ENV)
    if raw is None or not raw.strip().isdigit():
        raise UsageError(f"--verify needs {ORACLE_ENV} set to the largest argument count to check")
    bound = int(raw)
    if net.kind == "curve":
        size, hard = net.degree, MAX_CURVE
    elif net.kind == "rect":
        size, hard = sum(net.degree), MAX_RECT
    else:
        size, hard = net.degree, MAX_TRI
    if size > min(bound, hard):
        raise OracleLimitError(
            f"--verify: {net.kind} with {size} arguments exceeds limit {min(bound, hard)}")
    bad = []
    for idx, pt in net.items():
        if net.kind == "curve":
            call_args = control_args_curve(net.frame, net.degree, idx[0])
        elif net.kind == "rect":
            call_args = control_args_rect(net.frame, *net.degree, *idx)
        else:
            call_args = control_args_tri(net.frame, *idx)
        expected = tuple(naive_polar_value(p, call_args, net.kind) for p in rmap.polys())
        if expected != pt.homogeneous():
            bad.append(idx)
    return bad


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="polarize",
        description="Convert monomial-form curves and surfaces to Bézier control nets.")
    sub = ap.add_subparsers(dest="kind", required=True)
    for kind, help_ in (("curve", "curve in t over a frame r,s"),
                        ("rect", "tensor-product patch in u, v over two line frames"),
                        ("tri", "total-degree patch in u, v over a triangle")):
        p = sub.add_parser(kind, help=help_)
        p.add_argument("--coord", action="append", default=[], metavar="EXPR",
                       help="coordinate numerator (repeatable, in order)")
        p.add_argument("--denom", metavar="EXPR", help="shared denominator (default 1)")
        if kind == "curve":
            p.add_argument("--degree", type=int, help="polarization degree (default: inferred)")
            p.add_argument("--frame", metavar="R,S", help="parameter frame (default 0,1)")
        elif kind == "rect":
            p.add_argument("--bidegree", metavar="P,Q", help="bidegree (default: inferred)")
            p.add_argument("--frame-u", metavar="R,S", help="u frame (default 0,1)")
            p.add_argument("--frame-v", metavar="R,S", help="v frame (default 0,1)")
        else:
            p.add_argument("--degree", type=int, help="total degree (default: inferred)")
            p.add_argument("--tri-frame", metavar="'(a,b);(c,d);(e,f)'",
                           help="triangle frame (default (1,0);(0,1);(0,0))")
        p.add_argument("--format", choices=("json", "paper", "obj"), default="json")
        p.add_argument("--samples", type=int, default=16, help="OBJ samples per axis")
        p.add_argument("--precision", type=int, default=12,
                       help="significant digits for OBJ vertices")
        p.add_argument("--skip-singular", action="store_true",
                       help="OBJ: drop samples where the weight vanishes instead of failing")
        p.add_argument("--drop-coord", action="append", type=int, default=[], metavar="I",
                       help="drop coordinate I (1-based) before output (repeatable)")
        p.add_argument("--homogeneous", action="store_true",
                       help="emit homogeneous coordinates; allows zero weights")
        p.add_argument("--verify", action="store_true",
                       help=f"cross-check against brute-force polarization (needs ${ORACLE_ENV})")
        p.add_argument("-o", "--output", help="write here instead of stdout")
    return ap


def run(argv=None, out=None) -> int:
    """Entry point; returns the exit status. Nothing is written on failure."""
    args = make_parser().parse_args(argv)
    out = out if out is not None else sys.stdout.buffer
    try:
        rmap, net = build_net(args)
        if args.verify:
            bad = verify_net(rmap, net)
            if bad:
                print(f"polarize: --verify mismatch at net indices {bad}", file=sys.stderr)
                return EXIT_VERIFY
        if args.drop_coord:
            for c in args.drop_coord:
                if not 1 <= c <= net.dim:
                    raise UsageError(f"--drop-coord {c}: net has coordinates 1..{net.dim}")
            net = drop_coordinates(net, [c - 1 for c in args.drop_coord])
        if args.format == "json":
            data = dumps_json(net).encode()
        elif args.format == "paper":
            data = dumps_paper(net).encode()
        else:
            if args.samples < 2:
                raise UsageError(f"--samples: need at least 2, got {args.samples}")
            if net.dim not in (2, 3):
                raise UsageError(f"--format obj: net has {net.dim} coordinates; "
                                 "use --drop-coord to reach 2 or 3")
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always")
                data = emit_obj(net, args.samples, args.precision, args.skip_singular)
            for w in caught:
                print(f"polarize: warning: {w.message}", file=sys.stderr)
    except ParseError as e:
        print(f"polarize: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (DegreeError, FrameError, OracleLimitError) as e:
        print(f"polarize: {e}", file=sys.stderr)
        return EXIT_DEGREE
    except ZeroWeightError as e:
        print(f"polarize: {e}", file=sys.stderr)
        return EXIT_WEIGHT
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(data)
    else:
        out.write(data)
        out.flush()
    return 0


def main():
    sys.exit(run())
