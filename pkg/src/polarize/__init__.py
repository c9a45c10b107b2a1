"""Bézier control points of polynomial and rational curves and surfaces.

Monomial-form maps are converted to control nets by evaluating their polar
forms (blossoms) with Pascal-like recurrences, in exact rational arithmetic.
"""

from .curve import (closed_form_polar_curve, curve_control_points, polar_value_curve,
                    sigma_table_curve)
from .errors import (DegreeError, FrameError, OracleLimitError, ParseError, PolarizeError,
                     ZeroWeightError)
from .nets import (AffineFrame1, AffineFrame2, CurveControlNet, FramePair, Point2,
                   RectControlNet, TriControlNet, WeightedPoint)
from .parser import parse_poly1, parse_poly2, render
from .poly import Poly1, Poly2, RationalMap, degrees, eval1, eval2
from .rational import drop_coordinates, lift_and_polarize, project_coordinates
from .rect import closed_form_rect, polar_value_rect, rect_control_net, sigma_table_rect
from .scalar import Ratio, binomial, format_ratio, multinomial3, parse_ratio
from .tri import closed_form_tri, polar_value_tri, sigma_table_tri, tri_control_net

__version__ = "0.1.0"
