"""Exact rational scalars and the combinatorial coefficients used by the recurrences.

``Ratio`` is :class:`fractions.Fraction`: it is always stored in lowest terms
with a positive denominator, and ``Ratio(0)`` has denominator 1.
"""

from fractions import Fraction
from functools import lru_cache
import math
import re

Ratio = Fraction

_RATIO_RE = re.compile(r"\s*(-?\d+)(?:\s*/\s*(\d+))?\s*\Z")


def as_ratio(x) -> Fraction:
    """Coerce ints, Fractions and ratio text ("-3/4") to a Ratio.

    Floats are rejected so that inexact values never leak in silently.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a ratio")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_ratio(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact ratio")


def parse_ratio(text: str) -> Fraction:
    """Parse ``n`` or ``n/d`` with an optional leading ``-``."""
    from .errors import ParseError

    m = _RATIO_RE.match(text)
    if m is None:
        raise ParseError(f"not a ratio: {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), den)


def format_ratio(x: Fraction) -> str:
    """Inverse of :func:`parse_ratio`; integers print without ``/1``."""
    x = as_ratio(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def add(a, b) -> Fraction:
    return as_ratio(a) + as_ratio(b)


def mul(a, b) -> Fraction:
    return as_ratio(a) * as_ratio(b)


def neg(a) -> Fraction:
    return -as_ratio(a)


def div(a, b) -> Fraction:
    """Exact quotient; raises ZeroDivisionError when ``b`` is zero."""
    b = as_ratio(b)
    if b == 0:
        raise ZeroDivisionError("division of a ratio by zero")
    return as_ratio(a) / b


@lru_cache(maxsize=4096)
def binomial(n: int, k: int) -> int:
    """C(n, k), with the convention C(n, k) = 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial3(m: int, h: int, l: int) -> int:
    """Number of ways to pick disjoint index sets of sizes h and l out of m."""
    if m < 0:
        raise ValueError(f"multinomial3 needs m >= 0, got {m}")
    if h < 0 or l < 0 or h + l > m:
        return 0
    return binomial(m, h) * binomial(m - h, l)
