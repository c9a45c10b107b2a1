"""Sparse polynomials in one variable (t) and two variables (u, v).

Coefficients are exact ratios keyed by exponent (an int for :class:`Poly1`,
an ``(h, k)`` pair for :class:`Poly2`). Zero coefficients are never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegreeError
from .scalar import as_ratio

NEG_INF = float("-inf")


class _Sparse:
    __slots__ = ("_coeffs",)

    def __init__(self, terms=()):
        """Build from a mapping or an iterable of ``(exponent, coeff)`` pairs.

        Duplicate exponents are summed; entries that cancel are dropped.
        """
        if hasattr(terms, "items"):
            terms = terms.items()
        acc: dict = {}
        for e, c in terms:
            e = self._check_exp(e)
            acc[e] = acc.get(e, 0) + as_ratio(c)
        self._coeffs = {e: c for e, c in sorted(acc.items()) if c != 0}

    @staticmethod
    def _check_exp(e):
        raise NotImplementedError

    @staticmethod
    def _add_exp(a, b):
        raise NotImplementedError

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def coeff(self, e) -> Fraction:
        return self._coeffs.get(e, Fraction(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return all(self._is_zero_exp(e) for e in self._coeffs)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self!r} is not constant")
        return next(iter(self._coeffs.values()), Fraction(0))

    @classmethod
    def constant(cls, c):
        return cls({cls._zero_exp(): c})

    def __eq__(self, other):
        if type(other) is type(self):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == self.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, tuple(self._coeffs.items())))

    def __len__(self):
        return len(self._coeffs)

    def _coerce(self, other):
        if type(other) is type(self):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return type(self)(list(self.items()) + list(other.items()))

    __radd__ = __add__

    def __neg__(self):
        return type(self)((e, -c) for e, c in self.items())

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        add = self._add_exp
        return type(self)(
            (add(e1, e2), c1 * c2)
            for e1, c1 in self.items()
            for e2, c2 in other.items()
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = self.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "_Sparse":
        c = as_ratio(c)
        return type(self)((e, c * a) for e, a in self.items())


class Poly1(_Sparse):
    """Univariate polynomial in t."""

    __slots__ = ()

    @staticmethod
    def _check_exp(e):
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise ValueError(f"bad exponent {e!r}")
        return e

    @staticmethod
    def _add_exp(a, b):
        return a + b

    @staticmethod
    def _zero_exp():
        return 0

    @staticmethod
    def _is_zero_exp(e):
        return e == 0

    @classmethod
    def var(cls):
        return cls({1: 1})

    def degree(self):
        """Largest exponent present; ``-inf`` for the zero polynomial."""
        return max(self._coeffs, default=NEG_INF)

    def __call__(self, t):
        return eval1(self, t)

    def __repr__(self):
        body = ", ".join(f"{e}: {c}" for e, c in self.items())
        return f"Poly1({{{body}}})"


class Poly2(_Sparse):
    """Bivariate polynomial in u, v."""

    __slots__ = ()

    @staticmethod
    def _check_exp(e):
        h, k = e
        if (not isinstance(h, int) or not isinstance(k, int)
                or isinstance(h, bool) or isinstance(k, bool) or h < 0 or k < 0):
            raise ValueError(f"bad exponent pair {e!r}")
        return (h, k)

    @staticmethod
    def _add_exp(a, b):
        return (a[0] + b[0], a[1] + b[1])

    @staticmethod
    def _zero_exp():
        return (0, 0)

    @staticmethod
    def _is_zero_exp(e):
        return e == (0, 0)

    @classmethod
    def var_u(cls):
        return cls({(1, 0): 1})

    @classmethod
    def var_v(cls):
        return cls({(0, 1): 1})

    def maxdeg_u(self):
        return max((h for h, _ in self._coeffs), default=NEG_INF)

    def maxdeg_v(self):
        return max((k for _, k in self._coeffs), default=NEG_INF)

    def total_degree(self):
        return max((h + k for h, k in self._coeffs), default=NEG_INF)

    def __call__(self, u, v):
        return eval2(self, u, v)

    def __repr__(self):
        body = ", ".join(f"{e}: {c}" for e, c in self.items())
        return f"Poly2({{{body}}})"


def eval1(p: Poly1, t) -> Fraction:
    """Exact value of ``p`` at ``t`` (Horner over the sparse exponents)."""
    t = as_ratio(t)
    acc = Fraction(0)
    prev = None
    for e, c in sorted(p.items(), reverse=True):
        if prev is not None:
            acc *= t ** (prev - e)
        acc += c
        prev = e
    if prev:
        acc *= t ** prev
    return acc


def eval2(p: Poly2, u, v) -> Fraction:
    u, v = as_ratio(u), as_ratio(v)
    return sum((c * u ** h * v ** k for (h, k), c in p.items()), Fraction(0))


@dataclass(frozen=True)
class RationalMap:
    """``d`` numerator polynomials over one shared denominator.

    A polynomial map is the special case whose denominator is the constant 1.
    """

    numerators: tuple
    denominator: _Sparse

    def __init__(self, numerators: Sequence, denominator=None):
        numerators = tuple(numerators)
        if not numerators:
            raise ValueError("a map needs at least one coordinate")
        kind = type(numerators[0])
        if kind not in (Poly1, Poly2):
            raise TypeError("numerators must be Poly1 or Poly2")
        if denominator is None:
            denominator = kind.constant(1)
        elif isinstance(denominator, (int, Fraction)):
            denominator = kind.constant(denominator)
        if any(type(p) is not kind for p in numerators) or type(denominator) is not kind:
            raise TypeError("numerators and denominator must share one polynomial kind")
        if denominator.is_zero():
            raise ZeroDivisionError("denominator is the zero polynomial")
        object.__setattr__(self, "numerators", numerators)
        object.__setattr__(self, "denominator", denominator)

    @property
    def dim(self) -> int:
        return len(self.numerators)

    @property
    def is_univariate(self) -> bool:
        return isinstance(self.denominator, Poly1)

    @property
    def is_polynomial(self) -> bool:
        return self.denominator == 1

    def polys(self) -> tuple:
        """Numerators followed by the denominator."""
        return self.numerators + (self.denominator,)

    def __call__(self, *params) -> tuple:
        """Affine value of the map; raises ZeroDivisionError at poles."""
        nums = [p(*params) for p in self.numerators]
        w = self.denominator(*params)
        if w == 0:
            raise ZeroDivisionError(f"denominator vanishes at {params}")
        return tuple(c / w for c in nums)


def _nonneg(d):
    return 0 if d == NEG_INF else d


def degrees(rmap: RationalMap, kind: str | None = None):
    """Degree of a map for a given polarization kind.

    ``kind`` is ``"curve"`` (default for univariate maps), ``"rect"`` for the
    bidegree ``(p, q)``, or ``"tri"`` (default for bivariate maps) for the
    total degree. The maximum is taken over every numerator and the
    denominator; the zero polynomial counts as degree 0.
    """
    polys = rmap.polys()
    if rmap.is_univariate:
        if kind not in (None, "curve"):
            raise ValueError(f"univariate map has no {kind!r} degree")
        return max(_nonneg(p.degree()) for p in polys)
    kind = kind or "tri"
    if kind == "rect":
        return (max(_nonneg(p.maxdeg_u()) for p in polys),
                max(_nonneg(p.maxdeg_v()) for p in polys))
    if kind == "tri":
        return max(_nonneg(p.total_degree()) for p in polys)
    raise ValueError(f"bivariate map has no {kind!r} degree")


def resolve_degree(rmap: RationalMap, kind: str, requested=None):
    """Inferred degree, or ``requested`` after checking it is not too low."""
    inferred = degrees(rmap, kind)
    if requested is None:
        return inferred
    if kind == "rect":
        p, q = requested
        if p < inferred[0] or q < inferred[1]:
            raise DegreeError(f"bidegree {requested} is below the map's bidegree {inferred}")
        return (p, q)
    if requested < inferred:
        raise DegreeError(f"degree {requested} is below the map's degree {inferred}")
    return requested

