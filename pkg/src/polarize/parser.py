"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace is insignificant)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/' | <juxtaposition>) factor)*
    factor := '-' factor | atom ('^' uint)?
    atom   := number | var | '(' expr ')'

Implicit multiplication covers ``4t``, ``u v^2`` and ``(1+t^2)^5``. Division
is only allowed by constants. ``^`` binds tighter than unary minus, which
binds tighter than multiplication, so ``-t^2`` is ``-(t^2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .poly import Poly1, Poly2
from .scalar import format_ratio

# -- AST ------------------------------------------------------------------


@dataclass(frozen=True)
class Const:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int


@dataclass(frozen=True)
class Sum:
    left: object
    op: str  # "+" or "-"
    right: object


@dataclass(frozen=True)
class Product:
    left: object
    op: str  # "*" or "/"
    right: object


def evaluate(node, env: dict) -> Fraction:
    """Evaluate an AST directly, without expanding to monomial form."""
    if isinstance(node, Const):
        return node.value
    if isinstance(node, Var):
        return Fraction(env[node.name])
    if isinstance(node, Neg):
        return -evaluate(node.operand, env)
    if isinstance(node, Power):
        return evaluate(node.base, env) ** node.exponent
    if isinstance(node, Sum):
        a, b = evaluate(node.left, env), evaluate(node.right, env)
        return a + b if node.op == "+" else a - b
    if isinstance(node, Product):
        a, b = evaluate(node.left, env), evaluate(node.right, env)
        return a * b if node.op == "*" else a / b
    raise TypeError(f"not an expression node: {node!r}")


# -- tokens ---------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "var", "op", "end"
    text: str
    pos: int


def tokenize(src: str) -> list[Token]:
    tokens = []
    i, n = 0, len(src)
    while i < n:
        c = src[i]
        if c.isspace():
            i += 1
        elif c.isdigit() or (c == "." and i + 1 < n and src[i + 1].isdigit()):
            j = i
            while j < n and src[j].isdigit():
                j += 1
            if j < n and src[j] == ".":
                j += 1
                while j < n and src[j].isdigit():
                    j += 1
            tokens.append(Token("num", src[i:j], i))
            i = j
        elif c.isalpha():
            # Variables are single letters, so "uv" is u*v.
            tokens.append(Token("var", c, i))
            i += 1
        elif c in "+-*/^()":
            tokens.append(Token("op", c, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, src: str, variables: tuple):
        self.tokens = tokenize(src)
        self.i = 0
        self.variables = variables

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text):
        if self.tok.text != text or self.tok.kind != "op":
            raise ParseError(f"expected {text!r}, found {self.tok.text or 'end of input'!r}",
                             self.tok.pos)
        return self.advance()

    def parse(self):
        if self.tok.kind == "end":
            raise ParseError("empty expression", 0)
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def expr(self):
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            node = Sum(node, op, self.term())
        return node

    def _starts_atom(self) -> bool:
        t = self.tok
        return t.kind in ("num", "var") or (t.kind == "op" and t.text == "(")

    def term(self):
        node = self.factor()
        while True:
            t = self.tok
            if t.kind == "op" and t.text in "*/":
                self.advance()
                node = Product(node, t.text, self.factor())
            elif self._starts_atom():
                node = Product(node, "*", self.factor())
            else:
                return node

    def factor(self):
        if self.tok.kind == "op" and self.tok.text == "-":
            self.advance()
            return Neg(self.factor())
        node = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.advance()
            t = self.tok
            if t.kind == "op" and t.text == "-":
                raise ParseError("negative exponents are not polynomial", t.pos)
            if t.kind != "num":
                raise ParseError("exponent must be a nonnegative integer literal", t.pos)
            if not t.text.isdigit():
                raise ParseError(f"fractional exponent {t.text!r}", t.pos)
            self.advance()
            node = Power(node, int(t.text))
        return node

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.advance()
            return Const(Fraction(t.text))
        if t.kind == "var":
            if t.text not in self.variables:
                allowed = ", ".join(self.variables)
                raise ParseError(f"unknown variable {t.text!r} (expected {allowed})", t.pos)
            self.advance()
            return Var(t.text)
        if t.kind == "op" and t.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.pos)


def parse_expr(src: str, variables=("t",)):
    """Parse ``src`` into an AST over the given single-letter variables."""
    return _Parser(src, tuple(variables)).parse()


def expand(node, kind):
    """Expand an AST into a sparse polynomial of class ``kind``."""
    if isinstance(node, Const):
        return kind.constant(node.value)
    if isinstance(node, Var):
        if kind is Poly1:
            return Poly1.var()
        return Poly2.var_u() if node.name == "u" else Poly2.var_v()
    if isinstance(node, Neg):
        return -expand(node.operand, kind)
    if isinstance(node, Power):
        return expand(node.base, kind) ** node.exponent
    if isinstance(node, Sum):
        a, b = expand(node.left, kind), expand(node.right, kind)
        return a + b if node.op == "+" else a - b
    if isinstance(node, Product):
        a, b = expand(node.left, kind), expand(node.right, kind)
        if node.op == "*":
            return a * b
        if not b.is_constant():
            raise ParseError("division is only allowed by constants")
        d = b.constant_value()
        if d == 0:
            raise ParseError("division by zero")
        return a.scale(1 / d)
    raise TypeError(f"not an expression node: {node!r}")


def parse_poly1(src: str) -> Poly1:
    """Parse a univariate polynomial in ``t``."""
    return expand(parse_expr(src, ("t",)), Poly1)


def parse_poly2(src: str) -> Poly2:
    """Parse a bivariate polynomial in ``u`` and ``v``."""
    return expand(parse_expr(src, ("u", "v")), Poly2)


# -- rendering ------------------------------------------------------------


def _monomial(names, exps) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render(p) -> str:
    """Canonical monomial-sum text that :func:`parse_poly1`/`parse_poly2` read back."""
    if p.is_zero():
        return "0"
    if isinstance(p, Poly1):
        terms = [(_monomial("t", (e,)), c) for e, c in p.items()]
    else:
        terms = [(_monomial("uv", e), c) for e, c in p.items()]
    out = []
    for i, (mono, c) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        mag = format_ratio(abs(c))
        if mono and mag == "1":
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = mag
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)
