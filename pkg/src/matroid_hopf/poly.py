"""Sparse integer polynomials in the fixed variables x, y, s, a, b.

Terms are stored as a dict from exponent 5-tuples to nonzero ``int``
coefficients, so every mathematical polynomial has exactly one
representation and ``==`` is structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping, Union

VARS = ("x", "y", "s", "a", "b")
_INDEX = {v: i for i, v in enumerate(VARS)}
_ZERO_EXP = (0, 0, 0, 0, 0)

Exponent = tuple  # (ex, ey, es, ea, eb)
PolyLike = Union["Poly", int]


class Poly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != 5:
                    raise ValueError(f"exponent vector must have length 5, got {exp!r}")
                if c:
                    clean[tuple(exp)] = int(c)
        self._terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c: int) -> Poly:
        return cls({_ZERO_EXP: c})

    @classmethod
    def var(cls, name: str) -> Poly:
        exp = [0] * 5
        exp[_INDEX[name]] = 1
        return cls({tuple(exp): 1})

    @classmethod
    def coerce(cls, value: PolyLike) -> Poly:
        if isinstance(value, Poly):
            return value
        if isinstance(value, int):
            return cls.const(value)
        raise TypeError(f"cannot convert {type(value).__name__} to Poly")

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """(exponent, coefficient) pairs in graded-lex order."""
        return sorted(self._terms.items(), key=_grlex_key)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self, name: str | None = None) -> int:
        """Total degree, or degree in one variable. The zero polynomial has degree -1."""
        if not self._terms:
            return -1
        if name is None:
            return max(sum(e) for e in self._terms)
        i = _INDEX[name]
        return max(e[i] for e in self._terms)

    def constant_term(self) -> int:
        return self._terms.get(_ZERO_EXP, 0)

    # -- ring operations --------------------------------------------------

    def __add__(self, other: PolyLike) -> Poly:
        other = Poly.coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: PolyLike) -> Poly:
        return self + (-Poly.coerce(other))

    def __rsub__(self, other: PolyLike) -> Poly:
        return Poly.coerce(other) - self

    def __mul__(self, other: PolyLike) -> Poly:
        other = Poly.coerce(other)
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3], e1[4] + e2[4])
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, d: int) -> Poly:
        """Divide every coefficient by ``d``; raises if any division leaves a remainder."""
        out = {}
        for e, c in self._terms.items():
            q, r = divmod(c, d)
            if r:
                raise ArithmeticError(f"coefficient {c} of {_monomial(e)} is not divisible by {d}")
            out[e] = q
        return Poly(out)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- calculus and substitution ---------------------------------------

    def d_ds(self) -> Poly:
        return self.derivative("s")

    def derivative(self, name: str) -> Poly:
        i = _INDEX[name]
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return Poly(out)

    def subst(self, bindings: Mapping[str, PolyLike]) -> Poly:
        """Simultaneously replace variables by polynomials."""
        if not bindings:
            return self
        repl = {}
        for name, value in bindings.items():
            if name not in _INDEX:
                raise KeyError(f"unknown variable {name!r}")
            repl[_INDEX[name]] = Poly.coerce(value)
        powers: dict = {}

        def power(i, k):
            key = (i, k)
            if key not in powers:
                powers[key] = repl[i] ** k
            return powers[key]

        result = Poly()
        for e, c in self._terms.items():
            kept = tuple(0 if i in repl else e[i] for i in range(5))
            term = Poly({kept: c})
            for i in repl:
                if e[i]:
                    term = term * power(i, e[i])
            result = result + term
        return result

    def swap_xy(self) -> Poly:
        return Poly({(e[1], e[0], e[2], e[3], e[4]): c for e, c in self._terms.items()})

    def evaluate(self, values: Mapping[str, Union[int, Fraction]]):
        """Numeric value at a point; every variable present must be bound."""
        total = Fraction(0)
        for e, c in self._terms.items():
            t = Fraction(c)
            for i, k in enumerate(e):
                if k:
                    t *= Fraction(values[VARS[i]]) ** k
            total += t
        return total

    # -- text -------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = _monomial(e)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> Poly:
        return parse(text)


def _grlex_key(item):
    e = item[0]
    return (-sum(e), tuple(-k for k in e))


def _monomial(e) -> str:
    factors = []
    for i, k in enumerate(e):
        if k == 1:
            factors.append(VARS[i])
        elif k > 1:
            factors.append(f"{VARS[i]}^{k}")
    return "*".join(factors)


_TOKEN = re.compile(r"\s*(?:(\d+)|([xysab])|(\^)|(\*)|([+-]))")


def parse(text: str) -> Poly:
    """Parse the rendering produced by ``str(Poly)`` (and slightly looser input)."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character at {pos}: {text[pos:]!r}")
        pos = m.end()
        num, var, caret, star, sign = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif var is not None:
            tokens.append(("var", var))
        elif caret:
            tokens.append(("^", None))
        elif star:
            tokens.append(("*", None))
        else:
            tokens.append(("sign", sign))
    if not tokens:
        raise ValueError("empty polynomial")

    i = 0
    result = Poly()
    first = True
    while i < len(tokens):
        sign = 1
        if tokens[i][0] == "sign":
            sign = -1 if tokens[i][1] == "-" else 1
            i += 1
        elif not first:
            raise ValueError("expected '+' or '-' between terms")
        first = False
        coeff = 1
        exp = [0] * 5
        need_factor = True
        while need_factor:
            if i >= len(tokens):
                raise ValueError("dangling operator")
            kind, val = tokens[i]
            i += 1
            if kind == "num":
                coeff *= val
            elif kind == "var":
                k = 1
                if i < len(tokens) and tokens[i][0] == "^":
                    if i + 1 >= len(tokens) or tokens[i + 1][0] != "num":
                        raise ValueError("expected integer exponent after '^'")
                    k = tokens[i + 1][1]
                    i += 2
                exp[_INDEX[val]] += k
            else:
                raise ValueError(f"unexpected token {kind!r}")
            need_factor = i < len(tokens) and tokens[i][0] == "*"
            if need_factor:
                i += 1
        result = result + Poly({tuple(exp): sign * coeff})
    return result


ONE = Poly.const(1)
ZERO = Poly()
X = Poly.var("x")
Y = Poly.var("y")
S = Poly.var("s")
A = Poly.var("a")
B = Poly.var("b")


def d_ds(p: Poly) -> Poly:
    return p.d_ds()


def subst(p: Poly, bindings: Mapping[str, PolyLike]) -> Poly:
    return p.subst(bindings)
