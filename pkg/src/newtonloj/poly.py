"""Exact sparse bivariate polynomials over the Gaussian rationals.

A polynomial is a map from exponent pairs (alpha, beta) to nonzero
GaussianRational coefficients; the empty map is the zero polynomial.
Exponents are plain Python ints, so lattice arithmetic never overflows.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, Mapping, Tuple

from .rational import ExtRational, GaussianRational, NEG_INF, POS_INF

# (alpha, beta): degree of X and Y in the monomial.
ExponentPair = Tuple[int, int]


class PolyParseError(ValueError):
    """Syntax error in a polynomial expression, with the offending position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class SparsePoly:
    """Immutable sparse polynomial in X and Y with exact coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[ExponentPair, GaussianRational] = ()):
        clean: Dict[ExponentPair, GaussianRational] = {}
        for (a, b), c in dict(terms).items():
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in term {(a, b)}")
            if not isinstance(c, GaussianRational):
                c = GaussianRational.of(c)
            if not c.is_zero:
                clean[(int(a), int(b))] = c
        self._terms = clean
        self._hash = None

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls) -> "SparsePoly":
        return cls()

    @classmethod
    def const(cls, c) -> "SparsePoly":
        return cls({(0, 0): GaussianRational.of(c)})

    @classmethod
    def monomial(cls, alpha: int, beta: int, c=1) -> "SparsePoly":
        return cls({(alpha, beta): GaussianRational.of(c)})

    # -- basic queries ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self._terms)

    def support(self) -> set:
        return set(self._terms)

    def coeff(self, alpha: int, beta: int) -> GaussianRational:
        return self._terms.get((alpha, beta), GaussianRational.of(0))

    def terms(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        out = dict(self._terms)
        for e, c in other._terms.items():
            cur = out.get(e)
            out[e] = c if cur is None else cur + c
        return SparsePoly(out)

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly({e: -c for e, c in self._terms.items()})

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        out: Dict[ExponentPair, GaussianRational] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                e = (a1 + a2, b1 + b2)
                p = c1 * c2
                cur = out.get(e)
                out[e] = p if cur is None else cur + p
        return SparsePoly(out)

    def scale(self, c) -> "SparsePoly":
        c = GaussianRational.of(c)
        return SparsePoly({e: k * c for e, k in self._terms.items()})

    def __pow__(self, n: int) -> "SparsePoly":
        if n < 0:
            raise ValueError("negative exponent")
        result = SparsePoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus and degrees ----------------------------------------------------

    def diff(self, var: str) -> "SparsePoly":
        """Exact formal partial derivative with respect to "X" or "Y"."""
        if var not in ("X", "Y"):
            raise ValueError(f"unknown variable {var!r}")
        out: Dict[ExponentPair, GaussianRational] = {}
        for (a, b), c in self._terms.items():
            if var == "X" and a >= 1:
                out[(a - 1, b)] = c * a
            elif var == "Y" and b >= 1:
                out[(a, b - 1)] = c * b
        return SparsePoly(out)

    def deg(self) -> ExtRational:
        if self.is_zero:
            return NEG_INF
        return ExtRational(max(a + b for a, b in self._terms))

    def deg_x(self) -> ExtRational:
        if self.is_zero:
            return NEG_INF
        return ExtRational(max(a for a, _ in self._terms))

    def deg_y(self) -> ExtRational:
        if self.is_zero:
            return NEG_INF
        return ExtRational(max(b for _, b in self._terms))

    def ord(self) -> ExtRational:
        if self.is_zero:
            return POS_INF
        return ExtRational(min(a + b for a, b in self._terms))

    def ord_x(self) -> ExtRational:
        if self.is_zero:
            return POS_INF
        return ExtRational(min(a for a, _ in self._terms))

    def ord_y(self) -> ExtRational:
        if self.is_zero:
            return POS_INF
        return ExtRational(min(b for _, b in self._terms))

    def degree_stats(self) -> dict:
        return {
            "deg": self.deg(),
            "deg_X": self.deg_x(),
            "deg_Y": self.deg_y(),
            "ord": self.ord(),
            "ord_X": self.ord_x(),
            "ord_Y": self.ord_y(),
        }

    # -- restrictions and transforms ----------------------------------------------

    def restrict_y0(self) -> "SparsePoly":
        """p(X, 0): the terms with beta = 0."""
        return SparsePoly({e: c for e, c in self._terms.items() if e[1] == 0})

    def restrict_x0(self) -> "SparsePoly":
        """p(0, Y): the terms with alpha = 0."""
        return SparsePoly({e: c for e, c in self._terms.items() if e[0] == 0})

    def transpose(self) -> "SparsePoly":
        """Swap the roles of X and Y."""
        return SparsePoly({(b, a): c for (a, b), c in self._terms.items()})

    def divisible_by(self, var: str, power: int) -> bool:
        if self.is_zero:
            return True
        idx = 0 if var == "X" else 1
        return all(e[idx] >= power for e in self._terms)

    def strip_constant(self) -> "SparsePoly":
        """p - p(0, 0); the gradient is unchanged."""
        out = dict(self._terms)
        out.pop((0, 0), None)
        return SparsePoly(out)

    def coeffs_in_y(self) -> list:
        """Coefficients of p viewed as a polynomial in Y, ascending in Y degree.

        Each entry is a dict alpha -> GaussianRational.
        """
        if self.is_zero:
            return []
        top = max(b for _, b in self._terms)
        rows: list = [dict() for _ in range(top + 1)]
        for (a, b), c in self._terms.items():
            rows[b][a] = c
        return rows

    # -- numeric evaluation ----------------------------------------------------------

    def eval_complex(self, x: complex, y: complex) -> complex:
        """Floating-point evaluation; may return non-finite values on overflow."""
        total = 0j
        for (a, b), c in self._terms.items():
            total += complex(c) * x**a * y**b
        return total

    # -- printing and parsing -----------------------------------------------------------

    def _sorted_terms(self):
        # Canonical order: graded lexicographic by (alpha+beta, alpha), descending.
        return sorted(
            self._terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0][0]), reverse=True
        )

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for (a, b), c in self._sorted_terms():
            mono = "*".join(
                s
                for s in (
                    "X" if a == 1 else f"X^{a}" if a else "",
                    "Y" if b == 1 else f"Y^{b}" if b else "",
                )
                if s
            )
            if not mono:
                text = str(c)
                negative = c.im == 0 and c.re < 0
            elif c.im == 0:
                negative = c.re < 0
                mag = abs(c.re)
                text = mono if mag == 1 else f"{mag}*{mono}"
                if negative:
                    text = "-" + text
            else:
                negative = False
                text = f"{c}*{mono}" if str(c) != "i" else f"i*{mono}"
                if not text.startswith("(") and c.re != 0:
                    text = f"({c})*{mono}"
            if not parts:
                parts.append(text)
            elif text.startswith("-"):
                parts.append("- " + text[1:])
            else:
                parts.append("+ " + text)
        return " ".join(parts)

    def __repr__(self):
        return f"SparsePoly({self})"

    @classmethod
    def parse(cls, text: str) -> "SparsePoly":
        """Parse an expression like "X^2 + (3/2+1/2i)*X*Y^3 - 4"."""
        return _Parser(text).parse()

    @classmethod
    def from_json_records(cls, text: str) -> "SparsePoly":
        """Parse the JSON form: a list of [alpha, beta, "re", "im"] records."""
        data = json.loads(text)
        if not isinstance(data, list):
            raise ValueError("JSON polynomial must be a list of records")
        terms: Dict[ExponentPair, GaussianRational] = {}
        for rec in data:
            if not isinstance(rec, list) or len(rec) != 4:
                raise ValueError(f"bad record {rec!r}: expected [alpha, beta, re, im]")
            a, b, re, im = rec
            c = GaussianRational(Fraction(str(re)), Fraction(str(im)))
            key = (int(a), int(b))
            terms[key] = terms.get(key, GaussianRational.of(0)) + c
        return cls(terms)

    def to_json_records(self) -> list:
        return [
            [a, b, str(c.re), str(c.im)] for (a, b), c in self._sorted_terms()
        ]


def parse_polynomial(text: str) -> SparsePoly:
    """Parse either the expression grammar or the JSON record form."""
    stripped = text.lstrip()
    if stripped.startswith("["):
        return SparsePoly.from_json_records(text)
    return SparsePoly.parse(text)


# -- recursive-descent parser ------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = list(self._lex(text))
        self.pos = 0

    @staticmethod
    def _lex(text: str):
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                start = i
                while i < n and text[i].isdigit():
                    i += 1
                value = Fraction(int(text[start:i]))
                if i < n and text[i] == "/" and i + 1 < n and text[i + 1].isdigit():
                    i += 1
                    dstart = i
                    while i < n and text[i].isdigit():
                        i += 1
                    value /= int(text[dstart:i])
                if i < n and text[i] in "iI":
                    i += 1
                    yield ("imag", value, start)
                else:
                    yield ("num", value, start)
                continue
            if ch in "iI":
                yield ("imag", Fraction(1), i)
                i += 1
                continue
            if ch in "xX":
                yield ("var", "X", i)
                i += 1
                continue
            if ch in "yY":
                yield ("var", "Y", i)
                i += 1
                continue
            if ch in "+-*^()":
                yield (ch, ch, i)
                i += 1
                continue
            if ch == ".":
                raise PolyParseError("non-Gaussian-rational coefficient", i)
            raise PolyParseError(f"unexpected character {ch!r}", i)
        yield ("eof", None, len(text))

    def _peek(self):
        return self.tokens[self.pos]

    def _next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> SparsePoly:
        result = self._expr()
        tok = self._peek()
        if tok[0] != "eof":
            raise PolyParseError(f"unexpected token {tok[1]!r}", tok[2])
        return result

    def _expr(self) -> SparsePoly:
        sign = 1
        if self._peek()[0] in "+-":
            sign = -1 if self._next()[0] == "-" else 1
        total = self._term().scale(sign)
        while self._peek()[0] in "+-":
            op = self._next()[0]
            term = self._term()
            total = total + term if op == "+" else total - term
        return total

    def _term(self) -> SparsePoly:
        product = self._factor()
        while self._peek()[0] == "*":
            self._next()
            product = product * self._factor()
        return product

    def _factor(self) -> SparsePoly:
        base = self._atom()
        if self._peek()[0] == "^":
            self._next()
            tok = self._peek()
            if tok[0] == "-":
                raise PolyParseError("negative exponent", tok[2])
            if tok[0] != "num" or tok[1].denominator != 1:
                raise PolyParseError("exponent must be a non-negative integer", tok[2])
            self._next()
            base = base ** int(tok[1])
        return base

    def _atom(self) -> SparsePoly:
        tok = self._next()
        kind = tok[0]
        if kind == "(":
            inner = self._expr()
            closing = self._next()
            if closing[0] != ")":
                raise PolyParseError("expected ')'", closing[2])
            return inner
        if kind == "num":
            return SparsePoly.const(tok[1])
        if kind == "imag":
            return SparsePoly.const(GaussianRational(Fraction(0), tok[1]))
        if kind == "var":
            return SparsePoly.monomial(1, 0) if tok[1] == "X" else SparsePoly.monomial(0, 1)
        raise PolyParseError(f"unexpected token {tok[1]!r}", tok[2])
