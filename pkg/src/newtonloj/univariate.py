"""Exact univariate polynomial arithmetic over the Gaussian rationals.

Used for the nondegeneracy certificates: the initial form of a polynomial
along a segment reduces to a univariate polynomial, and degeneracy is a
question about gcds of such reductions.  Everything here is exact, so the
certificates carry no numerical error.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from .rational import GaussianRational, QI_ZERO


class UPoly:
    """Dense univariate polynomial over GaussianRational, ascending coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[GaussianRational] = ()):
        cs = [GaussianRational.of(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_dict(cls, d: Dict[int, GaussianRational]) -> "UPoly":
        if not d:
            return cls()
        top = max(d)
        cs = [QI_ZERO] * (top + 1)
        for k, c in d.items():
            cs[k] = cs[k] + GaussianRational.of(c)
        return cls(cs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree, with the usual convention -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def ord(self) -> int:
        """Index of the lowest nonzero coefficient; -1 for zero."""
        for k, c in enumerate(self.coeffs):
            if not c.is_zero:
                return k
        return -1

    def leading(self) -> GaussianRational:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, UPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "UPoly") -> "UPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly(
            [
                (self.coeffs[k] if k < len(self.coeffs) else QI_ZERO)
                + (other.coeffs[k] if k < len(other.coeffs) else QI_ZERO)
                for k in range(n)
            ]
        )

    def __neg__(self) -> "UPoly":
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UPoly") -> "UPoly":
        return self + (-other)

    def __mul__(self, other: "UPoly") -> "UPoly":
        if self.is_zero or other.is_zero:
            return UPoly()
        out = [QI_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UPoly(out)

    def scale(self, c: GaussianRational) -> "UPoly":
        return UPoly([k * c for k in self.coeffs])

    def monic(self) -> "UPoly":
        if self.is_zero:
            return self
        lead = self.leading()
        return UPoly([c / lead for c in self.coeffs])

    def divmod(self, other: "UPoly") -> Tuple["UPoly", "UPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UPoly(), self
        quot = [QI_ZERO] * (dq + 1)
        lead = other.leading()
        for k in range(dq, -1, -1):
            c = rem[k + other.degree()]
            if c.is_zero:
                continue
            q = c / lead
            quot[k] = q
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - q * b
        return UPoly(quot), UPoly(rem)

    def derivative(self) -> "UPoly":
        return UPoly([c * k for k, c in enumerate(self.coeffs)][1:])

    def strip_powers_of_t(self) -> "UPoly":
        """Divide out the highest power of t, so the result has nonzero constant term."""
        o = self.ord()
        if o <= 0:
            return self
        return UPoly(self.coeffs[o:])

    def eval(self, t: complex) -> complex:
        total = 0j
        for c in reversed(self.coeffs):
            total = total * t + complex(c)
        return total

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            mono = "1" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if k == 0:
                parts.append(str(c))
            elif str(c) == "1":
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"UPoly({self})"


def gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0."""
    while not b.is_zero:
        _, r = a.divmod(b)
        a, b = b, r
    return a.monic()


def squarefree_radical(p: UPoly) -> UPoly:
    """p / gcd(p, p'): same roots, all simple.  Exact over a field of char 0."""
    if p.degree() <= 0:
        return p.monic() if not p.is_zero else p
    g = gcd(p, p.derivative())
    q, r = p.divmod(g)
    assert r.is_zero
    return q.monic()


def root_multiplicities(p: UPoly) -> List[Tuple[UPoly, int]]:
    """Squarefree decomposition: [(radical factor, multiplicity), ...].

    Repeated gcd deflation: the factor paired with m collects exactly the
    roots of p whose multiplicity is m.  Constant content is dropped.
    """
    out: List[Tuple[UPoly, int]] = []
    m = 1
    while p.degree() >= 1:
        g = gcd(p, p.derivative())
        radical, r = p.divmod(g)
        assert r.is_zero
        # Roots of radical not shared with g have multiplicity exactly m.
        nxt_g = gcd(radical, g)
        exact, r2 = radical.divmod(nxt_g)
        assert r2.is_zero
        if exact.degree() >= 1:
            out.append((exact.monic(), m))
        p = g
        m += 1
    return out


def is_squarefree(p: UPoly) -> bool:
    return p.degree() <= 0 or gcd(p, p.derivative()).degree() == 0
