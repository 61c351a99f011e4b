"""Łojasiewicz exponents at infinity from Newton polygon combinatorics.

The pair exponent is bounded by (and, for nondegenerate pairs, equal to) the
minimum of six exact quantities read off the right and top polygons.  The
gradient exponent of a single polynomial comes from the non-exceptional
intercepts of its own polygons, with a closed-form special case when both
polygons are empty or exceptional-only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .geometry import (
    Segment,
    axis_intercept,
    declivity,
    newton_diagram,
    side_polygon,
    weighted_intercept,
)
from .initial_forms import (
    PairVerdict,
    pair_nondegenerate,
    poly_nondegenerate_at_infinity,
)
from .poly import SparsePoly
from .rational import NEG_INF, POS_INF, ExtRational, ext_min

STATUS_EXACT = "exact"
STATUS_UPPER = "upper-bound"
STATUS_MINUS_INF = "minus-infinity"
STATUS_SPECIAL = "special-case"


@dataclass(frozen=True)
class SixQuantities:
    """The six upper-bound terms for a pair (f, g), in statement order:

    deg of the pair on Y = 0; weighted horizontal intercepts of f's right
    polygon against g and of g's against f; then the three top-side
    analogues.
    """

    deg_x0: ExtRational
    alpha_f_over_g: ExtRational
    alpha_g_over_f: ExtRational
    deg_0y: ExtRational
    beta_f_over_g: ExtRational
    beta_g_over_f: ExtRational

    def as_tuple(self) -> Tuple[ExtRational, ...]:
        return (
            self.deg_x0,
            self.alpha_f_over_g,
            self.alpha_g_over_f,
            self.deg_0y,
            self.beta_f_over_g,
            self.beta_g_over_f,
        )

    def minimum(self) -> ExtRational:
        return ext_min(self.as_tuple())

    def to_json(self) -> list:
        return [q.to_json() for q in self.as_tuple()]


@dataclass
class ExponentResult:
    value: ExtRational
    status: str
    nondegenerate: Optional[bool] = None
    six: Optional[SixQuantities] = None
    witnesses: List[dict] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "exponent": self.value.to_json(),
            "exponent_float": float(self.value),
            "status": self.status,
            "nondegenerate": self.nondegenerate,
            "six_quantities": self.six.to_json() if self.six else None,
            "witnesses": self.witnesses,
            "notes": self.notes,
        }


def _restricted_degree(p: SparsePoly, var: str) -> ExtRational:
    """deg p(X, 0) for var = X, deg p(0, Y) for var = Y; minus infinity if zero."""
    r = p.restrict_y0() if var == "X" else p.restrict_x0()
    return r.deg_x() if var == "X" else r.deg_y()


def _polygon_infimum(p: SparsePoly, other: SparsePoly, side: str, max_declivity=None) -> ExtRational:
    """inf over p's side polygon of the weighted intercept against other's support."""
    poly = side_polygon(newton_diagram(p), side)
    values = []
    for s in poly.segments:
        if max_declivity is not None and declivity(s, side) > max_declivity:
            continue
        values.append(weighted_intercept(s, other.support(), side))
    return ext_min(values)


def six_quantities(f: SparsePoly, g: SparsePoly) -> SixQuantities:
    if f.is_zero or g.is_zero:
        raise ValueError("zero polynomial")
    return SixQuantities(
        deg_x0=max(_restricted_degree(f, "X"), _restricted_degree(g, "X")),
        alpha_f_over_g=_polygon_infimum(f, g, "right"),
        alpha_g_over_f=_polygon_infimum(g, f, "right"),
        deg_0y=max(_restricted_degree(f, "Y"), _restricted_degree(g, "Y")),
        beta_f_over_g=_polygon_infimum(f, g, "top"),
        beta_g_over_f=_polygon_infimum(g, f, "top"),
    )


def six_quantities_truncated_min(f: SparsePoly, g: SparsePoly) -> ExtRational:
    """Minimum of the six quantities with polygons cut to declivity <= 1.

    Provably equal to six_quantities(f, g).minimum(); kept separate so the
    equality itself can be tested.
    """
    one = Fraction(1)
    return ext_min(
        [
            max(_restricted_degree(f, "X"), _restricted_degree(g, "X")),
            _polygon_infimum(f, g, "right", max_declivity=one),
            _polygon_infimum(g, f, "right", max_declivity=one),
            max(_restricted_degree(f, "Y"), _restricted_degree(g, "Y")),
            _polygon_infimum(f, g, "top", max_declivity=one),
            _polygon_infimum(g, f, "top", max_declivity=one),
        ]
    )


def _attainment_witnesses(six: SixQuantities) -> List[dict]:
    names = [
        "deg(X,0)",
        "alpha(f-polygon, g)",
        "alpha(g-polygon, f)",
        "deg(0,Y)",
        "beta(f-polygon, g)",
        "beta(g-polygon, f)",
    ]
    m = six.minimum()
    return [
        {"quantity": name, "value": q.to_json(), "attains_minimum": q == m}
        for name, q in zip(names, six.as_tuple())
    ]


def loj_pair(f: SparsePoly, g: SparsePoly) -> ExponentResult:
    """Exponent of the pair (f, g): the six-quantity minimum, exact when the
    pair is nondegenerate at infinity, otherwise an upper bound."""
    six = six_quantities(f, g)
    verdict = pair_nondegenerate(f, g)
    result = ExponentResult(
        value=six.minimum(),
        status=STATUS_EXACT if verdict.nondegenerate else STATUS_UPPER,
        nondegenerate=verdict.nondegenerate,
        six=six,
        witnesses=_attainment_witnesses(six),
    )
    if not verdict.nondegenerate:
        result.notes.append(f"pair degeneracy: {verdict.reason}")
        if verdict.witness:
            result.notes.append(
                f"witness segments {verdict.witness[0]} and {verdict.witness[1]}"
            )
        result.notes.append("value is an upper bound; use the numeric oracle to estimate")
    return result


def relative_bound(f: SparsePoly, g: SparsePoly, var: str) -> ExponentResult:
    """Exponent of the pair relative to one variable: a three-term minimum."""
    if f.is_zero or g.is_zero:
        raise ValueError("zero polynomial")
    if var == "X":
        terms = [
            max(_restricted_degree(f, "X"), _restricted_degree(g, "X")),
            _polygon_infimum(f, g, "right"),
            _polygon_infimum(g, f, "right"),
        ]
    elif var == "Y":
        terms = [
            max(_restricted_degree(f, "Y"), _restricted_degree(g, "Y")),
            _polygon_infimum(f, g, "top"),
            _polygon_infimum(g, f, "top"),
        ]
    else:
        raise ValueError(f"unknown variable {var!r}")
    verdict = pair_nondegenerate(f, g)
    result = ExponentResult(
        value=ext_min(terms),
        status=STATUS_EXACT if verdict.nondegenerate else STATUS_UPPER,
        nondegenerate=verdict.nondegenerate,
    )
    if not verdict.nondegenerate:
        result.notes.append(f"pair degeneracy: {verdict.reason}")
    return result


def _gradient_candidates(h: SparsePoly) -> List[dict]:
    """Non-exceptional intercepts over both polygons, tagged by attainment."""
    d = newton_diagram(h)
    entries = []
    for side, axis in (("right", "horizontal"), ("top", "vertical")):
        for s in side_polygon(d, side).non_exceptional():
            entries.append(
                {
                    "side": side,
                    "segment": s,
                    "intercept": ExtRational(axis_intercept(s, axis)),
                }
            )
    return entries


def loj_gradient(h: SparsePoly) -> ExponentResult:
    """Exponent of the gradient of h from the polygons of h itself."""
    h = h.strip_constant()
    if h.is_zero or h.is_constant:
        raise ValueError("constant input")
    hx, hy = h.diff("X"), h.diff("Y")

    if hx.is_zero or hy.is_zero:
        other = hy if hx.is_zero else hx
        if other.is_constant and not other.is_zero:
            value = ExtRational(0)
        else:
            # The nonconstant component vanishes somewhere on every large
            # circle of its own variable, so no positive lower bound exists.
            value = NEG_INF
        return ExponentResult(
            value=value,
            status=STATUS_SPECIAL,
            notes=["one gradient component is identically zero"],
        )

    if h.divisible_by("X", 2) or h.divisible_by("Y", 2):
        var = "X" if h.divisible_by("X", 2) else "Y"
        return ExponentResult(
            value=NEG_INF,
            status=STATUS_MINUS_INF,
            notes=[f"{var}^2 divides the polynomial"],
        )

    candidates = _gradient_candidates(h)
    if not candidates:
        # Both polygons empty or exceptional-only forces h = aX + bY + cXY.
        support = h.support()
        if not support <= {(1, 0), (0, 1), (1, 1)}:
            raise AssertionError("empty/exceptional-only polygons outside the aX+bY+cXY form")
        c = h.coeff(1, 1)
        a, b = h.coeff(1, 0), h.coeff(0, 1)
        if not c.is_zero:
            value = ExtRational(1)
        elif not a.is_zero and not b.is_zero:
            value = ExtRational(0)
        else:
            raise AssertionError("unreachable: a or b zero implies a zero gradient component")
        return ExponentResult(
            value=value,
            status=STATUS_SPECIAL,
            notes=["both polygons empty or exceptional-only; closed form a*X + b*Y + c*X*Y"],
        )

    best = ext_min(e["intercept"] for e in candidates)
    nondeg, verdicts = poly_nondegenerate_at_infinity(h)
    witnesses = [
        {
            "side": e["side"],
            "segment": str(e["segment"]),
            "intercept": e["intercept"].to_json(),
            "attains_minimum": e["intercept"] == best,
        }
        for e in candidates
    ]
    result = ExponentResult(
        value=best - ExtRational(1),
        status=STATUS_EXACT if nondeg else STATUS_UPPER,
        nondegenerate=nondeg,
        six=six_quantities(hx, hy),
        witnesses=witnesses,
    )
    if not nondeg:
        failing = [str(v.segment) for v in verdicts if not v.nondegenerate]
        result.notes.append(f"degenerate on segments: {', '.join(failing)}")
    return result


# -- reduction identities -------------------------------------------------------


def reduction_identities(h: SparsePoly) -> dict:
    """Cross-checks tying the gradient formula to the pair formula.

    Evaluates, exactly, the intercept identities on every right segment, the
    first-non-exceptional-segment bounds for the three-term minima of the
    gradient pair, the truncated-polygon equality, the existence criteria for
    non-exceptional segments, and the agreement of the gradient value with
    the six-quantity minimum.  Returns a report of named clauses.
    """
    h = h.strip_constant()
    report: dict = {"hypotheses": {}, "route": None, "clauses": []}
    hx, hy = h.diff("X"), h.diff("Y")
    hyp = {
        "nonconstant": not (h.is_zero or h.is_constant),
        "dx_nonzero": not hx.is_zero,
        "dy_nonzero": not hy.is_zero,
        "not_divisible_x2": not h.divisible_by("X", 2) if not h.is_zero else False,
        "not_divisible_y2": not h.divisible_by("Y", 2) if not h.is_zero else False,
    }
    report["hypotheses"] = hyp
    if not all(hyp.values()):
        report["route"] = "violation"
        report["reason"] = "hypotheses of the gradient theorem not met"
        return report

    d = newton_diagram(h)
    right = side_polygon(d, "right")
    top = side_polygon(d, "top")

    def clause(name: str, ok: bool, detail: str = ""):
        report["clauses"].append({"name": name, "pass": bool(ok), "detail": detail})

    # Intercept identities on every right segment of h.
    for s in right.segments:
        lhs1 = weighted_intercept(s, hx.support(), "right")
        rhs1 = ExtRational(axis_intercept(s, "horizontal") - 1)
        lhs2 = weighted_intercept(s, hy.support(), "right")
        rhs2 = ExtRational(axis_intercept(s, "horizontal") - declivity(s, "right"))
        clause(
            "intercept-shift",
            lhs1 == rhs1 and lhs2 == rhs2,
            f"segment {s}: {lhs1}=={rhs1}, {lhs2}=={rhs2}",
        )

    # Existence criteria for non-exceptional segments.
    clause(
        "right-non-exceptional-iff-degY>=2",
        bool(right.non_exceptional()) == (h.deg_y() >= ExtRational(2)),
        f"deg_Y = {h.deg_y()}",
    )
    clause(
        "top-non-exceptional-iff-degX>=2",
        bool(top.non_exceptional()) == (h.deg_x() >= ExtRational(2)),
        f"deg_X = {h.deg_x()}",
    )

    if not right.non_exceptional() and not top.non_exceptional():
        report["route"] = "special-case"
        return report
    report["route"] = "theorem"

    six = six_quantities(hx, hy)
    m_r = ext_min([six.deg_x0, six.alpha_f_over_g, six.alpha_g_over_f])
    m_t = ext_min([six.deg_0y, six.beta_f_over_g, six.beta_g_over_f])
    report["m_r"] = m_r.to_json()
    report["m_t"] = m_t.to_json()

    non_exc_right = right.non_exceptional()
    if non_exc_right:
        F = non_exc_right[0]
        aF = ExtRational(axis_intercept(F, "horizontal"))
        lower = ext_min([aF - ExtRational(1), aF - ExtRational(declivity(F, "right"))])
        clause(
            "right-three-term-bounds",
            aF - ExtRational(1) >= m_r >= lower,
            f"alpha(F)={aF}, m_r={m_r}",
        )
    non_exc_top = top.non_exceptional()
    if non_exc_top:
        G = non_exc_top[0]
        bG = ExtRational(axis_intercept(G, "vertical"))
        lower = ext_min([bG - ExtRational(1), bG - ExtRational(declivity(G, "top"))])
        clause(
            "top-three-term-bounds",
            bG - ExtRational(1) >= m_t >= lower,
            f"beta(G)={bG}, m_t={m_t}",
        )

    clause(
        "truncated-minimum-equality",
        six.minimum() == six_quantities_truncated_min(hx, hy),
        f"full={six.minimum()}",
    )

    grad = loj_gradient(h)
    clause(
        "gradient-equals-pair-minimum",
        grad.value == ext_min([m_r, m_t]),
        f"gradient={grad.value}, pair={ext_min([m_r, m_t])}",
    )
    report["all_pass"] = all(c["pass"] for c in report["clauses"])
    return report
