"""Numeric cross-check of the symbolic exponents via branch continuation.

Every branch of h = 0 at infinity has a leading term c*X^theta whose degree
theta is a polygon declivity and whose coefficient c is a nonzero root of a
univariate polynomial read off the segment.  The oracle samples such branches
at large radii, substitutes them into the partner polynomial, and estimates
the substitution degree as a log-log slope.  It corroborates the symbolic
results; it never overrides them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import mpmath
import numpy as np

from .geometry import Segment, declivity, newton_diagram, side_polygon
from .poly import SparsePoly
from .rational import GaussianRational
from .univariate import UPoly, root_multiplicities


class OracleError(RuntimeError):
    """Numeric verification failed (ambiguous matching, no finite data, ...)."""


@dataclass(frozen=True)
class OracleConfig:
    radii: Tuple[float, ...] = (1e3, 1e4, 1e5, 1e6)
    angles: int = 8
    tolerance: float = 0.05

    def __post_init__(self):
        if len(self.radii) < 2 or sorted(self.radii) != list(self.radii):
            raise ValueError("radii must be increasing, at least two")
        if self.angles < 1:
            raise ValueError("need at least one angle per radius")


@dataclass(frozen=True)
class Branch:
    theta: Fraction
    leading_coeff: complex
    multiplicity: int
    segment: Segment
    solve_in: str  # "over-X": y ~ c x^theta; "over-Y": x ~ c y^theta

    def to_json(self) -> dict:
        return {
            "theta": {"num": self.theta.numerator, "den": self.theta.denominator},
            "leading_coeff": [self.leading_coeff.real, self.leading_coeff.imag],
            "multiplicity": self.multiplicity,
            "segment": str(self.segment),
            "solve_in": self.solve_in,
        }


@dataclass(frozen=True)
class SlopeEstimate:
    slope: float
    residual: float
    radii: Tuple[float, ...]
    samples_per_radius: int


def _segment_coeff_poly(h: SparsePoly, s: Segment) -> UPoly:
    """The polynomial whose nonzero roots are the leading coefficients of the
    branches attached to s (right side): sum of h's segment terms as c^beta,
    stripped of its lowest power."""
    on_seg = set(s.lattice_points())
    coeffs: Dict[int, GaussianRational] = {}
    for (a, b), c in h.terms():
        if (a, b) in on_seg:
            coeffs[b] = coeffs.get(b, GaussianRational.of(0)) + c
    p = UPoly.from_dict(coeffs)
    return p.strip_powers_of_t()


def branch_leading_terms(h: SparsePoly, side: str) -> List[Branch]:
    """Leading terms of all Laurent-Puiseux solutions at infinity.

    Right side: solutions y(x); per segment there are |S2| of them counted
    with multiplicity, of degree equal to the segment's declivity.  The top
    side is the same computation on the transposed polynomial.
    """
    if h.is_zero:
        raise ValueError("zero polynomial")
    if side == "top":
        out = []
        for br in branch_leading_terms(h.transpose(), "right"):
            seg = Segment(
                (br.segment.lower[1], br.segment.lower[0]),
                (br.segment.upper[1], br.segment.upper[0]),
            )
            out.append(Branch(br.theta, br.leading_coeff, br.multiplicity, seg, "over-Y"))
        return out
    if side != "right":
        raise ValueError(f"unknown side {side!r}")

    branches: List[Branch] = []
    d = newton_diagram(h)
    for s in side_polygon(d, "right").segments:
        theta = declivity(s, "right")
        phi = _segment_coeff_poly(h, s)
        total = 0
        for radical, mult in root_multiplicities(phi):
            coeffs = [complex(c) for c in reversed(radical.coeffs)]
            for root in np.roots(coeffs):
                branches.append(Branch(theta, complex(root), mult, s, "over-X"))
                total += mult
        if total != s.s2:
            raise OracleError(
                f"segment {s}: found {total} branches, expected {s.s2}"
            )
    return branches


def roots_at_radius(h: SparsePoly, x: complex, invert: bool = False) -> List[complex]:
    """All deg_Y h roots of h(x, .), leading coefficient permitting.

    With invert=True the nonzero roots are computed as reciprocals of the
    roots of the reversed polynomial.  That keeps relative accuracy for the
    roots shrinking towards zero (negative-degree branches), which the direct
    companion-matrix solve loses; zero roots are dropped.
    """
    rows = h.coeffs_in_y()
    if len(rows) < 2:
        raise ValueError("polynomial has no Y dependence")
    coeffs = [sum(complex(c) * x**a for a, c in row.items()) for row in rows]
    # Vanishing here means cancellation inside the leading row, not smallness
    # against the other rows; np.roots copes with badly scaled rows on its own.
    lead_scale = sum(abs(complex(c)) * abs(x) ** a for a, c in rows[-1].items())
    if abs(coeffs[-1]) <= 1e-12 * lead_scale:
        raise OracleError("leading Y coefficient vanishes at the sample point")
    if invert:
        lowest = next(
            k
            for k, row in enumerate(rows)
            if row
            and abs(coeffs[k])
            > 1e-12 * sum(abs(complex(c)) * abs(x) ** a for a, c in row.items())
        )
        rev = coeffs[lowest:]
        roots = np.roots(rev)
        roots = roots[roots != 0]
        out = [1 / complex(r) for r in roots]
    else:
        roots = np.roots(list(reversed(coeffs)))
        out = [complex(r) for r in roots]
    if not all(math.isfinite(abs(r)) for r in out):
        raise OracleError("non-finite roots at the sample point")
    return out


# -- high-precision fallback ---------------------------------------------------


def _mp_eval(p: SparsePoly, x, y):
    total = mpmath.mpc(0)
    for (a, b), c in p.terms():
        total += mpmath.mpc(float(c.re), float(c.im)) * x**a * y**b
    return total


def _refine_root(h: SparsePoly, hy: SparsePoly, x, y0, multiplicity: int, steps: int = 60):
    """Multiplicity-aware Newton refinement of a root of h(x, .) in mpmath."""
    y = mpmath.mpc(y0)
    m = multiplicity
    for _ in range(steps):
        dv = _mp_eval(hy, x, y)
        if dv == 0:
            break
        step = m * _mp_eval(h, x, y) / dv
        y -= step
        if abs(step) <= mpmath.mpf(10) ** (-mpmath.mp.dps + 6) * max(abs(y), 1):
            break
    return y


def _log_abs_g(g: SparsePoly, h: SparsePoly, x: complex, y: complex, multiplicity: int) -> float:
    """log|g(x, y)| with y a root of h(x, .); exact-cancellation aware.

    When the double-precision value of g is small against the term magnitudes
    the root is re-polished and g re-evaluated in high precision; if the value
    stays below the noise floor of that precision the substitution is treated
    as identically zero.
    """
    terms_scale = sum(
        abs(complex(c)) * abs(x) ** a * abs(y) ** b for (a, b), c in g.terms()
    )
    value = g.eval_complex(x, y)
    if terms_scale == 0:
        return float("-inf")
    if abs(value) > 1e-9 * terms_scale and math.isfinite(abs(value)):
        return math.log(abs(value))
    # Catastrophic cancellation: redo in high precision.
    hdeg = int(float(h.deg().value)) if h.deg().is_finite else 0
    gdeg = int(float(g.deg().value)) if g.deg().is_finite else 0
    dps = 40 + int(math.log10(max(abs(x), 2.0))) * (gdeg + hdeg + 4)
    with mpmath.workdps(dps):
        hy = h.diff("Y")
        yr = _refine_root(h, hy, mpmath.mpc(x), y, multiplicity)
        gv = _mp_eval(g, mpmath.mpc(x), yr)
        floor = mpmath.mpf(10) ** (-(dps - 12)) * max(terms_scale, 1.0)
        if abs(gv) <= floor:
            return float("-inf")
        return float(mpmath.log(abs(gv)))


def _match_cluster(roots: Sequence[complex], target: complex, multiplicity: int) -> List[int]:
    """Indices of the multiplicity nearest roots to the target, with an
    ambiguity guard against an equally-near outsider."""
    order = sorted(range(len(roots)), key=lambda i: abs(roots[i] - target))
    m = multiplicity
    if len(order) < m:
        raise OracleError("fewer roots than the branch multiplicity")
    if len(order) > m:
        d_in = abs(roots[order[m - 1]] - target)
        d_out = abs(roots[order[m]] - target)
        if d_out < 2.0 * d_in:
            raise OracleError(
                "branch matching ambiguity: two roots equally near the leading term"
            )
    return order[:m]


def _principal_power(x: complex, theta: Fraction) -> complex:
    return complex(mpmath.power(mpmath.mpc(x), float(theta)))


def substitution_degree(
    g: SparsePoly, h: SparsePoly, branch: Branch, cfg: OracleConfig = OracleConfig()
) -> SlopeEstimate:
    """Estimate deg g along a branch of h by a log-log slope at large radii.

    over-Y branches are handled by transposing both polynomials, which maps
    them to over-X branches of the transpose.
    """
    if branch.solve_in == "over-Y":
        seg = Segment(
            (branch.segment.lower[1], branch.segment.lower[0]),
            (branch.segment.upper[1], branch.segment.upper[0]),
        )
        flipped = Branch(branch.theta, branch.leading_coeff, branch.multiplicity, seg, "over-X")
        return substitution_degree(g.transpose(), h.transpose(), flipped, cfg)

    theta = branch.theta
    c0 = branch.leading_coeff
    logs: List[float] = []
    logr: List[float] = []
    for r in cfg.radii:
        sample_logs: List[float] = []
        for j in range(cfg.angles):
            # Fixed irrational-ish offset keeps samples off the real axis and
            # off any symmetry axes of the coefficients.
            ang = 2 * math.pi * (j + 0.318) / cfg.angles
            x = r * complex(math.cos(ang), math.sin(ang))
            roots = roots_at_radius(h, x, invert=theta < 0)
            xt = _principal_power(x, theta)
            scaled = [y / xt for y in roots]
            cluster = _match_cluster(scaled, c0, branch.multiplicity)
            # The infimum over the branch cluster: the member minimizing |g|.
            vals = [
                _log_abs_g(g, h, x, roots[i], branch.multiplicity) for i in cluster
            ]
            sample_logs.append(min(vals))
        if any(v == float("-inf") for v in sample_logs):
            return SlopeEstimate(float("-inf"), 0.0, cfg.radii, cfg.angles)
        logs.append(sum(sample_logs) / len(sample_logs))
        logr.append(math.log(r))
    coeffs, res = _fit_line(logr, logs)
    return SlopeEstimate(coeffs, res, cfg.radii, cfg.angles)


def _fit_line(xs: Sequence[float], ys: Sequence[float]) -> Tuple[float, float]:
    a = np.vstack([xs, np.ones(len(xs))]).T
    sol, residuals, _, _ = np.linalg.lstsq(a, np.array(ys), rcond=None)
    res = float(residuals[0]) if len(residuals) else 0.0
    return float(sol[0]), res


# -- exponent estimates ----------------------------------------------------------


def _restricted_deg_float(f: SparsePoly, g: SparsePoly, var: str) -> float:
    if var == "X":
        d = max(f.restrict_y0().deg_x(), g.restrict_y0().deg_x())
    else:
        d = max(f.restrict_x0().deg_y(), g.restrict_x0().deg_y())
    return float(d)


def _branch_terms(
    f: SparsePoly, g: SparsePoly, side: str, cfg: OracleConfig, theta_cap: Optional[Fraction]
) -> List[dict]:
    """Substitution degrees of g along f's branches on one side.

    The degree filter uses the exact declivity, never the float estimate.
    """
    out = []
    deg_var = f.deg_y() if side == "right" else f.deg_x()
    if not deg_var.is_finite or deg_var.value < 1:
        return out
    for br in branch_leading_terms(f, side):
        if theta_cap is not None and br.theta > theta_cap:
            continue
        est = substitution_degree(g, f, br, cfg)
        out.append(
            {"branch": br.to_json(), "slope": est.slope, "residual": est.residual}
        )
    return out


def estimate_loj(
    f: SparsePoly, g: SparsePoly, cfg: OracleConfig = OracleConfig()
) -> Tuple[float, dict]:
    """Numeric estimate of the pair exponent: minimum of the two restricted
    degrees and the substitution degrees over branches of degree <= 1."""
    if f.is_zero or g.is_zero:
        raise ValueError("zero polynomial")
    cap = Fraction(1)
    breakdown: dict = {
        "deg_x0": _restricted_deg_float(f, g, "X"),
        "deg_0y": _restricted_deg_float(f, g, "Y"),
        "branch_terms": [],
    }
    terms = [breakdown["deg_x0"], breakdown["deg_0y"]]
    for src, dst, side in ((f, g, "right"), (g, f, "right"), (f, g, "top"), (g, f, "top")):
        for entry in _branch_terms(src, dst, side, cfg, cap):
            entry["into"] = "g" if dst is g else "f"
            breakdown["branch_terms"].append(entry)
            terms.append(entry["slope"])
    estimate = min(terms)
    breakdown["estimate"] = estimate
    return estimate, breakdown


def estimate_relative(
    f: SparsePoly, g: SparsePoly, var: str, cfg: OracleConfig = OracleConfig()
) -> Tuple[float, dict]:
    """Numeric estimate of the exponent relative to one variable: no degree
    filter, only the branches solved in that variable."""
    if f.is_zero or g.is_zero:
        raise ValueError("zero polynomial")
    side = "right" if var == "X" else "top"
    breakdown: dict = {
        "deg_restricted": _restricted_deg_float(f, g, var),
        "branch_terms": [],
    }
    terms = [breakdown["deg_restricted"]]
    for src, dst in ((f, g), (g, f)):
        for entry in _branch_terms(src, dst, side, cfg, None):
            entry["into"] = "g" if dst is g else "f"
            breakdown["branch_terms"].append(entry)
            terms.append(entry["slope"])
    estimate = min(terms)
    breakdown["estimate"] = estimate
    return estimate, breakdown
