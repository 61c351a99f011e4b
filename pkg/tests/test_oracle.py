from fractions import Fraction

import pytest

from newtonloj.geometry import newton_diagram, side_polygon
from newtonloj.oracle import (
    OracleConfig,
    branch_leading_terms,
    estimate_loj,
    estimate_relative,
    roots_at_radius,
    substitution_degree,
)
from newtonloj.poly import parse_polynomial

from conftest import random_poly

CFG = OracleConfig()


def test_config_validation():
    with pytest.raises(ValueError):
        OracleConfig(radii=(10.0,))
    with pytest.raises(ValueError):
        OracleConfig(angles=0)


def test_branch_counts_match_segment_heights(rng):
    # each right segment of height s2 carries s2 branches with multiplicity
    for _ in range(40):
        h = random_poly(rng, 6, 8)
        d = newton_diagram(h)
        right = side_polygon(d, "right")
        branches = branch_leading_terms(h, "right")
        expected = sum(s.s2 for s in right.segments)
        assert sum(b.multiplicity for b in branches) == expected
        for b in branches:
            assert b.leading_coeff != 0
            assert abs(b.theta) == Fraction(abs(b.segment.s1), b.segment.s2)


def test_roots_track_branches():
    # y^2 = x^3 has two branches y ~ +-x^(3/2)
    h = parse_polynomial("Y^2 - X^3")
    roots = roots_at_radius(h, 10**4 + 0.7j * 0)
    assert len(roots) == 2
    assert sorted(abs(r) for r in roots) == pytest.approx([1e6, 1e6], rel=1e-6)


def test_substitution_degree_on_known_curve():
    # along the branch of h = Y - X^2, g = X^3 grows like |x|^3
    h = parse_polynomial("Y - X^2")
    g = parse_polynomial("X^3")
    (branch,) = branch_leading_terms(h, "right")
    est = substitution_degree(g, h, branch, CFG)
    assert est.slope == pytest.approx(3.0, abs=0.01)


def test_estimate_matches_exact_on_gradient_example():
    h = parse_polynomial(
        "X^2 + X^4 + X*Y^3 + X*Y^6 + X^7*Y + X^4*Y^8 + X^9*Y^4 + X^9*Y^6 + X^7*Y^8")
    est, _ = estimate_loj(h.diff("X"), h.diff("Y"), CFG)
    assert est == pytest.approx(13 / 3, abs=0.05)


def test_estimate_matches_exact_on_pair_example():
    f = parse_polynomial("Y^2 + X^4*Y^4 + X^5*Y^7 + X^3*Y^8")
    g = parse_polynomial("X^2 + X^3 + X^7*Y + X^6*Y^4")
    est, _ = estimate_loj(f, g, CFG)
    assert est == pytest.approx(-8.0, abs=0.05)


def test_sharp_inequality_example():
    f = parse_polynomial("1 + X^4 - Y^2")
    g = parse_polynomial("X^2 - Y")
    est, _ = estimate_loj(f, g, CFG)
    assert est == pytest.approx(-1.0, abs=0.05)
    est_x, _ = estimate_relative(f, g, "X", CFG)
    assert est_x == pytest.approx(-2.0, abs=0.05)
    est_y, _ = estimate_relative(f, g, "Y", CFG)
    assert est_y == pytest.approx(-1.0, abs=0.05)


def test_negative_infinity_detection():
    # grad(X^2 Y) vanishes identically along Y = 0 at infinity
    h = parse_polynomial("X^2*Y")
    est, _ = estimate_loj(h.diff("X"), h.diff("Y"), CFG)
    assert est == float("-inf")
