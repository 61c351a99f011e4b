from fractions import Fraction

import pytest

from newtonloj.exponents import (
    loj_gradient,
    loj_pair,
    reduction_identities,
    relative_bound,
    six_quantities,
    six_quantities_truncated_min,
)
from newtonloj.poly import parse_polynomial
from newtonloj.rational import NEG_INF

from conftest import random_poly


def _val(r):
    return r.value.value  # finite ExtRational -> Fraction


def test_gradient_nine_point_example():
    r = loj_gradient(parse_polynomial(
        "X^2 + X^4 + X*Y^3 + X*Y^6 + X^7*Y + X^4*Y^8 + X^9*Y^4 + X^9*Y^6 + X^7*Y^8"))
    assert _val(r) == Fraction(13, 3)
    assert r.status == "exact"
    assert r.nondegenerate


def test_pair_six_quantities_example():
    f = parse_polynomial("Y^2 + X^4*Y^4 + X^5*Y^7 + X^3*Y^8")
    g = parse_polynomial("X^2 + X^3 + X^7*Y + X^6*Y^4")
    six = six_quantities(f, g)
    assert [q.value for q in six.as_tuple()] == [3, 5, -8, 2, -4, 5]
    r = loj_pair(f, g)
    assert _val(r) == -8
    assert r.status == "exact"


def test_homogeneous_fermat_family():
    for p in range(2, 7):
        r = loj_gradient(parse_polynomial(f"Y^{p} + X^{p}"))
        assert _val(r) == p - 1
        assert r.status == "exact"


def test_linear_special_cases():
    assert _val(loj_gradient(parse_polynomial("X + Y + X*Y"))) == 1
    assert _val(loj_gradient(parse_polynomial("X + Y"))) == 0
    r = loj_gradient(parse_polynomial("X^2*Y"))
    assert r.value == NEG_INF
    assert r.status == "minus-infinity"


def test_constant_and_zero_inputs_rejected():
    with pytest.raises(ValueError):
        loj_gradient(parse_polynomial("5"))
    with pytest.raises(ValueError):
        loj_pair(parse_polynomial("X"), parse_polynomial("0"))


def test_degenerate_pair_is_upper_bound():
    r = loj_pair(parse_polynomial("1 + X^4 - Y^2"), parse_polynomial("X^2 - Y"))
    assert r.status == "upper-bound"
    assert not r.nondegenerate


def test_relative_bounds_examples():
    f = parse_polynomial("Y^2 + X^4*Y^4 + X^5*Y^7 + X^3*Y^8")
    g = parse_polynomial("X^2 + X^3 + X^7*Y + X^6*Y^4")
    assert _val(relative_bound(f, g, "X")) == -8
    f2 = parse_polynomial("1 + X^4 - Y^2")
    g2 = parse_polynomial("X^2 - Y")
    assert _val(relative_bound(f2, g2, "X")) == 2
    assert _val(relative_bound(f2, g2, "Y")) == 1


def test_witnesses_flag_the_minimum(rng):
    hits = 0
    for _ in range(40):
        p = random_poly(rng, 6, 8)
        q = random_poly(rng, 6, 8)
        r = loj_pair(p, q)
        flagged = [w for w in r.witnesses if w.get("attains_minimum")]
        assert flagged, "some quantity must attain the minimum"
        hits += 1
    assert hits == 40


def test_truncated_minimum_equals_full_minimum(rng):
    for _ in range(60):
        f = random_poly(rng, 7, 9)
        g = random_poly(rng, 7, 9)
        assert six_quantities(f, g).minimum() == six_quantities_truncated_min(f, g)


def test_reduction_identities_nine_point_example():
    rep = reduction_identities(parse_polynomial(
        "X^2 + X^4 + X*Y^3 + X*Y^6 + X^7*Y + X^4*Y^8 + X^9*Y^4 + X^9*Y^6 + X^7*Y^8"))
    assert rep["route"] == "theorem"
    assert rep["all_pass"]
    assert rep["m_r"] == {"num": 16, "den": 3}
    assert rep["m_t"] == {"num": 13, "den": 3}


def test_reduction_identities_special_route():
    rep = reduction_identities(parse_polynomial("X + Y + X*Y"))
    assert rep["route"] == "special-case"
