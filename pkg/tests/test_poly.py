import json

import pytest

from newtonloj.poly import PolyParseError, SparsePoly, parse_polynomial
from newtonloj.rational import NEG_INF, POS_INF

from conftest import random_poly


def test_parse_basic():
    p = parse_polynomial("X^2 + X^4 + X*Y^3")
    assert p.support() == {(2, 0), (4, 0), (1, 3)}
    assert parse_polynomial("x + y") == parse_polynomial("X + Y")


def test_parse_rational_and_gaussian_coefficients():
    p = parse_polynomial("1/2*X + 3i*Y - i")
    assert str(p.coeff(1, 0)) == "1/2"
    assert str(p.coeff(0, 1)) == "3i"
    assert str(p.coeff(0, 0)) == "-i"


def test_parse_parenthesized_powers():
    assert parse_polynomial("(X + Y)^2") == parse_polynomial("X^2 + 2*X*Y + Y^2")


def test_parse_errors_carry_position():
    for bad in ["X^-2", "2X", "X^^2", "X + ", "0.5*X", "Z"]:
        with pytest.raises(PolyParseError):
            parse_polynomial(bad)


def test_json_support_list_form():
    p = parse_polynomial(json.dumps([[2, 0, "1", "0"], [1, 3, "-1/2", "1"]]))
    assert str(p.coeff(1, 3)) == "(-1/2+i)"
    again = parse_polynomial(json.dumps(p.to_json_records()))
    assert again == p


def test_str_parse_round_trip(rng):
    for _ in range(60):
        p = random_poly(rng, max_deg=7, max_support=8, gaussian=True)
        assert parse_polynomial(str(p)) == p


def test_ring_axioms(rng):
    for _ in range(30):
        p = random_poly(rng, 5, 6)
        q = random_poly(rng, 5, 6)
        r = random_poly(rng, 5, 6)
        assert p * (q + r) == p * q + p * r
        assert p * q == q * p
        assert (p - p).is_zero


def test_degree_of_product(rng):
    # deg(pq) = deg p + deg q over an integral domain
    for _ in range(30):
        p = random_poly(rng, 6, 6, gaussian=True)
        q = random_poly(rng, 6, 6, gaussian=True)
        assert (p * q).deg() == p.deg().value + q.deg().value
        assert (p * q).ord() == p.ord().value + q.ord().value


def test_leibniz_rule(rng):
    for _ in range(20):
        p = random_poly(rng, 5, 5)
        q = random_poly(rng, 5, 5)
        for var in ("X", "Y"):
            assert (p * q).diff(var) == p.diff(var) * q + p * q.diff(var)


def test_zero_conventions():
    z = SparsePoly.zero()
    assert z.deg() == NEG_INF and z.ord() == POS_INF
    assert z.deg_x() == NEG_INF and z.ord_y() == POS_INF


def test_transpose_and_restrictions():
    p = parse_polynomial("X^3*Y + 2*Y^2 + 5")
    assert p.transpose() == parse_polynomial("X*Y^3 + 2*X^2 + 5")
    assert p.restrict_y0() == parse_polynomial("5")
    assert p.restrict_x0() == parse_polynomial("2*Y^2 + 5")


def test_divisibility():
    p = parse_polynomial("X^2*Y + X^3")
    assert p.divisible_by("X", 2)
    assert not p.divisible_by("Y", 1)


def test_eval_complex():
    p = parse_polynomial("X^2 + i*Y")
    assert p.eval_complex(2.0, 3.0) == pytest.approx(4 + 3j)
