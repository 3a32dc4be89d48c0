"""Exact polynomial arithmetic, substitution, gradings, parse/render."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from wpchow import (
    InhomogeneousError,
    Monomial,
    Poly,
    WeightedGrading,
    is_homogeneous,
    parse_poly,
    substitute,
    weighted_degree,
)


def _random_poly(rng, variables, max_terms=4, max_exp=3, coeff_bound=6):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        mono = Monomial.of({v: rng.randint(0, max_exp) for v in variables})
        numerator = rng.randint(-coeff_bound, coeff_bound)
        denominator = rng.randint(1, 4)
        terms[mono] = terms.get(mono, 0) + Fraction(numerator, denominator)
    return Poly(terms)


def test_ring_identities():
    x, y = Poly.variable("x"), Poly.variable("y")
    assert (x + y) * (x - y) == x**2 - y**2
    p = 3 * x**2 * y - y + 7
    assert p * Poly.zero() == 0
    assert p * 0 == Poly.zero()
    assert p**0 == 1
    assert -(-p) == p


def test_canonical_term_order_and_render():
    x, y = Poly.variable("x"), Poly.variable("y")
    assert ((x + y) * (x - y)).render() == "x^2 - y^2"
    p = y**2 - x**3 + 3 * x - 2
    assert p.render() == "-x^3 + y^2 + 3*x - 2"
    assert Poly.zero().render() == "0"
    assert (Fraction(1, 2) * x).render() == "1/2*x"


def test_beta6_correction_term_has_three_terms():
    # alpha3^2 - alpha2^3 - alpha2*alpha4, the second short-form coefficient
    p = parse_poly("a3^2 - a2^3 - a2*a4")
    assert len(p) == 3
    grading = WeightedGrading({"a2": 2, "a3": 3, "a4": 4})
    assert weighted_degree(p, grading) == 6


def test_substitute_identity_and_cusp():
    x, y = Poly.variable("x"), Poly.variable("y")
    p = x**3 - 2 * x * y + Fraction(1, 2)
    assert substitute(p, {}) == p
    assert substitute(p, {"x": x, "y": y}) == p
    t = Poly.variable("t")
    cusp = substitute(y**2 - x**3, {"x": t**2, "y": t**3})
    assert cusp.is_zero


def test_substitute_simultaneous_swap():
    x, y = Poly.variable("x"), Poly.variable("y")
    swapped = substitute(x**2 - y, {"x": y, "y": x})
    assert swapped == y**2 - x


def test_weighted_degree_examples():
    t = Poly.variable("t")
    assert weighted_degree(t, WeightedGrading({"t": 1})) == 1
    grading = WeightedGrading({"x": 4, "y": 6})
    with pytest.raises(InhomogeneousError) as excinfo:
        weighted_degree(Poly.variable("x") + Poly.variable("y"), grading)
    assert excinfo.value.degrees == frozenset({4, 6})
    assert not is_homogeneous(Poly.variable("x") + Poly.variable("y"), grading)


def test_weighted_degree_zero_poly_rejected():
    with pytest.raises(ValueError):
        weighted_degree(Poly.zero(), WeightedGrading({"x": 1}))


def test_negative_weights_accepted():
    grading = WeightedGrading({"x": 4, "y": 6, "u": -1})
    mono = Poly.variable("x") * Poly.variable("u") ** 4
    assert weighted_degree(mono, grading) == 0
    with pytest.raises(ValueError):
        WeightedGrading({"x": 0})


def test_grading_context_drives_order_and_validation():
    grading = WeightedGrading({"a2": 2, "a4": 4})
    p = parse_poly("a2^2 + a4", grading)
    assert p.grading == grading
    assert weighted_degree(p) == 4
    with pytest.raises(KeyError):
        parse_poly("a2 + b", grading)


def test_incompatible_gradings_rejected():
    p = Poly.variable("x", WeightedGrading({"x": 2}))
    q = Poly.variable("x", WeightedGrading({"x": 3}))
    with pytest.raises(ValueError):
        p + q


def test_constant_hash_matches_number():
    five = Poly.constant(5)
    assert five == 5
    assert hash(five) == hash(5)
    assert {five: "a"}[5] == "a"
    half = Poly.constant(Fraction(1, 2))
    assert hash(half) == hash(Fraction(1, 2))


def test_commutativity_and_distributivity_random():
    rng = random.Random(7)
    for _ in range(200):
        p = _random_poly(rng, ("x", "y", "z"))
        q = _random_poly(rng, ("x", "y", "z"))
        r = _random_poly(rng, ("x", "y"))
        assert p + q == q + p
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r


def test_substitute_is_ring_homomorphism_random():
    rng = random.Random(11)
    for _ in range(60):
        p = _random_poly(rng, ("x", "y"))
        q = _random_poly(rng, ("x", "y"))
        assignment = {
            "x": _random_poly(rng, ("s", "t"), max_terms=3, max_exp=2),
            "y": _random_poly(rng, ("s", "t"), max_terms=3, max_exp=2),
        }
        assert substitute(p * q, assignment) == substitute(p, assignment) * substitute(
            q, assignment
        )
        assert substitute(p + q, assignment) == substitute(p, assignment) + substitute(
            q, assignment
        )


def test_weighted_degree_additive_on_products():
    rng = random.Random(13)
    grading = WeightedGrading({"x": 2, "y": 3})
    for _ in range(60):
        dp, dq = rng.randint(1, 8), rng.randint(1, 8)
        p = _homogeneous(rng, grading, dp)
        q = _homogeneous(rng, grading, dq)
        if p.is_zero or q.is_zero:
            continue
        assert weighted_degree(p * q, grading) == weighted_degree(p, grading) + weighted_degree(q, grading)


def _homogeneous(rng, grading, degree):
    terms = {}
    for i in range(degree // 2 + 1):
        rest = degree - 2 * i
        if rest % 3 == 0:
            mono = Monomial.of({"x": i, "y": rest // 3})
            if rng.random() < 0.6:
                terms[mono] = rng.randint(-5, 5)
    return Poly(terms)


def test_parse_render_roundtrip_random():
    rng = random.Random(17)
    for _ in range(120):
        p = _random_poly(rng, ("a", "b2", "c_3"))
        assert parse_poly(p.render()) == p


def test_parser_accepts_canonical_syntax():
    assert parse_poly("24*t^3") == 24 * Poly.variable("t") ** 3
    assert parse_poly("(x + y)^2") == (Poly.variable("x") + Poly.variable("y")) ** 2
    assert parse_poly("-x + 1/2") == -Poly.variable("x") + Fraction(1, 2)
    assert parse_poly("3/4*x^2") == Fraction(3, 4) * Poly.variable("x") ** 2
    assert parse_poly("2^3") == 8
    assert parse_poly("0") == 0


@pytest.mark.parametrize(
    "bad",
    ["x/2", "3/0", "x^-1", "x +", "(x", "x y", "4 * * x", "x^y", ""],
)
def test_parser_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse_poly(bad)


def test_monomial_validation():
    with pytest.raises(ValueError):
        Monomial.of({"x": -1})
    with pytest.raises(ValueError):
        Monomial((("x", 0),))
    assert Monomial.of({"x": 0}) == Monomial.ONE
    assert (Monomial.of({"x": 2}) * Monomial.of({"x": 1, "y": 1})).render() == "x^3*y"
