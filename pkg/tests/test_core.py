import numpy as np
import pytest

from core.errors import (
    DegreeZero,
    DimensionMismatch,
    EvaluationAtPole,
    NonFiniteEntry,
    NonMonicLeading,
    ParseError,
    ZeroTopOrderCoefficient,
)
from core.io import dump_instance, instance_to_dict, parse_instance
from core.rational import (
    CANONICAL,
    PER_TERM,
    MatrixPolynomial,
    MonicPolynomial,
    PoleTerm,
    RationalMatrix,
    ScalarRationalFunction,
    evaluate,
    normalize,
    rational_matrix,
    scalar_function,
    to_numerator_polynomial,
    validate,
)
from reporting.tables import fixture

I2 = np.eye(2)
I3 = np.eye(3)


def random_points(rng, count, avoid=(), radius=4.0):
    points = []
    while len(points) < count:
        z = complex(radius * rng.standard_normal(), radius * rng.standard_normal())
        if all(abs(z - a) > 1e-2 for a in avoid):
            points.append(z)
    return points


# =============================================================================
# VALIDATION
# =============================================================================


def test_identity_case_is_valid():
    R = rational_matrix([np.zeros((2, 2)), I2])
    assert R.size == 2
    assert R.degree == 1
    assert R.terms == ()


def test_non_identity_leading_coefficient_rejected():
    with pytest.raises(NonMonicLeading):
        rational_matrix([np.zeros((2, 2)), 2 * I2])


def test_non_monic_allowed_for_diagnostics():
    R = rational_matrix([np.zeros((2, 2)), 2 * I2], require_monic=False)
    assert not R.is_monic


def test_canonical_expansion_of_matrix_example(ex41):
    assert ex41.mode == CANONICAL
    assert [(t.a, t.k) for t in ex41.terms] == [(1, 2), (1, 1), (2, 1)]
    assert np.all(ex41.terms[0].B == I3)
    assert np.all(ex41.terms[1].B == 0)
    assert ex41.pole_orders == {1: 2, 2: 1}


def test_degree_zero_rejected():
    with pytest.raises(DegreeZero):
        rational_matrix([I2])


def test_dimension_mismatch_rejected():
    with pytest.raises(DimensionMismatch):
        rational_matrix([np.zeros((2, 2)), I2], [(1.0, 1, I3)])
    with pytest.raises(DimensionMismatch):
        validate({"size": 2, "poly": [[[0, 0], [0]], [[1, 0], [0, 1]]]})


def test_non_finite_entry_rejected():
    with pytest.raises(NonFiniteEntry):
        rational_matrix([np.array([[np.nan, 0], [0, 0]]), I2])
    with pytest.raises(NonFiniteEntry):
        validate({"size": 1, "poly": [0, 1], "terms": [{"a": float("inf"), "k": 1, "B": 1}]})


def test_zero_top_order_rejected_in_canonical_mode():
    with pytest.raises(ZeroTopOrderCoefficient):
        rational_matrix([np.zeros((2, 2)), I2], [(1.0, 2, np.zeros((2, 2))), (1.0, 1, I2)])


def test_zero_top_order_allowed_in_per_term_mode():
    R = rational_matrix([np.zeros((2, 2)), I2], [(1.0, 2, np.zeros((2, 2))), (1.0, 1, I2)], PER_TERM)
    assert [(t.a, t.k) for t in R.terms] == [(1, 1)]


@pytest.mark.parametrize(
    "raw",
    [
        {"poly": [0, 1]},
        {"size": 1},
        {"size": 0, "poly": [0, 1]},
        {"size": 1, "poly": [0, 1], "mode": "sparse"},
        {"size": 1, "poly": [0, "one"]},
        {"size": 1, "poly": [0, 1], "terms": [{"a": 0, "B": 1}]},
        {"size": 1, "poly": [0, 1], "terms": [{"a": 0, "k": 1.5, "B": 1}]},
        [1, 2, 3],
    ],
)
def test_malformed_data_is_a_parse_error(raw):
    with pytest.raises(ParseError):
        validate(raw)


def test_complex_pairs_and_bare_numbers(p1):
    assert p1.poly_coeffs == pytest.approx([-1, -1 - 1j, -2j, 1])


def test_sign_convention_views(ex42):
    assert ex42.c(0) == -4
    assert ex42.c(1) == -1
    assert ex42.poly.negated_coeff(4)[0, 0] == 0
    # stored added coefficient -1 is the subtracted b = 1
    first = ex42.terms[0]
    assert (first.a, first.k) == (1, 1)
    assert ScalarRationalFunction.b(first) == 1
    with pytest.raises(IndexError):
        ex42.poly.negated_coeff(5)


def test_instances_are_immutable(ex41):
    with pytest.raises(ValueError):
        ex41.poly.coeffs[0][0, 0] = 7
    with pytest.raises(AttributeError):
        ex41.mode = PER_TERM


# =============================================================================
# EVALUATION
# =============================================================================


def test_evaluate_identity_case():
    R = rational_matrix([np.zeros((2, 2)), I2])
    assert np.allclose(evaluate(R, 1.0), I2)


def test_evaluate_scalar_zero():
    r = scalar_function([0, 1], [(0, 1, -1)])
    assert evaluate(r, 1.0)[0, 0] == 0
    assert r(2.0) == pytest.approx(1.5)


def test_evaluate_at_pole_raises():
    r = scalar_function([0, 1], [(0, 1, -1)])
    with pytest.raises(EvaluationAtPole):
        evaluate(r, 0.0)
    with pytest.raises(EvaluationAtPole):
        evaluate(r, 1e-16)


def test_evaluate_uses_all_terms(ex41):
    lam = 0.5 + 0.25j
    expected = lam**3 * I3 + lam * ex41.poly.coeffs[1] + ex41.poly.coeffs[0]
    expected = expected + I3 / (lam - 1) ** 2 + I3 / (lam - 2)
    assert np.allclose(evaluate(ex41, lam), expected, rtol=1e-14)


# =============================================================================
# NORMALIZATION AND MODES
# =============================================================================


def test_normalize_combines_duplicate_terms(ex42):
    out = normalize(ex42)
    assert out.mode == PER_TERM
    pairs = {(t.a, t.k): t.B[0, 0] for t in out.terms}
    assert len(pairs) == len(out.terms) == 4
    assert pairs[(3, 2)] == 3


def test_normalize_drops_zero_terms():
    R = RationalMatrix(MatrixPolynomial((np.zeros((1, 1)), np.ones((1, 1)))), (PoleTerm(1, 1, [[0]]),), PER_TERM)
    assert normalize(R).terms == ()


def test_canonical_expansion_fills_lower_powers():
    B = np.array([[2.0]])
    R = RationalMatrix(MatrixPolynomial((np.zeros((1, 1)), np.ones((1, 1)))), (PoleTerm(1, 2, B),), PER_TERM)
    out = R.to_mode(CANONICAL)
    pairs = {(t.a, t.k): t.B[0, 0] for t in out.terms}
    assert pairs == {(1, 2): 2, (1, 1): 0}


def test_per_term_conversion_keeps_duplicate_summands(ex42, ex42_canonical):
    assert ex42.to_mode(PER_TERM) is ex42
    assert len(ex42.terms) == 5
    back = ex42_canonical.to_mode(PER_TERM)
    assert back.mode == PER_TERM
    assert [(t.a, t.k, t.B[0, 0]) for t in back.terms] == [(1, 2, 2), (1, 1, -1), (3, 2, 3), (3, 1, 3)]


def test_per_term_conversion_drops_canonical_padding():
    B = np.array([[2.0]])
    R = RationalMatrix(MatrixPolynomial((np.zeros((1, 1)), np.ones((1, 1)))), (PoleTerm(1, 2, B),), PER_TERM)
    out = R.to_mode(CANONICAL).to_mode(PER_TERM)
    assert [(t.a, t.k) for t in out.terms] == [(1, 2)]


def test_normalize_preserves_values(random_per_term_scalars, rng):
    for R in random_per_term_scalars[:10]:
        N = normalize(R)
        for lam in random_points(rng, 10, R.poles):
            assert np.allclose(evaluate(N, lam), evaluate(R, lam), rtol=1e-12, atol=1e-9)


def test_normalize_preserves_values_on_published_example(ex42, rng):
    N = normalize(ex42)
    for lam in random_points(rng, 100, ex42.poles):
        assert evaluate(N, lam)[0, 0] == pytest.approx(evaluate(ex42, lam)[0, 0], rel=1e-12, abs=1e-9)


def test_mode_conversion_preserves_values(random_instances, rng):
    for R in random_instances[:20]:
        other = R.to_mode(PER_TERM if R.mode == CANONICAL else CANONICAL)
        back = other.to_mode(R.mode)
        assert back == R
        for lam in random_points(rng, 5, R.poles):
            assert np.allclose(evaluate(other, lam), evaluate(R, lam), rtol=1e-12, atol=1e-12)


# =============================================================================
# NUMERATOR POLYNOMIAL
# =============================================================================


def test_numerator_of_simple_function():
    r = scalar_function([0, 1], [(0, 1, -1)])
    assert to_numerator_polynomial(r).coeffs == pytest.approx([-1, 0, 1])


def test_numerator_without_poles_is_passthrough():
    r = scalar_function([-2.5, 1])
    assert to_numerator_polynomial(r).coeffs == pytest.approx([-2.5, 1])


def test_numerator_of_published_example(ex42):
    p = to_numerator_polynomial(ex42)
    assert p.degree == 9
    # (lam^5 + lam + 4)(lam - 1)^2 (lam - 3)^2 plus the cleared pole terms
    assert p.coeffs == pytest.approx([57, -99, 61, -8, -4, 10, -24, 22, -8, 1])
    assert 1 + np.abs(p.c).max() == pytest.approx(100.0)
    assert np.abs(p.c).sum() == pytest.approx(293.0)


def test_numerator_matches_cleared_denominators(random_scalar_instances, rng):
    for r in random_scalar_instances[:50]:
        p = to_numerator_polynomial(r)
        orders = r.pole_orders
        assert p.degree == r.degree + sum(orders.values())
        for lam in random_points(rng, 5, r.poles):
            cleared = r(lam)
            for a, order in orders.items():
                cleared *= (lam - a) ** order
            scale = 1.0 + np.abs(p.coeffs).sum() * max(1.0, abs(lam)) ** p.degree
            assert abs(p(lam) - cleared) <= 1e-10 * scale


def test_monic_polynomial_requires_unit_leading_coefficient():
    with pytest.raises(NonMonicLeading):
        MonicPolynomial(np.array([1.0, 2.0]))
    with pytest.raises(DegreeZero):
        MonicPolynomial(np.array([1.0]))


def test_monic_polynomial_roots():
    p = MonicPolynomial(np.array([-1.0, 0.0, 1.0]))
    assert sorted(p.roots().real) == pytest.approx([-1.0, 1.0])


# =============================================================================
# JSON
# =============================================================================


@pytest.mark.parametrize("name", ["ex41", "ex42", "p1", "lambda_i"])
def test_json_round_trip_of_fixtures(name):
    R = fixture(name)
    again = parse_instance(dump_instance(R))
    assert again == R
    assert again.name == R.name


def test_json_round_trip_of_random_instances(random_instances):
    for R in random_instances[:25]:
        assert parse_instance(dump_instance(R)) == R


def test_dump_uses_complex_pairs(p1):
    data = instance_to_dict(p1)
    assert data["poly"][1] == [[[-1.0, -1.0]]]
    assert data["mode"] == CANONICAL


def test_invalid_json_is_a_parse_error():
    with pytest.raises(ParseError):
        parse_instance("{not json")
