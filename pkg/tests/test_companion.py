import io

import numpy as np
import pytest
import scipy.io

from companion.companion import (
    build,
    companion_dimension,
    companion_to_dict,
    companion_to_matrix_market,
    containment_check,
    lift_eigenvector,
)
from core.errors import DimensionOverflow
from core.rational import CANONICAL, evaluate, rational_matrix, scalar_function
from linalg.kernels import norm
from spectrum.spectrum import eigenvalues_rational, zeros_scalar_oracle


def closed_form_norms(r):
    """(||C_r||_inf, ||C_r||_1) read off the block layout of a scalar instance."""
    c = np.abs(r.poly_coeffs[:-1])
    m = c.size
    a = [abs(t.a) for t in r.terms]
    b = [abs(t.B[0, 0]) for t in r.terms]

    rows = [1.0 + x for x in a] + ([1.0] if m >= 2 else []) + [sum(b) + c.sum()]
    columns = [x + y for x, y in zip(a, b)]
    columns += [1.0 + abs(t.a) for t in r.terms if t.k >= 2]
    columns += [len(r.terms) + c[0]] + [1.0 + x for x in c[1:]]
    return max(rows), max(columns)


# =============================================================================
# LAYOUT
# =============================================================================


def test_identity_case_gives_zero_matrix(lambda_i):
    cm = build(lambda_i)
    assert cm.dimension == 2
    assert cm.blocks == ()
    assert not np.any(cm.matrix)


def test_matrix_example_dimension_and_blocks(ex41):
    cm = build(ex41)
    assert cm.dimension == 21
    assert [(b.a, b.k, b.offset) for b in cm.blocks] == [(1, 2, 0), (1, 1, 6), (2, 1, 9)]
    assert cm.trailing_offset == 12
    assert np.allclose(cm.coupling_block(cm.blocks[0]), np.eye(3))
    assert not np.any(cm.coupling_block(cm.blocks[1]))


def test_scalar_example_layout(ex42):
    cm = build(ex42)
    C = cm.matrix
    assert cm.dimension == 13
    assert cm.trailing_offset == 8
    # first term: 1/(lam-1) with stored coefficient -1
    assert C[0, 0] == 1
    assert C[0, 8] == -1
    assert C[12, 0] == -1
    # second term: Jordan-like 2x2 block at offset 1
    assert C[1, 1] == C[2, 2] == 1
    assert C[1, 2] == 1
    assert C[1, 8] == 0
    assert C[2, 8] == -1
    assert C[12, 1] == 2
    # trailing block: shift plus negated polynomial coefficients
    assert all(C[8 + i, 9 + i] == 1 for i in range(4))
    assert list(C[12, 8:13]) == [-4, -1, 0, 0, 0]


def test_dimension_formula(random_instances):
    for R in random_instances:
        cm = build(R)
        assert cm.dimension == companion_dimension(R) == R.size * (R.degree + sum(t.k for t in R.terms))
        assert cm.matrix.shape == (cm.dimension, cm.dimension)


def test_dimension_cap(ex41):
    with pytest.raises(DimensionOverflow):
        build(ex41, max_dimension=20)


# =============================================================================
# NORMS OF THE SCALAR BLOCK MATRIX
# =============================================================================


def test_norms_match_block_layout(random_scalar_instances):
    for r in random_scalar_instances:
        inf, one = closed_form_norms(r)
        C = build(r).matrix
        assert norm(C, "inf") == pytest.approx(inf, rel=1e-12)
        assert norm(C, "one") == pytest.approx(one, rel=1e-12)


@pytest.mark.parametrize("order", [1, 2])
def test_norms_for_uniform_pole_orders(order):
    rng = np.random.default_rng(order)
    for _ in range(50):
        m = int(rng.integers(1, 4))
        coeffs = list(rng.uniform(-3, 3, m)) + [1.0]
        terms = []
        for a in rng.uniform(-2, 2, int(rng.integers(1, 3))):
            terms += [(a, k, rng.uniform(0.5, 2.0)) for k in range(order, 0, -1)]
        r = scalar_function(coeffs, terms, CANONICAL)
        inf, one = closed_form_norms(r)
        assert norm(build(r).matrix, "inf") == pytest.approx(inf, rel=1e-12)
        assert norm(build(r).matrix, "one") == pytest.approx(one, rel=1e-12)


# =============================================================================
# SPECTRAL CONTAINMENT
# =============================================================================


def test_lifted_eigenvectors(random_instances):
    for R in random_instances[:40]:
        cm = build(R)
        bound = norm(cm.matrix)
        for lam in eigenvalues_rational(R).eigenvalues:
            _, _, vh = np.linalg.svd(evaluate(R, lam))
            v = vh[-1].conj()
            w = lift_eigenvector(R, lam, v)
            residual = np.linalg.norm(cm.matrix @ w - lam * w)
            assert residual <= 1e-6 * bound * np.linalg.norm(w)


def test_matrix_eigenvalues_are_companion_eigenvalues(random_instances):
    for R in random_instances[:100]:
        passed, report = containment_check(R, eigenvalues_rational(R).eigenvalues)
        assert passed, (R.name, report)


def test_numerator_zeros_are_companion_eigenvalues(random_scalar_instances):
    for r in random_scalar_instances[:30]:
        passed, report = containment_check(r, zeros_scalar_oracle(r))
        assert passed, report


def test_containment_reports_strangers(ex42):
    passed, report = containment_check(ex42, [100.0])
    assert not passed
    assert report["unmatched"] == [100.0]
    assert report["checked"] == 1


def test_block_diagonal_matrix_matches_its_scalar_entries():
    r1 = scalar_function([-1, 0, 1], [(2, 1, 1)])
    r2 = scalar_function([0, 3, 1], [(2, 1, 2)])
    R = rational_matrix(
        [np.diag([-1.0, 0.0]), np.diag([0.0, 3.0]), np.eye(2)],
        [(2, 1, np.diag([1.0, 2.0]))],
    )
    zeros = np.concatenate([zeros_scalar_oracle(r1), zeros_scalar_oracle(r2)])
    passed, report = containment_check(R, zeros)
    assert passed, report
    assert eigenvalues_rational(R).max_modulus == pytest.approx(np.abs(zeros).max(), rel=1e-8)


# =============================================================================
# OUTPUT
# =============================================================================


def test_dict_output(ex42):
    data = companion_to_dict(build(ex42))
    assert data["dimension"] == 13
    assert len(data["blocks"]) == 5
    assert data["blocks"][1] == {"a": [1.0, 0.0], "k": 2, "offset": 1}
    assert data["matrix"][12][0] == [-1.0, 0.0]


def test_matrix_market_output(ex41):
    cm = build(ex41)
    text = companion_to_matrix_market(cm)
    assert text.startswith("%%MatrixMarket matrix coordinate complex general")
    back = scipy.io.mmread(io.BytesIO(text.encode())).toarray()
    assert np.array_equal(back, cm.matrix)
