"""
Block matrix C_R whose spectrum contains the eigenvalues of R(lam).

Layout for terms t_1..t_n (sizes p*k_j) followed by the trailing block B_0
(size p*m):

    [ A_1   0  ...  0   | -F_1 ]
    [  0   A_2 ...  0   | -F_2 ]
    [ ...               |  ... ]
    [ B'_1 B'_2 ... B'_n | B_0  ]

A_j   upper bidiagonal, a_j on the diagonal, identity on the superdiagonal
-F_j  -I in the last block row of the term, first block column of B_0
B'_j  the added coefficient B_j in the last row of B_0, first column of A_j
B_0   block companion with -A_0..-A_{m-1} in its last block row
"""

import io
import logging
from dataclasses import dataclass

import numpy as np
import scipy.io
import scipy.sparse

from config import COMPANION, NUMERICS, SPECTRUM
from core.errors import DimensionOverflow, EvaluationAtPole
from core.rational import RationalMatrix
from linalg.kernels import eigenvalues

logger = logging.getLogger(__name__)


# =============================================================================
# DOMAIN TYPES
# =============================================================================


@dataclass(frozen=True)
class BlockInfo:
    a: complex
    k: int
    offset: int  # first row/column of the block
    coeff_index: int  # position of the generating term in R.terms


@dataclass(frozen=True, eq=False)
class CompanionMatrix:
    matrix: np.ndarray
    blocks: tuple[BlockInfo, ...]
    trailing_offset: int
    p: int
    m: int

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    @property
    def trailing_block(self) -> np.ndarray:
        """B_0."""
        return self.matrix[self.trailing_offset :, self.trailing_offset :]

    def coupling_block(self, block: BlockInfo) -> np.ndarray:
        """The p x p coefficient stored for a term in the last row of B_0."""
        rows = slice(self.dimension - self.p, self.dimension)
        cols = slice(block.offset, block.offset + self.p)
        return self.matrix[rows, cols]


# =============================================================================
# CONSTRUCTION
# =============================================================================


def companion_dimension(R: RationalMatrix) -> int:
    return R.size * (R.degree + sum(t.k for t in R.terms))


def build(R: RationalMatrix, max_dimension: int | None = None) -> CompanionMatrix:
    """Assemble C_R, one Jordan-like block per stored term.

    Canonical instances store one term per power 1..m_a of every pole,
    per-term instances one term per written summand; either way the block
    order is the stored term order.

    Raises:
        DimensionOverflow: the matrix would exceed max_dimension
    """
    max_dimension = COMPANION["max_dimension"] if max_dimension is None else max_dimension
    p, m = R.size, R.degree
    N = companion_dimension(R)
    if N > max_dimension:
        raise DimensionOverflow(f"companion dimension {N} exceeds cap {max_dimension}")

    C = np.zeros((N, N), dtype=np.complex128)
    I = np.eye(p)
    trailing = N - p * m
    last = slice(N - p, N)

    blocks = []
    offset = 0
    for index, term in enumerate(R.terms):
        blocks.append(BlockInfo(term.a, term.k, offset, index))
        for i in range(term.k):
            rows = slice(offset + i * p, offset + (i + 1) * p)
            C[rows, rows] = term.a * I
            if i + 1 < term.k:
                C[rows, offset + (i + 1) * p : offset + (i + 2) * p] = I
        C[offset + (term.k - 1) * p : offset + term.k * p, trailing : trailing + p] = -I
        C[last, offset : offset + p] = term.B
        offset += term.k * p

    for i in range(m - 1):
        C[trailing + i * p : trailing + (i + 1) * p, trailing + (i + 1) * p : trailing + (i + 2) * p] = I
    for i in range(m):
        C[last, trailing + i * p : trailing + (i + 1) * p] = R.poly.negated_coeff(i)

    logger.debug("built companion N=%d with %d pole blocks", N, len(blocks))
    return CompanionMatrix(C, tuple(blocks), trailing, p, m)


def lift_eigenvector(R: RationalMatrix, lam: complex, v: np.ndarray) -> np.ndarray:
    """Eigenvector of C_R for lam built from R(lam) v = 0.

    Pole blocks hold -v/(lam-a)^k, ..., -v/(lam-a); the trailing block holds
    v, lam v, ..., lam^{m-1} v.
    """
    v = np.asarray(v, dtype=np.complex128).ravel()
    parts = []
    for term in R.terms:
        gap = lam - term.a
        if abs(gap) <= NUMERICS["pole_guard"] * (1.0 + abs(term.a)):
            raise EvaluationAtPole(f"lambda={lam} coincides with pole {term.a}")
        parts.extend(-v / gap ** (term.k - i) for i in range(term.k))
    parts.extend(v * lam**i for i in range(R.degree))
    return np.concatenate(parts)


def containment_check(
    R: RationalMatrix, eigs_R, tol: float | None = None
) -> tuple[bool, dict]:
    """Is every eigenvalue of R within tol * (1 + |lam|) of an eigenvalue of C_R?

    Returns:
        (passed, report) where report lists the worst relative distance
        and the unmatched eigenvalues.
    """
    tol = SPECTRUM["containment_tol"] if tol is None else tol
    eigs_C = eigenvalues(build(R).matrix)
    distances = []
    unmatched = []
    for lam in np.asarray(eigs_R, dtype=np.complex128).ravel():
        gap = float(np.abs(eigs_C - lam).min()) / (1.0 + abs(lam)) if eigs_C.size else np.inf
        distances.append(gap)
        if gap > tol:
            unmatched.append(complex(lam))
    report = {
        "checked": len(distances),
        "max_distance": max(distances, default=0.0),
        "unmatched": unmatched,
        "tol": tol,
    }
    if unmatched:
        logger.warning("%d eigenvalues not found in the companion spectrum", len(unmatched))
    return not unmatched, report


# =============================================================================
# OUTPUT
# =============================================================================


def companion_to_dict(cm: CompanionMatrix) -> dict:
    return {
        "p": cm.p,
        "m": cm.m,
        "dimension": cm.dimension,
        "trailing_offset": cm.trailing_offset,
        "blocks": [
            {"a": [b.a.real, b.a.imag], "k": b.k, "offset": b.offset} for b in cm.blocks
        ],
        "matrix": [[[z.real, z.imag] for z in row] for row in cm.matrix.tolist()],
    }


def companion_to_matrix_market(cm: CompanionMatrix) -> str:
    """Matrix Market coordinate text with 17 significant digits."""
    buffer = io.BytesIO()
    scipy.io.mmwrite(
        buffer,
        scipy.sparse.coo_array(cm.matrix),
        comment=f"companion p={cm.p} m={cm.m} blocks={len(cm.blocks)}",
        field="complex",
        precision=17,
    )
    return buffer.getvalue().decode("utf-8")
