"""
Dense complex matrix kernels: induced norms, singular values, eigenvalues
and the numerical radius w(A) = max_theta lambda_max(Re(e^{i theta} A)).
"""

import logging
from typing import Literal

import numpy as np
import scipy.linalg

from config import NUMERICS
from core.errors import NoConvergence

logger = logging.getLogger(__name__)

NormKind = Literal["one", "inf", "spectral"]
NORMS: tuple[str, ...] = ("spectral", "one", "inf")

GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0


def _as_matrix(A) -> np.ndarray:
    A = np.atleast_2d(np.asarray(A, dtype=np.complex128))
    if A.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {A.shape}")
    return A


# =============================================================================
# NORMS AND SINGULAR VALUES
# =============================================================================


def norm(A, which: NormKind = "spectral") -> float:
    """Induced matrix norm.

    Args:
        A: Matrix
        which: "one" (max column abs sum), "inf" (max row abs sum) or
               "spectral" (largest singular value)
    """
    A = _as_matrix(A)
    if A.size == 0:
        return 0.0
    if which == "one":
        return float(np.abs(A).sum(axis=0).max())
    if which == "inf":
        return float(np.abs(A).sum(axis=1).max())
    if which == "spectral":
        if max(A.shape) <= NUMERICS["svd_max_dim"]:
            return float(scipy.linalg.svdvals(A)[0])
        return _spectral_norm_power(A)
    raise ValueError(f"unknown norm {which!r}")


def _spectral_norm_power(A: np.ndarray) -> float:
    """sqrt of the dominant eigenvalue of A^H A by power iteration."""
    gram = A.conj().T @ A
    rng = np.random.default_rng(0)
    x = rng.standard_normal(gram.shape[0]) + 1j * rng.standard_normal(gram.shape[0])
    x /= np.linalg.norm(x)
    estimate = 0.0
    for _ in range(NUMERICS["power_max_iter"]):
        y = gram @ x
        current = float(np.linalg.norm(y))
        if current == 0.0:
            return 0.0
        x = y / current
        if abs(current - estimate) <= NUMERICS["power_tol"] * current:
            return float(np.sqrt(current))
        estimate = current
    raise NoConvergence("power iteration for the spectral norm did not converge")


def sigma_min(A) -> float:
    """Smallest singular value."""
    A = _as_matrix(A)
    try:
        return float(scipy.linalg.svdvals(A)[-1])
    except (np.linalg.LinAlgError, ValueError) as e:
        raise NoConvergence(f"SVD failed: {e}") from e


def eigenvalues(A) -> np.ndarray:
    """All eigenvalues with multiplicity (LAPACK geev via scipy)."""
    A = _as_matrix(A)
    if A.shape[0] != A.shape[1]:
        raise ValueError(f"eigenvalues need a square matrix, got {A.shape}")
    if A.shape[0] == 0:
        return np.zeros(0, dtype=np.complex128)
    try:
        return scipy.linalg.eigvals(A, check_finite=True)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise NoConvergence(f"eigensolver failed on a {A.shape[0]}x{A.shape[0]} matrix: {e}") from e


def spectral_radius(A) -> float:
    eigs = eigenvalues(A)
    return float(np.abs(eigs).max()) if eigs.size else 0.0


# =============================================================================
# NUMERICAL RADIUS
# =============================================================================


def _lambda_max(A: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """Largest eigenvalue of Re(e^{i theta} A) for a batch of angles."""
    phase = np.exp(1j * np.asarray(thetas))[:, None, None]
    herm = (phase * A + phase.conj() * A.conj().T) / 2.0
    return np.linalg.eigvalsh(herm)[:, -1]


def _candidate_peaks(values: np.ndarray, floor: float) -> list[int]:
    """Cyclic discrete local maxima above floor, one index per plateau run."""
    n = values.size
    left = np.roll(values, 1)
    right = np.roll(values, -1)
    is_peak = (values >= left) & (values >= right) & (values >= floor)
    if is_peak.all():
        return [int(np.argmax(values))]
    peaks = []
    i = 0
    # start scanning right after a non-peak so plateau runs are not split
    start = int(np.argmin(is_peak))
    while i < n:
        j = (start + i) % n
        if is_peak[j]:
            run = [j]
            while i + 1 < n and is_peak[(start + i + 1) % n]:
                i += 1
                run.append((start + i) % n)
            peaks.append(run[len(run) // 2])
        i += 1
    return peaks


def _golden_max(A: np.ndarray, lo: float, hi: float, width: float, max_iter: int) -> float:
    c = hi - GOLDEN * (hi - lo)
    d = lo + GOLDEN * (hi - lo)
    fc, fd = _lambda_max(A, [c, d])
    for _ in range(max_iter):
        if hi - lo <= width:
            return float(max(fc, fd))
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - GOLDEN * (hi - lo)
            fc = _lambda_max(A, [c])[0]
        else:
            lo, c, fc = c, d, fd
            d = lo + GOLDEN * (hi - lo)
            fd = _lambda_max(A, [d])[0]
    raise NoConvergence(f"golden-section refinement stopped at width {hi - lo:.3e}")


def numerical_radius(A, tol: float | None = None) -> float:
    """w(A) within absolute tolerance tol.

    A coarse scan of nr_grid equispaced angles is refined by golden-section
    search around every local maximum that the Lipschitz estimate
    |d lambda_max / d theta| <= ||A||_2 cannot rule out.
    """
    A = _as_matrix(A)
    if A.shape[0] != A.shape[1]:
        raise ValueError(f"numerical radius needs a square matrix, got {A.shape}")
    if A.size == 0 or not np.any(A):
        return 0.0
    tol = NUMERICS["nr_tol"] if tol is None else tol
    if A.shape[0] == 1:
        return float(abs(A[0, 0]))

    grid = NUMERICS["nr_grid"]
    step = 2.0 * np.pi / grid
    thetas = step * np.arange(grid)
    values = _lambda_max(A, thetas)
    best = float(values.max())

    lipschitz = norm(A, "spectral")
    width = tol / lipschitz
    peaks = _candidate_peaks(values, best - lipschitz * step)
    for i in peaks:
        refined = _golden_max(
            A, thetas[i] - step, thetas[i] + step, width, NUMERICS["nr_max_iter"]
        )
        best = max(best, refined)
    logger.debug("numerical radius n=%d peaks=%d w=%.12g", A.shape[0], len(peaks), best)
    return max(best, 0.0)


def numerical_radius_upper(A, tol: float | None = None) -> float:
    """w(A) inflated so scan under-estimation cannot break an upper bound."""
    tol = NUMERICS["nr_tol"] if tol is None else tol
    return numerical_radius(A, tol) * (1.0 + NUMERICS["w_inflation"]) + tol


def w_bound_block2(A, B, C, D) -> float:
    """Upper bound on w of the block matrix [[A, B], [C, D]].

    1/2 (w(A) + w(D) + sqrt((w(A) - w(D))^2 + (||B||_2 + ||C||_2)^2))
    """
    wa = numerical_radius_upper(A)
    wd = numerical_radius_upper(D)
    off = norm(B, "spectral") + norm(C, "spectral")
    return 0.5 * (wa + wd + np.sqrt((wa - wd) ** 2 + off**2))


def jordan_like_block(a: complex, n: int) -> np.ndarray:
    """n x n matrix with a on the diagonal and ones on the superdiagonal."""
    L = np.eye(n, dtype=np.complex128) * a
    L[np.arange(n - 1), np.arange(1, n)] = 1.0
    return L


def w_jordan_like(a: complex, n: int) -> float:
    """|a| + cos(pi/(n+1)); equals w of the Jordan-like block for real a >= 0."""
    if n < 1:
        raise ValueError(f"block order must be positive, got {n}")
    return float(abs(a) + np.cos(np.pi / (n + 1)))
