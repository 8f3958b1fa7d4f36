"""
Reference eigenvalues of rational matrices and zeros of scalar rational
functions, used to check every bound.

Candidates come from the companion spectrum; a candidate is accepted when it
keeps clear of every pole and its normwise backward error

    sigma_min(R(lam)) / (sum ||A_i|| |lam|^i + sum ||B|| / |lam - a|^k)

is below the acceptance tolerance.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from companion.companion import build
from config import SPECTRUM
from core.errors import NonMonicLeading, NonRegularSuspected
from core.rational import RationalMatrix, ScalarRationalFunction, evaluate, to_numerator_polynomial
from linalg.kernels import eigenvalues, norm, sigma_min

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SpectrumResult:
    eigenvalues: np.ndarray
    residuals: np.ndarray
    rejected: list[tuple[complex, str]] = field(default_factory=list)

    @property
    def max_modulus(self) -> float:
        return max_modulus(self.eigenvalues)


def max_modulus(values) -> float:
    values = np.asarray(values, dtype=np.complex128).ravel()
    return float(np.abs(values).max()) if values.size else 0.0


def _near_pole(R: RationalMatrix, lam: complex, tol: float) -> complex | None:
    for a in R.poles:
        if abs(lam - a) <= tol * (1.0 + abs(a)):
            return a
    return None


def backward_error(R: RationalMatrix, lam: complex) -> float:
    """sigma_min(R(lam)) relative to the coefficient-weighted scale at lam."""
    smin = sigma_min(evaluate(R, lam))
    modulus = abs(lam)
    scale = sum(norm(A, "spectral") * modulus**i for i, A in enumerate(R.poly.coeffs))
    scale += sum(norm(t.B, "spectral") / abs(lam - t.a) ** t.k for t in R.terms)
    if scale == 0.0:
        return 0.0 if smin == 0.0 else np.inf
    return smin / scale


def check_regularity(
    R: RationalMatrix,
    probes: int | None = None,
    tol: float | None = None,
    seed: int | None = None,
) -> bool:
    """False when R(lam) looks singular at every random probe point."""
    probes = SPECTRUM["regularity_probes"] if probes is None else probes
    tol = SPECTRUM["regularity_tol"] if tol is None else tol
    seed = SPECTRUM["regularity_seed"] if seed is None else seed

    rng = np.random.default_rng(seed)
    radius = 1.0 + max((abs(a) for a in R.poles), default=0.0)
    errors = []
    while len(errors) < probes:
        lam = complex(radius * rng.standard_normal(), radius * rng.standard_normal())
        if _near_pole(R, lam, 1e-3) is not None:
            continue
        errors.append(backward_error(R, lam))
    logger.debug("regularity probes: %s", errors)
    return not all(e <= tol for e in errors)


def eigenvalues_rational(R: RationalMatrix, tol: float | None = None) -> SpectrumResult:
    """Eigenvalues of R filtered out of the companion spectrum.

    Raises:
        NonRegularSuspected: det R(lam) vanished at every probe point
        NonMonicLeading: the companion needs an identity leading coefficient
    """
    tol = SPECTRUM["tol"] if tol is None else tol
    if not check_regularity(R):
        raise NonRegularSuspected("R(lambda) is singular at every probe point; instance is not regular")
    if not R.is_monic:
        raise NonMonicLeading("spectrum needs an identity leading coefficient")

    accepted: list[complex] = []
    residuals: list[float] = []
    rejected: list[tuple[complex, str]] = []
    for lam in eigenvalues(build(R).matrix):
        lam = complex(lam)
        pole = _near_pole(R, lam, SPECTRUM["pole_exclusion"])
        if pole is not None:
            rejected.append((lam, f"within exclusion radius of pole {pole}"))
            continue
        err = backward_error(R, lam)
        if err > tol:
            rejected.append((lam, f"backward error {err:.3e} above {tol:.1e}"))
            continue
        if any(abs(lam - mu) <= SPECTRUM["coalesce"] for mu in accepted):
            continue
        accepted.append(lam)
        residuals.append(err)

    logger.info("spectrum: %d accepted, %d rejected", len(accepted), len(rejected))
    for lam, reason in rejected:
        logger.debug("rejected %s: %s", lam, reason)
    return SpectrumResult(
        np.array(accepted, dtype=np.complex128), np.array(residuals), rejected
    )


def zeros_scalar_oracle(r: ScalarRationalFunction) -> np.ndarray:
    """Roots of the numerator polynomial, minus roots sitting on a pole."""
    r = ScalarRationalFunction.from_matrix(r)
    roots = to_numerator_polynomial(r).roots()
    keep = [
        complex(z) for z in roots
        if _near_pole(r, complex(z), SPECTRUM["numerator_pole_tol"]) is None
    ]
    dropped = roots.size - len(keep)
    if dropped:
        logger.debug("numerator route: dropped %d roots at poles", dropped)
    return np.array(keep, dtype=np.complex128)
