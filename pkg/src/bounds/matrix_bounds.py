"""
Eigenvalue-modulus bounds for rational matrices through the associated real
rational function

    q(x) = x^m - sum ||C_i|| x^i - sum ||B|| / (x - |a|)^k

whose zeros beyond every |a| bound the spectrum of R.
"""

import logging
from dataclasses import dataclass, field

import numpy as np
import scipy.optimize

from bounds.scalar_bounds import BoundValue, linear_case_bound, positive_root, rational_zero_bound
from config import Q_ROOT
from core.errors import BracketFailure, NoConvergence, NotLinear
from core.rational import CANONICAL, RationalMatrix, ScalarRationalFunction, scalar_function
from linalg.kernels import norm as matrix_norm

logger = logging.getLogger(__name__)

SUMMARY_METHODS = ("summary1", "summary2", "summary3")


@dataclass(frozen=True, eq=False)
class RealRationalFunction:
    """q(x) with nonnegative data.

    poles holds (gamma, k, beta) triples sorted by gamma, every beta > 0.
    """

    alphas: np.ndarray
    poles: tuple[tuple[float, int, float], ...] = ()
    norm: str = "spectral"
    mode: str = CANONICAL
    name: str = field(default="", compare=False)

    @property
    def degree(self) -> int:
        return len(self.alphas)

    @property
    def gamma_max(self) -> float:
        return max((g for g, _, _ in self.poles), default=0.0)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        value = x**self.degree
        for i, alpha in enumerate(self.alphas):
            value = value - alpha * x**i
        for gamma, k, beta in self.poles:
            value = value - beta / (x - gamma) ** k
        return value

    def to_scalar_function(self) -> ScalarRationalFunction:
        """q as a validated scalar instance, r_q(x) = q(x)."""
        return scalar_function(
            [-a for a in self.alphas] + [1.0],
            [(gamma, k, -beta) for gamma, k, beta in self.poles],
            self.mode,
            self.name,
        )


# =============================================================================
# ASSOCIATION
# =============================================================================


def associate_q(R: RationalMatrix, norm: str = "spectral") -> RealRationalFunction:
    """Build q(x) from the norms of R's coefficients.

    Zero-norm terms are dropped. Poles sharing a modulus merge into one
    gamma; canonical instances sum beta over equal (gamma, k).
    """
    alphas = np.array([matrix_norm(R.poly.negated_coeff(i), norm) for i in range(R.degree)])
    entries = [(abs(t.a), t.k, matrix_norm(t.B, norm)) for t in R.terms]
    entries = [e for e in entries if e[2] > 0]

    if R.mode == CANONICAL:
        merged: dict[tuple[float, int], float] = {}
        for gamma, k, beta in entries:
            merged[(gamma, k)] = merged.get((gamma, k), 0.0) + beta
        entries = [(gamma, k, beta) for (gamma, k), beta in merged.items()]

    entries.sort(key=lambda e: (e[0], -e[1]))
    logger.debug("q(x): alphas=%s poles=%s norm=%s", alphas.tolist(), entries, norm)
    return RealRationalFunction(alphas, tuple(entries), norm, R.mode, R.name)


# =============================================================================
# BOUNDS
# =============================================================================


def q_root_bound(q: RealRationalFunction) -> BoundValue:
    """Smallest zero of q in (gamma_max, inf).

    q(x)/x^m is strictly increasing there, so the zero is unique; it is
    located on a logarithmic grid and refined by bisection.

    Raises:
        BracketFailure: no positive value of q below the bracket limit
        NoConvergence: bisection hit its iteration cap
    """
    notes = f"norm={q.norm}"
    if not q.poles:
        if q.degree == 1:
            return BoundValue(float(q.alphas[0]), "q_root", notes)
        return BoundValue(positive_root(q.alphas), "q_root", notes + " (no poles)")

    g = q.gamma_max
    eps = 1e-9 * (1.0 + g)
    X = g + 1.0
    while q(X) <= 0:
        X = 2.0 * X
        if X > Q_ROOT["bracket_limit"]:
            raise BracketFailure(f"q stays nonpositive up to {Q_ROOT['bracket_limit']:g}")

    while q(g + eps) >= 0:
        eps = eps / 1e3
        if eps < np.finfo(float).eps * (1.0 + g):
            raise BracketFailure(f"q is not negative just above gamma_max={g}")

    xs = g + np.geomspace(eps, X - g, Q_ROOT["grid_points"])
    xs[0], xs[-1] = g + eps, X
    values = q(xs)
    first = int(np.argmax(values > 0))
    lo, hi = xs[first - 1], xs[first]
    logger.debug("q_root bracket [%.15g, %.15g]", lo, hi)
    try:
        root = scipy.optimize.bisect(
            q, lo, hi, xtol=1e-300, rtol=Q_ROOT["rel_width"], maxiter=Q_ROOT["max_iter"]
        )
    except RuntimeError as e:
        raise NoConvergence(f"bisection on q did not converge: {e}") from e
    return BoundValue(float(root), "q_root", notes)


def summary_bounds(R: RationalMatrix, norm: str = "spectral") -> tuple[BoundValue, BoundValue, BoundValue]:
    """Infinity norm, one norm and numerical-radius split of C_q."""
    r_q = associate_q(R, norm).to_scalar_function()
    out = []
    for method, inner in zip(SUMMARY_METHODS, ("inf_norm", "one_norm", "nr_split")):
        bound = rational_zero_bound(r_q, inner)
        out.append(BoundValue(bound.value, method, f"norm={norm} {bound.notes}".strip()))
    return tuple(out)


def linear_matrix_bound(R: RationalMatrix, norm: str = "spectral") -> BoundValue:
    """max(|a| + cos(pi/(k+1)), ||C_0||) + (sqrt(#blocks) + sqrt(sum ||B||^2)) / 2."""
    if R.degree != 1:
        raise NotLinear(f"polynomial part has degree {R.degree}, expected 1")
    bound = linear_case_bound(associate_q(R, norm).to_scalar_function())
    return BoundValue(bound.value, "linear_matrix", f"norm={norm}")
