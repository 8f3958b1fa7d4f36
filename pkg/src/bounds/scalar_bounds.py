"""
Upper bounds on the moduli of zeros of monic polynomials and scalar
rational functions.

Polynomials follow p(lam) = lam^m - c_{m-1} lam^{m-1} - ... - c_0 in the
formulas below; MonicPolynomial stores a_i = -c_i.
"""

import logging
from dataclasses import dataclass

import numpy as np
import numpy.polynomial.polynomial as npoly
import scipy.linalg
import scipy.optimize

from companion.companion import CompanionMatrix, build
from config import Q_ROOT
from core.errors import BadOpts, DegreeTooSmall, NoConvergence, NotLinear, NumericalFailure
from core.rational import MonicPolynomial, ScalarRationalFunction, polynomial_companion
from linalg.kernels import norm, numerical_radius_upper

logger = logging.getLogger(__name__)

POLY_METHODS = (
    "inf_norm",
    "one_norm",
    "companion_nr",
    "cauchy",
    "carmichael_mason",
    "montel",
    "frakis",
    "rouche",
    "aziz_rather",
)
RATIONAL_METHODS = ("inf_norm", "one_norm", "nr_split")


@dataclass(frozen=True)
class BoundValue:
    value: float
    method: str
    notes: str = ""

    def __post_init__(self):
        if not np.isfinite(self.value) or self.value < 0:
            raise NumericalFailure(f"{self.method} produced invalid bound {self.value}")
        object.__setattr__(self, "value", float(self.value))


# =============================================================================
# POLYNOMIAL BOUNDS
# =============================================================================


def positive_root(abs_c: np.ndarray) -> float:
    """Unique positive zero of u(x) = x^m - |c_{m-1}| x^{m-1} - ... - |c_0|.

    Zero low-order coefficients only contribute a factor x^j and are
    stripped first; u = x^m gives 0.
    """
    abs_c = np.abs(np.asarray(abs_c, dtype=float))
    nonzero = np.flatnonzero(abs_c)
    if nonzero.size == 0:
        return 0.0
    abs_c = abs_c[nonzero[0] :]
    if abs_c.size == 1:
        return float(abs_c[0])  # x - |c_0|
    u = np.concatenate([-abs_c, [1.0]])
    hi = 1.0 + float(abs_c.max())
    try:
        return float(
            scipy.optimize.bisect(
                lambda x: npoly.polyval(x, u),
                0.0,
                hi,
                xtol=1e-300,
                rtol=Q_ROOT["rel_width"],
                maxiter=Q_ROOT["max_iter"],
            )
        )
    except RuntimeError as e:
        raise NoConvergence(f"bisection for the positive zero failed: {e}") from e


def _matrix_modulus(A: np.ndarray) -> np.ndarray:
    """|A| = (A^* A)^{1/2}."""
    vals, vecs = scipy.linalg.eigh(A.conj().T @ A)
    return (vecs * np.sqrt(np.clip(vals, 0.0, None))) @ vecs.conj().T


def _frakis(c: np.ndarray, m: int, squared: bool = True) -> float:
    A = np.array([[c[m - 1], c[m - 2]], [1.0, 0.0]], dtype=np.complex128)
    w = np.sqrt(2.0) * numerical_radius_upper(
        _matrix_modulus(A) + 1j * _matrix_modulus(A.conj().T)
    )
    tail = np.abs(c[: m - 2])
    inner = np.sqrt(np.sum(tail**2 if squared else tail))
    return 0.25 * (2.0 + w + np.sqrt((w - 2.0) ** 2 + 4.0 * (1.0 + inner) ** 2))


def poly_bound(poly: MonicPolynomial, method: str, **opts) -> BoundValue:
    """Bound on the moduli of all zeros of a monic polynomial.

    inf_norm is ||C_p||_inf of the constructed companion; for m >= 2 it
    coincides with montel.

    Args:
        poly: Monic polynomial of degree m >= 1
        method: One of POLY_METHODS
        opts: aziz_rather takes p, q, t (defaults 2, 2, 1)

    Raises:
        DegreeTooSmall: frakis with m < 3, companion_nr with m < 2
        BadOpts: aziz_rather exponents not conjugate or t <= 0
    """
    m = poly.degree
    c = poly.c
    abs_c = np.abs(c)
    notes = ""

    if method == "inf_norm":
        value = norm(polynomial_companion(poly.coeffs), "inf")
    elif method == "montel":
        value = max(1.0, abs_c.sum())
    elif method == "one_norm":
        value = max([abs_c[0]] + [1.0 + x for x in abs_c[1:]])
    elif method == "companion_nr":
        if m < 2:
            raise DegreeTooSmall("companion_nr needs degree at least 2")
        cos = np.cos(np.pi / m)
        lead = abs_c[m - 1]
        tail = np.sqrt(np.sum(abs_c[: m - 1] ** 2))
        value = 0.5 * (cos + lead + np.sqrt((cos - lead) ** 2 + (1.0 + tail) ** 2))
    elif method == "cauchy":
        value = 1.0 + abs_c.max()
    elif method == "carmichael_mason":
        value = np.sqrt(1.0 + np.sum(abs_c**2))
    elif method == "frakis":
        if m < 3:
            raise DegreeTooSmall("frakis needs degree at least 3")
        value = _frakis(c, m, squared=True)
        notes = f"as printed (unsquared tail sum): {_frakis(c, m, squared=False):.6f}"
    elif method == "rouche":
        value = positive_root(abs_c)
    elif method == "aziz_rather":
        hp = float(opts.get("p", 2.0))
        hq = float(opts.get("q", 2.0))
        t = float(opts.get("t", 1.0))
        if hp <= 1 or hq <= 1 or t <= 0 or not np.isclose(1.0 / hp + 1.0 / hq, 1.0):
            raise BadOpts(f"aziz_rather needs p, q > 1 with 1/p + 1/q = 1 and t > 0 (got {hp}, {hq}, {t})")
        a = poly.coeffs
        shifted = np.concatenate([[0.0], a[:-1]])
        j = np.arange(m + 1)
        terms = np.abs((t * a - shifted) / t ** (m - j)) ** hp
        value = (m + 1) ** (1.0 / hq) * np.sum(terms) ** (1.0 / hp)
        notes = f"p={hp:g} q={hq:g} t={t:g}"
    else:
        raise ValueError(f"unknown polynomial bound method {method!r}")

    return BoundValue(value, method, notes)


# =============================================================================
# RATIONAL FUNCTION BOUNDS
# =============================================================================


def block_quantities(cm: CompanionMatrix) -> tuple[float, float, float]:
    """(alpha, gamma, delta) of the blockwise numerical radius split.

    alpha: max |a| + cos(pi/(k+1)) over pole blocks (0 without poles)
    gamma: sqrt of the number of pole blocks
    delta: Frobenius norm of the coupling coefficients
    """
    alpha = max((abs(b.a) + np.cos(np.pi / (b.k + 1)) for b in cm.blocks), default=0.0)
    gamma = np.sqrt(len(cm.blocks))
    delta = np.sqrt(sum(np.sum(np.abs(cm.coupling_block(b)) ** 2) for b in cm.blocks))
    return float(alpha), float(gamma), float(delta)


def _split(alpha: float, beta: float, gamma: float, delta: float) -> float:
    return 0.5 * (alpha + beta + np.sqrt((alpha - beta) ** 2 + (gamma + delta) ** 2))


def rational_zero_bound(r: ScalarRationalFunction, method: str) -> BoundValue:
    """Bound on the moduli of all zeros of a scalar rational function.

    inf_norm and one_norm are the induced norms of the constructed C_r;
    nr_split bounds w(C_r) blockwise with beta = w(B_0).
    """
    r = ScalarRationalFunction.from_matrix(r)
    cm = build(r)
    if method == "inf_norm":
        return BoundValue(norm(cm.matrix, "inf"), method, f"mode={r.mode}")
    if method == "one_norm":
        return BoundValue(norm(cm.matrix, "one"), method, f"mode={r.mode}")
    if method == "nr_split":
        alpha, gamma, delta = block_quantities(cm)
        beta = numerical_radius_upper(cm.trailing_block)
        notes = f"alpha={alpha:.6g} beta={beta:.6g} gamma={gamma:.6g} delta={delta:.6g}"
        return BoundValue(_split(alpha, beta, gamma, delta), method, notes)
    raise ValueError(f"unknown rational bound method {method!r}")


def linear_case_bound(r: ScalarRationalFunction) -> BoundValue:
    """max(alpha, |c_0|) + (gamma + delta)/2 for a degree-one polynomial part."""
    r = ScalarRationalFunction.from_matrix(r)
    if r.degree != 1:
        raise NotLinear(f"polynomial part has degree {r.degree}, expected 1")
    alpha, gamma, delta = block_quantities(build(r))
    value = max(alpha, abs(r.c(0))) + 0.5 * (gamma + delta)
    return BoundValue(value, "linear_case")
