"""
Canonical representations of rational matrices, scalar rational functions
and monic polynomials.

Storage conventions:
    - polynomial coefficients are plain ascending powers A_0..A_m, so
      P(lam) = A_0 + A_1 lam + ... + A_m lam^m with A_m = I;
    - a pole term stores the coefficient it ADDS, R(lam) = P(lam) + B/(lam-a)^k.

The literature writes P(lam) = lam^m - C_{m-1} lam^{m-1} - ... - C_0 and, for
scalars, r(lam) = ... - sum b/(lam-a)^k. Those negated views are produced by
MatrixPolynomial.negated_coeff, ScalarRationalFunction.c and
ScalarRationalFunction.b and nowhere else.
"""

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np
import numpy.polynomial.polynomial as npoly

from config import NUMERICS
from core.errors import (
    DegreeZero,
    DimensionMismatch,
    EvaluationAtPole,
    NonFiniteEntry,
    NonMonicLeading,
    ParseError,
    ValidationError,
    ZeroTopOrderCoefficient,
)

logger = logging.getLogger(__name__)

CANONICAL = "canonical"
PER_TERM = "per-term"
MODES = (CANONICAL, PER_TERM)

ComplexScalar = complex


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=np.complex128)
    arr.flags.writeable = False
    return arr


# =============================================================================
# DOMAIN TYPES
# =============================================================================


@dataclass(frozen=True, eq=False)
class PoleTerm:
    """One partial-fraction summand B / (lam - a)^k."""

    a: complex
    k: int
    B: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "k", int(self.k))
        object.__setattr__(self, "B", _frozen(np.atleast_2d(self.B)))

    @property
    def is_zero(self) -> bool:
        return not np.any(self.B)

    def __eq__(self, other):
        if not isinstance(other, PoleTerm):
            return NotImplemented
        return (
            self.a == other.a
            and self.k == other.k
            and self.B.shape == other.B.shape
            and bool(np.all(self.B == other.B))
        )

    def __repr__(self):
        return f"PoleTerm(a={self.a}, k={self.k}, B={self.B.tolist()})"


@dataclass(frozen=True, eq=False)
class MatrixPolynomial:
    """P(lam) = A_0 + A_1 lam + ... + A_m lam^m, ascending coefficients."""

    coeffs: tuple[np.ndarray, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", tuple(_frozen(np.atleast_2d(c)) for c in self.coeffs)
        )

    @property
    def size(self) -> int:
        return self.coeffs[0].shape[0]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def negated_coeff(self, i: int) -> np.ndarray:
        """Coefficient C_i of the form lam^m - sum C_i lam^i (i < m)."""
        if not 0 <= i < self.degree:
            raise IndexError(f"negated coefficient index {i} outside 0..{self.degree - 1}")
        return -self.coeffs[i]

    def __call__(self, lam: complex) -> np.ndarray:
        # Horner
        acc = np.array(self.coeffs[-1], dtype=np.complex128)
        for coeff in reversed(self.coeffs[:-1]):
            acc = acc * lam + coeff
        return acc

    def __eq__(self, other):
        if not isinstance(other, MatrixPolynomial):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(
            x.shape == y.shape and bool(np.all(x == y))
            for x, y in zip(self.coeffs, other.coeffs)
        )


@dataclass(frozen=True, eq=False)
class RationalMatrix:
    """R(lam) = P(lam) + sum B / (lam - a)^k, the problem instance.

    Instances are normally produced by validate(); constructing one directly
    skips the invariant checks.
    """

    poly: MatrixPolynomial
    terms: tuple[PoleTerm, ...] = ()
    mode: str = CANONICAL
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    @property
    def size(self) -> int:
        return self.poly.size

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def poles(self) -> tuple[complex, ...]:
        """Distinct pole values in order of first appearance."""
        seen = []
        for term in self.terms:
            if term.a not in seen:
                seen.append(term.a)
        return tuple(seen)

    @property
    def pole_orders(self) -> dict[complex, int]:
        """Highest power carried by a nonzero term, per pole."""
        orders: dict[complex, int] = {}
        for term in self.terms:
            if term.is_zero:
                continue
            orders[term.a] = max(orders.get(term.a, 0), term.k)
        return orders

    @property
    def is_monic(self) -> bool:
        lead = self.poly.coeffs[-1]
        return bool(np.all(lead == np.eye(self.size)))

    def to_mode(self, mode: str) -> "RationalMatrix":
        """Same function in the other representation mode.

        Per-term output keeps duplicate (a, k) summands apart and only loses
        zero terms; summands are combined on the way to canonical only.
        """
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        if mode == self.mode:
            return self
        if mode == PER_TERM:
            terms = [t for t in self.terms if not t.is_zero]
        else:
            terms = _expand_canonical(_combine_terms(self.terms, self.size), self.size)
        return type(self)(self.poly, tuple(terms), mode, self.name)

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (
            self.mode == other.mode
            and self.poly == other.poly
            and len(self.terms) == len(other.terms)
            and all(x == y for x, y in zip(self.terms, other.terms))
        )


@dataclass(frozen=True, eq=False)
class ScalarRationalFunction(RationalMatrix):
    """A 1x1 rational matrix with scalar views of its coefficients."""

    def __post_init__(self):
        super().__post_init__()
        if self.size != 1:
            raise DimensionMismatch(f"scalar function needs size 1, got {self.size}")

    @classmethod
    def from_matrix(cls, R: RationalMatrix) -> "ScalarRationalFunction":
        if isinstance(R, cls):
            return R
        return cls(R.poly, R.terms, R.mode, R.name)

    @property
    def poly_coeffs(self) -> np.ndarray:
        """Ascending scalar coefficients a_0..a_m of the polynomial part."""
        return np.array([c[0, 0] for c in self.poly.coeffs], dtype=np.complex128)

    def c(self, i: int) -> complex:
        """c_i of r(lam) = lam^m - c_{m-1} lam^{m-1} - ... - c_0 - ..."""
        return complex(self.poly.negated_coeff(i)[0, 0])

    @staticmethod
    def b(term: PoleTerm) -> complex:
        """b of the subtracted summand b / (lam - a)^k."""
        return -complex(term.B[0, 0])

    def __call__(self, lam: complex) -> complex:
        return complex(evaluate(self, lam)[0, 0])


@dataclass(frozen=True, eq=False)
class MonicPolynomial:
    """p(lam) = a_0 + a_1 lam + ... + lam^m with complex coefficients."""

    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = _frozen(np.ravel(self.coeffs))
        if coeffs.size < 2:
            raise DegreeZero("a monic polynomial needs degree at least one")
        if coeffs[-1] != 1:
            raise NonMonicLeading(f"leading coefficient is {coeffs[-1]}, not 1")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    @property
    def c(self) -> np.ndarray:
        """c_0..c_{m-1} of the form lam^m - sum c_i lam^i."""
        return -self.coeffs[:-1]

    def __call__(self, lam):
        return npoly.polyval(lam, self.coeffs)

    def roots(self) -> np.ndarray:
        # local import: linalg depends on nothing in core but the errors module
        from linalg.kernels import eigenvalues

        return eigenvalues(polynomial_companion(self.coeffs))


def polynomial_companion(coeffs: np.ndarray) -> np.ndarray:
    """Companion block: ones on the superdiagonal, -a_0..-a_{m-1} in the last row."""
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    m = coeffs.size - 1
    C = np.zeros((m, m), dtype=np.complex128)
    C[np.arange(m - 1), np.arange(1, m)] = 1.0
    C[-1, :] = -coeffs[:-1] / coeffs[-1]
    return C


# =============================================================================
# VALIDATION
# =============================================================================


def _as_complex(entry) -> complex:
    if isinstance(entry, bool):
        raise ParseError(f"boolean {entry!r} is not a number")
    if isinstance(entry, (list, tuple)):
        if len(entry) != 2:
            raise ParseError(f"complex entry must be [re, im], got {entry!r}")
        re, im = entry
        return complex(_as_real(re), _as_real(im))
    if isinstance(entry, (int, float, complex, np.number)):
        return complex(entry)
    raise ParseError(f"cannot read {entry!r} as a number")


def _as_real(value) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float, np.integer, np.floating)):
        raise ParseError(f"cannot read {value!r} as a real number")
    return float(value)


def _as_matrix(obj, p: int, what: str) -> np.ndarray:
    is_seq = isinstance(obj, (list, tuple))
    bare_scalar = p == 1 and (
        not is_seq or (len(obj) == 2 and not isinstance(obj[0], (list, tuple)))
    )
    if isinstance(obj, np.ndarray):
        arr = np.array(obj, dtype=np.complex128)
    elif bare_scalar:
        # number or [re, im] pair for a 1x1 coefficient
        arr = np.array([[_as_complex(obj)]], dtype=np.complex128)
    else:
        if not isinstance(obj, (list, tuple)) or not all(
            isinstance(row, (list, tuple)) for row in obj
        ):
            raise ParseError(f"{what} must be a list of rows")
        rows = [[_as_complex(e) for e in row] for row in obj]
        if len({len(row) for row in rows}) > 1:
            raise DimensionMismatch(f"{what} has ragged rows")
        arr = np.array(rows, dtype=np.complex128)
    arr = np.atleast_2d(arr)
    if arr.shape != (p, p):
        raise DimensionMismatch(f"{what} has shape {arr.shape}, expected {(p, p)}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteEntry(f"{what} contains NaN or Inf")
    return arr


def _combine_terms(terms: Iterable[PoleTerm], p: int) -> list[PoleTerm]:
    """Sum duplicate (a, k) pairs, drop zero coefficients, group by pole.

    Poles keep their first-appearance order; powers run from high to low
    within a pole.
    """
    sums: dict[complex, dict[int, np.ndarray]] = {}
    for term in terms:
        by_k = sums.setdefault(term.a, {})
        by_k[term.k] = by_k.get(term.k, np.zeros((p, p), dtype=np.complex128)) + term.B
    combined = []
    for a, by_k in sums.items():
        for k in sorted(by_k, reverse=True):
            if np.any(by_k[k]):
                combined.append(PoleTerm(a, k, by_k[k]))
    return combined


def _expand_canonical(terms: Sequence[PoleTerm], p: int) -> list[PoleTerm]:
    """Fill in zero coefficients for every power 1..m_a below the top one."""
    grouped: dict[complex, dict[int, np.ndarray]] = {}
    for term in terms:
        grouped.setdefault(term.a, {})[term.k] = term.B
    expanded = []
    for a, by_k in grouped.items():
        top = max(by_k)
        for k in range(top, 0, -1):
            expanded.append(PoleTerm(a, k, by_k.get(k, np.zeros((p, p)))))
    return expanded


def validate(raw: Mapping, require_monic: bool = True) -> RationalMatrix:
    """Build a validated RationalMatrix from parsed instance data.

    Args:
        raw: Mapping with keys "size", "poly", optional "terms", "mode" and
             "id". Coefficients may be lists of rows of numbers / [re, im]
             pairs or numpy arrays.
        require_monic: Enforce A_m == I exactly. Only diagnostics disable it.

    Returns:
        RationalMatrix (ScalarRationalFunction when size is 1). Canonical
        mode combines duplicate (a, k) terms and expands every pole to the
        powers 1..m_a; per-term mode keeps the written summands, minus
        zero ones.
    """
    if not isinstance(raw, Mapping):
        raise ParseError("instance must be a JSON object")
    for key in ("size", "poly"):
        if key not in raw:
            raise ParseError(f"missing key {key!r}")

    p = raw["size"]
    if isinstance(p, bool) or not isinstance(p, (int, np.integer)) or p < 1:
        raise ParseError(f"size must be a positive integer, got {p!r}")
    p = int(p)

    mode = raw.get("mode", CANONICAL)
    if mode not in MODES:
        raise ParseError(f"mode must be one of {MODES}, got {mode!r}")

    poly_raw = raw["poly"]
    if not isinstance(poly_raw, (list, tuple)):
        raise ParseError("poly must be a list of coefficient matrices")
    coeffs = [_as_matrix(c, p, f"poly[{i}]") for i, c in enumerate(poly_raw)]
    if len(coeffs) < 2:
        raise DegreeZero("polynomial part must have degree at least one")
    if require_monic and not np.all(coeffs[-1] == np.eye(p)):
        raise NonMonicLeading("leading coefficient of the polynomial part must be the identity")

    terms_raw = raw.get("terms", [])
    if not isinstance(terms_raw, (list, tuple)):
        raise ParseError("terms must be a list")
    terms = []
    for i, t in enumerate(terms_raw):
        if not isinstance(t, Mapping) or not {"a", "k", "B"} <= set(t):
            raise ParseError(f"terms[{i}] needs keys a, k, B")
        a = _as_complex(t["a"])
        if not np.isfinite(a):
            raise NonFiniteEntry(f"terms[{i}].a is not finite")
        k = t["k"]
        if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
            raise ParseError(f"terms[{i}].k must be an integer")
        if k < 1:
            raise ValidationError(f"terms[{i}].k must be at least 1, got {k}")
        terms.append(PoleTerm(a, int(k), _as_matrix(t["B"], p, f"terms[{i}].B")))

    if mode == CANONICAL:
        by_pole: dict[complex, dict[int, np.ndarray]] = {}
        for term in terms:
            by_k = by_pole.setdefault(term.a, {})
            by_k[term.k] = by_k.get(term.k, np.zeros((p, p), dtype=np.complex128)) + term.B
        for a, by_k in by_pole.items():
            if not np.any(by_k[max(by_k)]):
                raise ZeroTopOrderCoefficient(
                    f"pole {a}: coefficient of power {max(by_k)} is zero"
                )
        terms = _expand_canonical(_combine_terms(terms, p), p)
    else:
        dropped = sum(1 for t in terms if t.is_zero)
        if dropped:
            logger.debug("per-term mode: dropped %d zero summands", dropped)
        terms = [t for t in terms if not t.is_zero]

    cls = ScalarRationalFunction if p == 1 else RationalMatrix
    return cls(MatrixPolynomial(tuple(coeffs)), tuple(terms), mode, str(raw.get("id", "")))


def rational_matrix(
    coeffs: Sequence,
    terms: Sequence[tuple] = (),
    mode: str = CANONICAL,
    name: str = "",
    require_monic: bool = True,
) -> RationalMatrix:
    """Programmatic front door to validate().

    Args:
        coeffs: Ascending coefficient matrices A_0..A_m
        terms: (a, k, B) triples, B being the added coefficient
        mode: "canonical" or "per-term"
    """
    coeffs = [np.atleast_2d(np.asarray(c, dtype=np.complex128)) for c in coeffs]
    raw = {
        "size": coeffs[0].shape[0] if coeffs else 1,
        "poly": coeffs,
        "terms": [{"a": complex(a), "k": k, "B": np.atleast_2d(B)} for a, k, B in terms],
        "mode": mode,
        "id": name,
    }
    return validate(raw, require_monic=require_monic)


def scalar_function(
    coeffs: Sequence[complex],
    terms: Sequence[tuple[complex, int, complex]] = (),
    mode: str = CANONICAL,
    name: str = "",
) -> ScalarRationalFunction:
    """r(lam) = sum coeffs[i] lam^i + sum added / (lam - a)^k."""
    return rational_matrix(
        [np.array([[c]]) for c in coeffs],
        [(a, k, np.array([[b]])) for a, k, b in terms],
        mode,
        name,
    )


# =============================================================================
# OPERATIONS
# =============================================================================


def evaluate(R: RationalMatrix, lam: complex) -> np.ndarray:
    """R(lam) as a dense p x p complex matrix."""
    lam = complex(lam)
    guard = NUMERICS["pole_guard"]
    value = R.poly(lam)
    for term in R.terms:
        gap = lam - term.a
        if abs(gap) <= guard * (1.0 + abs(term.a)):
            raise EvaluationAtPole(f"lambda={lam} coincides with pole {term.a}")
        value = value + term.B / gap**term.k
    return value


def normalize(R: RationalMatrix) -> RationalMatrix:
    """Merge duplicate (a, k) terms and drop zero ones.

    Canonical instances are re-expanded afterwards; a pole whose top power
    cancels falls back to its highest surviving power.
    """
    terms = _combine_terms(R.terms, R.size)
    if R.mode == CANONICAL:
        terms = _expand_canonical(terms, R.size)
    return type(R)(R.poly, tuple(terms), R.mode, R.name)


def to_numerator_polynomial(r: ScalarRationalFunction) -> MonicPolynomial:
    """p(lam) = r(lam) * prod_a (lam - a)^{m_a}, expanded by convolution.

    No gcd reduction is attempted: when a numerator factor cancels a pole,
    the pole survives as a spurious root and is filtered by the spectrum
    oracle.
    """
    r = ScalarRationalFunction.from_matrix(r)
    terms = _combine_terms(r.terms, 1)
    orders: dict[complex, int] = {}
    for term in terms:
        orders[term.a] = max(orders.get(term.a, 0), term.k)

    def denominator(skip: complex | None = None, reduce_by: int = 0) -> np.ndarray:
        out = np.array([1.0 + 0j])
        for a, order in orders.items():
            power = order - reduce_by if a == skip else order
            for _ in range(power):
                out = np.convolve(out, np.array([-a, 1.0]))
        return out

    degree = r.degree + sum(orders.values())
    numerator = np.zeros(degree + 1, dtype=np.complex128)
    numerator += np.convolve(r.poly_coeffs, denominator())
    for term in terms:
        part = term.B[0, 0] * denominator(skip=term.a, reduce_by=term.k)
        numerator[: part.size] += part
    return MonicPolynomial(numerator)
