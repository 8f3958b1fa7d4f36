"""
JSON instance schema, both directions.

    {"id": "ex41", "size": p, "mode": "canonical" | "per-term",
     "poly": [A_0, ..., A_m],
     "terms": [{"a": [re, im], "k": k, "B": matrix}, ...]}

Matrices are row-major lists of rows; every entry is a bare real number or
an [re, im] pair.
"""

import json
import logging
from pathlib import Path

import numpy as np

from core.errors import ParseError
from core.rational import RationalMatrix, validate

logger = logging.getLogger(__name__)


def _entry(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _matrix(M: np.ndarray) -> list[list[list[float]]]:
    return [[_entry(z) for z in row] for row in M]


def instance_to_dict(R: RationalMatrix) -> dict:
    """Plain-data form of an instance; inverse of validate()."""
    data = {}
    if R.name:
        data["id"] = R.name
    data["size"] = R.size
    data["mode"] = R.mode
    data["poly"] = [_matrix(c) for c in R.poly.coeffs]
    data["terms"] = [
        {"a": _entry(t.a), "k": t.k, "B": _matrix(t.B)} for t in R.terms
    ]
    return data


def dump_instance(R: RationalMatrix, indent: int | None = 2) -> str:
    return json.dumps(instance_to_dict(R), indent=indent)


def parse_instance(text: str, require_monic: bool = True) -> RationalMatrix:
    """Parse and validate a JSON instance.

    Raises:
        ParseError: malformed JSON or schema
        ValidationError: readable data violating an instance invariant
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from e
    return validate(raw, require_monic=require_monic)


def load_instance(path: str | Path, require_monic: bool = True) -> RationalMatrix:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    R = parse_instance(text, require_monic=require_monic)
    if not R.name:
        R = type(R)(R.poly, R.terms, R.mode, path.stem)
    logger.debug("loaded %s: p=%d m=%d terms=%d", R.name, R.size, R.degree, len(R.terms))
    return R
