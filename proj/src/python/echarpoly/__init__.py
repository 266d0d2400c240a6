"""Exact E-characteristic polynomials and eigenpairs of tensors."""

import json
from fractions import Fraction

from . import _core
from ._core import DimensionError, DomainError, Error, ParseError, UnsupportedError

__all__ = [
    "DimensionError",
    "DomainError",
    "Error",
    "ParseError",
    "UnsupportedError",
    "document",
    "echar",
    "eigen",
    "fuzz",
    "is_regular",
    "sylvester_resultant",
    "verify",
]


def document(order, dim, entries):
    """TensorDocument from {(i1, ..., im): value} with 1-based indices."""
    return {
        "order": order,
        "dim": dim,
        "entries": {",".join(map(str, k)): str(Fraction(v)) for k, v in entries.items() if Fraction(v) != 0},
    }


def _text(tensor):
    return tensor if isinstance(tensor, str) else json.dumps(tensor)


def echar(tensor, route="auto"):
    """Report dict; 'psi' holds the coefficients as Fractions, ascending."""
    report = json.loads(_core.echar(_text(tensor), route))
    report["psi"] = [Fraction(c) for c in report["coefficients"]]
    return report


def eigen(tensor):
    return json.loads(_core.eigen(_text(tensor)))


def is_regular(tensor):
    """(regular, exact witness as complex Fraction pairs or None)."""
    regular, witness = _core.is_regular(_text(tensor))
    if witness is not None:
        witness = [(Fraction(re), Fraction(im)) for re, im in witness]
    return regular, witness


def verify(tensor):
    return [{"name": n, "status": s, "detail": d} for n, s, d in _core.verify(_text(tensor))]


def fuzz(count, seed, order=3, dim=2):
    ok, results = _core.fuzz(count, seed, order, dim)
    return ok, [[{"name": n, "status": s, "detail": d} for n, s, d in row] for row in results]


def sylvester_resultant(f, g):
    """Res of binary forms given by coefficients of x1^(d-i) x2^i."""
    return Fraction(_core.sylvester_resultant([str(Fraction(c)) for c in f], [str(Fraction(c)) for c in g]))
