"""Independence polynomials of linear hypergraphs, S_G counterexamples and root certificates."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional, Sequence

from . import _zfr
from ._zfr import (
    Hypergraph,
    HypergraphError,
    SizeGuardError,
    counterexample,
    covered_edges,
    degrees,
    find_prime_in,
    h_construction,
    is_linear,
    remove_vertex,
    s_transform,
    uniformity,
)

__all__ = [
    "Hypergraph",
    "HypergraphError",
    "SizeGuardError",
    "certify_counterexample",
    "certify_root_interval",
    "compare_bounds",
    "complex_roots",
    "counterexample",
    "covered_edges",
    "degrees",
    "eval_point_closed_form",
    "evaluate",
    "find_prime_in",
    "gmpst_radius",
    "h_construction",
    "independence_poly_bruteforce",
    "is_linear",
    "isolate_real_root",
    "remove_vertex",
    "s_transform",
    "tbar_below_one",
    "uniformity",
    "verify_certificate",
    "z_sg_closed_form",
]


def _q(x: Fraction | int | str) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def _strs(coeffs: Sequence[int]) -> list[str]:
    return [str(int(c)) for c in coeffs]


def independence_poly_bruteforce(h: Hypergraph) -> list[int]:
    """Coefficients of Z_H, lowest degree first."""
    return [int(c) for c in _zfr.independence_poly_bruteforce(h)]


def z_sg_closed_form(g: Hypergraph) -> list[int]:
    """Coefficients of Z_{S_G}, computed without building S_G."""
    return [int(c) for c in _zfr.z_sg_closed_form(g)]


def evaluate(coeffs: Sequence[int], x: Fraction | int | str) -> Fraction:
    return Fraction(_zfr.evaluate(_strs(coeffs), _q(x)))


def eval_point_closed_form(g: Hypergraph, x: Fraction | int | str) -> Fraction:
    return Fraction(_zfr.eval_point_closed_form(g, _q(x)))


def isolate_real_root(coeffs: Sequence[int], lo, hi, tol="1e-12") -> Optional[dict]:
    """Rational bracket {lo, hi, exact_root} of a real root in [lo, hi], or None."""
    b = _zfr.isolate_real_root(_strs(coeffs), _q(lo), _q(hi), _q(tol))
    if b is None:
        return None
    return {
        "lo": Fraction(b["lo"]),
        "hi": Fraction(b["hi"]),
        "exact_root": None if b["exact_root"] is None else Fraction(b["exact_root"]),
    }


def complex_roots(coeffs: Sequence[int], tol: float = 1e-14) -> tuple[list[complex], bool]:
    return _zfr.complex_roots(_strs(coeffs), tol)


def certify_root_interval(n: int, alpha) -> dict:
    return json.loads(_zfr.certify_root_interval(n, _q(alpha)))


def certify_counterexample(k: int, delta: int, mode: str = "analytic") -> dict:
    return json.loads(_zfr.certify_counterexample(k, delta, mode))


def verify_certificate(cert: dict | str) -> tuple[bool, list[str]]:
    text = cert if isinstance(cert, str) else json.dumps(cert)
    return _zfr.verify_certificate(text)


def tbar_below_one(n: int, alpha) -> bool:
    return _zfr.tbar_below_one(n, _q(alpha))


def gmpst_radius(delta: int) -> tuple[Fraction, Fraction]:
    lo, hi = _zfr.gmpst_radius(delta)
    return Fraction(lo), Fraction(hi)


def compare_bounds(k: int, delta: int, c=1) -> dict:
    row = _zfr.compare_bounds(k, delta, _q(c))
    for key in ("alpha", "certified_bound", "theorem_bound", "conjectured_radius", "gmpst_radius",
                "shearer_radius", "ratio"):
        row[key] = Fraction(row[key])
    return row
