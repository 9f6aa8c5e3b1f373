"""Exact Gamma(1/4)/pi closed forms for hyperbolic series and order-3
Berndt-type integrals, with high-precision numeric verification.

Closed forms are ``GammaPiExpr`` values: finite sums of
``c * Gamma(1/4)**a * pi**(h/2)`` with rational ``c``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable

from . import _core
from ._core import (
    GammaPiExpr,
    LemniscateError,
    berndt_integral,
    closed_sum,
    conjecture,
    membership,
    numeric_sum,
    quad_berndt,
)

__version__ = _core.__version__

__all__ = [
    "GammaPiExpr",
    "LemniscateError",
    "berndt_integral",
    "check_integral",
    "check_sum",
    "closed_sum",
    "coeffs",
    "conjecture",
    "membership",
    "numeric_sum",
    "quad_berndt",
    "terms",
    "verify_all",
]


def coeffs(kind: str, max_index: int) -> dict[int, list[Fraction]]:
    """Coefficient polynomials of ``kind`` (sd_p, sn_g, sn2_q, sinh_R) keyed
    by subscript, coefficients lowest degree first."""
    return {sub: [Fraction(c) for c in cs] for sub, cs in _core.coeffs(kind, max_index)}


def terms(expr: GammaPiExpr) -> list[tuple[Fraction, int, Fraction]]:
    """``(coefficient, gamma exponent, pi exponent)`` triples in display order."""
    return [(Fraction(int(n), int(d)), a, Fraction(h, 2)) for n, d, a, h in expr.terms()]


def check_sum(family: str, m: int, digits: int = 40, tolerance: int = 30) -> dict:
    """Compares the closed form of a series family with direct summation."""
    return json.loads(_core.check_sum(family, m, digits, tolerance))


def check_integral(sign: str, m: int, digits: int = 40, tolerance: int = 30) -> dict:
    """Compares the closed form of a Berndt-type integral with quadrature."""
    return json.loads(_core.check_integral(sign, m, digits, tolerance))


def verify_all(
    precision_digits: int = 40,
    max_m: str | int = "cosh=6,sinh=6,plus=4,minus=4",
    categories: Iterable[str] = (),
    jobs: int = 1,
    include_conjecture: bool = False,
) -> dict:
    """Runs the verification suite and returns its JSON report as a dict."""
    text = _core.verify_all(precision_digits, str(max_m), list(categories), jobs, include_conjecture)
    return json.loads(text)
