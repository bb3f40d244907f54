"""Exact expansion coefficients and remainder analysis for 1/pi series.

The heavy lifting lives in the compiled extension ``_pitail``.  Exact
rationals cross the boundary as ``num/den`` strings; :func:`as_fraction`
and :func:`coefficient_fractions` convert them back.
"""

from fractions import Fraction

from ._pitail import (
    accelerate,
    catalog,
    coefficients,
    envelope,
    log_prefactor,
    log_prefactor_coefficients,
    optimal_truncation,
    order_sweep,
    pi,
    reference,
    remainder,
    remainder_report,
    series,
    sign_pattern,
)

__version__ = "0.1.0"


def as_fraction(s):
    """Parse a num/den string returned by the extension into a Fraction."""
    return Fraction(s)


def coefficient_fractions(series_id, J):
    """Expansion coefficients c_0..c_{J-1} as Fractions."""
    return [Fraction(c) for c in coefficients(series_id, J)]


__all__ = [
    "accelerate",
    "as_fraction",
    "catalog",
    "coefficient_fractions",
    "coefficients",
    "envelope",
    "log_prefactor",
    "log_prefactor_coefficients",
    "optimal_truncation",
    "order_sweep",
    "pi",
    "reference",
    "remainder",
    "remainder_report",
    "series",
    "sign_pattern",
]
