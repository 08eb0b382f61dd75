"""
Squeezed-ground-state Hermite sums

    even:     sum_n z^{2n}   H_{2n}(x)   / n!
    odd:      sum_n z^{2n+1} H_{2n+1}(x) / n!
    combined: sum_n z^n      H_n(x)      / floor(n/2)!

in closed form and as series.  The closed forms have branch points at
``z = +-i/2``, so the series converge only for ``|z| < 1/2``; the series
oracle is gated at ``|z| <= 0.4``.  Fractional powers of ``1 + 4z^2`` use the
principal branch.
"""

from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass

from .core import (DEFAULT_CONTROL, SeriesControl, as_complex, as_real, cexp,
                   check_finite, sum_series)
from .errors import DomainError, SingularityError
from .hermite import iter_floor_scaled_terms

SERIES_RADIUS = 0.4
SINGULAR_GAP = 1e-6
VARIANTS = ("even", "odd", "combined")


@dataclass(frozen=True)
class KPoint:
    z: complex
    x: float

    def __post_init__(self):
        object.__setattr__(self, "z", as_complex(self.z, "z"))
        object.__setattr__(self, "x", as_real(self.x, "x"))


def _pieces(z, x):
    z = as_complex(z, "z")
    x = as_real(x, "x")
    d = 1.0 + 4.0 * z * z
    if abs(d) < SINGULAR_GAP:
        raise SingularityError(f"1 + 4z^2 = {d} is too close to 0 (z = {z})")
    root = cmath.sqrt(d)
    envelope = cexp(4.0 * z * z * x * x / d)
    return z, x, root, envelope


def k2010_closed(z: complex, x: float) -> complex:
    """``(1 + 4z^2)^{-1/2} exp(4 z^2 x^2 / (1 + 4z^2))``."""
    z, x, root, envelope = _pieces(z, x)
    return check_finite(envelope / root, "K(2,0,1,0)")


def k2110_closed(z: complex, x: float) -> complex:
    """``2zx (1 + 4z^2)^{-3/2} exp(4 z^2 x^2 / (1 + 4z^2))``."""
    z, x, root, envelope = _pieces(z, x)
    return check_finite(2.0 * z * x * envelope / root ** 3, "K(2,1,1,0)")


def k_combined_closed(z: complex, x: float) -> complex:
    """``(1 + 2zx + 4z^2) (1 + 4z^2)^{-3/2} exp(4 z^2 x^2 / (1 + 4z^2))``."""
    z, x, root, envelope = _pieces(z, x)
    return check_finite((1.0 + 2.0 * z * x + 4.0 * z * z) * envelope / root ** 3,
                        "combined K sum")


CLOSED = {"even": k2010_closed, "odd": k2110_closed, "combined": k_combined_closed}


def k_closed(variant: str, z: complex, x: float) -> complex:
    if variant not in CLOSED:
        raise DomainError(f"variant must be one of {VARIANTS}, got {variant!r}")
    return CLOSED[variant](z, x)


def k_series(variant: str, z: complex, x: float,
             control: SeriesControl = DEFAULT_CONTROL) -> tuple[complex, int]:
    """Truncated defining series; returns ``(value, terms_used)``.

    All three variants read the terms ``z^m H_m(x) / floor(m/2)!``: the even
    variant keeps even ``m``, the odd one odd ``m``, the combined one all.
    """
    if variant not in CLOSED:
        raise DomainError(f"variant must be one of {VARIANTS}, got {variant!r}")
    z = as_complex(z, "z")
    x = as_real(x, "x")
    if abs(z) > SERIES_RADIUS:
        raise DomainError(f"series oracle is gated at |z| <= {SERIES_RADIUS}, got |z| = {abs(z)}")
    terms = iter_floor_scaled_terms(x, z)
    if variant == "even":
        terms = itertools.islice(terms, 0, None, 2)
    elif variant == "odd":
        terms = itertools.islice(terms, 1, None, 2)
    return sum_series(terms, control)
