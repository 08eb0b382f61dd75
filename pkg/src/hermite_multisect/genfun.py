"""
Generalized Hermite generating functions

    G(j, k; z, x) = sum_n z**(jn+k) H_{jn+k}(x) / (jn+k)!

evaluated in closed form as a roots-of-unity average of shifted ordinary
generating functions, with a truncated Hermite series as the oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .core import (DEFAULT_CONTROL, SeriesControl, as_complex, as_real, cexp,
                   check_finite, root_power, roots_of_unity, sum_series)
from .errors import DomainError
from .expsums import MultisectIndex, _index
from .hermite import iter_scaled_terms

ARG_LIMIT = 10.0


@dataclass(frozen=True)
class GenFunPoint:
    idx: MultisectIndex
    z: complex
    x: float

    def __post_init__(self):
        object.__setattr__(self, "idx", _index(self.idx))
        object.__setattr__(self, "z", as_complex(self.z, "z"))
        object.__setattr__(self, "x", as_real(self.x, "x"))


def _check_args(z, x) -> tuple[complex, float]:
    z = as_complex(z, "z")
    x = as_real(x, "x")
    if abs(z) > ARG_LIMIT or abs(x) > ARG_LIMIT:
        raise DomainError(f"need |z| <= {ARG_LIMIT} and |x| <= {ARG_LIMIT}, got z={z}, x={x}")
    return z, x


def _hermite_head(idx: MultisectIndex, z: complex, x: float) -> complex:
    heads = set(idx.head_indices())
    if not heads:
        return 0j
    terms = itertools.islice(iter_scaled_terms(x, z), idx.k)
    return sum((p for m, p in enumerate(terms) if m in heads), 0j)


def g_closed(idx: MultisectIndex, z: complex, x: float) -> complex:
    """Closed form of ``G(j, k; z, x)``.

    Each root ``w`` contributes ``exp(-z^2 w^2) exp(2xz w) / w^k``; for
    ``k >= j`` the head ``sum_{m = k mod j, m < k} z^m H_m(x)/m!`` is removed.
    """
    idx = _index(idx)
    z, x = _check_args(z, x)
    j, k = idx.j, idx.k
    z2 = z * z
    total = 0j
    for l, w in enumerate(roots_of_unity(j), start=1):
        total += (cexp(-z2 * root_power(j, l, 2)) * cexp(2.0 * x * z * w)
                  * root_power(j, l, -k))
    value = total / j - _hermite_head(idx, z, x)
    return check_finite(value, f"G({j},{k})")


def iter_g_terms(idx: MultisectIndex, z: complex, x: float) -> Iterator[complex]:
    """Every ``j``-th scaled Hermite term, starting at index ``k``."""
    idx = _index(idx)
    return itertools.islice(iter_scaled_terms(x, z), idx.k, None, idx.j)


def g_series(idx: MultisectIndex, z: complex, x: float,
             control: SeriesControl = DEFAULT_CONTROL) -> tuple[complex, int]:
    """Truncated defining series of ``G(j, k; z, x)``; returns ``(value, terms_used)``."""
    z, x = _check_args(z, x)
    return sum_series(iter_g_terms(idx, z, x), control)


def g_shifted_gaussian(idx: MultisectIndex, z: complex, x: float) -> complex:
    """``G(j, k)`` as ``exp(x^2)`` times an average of shifted Gaussians.

    Expanding ``H_n`` by the Rodrigues formula turns the series into
    ``exp(-z w d/dx)`` acting on ``exp(-x^2)``, i.e. ``exp(-(x - z w)^2)``.
    Only valid for ``0 <= k <= j - 1``.
    """
    idx = _index(idx)
    if idx.k >= idx.j:
        raise DomainError(f"shifted-Gaussian form needs k < j, got j={idx.j}, k={idx.k}")
    z, x = _check_args(z, x)
    j, k = idx.j, idx.k
    total = sum(cexp(-(x - z * w) ** 2) * root_power(j, l, -k)
                for l, w in enumerate(roots_of_unity(j), start=1))
    return check_finite(cexp(x * x) * total / j, f"G({j},{k}) shifted form")


def g_rodrigues_check(idx: MultisectIndex, z: complex, x: float) -> float:
    """Absolute difference between the shifted-Gaussian and closed forms."""
    return abs(g_shifted_gaussian(idx, z, x) - g_closed(idx, z, x))
