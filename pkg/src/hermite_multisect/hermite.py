"""
Physicists' Hermite polynomials and the scaled series terms built from them.

Generating-function terms ``z**m * H_m(x) / m!`` are produced by a joint
recurrence instead of multiplying ``H_m``, ``z**m`` and ``1/m!``; the
factorial alone overflows near ``m = 170`` even when the term is O(1).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterator

from .core import as_complex, as_real
from .errors import DomainError, NumericalOverflowError

MAX_DEGREE = 400
MAX_SCALED_INDEX = 2000


@dataclass(frozen=True)
class HermiteSequence:
    x: float
    values: tuple[float, ...]

    def residuals(self) -> list[float]:
        """Three-term recurrence residuals relative to ``max(1, |H_{m+1}|)``."""
        h, x = self.values, self.x
        return [
            abs(h[m + 1] - 2 * x * h[m] + 2 * m * h[m - 1]) / max(1.0, abs(h[m + 1]))
            for m in range(1, len(h) - 1)
        ]


def _check_degree(n, limit: int, name: str = "n") -> int:
    if isinstance(n, bool) or int(n) != n:
        raise DomainError(f"{name} must be an integer, got {n!r}")
    n = int(n)
    if not 0 <= n <= limit:
        raise DomainError(f"{name} must lie in [0, {limit}], got {n}")
    return n


def hermite_sequence(n: int, x: float) -> HermiteSequence:
    """``H_0(x), ..., H_n(x)`` by upward recurrence."""
    n = _check_degree(n, MAX_DEGREE)
    x = as_real(x)
    values = [1.0]
    if n >= 1:
        values.append(2.0 * x)
    for m in range(1, n):
        nxt = 2.0 * x * values[m] - 2.0 * m * values[m - 1]
        if not math.isfinite(nxt):
            raise NumericalOverflowError(f"H_{m + 1}({x}) overflows double precision")
        values.append(nxt)
    return HermiteSequence(x=x, values=tuple(values))


def hermite_eval(n: int, x: float) -> float:
    """Physicists' Hermite polynomial ``H_n(x)`` (``H_1 = 2x``)."""
    return hermite_sequence(n, x).values[-1]


def iter_scaled_terms(x: float, z: complex) -> Iterator[complex]:
    """Yield ``p_m = z**m * H_m(x) / m!`` for ``m = 0, 1, 2, ...`` forever.

    Uses ``p_{m+1} = (2xz p_m - 2z^2 p_{m-1}) / (m+1)``.
    """
    x = as_real(x)
    z = as_complex(z)
    twoxz = 2.0 * x * z
    twoz2 = 2.0 * z * z
    prev, cur = 0j, 1 + 0j
    m = 0
    while True:
        yield cur
        prev, cur = cur, (twoxz * cur - twoz2 * prev) / (m + 1)
        m += 1
        if not cmath.isfinite(cur):
            raise NumericalOverflowError(f"scaled Hermite term p_{m} is not finite")


def iter_floor_scaled_terms(x: float, z: complex) -> Iterator[complex]:
    """Yield ``v_m = z**m * H_m(x) / floor(m/2)!`` for ``m = 0, 1, 2, ...``.

    Same three-term structure as :func:`iter_scaled_terms`, with the
    factorial ratio ``floor(m/2)! / floor((m+1)/2)!`` applied at odd ``m``.
    """
    x = as_real(x)
    z = as_complex(z)
    twoxz = 2.0 * x * z
    z2 = z * z
    prev, cur = 0j, 1 + 0j
    m = 0
    while True:
        yield cur
        half_next = (m + 1) // 2
        lead = twoxz * cur if m % 2 == 0 else twoxz * cur / (m // 2 + 1)
        tail = (2.0 * m * z2 / half_next) * prev if m else 0j
        prev, cur = cur, lead - tail
        m += 1
        if not cmath.isfinite(cur):
            raise NumericalOverflowError(f"scaled Hermite term v_{m} is not finite")


def scaled_term_sequence(x: float, z: complex, m_max: int) -> list[complex]:
    """``[p_0, ..., p_{m_max}]`` with ``p_m = z**m * H_m(x) / m!``."""
    m_max = _check_degree(m_max, MAX_SCALED_INDEX, "m_max")
    it = iter_scaled_terms(x, z)
    return [next(it) for _ in range(m_max + 1)]


def floor_scaled_term_sequence(x: float, z: complex, m_max: int) -> list[complex]:
    """``[v_0, ..., v_{m_max}]`` with ``v_m = z**m * H_m(x) / floor(m/2)!``."""
    m_max = _check_degree(m_max, MAX_SCALED_INDEX, "m_max")
    it = iter_floor_scaled_terms(x, z)
    return [next(it) for _ in range(m_max + 1)]
