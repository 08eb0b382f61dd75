"""
Multisected exponential sums ``S(j, k; z) = sum_n z**(jn+k) / (jn+k)!``.

The closed form averages ``exp(z * w) / w**k`` over the j-th roots of
unity ``w``.  That average keeps every power ``z**m`` with ``m = k (mod j)``,
including ``m < k``, so for ``k >= j`` the finitely many head terms are
subtracted to recover the series as defined.  With this convention
``S(j, k; 0) = [k == 0]`` and ``d/dz S(j, k) = S(j, k - 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import (DEFAULT_CONTROL, SeriesControl, as_complex, cexp, check_finite,
                   root_power, roots_of_unity, sum_series)
from .errors import DomainError


@dataclass(frozen=True)
class MultisectIndex:
    """Stride ``j >= 1`` and offset ``k >= 0`` of a multisected series."""

    j: int
    k: int

    def __post_init__(self):
        for name in ("j", "k"):
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v:
                raise DomainError(f"{name} must be an integer, got {v!r}")
            object.__setattr__(self, name, int(v))
        if self.j < 1:
            raise DomainError(f"j must be >= 1, got {self.j}")
        if self.k < 0:
            raise DomainError(f"k must be >= 0, got {self.k}")

    @property
    def residue(self) -> int:
        return self.k % self.j

    def head_indices(self) -> range:
        """Powers ``m = k (mod j)`` with ``0 <= m < k``: the head correction."""
        return range(self.residue, self.k, self.j)


def _index(idx, k=None) -> MultisectIndex:
    if isinstance(idx, MultisectIndex):
        return idx
    if k is None:
        j, k = idx
        return MultisectIndex(j, k)
    return MultisectIndex(idx, k)


def _exp_head(idx: MultisectIndex, z: complex) -> complex:
    total = 0j
    term = 1 + 0j  # z**m / m!
    m = 0
    for target in idx.head_indices():
        while m < target:
            m += 1
            term = term * z / m
        total += term
    return total


def s_closed(idx: MultisectIndex, z: complex) -> complex:
    """Closed form of ``S(j, k; z)`` via the roots-of-unity average."""
    idx = _index(idx)
    z = as_complex(z)
    j, k = idx.j, idx.k
    omegas = roots_of_unity(j)
    total = sum(cexp(z * w) * root_power(j, l, -k)
                for l, w in enumerate(omegas, start=1))
    value = total / j - _exp_head(idx, z)
    return check_finite(value, f"S({j},{k})")


def iter_s_terms(idx: MultisectIndex, z: complex) -> Iterator[complex]:
    """Nonzero-index terms ``z**(jn+k) / (jn+k)!`` for ``n = 0, 1, ...``."""
    idx = _index(idx)
    z = as_complex(z)
    j, k = idx.j, idx.k
    term = 1 + 0j
    for i in range(1, k + 1):
        term = term * z / i
    zj = z ** j
    n = 0
    while True:
        yield term
        base = j * n + k
        denom = 1.0
        for i in range(1, j + 1):
            denom *= base + i
        term = term * zj / denom
        n += 1


def s_series(idx: MultisectIndex, z: complex,
             control: SeriesControl = DEFAULT_CONTROL) -> tuple[complex, int]:
    """Truncated defining series of ``S(j, k; z)``; returns ``(value, terms_used)``."""
    return sum_series(iter_s_terms(idx, z), control)


def s_derivative(idx: MultisectIndex, z: complex) -> complex:
    """Analytic ``d/dz S(j, k; z)`` from term-by-term differentiation.

    ``d/dz [exp(z w) / w**k] = exp(z w) * w / w**k``; the head polynomial is
    differentiated monomial by monomial.
    """
    idx = _index(idx)
    z = as_complex(z)
    j, k = idx.j, idx.k
    total = sum(cexp(z * w) * w * root_power(j, l, -k)
                for l, w in enumerate(roots_of_unity(j), start=1))
    head = 0j
    term = 1 + 0j  # z**(m-1) / (m-1)!
    m = 1
    for target in idx.head_indices():
        if target == 0:
            continue
        while m < target:
            term = term * z / m
            m += 1
        head += term
    return check_finite(total / j - head, f"dS({j},{k})/dz")


def s_derivative_check(idx: MultisectIndex, z: complex) -> float:
    """``|d/dz S(j, k) - S(j, k-1)|`` at ``z``; requires ``k >= 1``."""
    idx = _index(idx)
    if idx.k == 0:
        raise DomainError("derivative relation starts at k = 1")
    lower = MultisectIndex(idx.j, idx.k - 1)
    return abs(s_derivative(idx, z) - s_closed(lower, z))
