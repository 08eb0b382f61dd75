"""
Shared numerical machinery: roots of unity and the multisection filter,
the adaptive series summation engine, and Gauss-type quadrature rules.

Complex values are plain Python ``complex`` throughout; every public
routine returns ``complex`` even when the analytic value is real.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field, asdict
from typing import Iterable

import numpy as np
from numpy.typing import NDArray
from scipy.linalg import eigh_tridiagonal

from .errors import DomainError, NumericalOverflowError, TruncationError

MAX_QUADRATURE_ORDER = 200


def as_complex(value, name: str = "z") -> complex:
    """Coerce ``value`` to a finite ``complex`` or raise :class:`DomainError`."""
    try:
        c = complex(value)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{name}={value!r} is not a number") from exc
    if not cmath.isfinite(c):
        raise DomainError(f"{name}={value!r} is not finite")
    return c


def as_real(value, name: str = "x") -> float:
    if isinstance(value, complex):
        if value.imag != 0:
            raise DomainError(f"{name}={value!r} must be real")
        value = value.real
    try:
        r = float(value)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{name}={value!r} is not a real number") from exc
    if not math.isfinite(r):
        raise DomainError(f"{name}={value!r} is not finite")
    return r


def check_finite(value: complex, what: str) -> complex:
    if not cmath.isfinite(value):
        raise NumericalOverflowError(f"non-finite result in {what}")
    return value


def cexp(w: complex) -> complex:
    """``cmath.exp`` raising :class:`NumericalOverflowError` instead of ``OverflowError``."""
    try:
        return cmath.exp(w)
    except OverflowError as exc:
        raise NumericalOverflowError(f"exp({w}) overflows double precision") from exc


def _check_order(j, name="j") -> int:
    if isinstance(j, bool) or int(j) != j:
        raise DomainError(f"{name} must be an integer, got {j!r}")
    j = int(j)
    if j < 1:
        raise DomainError(f"{name} must be >= 1, got {j}")
    return j


# -- roots of unity ---------------------------------------------------------

def _unit_phase(r: int, j: int) -> complex:
    """Return exp(2*pi*i*r/j) for 0 <= r < j, exact at quarter turns."""
    if (4 * r) % j == 0:
        return (1 + 0j, 1j, -1 + 0j, -1j)[(4 * r) // j]
    theta = 2.0 * math.pi * r / j
    return complex(math.cos(theta), math.sin(theta))


def roots_of_unity(j: int) -> list[complex]:
    """The ``j`` roots ``exp(2*pi*i*l/j)`` ordered ``l = 1, ..., j``.

    The last entry (``l = j``) is exactly ``1+0j``.
    """
    j = _check_order(j)
    return [_unit_phase(l % j, j) for l in range(1, j + 1)]


def root_power(j: int, l: int, m: int) -> complex:
    """``omega_l**m`` for ``omega_l = exp(2*pi*i*l/j)``, read from the table.

    ``m`` may be negative; reducing ``l*m`` modulo ``j`` first keeps the
    result on the unit circle to full precision.
    """
    return _unit_phase((l * m) % j, j)


def filter_weight(j: int, m: int) -> float:
    """Roots-of-unity filter ``(1/j) * sum_l exp(2*pi*i*l*m/j)``.

    Equal to exactly 1.0 when ``j`` divides ``m``; otherwise the geometric
    series cancels and the value is zero up to rounding.
    """
    j = _check_order(j)
    m = int(m)
    total = math.fsum(_unit_phase((l * m) % j, j).real for l in range(1, j + 1))
    return total / j


# -- series summation -------------------------------------------------------

@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for the series oracles.

    Summation stops once ``stall_window`` consecutive terms each satisfy
    ``|t| <= rel_tol * (1 + |partial|) + abs_tol``.
    """

    rel_tol: float = 1e-12
    abs_tol: float = 1e-300
    max_terms: int = 1000
    stall_window: int = 5

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be positive, got {self.rel_tol}")
        if not self.abs_tol >= 0:
            raise DomainError(f"abs_tol must be non-negative, got {self.abs_tol}")
        if not 1 <= self.stall_window <= self.max_terms:
            raise DomainError(
                "need max_terms >= stall_window >= 1, got "
                f"max_terms={self.max_terms}, stall_window={self.stall_window}"
            )


DEFAULT_CONTROL = SeriesControl()


def sum_series(terms: Iterable[complex], control: SeriesControl = DEFAULT_CONTROL
               ) -> tuple[complex, int]:
    """Accumulate ``terms`` until they stall, returning ``(value, terms_used)``.

    A finite iterable that runs out before the stall criterion triggers
    yields its exact (floating point) sum.

    Raises:
        TruncationError: ``control.max_terms`` terms were consumed without
            the stall criterion being met; the partial sum is attached.
        NumericalOverflowError: a term or the partial sum became non-finite.
    """
    partial = 0j
    used = 0
    quiet = 0
    for term in terms:
        term = complex(term)
        used += 1
        partial += term
        if not (cmath.isfinite(term) and cmath.isfinite(partial)):
            raise NumericalOverflowError(f"series term {used - 1} is not finite")
        if abs(term) <= control.rel_tol * (1.0 + abs(partial)) + control.abs_tol:
            quiet += 1
            if quiet >= control.stall_window:
                return partial, used
        else:
            quiet = 0
        if used >= control.max_terms:
            raise TruncationError(
                f"series did not converge within max_terms={control.max_terms}",
                partial=partial, terms_used=used,
            )
    return partial, used


# -- quadrature -------------------------------------------------------------

@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-type rule: ``integral f(s) w(s) ds ~ sum(weights * f(nodes))``."""

    nodes: NDArray[np.float64]
    weights: NDArray[np.float64]
    kind: str
    order: int
    alpha: float | None = None

    def integrate(self, values) -> complex:
        """Contract the weights against ``values`` sampled at ``nodes``."""
        return complex(np.dot(self.weights, np.asarray(values)))


def _golub_welsch(diag: NDArray, off: NDArray, b_n: float, mu0: float,
                  lo: float | None = None):
    """Nodes and weights from the Jacobi matrix of an orthonormal family.

    ``b_n`` is the recurrence coefficient one past the matrix, needed to
    step the recurrence up to the degree-``n`` polynomial.  Eigenvalues give
    first approximations to the nodes, polished by Newton steps.  Weights
    come from the Christoffel function ``mu0 / sum_k p_k(x)^2``; the running
    sum is rescaled so large nodes keep their relative accuracy (weights
    below the double range become 0).
    """
    n = len(diag)
    x = eigh_tridiagonal(diag, off, eigvals_only=True)
    beta = np.concatenate(([0.0], off, [math.sqrt(b_n)]))  # beta[k] couples p_k, p_{k-1}

    def recur(x):
        p_prev = np.zeros_like(x)
        p = np.ones_like(x)
        d_prev = np.zeros_like(x)
        d = np.zeros_like(x)
        ssum = np.zeros_like(x)
        logscale = np.zeros_like(x)
        for k in range(n):
            ssum += p * p
            b_next = beta[k + 1]
            p_new = ((x - diag[k]) * p - beta[k] * p_prev) / b_next
            d_new = (p + (x - diag[k]) * d - beta[k] * d_prev) / b_next
            p_prev, p, d_prev, d = p, p_new, d, d_new
            big = np.maximum(np.abs(p), np.abs(p_prev)) > 1e100
            if big.any():
                s = np.where(big, 1e100, 1.0)
                p_prev /= s
                p /= s
                d_prev /= s
                d /= s
                ssum /= s * s
                logscale += np.log(s)
        return p, d, ssum, logscale

    for _ in range(3):
        p, d, _, _ = recur(x)
        step = np.where(d != 0, p / np.where(d != 0, d, 1.0), 0.0)
        x = x - step
        if lo is not None:
            x = np.maximum(x, lo)
        if np.all(np.abs(step) <= 4 * np.finfo(float).eps * np.maximum(1.0, np.abs(x))):
            break
    _, _, ssum, logscale = recur(x)
    with np.errstate(under="ignore", over="ignore"):
        w = mu0 * np.exp(-2.0 * logscale - np.log(ssum))
    order = np.argsort(x)
    return x[order], w[order]


def gauss_laguerre(alpha: float, order: int) -> QuadratureRule:
    """Generalized Gauss-Laguerre rule for the weight ``s**alpha * exp(-s)``.

    Exact for polynomials of degree up to ``2*order - 1``.
    """
    alpha = float(alpha)
    if not alpha > -1.0:
        raise DomainError(f"alpha must exceed -1, got {alpha}")
    if isinstance(order, bool) or int(order) != order or not 1 <= order <= MAX_QUADRATURE_ORDER:
        raise DomainError(f"order must be an integer in [1, {MAX_QUADRATURE_ORDER}], got {order}")
    order = int(order)
    k = np.arange(order, dtype=float)
    diag = 2.0 * k + alpha + 1.0
    off = np.sqrt(k[1:] * (k[1:] + alpha))
    b_n = order * (order + alpha)
    nodes, weights = _golub_welsch(diag, off, b_n, math.gamma(alpha + 1.0), lo=0.0)
    return QuadratureRule(nodes=nodes, weights=weights, kind="generalized-laguerre",
                          order=order, alpha=alpha)


def gauss_hermite(order: int) -> QuadratureRule:
    """Gauss-Hermite rule for the weight ``exp(-t**2)`` on the real line."""
    if isinstance(order, bool) or int(order) != order or not 1 <= order <= MAX_QUADRATURE_ORDER:
        raise DomainError(f"order must be an integer in [1, {MAX_QUADRATURE_ORDER}], got {order}")
    order = int(order)
    k = np.arange(order, dtype=float)
    diag = np.zeros(order)
    off = np.sqrt(k[1:] / 2.0)
    nodes, weights = _golub_welsch(diag, off, order / 2.0, math.sqrt(math.pi))
    return QuadratureRule(nodes=nodes, weights=weights, kind="hermite", order=order)


# -- verification record ----------------------------------------------------

@dataclass
class VerifyReport:
    """Summary of a closed-form versus series sweep over a parameter grid."""

    family: str
    grid_size: int
    max_abs_err: float
    max_rel_err: float
    argmax_params: dict = field(default_factory=dict)
    terms_used_max: int = 0
    tolerance: float | None = None
    passed: bool | None = None

    def __post_init__(self):
        if self.max_abs_err < 0 or self.max_rel_err < 0:
            raise ValueError("error magnitudes must be non-negative")

    def to_dict(self) -> dict:
        return asdict(self)
