"""
The operators ``I_j = exp[(a d/dx)^j]`` acting on a closed family of entire
test functions.

Two independent routes are provided:

* ``ij_series`` sums ``a^{jn} g^{(jn)}(x) / n!`` from exact derivatives;
* ``i2_quadrature`` / ``ij_quadrature`` evaluate the integral
  representations obtained by writing ``1/n!`` through Gamma-function
  integrals, with generalized Gauss-Laguerre rules of weight
  ``s^{-k/j} e^{-s}``.

For ``j = 1`` the operator is the shift ``g(x) -> g(x + a)``; for ``j = 2`` it
is the Weierstrass transform (a Gaussian convolution of variance ``2a^2``).
Gaussian inputs are refused for ``j >= 3``, where the derivative series
diverges, and for ``j = 2`` unless ``4 a^2 beta < 1``.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial import polynomial as P

from .core import (DEFAULT_CONTROL, SeriesControl, as_complex, as_real,
                   check_finite, gauss_hermite, gauss_laguerre, roots_of_unity,
                   sum_series)
from .errors import DivergenceError, DomainError, NumericalOverflowError
from .hermite import hermite_eval, iter_floor_scaled_terms, iter_scaled_terms

MAX_POLY_DEGREE = 32
MAX_QUADRATURE_J = 4
KINDS = ("polynomial", "exponential", "gaussian")


@dataclass(frozen=True)
class TestFunction:
    """An entire function with exact derivatives at real points.

    ``polynomial`` stores coefficients in ascending order, ``exponential``
    is ``exp(lam * x)`` and ``gaussian`` is ``exp(-beta * x**2)``.
    """

    __test__ = False  # keep pytest from collecting this class

    kind: str
    coeffs: tuple[float, ...] = ()
    lam: float = 0.0
    beta: float = 0.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown test-function kind {self.kind!r}")
        if self.kind == "polynomial":
            coeffs = tuple(float(c) for c in self.coeffs) or (0.0,)
            if len(coeffs) - 1 > MAX_POLY_DEGREE:
                raise DomainError(f"polynomial degree must be <= {MAX_POLY_DEGREE}")
            if not all(math.isfinite(c) for c in coeffs):
                raise DomainError("polynomial coefficients must be finite")
            object.__setattr__(self, "coeffs", coeffs)
        elif self.kind == "exponential":
            object.__setattr__(self, "lam", as_real(self.lam, "lam"))
        elif self.kind == "gaussian":
            beta = as_real(self.beta, "beta")
            if not beta > 0:
                raise DomainError(f"gaussian needs beta > 0, got {beta}")
            object.__setattr__(self, "beta", beta)

    @classmethod
    def polynomial(cls, coeffs) -> "TestFunction":
        return cls("polynomial", coeffs=tuple(coeffs))

    @classmethod
    def monomial(cls, degree: int) -> "TestFunction":
        return cls.polynomial([0.0] * degree + [1.0])

    @classmethod
    def exponential(cls, lam: float) -> "TestFunction":
        return cls("exponential", lam=lam)

    @classmethod
    def gaussian(cls, beta: float = 1.0) -> "TestFunction":
        return cls("gaussian", beta=beta)

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.kind == "polynomial" else None

    def __call__(self, z):
        """Evaluate at a complex scalar or array."""
        z = np.asarray(z, dtype=complex)
        if self.kind == "polynomial":
            out = P.polyval(z, np.array(self.coeffs))
        elif self.kind == "exponential":
            out = np.exp(self.lam * z)
        else:
            out = np.exp(-self.beta * z * z)
        return out[()] if out.ndim == 0 else out

    def derivative(self, n: int, x: float) -> float:
        """Exact ``n``-th derivative at real ``x``."""
        x = as_real(x)
        if self.kind == "polynomial":
            if n > self.degree:
                return 0.0
            return float(P.polyval(x, P.polyder(np.array(self.coeffs), n)))
        if self.kind == "exponential":
            return self.lam ** n * math.exp(self.lam * x)
        rb = math.sqrt(self.beta)
        return (-1) ** n * rb ** n * hermite_eval(n, rb * x) * math.exp(-self.beta * x * x)

    def describe(self) -> str:
        if self.kind == "polynomial":
            return "poly:" + ",".join(repr(c) for c in self.coeffs)
        if self.kind == "exponential":
            return f"exp:{self.lam!r}"
        return f"gauss:{self.beta!r}"

    @classmethod
    def parse(cls, text: str) -> "TestFunction":
        """Inverse of :meth:`describe`: ``poly:c0,c1,..``, ``exp:lam``, ``gauss:beta``."""
        kind, _, rest = text.partition(":")
        try:
            if kind == "poly":
                return cls.polynomial(float(c) for c in rest.split(","))
            if kind == "exp":
                return cls.exponential(float(rest))
            if kind == "gauss":
                return cls.gaussian(float(rest))
        except ValueError as exc:
            raise DomainError(f"cannot parse test function {text!r}: {exc}") from exc
        raise DomainError(f"unknown test function {text!r}; use poly:/exp:/gauss:")


@dataclass(frozen=True)
class OperatorQuery:
    """Validated arguments of ``I_j`` applied to ``fn`` at ``x``."""

    fn: TestFunction
    a: float
    x: float
    j: int

    def __post_init__(self):
        j = self.j
        if isinstance(j, bool) or int(j) != j or j < 1:
            raise DomainError(f"j must be an integer >= 1, got {j!r}")
        object.__setattr__(self, "j", int(j))
        object.__setattr__(self, "x", as_real(self.x, "x"))
        if self.j == 1:
            object.__setattr__(self, "a", as_complex(self.a, "a"))
        else:
            object.__setattr__(self, "a", as_real(self.a, "a"))
        if self.fn.kind == "gaussian":
            if self.j >= 3:
                raise DivergenceError(
                    f"I_{self.j} diverges on Gaussians: the derivative series "
                    "grows factorially for j > 2")
            if self.j == 2 and 4.0 * self.a ** 2 * self.fn.beta >= 1.0:
                raise DivergenceError(
                    f"I_2 series on gauss(beta={self.fn.beta}) needs 4a^2 beta < 1, "
                    f"got {4.0 * self.a ** 2 * self.fn.beta}")


def shift_apply(fn: TestFunction, a: complex, x: float) -> complex:
    """``exp(a d/dx) g(x) = g(x + a)``; complex ``a`` is allowed."""
    a = as_complex(a, "a")
    x = as_real(x)
    return complex(fn(x + a))


def ij_series(fn: TestFunction, j: int, a: float, x: float,
              control: SeriesControl = DEFAULT_CONTROL) -> complex:
    """``sum_n a^{jn} g^{(jn)}(x) / n!`` from exact derivatives.

    Terminates exactly for polynomials; exponentials and Gaussians are
    summed with the adaptive engine.
    """
    return ij_series_terms(fn, j, a, x, control)[0]


def ij_series_terms(fn: TestFunction, j: int, a: float, x: float,
                    control: SeriesControl = DEFAULT_CONTROL) -> tuple[complex, int]:
    """As :func:`ij_series`, also returning the number of terms summed."""
    q = OperatorQuery(fn, a, x, j)
    j, a, x = q.j, q.a, q.x
    if fn.kind == "polynomial":
        coeffs = np.array(fn.coeffs, dtype=complex)
        total = 0j
        for n in range(fn.degree // j + 1):
            deriv = P.polyval(x, P.polyder(coeffs, j * n))
            total += a ** (j * n) * deriv / math.factorial(n)
        return complex(total), fn.degree // j + 1

    if fn.kind == "exponential":
        ratio = (a * fn.lam) ** j
        base = math.exp(fn.lam * x)

        def terms():
            t = complex(base)
            for n in itertools.count():
                yield t
                t = t * ratio / (n + 1)

        return sum_series(terms(), control)

    rb = math.sqrt(fn.beta)
    envelope = math.exp(-fn.beta * x * x)
    # the envelope multiplies afterwards so the stall test sees O(1) partials
    if j == 1:
        # g^{(n)} = (-sqrt(beta))^n H_n(sqrt(beta) x) envelope
        terms = iter_scaled_terms(rb * x, -a * rb)
    else:
        # a^{2n} beta^n H_{2n}(sqrt(beta) x) / n! is the even floor-scaled term
        terms = itertools.islice(iter_floor_scaled_terms(rb * x, a * rb), 0, None, 2)
    value, used = sum_series(terms, control)
    return value * envelope, used


@lru_cache(maxsize=64)
def _laguerre(alpha: float, order: int):
    return gauss_laguerre(alpha, order)


@lru_cache(maxsize=16)
def _hermite_rule(order: int):
    return gauss_hermite(order)


def i2_quadrature(fn: TestFunction, a: float, x: float, rule_order: int = 64) -> complex:
    """``I_2`` from its Gamma-integral form

        (1 / 2 sqrt(pi)) int_0^inf ds e^{-s} s^{-1/2} [g(x + 2a sqrt(s)) + g(x - 2a sqrt(s))]

    using generalized Gauss-Laguerre with ``alpha = -1/2``.
    """
    q = OperatorQuery(fn, a, x, 2)
    if q.a == 0:
        return complex(fn(q.x))
    rule = _laguerre(-0.5, int(rule_order))
    shift = 2.0 * q.a * np.sqrt(rule.nodes)
    values = fn(q.x + shift) + fn(q.x - shift)
    value = rule.integrate(values) / (2.0 * math.sqrt(math.pi))
    return check_finite(value, "I_2 quadrature")


def i2_kernel(fn: TestFunction, a: float, x: float, rule_order: int = 64) -> complex:
    """``I_2`` as a Gaussian convolution, by Gauss-Hermite quadrature.

    ``(4 pi a^2)^{-1/2} int exp(-(y - x)^2 / 4a^2) g(y) dy`` with ``y = x + 2a t``.
    """
    q = OperatorQuery(fn, a, x, 2)
    if q.a == 0:
        return complex(fn(q.x))
    rule = _hermite_rule(int(rule_order))
    value = rule.integrate(fn(q.x + 2.0 * q.a * rule.nodes)) / math.sqrt(math.pi)
    return check_finite(value, "I_2 kernel quadrature")


def ij_quadrature(fn: TestFunction, j: int, a: float, x: float,
                  rule_order: int = 40) -> complex:
    """General ``I_j`` as a ``(j-1)``-fold Gamma-type integral.

    The integrand ``prod_k e^{-s_k} s_k^{-k/j}`` is handled by a tensor
    product of generalized Gauss-Laguerre rules; at each node the function is
    averaged over the points ``x + j a (s_1 ... s_{j-1})^{1/j} w`` for the
    j-th roots of unity ``w``, with prefactor ``(2 pi)^{-(j-1)/2} j^{-1/2}``.
    Cost grows as ``rule_order ** (j - 1)``.
    """
    q = OperatorQuery(fn, a, x, j)
    j, a, x = q.j, q.a, q.x
    if not 2 <= j <= MAX_QUADRATURE_J:
        raise DomainError(f"ij_quadrature supports 2 <= j <= {MAX_QUADRATURE_J}, got {j}")
    if fn.kind not in ("polynomial", "exponential"):
        raise DomainError(f"ij_quadrature supports polynomial/exponential inputs, got {fn.kind}")
    if a == 0:
        return complex(fn(x))
    rules = [_laguerre(-k / j, int(rule_order)) for k in range(1, j)]
    prod_nodes = np.ones(1)
    prod_weights = np.ones(1)
    for rule in rules:
        prod_nodes = np.multiply.outer(prod_nodes, rule.nodes).ravel()
        prod_weights = np.multiply.outer(prod_weights, rule.weights).ravel()
    radius = j * a * prod_nodes ** (1.0 / j)
    values = np.zeros(radius.shape, dtype=complex)
    for w in roots_of_unity(j):
        values += fn(x + radius * w)
    with np.errstate(invalid="ignore", over="ignore"):
        total = np.dot(prod_weights, values)
    prefactor = (2.0 * math.pi) ** (-(j - 1) / 2.0) / math.sqrt(j)
    value = complex(prefactor * total)
    if not cmath.isfinite(value):
        raise NumericalOverflowError(f"I_{j} quadrature sum is not finite")
    return value


def weierstrass_gaussian(beta: float, a: float, x: float) -> complex:
    """Closed form of ``I_2`` on ``exp(-beta x^2)``:
    ``(1 + 4a^2 beta)^{-1/2} exp(-beta x^2 / (1 + 4a^2 beta))``."""
    d = 1.0 + 4.0 * a * a * beta
    return complex(math.exp(-beta * x * x / d) / math.sqrt(d))
