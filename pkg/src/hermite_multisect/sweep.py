"""
Closed-form versus series sweeps over parameter grids.

Each family pairs a closed-form evaluator with its series oracle:

    S           multisected exponential sums
    G           generalized Hermite generating functions
    K-even      sum z^{2n} H_{2n}(x) / n!
    K-odd       sum z^{2n+1} H_{2n+1}(x) / n!
    K-combined  sum z^n H_n(x) / floor(n/2)!
    I           exp[(a d/dx)^j] g(x): quadrature against the derivative series

For ``I`` the ``z`` column carries the (real) operator scale ``a``, and the
test function and rule order are fixed for the whole sweep.

Errors are reported as ``rel_err = abs_err / (1 + |closed|)``, which is the
relative error for large values and the absolute error near zero.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .core import DEFAULT_CONTROL, SeriesControl, VerifyReport
from .errors import DomainError, HermiteMultisectError, TruncationError
from .expsums import MultisectIndex, s_closed, s_series
from .genfun import g_closed, g_series
from .operators import (TestFunction, i2_quadrature, ij_quadrature,
                        ij_series_terms, shift_apply)
from .squeezed import k_closed, k_series

FAMILIES = ("S", "G", "K-even", "K-odd", "K-combined", "I")
TOLERANCES = {"S": 1e-11, "G": 1e-9, "K-even": 1e-9, "K-odd": 1e-9,
              "K-combined": 1e-9, "I": 1e-8}
FIELDS = ("family", "j", "k", "z_re", "z_im", "x", "closed_re", "closed_im",
          "series_re", "series_im", "abs_err", "rel_err", "terms_used",
          "t_closed_ns", "t_series_ns")
TIMING_FIELDS = ("t_closed_ns", "t_series_ns")
THREADS_ENV = "HERMITE_MULTISECT_THREADS"

K_VARIANT = {"K-even": ("even", 2, 0), "K-odd": ("odd", 2, 1), "K-combined": ("combined", 1, 0)}
DEFAULT_POLY = TestFunction.polynomial([0.5, -1.0, 0.25, 2.0, -0.75, 0.1, 1.0, -0.3, 0.2])
DEFAULT_RULE_ORDER = 40


@dataclass
class OutputRecord:
    family: str
    j: int
    k: int
    z: complex
    x: float | None
    closed: complex
    series: complex
    terms_used: int
    t_closed_ns: int = 0
    t_series_ns: int = 0

    @property
    def abs_err(self) -> float:
        return abs(self.closed - self.series)

    @property
    def rel_err(self) -> float:
        return self.abs_err / (1.0 + abs(self.closed))

    def to_dict(self) -> dict:
        return {
            "family": self.family, "j": self.j, "k": self.k,
            "z_re": self.z.real, "z_im": self.z.imag, "x": self.x,
            "closed_re": self.closed.real, "closed_im": self.closed.imag,
            "series_re": self.series.real, "series_im": self.series.imag,
            "abs_err": self.abs_err, "rel_err": self.rel_err,
            "terms_used": self.terms_used,
            "t_closed_ns": self.t_closed_ns, "t_series_ns": self.t_series_ns,
        }


@dataclass
class SweepSpec:
    family: str
    js: list[int] = field(default_factory=list)
    ks: list[int] | None = None  # None: family default per j
    zs: list[complex] = field(default_factory=list)
    xs: list[float | None] = field(default_factory=list)
    control: SeriesControl = DEFAULT_CONTROL
    fn: TestFunction = DEFAULT_POLY
    rule_order: int = DEFAULT_RULE_ORDER

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        defaults = default_spec(self.family, self.fn) if not (self.js and self.zs and self.xs) else None
        if not self.js:
            self.js = defaults.js
        if not self.zs:
            self.zs = defaults.zs
        if not self.xs:
            self.xs = defaults.xs
        if self.family == "S":
            self.xs = [None]

    def ks_for(self, j: int) -> list[int]:
        if self.ks is not None:
            return list(self.ks)
        if self.family == "S":
            return list(range(0, j + 3))
        if self.family == "G":
            return list(range(0, j + 2))
        return [0]

    def points(self) -> list[tuple[int, int, complex, float | None]]:
        """Grid points in deterministic order (j, k, z, x)."""
        if self.family.startswith("K"):
            _, j, k = K_VARIANT[self.family]
            return [(j, k, z, x) for z in self.zs for x in self.xs]
        return [(j, k, z, x) for j in self.js for k in self.ks_for(j)
                for z in self.zs for x in self.xs]


def default_spec(family: str, fn: TestFunction | None = None) -> SweepSpec:
    """The validation grid each family is held to by default."""
    if family == "S":
        vals = (-3, -1, 0, 1, 3)
        return SweepSpec("S", js=list(range(1, 7)),
                         zs=[complex(a, b) for a in vals for b in vals], xs=[None])
    if family == "G":
        zs = [0.3, -0.3, 0.9, -0.9, 1.5, -1.5, 0.5j, 1 + 0.5j, 1 - 0.5j]
        return SweepSpec("G", js=list(range(1, 6)), zs=[complex(z) for z in zs],
                         xs=[-3.0, -1.0, 0.0, 0.7, 2.5])
    if family.startswith("K"):
        phases = (1, 1j, (1 + 1j) / math.sqrt(2))
        return SweepSpec(family, js=[K_VARIANT[family][1]],
                         zs=[r * p for r in (0.05, 0.15, 0.25, 0.35) for p in phases],
                         xs=[-2.0, -0.5, 0.0, 1.0, 2.5])
    if family == "I":
        fn = fn or DEFAULT_POLY
        if fn.kind == "gaussian":
            return SweepSpec("I", js=[2], zs=[0.1 + 0j, 0.2 + 0j, 0.3 + 0j, 0.4 + 0j],
                             xs=[-2.0, 0.0, 1.5], fn=fn)
        return SweepSpec("I", js=[2, 3], zs=[0.1 + 0j, 0.4 + 0j, 0.8 + 0j],
                         xs=[-2.0, 0.0, 1.5], fn=fn)
    raise DomainError(f"unknown family {family!r}")


def evaluate_point(family: str, j: int, k: int, z: complex, x: float | None,
                   control: SeriesControl = DEFAULT_CONTROL,
                   fn: TestFunction = DEFAULT_POLY,
                   rule_order: int = DEFAULT_RULE_ORDER) -> OutputRecord:
    """Evaluate both routes at one grid point, timing each."""
    if family == "S":
        idx = MultisectIndex(j, k)
        closed_fn = lambda: s_closed(idx, z)
        series_fn = lambda: s_series(idx, z, control)
    elif family == "G":
        idx = MultisectIndex(j, k)
        closed_fn = lambda: g_closed(idx, z, x)
        series_fn = lambda: g_series(idx, z, x, control)
    elif family in K_VARIANT:
        variant = K_VARIANT[family][0]
        closed_fn = lambda: k_closed(variant, z, x)
        series_fn = lambda: k_series(variant, z, x, control)
    elif family == "I":
        if z.imag != 0 and j > 1:
            raise DomainError(f"operator scale a must be real for j > 1, got {z}")
        a = z if j == 1 else z.real
        if j == 1:
            closed_fn = lambda: shift_apply(fn, a, x)
        elif j == 2:
            closed_fn = lambda: i2_quadrature(fn, a, x, rule_order)
        else:
            closed_fn = lambda: ij_quadrature(fn, j, a, x, rule_order)
        series_fn = lambda: ij_series_terms(fn, j, a, x, control)
    else:
        raise DomainError(f"unknown family {family!r}")

    t0 = time.perf_counter_ns()
    series, terms = series_fn()
    t1 = time.perf_counter_ns()
    closed = closed_fn()
    t2 = time.perf_counter_ns()
    return OutputRecord(family, j, k, complex(z), x, complex(closed), complex(series),
                        terms, t_closed_ns=t2 - t1, t_series_ns=t1 - t0)


class SweepError(HermiteMultisectError):
    """A grid point failed; ``point`` names it and ``cause`` is the original error."""

    def __init__(self, family, point, cause):
        j, k, z, x = point
        super().__init__(f"{family} failed at j={j}, k={k}, z={z}, x={x}: {cause}")
        self.point = point
        self.cause = cause


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV, "1").strip() or "1"
    try:
        n = int(raw)
    except ValueError as exc:
        raise DomainError(f"{THREADS_ENV} must be an integer, got {raw!r}") from exc
    if n < 0:
        raise DomainError(f"{THREADS_ENV} must be >= 0, got {n}")
    return n if n > 0 else (os.cpu_count() or 1)


def run_sweep(spec: SweepSpec, threads: int | None = None) -> list[OutputRecord]:
    """Evaluate every grid point; records come back in grid order."""
    points = spec.points()

    def one(point):
        try:
            return evaluate_point(spec.family, *point, control=spec.control,
                                  fn=spec.fn, rule_order=spec.rule_order)
        except HermiteMultisectError as exc:
            raise SweepError(spec.family, point, exc) from exc

    threads = thread_count() if threads is None else threads
    if threads <= 1:
        return [one(p) for p in points]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(one, points))


def summarize(family: str, records: list[OutputRecord], tolerance: float | None = None,
              fn: TestFunction | None = None) -> VerifyReport:
    tolerance = TOLERANCES[family] if tolerance is None else tolerance
    worst = max(records, key=lambda r: r.rel_err)
    params = {"j": worst.j, "k": worst.k, "z_re": worst.z.real, "z_im": worst.z.imag,
              "x": worst.x}
    if family == "I" and fn is not None:
        params["fn"] = fn.describe()
    max_rel = worst.rel_err
    return VerifyReport(
        family=family, grid_size=len(records),
        max_abs_err=max(r.abs_err for r in records), max_rel_err=max_rel,
        argmax_params=params, terms_used_max=max(r.terms_used for r in records),
        tolerance=tolerance, passed=bool(max_rel <= tolerance),
    )


def verify(spec: SweepSpec, tolerance: float | None = None,
           threads: int | None = None) -> VerifyReport:
    """Sweep ``spec`` and condense it into a :class:`VerifyReport`."""
    return summarize(spec.family, run_sweep(spec, threads), tolerance, spec.fn)


def default_suite() -> list[SweepSpec]:
    """Every family at its default grid, plus the Gaussian I_2 sweep."""
    specs = [default_spec(f) for f in FAMILIES]
    specs.append(default_spec("I", TestFunction.gaussian(1.0)))
    return specs


# -- serialization ------------------------------------------------------------

def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def records_to_csv(records: list[OutputRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS)
    for rec in records:
        d = rec.to_dict()
        writer.writerow([_fmt(d[f]) for f in FIELDS])
    return buf.getvalue()


def records_to_jsonl(records: list[OutputRecord]) -> str:
    return "".join(json.dumps(rec.to_dict()) + "\n" for rec in records)
