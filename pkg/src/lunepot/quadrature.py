"""Independent numerical ground truth via adaptive quadrature.

The closed forms are validated against adaptive panel bisection with an
embedded 15/7-point Gauss-Kronrod pair: ``quad_wedge`` integrates the
wedge integrand s^2*(log s^2 - 1)/(8*pi) over the polar angle,
``quad_lune`` assembles the full potential (circular sector done
analytically, wedge numerically), and ``quad_cos_log`` checks the
cosine-log primitive.  ``quad_lune_tensor`` is a deliberately slow fully
2D cross-check of the oracle itself.

The error estimate is the summed |high - low| over panels; panels adjacent
to integrable log endpoints are simply bisected until the pair agrees.
"""

from __future__ import annotations

import heapq
import math
import warnings
from dataclasses import dataclass
from typing import Callable

from ._backend import cos_log_panel, wedge_panel
from .errors import DomainError, QuadratureWarning
from .geometry import OverlapQuery, Regime, angular_region, classify_regime, intersection_angle

PI = math.pi
EIGHT_PI = 8.0 * PI

MIN_TOL = 1e-13
DEFAULT_BUDGET = 10_000

__all__ = [
    "QuadResult",
    "adaptive_quad",
    "quad_wedge",
    "quad_lune",
    "quad_cos_log",
    "quad_lune_tensor",
]


@dataclass(frozen=True)
class QuadResult:
    """Value of an adaptive quadrature with its error estimate, the number
    of panels evaluated, and whether the tolerance was reached."""

    value: float
    err_estimate: float
    subdivisions: int
    converged: bool = True


def _check_tol(tol: float) -> None:
    if not tol >= MIN_TOL:
        raise DomainError(f"tolerance must be >= {MIN_TOL}, got {tol}")


def _run_adaptive(
    panel: Callable[[float, float], tuple[float, float]],
    intervals: list[tuple[float, float, float]],
    tol: float,
    budget: int,
) -> QuadResult:
    # intervals carry a +/-1 weight so region parts bounded from below by
    # the unit circle can subtract
    heap: list[tuple[float, int, float, float, float, float]] = []
    seq = 0
    total = 0.0
    err = 0.0
    count = 0
    for lo, hi, w in intervals:
        if hi <= lo:
            continue
        k, g = panel(lo, hi)
        e = abs(k - g)
        heapq.heappush(heap, (-e, seq, lo, hi, w, w * k))
        seq += 1
        total += w * k
        err += e
        count += 1
    if count == 0:
        return QuadResult(0.0, 0.0, 1, True)
    while err > tol and count < budget:
        neg_e, _, lo, hi, w, wk_old = heapq.heappop(heap)
        err += neg_e  # remove this panel's error
        total -= wk_old
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            # interval at floating-point resolution; keep the estimate
            total += wk_old
            err -= neg_e
            break
        for a, b in ((lo, mid), (mid, hi)):
            k, g = panel(a, b)
            e = abs(k - g)
            heapq.heappush(heap, (-e, seq, a, b, w, w * k))
            seq += 1
            total += w * k
            err += e
        count += 1
    converged = err <= tol
    if not converged:
        warnings.warn(
            f"quadrature stopped at {count} panels with error estimate {err:.3e} > {tol:.3e}",
            QuadratureWarning,
            stacklevel=3,
        )
    return QuadResult(total, err, count, converged)


def adaptive_quad(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-12,
    budget: int = DEFAULT_BUDGET,
) -> QuadResult:
    """Adaptive Gauss-Kronrod 15/7 quadrature of a scalar callable."""
    _check_tol(tol)
    from ._kernels_py import _WG, _WG_C, _WGK, _WGK_C, _XGK

    def panel(a: float, b: float) -> tuple[float, float]:
        c = 0.5 * (a + b)
        h = 0.5 * (b - a)
        fc = f(c)
        k = _WGK_C * fc
        g = _WG_C * fc
        for i in range(7):
            fp = f(c + h * _XGK[i])
            fm = f(c - h * _XGK[i])
            k += _WGK[i] * (fp + fm)
            if i & 1:
                g += _WG[(i - 1) >> 1] * (fp + fm)
        return k * h, g * h

    return _run_adaptive(panel, [(lo, hi, 1.0)], tol, budget)


def _wedge_intervals(q: OverlapQuery) -> list[tuple[float, float, float]]:
    # Angular intervals beyond pi mirror the lower edge of the region,
    # where the chord radius marks the inner boundary of the lune: those
    # parts subtract from the sector rather than add.
    if q.a < 1.0:
        return [(0.0, intersection_angle(q), 1.0)]
    return [(lo, hi, -1.0 if lo >= PI else 1.0) for lo, hi in angular_region(q)]


def _quad_wedge_raw(q: OverlapQuery, tol: float, budget: int) -> QuadResult:
    if q.a < 1.0 - q.eps - 1e-12 or q.a > 1.0 + q.eps + 1e-12:
        raise DomainError(f"a = {q.a} outside the overlap band for eps = {q.eps}")
    a = q.a

    def panel(lo: float, hi: float) -> tuple[float, float]:
        return wedge_panel(a, lo, hi)

    raw = _run_adaptive(panel, _wedge_intervals(q), tol * EIGHT_PI, budget)
    return QuadResult(
        raw.value / EIGHT_PI, raw.err_estimate / EIGHT_PI, raw.subdivisions, raw.converged
    )


def quad_wedge(q: OverlapQuery, tol: float = 1e-12, budget: int = DEFAULT_BUDGET) -> QuadResult:
    """Wedge term by adaptive quadrature of s^2*(log s^2 - 1)/(8*pi) over
    the polar angle: [0, phi] for a <= 1, the angular region beyond."""
    _check_tol(tol)
    return _quad_wedge_raw(q, tol, budget)


def quad_lune(q: OverlapQuery, tol: float = 1e-12, budget: int = DEFAULT_BUDGET) -> QuadResult:
    """Overlap potential with the circular sector done analytically and the
    wedge part integrated numerically; nested and separated regimes are
    closed-form."""
    _check_tol(tol)
    e = q.eps
    e2 = e * e
    regime = classify_regime(q)
    if regime is Regime.NESTED:
        return QuadResult(0.25 * e2 * (math.log(e2) - 1.0), 0.0, 1, True)
    if regime is Regime.OUTSIDE:
        return QuadResult(0.0, 0.0, 1, True)
    phi = intersection_angle(q)
    sector = (PI - phi) * e2 * (math.log(e2) - 1.0) / (4.0 * PI)
    wedge = _quad_wedge_raw(q, 0.5 * tol, budget)
    return QuadResult(
        sector + 2.0 * wedge.value,
        2.0 * wedge.err_estimate,
        wedge.subdivisions,
        wedge.converged,
    )


def quad_cos_log(
    a: float, phi: float, tol: float = 1e-12, budget: int = DEFAULT_BUDGET
) -> QuadResult:
    """Adaptive quadrature of -(1 - a*cos u)*(log(1 + a^2 - 2a*cos u) - 1)
    from 0 to phi, for a in (0, 1]."""
    _check_tol(tol)
    if not 0.0 < a <= 1.0:
        raise DomainError(f"modulus must lie in (0, 1], got {a}")
    if not 0.0 <= phi <= PI + 1e-12:
        raise DomainError(f"angle {phi} outside [0, pi]")

    def panel(lo: float, hi: float) -> tuple[float, float]:
        return cos_log_panel(a, lo, hi)

    return _run_adaptive(panel, [(0.0, phi, 1.0)], tol, budget)


def _radial_piece(lower: float, upper: float, tol: float) -> float:
    # integral of r*log(r^2)/(4*pi) over [lower, upper], done numerically
    # for the honest 2D cross-check (the integrable endpoint at zero needs
    # refinement)
    if upper <= lower:
        return 0.0

    def f(r: float) -> float:
        if r <= 0.0:
            return 0.0
        return r * math.log(r * r) / (4.0 * PI)

    return adaptive_quad(f, lower, upper, tol).value


def quad_lune_tensor(q: OverlapQuery, tol: float = 1e-9) -> QuadResult:
    """Fully 2D (radial-inside-angular) quadrature over the raw region
    description: at each polar angle the radial run inside both discs,
    integrated numerically, doubled for the lower half.

    Slow spot-check of the primary oracle; independent of every reduction
    used elsewhere.
    """
    regime = classify_regime(q)
    e = q.eps
    a = q.a
    if regime is Regime.OUTSIDE:
        return QuadResult(0.0, 0.0, 1, True)

    def f_theta(theta: float) -> float:
        st = a * math.sin(theta)
        disc = 1.0 - st * st
        if disc < 0.0:
            return 0.0
        root = math.sqrt(disc)
        base = -a * math.cos(theta)
        lo = max(base - root, 0.0)
        hi = min(base + root, e)
        return _radial_piece(lo, hi, 0.05 * tol)

    half = adaptive_quad(f_theta, 0.0, PI, 0.5 * tol, budget=4000)
    return QuadResult(
        2.0 * half.value,
        2.0 * half.err_estimate,
        half.subdivisions,
        half.converged,
    )
