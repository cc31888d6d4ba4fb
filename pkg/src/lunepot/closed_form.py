"""Closed-form evaluation of the overlap potential.

The potential of the overlap region (lune) splits into a circular-sector
part, known in elementary terms, and a wedge part ``F`` cut by the unit
circle.  ``F`` has two exact representations: a direct one built from the
angular primitive ``angular_primitive`` (valid across the whole overlap
band), and a change-of-order one built from radial primitives (valid for
centre distances up to 1, retained purely as a cross-check because it
cancels badly).  ``lune_potential`` assembles the full piecewise result.

For centre distances up to 1 the wedge term is the primitive difference
(G(a, Phi) - G(a, pi/2))/(8*pi).  Beyond 1 the unit circle bounds the
region from below, so the roles of the limits swap and the same primitive
yields (G(a, Phi) + 2*pi*log(a))/(8*pi), with G(a, pi/2) = -2*pi*log(a)
supplied by the lower-boundary dilogarithm value.  Both expressions use
the exact reduction of the half-angle data: the cosine of the doubled
argument is (eps^2 - 1 - a^2)/(2a) and the interior logarithm is exactly
2*log(eps), which avoids the cancellation a naive chord-radius composition
would suffer at small radii.
"""

from __future__ import annotations

import enum
import math
import warnings

from ._backend import angular_primitive_core, cos_log_primitive_core, li2_parts
from .errors import AccuracyWarning, DomainError
from .geometry import (
    CLAMP_SLACK,
    OverlapQuery,
    Regime,
    classify_regime,
    intersection_angle,
)

PI = math.pi
EIGHT_PI = 8.0 * PI

__all__ = [
    "WedgeDerivation",
    "angular_primitive",
    "cos_log_primitive",
    "radial_log_primitive",
    "wedge_term",
    "wedge_term_reordered",
    "wedge_term_via",
    "lune_potential",
    "disc_potential",
]


class WedgeDerivation(enum.Enum):
    """Which exact representation produced a wedge-term value."""

    DIRECT = "DirectG"
    REORDERED = "ChangeOfOrder"


def angular_primitive(a: float, phi: float) -> float:
    """Primitive of -2*(1 + a*cos 2u)*(log(1 + a^2 + 2a*cos 2u) - 1) in u,
    normalised to vanish at u = 0, evaluated at u = phi in [0, pi/2].

    The dilogarithm term is continued through the lower half-plane, so at
    phi = pi/2 with a > 1 the value is -2*pi*log(a); for a <= 1 it is
    pi*(1 - a^2).
    """
    if a <= 0.0:
        raise DomainError(f"modulus must be positive, got {a}")
    if not -1e-12 <= phi <= 0.5 * PI + 1e-12:
        raise DomainError(f"angle {phi} outside [0, pi/2]")
    two_phi = 2.0 * phi
    c2 = math.cos(two_phi)
    s2 = math.sin(two_phi)
    if s2 < 0.0:
        s2 = 0.0
    if phi >= 0.5 * PI:
        c2, s2 = -1.0, 0.0
    arg = 1.0 + a * a + 2.0 * a * c2
    if arg < 1e-300:
        log_term = 0.0
        if s2 != 0.0:
            warnings.warn(
                f"log argument underflowed in the angular primitive at a={a}, phi={phi}",
                AccuracyWarning,
                stacklevel=2,
            )
    else:
        log_term = math.log(arg)
    return angular_primitive_core(a, c2, s2, log_term)


def cos_log_primitive(a: float, phi: float) -> float:
    """Primitive of -(1 - a*cos u)*(log(1 + a^2 - 2a*cos u) - 1) in u,
    normalised to vanish at u = 0, for a in (0, 1] and phi in [0, pi].

    Continuous limit 0 at the logarithmically singular corner a = 1,
    phi -> 0.
    """
    if not 0.0 < a <= 1.0:
        raise DomainError(f"modulus must lie in (0, 1], got {a}")
    if not -1e-12 <= phi <= PI + 1e-12:
        raise DomainError(f"angle {phi} outside [0, pi]")
    half = math.sin(0.5 * phi)
    w2 = (1.0 - a) ** 2 + 4.0 * a * half * half
    if phi != 0.0 and w2 < 1e-30:
        warnings.warn(
            f"evaluating near the singular corner a=1, phi=0 (a={a}, phi={phi})",
            AccuracyWarning,
            stacklevel=2,
        )
    return cos_log_primitive_core(a, phi)


def radial_log_primitive(a: float, r: float) -> float:
    """Primitive (in r) of arccos((1 - a^2 - r^2)/(2ar)) * r * log(r) / (2*pi),
    for a in (0, 1] and r in [1-a, 1+a], normalised to vanish at r = 1-a.
    """
    if not 0.0 < a <= 1.0:
        raise DomainError(f"modulus must lie in (0, 1], got {a}")
    if r < 1.0 - a - CLAMP_SLACK or r > 1.0 + a + CLAMP_SLACK:
        raise DomainError(f"radius {r} outside [1-a, 1+a] for a = {a}")
    # The arccos arguments hit +/-1 at the endpoints r = 1 -/+ a; evaluate
    # both angles through factored sines so endpoint roundoff is not
    # square-root amplified.
    f_lo = a + r - 1.0          # r - (1-a), >= 0 in the domain
    f_hi = 1.0 + a - r          # (1+a) - r, >= 0 in the domain
    if f_lo < 0.0:
        f_lo = 0.0
    if f_hi < 0.0:
        f_hi = 0.0
    if r <= 0.0:
        arc_term = 0.0
    else:
        ell = min(max((1.0 - a * a - r * r) / (2.0 * a * r), -1.0), 1.0)
        sin_ell = math.sqrt(f_lo * (a + r + 1.0) * (1.0 - a + r) * f_hi) / (2.0 * a * r)
        arc_term = r * r * (math.log(r * r) - 1.0) * math.atan2(sin_ell, ell)
    cos_chi = min(max((1.0 + a * a - r * r) / (2.0 * a), -1.0), 1.0)
    sin_chi = math.sqrt(f_lo * (r + 1.0 - a) * f_hi * (1.0 + a + r)) / (2.0 * a)
    chi = math.atan2(sin_chi, cos_chi)
    return (arc_term + cos_log_primitive_core(a, chi)) / EIGHT_PI


def _first_case_parts(a: float, e: float) -> tuple[float, float, float]:
    # cos/sin of the primitive argument doubled, plus the reduced interior
    # logarithm, on the branch a^2 <= 1 + e^2 (also reused for the far
    # branch, whose shifted angle reduces to the same expressions).
    c2 = (e * e - 1.0 - a * a) / (2.0 * a)
    if c2 > 1.0:
        c2 = 1.0
    elif c2 < -1.0:
        c2 = -1.0
    prod = (
        (1.0 + a - e)
        * (1.0 + a + e)
        * (a - (1.0 - e))
        * (e + (1.0 - a))
    )
    s2 = math.sqrt(prod) / (2.0 * a) if prod > 0.0 else 0.0
    return c2, s2, 2.0 * math.log(e)


def _second_case_parts(a: float, e: float) -> tuple[float, float, float]:
    # same data on the branch a^2 > 1 + e^2, where the chord radius at the
    # intersection angle is sigma = (a^2 - 1)/e
    sigma = (a - 1.0) * (a + 1.0) / e
    c2 = (sigma * sigma - 1.0 - a * a) / (2.0 * a)
    if c2 > 1.0:
        c2 = 1.0
    elif c2 < -1.0:
        c2 = -1.0
    prod = (
        (1.0 + a - sigma)
        * (1.0 + a + sigma)
        * (sigma + a - 1.0)
        * (sigma + 1.0 - a)
    )
    s2 = math.sqrt(prod) / (2.0 * a) if prod > 0.0 else 0.0
    return c2, s2, 2.0 * math.log(sigma)


def _turning_angle_primitive(a: float) -> float:
    # angular primitive at the turning half-angle (pi + 2*asin(1/a))/4,
    # where cos of the doubled argument is exactly -1/a
    q2 = (a - 1.0) * (a + 1.0)
    c2 = -1.0 / a
    s2 = math.sqrt(q2) / a
    log_term = math.log(q2) if q2 > 1e-300 else 0.0
    return angular_primitive_core(a, c2, s2, log_term)


def _wedge(a: float, e: float) -> float:
    c2, s2, lt = _first_case_parts(a, e)
    g = angular_primitive_core(a, c2, s2, lt)
    if a <= 1.0:
        return (g - (1.0 - a) * (1.0 + a) * PI) / EIGHT_PI
    return (g + 2.0 * PI * math.log(a)) / EIGHT_PI


def _wedge_branch_value(a: float, e: float) -> float:
    # Primitive-difference branch value: equals the wedge term up to the
    # unit distance, and its reflection-symmetric continuation beyond
    # (orientation of the primitive limits kept fixed instead of following
    # the region).  This is the quantity whose scaled band profile
    # collapses onto a symmetric limit curve; it does not enter the
    # potential.
    if a <= 1.0:
        return _wedge(a, e)
    x = a - 1.0
    if x * (2.0 + x) < e * e:
        c2, s2, lt = _first_case_parts(a, e)
        g = angular_primitive_core(a, c2, s2, lt)
        return (g - 2.0 * PI * math.log(a)) / EIGHT_PI - _turning_angle_primitive(a) / (
            4.0 * PI
        )
    return -_wedge(a, e)


def _require_band(q: OverlapQuery) -> None:
    if q.a < 1.0 - q.eps - CLAMP_SLACK or q.a > 1.0 + q.eps + CLAMP_SLACK:
        raise DomainError(
            f"a = {q.a} outside the overlap band [1-eps, 1+eps] for eps = {q.eps}"
        )


def wedge_term(q: OverlapQuery) -> float:
    """Wedge part of the overlap potential: the contribution of the region
    cut by the unit circle, signed so that the sector-plus-wedge assembly
    reproduces the region integral.  Vanishes at both band edges 1 +/- eps
    and is continuous across the interior thresholds.
    """
    _require_band(q)
    a = min(max(q.a, 1.0 - q.eps), 1.0 + q.eps)
    return _wedge(a, q.eps)


def wedge_branch_value(q: OverlapQuery) -> float:
    """Primitive-difference branch value of the wedge term.

    Coincides with ``wedge_term`` for centre distances up to 1; beyond,
    it continues the primitive difference with fixed limit orientation
    instead of following the region, which makes its profile scaled by
    eps^2*log(eps^2) collapse onto a reflection-symmetric limit curve.
    Used by the band-profile diagnostics only.
    """
    _require_band(q)
    a = min(max(q.a, 1.0 - q.eps), 1.0 + q.eps)
    return _wedge_branch_value(a, q.eps)


def wedge_term_reordered(q: OverlapQuery) -> float:
    """Wedge term through the change-of-order representation.

    Valid for centre distances in (1-eps, 1] only.  Kept as an independent
    cross-check of ``wedge_term``; it is cancellation-prone for small radii
    and is not part of the stable evaluation path.
    """
    a, e = q.a, q.eps
    if not (1.0 - e < a <= 1.0):
        raise DomainError(f"a = {a} outside (1-eps, 1] for eps = {e}")
    phi = intersection_angle(q)
    e2 = e * e
    sector = phi * e2 * (math.log(e2) - 1.0) / EIGHT_PI
    return sector - (radial_log_primitive(a, e) - radial_log_primitive(a, 1.0 - a))


def wedge_term_via(q: OverlapQuery, route: WedgeDerivation) -> float:
    """Evaluate the wedge term through a chosen representation."""
    if route is WedgeDerivation.DIRECT:
        return wedge_term(q)
    return wedge_term_reordered(q)


def lune_potential(q: OverlapQuery) -> float:
    """Potential of the overlap of the unit disc with the eps-disc, i.e.
    the integral of log|y|/(2*pi) over the overlap region translated to the
    query point.

    Constant eps^2*(log eps^2 - 1)/4 while the small disc is nested, zero
    once the discs separate, and sector-plus-wedge in between.
    """
    regime = classify_regime(q)
    e = q.eps
    e2 = e * e
    if regime is Regime.NESTED:
        return 0.25 * e2 * (math.log(e2) - 1.0)
    if regime is Regime.OUTSIDE:
        return 0.0
    phi = intersection_angle(q)
    return 0.25 * ((PI - phi) / PI * e2 * (math.log(e2) - 1.0) + 8.0 * _wedge(q.a, e))


def lune_potential_point(point, eps: float) -> float:
    """Potential at a planar point; reduces to the norm and evaluates."""
    return lune_potential(OverlapQuery.from_point(point, eps))


def disc_potential(x_norm: float) -> float:
    """Potential of the full unit disc at an interior point: (|x|^2 - 1)/4."""
    if not 0.0 <= x_norm <= 1.0:
        raise DomainError(f"point norm {x_norm} outside the unit disc")
    return 0.25 * (x_norm * x_norm - 1.0)


def turning_angle_primitive_closed_form(a: float) -> float:
    """Independent closed form of the angular primitive at the turning
    half-angle: 2*Im Li2(1 - i*q) + (1 - a^2)*asin(1/a) + (2 - log(q^2))*q
    with q = sqrt(a^2 - 1); exposed for validation.
    """
    if a <= 1.0:
        raise DomainError(f"turning angle needs a > 1, got {a}")
    q2 = (a - 1.0) * (a + 1.0)
    q = math.sqrt(q2)
    alpha = math.asin(min(1.0 / a, 1.0))
    im = li2_parts(1.0, -q)[1]
    return 2.0 * im + (1.0 - a * a) * alpha + (2.0 - math.log(q2)) * q
