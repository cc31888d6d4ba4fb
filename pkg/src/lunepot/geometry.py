"""Geometry of the unit disc overlapped by a small disc.

The configuration is a unit disc and a disc of radius ``eps`` whose centre
sits at distance ``a`` from the unit disc's centre.  Everything downstream
(closed forms, series, quadrature) is driven by the branch structure in
``a`` relative to the thresholds ``1-eps``, ``1``, ``sqrt(1+eps^2)`` and
``1+eps``, and by the elementary maps defined here: the polar chord radius
``s``, its half-angle companion ``Phi``, the circle intersection angle, and
the angular description of the region cut out beyond the unit distance.

All functions are pure; radial symmetry reduces any planar query point to
its norm.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass

from ._backend import chord_radius_core
from .errors import DomainError, EpsilonRangeWarning

PI = math.pi
CLAMP_SLACK = 1e-12


class Regime(enum.Enum):
    """Branch of the potential selected by the centre distance."""

    NESTED = "Nested"
    OVERLAP_INNER_DISC = "OverlapInnerDisc"
    OVERLAP_AT_UNIT = "OverlapAtUnit"
    OVERLAP_OUTER_NEAR = "OverlapOuterNear"
    OVERLAP_OUTER_FAR = "OverlapOuterFar"
    OUTSIDE = "Outside"


@dataclass(frozen=True)
class OverlapQuery:
    """A single evaluation point: centre distance ``a`` and radius ``eps``.

    ``eps`` must lie in (0, 1); values above 1/2 are accepted with a
    warning since the closed forms remain valid there but are untested.
    """

    a: float
    eps: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and self.a >= 0.0):
            raise DomainError(f"centre distance must be finite and >= 0, got {self.a}")
        if not (math.isfinite(self.eps) and 0.0 < self.eps < 1.0):
            raise DomainError(f"disc radius must lie in (0, 1), got {self.eps}")
        if self.eps > 0.5:
            warnings.warn(
                f"disc radius {self.eps} is above 1/2; results are untested there",
                EpsilonRangeWarning,
                stacklevel=2,
            )

    @classmethod
    def from_point(cls, point, eps: float) -> "OverlapQuery":
        """Build a query from a planar point, reduced to its norm."""
        x, y = point
        return cls(math.hypot(x, y), eps)


@dataclass(frozen=True)
class IntersectionGeometry:
    """Vertices of the two-circle intersection and derived angles.

    ``t`` is the signed distance of the chord foot along the centre line,
    ``h`` the half-chord height, ``v_plus``/``v_minus`` the two vertices
    (mirror images across the centre line, upper one first), ``phi`` the
    polar angle of the upper vertex, and ``alpha`` the turning angle
    asin(1/a), defined only for a >= 1.
    """

    t: float
    h: float
    v_plus: tuple[float, float]
    v_minus: tuple[float, float]
    phi: float
    alpha: float | None


def newtonian_kernel(r: float) -> float:
    """Radial profile log(r^2)/(4*pi) of the planar logarithmic kernel."""
    if not (r > 0.0):
        raise DomainError(f"kernel radius must be positive, got {r}")
    return math.log(r * r) / (4.0 * PI)


def classify_regime(q: OverlapQuery) -> Regime:
    """Unique branch tag for a query.

    Boundary conventions: the nested and outside intervals are closed, the
    unit distance is its own tag, and the tie a^2 == 1 + eps^2 falls to the
    far overlap branch.
    """
    a, e = q.a, q.eps
    if a <= 1.0 - e:
        return Regime.NESTED
    if a < 1.0:
        return Regime.OVERLAP_INNER_DISC
    if a == 1.0:
        return Regime.OVERLAP_AT_UNIT
    if a >= 1.0 + e:
        return Regime.OUTSIDE
    if a * a < 1.0 + e * e:
        return Regime.OVERLAP_OUTER_NEAR
    return Regime.OVERLAP_OUTER_FAR


def _clamped_unit(value: float, what: str) -> float:
    if value > 1.0:
        if value > 1.0 + CLAMP_SLACK:
            raise DomainError(f"{what} = {value} lies outside [-1, 1]")
        return 1.0
    if value < -1.0:
        if value < -1.0 - CLAMP_SLACK:
            raise DomainError(f"{what} = {value} lies outside [-1, 1]")
        return -1.0
    return value


def chord_radius(theta: float, a: float) -> float:
    """Polar radius s(theta) = -a*cos(theta) + sqrt(1 - a^2 sin^2 theta).

    This is the boundary of the unit circle centred at distance ``a``,
    seen from the origin.  For a > 1 it exists only for angles with
    |sin(theta)| <= 1/a (within a small clamp slack at the edges).
    """
    if a < 0.0:
        raise DomainError(f"centre distance must be >= 0, got {a}")
    if a > 1.0:
        st = a * math.sin(theta)
        if st * st > 1.0 + CLAMP_SLACK:
            raise DomainError(
                f"theta = {theta} outside the chord domain for a = {a}"
            )
    return chord_radius_core(theta, a)


def intersection_angle(q: OverlapQuery) -> float:
    """Polar angle of the upper intersection vertex, in [0, pi].

    Equals arccos((1 - a^2 - eps^2) / (2*a*eps)); zero at a = 1-eps and
    pi at a = 1+eps.  Evaluated as atan2 of the factored sine against the
    cosine, which stays accurate right up to the band edges where a plain
    arccos square-root amplifies roundoff.
    """
    a, e = q.a, q.eps
    if a == 0.0:
        raise DomainError("intersection angle undefined at zero centre distance")
    lo = (a - 1.0) + e          # a - (1 - eps)
    hi = (1.0 - a) + e          # (1 + eps) - a
    if lo < -CLAMP_SLACK or hi < -CLAMP_SLACK:
        raise DomainError(f"a = {a} outside the overlap band [1-eps, 1+eps]")
    cos_phi = _clamped_unit((1.0 - a * a - e * e) / (2.0 * a * e), "intersection-angle cosine")
    prod = max(lo, 0.0) * (a + 1.0 + e) * max(hi, 0.0) * (1.0 + a - e)
    sin_phi = math.sqrt(prod) / (2.0 * a * e)
    return math.atan2(sin_phi, cos_phi)


def big_l(theta: float, a: float) -> float:
    """The map L(theta) = (s^2(theta) - 1 - a^2) / (2*a); range [-1, 1]."""
    if a <= 0.0:
        raise DomainError(f"centre distance must be positive, got {a}")
    s = chord_radius(theta, a)
    return (s * s - 1.0 - a * a) / (2.0 * a)


def phi_map(theta: float, a: float) -> float:
    """Half-angle map Phi(theta) = arccos(L(theta)) / 2, in [0, pi/2]."""
    val = _clamped_unit(big_l(theta, a), "half-angle cosine")
    return 0.5 * math.acos(val)


def intersection_points(q: OverlapQuery) -> IntersectionGeometry:
    """Intersection vertices of the two circles, for a in [1-eps, 1+eps].

    With the unit disc centred at (-a, 0) and the eps-disc at the origin,
    the vertices are ((1 - a^2 - eps^2)/(2a), +/- h) with
    h = sqrt(((a+eps)^2 - 1)(1 - (a-eps)^2)) / (2a).
    """
    a, e = q.a, q.eps
    if a == 0.0 or a < 1.0 - e - CLAMP_SLACK or a > 1.0 + e + CLAMP_SLACK:
        raise DomainError(f"a = {a} outside the overlap band [1-eps, 1+eps]")
    disc = ((a + e) ** 2 - 1.0) * (1.0 - (a - e) ** 2)
    if disc < 0.0:
        if disc < -CLAMP_SLACK:
            raise DomainError(f"negative intersection discriminant {disc}")
        disc = 0.0
    t = (a * a + e * e - 1.0) / (2.0 * a)
    h = math.sqrt(disc) / (2.0 * a)
    vx = -t
    phi = math.atan2(h, -t)
    alpha = math.asin(_clamped_unit(1.0 / a, "turning-angle sine")) if a >= 1.0 else None
    return IntersectionGeometry(
        t=t,
        h=h,
        v_plus=(vx, h),
        v_minus=(vx, -h),
        phi=phi,
        alpha=alpha,
    )


def angular_region(q: OverlapQuery) -> list[tuple[float, float]]:
    """Angular intervals covered by the unit circle's boundary arc when the
    centre sits at or beyond the unit distance (a in [1, 1+eps]).

    One interval [pi - alpha, phi] at a = 1; two intervals
    [2pi - alpha, 2pi] and [pi - alpha, phi] while a^2 < 1 + eps^2; a
    single interval [phi + pi, 2pi] once a^2 >= 1 + eps^2.
    """
    a, e = q.a, q.eps
    if a < 1.0 or a > 1.0 + e:
        raise DomainError(f"a = {a} outside [1, 1+eps]")
    phi = intersection_angle(q)
    alpha = math.asin(_clamped_unit(1.0 / a, "turning-angle sine"))
    if a == 1.0:
        return [(PI - alpha, phi)]
    if a * a < 1.0 + e * e:
        return [(2.0 * PI - alpha, 2.0 * PI), (PI - alpha, phi)]
    return [(phi + PI, 2.0 * PI)]
