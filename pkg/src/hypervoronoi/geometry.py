"""Poincare-disk primitives in polar-hyperbolic coordinates.

Points are stored as (alpha, rho): the angle of the ray from the origin and
the hyperbolic distance along it.  Euclidean coordinates in the unit disk are
derived views; for rho beyond ~18 the quantity 1-|z| underflows double
precision, so everything that has to stay accurate at large radii (distances,
angles, triangle solves) is computed from polar data with log-domain
cosh/sinh combinations.

Conventions used throughout the package:

* angles at a vertex are the smaller of the two choices, in [0, pi];
* signed angles are positive counterclockwise;
* the "minus" side of an oriented geodesic u -> v is the left-hand side;
* boundary ties (on-circle, on-geodesic) resolve to inside / minus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DegenerateInput, GeometryError

TWO_PI = 2.0 * math.pi
LN2 = math.log(2.0)

# Above this, cosh/sinh products overflow doubles and we switch to log domain.
_LOG_DOMAIN_RHO_SUM = 650.0

# Geometric equality tolerances (lengths <= 50, angles in radians).
LENGTH_TOL = 1e-9
ANGLE_TOL = 1e-9


# ---------------------------------------------------------------------------
# scalar/array kernels
# ---------------------------------------------------------------------------

def wrap_angle(a):
    """Reduce an angle to [0, 2*pi)."""
    return np.mod(a, TWO_PI)


def wrap_signed(a):
    """Reduce an angle difference to [-pi, pi)."""
    return np.mod(np.asarray(a) + math.pi, TWO_PI) - math.pi


def arccosh1p(m):
    """arccosh(1 + m) for m >= 0, accurate near m = 0 and for huge m."""
    m = np.asarray(m, dtype=float)
    with np.errstate(over="ignore", divide="ignore"):
        plain = np.log1p(m + np.sqrt(np.where(m > 1e150, 0.0, m) * (m + 2.0)))
        return np.where(m > 1e150, LN2 + np.log(m), plain)


def log_sinh(x):
    """log(sinh(x)) for x >= 0, safe for large x (x = 0 gives -inf)."""
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore"):
        return x + np.log1p(-np.exp(-2.0 * x)) - LN2


def log_cosh(x):
    x = np.abs(np.asarray(x, dtype=float))
    return x + np.log1p(np.exp(-2.0 * x)) - LN2


def dist_polar(alpha1, rho1, alpha2, rho2):
    """Hyperbolic distance between points given in polar coordinates.

    Evaluates cosh d - 1 = 2 sinh^2(drho/2) + 2 sinh(rho1) sinh(rho2)
    sin^2(dalpha/2), a cancellation-free rearrangement of the polar law of
    cosines, switching to log-sum-exp when the plain form would overflow.
    """
    alpha1, rho1, alpha2, rho2 = np.broadcast_arrays(
        *(np.asarray(v, dtype=float) for v in (alpha1, rho1, alpha2, rho2))
    )
    # fold the angular gap symmetrically so dist(u, v) == dist(v, u) exactly
    gap = np.mod(np.abs(alpha1 - alpha2), TWO_PI)
    gap = np.minimum(gap, TWO_PI - gap)
    half_gap = 0.5 * gap
    sin2 = np.sin(half_gap) ** 2
    big = rho1 + rho2 > _LOG_DOMAIN_RHO_SUM
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        m = (
            2.0 * np.sinh(0.5 * np.abs(rho1 - rho2)) ** 2
            + 2.0 * np.sinh(rho1) * np.sinh(rho2) * sin2
        )
        d_plain = arccosh1p(np.where(big, 0.0, m))
    if not np.any(big):
        return d_plain if d_plain.shape else float(d_plain)
    with np.errstate(divide="ignore", invalid="ignore"):
        t1 = LN2 + 2.0 * log_sinh(0.5 * np.abs(rho1 - rho2))
        t2 = (
            LN2
            + log_sinh(rho1)
            + log_sinh(rho2)
            + 2.0 * np.log(np.abs(np.sin(half_gap)))
        )
        lm = np.logaddexp(t1, t2)
        # cosh(d)-1 still fits in a double unless lm is huge
        d_log = np.where(
            lm < 690.0,
            arccosh1p(np.exp(np.minimum(lm, 690.0))),
            lm + LN2,
        )
    d_log = np.where(np.isfinite(lm), d_log, 0.0)
    out = np.where(big, d_log, d_plain)
    return out if out.shape else float(out)


def angle_from_sides(a, b, c):
    """Interior angle between sides of length a and b, opposite side c.

    Uses sin^2(gamma/2) = sinh(s1) sinh(s2) / (sinh a sinh b) with
    s1 = (c+a-b)/2, s2 = (c-a+b)/2, evaluated in log domain so angles of
    order exp(-rho) survive.  Requires a > 0 and b > 0.
    """
    a, b, c = np.broadcast_arrays(*(np.asarray(v, dtype=float) for v in (a, b, c)))
    s1 = np.clip(0.5 * (c + a - b), 0.0, None)
    s2 = np.clip(0.5 * (c - a + b), 0.0, None)
    with np.errstate(divide="ignore", invalid="ignore"):
        half = log_sinh(s1) + log_sinh(s2) - log_sinh(a) - log_sinh(b)
        sin_half = np.exp(0.5 * half)
    gamma = 2.0 * np.arcsin(np.clip(sin_half, 0.0, 1.0))
    return gamma if gamma.shape else float(gamma)


def radius_from_cap(inner, u):
    """Inverse radial CDF helper: rho with cosh(rho)-1 = inner + u*(cap-inner).

    Callers pass inner = cosh(r1)-1 and (cap-inner) scaled into u directly;
    here u is already the target value of cosh(rho)-1.
    """
    return arccosh1p(u)


# ---------------------------------------------------------------------------
# points
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Point:
    """A point of the hyperbolic plane in polar coordinates.

    alpha: angle in [0, 2*pi); rho: hyperbolic distance to the origin.
    """

    alpha: float
    rho: float

    def __post_init__(self):
        if self.rho < 0:
            raise GeometryError(f"negative hyperbolic radius {self.rho}")
        object.__setattr__(self, "alpha", float(wrap_angle(self.alpha)))
        object.__setattr__(self, "rho", float(self.rho))

    @staticmethod
    def origin() -> "Point":
        return Point(0.0, 0.0)

    @staticmethod
    def from_euclidean(x: float, y: float) -> "Point":
        n = math.hypot(x, y)
        if n >= 1.0:
            raise GeometryError(f"({x}, {y}) lies outside the open unit disk")
        rho = math.log1p(2.0 * n / (1.0 - n)) if n > 0 else 0.0
        return Point(math.atan2(y, x), rho)

    @property
    def norm(self) -> float:
        """Euclidean norm of the Poincare embedding, tanh(rho/2)."""
        return math.tanh(0.5 * self.rho)

    @property
    def euclidean(self) -> tuple[float, float]:
        n = self.norm
        return (n * math.cos(self.alpha), n * math.sin(self.alpha))

    def is_origin(self) -> bool:
        return self.rho == 0.0


ORIGIN = Point.origin()


def dist(u: Point, v: Point) -> float:
    """Hyperbolic distance between two points (total, symmetric)."""
    return float(dist_polar(u.alpha, u.rho, v.alpha, v.rho))


def ball_area(r: float) -> float:
    """Area of a hyperbolic disk of radius r: 2*pi*(cosh r - 1)."""
    if r < 0:
        raise GeometryError("negative radius")
    return TWO_PI * (math.cosh(r) - 1.0)


def log_ball_area(r: float) -> float:
    """log of ball_area(r), safe for large r."""
    if r <= 0:
        return -math.inf
    return math.log(TWO_PI) + LN2 + 2.0 * float(log_sinh(0.5 * r))


def angle(a: Point, b: Point, c: Point) -> float:
    """The angle at vertex b between the geodesic rays b->a and b->c, in [0, pi].

    Isometry invariant; equals the Euclidean angle at the origin after moving
    b there.
    """
    if a == b or c == b:
        raise DegenerateInput("angle requires a != b and c != b")
    if b.is_origin():
        return abs(float(wrap_signed(a.alpha - c.alpha)))
    da = dist(b, a)
    dc = dist(b, c)
    if da == 0.0 or dc == 0.0:
        raise DegenerateInput("angle requires a != b and c != b")
    return angle_from_sides(da, dc, dist(a, c))


def law_of_cosines_side(a: float, b: float, gamma: float) -> float:
    """Side length opposite gamma in a triangle with adjacent sides a, b."""
    if a < 0 or b < 0:
        raise GeometryError("side lengths must be nonnegative")
    if a + b > _LOG_DOMAIN_RHO_SUM:
        t1 = LN2 + 2.0 * float(log_sinh(0.5 * abs(a - b)))
        s = abs(math.sin(0.5 * gamma))
        if s == 0.0:
            t2 = -math.inf
        else:
            t2 = LN2 + float(log_sinh(a)) + float(log_sinh(b)) + 2.0 * math.log(s)
        lm = float(np.logaddexp(t1, t2))
        if not math.isfinite(lm):
            return 0.0
        return float(arccosh1p(math.exp(lm))) if lm < 690.0 else lm + LN2
    m = (
        2.0 * math.sinh(0.5 * (a - b)) ** 2
        + 2.0 * math.sinh(a) * math.sinh(b) * math.sin(0.5 * gamma) ** 2
    )
    return float(arccosh1p(m))


def cosines_slack(gamma0: float) -> float:
    """K(gamma0) with c >= a + b - K for triangles whose angle is >= gamma0."""
    if not 0 < gamma0 <= math.pi:
        raise GeometryError("gamma0 must lie in (0, pi]")
    g = min(gamma0, 0.5 * math.pi)
    return -math.log((1.0 - math.cos(g)) / 4.0)


def angle_upper_bound(x1: Point, x2: Point) -> float:
    """2*pi*exp((d(x1,x2) - rho1 - rho2)/2), strictly above the angle at o."""
    if x1.is_origin() or x2.is_origin():
        raise DegenerateInput("angle_upper_bound requires points distinct from o")
    return TWO_PI * math.exp(0.5 * (dist(x1, x2) - x1.rho - x2.rho))


# ---------------------------------------------------------------------------
# orientation and signed angles
# ---------------------------------------------------------------------------

def orientation(p: Point, s: Point, x: Point) -> float:
    """Sign of the oriented triple (p, s, x): +1 ccw, -1 cw, 0 collinear.

    Computed from the Euclidean embedding; orientation of a geodesic triangle
    agrees with the Euclidean orientation of its vertices.
    """
    if p.is_origin():
        return float(np.sign(wrap_signed(x.alpha - s.alpha))) if (
            s.rho > 0 and x.rho > 0
        ) else 0.0
    px, py = p.euclidean
    sx, sy = s.euclidean
    xx, xy = x.euclidean
    return float(np.sign((sx - px) * (xy - py) - (sy - py) * (xx - px)))


def signed_angle_at(p: Point, s: Point, x: Point) -> float:
    """Signed angle at p from the ray p->s to the ray p->x, in [-pi, pi)."""
    if p.is_origin():
        return float(wrap_signed(x.alpha - s.alpha))
    mag = angle(s, p, x)
    sign = orientation(p, s, x)
    if sign == 0.0:
        # collinear: 0 if same ray, -pi (== pi) if opposite
        return 0.0 if mag < 0.5 * math.pi else -math.pi
    return sign * mag


def point_from(p: Point, ref: Point, psi: float, t: float) -> Point:
    """The point at distance t from p, at signed angle psi from the ray p->ref.

    This is the workhorse for mapping frame-local polar coordinates back to
    the global chart; exact triangle solves, no Euclidean round trip.
    """
    if t < 0:
        raise GeometryError("negative distance")
    if t == 0.0:
        return p
    if p.is_origin():
        return Point(ref.alpha + psi, t)
    if ref == p:
        raise DegenerateInput("reference point coincides with p")
    # angle at p between ray p->o and ray p->x
    chi = float(wrap_signed(signed_angle_at(p, ORIGIN, ref) + psi))
    rho_x = law_of_cosines_side(p.rho, t, abs(chi))
    if rho_x == 0.0:
        return ORIGIN
    delta = angle_from_sides(p.rho, rho_x, t)
    # seen from o, x lies clockwise of p when x is counterclockwise of o at p
    return Point(p.alpha - math.copysign(delta, chi), rho_x)


# ---------------------------------------------------------------------------
# isometries
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Isometry:
    """Orientation-preserving disk automorphism: rotate(theta) after the
    canonical translation taking `pivot` to the origin.

    The canonical translation T_p slides along the geodesic through o and p;
    it sends p to o and o to the antipodal image at angle alpha_p + pi.
    """

    pivot: Point
    theta: float

    def apply(self, x: Point) -> Point:
        p = self.pivot
        if p.is_origin():
            return Point(x.alpha + self.theta, x.rho)
        if x == p:
            return ORIGIN
        rho = dist(p, x)
        if rho == 0.0:
            return ORIGIN
        if x.is_origin():
            base = p.alpha + math.pi
        else:
            base = p.alpha + math.pi + signed_angle_at(p, ORIGIN, x)
        return Point(base + self.theta, rho)

    def inverse(self) -> "Isometry":
        p = self.pivot
        if p.is_origin():
            return Isometry(ORIGIN, -self.theta)
        return Isometry(Point(p.alpha + math.pi + self.theta, p.rho), -self.theta)

    def compose(self, other: "Isometry") -> "Isometry":
        """The isometry x -> self(other(x))."""
        p1, th1 = other.pivot, other.theta
        p2, th2 = self.pivot, self.theta
        if p2.is_origin():
            return Isometry(p1, th1 + th2)
        if p1.is_origin():
            return Isometry(Point(p2.alpha - th1, p2.rho), th1 + th2)
        q = Point(p2.alpha - th1, p2.rho)  # R_{-th1} p2
        c = Isometry(Point(q.alpha + math.pi, q.rho), 0.0).apply(p1)
        # residual rotation: compare images of p1 under T_q T_p1 and T_c
        lhs = Isometry(q, 0.0).apply(Point(p1.alpha + math.pi, p1.rho))
        if c.is_origin():
            psi = lhs.alpha
        else:
            rhs = Isometry(c, 0.0).apply(p1)
            psi = lhs.alpha - rhs.alpha
        return Isometry(c, th1 + th2 + psi)

    def __call__(self, x: Point) -> Point:
        return self.apply(x)


def isometry_to_origin(p: Point, align_with: Point) -> Isometry:
    """The isometry sending p to o and align_with onto the positive x-axis."""
    if p == align_with:
        raise DegenerateInput("p and align_with must differ")
    if p.is_origin():
        return Isometry(ORIGIN, -align_with.alpha)
    if align_with.is_origin():
        theta = -(p.alpha + math.pi)
    else:
        theta = -(p.alpha + math.pi + signed_angle_at(p, ORIGIN, align_with))
    return Isometry(p, theta)


# ---------------------------------------------------------------------------
# disks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HDisk:
    """Hyperbolic disk: metric center and hyperbolic radius."""

    center: Point
    radius: float

    def __post_init__(self):
        if self.radius < 0:
            raise GeometryError("negative disk radius")

    @property
    def area(self) -> float:
        return ball_area(self.radius)

    def contains(self, x: Point, closed: bool = True) -> bool:
        d = dist(self.center, x)
        return d <= self.radius if closed else d < self.radius


@dataclass(frozen=True)
class EDisk:
    """Euclidean disk inside the unit disk (the conformal image of an HDisk)."""

    center: tuple[float, float]
    radius: float

    def norm(self) -> float:
        return math.hypot(*self.center)


def to_euclidean(d: HDisk) -> EDisk:
    """Conformal image of a hyperbolic disk as a Euclidean disk.

    The two diameter endpoints along the ray through o and the center sit at
    signed radii tanh((rho_c +- r)/2); midpoint and half-separation give the
    Euclidean center and radius.
    """
    hi = math.tanh(0.5 * (d.center.rho + d.radius))
    lo = math.tanh(0.5 * (d.center.rho - d.radius))
    ca, sa = math.cos(d.center.alpha), math.sin(d.center.alpha)
    mid = 0.5 * (hi + lo)
    return EDisk((mid * ca, mid * sa), 0.5 * (hi - lo))


def from_euclidean_disk(e: EDisk) -> HDisk:
    """Inverse of to_euclidean; requires the disk to lie inside the unit disk."""
    n = e.norm()
    if n + e.radius >= 1.0:
        raise GeometryError("Euclidean disk is not contained in the unit disk")
    hi = n + e.radius
    lo = n - e.radius
    rho_hi = 2.0 * math.atanh(hi)
    rho_lo = 2.0 * math.atanh(lo) if lo > -1.0 else -math.inf
    alpha = math.atan2(e.center[1], e.center[0]) if n > 0 else 0.0
    c = 0.5 * (rho_hi + rho_lo)
    if c >= 0:
        return HDisk(Point(alpha, c), 0.5 * (rho_hi - rho_lo))
    return HDisk(Point(alpha + math.pi, -c), 0.5 * (rho_hi - rho_lo))


def ahd_disks(b1: HDisk, b2: HDisk) -> float:
    """Asymmetric Hausdorff distance sup_{x in b2} dist(x, b1) for disks:
    max(0, d(c1,c2) + r2 - r1)."""
    return max(0.0, dist(b1.center, b2.center) + b2.radius - b1.radius)


# ---------------------------------------------------------------------------
# sectors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Sector:
    """All geodesic rays from apex within half_angle of the ray toward `through`."""

    apex: Point
    through: Point
    half_angle: float

    def __post_init__(self):
        if self.apex == self.through:
            raise DegenerateInput("sector apex must differ from its through-point")
        if not 0 < self.half_angle < math.pi:
            raise GeometryError("half_angle must lie in (0, pi)")


def sector_contains(s: Sector, x: Point) -> bool:
    """Membership in the closed sector; the apex belongs by convention."""
    if x == s.apex:
        return True
    return angle(s.through, s.apex, x) <= s.half_angle


def orthocircle_radius(u_norm: float, theta: float) -> float:
    """Euclidean radius of the circle through u on the x-axis, meeting the
    axis at angle theta and the unit circle at right angles."""
    if not 0 < u_norm < 1:
        raise DegenerateInput("need 0 < |u| < 1")
    if not 0 < theta < math.pi:
        raise GeometryError("theta must lie in (0, pi)")
    return (1.0 - u_norm * u_norm) / (2.0 * u_norm * math.sin(theta))


# ---------------------------------------------------------------------------
# Gabriel disks, double disks
# ---------------------------------------------------------------------------

def midpoint(z1: Point, z2: Point) -> Point:
    if z1 == z2:
        return z1
    d = dist(z1, z2)
    if d == 0.0:
        return z1
    return point_from(z1, z2, 0.0, 0.5 * d)


def gabriel_disk(z1: Point, z2: Point) -> HDisk:
    """Smallest disk with z1 and z2 on its boundary: centered at the midpoint
    with radius half the distance."""
    if z1 == z2:
        raise DegenerateInput("gabriel_disk requires distinct points")
    d = dist(z1, z2)
    if d == 0.0:
        raise DegenerateInput("gabriel_disk requires distinct points")
    return HDisk(midpoint(z1, z2), 0.5 * d)


def gabriel_side(z1: Point, z2: Point, x: Point) -> str:
    """Classify x against the Gabriel disk of (z1, z2): 'minus' (left half,
    geodesic ties included), 'plus' (right half) or 'outside'."""
    if z1 == z2:
        raise DegenerateInput("gabriel_side requires distinct points")
    g = gabriel_disk(z1, z2)
    if dist(g.center, x) > g.radius:
        return "outside"
    if x == z1 or x == z2:
        return "minus"
    side = orientation(z1, z2, x)
    return "plus" if side < 0 else "minus"


@dataclass(frozen=True)
class DoubleDisk:
    """Union of the two disks of a fixed diameter through a pair of points.

    d1 is the disk on the minus (left) side of the oriented chord, d2 on the
    plus side.
    """

    d1: HDisk
    d2: HDisk
    chord_ends: tuple[Point, Point]

    @property
    def diameter(self) -> float:
        return 2.0 * self.d1.radius

    def contains(self, x: Point, closed: bool = True) -> bool:
        return self.d1.contains(x, closed) or self.d2.contains(x, closed)


def double_disk(z1: Point, z2: Point, rho: float) -> DoubleDisk:
    """The two disks of diameter rho through z1 and z2 (requires
    0 < dist(z1,z2) < rho).  Centers sit at +-h off the midpoint along the
    perpendicular bisector, cosh(h) = cosh(rho/2)/cosh(d/2)."""
    d = dist(z1, z2)
    if d == 0.0:
        raise DegenerateInput("double_disk requires distinct points")
    if d >= rho:
        raise GeometryError(f"chord length {d} must be below the diameter {rho}")
    h = float(arccosh1p(
        (math.cosh(0.5 * rho) - math.cosh(0.5 * d)) / math.cosh(0.5 * d)
    ))
    mid = midpoint(z1, z2)
    # +pi/2 from the ray mid->z2 is the left (minus) side of z1->z2
    c_minus = point_from(mid, z2, 0.5 * math.pi, h) if h > 0 else mid
    c_plus = point_from(mid, z2, -0.5 * math.pi, h) if h > 0 else mid
    r = 0.5 * rho
    return DoubleDisk(HDisk(c_minus, r), HDisk(c_plus, r), (z1, z2))


# ---------------------------------------------------------------------------
# calibrated lemma constants
# ---------------------------------------------------------------------------

def bounding_ball_radius(w: float, theta: float) -> float:
    """h(w, theta): for r-w < d(u,v) < r+w, the ball B(u, r+w) is contained in
    B(v, h) union Sect(v, u, theta).

    Closed form from the horodisk construction: with v at the origin and u on
    the positive axis, B(u, r+w) sits inside the Euclidean disk D through
    (-tanh w, 0) and (1, 0); h is the hyperbolic distance to the point of
    boundary(D) at polar angle theta.
    """
    if w <= 0 or not 0 < theta < math.pi:
        raise GeometryError("need w > 0 and theta in (0, pi)")
    c = 0.5 * (1.0 - math.tanh(w))
    rr = 0.5 * (1.0 + math.tanh(w))
    disc = rr * rr - (c * math.sin(theta)) ** 2
    n = c * math.cos(theta) + math.sqrt(disc)
    n = min(n, 1.0 - 1e-16)
    return 2.0 * math.atanh(n)


@lru_cache(maxsize=None)
def sector_separation(theta: float) -> float:
    """d0(theta): calibrated distance beyond which the two sector-containment
    lemmas hold (ball-in-sector and complement-in-sector).

    The paper guarantees existence only; this returns a margin-checked value
    from the Euclidean picture: both boundary circles of Sect(u, v, theta)
    have radius (1 - |u|^2)/(2 |u| sin theta), so everything outside the
    sector near u fits in a Euclidean ball of that scale around (1, 0).
    """
    if not 0 < theta < math.pi:
        raise GeometryError("theta must lie in (0, pi)")
    th = min(theta, 0.5 * math.pi)
    # delta so that a Euclidean 3*delta-ball at (1,0) subtends < theta from o
    delta = math.sin(th / 2.0) / 6.0
    d0 = 2.0 * math.atanh(max(0.0, 1.0 - delta))
    return max(d0, 4.0)


__all__ = [
    "Point", "ORIGIN", "HDisk", "EDisk", "Sector", "DoubleDisk", "Isometry",
    "dist", "dist_polar", "ball_area", "log_ball_area", "angle",
    "angle_from_sides", "law_of_cosines_side", "cosines_slack",
    "angle_upper_bound", "orientation", "signed_angle_at", "point_from",
    "isometry_to_origin", "to_euclidean", "from_euclidean_disk", "ahd_disks",
    "sector_contains", "orthocircle_radius", "midpoint", "gabriel_disk",
    "gabriel_side", "double_disk", "bounding_ball_radius", "sector_separation",
    "wrap_angle", "wrap_signed", "arccosh1p", "log_sinh", "log_cosh",
    "LENGTH_TOL", "ANGLE_TOL", "TWO_PI",
]
