"""Planar geometry primitives: distances, angles, 120-degree arcs, Fermat points.

Everything here works on plain (x, y) pairs in double precision and is pure,
so callers may share these functions freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence

SQRT3 = math.sqrt(3.0)

# Chord-angle tolerance (degrees) and coordinate tolerance used throughout.
ANGLE_TOL_DEG = 1e-6
COORD_TOL = 1e-9


class Point(NamedTuple):
    x: float
    y: float


class Side(Enum):
    """Which side of the directed chord a->b an arc bulges toward."""

    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class SteinerArc:
    """Minor circular arc from which the chord ab subtends 120 degrees.

    The full 120-degree locus of a segment consists of two such arcs, one per
    side of the chord; ``side`` identifies which one this is.  The center lies
    on the opposite side of the chord from the bulge, at distance
    |ab|/(2*sqrt(3)) from the midpoint, and the radius is |ab|/sqrt(3).
    """

    a: Point
    b: Point
    side: Side
    center: Point
    radius: float


def distance(p: Sequence[float], q: Sequence[float]) -> float:
    """Euclidean distance between two points."""
    return math.hypot(p[0] - q[0], p[1] - q[1])


def angle_at(x: Sequence[float], a: Sequence[float], b: Sequence[float]) -> float:
    """Angle a-x-b in degrees, in [0, 180].

    Raises ValueError when x coincides with a or b (the angle is undefined).
    """
    ux, uy = a[0] - x[0], a[1] - x[1]
    vx, vy = b[0] - x[0], b[1] - x[1]
    nu = math.hypot(ux, uy)
    nv = math.hypot(vx, vy)
    if nu == 0.0 or nv == 0.0:
        raise ValueError("angle_at: apex coincides with an endpoint")
    c = (ux * vx + uy * vy) / (nu * nv)
    c = max(-1.0, min(1.0, c))
    return math.degrees(math.acos(c))


def steiner_arc(a: Sequence[float], b: Sequence[float], side: Side) -> SteinerArc:
    """Construct the 120-degree arc of chord ab bulging toward ``side``.

    Raises ValueError for a degenerate (zero-length) chord.
    """
    ax, ay = float(a[0]), float(a[1])
    bx, by = float(b[0]), float(b[1])
    chord = math.hypot(bx - ax, by - ay)
    if chord == 0.0:
        raise ValueError("steiner_arc: coincident endpoints")
    radius = chord / SQRT3
    # Unit normal to the left of the directed chord a->b.
    nx = -(by - ay) / chord
    ny = (bx - ax) / chord
    # Center sits opposite the bulge, |ab|/(2*sqrt(3)) off the midpoint.
    off = chord / (2.0 * SQRT3)
    mx, my = (ax + bx) / 2.0, (ay + by) / 2.0
    if side is Side.LEFT:
        center = Point(mx - nx * off, my - ny * off)
    else:
        center = Point(mx + nx * off, my + ny * off)
    return SteinerArc(Point(ax, ay), Point(bx, by), side, center, radius)


def arc_points(arc: SteinerArc, fractions: Sequence[float]) -> list[Point]:
    """Points along the arc at the given fractions in [0, 1] of the a->b sweep."""
    cx, cy = arc.center
    ta = math.atan2(arc.a.y - cy, arc.a.x - cx)
    tb = math.atan2(arc.b.y - cy, arc.b.x - cx)
    # The minor arc spans 120 degrees; pick the signed sweep with |sweep| <= pi.
    sweep = tb - ta
    while sweep > math.pi:
        sweep -= 2.0 * math.pi
    while sweep < -math.pi:
        sweep += 2.0 * math.pi
    out = []
    for f in fractions:
        t = ta + sweep * f
        out.append(Point(cx + arc.radius * math.cos(t), cy + arc.radius * math.sin(t)))
    return out


def arc_partition(arc: SteinerArc, k_star: int) -> list[Point]:
    """Split the arc into k_star+1 equal angular parts; return the k_star cut points.

    Endpoints a and b are excluded.  Equal central angles give equal chord
    lengths between consecutive cuts.  k_star = 0 yields an empty list.
    """
    if k_star < 0:
        raise ValueError("arc_partition: k_star must be nonnegative")
    if k_star == 0:
        return []
    fractions = [i / (k_star + 1) for i in range(1, k_star + 1)]
    return arc_points(arc, fractions)


def _fermat_closed_form(a, b, c) -> Point | None:
    """Seed for the interior Fermat point: intersect the two cevians through
    the outer equilateral apexes erected on sides bc and ac."""

    def outer_apex(p, q, opposite):
        mx, my = (p[0] + q[0]) / 2.0, (p[1] + q[1]) / 2.0
        dx, dy = q[0] - p[0], q[1] - p[1]
        # Normal of length |pq|*sqrt(3)/2 away from the opposite vertex.
        nx, ny = -dy * SQRT3 / 2.0, dx * SQRT3 / 2.0
        if (opposite[0] - mx) * nx + (opposite[1] - my) * ny > 0.0:
            nx, ny = -nx, -ny
        return (mx + nx, my + ny)

    pa = outer_apex(b, c, a)
    pb = outer_apex(a, c, b)
    # Intersection of segments a-pa and b-pb.
    r = (pa[0] - a[0], pa[1] - a[1])
    s = (pb[0] - b[0], pb[1] - b[1])
    denom = r[0] * s[1] - r[1] * s[0]
    if denom == 0.0:
        return None
    t = ((b[0] - a[0]) * s[1] - (b[1] - a[1]) * s[0]) / denom
    return Point(a[0] + t * r[0], a[1] + t * r[1])


def fermat_point(a: Sequence[float], b: Sequence[float], c: Sequence[float]) -> Point:
    """The point minimizing total distance to a, b, c.

    A vertex whose angle is >= 120 degrees is itself the minimizer; otherwise
    the interior point seeing every pair at 120 degrees is found by a closed
    form construction refined with damped geometric-median iterations until
    the step falls below 1e-12.
    """
    pts = [Point(float(a[0]), float(a[1])),
           Point(float(b[0]), float(b[1])),
           Point(float(c[0]), float(c[1]))]
    # Coincident inputs: a doubled vertex dominates the objective (weight 2 vs 1).
    for i in range(3):
        for j in range(i + 1, 3):
            if distance(pts[i], pts[j]) == 0.0:
                return pts[i]
    for i in range(3):
        v = pts[i]
        o1, o2 = pts[(i + 1) % 3], pts[(i + 2) % 3]
        if angle_at(v, o1, o2) >= 120.0 - 1e-12:
            return v
    x = _fermat_closed_form(*pts)
    if x is None:  # numerically collinear without a >=120 vertex: fall back
        x = Point(sum(p.x for p in pts) / 3.0, sum(p.y for p in pts) / 3.0)
    # Weiszfeld polish with damping; the seed is already near-exact so this
    # normally terminates in one or two steps.
    damping = 1.0
    for _ in range(200):
        wx = wy = wsum = 0.0
        degenerate = False
        for p in pts:
            d = distance(x, p)
            if d < 1e-15:
                degenerate = True
                break
            w = 1.0 / d
            wx += p.x * w
            wy += p.y * w
            wsum += w
        if degenerate:
            break
        nx_, ny_ = wx / wsum, wy / wsum
        step_x = x.x + damping * (nx_ - x.x)
        step_y = x.y + damping * (ny_ - x.y)
        move = math.hypot(step_x - x.x, step_y - x.y)
        x = Point(step_x, step_y)
        if move < 1e-12:
            break
        damping = max(0.5, damping * 0.99)
    return x
