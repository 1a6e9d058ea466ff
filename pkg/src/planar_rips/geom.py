"""Exact planar predicates over rational coordinates.

Every predicate reduces to the sign of a polynomial in the input
coordinates, evaluated with ``fractions.Fraction`` (or plain ``int``), so
there is no tolerance anywhere in this module.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from typing import NamedTuple, Sequence, Union

Number = Union[int, Fraction]


class GeometryError(ValueError):
    pass


class DegenerateError(GeometryError):
    """Raised for coincident or collinear inputs a predicate cannot decide."""


def to_rational(value) -> Fraction:
    """Parse ints, Fractions, decimal strings and ``p/q`` strings exactly.

    Floats are converted by their exact binary value.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, float)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise GeometryError(f"not a rational literal: {value!r}") from exc
    raise GeometryError(f"cannot convert {type(value).__name__} to a rational")


class Point2(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "Point2":
        return cls(to_rational(x), to_rational(y))

    def __sub__(self, other):  # type: ignore[override]
        return Point2(self.x - other.x, self.y - other.y)

    def __add__(self, other):  # type: ignore[override]
        return Point2(self.x + other.x, self.y + other.y)


class Segment(NamedTuple):
    a: Point2
    b: Point2


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    ON = "on"

    def flip(self) -> "Side":
        if self is Side.LEFT:
            return Side.RIGHT
        if self is Side.RIGHT:
            return Side.LEFT
        return Side.ON


class Crossing(enum.Enum):
    DISJOINT = "disjoint"
    INTERIOR_CROSS = "interior_cross"
    TOUCH = "touch"


class Location(enum.Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def cross(a, b, p):
    """Cross product of b - a and p - a; positive when p is left of a->b."""
    return (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])


def squared_distance(a, b):
    dx = a[0] - b[0]
    dy = a[1] - b[1]
    return dx * dx + dy * dy


def orientation(a, b, p) -> Side:
    if a[0] == b[0] and a[1] == b[1]:
        raise DegenerateError("orientation of a degenerate line (a == b)")
    s = _sign(cross(a, b, p))
    return Side.LEFT if s > 0 else Side.RIGHT if s < 0 else Side.ON


def bisector_side(a, b, p) -> Side:
    """Side of the perpendicular bisector of a|b on which p lies.

    LEFT means p is strictly closer to a, RIGHT strictly closer to b.
    """
    if a[0] == b[0] and a[1] == b[1]:
        raise DegenerateError("bisector of coincident points")
    s = _sign(squared_distance(b, p) - squared_distance(a, p))
    return Side.LEFT if s > 0 else Side.RIGHT if s < 0 else Side.ON


def _on_closed_segment(p, a, b) -> bool:
    # assumes p collinear with a, b
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def point_on_segment(p, a, b) -> bool:
    return cross(a, b, p) == 0 and _on_closed_segment(p, a, b)


def segments_intersect(s, t) -> Crossing:
    """Classify two closed segments.

    INTERIOR_CROSS when the open segments share a point (this includes
    collinear overlaps), TOUCH when the closed segments meet but the open
    ones do not.
    """
    a, b = s
    c, d = t
    if tuple(a) == tuple(b) or tuple(c) == tuple(d):
        raise DegenerateError("degenerate segment")
    d1 = _sign(cross(c, d, a))
    d2 = _sign(cross(c, d, b))
    d3 = _sign(cross(a, b, c))
    d4 = _sign(cross(a, b, d))
    if d1 * d2 < 0 and d3 * d4 < 0:
        return Crossing.INTERIOR_CROSS
    if d1 == d2 == d3 == d4 == 0:
        # collinear: compare the open parameter intervals along the line
        axis = 0 if a[0] != b[0] else 1
        lo1, hi1 = sorted((a[axis], b[axis]))
        lo2, hi2 = sorted((c[axis], d[axis]))
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if lo < hi:
            return Crossing.INTERIOR_CROSS
        return Crossing.TOUCH if lo == hi else Crossing.DISJOINT
    if ((d1 == 0 and _on_closed_segment(a, c, d))
            or (d2 == 0 and _on_closed_segment(b, c, d))
            or (d3 == 0 and _on_closed_segment(c, a, b))
            or (d4 == 0 and _on_closed_segment(d, a, b))):
        return Crossing.TOUCH
    return Crossing.DISJOINT


def segments_meet(s, t) -> bool:
    return segments_intersect(s, t) is not Crossing.DISJOINT


def in_triangle(p, a, b, c) -> Location:
    o = _sign(cross(a, b, c))
    if o == 0:
        if tuple(a) == tuple(b) == tuple(c):
            return Location.BOUNDARY if tuple(p) == tuple(a) else Location.OUTSIDE
        on = any(point_on_segment(p, u, v) for u, v in ((a, b), (b, c), (a, c))
                 if tuple(u) != tuple(v))
        return Location.BOUNDARY if on else Location.OUTSIDE
    s1 = o * _sign(cross(a, b, p))
    s2 = o * _sign(cross(b, c, p))
    s3 = o * _sign(cross(c, a, p))
    if s1 > 0 and s2 > 0 and s3 > 0:
        return Location.INSIDE
    if s1 >= 0 and s2 >= 0 and s3 >= 0:
        return Location.BOUNDARY
    return Location.OUTSIDE


def conv_abx_region_contains(a, b, c, x) -> bool:
    """Whether c lies in conv{a, b, x}, decided by two closed half-planes.

    For a, b, c clockwise the region of admissible x is the closed wedge
    right of line a->c and left of line b->c; counterclockwise mirrors it.
    """
    o = _sign(cross(a, b, c))
    if o == 0:
        raise DegenerateError("a, b, c are collinear")
    s_ac = _sign(cross(a, c, x))
    s_bc = _sign(cross(b, c, x))
    if o < 0:
        return s_ac <= 0 and s_bc >= 0
    return s_ac >= 0 and s_bc <= 0


# -- polygons ---------------------------------------------------------------

def _edges(polygon: Sequence):
    n = len(polygon)
    return [(polygon[i], polygon[(i + 1) % n]) for i in range(n)]


def is_simple_polygon(polygon: Sequence) -> bool:
    n = len(polygon)
    if n < 3 or len({tuple(p) for p in polygon}) != n:
        return False
    if all(cross(polygon[0], polygon[1], p) == 0 for p in polygon[2:]):
        return False
    edges = _edges(polygon)
    for i in range(n):
        for j in range(i + 1, n):
            kind = segments_intersect(edges[i], edges[j])
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            if adjacent:
                if kind is Crossing.INTERIOR_CROSS:
                    return False
            elif kind is not Crossing.DISJOINT:
                return False
    return True


def point_in_polygon(p, polygon: Sequence) -> Location:
    """Exact crossing-number test for a simple polygon."""
    inside = False
    for u, v in _edges(polygon):
        if point_on_segment(p, u, v):
            return Location.BOUNDARY
        if (u[1] > p[1]) != (v[1] > p[1]):
            # x-coordinate of the edge at height p.y compared without division
            lhs = (p[0] - u[0]) * (v[1] - u[1])
            rhs = (v[0] - u[0]) * (p[1] - u[1])
            if (v[1] - u[1] > 0 and lhs < rhs) or (v[1] - u[1] < 0 and lhs > rhs):
                inside = not inside
    return Location.INSIDE if inside else Location.OUTSIDE


def convex_hull(points: Sequence) -> list:
    """Monotone chain hull, counterclockwise, without collinear vertices."""
    pts = sorted({(p[0], p[1]) for p in points})
    if len(pts) <= 2:
        return pts
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def in_convex_hull(p, hull: Sequence, strict: bool = False) -> bool:
    """Membership in a hull produced by :func:`convex_hull` (any size)."""
    if not hull:
        return False
    if len(hull) == 1:
        return not strict and tuple(p) == tuple(hull[0])
    if len(hull) == 2:
        return not strict and point_on_segment(p, hull[0], hull[1])
    n = len(hull)
    for i in range(n):
        s = cross(hull[i], hull[(i + 1) % n], p)
        if s < 0 or (strict and s == 0):
            return False
    return True


def convex_sets_intersect(h1: Sequence, h2: Sequence) -> bool:
    """Whether two closed convex hulls (possibly points or segments) meet."""
    if not h1 or not h2:
        return False
    if any(in_convex_hull(p, h2) for p in h1) or any(in_convex_hull(p, h1) for p in h2):
        return True
    e1 = _edges(h1) if len(h1) > 2 else ([(h1[0], h1[1])] if len(h1) == 2 else [])
    e2 = _edges(h2) if len(h2) > 2 else ([(h2[0], h2[1])] if len(h2) == 2 else [])
    return any(segments_meet(s, t) for s in e1 for t in e2)


# -- guard points -----------------------------------------------------------

def _segment_hits_closed_edge(v, p, edge) -> bool:
    if tuple(v) == tuple(p):
        return point_on_segment(v, *edge)
    return segments_meet((v, p), edge)


def is_guard_point(v, polygon: Sequence, edge_index: int) -> bool:
    """Every segment from v to a polygon vertex meets the given closed edge."""
    if not is_simple_polygon(polygon):
        raise GeometryError("polygon is not simple")
    if point_in_polygon(v, polygon) is not Location.OUTSIDE:
        raise GeometryError("v must lie strictly outside the polygon")
    return _guards(v, polygon, edge_index)


def _guards(v, polygon, edge_index) -> bool:
    n = len(polygon)
    edge = (polygon[edge_index % n], polygon[(edge_index + 1) % n])
    return all(_segment_hits_closed_edge(v, p, edge) for p in polygon)


class GuardResult(NamedTuple):
    edge: int | None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.edge is not None


def _ray_beyond_violations(v, p, polygon) -> tuple[bool, bool]:
    """Scan the open ray starting at p pointing away from v.

    Returns (enters_interior, grazes) for that ray against the polygon.
    """
    dx, dy = p[0] - v[0], p[1] - v[1]
    # parametrise q(t) = p + t*(dx, dy); collect t > 0 where the ray meets an edge
    ts = set()
    far = max(abs(q[0] - p[0]) + abs(q[1] - p[1]) for q in polygon)
    span = abs(dx) + abs(dy)
    t_max = Fraction(far + 1) / span + 1
    tip = (p[0] + t_max * dx, p[1] + t_max * dy)
    for u, w in _edges(polygon):
        kind = segments_intersect((p, tip), (u, w))
        if kind is Crossing.DISJOINT:
            continue
        for q in (u, w):
            if point_on_segment(q, p, tip):
                ts.add(_param(p, dx, dy, q))
        den = dx * (w[1] - u[1]) - dy * (w[0] - u[0])
        if den != 0:
            num = (u[0] - p[0]) * (w[1] - u[1]) - (u[1] - p[1]) * (w[0] - u[0])
            ts.add(Fraction(num) / den)
    ts = sorted(t for t in ts if t > 0)
    if not ts:
        return False, False
    marks = [Fraction(0)] + ts + [ts[-1] + 1]
    for lo, hi in zip(marks, marks[1:]):
        mid = (lo + hi) / 2
        q = (p[0] + mid * dx, p[1] + mid * dy)
        if point_in_polygon(q, polygon) is Location.INSIDE:
            return True, True
    return False, True


def _param(p, dx, dy, q) -> Fraction:
    if dx != 0:
        return Fraction(q[0] - p[0]) / dx
    return Fraction(q[1] - p[1]) / dy


def ray_condition_holds(v, polygon: Sequence, grazing_violates: bool = False) -> bool:
    """Every ray from v through a vertex P meets the polygon only up to P."""
    for p in polygon:
        if tuple(p) == tuple(v):
            continue
        enters, grazes = _ray_beyond_violations(v, p, polygon)
        if enters or (grazing_violates and grazes):
            return False
    return True


def find_guard_edge(v, polygon: Sequence, grazing_violates: bool = False) -> GuardResult:
    if not is_simple_polygon(polygon):
        return GuardResult(None, "polygon is not simple")
    if point_in_polygon(v, polygon) is Location.INSIDE:
        return GuardResult(None, "v lies inside the polygon")
    if not ray_condition_holds(v, polygon, grazing_violates):
        return GuardResult(None, "a ray from v through a vertex re-enters the polygon beyond it")
    for i in range(len(polygon)):
        if _guards(v, polygon, i):
            return GuardResult(i)
    return GuardResult(None, "no edge guards every vertex")
