"""Exact integer points and convex lattice polygons.

Every coordinate and every intermediate product is kept inside the signed
64-bit range; leaving it raises :class:`ArithmeticOverflowError` instead of
silently growing or wrapping.

Polygons are always stored counterclockwise.  A polygon may contain
straight (180 degree) vertices; :func:`strict_form` drops them and
:func:`subdivide` turns every boundary lattice point into a vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Sequence

from .errors import (
    ArithmeticOverflowError,
    DegeneratePolygonError,
    InconsistentPolygonError,
    InvalidPolygonError,
    NotReflexiveError,
)

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


def checked(value: int) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise ArithmeticOverflowError(f"value {value} outside the 64-bit range")
    return value


def _mul(a: int, b: int) -> int:
    return checked(a * b)


@dataclass(frozen=True, order=True, slots=True)
class LatticePoint:
    """A point of Z^2; also used as an integer vector."""

    x: int
    y: int

    def __post_init__(self):
        if type(self.x) is not int or type(self.y) is not int:
            raise TypeError(f"lattice coordinates must be int, got {self.x!r}, {self.y!r}")
        checked(self.x)
        checked(self.y)

    def __add__(self, other: LatticePoint) -> LatticePoint:
        return LatticePoint(checked(self.x + other.x), checked(self.y + other.y))

    def __sub__(self, other: LatticePoint) -> LatticePoint:
        return LatticePoint(checked(self.x - other.x), checked(self.y - other.y))

    def __neg__(self) -> LatticePoint:
        return LatticePoint(checked(-self.x), checked(-self.y))

    def __mul__(self, k: int) -> LatticePoint:
        return LatticePoint(_mul(self.x, k), _mul(self.y, k))

    __rmul__ = __mul__

    def __iter__(self) -> Iterator[int]:
        yield self.x
        yield self.y

    def __str__(self) -> str:
        return f"({self.x},{self.y})"

    def cross(self, other: LatticePoint) -> int:
        return checked(_mul(self.x, other.y) - _mul(self.y, other.x))

    def dot(self, other: LatticePoint) -> int:
        return checked(_mul(self.x, other.x) + _mul(self.y, other.y))

    def content(self) -> int:
        """gcd(|x|, |y|): the number of lattice steps along this vector."""
        return gcd(self.x, self.y)


ORIGIN = LatticePoint(0, 0)


def as_point(value) -> LatticePoint:
    if isinstance(value, LatticePoint):
        return value
    x, y = value
    return LatticePoint(x, y)


def orient(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> int:
    """Twice the signed area of triangle abc (positive when counterclockwise)."""
    return (b - a).cross(c - a)


def on_segment(p: LatticePoint, a: LatticePoint, b: LatticePoint) -> bool:
    """True iff p lies on the closed segment [a, b]."""
    if orient(a, b, p) != 0:
        return False
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def _cyclic_pairs(seq: Sequence) -> Iterator[tuple]:
    n = len(seq)
    for i in range(n):
        yield seq[i], seq[(i + 1) % n]


def _half(d: LatticePoint) -> int:
    return 0 if d.y > 0 or (d.y == 0 and d.x > 0) else 1


def _angle_less(d1: LatticePoint, d2: LatticePoint) -> bool:
    h1, h2 = _half(d1), _half(d2)
    if h1 != h2:
        return h1 < h2
    return d1.cross(d2) > 0


def _weakly_convex_ccw(pts: Sequence[LatticePoint]) -> bool:
    n = len(pts)
    edges = [pts[(i + 1) % n] - pts[i] for i in range(n)]
    for e1, e2 in _cyclic_pairs(edges):
        turn = e1.cross(e2)
        if turn < 0 or (turn == 0 and e1.dot(e2) <= 0):
            return False
    # every turn is in [0, pi), so the winding number is the number of wraps
    wraps = sum(1 for e1, e2 in _cyclic_pairs(edges) if _angle_less(e2, e1))
    return wraps == 1


def _shoelace(pts: Sequence[LatticePoint]) -> int:
    total = 0
    for a, b in _cyclic_pairs(pts):
        total = checked(total + a.cross(b))
    return total


class Polygon:
    """A weakly convex lattice polygon, vertices in counterclockwise order.

    Clockwise input is reversed, keeping the first vertex in place.  Input
    that is not convex in the given order is rejected, never repaired.
    """

    __slots__ = ("_vertices",)

    def __init__(self, vertices: Iterable):
        pts = tuple(as_point(v) for v in vertices)
        if len(pts) < 3:
            raise InvalidPolygonError("too-few-vertices", f"need at least 3 vertices, got {len(pts)}")
        for i, (a, b) in enumerate(_cyclic_pairs(pts)):
            if a == b:
                raise InvalidPolygonError("repeated-vertex", f"vertex {a} repeated at position {i}")
        if all(orient(pts[0], pts[1], q) == 0 for q in pts[2:]):
            raise InvalidPolygonError("collinear", "all vertices lie on one line")
        if _shoelace(pts) < 0:
            pts = (pts[0],) + pts[:0:-1]
        if not _weakly_convex_ccw(pts):
            raise InvalidPolygonError("not-convex", "vertex cycle is not convex")
        self._vertices = pts

    @property
    def vertices(self) -> tuple[LatticePoint, ...]:
        return self._vertices

    def edges(self) -> Iterator[tuple[LatticePoint, LatticePoint]]:
        return _cyclic_pairs(self._vertices)

    def translate(self, v: LatticePoint) -> Polygon:
        return Polygon(p + v for p in self._vertices)

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[LatticePoint]:
        return iter(self._vertices)

    def __getitem__(self, i):
        return self._vertices[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Polygon) and self._vertices == other._vertices

    def __hash__(self) -> int:
        return hash(self._vertices)

    def __repr__(self) -> str:
        return "Polygon([" + ", ".join(str(v) for v in self._vertices) + "])"


def area2(p: Polygon) -> int:
    """Twice the signed area (shoelace); positive for counterclockwise polygons."""
    return _shoelace(p.vertices)


def boundary_count(p: Polygon) -> int:
    return sum((b - a).content() for a, b in p.edges())


def _bbox(p: Polygon) -> tuple[int, int, int, int]:
    xs = [v.x for v in p]
    ys = [v.y for v in p]
    return min(xs), max(xs), min(ys), max(ys)


def on_boundary(p: Polygon, q: LatticePoint) -> bool:
    return any(on_segment(q, a, b) for a, b in p.edges())


def strictly_inside(p: Polygon, q: LatticePoint) -> bool:
    return all(orient(a, b, q) > 0 for a, b in p.edges())


def boundary_count_oracle(p: Polygon) -> int:
    """Count boundary lattice points by scanning the bounding box."""
    x0, x1, y0, y1 = _bbox(p)
    return sum(
        1
        for x in range(x0, x1 + 1)
        for y in range(y0, y1 + 1)
        if on_boundary(p, LatticePoint(x, y))
    )


def interior_count(p: Polygon) -> int:
    """Interior lattice points via Pick's formula: I = (2A - B + 2) / 2."""
    twice = area2(p) - boundary_count(p) + 2
    if twice % 2:
        raise InconsistentPolygonError(f"Pick's formula gives a half-integer for {p!r}")
    return twice // 2


def interior_count_oracle(p: Polygon) -> int:
    """Count interior lattice points by scanning the bounding box."""
    x0, x1, y0, y1 = _bbox(p)
    return sum(
        1
        for x in range(x0, x1 + 1)
        for y in range(y0, y1 + 1)
        if strictly_inside(p, LatticePoint(x, y))
    )


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, s, t = _ext_gcd(b, a % b)
    return g, t, s - (a // b) * t


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def interior_points(p: Polygon) -> list[LatticePoint]:
    """All interior lattice points, found line by line parallel to an edge.

    Lattice lines parallel to the first edge are level sets of an integer
    functional, so only the levels strictly between that edge and the far
    side of the polygon need to be visited; the cost does not depend on
    the bounding box.
    """
    base = p[0]
    d = p[1] - p[0]
    e = LatticePoint(d.x // d.content(), d.y // d.content())
    levels = [e.cross(v - base) for v in p]
    top = max(levels)
    # cross(e, q) == 1 for q = (-t, s) when s*e.x + t*e.y == 1
    _, s, t = _ext_gcd(e.x, e.y)
    unit = LatticePoint(-t, s)
    found = []
    for level in range(1, top):
        start = base + unit * level
        lo, hi = None, None  # open bounds: lo < k < hi
        for a, b in p.edges():
            # orient(a, b, start + k e) = c0 + k c1 must be > 0
            c0 = orient(a, b, start)
            c1 = (b - a).cross(e)
            if c1 == 0:
                if c0 <= 0:
                    lo, hi = 0, 0
                    break
            elif c1 > 0:
                bound = -c0 // c1
                lo = bound if lo is None else max(lo, bound)
            else:
                bound = _ceil_div(c0, -c1)
                hi = bound if hi is None else min(hi, bound)
        if lo is None or hi is None:
            raise InconsistentPolygonError("unbounded level in a closed polygon")
        for k in range(lo + 1, hi):
            found.append(start + e * k)
    return sorted(found)


def subdivide(p: Polygon) -> Polygon:
    """Make every boundary lattice point a vertex, keeping order and start."""
    out = []
    for a, b in p.edges():
        d = b - a
        g = d.content()
        step = LatticePoint(d.x // g, d.y // g)
        out.extend(a + step * k for k in range(g))
    return Polygon(out)


def _straight_free(pts: Sequence[LatticePoint]) -> list[LatticePoint]:
    n = len(pts)
    return [pts[i] for i in range(n) if orient(pts[i - 1], pts[i], pts[(i + 1) % n]) != 0]


def strict_form(p: Polygon) -> Polygon:
    """Drop every straight-angle vertex."""
    kept = _straight_free(p.vertices)
    if len(kept) < 3:
        raise DegeneratePolygonError(f"only {len(kept)} vertices survive")
    return Polygon(kept)


def is_strictly_convex(points: Iterable) -> bool:
    pts = [as_point(v) for v in points]
    if len(pts) < 3 or any(a == b for a, b in _cyclic_pairs(pts)):
        return False
    if any(orient(pts[i - 1], pts[i], pts[(i + 1) % len(pts)]) <= 0 for i in range(len(pts))):
        return False
    return _weakly_convex_ccw(pts)


class ReflexivePolygon:
    """A convex lattice polygon whose only interior lattice point is the origin.

    The vertex cycle is kept in subdivided form (every boundary lattice
    point is a vertex), which is what elementary operations index into.
    ``polygon`` gives the strict form.
    """

    __slots__ = ("_cycle", "_strict")

    def __init__(self, vertices: Iterable):
        poly = subdivide(vertices if isinstance(vertices, Polygon) else Polygon(vertices))
        count = interior_count(poly)
        if count != 1:
            raise NotReflexiveError(count)
        if not strictly_inside(poly, ORIGIN):
            raise InvalidPolygonError("not-centered", "the interior point is not at the origin")
        self._cycle = poly
        self._strict = strict_form(poly)

    @property
    def cycle(self) -> tuple[LatticePoint, ...]:
        return self._cycle.vertices

    @property
    def subdivided(self) -> Polygon:
        return self._cycle

    @property
    def polygon(self) -> Polygon:
        return self._strict

    @property
    def m(self) -> int:
        return len(self._cycle)

    def __len__(self) -> int:
        return len(self._cycle)

    def __eq__(self, other) -> bool:
        return isinstance(other, ReflexivePolygon) and self._cycle == other._cycle

    def __hash__(self) -> int:
        return hash(self._cycle)

    def __repr__(self) -> str:
        return "ReflexivePolygon([" + ", ".join(str(v) for v in self.cycle) + "])"


def validate_reflexive(p) -> ReflexivePolygon:
    """Check that p has exactly one interior lattice point and move it to the origin."""
    poly = p if isinstance(p, Polygon) else Polygon(p)
    count = interior_count(poly)
    if count != 1:
        raise NotReflexiveError(count)
    (center,) = interior_points(poly)
    return ReflexivePolygon(poly.translate(-center))


def same_cycle(a: Sequence, b: Sequence) -> bool:
    """True iff b is a rotation of a."""
    a, b = list(a), list(b)
    if len(a) != len(b):
        return False
    if not a:
        return True
    return any(a[i:] + a[:i] == b for i in range(len(a)) if a[i] == b[0])
