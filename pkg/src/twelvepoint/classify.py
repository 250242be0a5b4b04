"""Unimodular equivalence, normal forms and the census of reflexive polygons."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key, lru_cache
from math import gcd
from typing import Optional

from .duality import dual_polygon
from .errors import InvalidMapError
from .lattice import (
    ORIGIN,
    LatticePoint,
    Polygon,
    ReflexivePolygon,
    area2,
    checked,
    validate_reflexive,
)


@dataclass(frozen=True)
class UnimodularMap:
    """p -> [[a, b], [c, d]] p + t with determinant +-1."""

    a: int
    b: int
    c: int
    d: int
    t: LatticePoint = ORIGIN

    def __post_init__(self):
        if self.det not in (1, -1):
            raise InvalidMapError(f"determinant {self.det} is not +-1")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __call__(self, p: LatticePoint) -> LatticePoint:
        return LatticePoint(
            checked(self.a * p.x + self.b * p.y + self.t.x),
            checked(self.c * p.x + self.d * p.y + self.t.y),
        )

    def then(self, other: UnimodularMap) -> UnimodularMap:
        """The map ``other(self(p))``."""
        return UnimodularMap(
            other.a * self.a + other.b * self.c,
            other.a * self.b + other.b * self.d,
            other.c * self.a + other.d * self.c,
            other.c * self.b + other.d * self.d,
            other(self.t),
        )


IDENTITY = UnimodularMap(1, 0, 0, 1)


def apply_unimodular(u: UnimodularMap, m: ReflexivePolygon) -> ReflexivePolygon:
    return validate_reflexive(Polygon(u(p) for p in m.cycle))


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def hermite_map(v: LatticePoint, w: LatticePoint) -> UnimodularMap:
    """The unique U in GL2(Z) taking the columns (v, w) to Hermite normal form.

    U v = (g, 0) with g > 0, and U w = (h, k) with k > 0 and 0 <= h < k.
    v and w must be linearly independent.
    """
    g, s, t = _ext_gcd(v.x, v.y)
    a, b, c, d = s, t, -v.y // g, v.x // g
    k = c * w.x + d * w.y
    if k == 0:
        raise ValueError(f"{v} and {w} are parallel")
    if k < 0:
        c, d, k = -c, -d, -k
    h = a * w.x + b * w.y
    q = h // k
    return UnimodularMap(a - q * c, b - q * d, c, d)


def _key(vertices) -> tuple:
    return tuple((p.x, p.y) for p in vertices)


def _canonical_vertices(u: UnimodularMap, strict: Polygon) -> tuple[LatticePoint, ...]:
    image = Polygon(u(p) for p in strict).vertices
    start = image.index(min(image))
    return image[start:] + image[:start]


def normal_form(m: ReflexivePolygon) -> ReflexivePolygon:
    """Canonical representative of the unimodular class of ``m``.

    Each ordered pair of adjacent strict vertices, in both directions, is
    sent to Hermite normal form; the lexicographically smallest resulting
    vertex list (rotated to start at its smallest vertex) wins.
    """
    strict = m.polygon
    n = len(strict)
    best = None
    for j in range(n):
        v, w = strict[j], strict[(j + 1) % n]
        for p, q in ((v, w), (w, v)):
            cand = _canonical_vertices(hermite_map(p, q), strict)
            if best is None or _key(cand) < _key(best):
                best = cand
    return ReflexivePolygon(best)


def find_equivalence(m1: ReflexivePolygon, m2: ReflexivePolygon) -> Optional[UnimodularMap]:
    """A linear unimodular map carrying m1 onto m2, or None."""
    s1, s2 = m1.polygon, m2.polygon
    if m1.m != m2.m or len(s1) != len(s2) or area2(s1) != area2(s2):
        return None
    v0, v1 = s1[0], s1[1]
    det = v0.cross(v1)
    targets = set(s2)
    n = len(s2)
    for j in range(n):
        w, z = s2[j], s2[(j + 1) % n]
        for p, q in ((w, z), (z, w)):
            entries = (
                p.x * v1.y - q.x * v0.y,
                q.x * v0.x - p.x * v1.x,
                p.y * v1.y - q.y * v0.y,
                q.y * v0.x - p.y * v1.x,
            )
            if any(e % det for e in entries):
                continue
            a, b, c, d = (e // det for e in entries)
            if a * d - b * c not in (1, -1):
                continue
            u = UnimodularMap(a, b, c, d)
            if {u(x) for x in s1} == targets:
                return u
    return None


def are_equivalent(m1: ReflexivePolygon, m2: ReflexivePolygon) -> bool:
    return find_equivalence(m1, m2) is not None


@dataclass(frozen=True)
class EquivalenceClass:
    representative: ReflexivePolygon
    m: int
    m_star: int
    area2: int


def _angle_cmp(p, q) -> int:
    hp = 0 if p[1] > 0 or (p[1] == 0 and p[0] > 0) else 1
    hq = 0 if q[1] > 0 or (q[1] == 0 and q[0] > 0) else 1
    if hp != hq:
        return hp - hq
    c = p[0] * q[1] - p[1] * q[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def enumerate_polygons(box: int) -> list[ReflexivePolygon]:
    """Every strictly convex polygon with vertices in [-box, box]^2 whose only
    interior lattice point is the origin.

    Vertices of such a polygon are primitive vectors, and each fan triangle
    (O, u, w) between consecutive vertices must have doubled area equal to
    gcd(w - u): that is Pick's formula with no interior points.  The search
    walks primitive vectors in angular order and prunes on these two facts.
    """
    if box < 0:
        raise ValueError(f"box must be non-negative, got {box}")
    pts = sorted(
        ((x, y) for x in range(-box, box + 1) for y in range(-box, box + 1) if gcd(x, y) == 1),
        key=cmp_to_key(_angle_cmp),
    )
    n = len(pts)
    found = []

    def fan_ok(u, w) -> bool:
        c = u[0] * w[1] - u[1] * w[0]
        return c > 0 and c == gcd(w[0] - u[0], w[1] - u[1])

    def left_turn(a, b, c) -> bool:
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]) > 0

    def extend(path: list, last_idx: int) -> None:
        last = path[-1]
        for idx in range(last_idx + 1, n):
            w = pts[idx]
            if last[0] * w[1] - last[1] * w[0] <= 0:
                break
            if not fan_ok(last, w):
                continue
            if len(path) >= 2 and not left_turn(path[-2], last, w):
                continue
            first = path[0]
            if len(path) >= 2 and fan_ok(w, first) and left_turn(last, w, first) and left_turn(w, first, path[1]):
                found.append(path + [w])
            path.append(w)
            extend(path, idx)
            path.pop()

    for i in range(n):
        extend([pts[i]], i)
    return [ReflexivePolygon(v) for v in found]


@lru_cache(maxsize=None)
def _census(box: int) -> tuple[EquivalenceClass, ...]:
    classes = {}
    for poly in enumerate_polygons(box):
        rep = normal_form(poly)
        key = _key(rep.polygon)
        if key not in classes:
            d = dual_polygon(rep)
            classes[key] = EquivalenceClass(rep, d.m, d.m_star, area2(rep.polygon))
    return tuple(sorted(classes.values(), key=lambda c: (c.m, c.area2, _key(c.representative.polygon))))


def enumerate_reflexive(box: int) -> list[EquivalenceClass]:
    """Classes of reflexive polygons fitting in [-box, box]^2 with O at the origin,
    sorted by (m, doubled area, representative)."""
    return list(_census(box))


def invariant_collisions(classes) -> list[tuple[int, int]]:
    """Index pairs of classes sharing (m, m*, area2); normal forms tell them apart."""
    out = []
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            a, b = classes[i], classes[j]
            if (a.m, a.m_star, a.area2) == (b.m, b.m_star, b.area2):
                out.append((i, j))
    return out


class SplitMix64:
    """Sebastiano Vigna's SplitMix64 generator."""

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next() % n


# elementary shears and sign flips; products of these generate GL2(Z)
GENERATORS = (
    UnimodularMap(1, 1, 0, 1),
    UnimodularMap(1, -1, 0, 1),
    UnimodularMap(1, 0, 1, 1),
    UnimodularMap(1, 0, -1, 1),
    UnimodularMap(-1, 0, 0, 1),
    UnimodularMap(1, 0, 0, -1),
)


def random_map(rng: SplitMix64, steps: int) -> UnimodularMap:
    u = IDENTITY
    for _ in range(steps):
        u = u.then(GENERATORS[rng.below(len(GENERATORS))])
    return u


def random_reflexive(seed: int, steps: int) -> ReflexivePolygon:
    """Seeded image of one of the 16 class representatives under `steps`
    random generators.  The first draw picks the class."""
    reps = _census(4)
    rng = SplitMix64(seed)
    rep = reps[rng.below(len(reps))].representative
    return apply_unimodular(random_map(rng, steps), rep)
