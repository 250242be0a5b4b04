"""Dual polygon of a reflexive polygon and the 12-point check."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ZeroVectorError
from .lattice import (
    LatticePoint,
    Polygon,
    ReflexivePolygon,
    boundary_count,
    strict_form,
)


def primitive_vector(v: LatticePoint) -> LatticePoint:
    """The lattice point closest to the origin on the ray through v."""
    g = v.content()
    if g == 0:
        raise ZeroVectorError("the zero vector has no direction")
    return LatticePoint(v.x // g, v.y // g)


def dual_vertices(cycle: Sequence[LatticePoint]) -> list[LatticePoint]:
    """Primitive edge vectors of a vertex cycle, consecutive repeats merged.

    Repeats come from straight vertices, so the strict and the subdivided
    form of a polygon give the same list when they start at the same vertex.
    """
    n = len(cycle)
    prims = [primitive_vector(cycle[(i + 1) % n] - cycle[i]) for i in range(n)]
    out = [prims[0]] + [v for i, v in enumerate(prims[1:], 1) if v != prims[i - 1]]
    if out[-1] == out[0]:
        out.pop()
    return out


@dataclass(frozen=True)
class DualResult:
    dual: Polygon
    m: int
    m_star: int


def dual_polygon(m: ReflexivePolygon) -> DualResult:
    """Dual polygon: primitive edge vectors of ``m`` placed at the origin.

    Built from the strict form, so the first dual vertex is the direction
    of the first strict edge.
    """
    dual = strict_form(Polygon(dual_vertices(m.polygon.vertices)))
    return DualResult(dual=dual, m=m.m, m_star=boundary_count(dual))


@dataclass(frozen=True)
class TwelveReport:
    m: int
    m_star: int
    sum: int
    ok: bool


def verify_twelve(m: ReflexivePolygon) -> TwelveReport:
    d = dual_polygon(m)
    total = d.m + d.m_star
    return TwelveReport(m=d.m, m_star=d.m_star, sum=total, ok=total == 12)
