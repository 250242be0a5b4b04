"""Elementary operations on reflexive polygons and reduction to a parallelogram.

Indices always refer to the subdivided vertex cycle of a
:class:`ReflexivePolygon`.  ``remove_ear(m, i)`` deletes vertex ``i``;
``insert_vertex(m, i, p)`` puts ``p`` at position ``i`` (between the old
vertices ``i - 1`` and ``i``), so the two are inverse for the same index.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .duality import dual_polygon
from .errors import (
    InvalidOperationError,
    InvalidPolygonError,
    NotReflexiveError,
    ProofContractViolation,
)
from .lattice import (
    ORIGIN,
    LatticePoint,
    Polygon,
    ReflexivePolygon,
    area2,
    on_boundary,
    on_segment,
    orient,
    strictly_inside,
)


class OpKind(enum.Enum):
    REMOVE = "REMOVE"
    INSERT = "INSERT"


@dataclass(frozen=True)
class ElementaryOp:
    kind: OpKind
    index: int
    point: LatticePoint


@dataclass(frozen=True)
class TraceStep:
    op: ElementaryOp
    m_after: int
    m_star_after: int


@dataclass(frozen=True)
class ReductionTrace:
    initial: ReflexivePolygon
    steps: tuple[TraceStep, ...]
    final: ReflexivePolygon


@dataclass(frozen=True)
class DualTransitionReport:
    m_before: int
    m_after: int
    m_star_before: int
    m_star_after: int
    added_dual_triangle: tuple[LatticePoint, LatticePoint, LatticePoint]
    collinearity_ok: bool
    simple_ok: bool
    # triangles (A1, O, A3), (A2, O, A3), (A4, O, A3) all have area 1/2
    pick_ok: bool
    # the dual grows by exactly the added triangle
    area_ok: bool

    @property
    def delta_ok(self) -> bool:
        return (self.m_after - self.m_before, self.m_star_after - self.m_star_before) == (-1, 1)

    @property
    def ok(self) -> bool:
        return self.delta_ok and self.collinearity_ok and self.simple_ok and self.pick_ok and self.area_ok


def is_simple_triangle(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> bool:
    """No lattice points besides the vertices; by Pick, doubled area 1."""
    return abs(orient(a, b, c)) == 1


def _check_index(m: ReflexivePolygon, i: int, upper: int) -> None:
    if not 0 <= i < upper:
        raise IndexError(f"index {i} out of range for a cycle of {m.m} vertices")


def _removal_failure(m: ReflexivePolygon, i: int) -> Optional[str]:
    cyc = m.cycle
    n = len(cyc)
    prev, cur, nxt = cyc[i - 1], cyc[i], cyc[(i + 1) % n]
    if not is_simple_triangle(prev, cur, nxt):
        return "simple-triangle"
    rest = cyc[:i] + cyc[i + 1:]
    if len(rest) < 3:
        return "too-few-vertices"
    try:
        poly = Polygon(rest)
    except InvalidPolygonError:
        return "convexity"
    if poly.vertices != rest:
        return "convexity"
    if not strictly_inside(poly, ORIGIN):
        return "origin-interior"
    return None


def ear_removable(m: ReflexivePolygon, i: int) -> bool:
    _check_index(m, i, m.m)
    return _removal_failure(m, i) is None


def remove_ear(m: ReflexivePolygon, i: int) -> ReflexivePolygon:
    _check_index(m, i, m.m)
    clause = _removal_failure(m, i)
    if clause is not None:
        raise InvalidOperationError(clause, f"cannot remove vertex {i} {m.cycle[i]}")
    out = ReflexivePolygon(m.cycle[:i] + m.cycle[i + 1:])
    if out.m != m.m - 1:
        raise ProofContractViolation(f"removal changed the boundary count by {out.m - m.m}")
    return out


def insert_vertex(m: ReflexivePolygon, i: int, p: LatticePoint) -> ReflexivePolygon:
    """Insert ``p`` so that it becomes vertex ``i`` of the result (0 <= i <= m)."""
    _check_index(m, i, m.m + 1)
    cyc = m.cycle
    prev, nxt = cyc[i - 1], cyc[i % len(cyc)]
    if p in cyc or on_boundary(m.subdivided, p):
        raise InvalidOperationError("on-boundary", f"{p} is already on the boundary")
    if not is_simple_triangle(prev, p, nxt):
        raise InvalidOperationError("simple-triangle", f"triangle {prev} {p} {nxt} is not simple")
    grown = cyc[:i] + (p,) + cyc[i:]
    try:
        poly = Polygon(grown)
    except InvalidPolygonError as exc:
        raise InvalidOperationError("convexity", str(exc)) from exc
    if poly.vertices != grown:
        raise InvalidOperationError("convexity", f"inserting {p} at {i} breaks the orientation")
    try:
        out = ReflexivePolygon(poly)
    except (NotReflexiveError, InvalidPolygonError) as exc:
        raise InvalidOperationError("reflexive", str(exc)) from exc
    if out.m != m.m + 1:
        raise ProofContractViolation(f"insertion changed the boundary count by {out.m - m.m}")
    return out


def _segment_on_boundary(poly: Polygon, a: LatticePoint, b: LatticePoint) -> bool:
    return any(on_segment(a, u, v) and on_segment(b, u, v) for u, v in poly.edges())


def check_dual_transition(m: ReflexivePolygon, i: int) -> DualTransitionReport:
    """Remove ear ``i`` and check how the dual polygon changes.

    With A1, A2, A3 the ear (A2 = vertex i), A_n the vertex before A1 and
    A4 the vertex after A3, the dual loses A12, A23 and gains A13, where
    A_kl is the point with O->A_kl equal to the vector A_k->A_l.
    """
    _check_index(m, i, m.m)
    clause = _removal_failure(m, i)
    if clause is not None:
        raise InvalidOperationError(clause, f"vertex {i} is not a removable ear")
    cyc = m.cycle
    n = len(cyc)
    an, a1, a2, a3, a4 = (cyc[(i + k) % n] for k in (-2, -1, 0, 1, 2))
    a_n1, a12, a23, a34, a13 = a1 - an, a2 - a1, a3 - a2, a4 - a3, a3 - a1

    before = dual_polygon(m)
    after = dual_polygon(remove_ear(m, i))
    new_dual = after.dual

    collinear = (
        on_segment(a12, a_n1, a13)
        and on_segment(a23, a13, a34)
        and _segment_on_boundary(new_dual, a_n1, a13)
        and _segment_on_boundary(new_dual, a13, a34)
    )
    pick = all(is_simple_triangle(p, ORIGIN, a3) for p in (a1, a2, a4))
    area = area2(new_dual) == area2(before.dual) + abs(orient(a12, a13, a23))
    return DualTransitionReport(
        m_before=before.m,
        m_after=after.m,
        m_star_before=before.m_star,
        m_star_after=after.m_star,
        added_dual_triangle=(a12, a13, a23),
        collinearity_ok=collinear,
        simple_ok=is_simple_triangle(a12, a13, a23),
        pick_ok=pick,
        area_ok=area,
    )


def _has_diagonal_avoiding_origin(m: ReflexivePolygon) -> bool:
    cyc = m.cycle
    n = len(cyc)
    strict_edges = list(m.polygon.edges())
    for j in range(n):
        for k in range(j + 2, n):
            if j == 0 and k == n - 1:
                continue
            a, b = cyc[j], cyc[k]
            if any(on_segment(a, u, v) and on_segment(b, u, v) for u, v in strict_edges):
                continue  # runs along a side
            if not on_segment(ORIGIN, a, b):
                return True
    return False


def find_removable_ear(m: ReflexivePolygon) -> Optional[int]:
    """Smallest index of a removable ear, or None.

    Raises ProofContractViolation if no ear is removable although some
    diagonal misses the origin (the argument guarantees an ear then).
    """
    for i in range(m.m):
        if _removal_failure(m, i) is None:
            return i
    if _has_diagonal_avoiding_origin(m):
        raise ProofContractViolation(f"no removable ear in {m!r} despite a diagonal missing O")
    return None


def is_terminal_parallelogram(m: ReflexivePolygon) -> bool:
    """Strict quadrilateral with 4 boundary points and diagonals meeting at O."""
    cyc = m.cycle
    if m.m != 4 or len(m.polygon) != 4:
        return False
    a, b, c, d = cyc
    return a + c == ORIGIN and b + d == ORIGIN and b - a == c - d and c - b == d - a


def _series_case_b(cyc) -> list[list[list[LatticePoint]]]:
    """Candidate ccw state sequences for the straight-angle quadrilateral."""
    k = next(j for j in range(4) if orient(cyc[j - 1], cyc[j], cyc[(j + 1) % 4]) == 0)
    c = cyc[k]
    out = []
    for reverse in (False, True):
        b, d = (cyc[(k + 1) % 4], cyc[k - 1]) if reverse else (cyc[k - 1], cyc[(k + 1) % 4])
        a = cyc[(k + 2) % 4]
        d1 = -d
        s = d1 + b
        if s.x % 2 or s.y % 2:
            continue
        e = LatticePoint(s.x // 2, s.y // 2)
        states = [[a, b, c, d], [a, e, b, c, d], [a, d1, e, b, c, d], [a, d1, e, c, d], [a, d1, c, d]]
        out.append([st[:1] + st[:0:-1] if reverse else st for st in states])
    if not out:
        raise ProofContractViolation(f"midpoint E is not a lattice point for {list(cyc)}")
    return out


def _series_case_c(cyc) -> list[list[list[LatticePoint]]]:
    out = []
    for reverse in (False, True):
        for j in range(3):
            a, b, c = (cyc[j], cyc[j - 1], cyc[j - 2]) if reverse else (cyc[j], cyc[(j + 1) % 3], cyc[(j + 2) % 3])
            a1, c1 = -a, -c
            states = [[a, b, c], [a, c1, b, c], [a, c1, b, a1, c], [a, c1, a1, c]]
            out.append([st[:1] + st[:0:-1] if reverse else st for st in states])
    return out


def _apply_series(current: ReflexivePolygon, states) -> list[tuple[ElementaryOp, ReflexivePolygon]]:
    applied = []
    for before, after in zip(states, states[1:]):
        if len(after) == len(before) + 1:
            (p,) = [q for q in after if q not in before]
            pred = after[after.index(p) - 1]
            idx = current.cycle.index(pred) + 1
            current = insert_vertex(current, idx, p)
            applied.append((ElementaryOp(OpKind.INSERT, idx, p), current))
        else:
            (p,) = [q for q in before if q not in after]
            idx = current.cycle.index(p)
            current = remove_ear(current, idx)
            applied.append((ElementaryOp(OpKind.REMOVE, idx, p), current))
    return applied


def _first_valid_series(current: ReflexivePolygon, candidates, case: str):
    for states in candidates:
        try:
            return _apply_series(current, states)
        except InvalidOperationError:
            continue
    raise ProofContractViolation(f"no labeling of case {case} gives valid elementary operations for {current!r}")


def reduce_to_parallelogram(m: ReflexivePolygon) -> ReductionTrace:
    """Remove ears while possible, then finish with the fixed series for
    the straight-angle quadrilateral or the triangle."""
    steps: list[TraceStep] = []
    current = m

    def record(op: ElementaryOp, new: ReflexivePolygon) -> None:
        m_star = dual_polygon(new).m_star
        if new.m + m_star != 12:
            raise ProofContractViolation(f"m + m* = {new.m + m_star} after {op}")
        steps.append(TraceStep(op, new.m, m_star))

    series_used = 0
    while True:
        i = find_removable_ear(current)
        if i is not None:
            point = current.cycle[i]
            current = remove_ear(current, i)
            record(ElementaryOp(OpKind.REMOVE, i, point), current)
            continue
        n_strict = len(current.polygon)
        if current.m == 4 and n_strict == 4:
            if not is_terminal_parallelogram(current):
                raise ProofContractViolation(f"terminal quadrilateral {current!r} is not a parallelogram about O")
            break
        if series_used >= 2:
            raise ProofContractViolation(f"terminal series did not reach a parallelogram from {m!r}")
        if current.m == 4 and n_strict == 3:
            applied = _first_valid_series(current, _series_case_b(current.cycle), "B")
        elif current.m == 3:
            applied = _first_valid_series(current, _series_case_c(current.cycle), "C")
        else:
            raise ProofContractViolation(f"no removable ear and no terminal case for {current!r}")
        series_used += 1
        for op, state in applied:
            record(op, state)
            current = state
    return ReductionTrace(initial=m, steps=tuple(steps), final=current)
