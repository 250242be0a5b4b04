"""Text serialization of reduction traces and an independent replay checker.

Format::

    TRACE
    INITIAL <n>
    <x> <y>            (n lines, the subdivided cycle)
    STEPS <k>
    REMOVE <i> (<x>,<y>) m=<m> m*=<m*>
    INSERT <i> (<x>,<y>) m=<m> m*=<m*>
    FINAL <n>
    <x> <y>
    END

``serialize(parse(text)) == text`` for every text produced by
:func:`serialize`.
"""

from __future__ import annotations

import re
from math import gcd

from .errors import LatticeError, ParseError
from .lattice import LatticePoint, Polygon, ReflexivePolygon
from .reduction import ElementaryOp, OpKind, ReductionTrace, TraceStep

_STEP_RE = re.compile(r"^(REMOVE|INSERT) (\d+) \((-?\d+),(-?\d+)\) m=(\d+) m\*=(-?\d+)$")


def _vertex_lines(cycle) -> list[str]:
    return [f"{p.x} {p.y}" for p in cycle]


def serialize(trace: ReductionTrace) -> str:
    lines = ["TRACE", f"INITIAL {trace.initial.m}"]
    lines += _vertex_lines(trace.initial.cycle)
    lines.append(f"STEPS {len(trace.steps)}")
    for s in trace.steps:
        lines.append(
            f"{s.op.kind.value} {s.op.index} ({s.op.point.x},{s.op.point.y}) m={s.m_after} m*={s.m_star_after}"
        )
    lines.append(f"FINAL {trace.final.m}")
    lines += _vertex_lines(trace.final.cycle)
    lines.append("END")
    return "\n".join(lines) + "\n"


class _Lines:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.pos = 0

    def next(self, what: str) -> str:
        if self.pos >= len(self.lines):
            raise ParseError(self.pos + 1, f"unexpected end of trace, expected {what}")
        self.pos += 1
        return self.lines[self.pos - 1]

    def header(self, keyword: str) -> int:
        line = self.next(keyword)
        parts = line.split(" ")
        if len(parts) != 2 or parts[0] != keyword or not parts[1].isdigit():
            raise ParseError(self.pos, f"expected '{keyword} <count>', got {line!r}")
        return int(parts[1])

    def vertices(self, count: int) -> list[LatticePoint]:
        out = []
        for _ in range(count):
            line = self.next("a vertex")
            m = re.fullmatch(r"(-?\d+) (-?\d+)", line)
            if not m:
                raise ParseError(self.pos, f"bad vertex line {line!r}")
            out.append(LatticePoint(int(m[1]), int(m[2])))
        return out


def _reflexive(cycle, line: int) -> ReflexivePolygon:
    try:
        r = ReflexivePolygon(cycle)
    except LatticeError as exc:
        raise ParseError(line, f"polygon is not a centered reflexive polygon: {exc}") from exc
    if r.cycle != tuple(cycle):
        raise ParseError(line, "polygon is not given as a counterclockwise subdivided cycle")
    return r


def parse(text: str) -> ReductionTrace:
    src = _Lines(text)
    if src.next("TRACE") != "TRACE":
        raise ParseError(1, "trace must start with TRACE")
    initial = _reflexive(src.vertices(src.header("INITIAL")), src.pos)
    steps = []
    for _ in range(src.header("STEPS")):
        line = src.next("a step")
        m = _STEP_RE.match(line)
        if not m:
            raise ParseError(src.pos, f"bad step line {line!r}")
        op = ElementaryOp(OpKind(m[1]), int(m[2]), LatticePoint(int(m[3]), int(m[4])))
        steps.append(TraceStep(op, int(m[5]), int(m[6])))
    final = _reflexive(src.vertices(src.header("FINAL")), src.pos)
    if src.next("END") != "END":
        raise ParseError(src.pos, "trace must end with END")
    if src.pos != len(src.lines):
        raise ParseError(src.pos + 1, "trailing content after END")
    return ReductionTrace(initial=initial, steps=tuple(steps), final=final)


# The replay below deliberately avoids the reduction module: it works on
# plain lists and recomputes the dual and both counts from scratch.

def _boundary(cycle) -> int:
    n = len(cycle)
    return sum(gcd(cycle[(i + 1) % n].x - cycle[i].x, cycle[(i + 1) % n].y - cycle[i].y) for i in range(n))


def _twice_area(cycle) -> int:
    n = len(cycle)
    return sum(cycle[i].x * cycle[(i + 1) % n].y - cycle[i].y * cycle[(i + 1) % n].x for i in range(n))


def _origin_strictly_inside(cycle) -> bool:
    n = len(cycle)
    return all(cycle[i].x * cycle[(i + 1) % n].y - cycle[i].y * cycle[(i + 1) % n].x > 0 for i in range(n))


def _dual_boundary(cycle) -> int:
    n = len(cycle)
    dirs = []
    for i in range(n):
        dx, dy = cycle[(i + 1) % n].x - cycle[i].x, cycle[(i + 1) % n].y - cycle[i].y
        g = gcd(dx, dy)
        d = LatticePoint(dx // g, dy // g)
        if not dirs or dirs[-1] != d:
            dirs.append(d)
    if dirs[0] == dirs[-1]:
        dirs.pop()
    return _boundary(dirs)


def _well_formed(cycle) -> bool:
    """Convex, counterclockwise, reflexive about O and subdivided."""
    try:
        if Polygon(cycle).vertices != tuple(cycle):
            return False
    except LatticeError:
        return False
    if not _origin_strictly_inside(cycle):
        return False
    b = _boundary(cycle)
    return b == len(cycle) and _twice_area(cycle) - b + 2 == 2


def replay(trace: ReductionTrace) -> list[str]:
    """Re-execute a trace and return a list of problems (empty when consistent)."""
    problems = []
    cycle = list(trace.initial.cycle)
    if not _well_formed(cycle):
        problems.append("initial polygon is not a subdivided reflexive polygon")
    for k, step in enumerate(trace.steps, 1):
        op = step.op
        n = len(cycle)
        if op.kind is OpKind.REMOVE:
            if not 0 <= op.index < n or cycle[op.index] != op.point:
                problems.append(f"step {k}: vertex {op.index} is not {op.point}")
                break
            tri = (cycle[op.index - 1], cycle[op.index], cycle[(op.index + 1) % n])
            cycle = cycle[:op.index] + cycle[op.index + 1:]
        else:
            if not 0 <= op.index <= n:
                problems.append(f"step {k}: insertion index {op.index} out of range")
                break
            tri = (cycle[op.index - 1], op.point, cycle[op.index % n])
            cycle = cycle[:op.index] + [op.point] + cycle[op.index:]
        if abs(_twice_area(tri)) != 1:
            problems.append(f"step {k}: triangle {[str(p) for p in tri]} is not simple")
        if not _well_formed(cycle):
            problems.append(f"step {k}: result is not a subdivided reflexive polygon")
            break
        m, m_star = len(cycle), _dual_boundary(cycle)
        if (m, m_star) != (step.m_after, step.m_star_after):
            problems.append(f"step {k}: recorded m={step.m_after} m*={step.m_star_after}, replay gives {m}, {m_star}")
        if m + m_star != 12:
            problems.append(f"step {k}: m + m* = {m + m_star}")
    if cycle != list(trace.final.cycle):
        problems.append("replayed polygon differs from the recorded final polygon")
    if len(cycle) != 4 or cycle[0] + cycle[2] != LatticePoint(0, 0) or cycle[1] + cycle[3] != LatticePoint(0, 0):
        problems.append("final polygon is not a parallelogram with m = 4 centred at O")
    return problems


def is_consistent(trace: ReductionTrace) -> bool:
    return not replay(trace)
