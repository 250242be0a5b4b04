"""Polygon text format: one ``x y`` pair per line, ``#`` starts a comment line."""

from __future__ import annotations

from typing import Iterable

from .errors import ArithmeticOverflowError, ParseError
from .lattice import LatticePoint


def parse_polygon(text: str) -> list[LatticePoint]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"expected two integers, got {raw!r}")
        try:
            out.append(LatticePoint(int(parts[0], 10), int(parts[1], 10)))
        except ValueError:
            raise ParseError(lineno, f"not an integer pair: {raw!r}") from None
        except ArithmeticOverflowError:
            raise ParseError(lineno, f"coordinate outside the 64-bit range: {raw!r}") from None
    if not out:
        raise ParseError(1, "no vertices")
    return out


def format_polygon(vertices: Iterable[LatticePoint]) -> str:
    return "".join(f"{p.x} {p.y}\n" for p in vertices)
