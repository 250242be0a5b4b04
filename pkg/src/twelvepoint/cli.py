"""Command-line interface.

Exit codes: 0 success, 1 parse or usage error, 2 input is not a reflexive
polygon, 3 internal contract violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import trace as tracefmt
from .classify import enumerate_reflexive, invariant_collisions, random_reflexive
from .duality import dual_polygon, verify_twelve
from .errors import (
    InvalidOperationError,
    InvalidPolygonError,
    LatticeError,
    NotReflexiveError,
    ParseError,
    ProofContractViolation,
)
from .lattice import validate_reflexive
from .reduction import check_dual_transition, reduce_to_parallelogram
from .textio import format_polygon, parse_polygon

EXIT_OK, EXIT_USAGE, EXIT_NOT_REFLEXIVE, EXIT_CONTRACT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _pairs(vertices) -> list[list[int]]:
    return [[p.x, p.y] for p in vertices]


def _read(args) -> str:
    if args.file:
        with open(args.file) as fh:
            return fh.read()
    return sys.stdin.read()


def _load(args):
    return validate_reflexive(parse_polygon(_read(args)))


def cmd_verify(args, out) -> int:
    r = verify_twelve(_load(args))
    verdict = "PASS" if r.ok else "FAIL"
    if args.json:
        out.write(json.dumps({"m": r.m, "m_star": r.m_star, "sum": r.sum, "result": verdict}) + "\n")
    else:
        out.write(f"m={r.m} m*={r.m_star} sum={r.sum} {verdict}\n")
    return EXIT_OK if r.ok else EXIT_CONTRACT


def cmd_dual(args, out) -> int:
    d = dual_polygon(_load(args))
    if args.json:
        out.write(json.dumps({"m": d.m, "m_star": d.m_star, "dual": _pairs(d.dual)}) + "\n")
    else:
        out.write(f"# m={d.m} m*={d.m_star}\n" + format_polygon(d.dual))
    return EXIT_OK


def cmd_reduce(args, out) -> int:
    text = _read(args)
    if text.startswith("TRACE"):
        if not args.replay:
            raise UsageError("reduce: a trace on input is only accepted with --replay")
        t = tracefmt.parse(text)
    else:
        t = reduce_to_parallelogram(validate_reflexive(parse_polygon(text)))
    serialized = tracefmt.serialize(t)
    problems = tracefmt.replay(tracefmt.parse(serialized)) if args.replay else []
    verdict = "INCONSISTENT" if problems else "CONSISTENT"
    if args.json:
        doc = {
            "initial": _pairs(t.initial.cycle),
            "steps": [
                {"op": s.op.kind.value, "index": s.op.index, "point": [s.op.point.x, s.op.point.y],
                 "m": s.m_after, "m_star": s.m_star_after}
                for s in t.steps
            ],
            "final": _pairs(t.final.cycle),
        }
        if args.replay:
            doc["replay"] = verdict
            doc["problems"] = problems
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(serialized)
        if args.replay:
            for p in problems:
                out.write(f"# {p}\n")
            out.write(f"replay: {verdict}\n")
    return EXIT_CONTRACT if problems else EXIT_OK


def _check_class(c) -> tuple[bool, bool]:
    rep = c.representative
    verified = verify_twelve(rep).ok
    try:
        reduced = tracefmt.is_consistent(reduce_to_parallelogram(rep))
    except ProofContractViolation:
        reduced = False
    return verified, reduced


def cmd_enumerate(args, out) -> int:
    if args.box < 1:
        raise UsageError(f"enumerate: box must be at least 1, got {args.box}")
    classes = enumerate_reflexive(args.box)
    shared: dict[int, list[int]] = {}
    for i, j in invariant_collisions(classes):
        shared.setdefault(i, []).append(j)
        shared.setdefault(j, []).append(i)
    checks = [_check_class(c) for c in classes] if args.check else []
    n = len(classes)
    n_verify = sum(v for v, _ in checks)
    n_reduce = sum(r for _, r in checks)
    if args.json:
        doc = {
            "box": args.box,
            "count": n,
            "classes": [
                {"m": c.m, "m_star": c.m_star, "area2": c.area2,
                 "vertices": _pairs(c.representative.polygon),
                 "shares_invariants_with": [k + 1 for k in sorted(shared.get(i, []))]}
                for i, c in enumerate(classes)
            ],
        }
        if args.check:
            doc["verify_pass"] = n_verify
            doc["reduce_pass"] = n_reduce
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(f"# {n} classes (box={args.box})\n")
        for i, c in enumerate(classes):
            out.write(f"\n# class {i + 1}: m={c.m} m*={c.m_star} area2={c.area2}\n")
            if i in shared:
                others = ", ".join(str(k + 1) for k in sorted(shared[i]))
                out.write(f"# invariants shared with class {others}; separated by normal form\n")
            out.write(format_polygon(c.representative.polygon))
        if args.check:
            out.write(
                f"\n{n_verify}/{n} verify {'PASS' if n_verify == n else 'FAIL'}, "
                f"{n_reduce}/{n} reduce {'PASS' if n_reduce == n else 'FAIL'}\n"
            )
    if args.check and (n_verify != n or n_reduce != n):
        return EXIT_CONTRACT
    return EXIT_OK


def cmd_random(args, out) -> int:
    if args.steps < 0:
        raise UsageError("random: steps must be non-negative")
    r = random_reflexive(args.seed, args.steps)
    if args.json:
        out.write(json.dumps({"seed": args.seed, "steps": args.steps, "vertices": _pairs(r.polygon)}) + "\n")
    else:
        out.write(f"# seed={args.seed} steps={args.steps}\n" + format_polygon(r.polygon))
    return EXIT_OK


def cmd_transition(args, out) -> int:
    m = _load(args)
    rep = check_dual_transition(m, args.index)
    tri = [[p.x, p.y] for p in rep.added_dual_triangle]
    fields = {
        "index": args.index,
        "point": [m.cycle[args.index].x, m.cycle[args.index].y],
        "m_before": rep.m_before,
        "m_after": rep.m_after,
        "m_star_before": rep.m_star_before,
        "m_star_after": rep.m_star_after,
        "added_dual_triangle": tri,
        "collinearity_ok": rep.collinearity_ok,
        "simple_ok": rep.simple_ok,
        "pick_ok": rep.pick_ok,
        "area_ok": rep.area_ok,
        "result": "PASS" if rep.ok else "FAIL",
    }
    if args.json:
        out.write(json.dumps(fields) + "\n")
    else:
        p = m.cycle[args.index]
        out.write(f"remove {args.index} ({p.x},{p.y})\n")
        out.write(f"m: {rep.m_before} -> {rep.m_after}\n")
        out.write(f"m*: {rep.m_star_before} -> {rep.m_star_after}\n")
        out.write("added dual triangle: " + " ".join(f"({x},{y})" for x, y in tri) + "\n")
        for key in ("collinearity_ok", "simple_ok", "pick_ok", "area_ok"):
            out.write(f"{key}: {str(fields[key]).lower()}\n")
        out.write(fields["result"] + "\n")
    return EXIT_OK if rep.ok else EXIT_CONTRACT


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twelvepoint", description="Reflexive lattice polygons and the 12-point theorem.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def polygon_command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", nargs="?", help="polygon file (default: stdin)")
        p.add_argument("--json", action="store_true", help="structured output")
        return p

    polygon_command("verify", "check m + m* = 12").set_defaults(func=cmd_verify)
    polygon_command("dual", "print the dual polygon").set_defaults(func=cmd_dual)
    p = polygon_command("reduce", "reduce to a parallelogram by elementary operations")
    p.add_argument("--replay", action="store_true", help="replay the trace independently")
    p.set_defaults(func=cmd_reduce)
    p = polygon_command("transition", "check the dual change for one ear removal")
    p.add_argument("--index", type=int, required=True, help="vertex of the subdivided cycle")
    p.set_defaults(func=cmd_transition)

    p = sub.add_parser("enumerate", help="census of reflexive polygons")
    p.add_argument("--box", type=int, default=4)
    p.add_argument("--check", action="store_true", help="verify and reduce every class")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("random", help="seeded random reflexive polygon")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_random)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except ParseError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except NotReflexiveError as exc:
        err.write(f"not reflexive: interior points: {exc.interior_count}\n")
        return EXIT_NOT_REFLEXIVE
    except InvalidPolygonError as exc:
        err.write(f"invalid polygon: {exc}\n")
        return EXIT_NOT_REFLEXIVE
    except (InvalidOperationError, IndexError) as exc:
        err.write(f"invalid operation: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except (ProofContractViolation, LatticeError) as exc:
        err.write(f"contract violation: {exc}\n")
        return EXIT_CONTRACT


if __name__ == "__main__":
    sys.exit(main())
