"""Command-line front end.

Exit statuses:
    0  success
    1  a verification check failed (``verify``)
    2  bad usage: unknown or contradictory flags, malformed rule
    3  unreadable or malformed snapshot / output path
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import behavior, engine, render, symmetry, truchet
from .config import DEFAULTS
from .rules import RuleError, RuleString, rule_from_text

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_SNAPSHOT = 3


class UsageError(Exception):
    pass


def _rule(text: str) -> RuleString:
    try:
        return rule_from_text(text)
    except RuleError as exc:
        raise UsageError(str(exc)) from exc


def _radii(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad radii list {text!r}") from exc


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="antlab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="simulate and optionally save a snapshot")
    run.add_argument("--rule", help="rule letters or decimal code")
    run.add_argument("--code", type=int, help="decimal rule code")
    run.add_argument("--from", dest="resume", metavar="SNAPSHOT", help="continue from a snapshot")
    run.add_argument("--steps", type=_nonneg, required=True)
    run.add_argument("--snapshot", metavar="FILE", help="write the final universe here ('-' for stdout)")

    sym = sub.add_parser("symmetry", help="list symmetric times")
    sym.add_argument("--rule", required=True)
    sym.add_argument("--horizon", type=int, required=True)
    sym.add_argument("--on-return", action="store_true", help="sample home returns only")
    sym.add_argument("--diagonal-axes", action="store_true", help="also try diagonal mirrors")

    con = sub.add_parser("contours", help="dump Truchet contours of a snapshot")
    con.add_argument("--snapshot", required=True)
    con.add_argument("--principal", action="store_true", help="only the contour through home")
    con.add_argument("--diagonals", action="store_true", help="dump the diagonals graph edge list instead")

    ver = sub.add_parser("verify", help="check the contour invariants over K tours")
    ver.add_argument("--rule", required=True)
    ver.add_argument("--returns", type=int, required=True)

    sw = sub.add_parser("sweep", help="classify every rule of a given length")
    sw.add_argument("--length", type=int, required=True)
    sw.add_argument("--horizon", type=int, default=DEFAULTS.sweep_horizon)
    sw.add_argument("--k", type=int, default=DEFAULTS.symmetric_returns_k)
    sw.add_argument("--workers", type=int, default=1)

    ren = sub.add_parser("render", help="draw a snapshot")
    ren.add_argument("--snapshot", required=True)
    ren.add_argument("--style", choices=("states", "truchet", "diagonals"), required=True)
    ren.add_argument("--out", required=True)
    ren.add_argument("--highlight", action="store_true", help="stroke the principal contour")
    ren.add_argument("--scale", type=int, default=DEFAULTS.cell_pixels)

    pr = sub.add_parser("probe", help="first escape times from growing balls")
    pr.add_argument("--rule", required=True)
    pr.add_argument("--radii", type=_radii, required=True)
    pr.add_argument("--horizon", type=int, required=True)
    return p


def _load(path: str) -> engine.Universe:
    try:
        return engine.load_snapshot(path)
    except (OSError, engine.SnapshotError, RuleError) as exc:
        raise engine.SnapshotError(f"{path}: {exc}") from exc


def cmd_run(a: argparse.Namespace) -> int:
    given = [x for x in (a.rule, a.code, a.resume) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --rule, --code, --from")
    if a.resume is not None:
        u = _load(a.resume)
    else:
        u = engine.new_universe(_rule(a.rule if a.rule is not None else str(a.code)))
    u.step(a.steps)
    text = engine.dumps_snapshot(u)
    if a.snapshot == "-":
        sys.stdout.write(text)
        return EXIT_OK
    if a.snapshot:
        try:
            Path(a.snapshot).write_text(text)
        except OSError as exc:
            raise engine.SnapshotError(str(exc)) from exc
    box = " ".join(map(str, u.bounding_box())) if u.visited else "empty"
    print(f"rule {u.rule.letters} code {u.rule.code} t {u.time} pose {u.pose} home {int(u.at_home)}")
    print(f"visited {len(u.visited)} box {box}")
    return EXIT_OK


def cmd_symmetry(a: argparse.Namespace) -> int:
    rule = _rule(a.rule)
    print(DEFAULTS.header())
    print(f"# rule {rule.letters} horizon {a.horizon} sample {'return' if a.on_return else 'step'}")
    for rep in symmetry.symmetry_scan(rule, a.horizon, a.on_return, a.diagonal_axes):
        for line in rep.lines():
            print(line)
    return EXIT_OK


def cmd_contours(a: argparse.Namespace) -> int:
    u = _load(a.snapshot)
    if a.diagonals:
        if a.principal:
            raise UsageError("--principal and --diagonals are exclusive")
        sys.stdout.write(truchet.diagonals_graph(u).dumps())
        return EXIT_OK
    contours = [truchet.principal_contour(u)] if a.principal else truchet.all_contours(u)
    for i, c in enumerate(contours):
        print(f"# contour {i} arcs {len(c)}")
        sys.stdout.write(c.dumps())
    return EXIT_OK


def cmd_verify(a: argparse.Namespace) -> int:
    rule = _rule(a.rule)
    if not rule.runs.even_run_length:
        raise UsageError(f"{rule} lacks the even run-length property; nothing to verify")
    print(DEFAULTS.header())
    print("# tour start return lemma1 evenBefore evenAfter property1 twiceVisited")
    u = engine.new_universe(rule)
    ok = True
    for i in range(a.returns):
        r = truchet.tour(u)
        ok &= r.ok
        flags = " ".join(str(int(b)) for b in (r.lemma1, r.even_before, r.even_after, r.property1))
        print(f"{i + 1} {r.start_time} {r.return_time} {flags} {len(r.twice_visited)}")
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_sweep(a: argparse.Namespace) -> int:
    print(DEFAULTS.header())
    print(f"# length {a.length} horizon {a.horizon} k {a.k}")
    print("# code\tletters\tevenRunLength\tclassification\tevidence")
    for row in behavior.sweep(a.length, a.horizon, a.k, workers=a.workers):
        line = row.line()
        if row.classification == behavior.DEGENERATE:
            line += ";degenerate: never turns right"
        print(line)
    return EXIT_OK


def cmd_render(a: argparse.Namespace) -> int:
    u = _load(a.snapshot)
    if a.style == "states":
        if a.highlight:
            raise UsageError("--highlight only applies to truchet/diagonals styles")
        text = render.render_states(u, scale=a.scale)
    else:
        text = render.render_truchet(u, diagonals=a.style == "diagonals", highlight_principal=a.highlight)
    try:
        Path(a.out).write_text(text)
    except OSError as exc:
        raise engine.SnapshotError(str(exc)) from exc
    return EXIT_OK


def cmd_probe(a: argparse.Namespace) -> int:
    rule = _rule(a.rule)
    print(DEFAULTS.header())
    print(f"# rule {rule.letters} horizon {a.horizon}")
    for r, t in behavior.unboundedness_probe(rule, a.radii, a.horizon):
        print(f"{r} {'not-yet' if t is None else t}")
    return EXIT_OK


COMMANDS = {
    "run": cmd_run,
    "symmetry": cmd_symmetry,
    "contours": cmd_contours,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "render": cmd_render,
    "probe": cmd_probe,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[a.command](a)
    except engine.SnapshotError as exc:
        print(f"antlab: {exc}", file=sys.stderr)
        return EXIT_SNAPSHOT
    except (UsageError, RuleError, ValueError, truchet.ContourError) as exc:
        print(f"antlab: {exc}", file=sys.stderr)
        return EXIT_USAGE

if __name__ == "__main__":
    sys.exit(main())
