"""Command line: ``civitas {arith,bounds,solve,verify,render}``.

Exit codes: 0 success, 1 domain failure (failed verification, bad file,
unwritable output), 2 usage error.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from pathlib import Path
from typing import List, Optional

from . import alcuin
from .alcuin import PROBLEMS, REFERENCE_COUNTS, ProblemError
from .geometry import Tolerance, container_area
from .layoutfile import LayoutParseError, read_layout, serialize
from .packer import SolverConfig, solve
from .packer.solver import DEFAULT_BUDGET_MS
from .svg import render_svg
from .verifier import density_report, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _err(msg: str) -> None:
    print(f"civitas: {msg}", file=sys.stderr)


def cmd_arith(args) -> int:
    try:
        trace = alcuin.medieval_count(args.problem, args.variant)
    except ProblemError as exc:
        _err(str(exc))
        return EXIT_FAIL
    for k, step in enumerate(trace.steps, start=1):
        print(f"{k:2d}. {step}")
    print(f"count = {trace.final_count}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    inst = alcuin.make_instance(args.problem)
    area = container_area(inst.container)
    ref = REFERENCE_COUNTS[args.problem]
    label = "pi=3 area" if args.problem == "rotunda" else "egyptian area"
    print(f"problem         {args.problem}")
    print(f"house           {inst.house.length:g} x {inst.house.width:g}")
    print(f"{label:<15} {alcuin.medieval_area(inst):.3f}")
    print(f"exact area      {area:.3f}")
    print(f"house areas     {area / inst.house.area:.3f}")
    print(f"bound           {alcuin.house_area_bound(inst)}")
    for variant, count in ref.medieval.items():
        print(f"{variant + ' count':<15} {count}")
    print(f"singmaster      {'/'.join(str(c) for c in ref.singmaster)}")
    print(f"best known      {ref.best_known}")
    return EXIT_OK


def cmd_solve(args) -> int:
    inst = alcuin.make_instance(args.problem)
    angles = tuple(math.radians(a) for a in args.angle) if args.angle else None
    config = SolverConfig(seed=args.seed, budget_ms=args.budget_ms, offset_step=args.offset_step,
                          angle_candidates=angles, enable_local_search=not args.no_local_search,
                          iterations=args.iterations)
    layout = solve(inst, config)
    text = serialize(layout)
    try:
        Path(args.output).write_text(text, encoding="utf-8")
    except OSError as exc:
        _err(f"cannot write {args.output}: {exc}")
        return EXIT_FAIL
    for name, count in layout.provenance.stages:
        print(f"{name:<13} {count}")
    print(f"iterations    {layout.provenance.iterations}")
    report = verify(layout)
    print(f"density       {report.density:.5f}")
    print(f"verification  {'passed' if report.passed else 'FAILED'}")
    return EXIT_OK if report.passed else EXIT_FAIL


def _load(path: str):
    try:
        return read_layout(path)
    except OSError as exc:
        _err(f"cannot read {path}: {exc}")
    except LayoutParseError as exc:
        _err(f"{path}: {exc}")
    return None


def cmd_verify(args) -> int:
    layout = _load(args.layout)
    if layout is None:
        return EXIT_FAIL
    report = verify(layout, Tolerance(args.tol))
    print(density_report(report, layout))
    for v in report.violations:
        idx = " ".join(str(i) for i in v.indices)
        print(f"violation {v.kind} [{idx}] {v.magnitude:.9f}")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_render(args) -> int:
    layout = _load(args.layout)
    if layout is None:
        return EXIT_FAIL
    report = verify(layout)
    if not report.passed and not args.force:
        _err(f"{args.layout} fails verification ({len(report.violations)} violations); use --force to draw it")
        return EXIT_FAIL
    svg = render_svg(layout, scale=args.scale, labels=args.labels)
    try:
        Path(args.output).write_text(svg, encoding="utf-8")
    except OSError as exc:
        _err(f"cannot write {args.output}: {exc}")
        return EXIT_FAIL
    print(f"wrote {args.output} ({layout.count} houses)")
    return EXIT_OK


def _positive_int(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def _seed(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _nonneg_float(text: str) -> float:
    v = float(text)
    if not (v >= 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"must be finite and >= 0, got {text}")
    return v


def _positive_float(text: str) -> float:
    v = float(text)
    if not (v > 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="civitas", description="Pack houses into Alcuin's cities.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log solver progress")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("arith", help="replay the medieval arithmetic")
    p.add_argument("problem", choices=PROBLEMS)
    p.add_argument("--variant", choices=alcuin.VARIANTS, default="alcuin")
    p.set_defaults(func=cmd_arith)

    p = sub.add_parser("bounds", help="areas, area bound and reference counts")
    p.add_argument("problem", choices=PROBLEMS)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("solve", help="pack houses and write a layout file")
    p.add_argument("problem", choices=PROBLEMS)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--budget-ms", type=_positive_int, default=DEFAULT_BUDGET_MS,
                   help="search budget, converted to a fixed iteration count")
    p.add_argument("--iterations", type=int, default=None, help="exact local-search iteration count")
    p.add_argument("--offset-step", type=_positive_float, default=0.5, help="row offset grid in feet")
    p.add_argument("--angle", type=float, action="append", default=[],
                   help="extra house angle in degrees (repeatable; default: wall directions)")
    p.add_argument("--no-local-search", action="store_true")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a layout file")
    p.add_argument("layout")
    p.add_argument("--tol", type=_nonneg_float, default=1e-6, help="tolerance in feet")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a layout file as SVG")
    p.add_argument("layout")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--scale", type=_positive_float, default=None, help="pixels per foot")
    p.add_argument("--labels", action=argparse.BooleanOptionalAction, default=None,
                   help="number the houses (default: only up to 50 houses)")
    p.add_argument("--force", action="store_true", help="draw even if verification fails")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "iterations", None) is not None and args.iterations < 0:
        parser.error("--iterations must be >= 0")
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
