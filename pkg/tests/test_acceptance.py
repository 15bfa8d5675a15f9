"""One test per acceptance criterion; each prints a PASS/FAIL line.

The lines are repeated in the terminal summary at the end of the run.
"""

import math
import time

import numpy as np
import pytest

import oracles
from conftest import record
from civitas.alcuin import (PROBLEMS, REFERENCE_COUNTS, circle_area_pi3, egyptian_quadrilateral_area,
                            egyptian_triangle_area, house_area_bound, make_instance, medieval_count)
from civitas.cli import main
from civitas.geometry import Tolerance, container_area
from civitas.layoutfile import parse, read_layout, serialize
from civitas.packer import pack_rows
from civitas.svg import render_svg
from civitas.verifier import verify
from test_verifier import oracle_sets, random_layout, violation_sets

FLOORS = {"triangula": 15, "rotunda": 8000, "quadrangula": 500}
TIME_LIMIT_S = 60.0


def check(number: int, ok: bool, detail: str) -> None:
    record(f"{'PASS' if ok else 'FAIL'}  criterion {number}: {detail}")
    assert ok, detail


@pytest.fixture(scope="module")
def solved(tmp_path_factory):
    """Default solve, seed 0, for every city, through the command line; (path, seconds)."""
    out = {}
    root = tmp_path_factory.mktemp("acceptance")
    for problem in PROBLEMS:
        path = root / f"{problem}.layout"
        start = time.perf_counter()
        code = main(["solve", problem, "--seed", "0", "-o", str(path)])
        out[problem] = (path, time.perf_counter() - start, code)
    return out


def test_1_medieval_arithmetic():
    want = {
        ("quadrangula", "alcuin"): (520, [1050, 600, 26, 20]),
        ("triangula", "alcuin"): (20, [100, 45, 40, 5, 4]),
        ("rotunda", "alcuin"): (6400, [4800, 3200, 2400, 1600, 80, 80]),
        ("rotunda", "folkerts"): (8800, [2000, 2666, 1000, 1333, 44, 50, 2200]),
    }
    bad = []
    for (problem, variant), (count, values) in want.items():
        trace = medieval_count(problem, variant)
        results = list(trace.results)
        # the listed values appear in order among the step results
        it = iter(results)
        in_order = all(any(v == r for r in it) for v in values)
        adjust_ok = problem != "triangula" or any("45 -> 40" in str(s) for s in trace.steps)
        if trace.final_count != count or not in_order or not trace.is_valid() or not adjust_ok:
            bad.append(f"{problem}/{variant}: {results}")
    check(1, not bad, "medieval counts 520/20/6400/8800 with exact intermediate values"
          + (f"; mismatches {bad}" if bad else ""))


def test_2_areas():
    got = {p: container_area(make_instance(p).container) for p in PROBLEMS}
    want = {"quadrangula": 627_808.689, "triangula": 4_018.628, "rotunda": 5_092_958.179}
    ok = all(abs(got[p] - want[p]) <= 1e-3 for p in PROBLEMS)
    ok &= egyptian_quadrilateral_area(1100, 600, 1000, 600) == 630_000
    ok &= egyptian_triangle_area(100, 100, 90) == 4_500
    ok &= abs(circle_area_pi3(8000) - 5_333_333.333) <= 1e-3
    shown = ", ".join(f"{p} {got[p]:.3f}" for p in PROBLEMS)
    check(2, ok, f"exact areas {shown}; egyptian 630000/4500; pi=3 {circle_area_pi3(8000):.3f}")


def test_3_bounds():
    got = {p: house_area_bound(make_instance(p)) for p in PROBLEMS}
    check(3, got == {"quadrangula": 523, "triangula": 20, "rotunda": 8488}, f"house-area bounds {got}")


def test_4_strip_sum_oracle():
    got = {p: pack_rows(make_instance(p), "h", "center", 0.0).count for p in PROBLEMS}
    want = {p: oracles.strip_sum_count(p) for p in PROBLEMS}
    check(4, got == want, f"pack_rows offset 0 {got} vs analytic strip sums {want}")


def test_5_solver_floors(solved):
    parts, ok = [], True
    for problem in PROBLEMS:
        path, seconds, code = solved[problem]
        n = parse(path.read_text()).count
        good = code == 0 and n >= FLOORS[problem] and seconds <= TIME_LIMIT_S
        ok &= good
        parts.append(f"{problem} {n} (>= {FLOORS[problem]}) in {seconds:.1f}s")
    check(5, ok, "seed 0: " + "; ".join(parts))
    for problem, target in (("quadrangula", 510), ("triangula", 16), ("rotunda", 8349)):
        n = parse(solved[problem][0].read_text()).count
        record(f"{'MET ' if n >= target else 'MISS'}  stretch {problem} {target}: got {n}")
    n = parse(solved["rotunda"][0].read_text()).count
    singmaster = REFERENCE_COUNTS["rotunda"].singmaster[0]
    record(f"{'MET ' if n >= singmaster else 'MISS'}  stretch rotunda {singmaster} (circle reference): got {n}")


def test_6_certificates(solved):
    ok, notes = True, []
    for problem in PROBLEMS:
        layout = read_layout(solved[problem][0])
        for eps in (1e-6, 1e-7):
            if not verify(layout, Tolerance(eps)).passed:
                ok = False
                notes.append(f"{problem} fails at {eps:g}")
    agree = 0
    for seed in range(100):
        layout = random_layout(seed)
        if violation_sets(verify(layout)) == oracle_sets(layout, 1e-6):
            agree += 1
    ok &= agree == 100
    big = read_layout(solved["rotunda"][0])
    verify(big)
    start = time.perf_counter()
    verify(big)
    seconds = time.perf_counter() - start
    ok &= big.count > 8000 and seconds < 1.0
    check(6, ok, f"solve outputs pass at 1e-6 and 1e-7{'; ' + ', '.join(notes) if notes else ''}; "
                 f"grid == all-pairs on {agree}/100 random layouts; {big.count} houses verified in {seconds:.3f}s")


def test_7_determinism(solved, tmp_path):
    same = []
    for problem in PROBLEMS:
        again = tmp_path / f"{problem}.again"
        main(["solve", problem, "--seed", "0", "-o", str(again)])
        same.append(again.read_bytes() == solved[problem][0].read_bytes())
    round_trip = all(serialize(parse(solved[p][0].read_text())) == solved[p][0].read_text() for p in PROBLEMS)
    check(7, all(same) and round_trip,
          f"repeat solves byte-identical {dict(zip(PROBLEMS, same))}; parse/serialize round trip {round_trip}")


def test_8_rendering(solved):
    counts = {}
    for problem in PROBLEMS:
        layout = read_layout(solved[problem][0])
        counts[problem] = (render_svg(layout).count("<rect "), layout.count)
    check(8, all(a == b for a, b in counts.values()), f"SVG rects vs houses {counts}")
