from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from typing import List, Optional, Tuple

from ..alcuin import ProblemInstance, house_area_bound
from ..geometry import Circle, Tolerance, container_edge_angles, normalize_angle
from ..layout import Layout, Provenance, canonical
from ..verifier import verify
from . import search
from .rows import ORIENTATIONS, contiguous_rows, fill_rows, plan_rows, row_dims, strip_count

log = logging.getLogger(__name__)

DEFAULT_BUDGET_MS = 10_000

# Fixed conversion from milliseconds to ruin-and-recreate iterations, one
# rate per instance size class. Timing the machine instead would make the
# output depend on load; these rates track the cost of one iteration on a
# single desktop core, so the budget is roughly honoured there.
ITERATIONS_PER_MS = {"small": 0.1, "medium": 0.025, "large": 0.025}


def size_class(instance: ProblemInstance) -> str:
    bound = house_area_bound(instance)
    if bound <= 100:
        return "small"
    if bound <= 2000:
        return "medium"
    return "large"


@dataclass(frozen=True)
class SolverConfig:
    seed: int = 0
    budget_ms: int = DEFAULT_BUDGET_MS
    offset_step: float = 0.5
    angle_candidates: Optional[Tuple[float, ...]] = None  # None: container edge directions
    enable_local_search: bool = True
    iterations: Optional[int] = None  # overrides the budget conversion

    def __post_init__(self):
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if not self.budget_ms > 0:
            raise ValueError("budget_ms must be positive")
        if not self.offset_step > 0:
            raise ValueError("offset_step must be positive")
        if self.iterations is not None and self.iterations < 0:
            raise ValueError("iterations must be >= 0")

    def angles(self, instance: ProblemInstance) -> Tuple[float, ...]:
        """0, pi/2 and every extra candidate together with its perpendicular."""
        extra = self.angle_candidates
        if extra is None:
            extra = container_edge_angles(instance.container)
        out = {0.0, normalize_angle(math.pi / 2)}
        for a in extra:
            out.add(normalize_angle(a))
            out.add(normalize_angle(a + math.pi / 2))
        return tuple(sorted(out))

    def iteration_count(self, instance: ProblemInstance) -> int:
        if self.iterations is not None:
            return self.iterations
        return int(self.budget_ms * ITERATIONS_PER_MS[size_class(instance)])


def row_frames(instance: ProblemInstance) -> List[float]:
    """Frames that lay rows along the x-axis and along each wall edge."""
    c = instance.container
    frames = [0.0]
    if not isinstance(c, Circle):
        for a in c.edge_angles:
            if all(abs(math.remainder(a - f, 2 * math.pi)) > 1e-12 for f in frames):
                frames.append(a)
    return frames


def best_offset_rows(instance: ProblemInstance, config: SolverConfig = SolverConfig()) -> Layout:
    """Best row packing over frames, grid offsets and row orientations.

    Per frame, contiguous all-horizontal and all-vertical stacks are tried at
    every offset below one row height, then the optimal mixed plan on the
    same offset grid. Ties keep the earlier frame, smaller offset and the
    order horizontal, vertical, mixed.
    """
    best = None  # (count, -frame index, -offset index, -variant, rows, frame)
    for fi, frame in enumerate(row_frames(instance)):
        c = instance.container.transformed(-frame)
        _, ymin, _, _ = c.bounds
        for vi, o in enumerate(ORIENTATIONS):
            height = row_dims(instance, o)[1]
            n_off = max(1, int(math.ceil(height / config.offset_step - 1e-9)))
            for k in range(n_off):
                rows = contiguous_rows(instance, o, k * config.offset_step, frame)
                count = sum(strip_count(instance, frame, r.y, r.orientation, c) for r in rows)
                cand = (count, -fi, -k, -vi)
                if best is None or cand > best[0]:
                    best = (cand, rows, frame)
        count, rows = plan_rows(instance, config.offset_step, frame)
        cand = (count, -fi, 0, -len(ORIENTATIONS))
        if cand > best[0]:
            best = (cand, rows, frame)
    _, rows, frame = best
    houses = fill_rows(instance, rows, "center", frame)
    layout = Layout(instance, tuple(houses), Provenance(seed=config.seed, budget_ms=config.budget_ms))
    return layout.with_stage("rows")


def edge_fill(layout: Layout, config: SolverConfig = SolverConfig()) -> Layout:
    out = search.edge_fill(layout, config.angles(layout.instance))
    return out.with_stage("edge_fill")


def local_search(layout: Layout, config: SolverConfig = SolverConfig(),
                 iterations: Optional[int] = None) -> Layout:
    if iterations is None:
        iterations = config.iteration_count(layout.instance) if config.enable_local_search else 0
    before = layout.count

    def check(count: int) -> None:
        assert count >= before

    out = search.local_search(layout, config.angles(layout.instance), iterations, config.seed, check)
    out = replace(out, provenance=replace(out.provenance, iterations=iterations))
    return out.with_stage("local_search")


def solve(instance: ProblemInstance, config: SolverConfig = SolverConfig()) -> Layout:
    """rows -> edge fill -> local search, then canonical rounding and ordering."""
    layout = best_offset_rows(instance, config)
    log.info("rows: %d houses", layout.count)
    layout = edge_fill(layout, config)
    log.info("edge fill: %d houses", layout.count)
    layout = local_search(layout, config)
    log.info("local search: %d houses", layout.count)
    final = canonical(layout)
    for eps in (1e-6, 1e-7):
        report = verify(final, Tolerance(eps))
        if not report.passed:
            log.error("solver output failed verification at eps=%g: %s", eps, report.violations[:3])
    return final
