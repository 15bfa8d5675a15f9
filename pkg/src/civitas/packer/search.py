"""Improvement stages: boundary-aligned fill and ruin-and-recreate."""

from __future__ import annotations

import logging
import math
from typing import List, Optional, Sequence, Tuple

from ..geometry import Circle, PlacedRect, normalize_angle
from ..layout import Layout
from ..rng import XorShift64Star
from .placement import Objective
from .state import Box, PackingState

log = logging.getLogger(__name__)

MAX_CLUSTER = 30
# below this many houses the whole city is the re-insertion window
GLOBAL_WINDOW_LIMIT = 64


def boundary_anchors(state: PackingState, step: float) -> List[Tuple[float, float, float]]:
    """Wall points ``(x, y, tangent angle)`` in counterclockwise boundary order."""
    c = state.container
    out = []
    if isinstance(c, Circle):
        for deg in range(360):
            a = math.radians(deg)
            out.append((c.center.x + c.radius * math.cos(a), c.center.y + c.radius * math.sin(a),
                        a + math.pi / 2))
        return out
    verts = c.vertices
    for k, a in enumerate(verts):
        b = verts[(k + 1) % len(verts)]
        length = math.hypot(b.x - a.x, b.y - a.y)
        angle = math.atan2(b.y - a.y, b.x - a.x)
        n = max(1, int(math.ceil(length / step)))
        for i in range(n):
            t = i / n
            out.append((a.x + t * (b.x - a.x), a.y + t * (b.y - a.y), angle))
    return out


def edge_fill(layout: Layout, angle_candidates: Sequence[float] = (), step: Optional[float] = None) -> Layout:
    """Insert extra houses turned to the wall direction, first fit along the wall.

    At each wall anchor the house is tried parallel and perpendicular to the
    wall (plus any ``angle_candidates``) and placed at the feasible center
    nearest the anchor, i.e. slid inward just far enough. Never removes.
    """
    state = PackingState(layout.instance, layout.houses)
    reach = state.cell
    step = step or state.width / 2
    added = 0
    for x, y, tangent in boundary_anchors(state, step):
        angles = sorted({normalize_angle(tangent), normalize_angle(tangent + math.pi / 2),
                         *(normalize_angle(a) for a in angle_candidates)})
        window = (x - reach, y - reach, x + reach, y + reach)
        while True:
            rect = state.best_insertion(angles, Objective(anchor=(x, y)), window)
            if rect is None:
                break
            state.add(rect)
            added += 1
    log.debug("edge fill added %d houses", added)
    return layout.with_houses(state.sorted_houses())


def _cluster(state: PackingState, seed_id: int, k: int) -> List[int]:
    """The ``k`` houses nearest the seed house (seed included), nearest first."""
    c = state.houses[seed_id].center
    radius = state.cell
    while True:
        ids = state.ids_in((c.x - radius, c.y - radius, c.x + radius, c.y + radius))
        if len(ids) >= k or len(ids) == len(state):
            break
        radius *= 2
    ids.sort(key=lambda i: (math.hypot(state.houses[i].center.x - c.x, state.houses[i].center.y - c.y), i))
    return ids[:k]


def _window(state: PackingState, rects: Sequence[PlacedRect]) -> Box:
    """Centers allowed when refilling a hole: the hole's centers plus half a house."""
    xs = [r.center.x for r in rects]
    ys = [r.center.y for r in rects]
    pad = state.length / 2
    return min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad


def gravity_options(state: PackingState) -> List[float]:
    """Floors to pack against: the x-axis, and each polygon edge."""
    c = state.container
    if isinstance(c, Circle):
        return [0.0]
    return [0.0] + [a for a in c.edge_angles if abs(math.remainder(a, 2 * math.pi)) > 1e-12]


def local_search(layout: Layout, angle_candidates: Sequence[float], iterations: int, seed: int,
                 check=None) -> Layout:
    """Ruin-and-recreate under a fixed iteration budget.

    Each iteration removes a cluster of 1..30 neighbouring houses, refills
    greedily with bottom-left insertion (against a randomly chosen floor) and
    keeps the result when the count did not drop. ``check`` is called with the
    count after every accepted iteration.
    """
    if iterations == 0:
        return layout
    rng = XorShift64Star(seed)
    state = PackingState(layout.instance, layout.houses)
    angles = sorted({normalize_angle(a) for a in angle_candidates})
    floors = gravity_options(state)
    count = len(state)
    for _ in range(iterations):
        pick = rng.below(len(floors) + 1)
        gravity = floors[pick] if pick < len(floors) else 2 * math.pi * rng.random()
        objective = Objective(gravity=gravity)
        removed: List[PlacedRect] = []
        window = None
        if count:
            ids = sorted(state.houses)
            seed_id = ids[rng.below(len(ids))]
            k = rng.randint(1, min(MAX_CLUSTER, len(ids)))
            cluster = _cluster(state, seed_id, k)
            removed = [state.remove(i) for i in cluster]
            if count > GLOBAL_WINDOW_LIMIT:
                window = _window(state, removed)
        inserted: List[int] = []
        while True:
            rect = state.best_insertion(angles, objective, window)
            if rect is None:
                break
            inserted.append(state.add(rect))
        if len(state) >= count:
            count = len(state)
            if check is not None:
                check(count)
        else:
            for i in inserted:
                state.remove(i)
            for r in removed:
                state.add(r)
    return layout.with_houses(state.sorted_houses())
