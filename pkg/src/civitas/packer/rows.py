"""Row (shelf) packing of identical houses in a convex city.

Rows are horizontal strips in a *frame*: the container rotated by ``-frame``
so that the chosen direction is horizontal. A row is either ``"h"`` (long
side horizontal, strip height = house width) or ``"v"`` (long side vertical,
strip height = house length). Each strip takes ``floor(width / house span)``
houses, aligned left, right or centered inside the strip interval.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from ..alcuin import ProblemInstance
from ..geometry import PlacedRect, Point, rotate_point, strip_interval
from ..layout import Layout, Provenance

# slack for floating-point chords that are an exact multiple of the house span
FIT_SLACK = 1e-9

ALIGNMENTS = ("left", "right", "center")
ORIENTATIONS = ("h", "v")


@dataclass(frozen=True)
class Row:
    y: float  # strip bottom, frame coordinates
    orientation: str  # "h" | "v"


def row_dims(instance: ProblemInstance, orientation: str) -> Tuple[float, float]:
    """(span along the row, strip height)."""
    L, W = instance.house.length, instance.house.width
    return (L, W) if orientation == "h" else (W, L)


def strip_count(instance: ProblemInstance, frame: float, y: float, orientation: str,
                _container=None) -> int:
    span, height = row_dims(instance, orientation)
    c = _container if _container is not None else instance.container.transformed(-frame)
    iv = strip_interval(c, y, y + height)
    if iv is None:
        return 0
    return max(0, math.floor((iv[1] - iv[0] + FIT_SLACK) / span))


def fill_rows(instance: ProblemInstance, rows: Sequence[Row], x_alignment: str = "center",
              frame: float = 0.0) -> List[PlacedRect]:
    """Houses for an explicit row plan, returned in world coordinates."""
    if x_alignment not in ALIGNMENTS:
        raise ValueError(f"x_alignment must be one of {ALIGNMENTS}")
    c = instance.container.transformed(-frame)
    L, W = instance.house.length, instance.house.width
    houses: List[PlacedRect] = []
    for row in rows:
        span, height = row_dims(instance, row.orientation)
        iv = strip_interval(c, row.y, row.y + height)
        if iv is None:
            continue
        left, right = iv
        n = max(0, math.floor((right - left + FIT_SLACK) / span))
        if n == 0:
            continue
        spare = max(0.0, (right - left) - n * span)
        start = left + {"left": 0.0, "right": spare, "center": spare / 2}[x_alignment]
        cy = row.y + height / 2
        theta = 0.0 if row.orientation == "h" else math.pi / 2
        for k in range(n):
            p = Point(start + (k + 0.5) * span, cy)
            if frame:
                p = rotate_point(p, frame)
            houses.append(PlacedRect(p, L, W, theta + frame))
    return houses


def contiguous_rows(instance: ProblemInstance, orientation: Union[str, Sequence[str]],
                    y_offset: float = 0.0, frame: float = 0.0) -> List[Row]:
    """Stack strips upward from the container's lowest point plus ``y_offset``.

    ``orientation`` is ``"h"``, ``"v"`` or a per-row sequence; a sequence ends
    the plan when exhausted.
    """
    c = instance.container.transformed(-frame)
    _, ymin, _, ymax = c.bounds
    y = ymin + y_offset
    rows: List[Row] = []
    k = 0
    while True:
        if isinstance(orientation, str):
            o = orientation
        elif k < len(orientation):
            o = orientation[k]
        else:
            break
        if o not in ORIENTATIONS:
            raise ValueError(f"row orientation must be 'h' or 'v', got {o!r}")
        height = row_dims(instance, o)[1]
        if y + height > ymax:
            break
        rows.append(Row(y, o))
        y += height
        k += 1
    return rows


def pack_rows(instance: ProblemInstance, row_height_choice: Union[str, Sequence[str]] = "h",
              x_alignment: str = "center", y_offset: float = 0.0, frame: float = 0.0) -> Layout:
    """Greedy strip-by-strip fill.

    ``row_height_choice`` is ``"h"`` (strips of house width), ``"v"`` (strips
    of house length), ``"best"`` (per strip, whichever orientation holds more
    houses) or an explicit per-row sequence of ``"h"``/``"v"``.
    """
    if row_height_choice == "best":
        rows = _greedy_best_rows(instance, y_offset, frame)
    else:
        rows = contiguous_rows(instance, row_height_choice, y_offset, frame)
    houses = fill_rows(instance, rows, x_alignment, frame)
    return Layout(instance, tuple(houses), Provenance())


def _greedy_best_rows(instance: ProblemInstance, y_offset: float, frame: float) -> List[Row]:
    c = instance.container.transformed(-frame)
    _, ymin, _, ymax = c.bounds
    y = ymin + y_offset
    rows: List[Row] = []
    while True:
        options = []
        for o in ORIENTATIONS:
            height = row_dims(instance, o)[1]
            if y + height <= ymax:
                options.append((strip_count(instance, frame, y, o, c), -ORIENTATIONS.index(o), o, height))
        if not options:
            break
        count, _, o, height = max(options)
        rows.append(Row(y, o))
        y += height
    return rows


def plan_rows(instance: ProblemInstance, step: float, frame: float = 0.0,
              orientations: Sequence[str] = ORIENTATIONS) -> Tuple[int, List[Row]]:
    """Best row plan over strip bottoms on a grid of pitch ``step``.

    Dynamic program from the top down: at each grid height either skip one
    step or lay a strip of either orientation. Strip heights need not be
    multiples of ``step``; a strip resumes at the first grid height at or
    above its top. Ties prefer skipping, then horizontal rows, which keeps
    the plan deterministic.
    """
    c = instance.container.transformed(-frame)
    _, ymin, _, ymax = c.bounds
    n = int(math.floor((ymax - ymin) / step)) + 1
    best = [0] * (n + 1)
    choice: List[Optional[str]] = [None] * (n + 1)
    heights = {o: row_dims(instance, o)[1] for o in orientations}
    jumps = {o: int(math.ceil(heights[o] / step - 1e-9)) for o in orientations}
    for i in range(n - 1, -1, -1):
        y = ymin + i * step
        b, ch = best[i + 1], None
        for o in orientations:
            if y + heights[o] > ymax:
                continue
            cnt = strip_count(instance, frame, y, o, c)
            if cnt == 0:
                continue
            total = cnt + best[min(i + jumps[o], n)]
            if total > b:
                b, ch = total, o
        best[i], choice[i] = b, ch
    rows: List[Row] = []
    i = 0
    while i < n:
        o = choice[i]
        if o is None:
            i += 1
            continue
        rows.append(Row(ymin + i * step, o))
        i += jumps[o]
    return best[0], rows
