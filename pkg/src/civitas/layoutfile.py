"""Plain-text layout certificates.

::

    civitas-layout v1
    problem <id>
    container polygon x1 y1 x2 y2 ...   |   container circle cx cy r
    house <length> <width>
    count <n>
    <cx> <cy> <theta_rad>                (n lines)

Every real is printed with exactly nine fractional digits and no exponent.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import List, Union

from .alcuin import PROBLEM_IDS, HouseDimensions, ProblemInstance, ProblemError, make_instance
from .geometry import Circle, GeometryError, PlacedRect, Point, Polygon
from .layout import DIGITS, Layout

MAGIC = "civitas-layout v1"


class LayoutParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def fmt(value: float) -> str:
    text = f"{value:.{DIGITS}f}"
    return "0." + "0" * DIGITS if text == "-0." + "0" * DIGITS else text


def serialize(layout: Layout) -> str:
    inst = layout.instance
    c = inst.container
    if isinstance(c, Circle):
        wall = f"container circle {fmt(c.center.x)} {fmt(c.center.y)} {fmt(c.radius)}"
    else:
        wall = "container polygon " + " ".join(f"{fmt(v.x)} {fmt(v.y)}" for v in c.vertices)
    lines = [
        MAGIC,
        f"problem {inst.id}",
        wall,
        f"house {fmt(inst.house.length)} {fmt(inst.house.width)}",
        f"count {layout.count}",
    ]
    lines += [f"{fmt(h.center.x)} {fmt(h.center.y)} {fmt(h.theta)}" for h in layout.houses]
    return "\n".join(lines) + "\n"


def _reals(tokens: List[str], line: int) -> List[float]:
    out = []
    for t in tokens:
        try:
            v = float(t)
        except ValueError:
            raise LayoutParseError(line, f"not a number: {t!r}") from None
        if not math.isfinite(v):
            raise LayoutParseError(line, f"non-finite number {t!r}")
        out.append(v)
    return out


def parse(text: str) -> Layout:
    """Inverse of :func:`serialize`; errors name the offending line."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 5:
        raise LayoutParseError(len(lines) + 1, "truncated header")
    if lines[0] != MAGIC:
        raise LayoutParseError(1, f"expected {MAGIC!r}")

    head = lines[1].split()
    if len(head) != 2 or head[0] != "problem":
        raise LayoutParseError(2, "expected 'problem <id>'")
    problem = head[1]
    if problem not in PROBLEM_IDS:
        raise LayoutParseError(2, f"unknown problem {problem!r}")

    wall = lines[2].split()
    if len(wall) < 2 or wall[0] != "container":
        raise LayoutParseError(3, "expected 'container polygon ...' or 'container circle ...'")
    values = _reals(wall[2:], 3)
    try:
        if wall[1] == "circle":
            if len(values) != 3:
                raise LayoutParseError(3, "circle needs cx cy r")
            container = Circle(Point(values[0], values[1]), values[2])
        elif wall[1] == "polygon":
            if len(values) < 6 or len(values) % 2:
                raise LayoutParseError(3, "polygon needs at least three x y pairs")
            container = Polygon(tuple(Point(values[k], values[k + 1]) for k in range(0, len(values), 2)))
        else:
            raise LayoutParseError(3, f"unknown container kind {wall[1]!r}")
    except GeometryError as exc:
        raise LayoutParseError(3, str(exc)) from None

    house = lines[3].split()
    if len(house) != 3 or house[0] != "house":
        raise LayoutParseError(4, "expected 'house <length> <width>'")
    try:
        dims = HouseDimensions(*_reals(house[1:], 4))
    except ProblemError as exc:
        raise LayoutParseError(4, str(exc)) from None

    count_line = lines[4].split()
    if len(count_line) != 2 or count_line[0] != "count" or not count_line[1].isdigit():
        raise LayoutParseError(5, "expected 'count <n>'")
    count = int(count_line[1])
    body = lines[5:]
    if len(body) != count:
        raise LayoutParseError(5, f"count header says {count} houses but the file has {len(body)} house lines")

    instance = _instance(problem, container, dims)
    houses = []
    for k, raw in enumerate(body, start=6):
        parts = raw.split()
        if len(parts) != 3:
            raise LayoutParseError(k, "expected '<cx> <cy> <theta>'")
        x, y, theta = _reals(parts, k)
        if not 0 <= theta < math.pi:
            raise LayoutParseError(k, f"theta {theta} outside [0, pi)")
        try:
            houses.append(PlacedRect(Point(x, y), dims.length, dims.width, theta))
        except GeometryError as exc:
            raise LayoutParseError(k, str(exc)) from None
    return Layout(instance, tuple(houses))


def _instance(problem: str, container, house: HouseDimensions) -> ProblemInstance:
    """A bundled problem id is authoritative; only custom files define their own city.

    Houses keep the extents written in the file, so a file whose house line
    disagrees with its named problem shows up as dimension violations.
    """
    if problem != "custom":
        return make_instance(problem)
    return ProblemInstance(problem, container, house, None)


def read_layout(path: Union[str, Path]) -> Layout:
    return parse(Path(path).read_text(encoding="utf-8"))


def write_layout(layout: Layout, path: Union[str, Path]) -> None:
    Path(path).write_text(serialize(layout), encoding="utf-8")
