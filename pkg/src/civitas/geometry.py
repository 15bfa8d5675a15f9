"""Floating-point geometry for convex city walls and oriented houses.

All lengths are feet. Containers are closed regions, so a house that touches
the wall is inside. Two houses that merely touch do not overlap; overlap is
measured as separating-axis penetration depth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Optional, Sequence, Tuple, Union

DEFAULT_EPS = 1e-6


class GeometryError(ValueError):
    """Raised when a geometric value violates its invariants."""


class Point(NamedTuple):
    x: float
    y: float


def _finite(*values: float) -> bool:
    return all(math.isfinite(v) for v in values)


def make_point(x: float, y: float) -> Point:
    x, y = float(x), float(y)
    if not _finite(x, y):
        raise GeometryError(f"non-finite point ({x}, {y})")
    return Point(x, y)


@dataclass(frozen=True)
class Tolerance:
    """Permitted wall excursion and house penetration, in feet."""

    eps: float = DEFAULT_EPS

    def __post_init__(self):
        if not (self.eps >= 0 and math.isfinite(self.eps)):
            raise GeometryError(f"tolerance must be finite and >= 0, got {self.eps}")

    def scaled(self, factor: float) -> "Tolerance":
        return Tolerance(self.eps * factor)


DEFAULT_TOL = Tolerance()


def normalize_angle(theta: float) -> float:
    """Map an angle to [0, pi); a rectangle is symmetric under a half turn."""
    t = math.fmod(theta, math.pi)
    if t < 0:
        t += math.pi
    if t >= math.pi:
        t = 0.0
    return t + 0.0


@dataclass(frozen=True)
class PlacedRect:
    """A house: center, extent along its local x (length) and y (width), rotation."""

    center: Point
    length: float
    width: float
    theta: float = 0.0

    def __post_init__(self):
        c = self.center
        if not isinstance(c, Point):
            c = make_point(*c)
            object.__setattr__(self, "center", c)
        elif not _finite(c.x, c.y):
            raise GeometryError(f"non-finite center {c}")
        if not (self.length > 0 and self.width > 0 and _finite(self.length, self.width)):
            raise GeometryError(f"house extents must be positive, got {self.length}x{self.width}")
        if not math.isfinite(self.theta):
            raise GeometryError(f"non-finite angle {self.theta}")
        object.__setattr__(self, "theta", normalize_angle(self.theta))

    @property
    def diagonal(self) -> float:
        return math.hypot(self.length, self.width)

    def axes(self) -> Tuple[Tuple[float, float], Tuple[float, float]]:
        """Unit vectors along the local x and y axes."""
        c, s = math.cos(self.theta), math.sin(self.theta)
        return (c, s), (-s, c)

    def moved(self, dx: float, dy: float) -> "PlacedRect":
        return PlacedRect(Point(self.center.x + dx, self.center.y + dy), self.length, self.width, self.theta)


def rotate_point(p: Point, angle: float, origin: Point = Point(0.0, 0.0)) -> Point:
    c, s = math.cos(angle), math.sin(angle)
    dx, dy = p.x - origin.x, p.y - origin.y
    return Point(origin.x + c * dx - s * dy, origin.y + s * dx + c * dy)


class ConvexContainer:
    """Base class of the city shapes; use :class:`Polygon` or :class:`Circle`."""

    def transformed(self, angle: float, dx: float = 0.0, dy: float = 0.0) -> "ConvexContainer":
        raise NotImplementedError

    @property
    def bounds(self) -> Tuple[float, float, float, float]:
        raise NotImplementedError


@dataclass(frozen=True)
class Polygon(ConvexContainer):
    """Strictly convex polygon with counterclockwise vertices."""

    vertices: Tuple[Point, ...]

    def __post_init__(self):
        verts = tuple(v if isinstance(v, Point) else make_point(*v) for v in self.vertices)
        for v in verts:
            if not _finite(v.x, v.y):
                raise GeometryError(f"non-finite vertex {v}")
        object.__setattr__(self, "vertices", verts)
        n = len(verts)
        if n < 3:
            raise GeometryError("a polygon needs at least 3 vertices")
        if len(set(verts)) != n:
            raise GeometryError("repeated polygon vertex")
        for i in range(n):
            a, b, c = verts[i], verts[(i + 1) % n], verts[(i + 2) % n]
            cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x)
            if not cross > 0:
                raise GeometryError("polygon must be strictly convex and counterclockwise")

    @cached_property
    def edges(self) -> Tuple[Tuple[float, float, float], ...]:
        """Per edge ``(nx, ny, d)`` with unit inward normal: inside iff nx*x + ny*y >= d."""
        out = []
        verts = self.vertices
        for i, a in enumerate(verts):
            b = verts[(i + 1) % len(verts)]
            ex, ey = b.x - a.x, b.y - a.y
            norm = math.hypot(ex, ey)
            nx, ny = -ey / norm, ex / norm
            out.append((nx, ny, nx * a.x + ny * a.y))
        return tuple(out)

    @cached_property
    def edge_angles(self) -> Tuple[float, ...]:
        verts = self.vertices
        return tuple(
            math.atan2(verts[(i + 1) % len(verts)].y - v.y, verts[(i + 1) % len(verts)].x - v.x)
            for i, v in enumerate(verts)
        )

    @property
    def bounds(self) -> Tuple[float, float, float, float]:
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def transformed(self, angle: float, dx: float = 0.0, dy: float = 0.0) -> "Polygon":
        return Polygon(tuple(_shift(rotate_point(v, angle), dx, dy) for v in self.vertices))


@dataclass(frozen=True)
class Circle(ConvexContainer):
    center: Point
    radius: float

    def __post_init__(self):
        c = self.center if isinstance(self.center, Point) else make_point(*self.center)
        if not _finite(c.x, c.y):
            raise GeometryError(f"non-finite circle center {c}")
        object.__setattr__(self, "center", c)
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise GeometryError(f"circle radius must be positive, got {self.radius}")

    @property
    def bounds(self) -> Tuple[float, float, float, float]:
        c, r = self.center, self.radius
        return c.x - r, c.y - r, c.x + r, c.y + r

    def transformed(self, angle: float, dx: float = 0.0, dy: float = 0.0) -> "Circle":
        return Circle(_shift(rotate_point(self.center, angle), dx, dy), self.radius)


def _shift(p: Point, dx: float, dy: float) -> Point:
    return Point(p.x + dx, p.y + dy)


def transform_rect(r: PlacedRect, angle: float, dx: float = 0.0, dy: float = 0.0) -> PlacedRect:
    """Rotate ``r`` about the origin by ``angle`` and then translate it."""
    return PlacedRect(_shift(rotate_point(r.center, angle), dx, dy), r.length, r.width, r.theta + angle)


def rect_corners(r: PlacedRect) -> Tuple[Point, Point, Point, Point]:
    """Corners in counterclockwise order, starting at local (-L/2, -W/2)."""
    (ux, uy), (vx, vy) = r.axes()
    hl, hw = r.length / 2.0, r.width / 2.0
    cx, cy = r.center
    ax, ay = ux * hl, uy * hl
    bx, by = vx * hw, vy * hw
    return (
        Point(cx - ax - bx, cy - ay - by),
        Point(cx + ax - bx, cy + ay - by),
        Point(cx + ax + bx, cy + ay + by),
        Point(cx - ax + bx, cy - ay + by),
    )


def boundary_excursion(c: ConvexContainer, p: Point) -> float:
    """Signed distance outside the container (negative inside; exact for circles,
    max distance beyond an edge line for polygons)."""
    if isinstance(c, Circle):
        return math.hypot(p.x - c.center.x, p.y - c.center.y) - c.radius
    return max(d - (nx * p.x + ny * p.y) for nx, ny, d in c.edges)


def point_in_container(c: ConvexContainer, p: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
    return boundary_excursion(c, p) <= tol.eps


def rect_excursion(c: ConvexContainer, r: PlacedRect) -> float:
    """Largest corner excursion beyond the wall; <= 0 means fully inside."""
    return max(boundary_excursion(c, p) for p in rect_corners(r))


def rect_in_container(c: ConvexContainer, r: PlacedRect, tol: Tolerance = DEFAULT_TOL) -> bool:
    # corner containment suffices because the container is convex
    return rect_excursion(c, r) <= tol.eps


def penetration_depth(a: PlacedRect, b: PlacedRect) -> float:
    """Smallest projection overlap over the four edge normals.

    Positive values are the translation needed to separate the houses; zero
    or negative values mean touching or a gap of that size.
    """
    ca, cb = rect_corners(a), rect_corners(b)
    depth = math.inf
    for ux, uy in a.axes() + b.axes():
        pa = [ux * p.x + uy * p.y for p in ca]
        pb = [ux * p.x + uy * p.y for p in cb]
        overlap = min(max(pa), max(pb)) - max(min(pa), min(pb))
        if overlap < depth:
            depth = overlap
    return depth


def rects_overlap(a: PlacedRect, b: PlacedRect, tol: Tolerance = DEFAULT_TOL) -> bool:
    return penetration_depth(a, b) > tol.eps


def cross_section(c: ConvexContainer, y: float) -> Optional[Tuple[float, float]]:
    """Horizontal chord of the container at height ``y``."""
    if isinstance(c, Circle):
        dy = y - c.center.y
        if abs(dy) > c.radius:
            return None
        half = math.sqrt(max(0.0, c.radius * c.radius - dy * dy))
        return c.center.x - half, c.center.x + half
    xs = []
    verts = c.vertices
    for i, a in enumerate(verts):
        b = verts[(i + 1) % len(verts)]
        if a.y == b.y:
            if a.y == y:
                xs += [a.x, b.x]
            continue
        lo, hi = (a.y, b.y) if a.y < b.y else (b.y, a.y)
        if lo <= y <= hi:
            xs.append(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y))
    if not xs:
        return None
    return min(xs), max(xs)


def strip_interval(c: ConvexContainer, y_low: float, y_high: float) -> Optional[Tuple[float, float]]:
    """Widest x-interval whose rectangle over [y_low, y_high] fits in ``c``.

    The left wall is convex in y and the right wall concave, so the chords at
    the two strip edges bound the whole strip.
    """
    if not y_low < y_high:
        raise GeometryError(f"empty strip [{y_low}, {y_high}]")
    lo = cross_section(c, y_low)
    hi = cross_section(c, y_high)
    if lo is None or hi is None:
        return None
    left, right = max(lo[0], hi[0]), min(lo[1], hi[1])
    if left > right:
        return None
    return left, right


def container_area(c: ConvexContainer) -> float:
    if isinstance(c, Circle):
        return math.pi * c.radius * c.radius
    verts = c.vertices
    s = 0.0
    for i, a in enumerate(verts):
        b = verts[(i + 1) % len(verts)]
        s += a.x * b.y - b.x * a.y
    return s / 2.0


def container_edge_angles(c: ConvexContainer) -> Tuple[float, ...]:
    """Edge directions normalized to [0, pi); empty for a circle."""
    if isinstance(c, Circle):
        return ()
    return tuple(normalize_angle(a) for a in c.edge_angles)


Container = Union[Polygon, Circle]
Corners = Sequence[Point]
