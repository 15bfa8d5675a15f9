"""Independent certificate checking for layouts.

The verifier only trusts the layout itself: it recomputes corners, wall
excursions and pairwise penetration depths. Candidate pairs come from a
uniform grid whose cell is one house diagonal, so any two overlapping houses
sit in the same or adjacent cells.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from .alcuin import REFERENCE_COUNTS, house_area_bound
from .geometry import (DEFAULT_TOL, Circle, ConvexContainer, Tolerance, container_area,
                       penetration_depth, rect_excursion)
from .layout import Layout


@dataclass(frozen=True)
class Violation:
    kind: str  # containment | overlap | dimension
    indices: Tuple[int, ...]
    magnitude: float


@dataclass(frozen=True)
class VerificationReport:
    count: int
    density: float
    violations: Tuple[Violation, ...]
    max_penetration: float

    @property
    def passed(self) -> bool:
        return not self.violations

    def of_kind(self, kind: str) -> List[Violation]:
        return [v for v in self.violations if v.kind == kind]


def corner_array(layout: Layout) -> np.ndarray:
    """Corners of every house, shape (n, 4, 2), counterclockwise."""
    n = layout.count
    if n == 0:
        return np.zeros((0, 4, 2))
    h = np.array([(r.center.x, r.center.y, r.length, r.width, r.theta) for r in layout.houses])
    cos, sin = np.cos(h[:, 4]), np.sin(h[:, 4])
    hl, hw = h[:, 2] / 2, h[:, 3] / 2
    local = np.array([(-1, -1), (1, -1), (1, 1), (-1, 1)], dtype=float)
    lx = local[None, :, 0] * hl[:, None]
    ly = local[None, :, 1] * hw[:, None]
    out = np.empty((n, 4, 2))
    out[:, :, 0] = h[:, None, 0] + cos[:, None] * lx - sin[:, None] * ly
    out[:, :, 1] = h[:, None, 1] + sin[:, None] * lx + cos[:, None] * ly
    return out


def excursions(container: ConvexContainer, corners: np.ndarray) -> np.ndarray:
    """Largest corner excursion outside the wall for every house."""
    if len(corners) == 0:
        return np.zeros(0)
    if isinstance(container, Circle):
        d = np.hypot(corners[..., 0] - container.center.x, corners[..., 1] - container.center.y)
        return (d - container.radius).max(axis=1)
    edges = np.array(container.edges)  # (E, 3)
    signed = edges[None, None, :, 2] - (corners[..., 0, None] * edges[:, 0] + corners[..., 1, None] * edges[:, 1])
    return signed.max(axis=(1, 2))


def pair_depths(corners: np.ndarray, i: np.ndarray, j: np.ndarray) -> np.ndarray:
    """Separating-axis penetration depth for house pairs (i[k], j[k])."""
    a, b = corners[i], corners[j]
    axes = np.concatenate([a[:, 1] - a[:, 0], a[:, 3] - a[:, 0], b[:, 1] - b[:, 0], b[:, 3] - b[:, 0]], axis=1)
    axes = axes.reshape(-1, 4, 2)
    axes = axes / np.hypot(axes[..., 0], axes[..., 1])[..., None]
    pa = a[:, None, :, 0] * axes[:, :, None, 0] + a[:, None, :, 1] * axes[:, :, None, 1]  # (m, 4 axes, 4 pts)
    pb = b[:, None, :, 0] * axes[:, :, None, 0] + b[:, None, :, 1] * axes[:, :, None, 1]
    overlap = np.minimum(pa.max(axis=2), pb.max(axis=2)) - np.maximum(pa.min(axis=2), pb.min(axis=2))
    return overlap.min(axis=1)


def candidate_pairs(centers: np.ndarray, cell: float) -> Tuple[np.ndarray, np.ndarray]:
    """Pairs i < j whose grid cells coincide or touch."""
    grid = defaultdict(list)
    keys = np.floor(centers / cell).astype(np.int64)
    for idx, (gx, gy) in enumerate(keys.tolist()):
        grid[gx, gy].append(idx)
    ii: List[int] = []
    jj: List[int] = []
    for (gx, gy), members in grid.items():
        for dx, dy in ((0, 0), (1, -1), (1, 0), (1, 1), (0, 1)):
            other = members if (dx, dy) == (0, 0) else grid.get((gx + dx, gy + dy))
            if not other:
                continue
            for a in members:
                for b in other:
                    if (dx, dy) == (0, 0) and b <= a:
                        continue
                    ii.append(min(a, b))
                    jj.append(max(a, b))
    return np.array(ii, dtype=np.int64), np.array(jj, dtype=np.int64)


def _dimension_violations(layout: Layout) -> List[Violation]:
    house = layout.instance.house
    out = []
    for k, r in enumerate(layout.houses):
        if r.length != house.length or r.width != house.width:
            mag = max(abs(r.length - house.length), abs(r.width - house.width))
            out.append(Violation("dimension", (k,), mag))
    return out


def _report(layout: Layout, violations: List[Violation], max_pen: float) -> VerificationReport:
    violations.sort(key=lambda v: (v.indices, v.kind))
    n = layout.count
    density = n * layout.instance.house.area / container_area(layout.instance.container)
    return VerificationReport(n, density, tuple(violations), max_pen)


def verify(layout: Layout, tol: Tolerance = DEFAULT_TOL) -> VerificationReport:
    violations = _dimension_violations(layout)
    corners = corner_array(layout)
    exc = excursions(layout.instance.container, corners)
    for k in np.nonzero(exc > tol.eps)[0].tolist():
        violations.append(Violation("containment", (k,), float(exc[k])))

    max_pen = 0.0
    if layout.count > 1:
        centers = corners.mean(axis=1)
        diag = np.hypot(corners[:, 2, 0] - corners[:, 0, 0], corners[:, 2, 1] - corners[:, 0, 1])
        cell = float(diag.max())
        i, j = candidate_pairs(centers, cell)
        if len(i):
            # beyond a full diagonal apart the houses cannot touch
            close = np.hypot(*(centers[i] - centers[j]).T) < (diag[i] + diag[j]) / 2 + tol.eps
            i, j = i[close], j[close]
        if len(i):
            depth = pair_depths(corners, i, j)
            max_pen = max(0.0, float(depth.max()))
            for k in np.nonzero(depth > tol.eps)[0].tolist():
                violations.append(Violation("overlap", (int(i[k]), int(j[k])), float(depth[k])))
    return _report(layout, violations, max_pen)


def verify_naive(layout: Layout, tol: Tolerance = DEFAULT_TOL) -> VerificationReport:
    """All-pairs reference checker built only from the scalar geometry predicates."""
    violations = _dimension_violations(layout)
    houses = layout.houses
    for k, r in enumerate(houses):
        e = rect_excursion(layout.instance.container, r)
        if e > tol.eps:
            violations.append(Violation("containment", (k,), e))
    max_pen = 0.0
    for a in range(len(houses)):
        for b in range(a + 1, len(houses)):
            d = penetration_depth(houses[a], houses[b])
            max_pen = max(max_pen, d)
            if d > tol.eps:
                violations.append(Violation("overlap", (a, b), d))
    return _report(layout, violations, max_pen)


def density_report(report: VerificationReport, layout: Layout) -> str:
    instance = layout.instance
    bound = house_area_bound(instance)
    equivalents = container_area(instance.container) / instance.house.area
    lines = [
        f"problem         {instance.id}",
        f"count           {report.count}",
        f"density         {report.density:.5f}",
        f"house areas     {equivalents:.3f}",
        f"area bound      {bound}",
        f"gap to bound    {bound - report.count}",
        f"max penetration {report.max_penetration:.3e}",
        f"violations      {len(report.violations)}",
        f"status          {'PASSED' if report.passed else 'FAILED'}",
    ]
    ref = REFERENCE_COUNTS.get(instance.id)
    if ref is not None:
        medieval = ", ".join(f"{k} {v}" for k, v in ref.medieval.items())
        lines += [
            f"medieval count  {medieval}",
            f"singmaster      {'/'.join(str(c) for c in ref.singmaster)}",
            f"best known      {ref.best_known}",
        ]
    return "\n".join(lines)
