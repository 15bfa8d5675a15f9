"""Exact candidate positions for inserting one house among fixed houses.

For a house at a fixed angle the set of feasible centers is the inner-fit
region (the wall eroded by the house) minus the interiors of the no-fit
polygons (each placed house grown by the house, a Minkowski sum). Extreme
points of that region lie on vertices of the arrangement, on segment/arc
crossings, or at arc extremes, so those are the only candidates tested.

Penetration depth of a candidate center inside a no-fit polygon equals the
separating-axis depth of the two houses, so the feasibility test here agrees
with :func:`civitas.geometry.penetration_depth`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np
from numba import njit

from ..geometry import Circle, ConvexContainer, Point

# internal slack: well under the 1e-7 margin promised to the verifier
PLACE_EPS = 1e-9
_PARAM_SLACK = 1e-9
_PARALLEL = 1e-9

Box = Tuple[float, float, float, float]


def house_offsets(length: float, width: float, theta: float) -> np.ndarray:
    """Corner offsets from the center, counterclockwise, shape (4, 2)."""
    c, s = math.cos(theta), math.sin(theta)
    hl, hw = length / 2, width / 2
    local = ((-hl, -hw), (hl, -hw), (hl, hw), (-hl, hw))
    return np.array([(c * x - s * y, s * x + c * y) for x, y in local])


def _clip(poly: List[Tuple[float, float]], nx: float, ny: float, d: float) -> List[Tuple[float, float]]:
    """Keep the part of ``poly`` with nx*x + ny*y >= d."""
    out = []
    for k, p in enumerate(poly):
        q = poly[(k + 1) % len(poly)]
        fp = nx * p[0] + ny * p[1] - d
        fq = nx * q[0] + ny * q[1] - d
        if fp >= 0:
            out.append(p)
        if (fp >= 0) != (fq >= 0):
            t = fp / (fp - fq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


@dataclass(frozen=True, eq=False)
class InnerFit:
    halfplanes: np.ndarray  # (k, 3): feasible iff nx*x + ny*y >= d
    disks: np.ndarray  # (k, 3): feasible iff |p - (cx, cy)| <= r
    vertices: np.ndarray  # (v, 2) polygon ring, empty for a circular wall

    @property
    def empty(self) -> bool:
        return len(self.halfplanes) > 0 and len(self.vertices) == 0


@lru_cache(maxsize=4096)
def inner_fit(container: ConvexContainer, length: float, width: float, theta: float) -> InnerFit:
    """Centers at which the house stays inside the wall."""
    offsets = house_offsets(length, width, theta)
    if isinstance(container, Circle):
        cx, cy, r = container.center.x, container.center.y, container.radius
        disks = np.column_stack([cx - offsets[:, 0], cy - offsets[:, 1], np.full(4, r)])
        return InnerFit(np.zeros((0, 3)), disks, np.zeros((0, 2)))
    hp = []
    for nx, ny, d in container.edges:
        reach = float((offsets[:, 0] * nx + offsets[:, 1] * ny).min())
        hp.append((nx, ny, d - reach))
    x0, y0, x1, y1 = container.bounds
    pad = (x1 - x0) + (y1 - y0) + 1.0
    poly = [(x0 - pad, y0 - pad), (x1 + pad, y0 - pad), (x1 + pad, y1 + pad), (x0 - pad, y1 + pad)]
    for nx, ny, d in hp:
        poly = _clip(poly, nx, ny, d)
        if not poly:
            break
    verts = np.array(poly, dtype=float).reshape(-1, 2)
    return InnerFit(np.array(hp, dtype=float), np.zeros((0, 3)), verts)


@njit(cache=True)
def _no_fit(obstacles, offsets, eps):
    """Support directions/values, vertex rings and padded boxes of the no-fit polygons.

    Vertices come from consecutive support lines in angular order; a vertex
    between parallel lines is NaN.
    """
    m = obstacles.shape[0]
    dirs = np.empty((m, 8, 2))
    support = np.empty((m, 8))
    verts = np.empty((m, 8, 2))
    boxes = np.empty((m, 4))
    base = np.empty((4, 2))
    ang = np.empty(8)
    idx = np.empty(8, dtype=np.int64)
    for k in range(m):
        q = obstacles[k]
        base[0] = q[1] - q[0]
        base[1] = q[3] - q[0]
        base[2] = offsets[1] - offsets[0]
        base[3] = offsets[3] - offsets[0]
        for j in range(4):
            n = math.hypot(base[j, 0], base[j, 1])
            dirs[k, j, 0] = base[j, 0] / n
            dirs[k, j, 1] = base[j, 1] / n
            dirs[k, j + 4, 0] = -dirs[k, j, 0]
            dirs[k, j + 4, 1] = -dirs[k, j, 1]
        for j in range(8):
            ux, uy = dirs[k, j, 0], dirs[k, j, 1]
            hi = -np.inf
            lo = np.inf
            for c in range(4):
                pq = q[c, 0] * ux + q[c, 1] * uy
                po = offsets[c, 0] * ux + offsets[c, 1] * uy
                hi = max(hi, pq)
                lo = min(lo, po)
            support[k, j] = hi - lo
            ang[j] = math.atan2(uy, ux)
            idx[j] = j
        for a in range(1, 8):
            b = a
            while b > 0 and ang[idx[b - 1]] > ang[idx[b]]:
                t = idx[b - 1]
                idx[b - 1] = idx[b]
                idx[b] = t
                b -= 1
        bx0, by0, bx1, by1 = np.inf, np.inf, -np.inf, -np.inf
        for j in range(8):
            a, b = idx[j], idx[(j + 1) % 8]
            ax, ay, ha = dirs[k, a, 0], dirs[k, a, 1], support[k, a]
            cx, cy, hb = dirs[k, b, 0], dirs[k, b, 1], support[k, b]
            det = ax * cy - ay * cx
            if abs(det) > _PARALLEL:
                vx = (ha * cy - hb * ay) / det
                vy = (ax * hb - cx * ha) / det
                verts[k, j, 0] = vx
                verts[k, j, 1] = vy
                bx0, by0 = min(bx0, vx), min(by0, vy)
                bx1, by1 = max(bx1, vx), max(by1, vy)
            else:
                verts[k, j, 0] = np.nan
                verts[k, j, 1] = np.nan
        boxes[k, 0], boxes[k, 1], boxes[k, 2], boxes[k, 3] = bx0 - eps, by0 - eps, bx1 + eps, by1 + eps
    return dirs, support, verts, boxes


@njit(cache=True)
def _quant(v):
    return math.floor(v * 1e9 + 0.5)


@njit(cache=True)
def _consider(x, y, best, mode, gc, gs, ax, ay, window, use_window, hp, disks, dirs, support, boxes, eps):
    """Keep (x, y) in ``best`` if it beats the incumbent key and is feasible.

    ``best`` holds (found, k0, k1, k2, x, y).
    """
    if use_window and (x < window[0] or x > window[2] or y < window[1] or y > window[3]):
        return
    if mode == 0:
        k0 = _quant(-gs * x + gc * y)
        k1 = _quant(gc * x + gs * y)
        k2 = 0.0
    else:
        k0 = _quant(math.hypot(x - ax, y - ay))
        k1 = y
        k2 = x
    if best[0] > 0:
        if k0 > best[1] or (k0 == best[1] and (k1 > best[2] or (k1 == best[2] and k2 >= best[3]))):
            return
    for i in range(hp.shape[0]):
        if hp[i, 0] * x + hp[i, 1] * y < hp[i, 2] - eps:
            return
    for i in range(disks.shape[0]):
        if math.hypot(x - disks[i, 0], y - disks[i, 1]) > disks[i, 2] + eps:
            return
    for k in range(dirs.shape[0]):
        if x < boxes[k, 0] or x > boxes[k, 2] or y < boxes[k, 1] or y > boxes[k, 3]:
            continue
        depth = np.inf
        for j in range(8):
            depth = min(depth, support[k, j] - (dirs[k, j, 0] * x + dirs[k, j, 1] * y))
        if depth > eps:
            return
    best[0] = 1.0
    best[1] = k0
    best[2] = k1
    best[3] = k2
    best[4] = x
    best[5] = y


@njit(cache=True)
def _segments(ifp_verts, verts, window, use_window):
    """Edges of the inner-fit ring and of every no-fit ring that touch the window."""
    m = verts.shape[0]
    nv = ifp_verts.shape[0]
    segs = np.empty((nv + 8 * m, 4))
    n = 0
    if nv > 1:
        for j in range(nv):
            a, b = ifp_verts[j], ifp_verts[(j + 1) % nv]
            segs[n, 0], segs[n, 1], segs[n, 2], segs[n, 3] = a[0], a[1], b[0], b[1]
            n += 1
    filled = np.empty((8, 2))
    for k in range(m):
        # a NaN vertex sits between coincident lines; its successor closes the edge
        for j in range(8):
            src = j if not math.isnan(verts[k, j, 0]) else (j + 1) % 8
            filled[j, 0] = verts[k, src, 0]
            filled[j, 1] = verts[k, src, 1]
        for j in range(8):
            x0, y0 = filled[j, 0], filled[j, 1]
            x1, y1 = filled[(j + 1) % 8, 0], filled[(j + 1) % 8, 1]
            if math.isnan(x0) or math.isnan(x1) or (x0 == x1 and y0 == y1):
                continue
            segs[n, 0], segs[n, 1], segs[n, 2], segs[n, 3] = x0, y0, x1, y1
            n += 1
    out = np.empty((n, 4))
    c = 0
    for i in range(n):
        if use_window:
            if max(segs[i, 0], segs[i, 2]) < window[0] or min(segs[i, 0], segs[i, 2]) > window[2]:
                continue
            if max(segs[i, 1], segs[i, 3]) < window[1] or min(segs[i, 1], segs[i, 3]) > window[3]:
                continue
        out[c] = segs[i]
        c += 1
    return out[:c]


@njit(cache=True)
def _search(hp, ifp_verts, disks, obstacles, offsets, mode, gc, gs, ax, ay, window, use_window, eps):
    dirs, support, verts, boxes = _no_fit(obstacles, offsets, eps)
    segs = _segments(ifp_verts, verts, window, use_window)
    best = np.zeros(6)

    for j in range(ifp_verts.shape[0]):
        _consider(ifp_verts[j, 0], ifp_verts[j, 1], best, mode, gc, gs, ax, ay, window, use_window,
                  hp, disks, dirs, support, boxes, eps)
    for k in range(verts.shape[0]):
        for j in range(8):
            if not math.isnan(verts[k, j, 0]):
                _consider(verts[k, j, 0], verts[k, j, 1], best, mode, gc, gs, ax, ay, window, use_window,
                          hp, disks, dirs, support, boxes, eps)

    ns = segs.shape[0]
    for i in range(ns):
        px, py = segs[i, 0], segs[i, 1]
        rx, ry = segs[i, 2] - px, segs[i, 3] - py
        lx, hx = min(segs[i, 0], segs[i, 2]) - 1e-9, max(segs[i, 0], segs[i, 2]) + 1e-9
        ly, hy = min(segs[i, 1], segs[i, 3]) - 1e-9, max(segs[i, 1], segs[i, 3]) + 1e-9
        for j in range(i + 1, ns):
            if max(segs[j, 0], segs[j, 2]) < lx or min(segs[j, 0], segs[j, 2]) > hx:
                continue
            if max(segs[j, 1], segs[j, 3]) < ly or min(segs[j, 1], segs[j, 3]) > hy:
                continue
            qx, qy = segs[j, 0], segs[j, 1]
            sx, sy = segs[j, 2] - qx, segs[j, 3] - qy
            den = rx * sy - ry * sx
            if abs(den) <= 1e-12:
                continue
            t = ((qx - px) * sy - (qy - py) * sx) / den
            u = ((qx - px) * ry - (qy - py) * rx) / den
            if -_PARAM_SLACK <= t <= 1 + _PARAM_SLACK and -_PARAM_SLACK <= u <= 1 + _PARAM_SLACK:
                _consider(px + t * rx, py + t * ry, best, mode, gc, gs, ax, ay, window, use_window,
                          hp, disks, dirs, support, boxes, eps)

    nd = disks.shape[0]
    for i in range(nd):
        cx, cy, r = disks[i, 0], disks[i, 1], disks[i, 2]
        # lowest point of the arc in the gravity frame, or closest to the anchor
        if mode == 0:
            _consider(cx + r * gs, cy - r * gc, best, mode, gc, gs, ax, ay, window, use_window,
                      hp, disks, dirs, support, boxes, eps)
        else:
            vx, vy = ax - cx, ay - cy
            n = math.hypot(vx, vy)
            if n > 0:
                _consider(cx + r * vx / n, cy + r * vy / n, best, mode, gc, gs, ax, ay, window, use_window,
                          hp, disks, dirs, support, boxes, eps)
        for j in range(i + 1, nd):
            dx, dy = disks[j, 0] - cx, disks[j, 1] - cy
            dist = math.hypot(dx, dy)
            r1 = disks[j, 2]
            if dist == 0 or dist > r + r1 or dist < abs(r - r1):
                continue
            along = (r * r - r1 * r1 + dist * dist) / (2 * dist)
            h = math.sqrt(max(0.0, r * r - along * along))
            mx, my = cx + along * dx / dist, cy + along * dy / dist
            _consider(mx - h * dy / dist, my + h * dx / dist, best, mode, gc, gs, ax, ay, window, use_window,
                      hp, disks, dirs, support, boxes, eps)
            _consider(mx + h * dy / dist, my - h * dx / dist, best, mode, gc, gs, ax, ay, window, use_window,
                      hp, disks, dirs, support, boxes, eps)
        for s in range(ns):
            px, py = segs[s, 0], segs[s, 1]
            dx, dy = segs[s, 2] - px, segs[s, 3] - py
            fx, fy = px - cx, py - cy
            a = dx * dx + dy * dy
            b = 2 * (fx * dx + fy * dy)
            c = fx * fx + fy * fy - r * r
            disc = b * b - 4 * a * c
            if a <= 0 or disc < 0:
                continue
            root = math.sqrt(disc)
            for t in ((-b - root) / (2 * a), (-b + root) / (2 * a)):
                if -_PARAM_SLACK <= t <= 1 + _PARAM_SLACK:
                    _consider(px + t * dx, py + t * dy, best, mode, gc, gs, ax, ay, window, use_window,
                              hp, disks, dirs, support, boxes, eps)

    if mode == 1:
        _consider(ax, ay, best, mode, gc, gs, ax, ay, window, use_window, hp, disks, dirs, support, boxes, eps)
        for s in range(ns):
            px, py = segs[s, 0], segs[s, 1]
            dx, dy = segs[s, 2] - px, segs[s, 3] - py
            dd = dx * dx + dy * dy
            if dd <= 0:
                continue
            t = min(1.0, max(0.0, ((ax - px) * dx + (ay - py) * dy) / dd))
            _consider(px + t * dx, py + t * dy, best, mode, gc, gs, ax, ay, window, use_window,
                      hp, disks, dirs, support, boxes, eps)
    return best


@dataclass(frozen=True)
class Objective:
    """Bottom-left in a frame rotated by ``gravity``, or nearest to ``anchor``.

    Keys compare lexicographically: frame (y, x) counted in 1e-9 ft for
    bottom-left; (distance in 1e-9 ft, y, x) for nearest.
    """

    gravity: float = 0.0
    anchor: Optional[Tuple[float, float]] = None


_NO_WINDOW = np.zeros(4)


def best_position(container: ConvexContainer, length: float, width: float, theta: float,
                  obstacles: np.ndarray, objective: Objective = Objective(),
                  window: Optional[Box] = None,
                  eps: float = PLACE_EPS) -> Optional[Tuple[Tuple[float, ...], Point]]:
    """Best feasible center for a house at angle ``theta``.

    Returns ``(key, center)`` or None when nothing fits. ``window`` limits
    candidates to a box ``(x0, y0, x1, y1)``; ``obstacles`` (corner arrays,
    shape (m, 4, 2)) must include every house that can touch a center in it.
    """
    region = inner_fit(container, float(length), float(width), float(theta))
    if region.empty:
        return None
    if objective.anchor is None:
        mode, ax, ay = 0, 0.0, 0.0
    else:
        mode, (ax, ay) = 1, objective.anchor
    obstacles = np.ascontiguousarray(obstacles, dtype=float).reshape(-1, 4, 2)
    win = _NO_WINDOW if window is None else np.array(window, dtype=float)
    best = _search(region.halfplanes, region.vertices, region.disks, obstacles,
                   house_offsets(length, width, theta), mode,
                   math.cos(objective.gravity), math.sin(objective.gravity), float(ax), float(ay),
                   win, window is not None, float(eps))
    if best[0] == 0:
        return None
    key = (best[1], best[2]) if mode == 0 else (best[1], best[2], best[3])
    return key, Point(float(best[4]), float(best[5]))
