"""Reference computations that share no code with the package under test.

Each oracle works from the raw city dimensions or raw corner lists so that a
bug in the package geometry cannot cancel out in a comparison.
"""

from __future__ import annotations

import math

import numpy as np

# the same slack the row packer allows for chords that are an exact multiple of the span
SLACK = 1e-9

TRAPEZOID_H = math.sqrt(600.0 ** 2 - 50.0 ** 2)
TRIANGLE_H = math.sqrt(100.0 ** 2 - 45.0 ** 2)
RADIUS = 8000.0 / (2.0 * math.pi)


def strip_width(problem: str, y_low: float, y_high: float) -> float:
    """Closed-form width of the widest rectangle spanning [y_low, y_high]."""
    if problem == "quadrangula":
        return 1100.0 - 100.0 * y_high / TRAPEZOID_H
    if problem == "triangula":
        return 90.0 * (1.0 - y_high / TRIANGLE_H)
    reach = max(abs(y_low), abs(y_high))
    if reach > RADIUS:
        return 0.0
    return 2.0 * math.sqrt(RADIUS ** 2 - reach ** 2)


def strip_sum_count(problem: str, vertical: bool = False, offset: float = 0.0) -> int:
    """Rows stacked from the lowest point plus ``offset``.

    Horizontal rows are one house width tall and take houses lengthwise;
    vertical rows swap the two.
    """
    length, width = {"quadrangula": (40, 30), "triangula": (20, 10), "rotunda": (30, 20)}[problem]
    if vertical:
        length, width = width, length
    bottom, top = {"quadrangula": (0.0, TRAPEZOID_H), "triangula": (0.0, TRIANGLE_H),
                   "rotunda": (-RADIUS, RADIUS)}[problem]
    total = 0
    k = 0
    bottom += offset
    while bottom + (k + 1) * width <= top:
        w = strip_width(problem, bottom + k * width, bottom + (k + 1) * width)
        total += max(0, math.floor((w + SLACK) / length))
        k += 1
    return total


def mixed_rows_count(problem: str, step: float = 0.5) -> int:
    """Best stack of horizontal/vertical rows whose bottoms sit on a grid of pitch ``step``.

    Memoised recursion from the bottom: at each grid height skip one step or
    lay a row of either kind and resume at the first grid height above it.
    """
    length, width = {"quadrangula": (40, 30), "triangula": (20, 10), "rotunda": (30, 20)}[problem]
    bottom, top = {"quadrangula": (0.0, TRAPEZOID_H), "triangula": (0.0, TRIANGLE_H),
                   "rotunda": (-RADIUS, RADIUS)}[problem]
    n = int(math.floor((top - bottom) / step)) + 1
    best = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        y = bottom + i * step
        b = best[i + 1]
        for span, height in ((length, width), (width, length)):
            if y + height <= top:
                fits = max(0, math.floor((strip_width(problem, y, y + height) + SLACK) / span))
                b = max(b, fits + best[min(n, i + int(math.ceil(height / step - 1e-9)))])
        best[i] = b
    return best[0]


def corners(cx: float, cy: float, length: float, width: float, theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    local = np.array([(-1, -1), (1, -1), (1, 1), (-1, 1)], dtype=float) * (length / 2, width / 2)
    return np.column_stack([cx + c * local[:, 0] - s * local[:, 1], cy + s * local[:, 0] + c * local[:, 1]])


def inside_convex(poly: np.ndarray, pts: np.ndarray) -> np.ndarray:
    """Points inside a counterclockwise convex polygon, by edge cross products."""
    ok = np.ones(len(pts), dtype=bool)
    for k in range(len(poly)):
        a, b = poly[k], poly[(k + 1) % len(poly)]
        cross = (b[0] - a[0]) * (pts[:, 1] - a[1]) - (b[1] - a[1]) * (pts[:, 0] - a[0])
        ok &= cross >= 0
    return ok


def monte_carlo_hits(p: np.ndarray, q: np.ndarray, samples: int, rng: np.random.Generator) -> int:
    """Sample points in the bounding box of ``p`` that land inside both polygons."""
    lo, hi = p.min(axis=0), p.max(axis=0)
    pts = rng.uniform(lo, hi, size=(samples, 2))
    return int((inside_convex(p, pts) & inside_convex(q, pts)).sum())


def _segment_distance(a, b, c, d) -> float:
    def point_seg(p, u, v):
        uv = v - u
        t = np.clip(np.dot(p - u, uv) / np.dot(uv, uv), 0.0, 1.0)
        return float(np.hypot(*(u + t * uv - p)))

    return min(point_seg(a, c, d), point_seg(b, c, d), point_seg(c, a, b), point_seg(d, a, b))


def boundary_distance(p: np.ndarray, q: np.ndarray) -> float:
    """Smallest distance between the outlines of two polygons (0 if they cross)."""
    best = math.inf
    for i in range(len(p)):
        for j in range(len(q)):
            best = min(best, _segment_distance(p[i], p[(i + 1) % len(p)], q[j], q[(j + 1) % len(q)]))
    return best


def sat_depth(p: np.ndarray, q: np.ndarray) -> float:
    """Minimum projection overlap over the edge normals of both polygons."""
    depth = math.inf
    for poly in (p, q):
        for k in range(len(poly)):
            e = poly[(k + 1) % len(poly)] - poly[k]
            n = np.array((-e[1], e[0])) / math.hypot(*e)
            a, b = p @ n, q @ n
            depth = min(depth, min(a.max(), b.max()) - max(a.min(), b.min()))
    return depth


def brute_force_violations(wall_halfplanes, circle, rects, length, width, eps):
    """(containment indices, overlap pairs) by checking every corner and every pair.

    ``wall_halfplanes`` is a list of (nx, ny, d) with inside iff nx*x + ny*y >= d;
    ``circle`` is (cx, cy, r) or None. ``rects`` holds (cx, cy, theta).
    """
    polys = [corners(x, y, length, width, t) for x, y, t in rects]
    outside = set()
    for k, poly in enumerate(polys):
        if circle is not None:
            cx, cy, r = circle
            exc = float(np.hypot(poly[:, 0] - cx, poly[:, 1] - cy).max() - r)
        else:
            exc = max(float((d - poly @ np.array((nx, ny))).max()) for nx, ny, d in wall_halfplanes)
        if exc > eps:
            outside.add(k)
    return outside, all_pairs_overlaps(np.array(polys).reshape(-1, 4, 2), eps)


def all_pairs_overlaps(polys: np.ndarray, eps: float) -> set:
    """Every pair (a, b), a < b, whose separating-axis depth exceeds eps; dense n x n."""
    n = len(polys)
    if n < 2:
        return set()
    e = np.concatenate([polys[:, 1] - polys[:, 0], polys[:, 3] - polys[:, 0]], axis=0)  # (2n, 2)
    axes = np.column_stack([-e[:, 1], e[:, 0]]) / np.hypot(e[:, 0], e[:, 1])[:, None]
    axes = axes.reshape(2, n, 2).transpose(1, 0, 2)  # (n, 2, 2): two normals per house
    depth = np.full((n, n), np.inf)
    for owner in range(2):
        for k in range(2):
            # axis k of house a (owner 0) or of house b (owner 1)
            u = axes[:, k]  # (n, 2)
            proj = np.einsum("ncx,mx->mnc", polys, u)  # (axis house m, house n, corner)
            lo, hi = proj.min(axis=2), proj.max(axis=2)  # (m, n)
            if owner == 0:
                # axis from a (row index): overlap of a and b projections on a's axis
                ov = np.minimum(np.diag(hi)[:, None], hi) - np.maximum(np.diag(lo)[:, None], lo)
            else:
                ov = (np.minimum(np.diag(hi)[:, None], hi) - np.maximum(np.diag(lo)[:, None], lo)).T
            depth = np.minimum(depth, ov)
    a, b = np.nonzero(np.triu(depth > eps, k=1))
    return set(zip(a.tolist(), b.tolist()))


def depth_against(polys: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Separating-axis depth of each polygon in ``polys`` (n, 4, 2) against one rectangle ``q``."""
    def normals(p):
        e = np.stack([p[..., 1, :] - p[..., 0, :], p[..., 3, :] - p[..., 0, :]], axis=-2)
        return np.stack([-e[..., 1], e[..., 0]], axis=-1) / np.linalg.norm(e, axis=-1)[..., None]

    depth = np.full(len(polys), np.inf)
    own = normals(polys)  # (n, 2, 2)
    for k in range(2):
        u = own[:, k]
        a = np.einsum("ncx,nx->nc", polys, u)
        b = np.einsum("cx,nx->nc", q, u)
        depth = np.minimum(depth, np.minimum(a.max(1), b.max(1)) - np.maximum(a.min(1), b.min(1)))
    for u in normals(q):
        a = polys @ u
        b = q @ u
        depth = np.minimum(depth, np.minimum(a.max(1), b.max()) - np.maximum(a.min(1), b.min()))
    return depth
