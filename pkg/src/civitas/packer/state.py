from __future__ import annotations

import math
from collections import defaultdict
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from ..alcuin import ProblemInstance
from ..geometry import PlacedRect, Tolerance, penetration_depth, rect_corners, rect_in_container
from ..layout import house_order
from .placement import PLACE_EPS, Objective, best_position

Box = Tuple[float, float, float, float]


class PackingState:
    """Houses being edited, indexed by a grid of one house diagonal."""

    def __init__(self, instance: ProblemInstance, houses: Iterable[PlacedRect] = ()):
        self.instance = instance
        self.container = instance.container
        self.length = instance.house.length
        self.width = instance.house.width
        self.cell = instance.house.diagonal
        self.houses: Dict[int, PlacedRect] = {}
        self.corners: Dict[int, np.ndarray] = {}
        self.grid: Dict[Tuple[int, int], Set[int]] = defaultdict(set)
        self._next = 0
        self._tol = Tolerance(PLACE_EPS)
        for h in houses:
            self.add(h)

    def __len__(self) -> int:
        return len(self.houses)

    def _key(self, x: float, y: float) -> Tuple[int, int]:
        return math.floor(x / self.cell), math.floor(y / self.cell)

    def add(self, rect: PlacedRect) -> int:
        hid = self._next
        self._next += 1
        self.houses[hid] = rect
        self.corners[hid] = np.array(rect_corners(rect))
        self.grid[self._key(*rect.center)].add(hid)
        return hid

    def remove(self, hid: int) -> PlacedRect:
        rect = self.houses.pop(hid)
        del self.corners[hid]
        self.grid[self._key(*rect.center)].discard(hid)
        return rect

    def ids_in(self, box: Box) -> List[int]:
        """Houses whose centers lie in ``box``, in id order."""
        x0, y0, x1, y1 = box
        kx0, ky0 = self._key(x0, y0)
        kx1, ky1 = self._key(x1, y1)
        out = []
        for gx in range(kx0, kx1 + 1):
            for gy in range(ky0, ky1 + 1):
                for hid in self.grid.get((gx, gy), ()):
                    c = self.houses[hid].center
                    if x0 <= c.x <= x1 and y0 <= c.y <= y1:
                        out.append(hid)
        out.sort()
        return out

    def obstacles(self, window: Optional[Box]) -> np.ndarray:
        """Corners of every house that can touch a house centered in ``window``."""
        if window is None:
            ids = sorted(self.houses)
        else:
            d = self.cell
            x0, y0, x1, y1 = window
            ids = self.ids_in((x0 - d, y0 - d, x1 + d, y1 + d))
        if not ids:
            return np.zeros((0, 4, 2))
        return np.stack([self.corners[i] for i in ids])

    def fits(self, rect: PlacedRect) -> bool:
        """Scalar re-check of a proposed house against the wall and its neighbours."""
        if not rect_in_container(self.container, rect, self._tol):
            return False
        d = self.cell
        c = rect.center
        for hid in self.ids_in((c.x - d, c.y - d, c.x + d, c.y + d)):
            if penetration_depth(rect, self.houses[hid]) > PLACE_EPS:
                return False
        return True

    def best_insertion(self, angles: Sequence[float], objective: Objective,
                       window: Optional[Box] = None) -> Optional[PlacedRect]:
        """Lowest-key feasible house over ``angles``; ties go to the smaller angle."""
        obstacles = self.obstacles(window)
        best = None
        for theta in angles:
            found = best_position(self.container, self.length, self.width, theta, obstacles,
                                  objective, window)
            if found is None:
                continue
            key, center = found
            rect = PlacedRect(center, self.length, self.width, theta)
            if not self.fits(rect):
                continue
            full = key + (rect.theta,)
            if best is None or full < best[0]:
                best = (full, rect)
        return None if best is None else best[1]

    def sorted_houses(self) -> List[PlacedRect]:
        return sorted(self.houses.values(), key=house_order)
