from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Tuple

from .alcuin import ProblemInstance
from .geometry import PlacedRect, Point, normalize_angle

DIGITS = 9


@dataclass(frozen=True)
class Provenance:
    seed: int = 0
    budget_ms: int = 0
    iterations: int = 0
    stages: Tuple[Tuple[str, int], ...] = ()

    def with_stage(self, name: str, count: int) -> "Provenance":
        return replace(self, stages=self.stages + ((name, count),))


@dataclass(frozen=True)
class Layout:
    instance: ProblemInstance
    houses: Tuple[PlacedRect, ...]
    provenance: Provenance = field(default_factory=Provenance, compare=False)

    @property
    def count(self) -> int:
        return len(self.houses)

    def with_houses(self, houses: Iterable[PlacedRect]) -> "Layout":
        return replace(self, houses=tuple(houses))

    def with_stage(self, name: str) -> "Layout":
        return replace(self, provenance=self.provenance.with_stage(name, self.count))


def quantize(value: float) -> float:
    """Round to the file precision; the result prints and parses back unchanged."""
    return float(f"{value:.{DIGITS}f}") + 0.0


def quantize_angle(theta: float) -> float:
    q = quantize(normalize_angle(theta))
    # pi itself rounds up past pi; a half turn is the identity for a rectangle
    return 0.0 if q >= math.pi else q


def quantize_rect(r: PlacedRect) -> PlacedRect:
    return PlacedRect(Point(quantize(r.center.x), quantize(r.center.y)), r.length, r.width,
                      quantize_angle(r.theta))


def house_order(r: PlacedRect) -> Tuple[float, float, float]:
    return r.center.y, r.center.x, r.theta


def canonical(layout: Layout) -> Layout:
    """Quantized coordinates, houses sorted by (y, x, theta)."""
    return layout.with_houses(sorted((quantize_rect(h) for h in layout.houses), key=house_order))
