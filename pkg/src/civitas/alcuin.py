"""The three city problems: instances, medieval arithmetic and area bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple, Union

from .geometry import Circle, ConvexContainer, Point, Polygon, container_area

PROBLEMS = ("quadrangula", "triangula", "rotunda")
PROBLEM_IDS = PROBLEMS + ("custom",)
VARIANTS = ("alcuin", "folkerts")


class ProblemError(ValueError):
    pass


@dataclass(frozen=True)
class Quadrilateral:
    """Side lengths; ``a``/``c`` and ``b``/``d`` are opposite pairs."""

    a: float
    b: float
    c: float
    d: float


@dataclass(frozen=True)
class Triangle:
    """Two legs ``a`` and ``b`` and the front ``c``."""

    a: float
    b: float
    c: float


@dataclass(frozen=True)
class Round:
    ell: float  # circumference


CityDimensions = Union[Quadrilateral, Triangle, Round]


def _dims_values(dims: CityDimensions) -> Tuple[float, ...]:
    if isinstance(dims, Quadrilateral):
        return dims.a, dims.b, dims.c, dims.d
    if isinstance(dims, Triangle):
        return dims.a, dims.b, dims.c
    return (dims.ell,)


@dataclass(frozen=True)
class HouseDimensions:
    length: float
    width: float

    def __post_init__(self):
        if not (self.length >= self.width > 0) or not math.isfinite(self.length):
            raise ProblemError(f"house needs length >= width > 0, got {self.length}x{self.width}")

    @property
    def area(self) -> float:
        return self.length * self.width

    @property
    def diagonal(self) -> float:
        return math.hypot(self.length, self.width)


@dataclass(frozen=True)
class ProblemInstance:
    id: str
    container: ConvexContainer
    house: HouseDimensions
    dims: Optional[CityDimensions] = None

    def __post_init__(self):
        if self.id not in PROBLEM_IDS:
            raise ProblemError(f"unknown problem id {self.id!r}")
        if self.dims is not None:
            expected = container_area(container_from_dims(self.dims))
            actual = container_area(self.container)
            if abs(expected - actual) > 1e-6 * expected:
                raise ProblemError(
                    f"container area {actual} disagrees with city dimensions ({expected})")


def container_from_dims(dims: CityDimensions) -> ConvexContainer:
    """Canonical wall: base on the x-axis from the origin, symmetry axis vertical.

    Quadrilaterals are read as isosceles trapezoids with the longer of ``a``/``c``
    as the base and ``b``/``d`` as the equal legs. Triangles use ``c`` as the base.
    """
    values = _dims_values(dims)
    if any(not (v > 0) for v in values):
        raise ProblemError(f"city dimensions must be positive: {dims}")
    if isinstance(dims, Round):
        return Circle(Point(0.0, 0.0), dims.ell / (2.0 * math.pi))
    if isinstance(dims, Triangle):
        a, b, c = dims.a, dims.b, dims.c
        # apex from the two legs: |apex| = b from (0,0), |apex - (c,0)| = a
        x = (b * b - a * a + c * c) / (2.0 * c)
        h2 = b * b - x * x
        if h2 <= 0:
            raise ProblemError(f"sides {values} do not form a triangle")
        return Polygon((Point(0.0, 0.0), Point(c, 0.0), Point(x, math.sqrt(h2))))
    base, top = max(dims.a, dims.c), min(dims.a, dims.c)
    if dims.b != dims.d or base == top:
        raise ProblemError("only isosceles trapezoids with distinct parallel sides are supported")
    inset = (base - top) / 2.0
    h2 = dims.b * dims.b - inset * inset
    if h2 <= 0:
        raise ProblemError(f"legs too short for a trapezoid with sides {values}")
    h = math.sqrt(h2)
    return Polygon((Point(0.0, 0.0), Point(base, 0.0), Point(base - inset, h), Point(inset, h)))


_CANONICAL: Dict[str, Tuple[CityDimensions, HouseDimensions]] = {
    "quadrangula": (Quadrilateral(1100, 600, 1000, 600), HouseDimensions(40, 30)),
    "triangula": (Triangle(100, 100, 90), HouseDimensions(20, 10)),
    "rotunda": (Round(8000), HouseDimensions(30, 20)),
}


def make_instance(problem_id: str) -> ProblemInstance:
    if problem_id not in _CANONICAL:
        raise ProblemError(f"unknown problem {problem_id!r}; choose from {', '.join(PROBLEMS)}")
    dims, house = _CANONICAL[problem_id]
    return ProblemInstance(problem_id, container_from_dims(dims), house, dims)


def make_custom_instance(dims: CityDimensions, house: HouseDimensions) -> ProblemInstance:
    return ProblemInstance("custom", container_from_dims(dims), house, dims)


def _positive(*values: float) -> None:
    for v in values:
        if not v > 0:
            raise ProblemError(f"lengths must be positive, got {v}")


def egyptian_quadrilateral_area(a: float, b: float, c: float, d: float) -> float:
    """Half-sum of one opposite pair times half-sum of the other."""
    _positive(a, b, c, d)
    return (a + c) / 2 * ((b + d) / 2)


def egyptian_triangle_area(a: float, b: float, c: float) -> float:
    _positive(a, b, c)
    return (a + b) / 2 * (c / 2)


def circle_area_pi3(ell: float) -> float:
    _positive(ell)
    return ell * ell / 12


def circle_area_exact(ell: float) -> float:
    _positive(ell)
    return ell * ell / (4 * math.pi)


def house_area_bound(instance: ProblemInstance) -> int:
    """No packing can hold more houses than fit by area alone."""
    return math.floor(container_area(instance.container) / instance.house.area)


# ---------------------------------------------------------------------------
# medieval arithmetic

OPERATIONS = ("add", "halve", "floor-divide", "multiply", "subtract", "proportion-split", "adjust")


@dataclass(frozen=True)
class Step:
    description: str
    operation: str
    operands: Tuple[int, ...]
    result: int

    def recompute(self) -> int:
        ops = self.operands
        if self.operation == "add":
            return sum(ops)
        if self.operation == "halve":
            return ops[0] // 2
        if self.operation == "floor-divide":
            return ops[0] // ops[1]
        if self.operation == "multiply":
            return math.prod(ops)
        if self.operation == "subtract":
            return ops[0] - ops[1]
        if self.operation == "proportion-split":
            # (total, share, other share): this share of total
            total, share, other = ops
            return total * share // (share + other)
        if self.operation == "adjust":
            # (stated value, replacement)
            return ops[1]
        raise ProblemError(f"unknown operation {self.operation!r}")

    def is_valid(self) -> bool:
        return self.operation in OPERATIONS and self.recompute() == self.result

    def __str__(self) -> str:
        ops = self.operands
        if self.operation == "adjust":
            expr = f"{ops[0]} -> {ops[1]}"
        elif self.operation == "halve":
            expr = f"{ops[0]} / 2 = {self.result}"
        elif self.operation == "proportion-split":
            expr = f"{ops[0]} * {ops[1]}/{ops[1] + ops[2]} = {self.result}"
        else:
            sym = {"add": " + ", "floor-divide": " // ", "multiply": " * ", "subtract": " - "}[self.operation]
            expr = sym.join(str(v) for v in ops) + f" = {self.result}"
        return f"{self.operation:<16} {expr:<22} {self.description}"


@dataclass(frozen=True)
class ArithmeticTrace:
    problem: str
    variant: str
    steps: Tuple[Step, ...] = field(default_factory=tuple)

    @property
    def final_count(self) -> int:
        return self.steps[-1].result

    def is_valid(self) -> bool:
        return all(s.is_valid() for s in self.steps)

    @property
    def results(self) -> Tuple[int, ...]:
        return tuple(s.result for s in self.steps)


def _step(description: str, operation: str, *operands: int) -> Step:
    s = Step(description, operation, tuple(operands), 0)
    return Step(description, operation, s.operands, s.recompute())


def medieval_count(problem_id: str, variant: str = "alcuin") -> ArithmeticTrace:
    """Replay the medieval solution step by step with whole-number division."""
    if problem_id not in PROBLEMS:
        raise ProblemError(f"unknown problem {problem_id!r}; choose from {', '.join(PROBLEMS)}")
    if variant not in VARIANTS:
        raise ProblemError(f"unknown variant {variant!r}; choose from {', '.join(VARIANTS)}")
    if variant == "folkerts" and problem_id != "rotunda":
        raise ProblemError("the folkerts variant exists only for rotunda")

    if problem_id == "quadrangula":
        steps = [
            _step("join the two long sides", "add", 1100, 1000),
            _step("join the two short sides", "add", 600, 600),
        ]
        steps += [
            _step("mean length", "halve", steps[0].result),
            _step("mean breadth", "halve", steps[1].result),
        ]
        steps += [
            _step("houses along the length (40 ft each)", "floor-divide", steps[2].result, 40),
            _step("houses along the breadth (30 ft each)", "floor-divide", steps[3].result, 30),
        ]
        steps.append(_step("houses in the city", "multiply", steps[4].result, steps[5].result))
    elif problem_id == "triangula":
        steps = [_step("join the two sides", "add", 100, 100)]
        steps.append(_step("mean side", "halve", steps[0].result))
        steps.append(_step("half the front", "halve", 90))
        steps.append(_step("front taken as 40 instead of 45", "adjust", steps[2].result, 40))
        steps += [
            _step("houses along the side (20 ft each)", "floor-divide", steps[1].result, 20),
            _step("houses along the front (10 ft each)", "floor-divide", steps[3].result, 10),
        ]
        steps.append(_step("houses in the city", "multiply", steps[4].result, steps[5].result))
    elif variant == "alcuin":
        steps = [
            _step("larger share of the circumference, ratio 3:2", "proportion-split", 8000, 3, 2),
            _step("smaller share of the circumference, ratio 3:2", "proportion-split", 8000, 2, 3),
        ]
        steps += [
            _step("length of the equivalent rectangle", "halve", steps[0].result),
            _step("breadth of the equivalent rectangle", "halve", steps[1].result),
        ]
        steps += [
            _step("houses along the length (30 ft each)", "floor-divide", steps[2].result, 30),
            _step("houses along the breadth (20 ft each)", "floor-divide", steps[3].result, 20),
        ]
        steps.append(_step("houses in the city", "multiply", steps[4].result, steps[5].result))
    else:
        steps = [
            _step("quarter of the circumference", "floor-divide", 8000, 4),
            _step("third of the circumference", "floor-divide", 8000, 3),
        ]
        steps += [
            _step("half of the quarter", "halve", steps[0].result),
            _step("half of the third", "halve", steps[1].result),
        ]
        steps += [
            _step("houses along the longer side (30 ft each)", "floor-divide", steps[3].result, 30),
            _step("houses along the shorter side (20 ft each)", "floor-divide", steps[2].result, 20),
        ]
        steps.append(_step("houses in one quarter", "multiply", steps[4].result, steps[5].result))
        steps.append(_step("houses in the four quarters", "multiply", steps[6].result, 4))
    return ArithmeticTrace(problem_id, variant, tuple(steps))


@dataclass(frozen=True)
class ReferenceCounts:
    medieval: Dict[str, int]
    singmaster: Tuple[int, ...]
    best_known: int


REFERENCE_COUNTS: Dict[str, ReferenceCounts] = {
    "quadrangula": ReferenceCounts({"alcuin": 520}, (516, 517, 519), 510),
    "triangula": ReferenceCounts({"alcuin": 20}, (15,), 16),
    "rotunda": ReferenceCounts({"alcuin": 6400, "folkerts": 8800}, (8307,), 8349),
}


def medieval_area(instance: ProblemInstance) -> Optional[float]:
    """Area by the medieval rule for the instance's city dimensions (pi = 3 for circles)."""
    dims = instance.dims
    if isinstance(dims, Quadrilateral):
        return egyptian_quadrilateral_area(dims.a, dims.b, dims.c, dims.d)
    if isinstance(dims, Triangle):
        return egyptian_triangle_area(dims.a, dims.b, dims.c)
    if isinstance(dims, Round):
        return circle_area_pi3(dims.ell)
    return None
