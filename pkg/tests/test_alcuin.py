import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from civitas.alcuin import (PROBLEMS, REFERENCE_COUNTS, HouseDimensions, ProblemError, Quadrilateral,
                            Round, Triangle, circle_area_exact, circle_area_pi3, container_from_dims,
                            egyptian_quadrilateral_area, egyptian_triangle_area, house_area_bound,
                            make_custom_instance, make_instance, medieval_count)
from civitas.geometry import Circle, container_area

EXACT_AREA = {"quadrangula": 627_808.689, "triangula": 4_018.628, "rotunda": 5_092_958.179}
BOUND = {"quadrangula": 523, "triangula": 20, "rotunda": 8488}


@pytest.mark.parametrize("problem", PROBLEMS)
def test_instance_area(problem):
    assert container_area(make_instance(problem).container) == pytest.approx(EXACT_AREA[problem], abs=1e-3)


@pytest.mark.parametrize("problem", PROBLEMS)
def test_house_area_bound(problem):
    assert house_area_bound(make_instance(problem)) == BOUND[problem]


def test_rotunda_radius():
    c = make_instance("rotunda").container
    assert isinstance(c, Circle)
    assert c.radius == pytest.approx(1273.2395, abs=1e-4)


def test_egyptian_formulas():
    assert egyptian_quadrilateral_area(1100, 600, 1000, 600) == 630_000
    assert egyptian_quadrilateral_area(7, 7, 7, 7) == 49
    assert egyptian_quadrilateral_area(2, 4, 2, 4) == 8
    assert egyptian_triangle_area(100, 100, 90) == 4500
    assert egyptian_triangle_area(2, 2, 2) == 2
    with pytest.raises(ProblemError):
        egyptian_triangle_area(0.0, 1, 1)
    with pytest.raises(ProblemError):
        egyptian_quadrilateral_area(1, -1, 1, 1)


def test_circle_formulas():
    assert circle_area_pi3(8000) == pytest.approx(5_333_333.333, abs=1e-3)
    assert circle_area_pi3(12) == 12
    assert circle_area_pi3(6) == 3
    assert circle_area_exact(8000) == pytest.approx(5_092_958.179, abs=1e-3)
    assert circle_area_exact(2 * math.pi) == pytest.approx(math.pi)
    assert circle_area_exact(4 * math.pi) == pytest.approx(4 * math.pi)
    with pytest.raises(ProblemError):
        circle_area_exact(0)


def test_medieval_rules_overestimate():
    assert egyptian_quadrilateral_area(1100, 600, 1000, 600) > container_area(make_instance("quadrangula").container)
    assert egyptian_triangle_area(100, 100, 90) > container_area(make_instance("triangula").container)


@given(st.floats(1e-3, 1e7))
def test_pi3_exceeds_exact(ell):
    assert circle_area_pi3(ell) > circle_area_exact(ell)


@pytest.mark.parametrize("problem, variant, count, results", [
    ("quadrangula", "alcuin", 520, (2100, 1200, 1050, 600, 26, 20, 520)),
    ("triangula", "alcuin", 20, (200, 100, 45, 40, 5, 4, 20)),
    ("rotunda", "alcuin", 6400, (4800, 3200, 2400, 1600, 80, 80, 6400)),
    ("rotunda", "folkerts", 8800, (2000, 2666, 1000, 1333, 44, 50, 2200, 8800)),
])
def test_medieval_traces(problem, variant, count, results):
    trace = medieval_count(problem, variant)
    assert trace.final_count == count
    assert trace.results == results
    assert trace.is_valid()


def test_triangle_adjust_step_prints_arrow():
    trace = medieval_count("triangula")
    assert any("45 -> 40" in str(s) for s in trace.steps)


@pytest.mark.parametrize("problem, variant", [(p, "alcuin") for p in PROBLEMS] + [("rotunda", "folkerts")])
def test_trace_invariants(problem, variant):
    trace = medieval_count(problem, variant)
    assert all(step.recompute() == step.result for step in trace.steps)
    quotients = [s.result for s in trace.steps if s.operation == "floor-divide"]
    expected = quotients[-2] * quotients[-1]
    first = next(k for k, s in enumerate(trace.steps) if s.operation == "multiply")
    for s in trace.steps[first + 1:]:
        expected *= s.operands[1]
    assert trace.final_count == expected
    assert medieval_count(problem, variant) == trace


def test_folkerts_only_for_rotunda():
    with pytest.raises(ProblemError):
        medieval_count("quadrangula", "folkerts")
    with pytest.raises(ProblemError):
        medieval_count("nowhere")


def test_reference_counts():
    assert REFERENCE_COUNTS["quadrangula"].best_known == 510
    assert REFERENCE_COUNTS["triangula"].singmaster == (15,)
    assert REFERENCE_COUNTS["rotunda"].singmaster == (8307,)
    for p in PROBLEMS:
        assert REFERENCE_COUNTS[p].best_known <= BOUND[p]


def test_container_geometry():
    trap = container_from_dims(Quadrilateral(1100, 600, 1000, 600))
    assert [tuple(v) for v in trap.vertices][:2] == [(0.0, 0.0), (1100.0, 0.0)]
    assert trap.vertices[2].x == pytest.approx(1050)
    tri = container_from_dims(Triangle(100, 100, 90))
    assert tri.vertices[2].x == pytest.approx(45)
    assert tri.vertices[2].y == pytest.approx(89.3029, abs=1e-4)
    with pytest.raises(ProblemError):
        container_from_dims(Triangle(1, 1, 5))
    with pytest.raises(ProblemError):
        container_from_dims(Round(-1))


def test_house_dimensions():
    with pytest.raises(ProblemError):
        HouseDimensions(10, 20)
    inst = make_custom_instance(Triangle(50, 50, 60), HouseDimensions(10, 5))
    assert inst.id == "custom"
    assert house_area_bound(inst) == math.floor(1200 / 50)
