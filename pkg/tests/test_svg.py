import re

from civitas.alcuin import make_instance
from civitas.geometry import PlacedRect, Point
from civitas.layout import Layout
from civitas.packer import best_offset_rows
from civitas.svg import render_svg


def test_rect_per_house_and_one_wall():
    layout = best_offset_rows(make_instance("triangula"))
    svg = render_svg(layout)
    assert svg.count("<rect ") == layout.count
    assert svg.count("<path ") == 1
    assert svg.startswith('<?xml version="1.0"')
    assert svg.count("<text") == layout.count


def test_empty_layout_draws_only_the_wall():
    svg = render_svg(Layout(make_instance("rotunda"), ()))
    assert svg.count("<rect ") == 0
    assert svg.count("<circle ") == 1


def test_y_axis_points_up():
    inst = make_instance("triangula")
    low = PlacedRect(Point(45, 6), 20, 10, 0.0)
    high = PlacedRect(Point(45, 40), 20, 10, 0.0)
    svg = render_svg(Layout(inst, (low, high)), scale=10)
    ys = [float(y) for y in re.findall(r'<rect x="[-\d.]+" y="([-\d.]+)"', svg)]
    assert ys[0] > ys[1]


def test_labels_off_for_large_layouts():
    layout = best_offset_rows(make_instance("quadrangula"))
    svg = render_svg(layout)
    assert "<text" not in svg
    assert svg.count("<rect ") == layout.count
