import xml.etree.ElementTree as ET

import pytest

from lattice_triangles import cones
from lattice_triangles.plotting import (
    HEIGHT,
    WIDTH,
    PlotWindow,
    pairs_from_csv,
    pairs_to_csv,
    render_svg,
    svg_circle_pairs,
)
from lattice_triangles.realizability import enumerate_pairs

SVG_NS = "{http://www.w3.org/2000/svg}"


def test_csv_format():
    assert pairs_to_csv(enumerate_pairs(1)) == "b,i\n3,0\n"
    text = pairs_to_csv(enumerate_pairs(4))
    assert text.splitlines()[0] == "b,i"
    assert len(text.splitlines()) == 7
    assert "\r" not in text and " " not in text


def test_csv_round_trip():
    text = pairs_to_csv(enumerate_pairs(60))
    assert pairs_to_csv(sorted(pairs_from_csv(text))) == text


def test_csv_rejects_bad_header():
    with pytest.raises(ValueError):
        pairs_from_csv("x,y\n1,2\n")


def test_window_is_complete():
    w = PlotWindow.complete_for(2000)
    assert (w.b_max, w.i_max) == (500, 751)
    # the far corner is still inside the enumeration window
    assert 2 * w.i_max + w.b_max - 2 <= 2000
    assert PlotWindow.complete_for(4) == PlotWindow(6, 1)


def test_svg_structure():
    ps = enumerate_pairs(120)
    w = PlotWindow.complete_for(120, 60)
    svg = render_svg(ps, w, range(1, 4))
    root = ET.fromstring(svg)
    assert root.get("viewBox") == f"0 0 {WIDTH} {HEIGHT}"
    circles = root.findall(f".//{SVG_NS}circle")
    assert len(circles) == sum(1 for b, i in ps if w.contains(b, i))
    paths = root.findall(f".//{SVG_NS}g/{SVG_NS}path")
    assert len(paths) == 3
    for p in paths:
        assert p.get("d").count("L") == 2
    labels = {t.text for t in root.findall(f".//{SVG_NS}text")}
    assert {"b", "i"} <= labels


def test_svg_skips_cones_right_of_window():
    w = PlotWindow(20, 20)
    svg = render_svg([], w, range(1, 5))
    root = ET.fromstring(svg)
    # only cones 1 and 2 have their apex at b <= 20
    assert len(root.findall(f".//{SVG_NS}g/{SVG_NS}path")) == 2


def test_svg_is_deterministic():
    ps = enumerate_pairs(200)
    w = PlotWindow.complete_for(200)
    assert render_svg(ps, w, range(1, 3)) == render_svg(list(ps), w, range(1, 3))


def test_svg_points_recoverable():
    ps = enumerate_pairs(300)
    w = PlotWindow.complete_for(300, 120)
    got = svg_circle_pairs(render_svg(ps, w), w)
    assert got == [p for p in ps if w.contains(*p)]


def test_figure_window_has_empty_cones():
    ps = enumerate_pairs(2000)
    w = PlotWindow.complete_for(2000)
    plotted = svg_circle_pairs(render_svg(ps, w, range(1, 7)), w)
    assert len(plotted) > 10000
    for c in (2, 3):
        assert not [p for p in plotted if cones.cone_contains(c, p)]
    # the Scott exception is the only plotted point in the first cone
    assert [p for p in plotted if cones.cone_contains(1, p)] == [(9, 1)]
