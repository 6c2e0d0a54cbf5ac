import json
from fractions import Fraction
from xml.etree import ElementTree

import pytest

from gcnlab.corpus import fixture
from gcnlab.geometry import Line, Point
from gcnlab.io import ParseError, dumps, loads, parse_line, parse_rational, read_node_set, write_node_set
from gcnlab.svg import render_svg


def test_rationals_are_strings_not_floats():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational(4) == 4
    for bad in (0.5, "0.5", "1e3", True, "1/0", None):
        with pytest.raises(ParseError):
            parse_rational(bad)


def test_parse_line_forms():
    assert parse_line("2,2,-2") == Line(1, 1, -1)
    assert parse_line(["0", "1/2", "3"]) == Line(0, 1, 6)
    with pytest.raises(ParseError):
        parse_line("0,0,1")
    with pytest.raises(ParseError):
        parse_line("1,2")


def test_document_round_trip(tmp_path):
    fx = fixture("x-star")
    path = tmp_path / "x.json"
    write_node_set(path, fx.nodes, (fx.line,), fx.blueprint)
    loaded = read_node_set(path)
    assert list(loaded.nodes) == list(fx.nodes)
    assert loaded.distinguished == fx.line
    assert loaded.blueprint == fx.blueprint
    assert dumps(loaded.nodes, loaded.lines, loaded.blueprint) == path.read_text()


def test_document_errors():
    with pytest.raises(ParseError):
        loads("{not json")
    with pytest.raises(ParseError):
        loads(json.dumps({"nodes": []}))
    with pytest.raises(ParseError):
        loads(json.dumps({"degree": 1, "nodes": [["0", "0"], ["1", "0"]]}))
    with pytest.raises(ParseError):
        loads(json.dumps({"degree": 1, "nodes": [[0.0, 0], ["1", "0"], ["0", "1"]]}))


def test_svg_elements():
    fx = fixture("y-star")
    svg = render_svg(fx.nodes, fx.line)
    root = ElementTree.fromstring(svg)
    ns = "{http://www.w3.org/2000/svg}"
    circles = root.findall(f".//{ns}circle")
    assert len(circles) == 10
    classes = [e.get("class") for e in root.findall(f".//{ns}line")]
    assert classes.count("maximal") == 3
    assert classes.count("distinguished") == 1


def test_svg_flips_y():
    from gcnlab.nodeset import make_node_set

    X = make_node_set(1, [Point(0, 0), Point(1, 0), Point(0, 1)])
    root = ElementTree.fromstring(render_svg(X))
    ns = "{http://www.w3.org/2000/svg}"
    cy = {(c.get("cx"), c.get("cy")) for c in root.findall(f".//{ns}circle")}
    ys = sorted(float(y) for _, y in cy)
    top = [x for x, y in cy if float(y) == ys[0]]
    assert len(top) == 1  # the node (0, 1) is drawn highest
