"""Seeded instance generators and exact-number serialization."""

from fractions import Fraction

import pytest

from stringraph import (BadSpec, Drawing, GeneratorSpec, Graph, ParseError,
                        Point, Polyline, SchemaError, StringFamily, generate,
                        intersection_graph)
from stringraph.fileio import (RunReport, drawing_json,
                               family_json, graph_text,
                               parse_drawing, parse_family, parse_graph_text,
                               parse_input, report_json, sha256_digest)


def test_generate_is_deterministic():
    for kind in ("random_segments", "random_polylines", "convex_chords",
                 "grid_paths", "disjoint_segments", "all_crossing_segments"):
        spec = GeneratorSpec(kind=kind, count=7, seed=11)
        assert generate(spec) == generate(spec)
    a = generate(GeneratorSpec(kind="random_segments", count=7, seed=1))
    b = generate(GeneratorSpec(kind="random_segments", count=7, seed=2))
    assert a != b


def test_generator_kinds_produce_expected_shapes():
    fam = generate(GeneratorSpec(kind="random_segments", count=9, seed=0))
    assert isinstance(fam, StringFamily) and len(fam) == 9
    assert all(len(s.points) == 2 for s in fam.strings)

    poly = generate(GeneratorSpec(kind="random_polylines", count=5, seed=0, bends=3))
    assert all(2 <= len(s.points) <= 5 for s in poly.strings)

    D = generate(GeneratorSpec(kind="convex_chords", count=6, seed=0))
    assert isinstance(D, Drawing) and (D.n, D.m) == (6, 15)

    grid = generate(GeneratorSpec(kind="grid_paths", count=9, seed=0))
    G = intersection_graph(grid)
    assert G.m == 12  # 3x3 grid adjacency

    disj = generate(GeneratorSpec(kind="disjoint_segments", count=6, seed=0))
    assert intersection_graph(disj).m == 0

    allx = generate(GeneratorSpec(kind="all_crossing_segments", count=6, seed=0))
    assert intersection_graph(allx).m == 15


def test_generator_region_bounds_respected():
    region = (10, 20, 200, 150)
    fam = generate(GeneratorSpec(kind="random_segments", count=8, seed=3,
                                 region=region))
    for s in fam.strings:
        for p in s.points:
            assert 10 <= p.x <= 200 and 20 <= p.y <= 150


def test_bad_specs_rejected():
    with pytest.raises(BadSpec):
        GeneratorSpec(kind="moebius", count=3)
    with pytest.raises(BadSpec):
        GeneratorSpec(kind="random_segments", count=0)
    with pytest.raises(BadSpec):
        GeneratorSpec(kind="random_segments", count=3, region=(0, 0, 3, 3))
    with pytest.raises(BadSpec):
        GeneratorSpec(kind="convex_chords", count=65)
    with pytest.raises(BadSpec):
        GeneratorSpec(kind="random_polylines", count=3, bends=-1)


def test_family_json_roundtrip():
    fam = StringFamily((
        Polyline("a", (Point(0, 0), Point(3, 4))),
        Polyline("b", (Point(Fraction(1, 2), 2), Point(5, Fraction(7, 3)))),
    ))
    text = family_json(fam)
    back = parse_family(text)
    assert back == fam
    assert '"1/2"' in text and '"7/3"' in text


def test_drawing_json_roundtrip():
    D = generate(GeneratorSpec(kind="convex_chords", count=5, seed=4))
    back = parse_drawing(drawing_json(D))
    assert back.vertices == D.vertices
    assert [(e.u, e.v) for e in back.edges] == [(e.u, e.v) for e in D.edges]
    assert [e.curve.points for e in back.edges] == [e.curve.points for e in D.edges]


def test_parse_input_dispatches_on_kind():
    fam = generate(GeneratorSpec(kind="random_segments", count=3, seed=0))
    assert isinstance(parse_input(family_json(fam)), StringFamily)
    D = generate(GeneratorSpec(kind="convex_chords", count=4, seed=0))
    assert isinstance(parse_input(drawing_json(D)), Drawing)


def test_decimal_literals_parse_exactly():
    text = '{"kind": "family", "strings": [{"id": "a", "points": [[0.1, 0], [1, 1]]}]}'
    fam = parse_family(text)
    assert fam.strings[0].points[0].x == Fraction(1, 10)
    # Binary doubles differ from the decimal reading for 0.1.
    inex = parse_family(text, inexact=True)
    assert inex.strings[0].points[0].x == Fraction(0.1)
    assert inex.strings[0].points[0].x != Fraction(1, 10)


def test_non_finite_numbers_rejected():
    text = '{"kind": "family", "strings": [{"id": "a", "points": [[NaN, 0], [1, 1]]}]}'
    with pytest.raises(SchemaError):
        parse_family(text)


def test_malformed_json_reports_line():
    with pytest.raises(ParseError) as exc:
        parse_family('{"kind": "family",\n  "strings": [}')
    assert "line 2" in str(exc.value)


def test_family_schema_errors():
    with pytest.raises(SchemaError):
        parse_family('{"kind": "family", "strings": [{"id": "a"}]}')
    with pytest.raises(SchemaError):
        parse_family('{"kind": "family", "strings": [{"id": "a", "points": [[0, 0]]}]}')
    with pytest.raises(SchemaError):
        parse_input('{"kind": "sculpture"}')


def test_graph_text_roundtrip():
    G = Graph.from_edges(4, [(0, 1), (2, 3)])
    text = graph_text(G)
    assert parse_graph_text(text) == G
    commented = "# a comment\n\n" + text
    assert parse_graph_text(commented) == G


def test_graph_text_errors():
    with pytest.raises(ParseError):
        parse_graph_text("3\n")
    with pytest.raises(ParseError):
        parse_graph_text("2 1\n")  # missing edge line
    with pytest.raises(SchemaError):
        parse_graph_text("2 1\n0 5\n")
    with pytest.raises(SchemaError):
        parse_graph_text("2 1\n1 1\n")
    with pytest.raises(SchemaError):
        parse_graph_text("2 2\n0 1\n1 0\n")


def test_report_json_is_canonical():
    rep = RunReport(operation="demo", input_digest="abc", parameters={"b": 2, "a": 1},
                    result={"value": Fraction(1, 3)}, verification={"status": "pass"})
    one = report_json(rep)
    two = report_json(rep)
    assert one == two
    assert '"1/3"' in one
    assert "timings" not in one
    timed = RunReport(operation="demo", input_digest="abc", parameters={},
                      result={}, verification={}, timings={"wall_seconds": 0.5})
    assert "timings" in report_json(timed)


def test_sha256_digest_stable():
    assert sha256_digest("abc") == (
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad")
    assert sha256_digest(b"abc") == sha256_digest("abc")
