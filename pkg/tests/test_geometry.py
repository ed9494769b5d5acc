from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spidercross.convex import algorithm_order, realize
from spidercross.geometry import (
    CoordinateDrawing,
    NotGoodDrawing,
    Orientation,
    RationalPoint,
    ViolationKind,
    count_crossings_geometric,
    drawing_from_json,
    drawing_to_json,
    orientation,
    parse_rational,
    segments_properly_cross,
    validate_good_drawing,
)
from spidercross.spider import SpiderError, VertexLabel, make_spider

from oracles import properly_cross_oracle

P = RationalPoint


def test_orientation_examples():
    assert orientation(P(0, 0), P(1, 0), P(0, 1)) is Orientation.LEFT
    assert orientation(P(0, 0), P(1, 0), P(2, 0)) is Orientation.COLLINEAR
    assert orientation(P(0, 0), P(1, 0), P(1, -1)) is Orientation.RIGHT


def test_orientation_is_exact_for_nearly_collinear_points():
    eps = Fraction(1, 10**40)
    assert orientation(P(0, 0), P(1, 1), P(2, 2 + eps)) is Orientation.LEFT
    assert orientation(P(0, 0), P(1, 1), P(2, 2 - eps)) is Orientation.RIGHT


def test_points_are_canonical():
    assert P(Fraction(2, 4), 1) == P(Fraction(1, 2), Fraction(3, 3))
    assert hash(P(Fraction(2, 4), 1)) == hash(P(Fraction(1, 2), 1))


def test_segments_properly_cross_examples():
    assert segments_properly_cross(P(0, 0), P(2, 2), P(0, 2), P(2, 0))
    assert not segments_properly_cross(P(0, 0), P(1, 1), P(1, 1), P(2, 0))
    assert not segments_properly_cross(P(0, 0), P(3, 0), P(1, 0), P(2, 0))
    # T-junction: one endpoint in the other segment's interior
    assert not segments_properly_cross(P(0, 0), P(2, 0), P(1, 0), P(1, 1))


coord = st.integers(-6, 6)
point = st.builds(P, coord, coord)
frac = st.fractions(min_value=Fraction(1, 50), max_value=50, max_denominator=50)


def _distinct(a, b):
    return (a.x, a.y) != (b.x, b.y)


@given(point, point, point, point)
@settings(max_examples=400)
def test_proper_crossing_matches_parametric_oracle(a1, a2, b1, b2):
    if not (_distinct(a1, a2) and _distinct(b1, b2)):
        return
    oracle = properly_cross_oracle((a1.x, a1.y), (a2.x, a2.y), (b1.x, b1.y), (b2.x, b2.y))
    assert segments_properly_cross(a1, a2, b1, b2) == oracle


@given(point, point, point, point, frac, coord, coord)
@settings(max_examples=300)
def test_crossing_symmetries_and_similarity_invariance(a1, a2, b1, b2, scale, dx, dy):
    if not (_distinct(a1, a2) and _distinct(b1, b2)):
        return
    base = segments_properly_cross(a1, a2, b1, b2)
    assert segments_properly_cross(b1, b2, a1, a2) == base
    assert segments_properly_cross(a2, a1, b2, b1) == base
    f = lambda p: P(p.x * scale + dx, p.y * scale + dy)  # noqa: E731
    assert segments_properly_cross(f(a1), f(a2), f(b1), f(b2)) == base
    assert orientation(f(a1), f(a2), f(b1)) == orientation(a1, a2, b1)


def _drawing(legs, coords):
    s = make_spider(legs)
    return CoordinateDrawing(s, {VertexLabel(*v): P(*xy) for v, xy in coords.items()})


def test_three_concurrent_edges_reported():
    # the three outer edges of S_3^2 drawn as diameters through the origin
    d = _drawing(
        [2, 2, 2],
        {
            (0, 0): (5, 7),
            (1, 1): (-1, 0), (1, 2): (1, 0),
            (2, 1): (0, -1), (2, 2): (0, 1),
            (3, 1): (-1, -1), (3, 2): (1, 1),
        },
    )
    vs = validate_good_drawing(d)
    concurrent = [v for v in vs if v.kind is ViolationKind.THREE_EDGES_CONCURRENT]
    assert len(concurrent) == 1
    assert {str(e) for e in concurrent[0].edges} == {"(1,1)-(1,2)", "(2,1)-(2,2)", "(3,1)-(3,2)"}
    with pytest.raises(NotGoodDrawing):
        count_crossings_geometric(d)
    assert count_crossings_geometric(d, check=False) >= 3


def test_vertex_on_edge_reported():
    # (2,1) at the midpoint of (1,1)-(1,2)
    d = _drawing([2, 1, 1], {(0, 0): (0, 0), (1, 1): (4, 0), (1, 2): (4, 4), (2, 1): (4, 2), (3, 1): (-3, 1)})
    vs = validate_good_drawing(d)
    on_edge = [v for v in vs if v.kind is ViolationKind.VERTEX_ON_EDGE]
    assert len(on_edge) == 1
    assert on_edge[0].vertices == (VertexLabel(2, 1),)
    assert str(on_edge[0].edges[0]) == "(1,1)-(1,2)"


def test_collinear_overlap_and_duplicates_reported():
    d = _drawing([1, 1, 1], {(0, 0): (0, 0), (1, 1): (2, 0), (2, 1): (1, 0), (3, 1): (0, 1)})
    kinds = [v.kind for v in validate_good_drawing(d)]
    assert ViolationKind.COLLINEAR_OVERLAP in kinds
    d = _drawing([1, 1, 1], {(0, 0): (0, 0), (1, 1): (1, 0), (2, 1): (1, 0), (3, 1): (0, 1)})
    kinds = [v.kind for v in validate_good_drawing(d)]
    assert ViolationKind.DUPLICATE_POSITION in kinds


def test_star_has_no_crossings():
    d = _drawing([1, 1, 1], {(0, 0): (0, 0), (1, 1): (1, 0), (2, 1): (0, 1), (3, 1): (-1, -1)})
    assert validate_good_drawing(d) == []
    assert count_crossings_geometric(d) == 0


@pytest.mark.parametrize("legs, expected", [([4, 3, 2, 2], 40), ([2, 2, 2], 8)])
def test_count_on_realized_algorithm_order(legs, expected):
    d = realize(algorithm_order(make_spider(legs)))
    assert validate_good_drawing(d) == []
    assert count_crossings_geometric(d) == expected


def test_drawing_requires_every_vertex():
    with pytest.raises(SpiderError):
        _drawing([1, 1, 1], {(0, 0): (0, 0), (1, 1): (1, 0), (2, 1): (0, 1)})


def test_drawing_json_round_trip():
    d = realize(algorithm_order(make_spider([3, 2, 2])))
    obj = drawing_to_json(d)
    assert all("/" in p["x"] and "." not in p["x"] for p in obj["positions"])
    back = drawing_from_json(obj)
    assert back.positions == d.positions


@pytest.mark.parametrize("text", ["0.5", "1e3", "x", "1/2/3", 0.5])
def test_parse_rational_rejects_decimals(text):
    with pytest.raises(SpiderError):
        parse_rational(text)


def test_parse_rational_accepts_fractions():
    assert parse_rational("-6/4") == Fraction(-3, 2)
    assert parse_rational("7") == 7
    assert parse_rational(3) == 3
