import os
from pathlib import Path

import pytest

import impsep

DATA = Path(os.environ.get("IMPSEP_TEST_DATA", Path(__file__).resolve().parents[2] / "tests" / "data"))

# x=1, a=2, b=3, c=4, y=5: x-a-y and x-b-c-y
THETA = impsep.Graph([1, 2, 3, 4, 5], [(1, 2), (2, 5), (1, 3), (3, 4), (4, 5)])


def test_graph_roundtrip():
    assert THETA.order == 5
    assert THETA.edges == [(1, 2), (1, 3), (2, 5), (3, 4), (4, 5)]
    assert THETA.neighbors(1) == [2, 3]
    with pytest.raises(impsep.Error):
        impsep.Graph([1, 2], [(1, 1)])


def test_separators():
    assert impsep.min_separator(THETA, [1], [5]) == [2, 3]
    assert impsep.smallest_important_separator(THETA, [1], [5]) == [2, 4]
    assert impsep.is_important(THETA, [1], [5], [2, 4])
    assert not impsep.is_important(THETA, [1], [5], [2, 3])
    assert impsep.compare(THETA, [1], [5], [2, 4], [2, 3]) == "Greater"
    graph, smallest = impsep.normalize(THETA, [1], [5])
    assert smallest == [2, 4]
    assert graph.vertices == [1, 2, 4, 5]


def test_enumeration():
    assert impsep.enumerate_important(THETA, [1], [5], 1) == [[2, 4]]
    assert impsep.enumerate_important(THETA, [1], [5], 2, threads=2) == [[2, 4]]
    edge = impsep.Graph([1, 2], [(1, 2)])
    assert impsep.enumerate_important(edge, [1], [2], 1) is None
    assert impsep.binomial_bound(5, 2) == 16


def test_multiway_cut():
    star = impsep.Graph([1, 2, 3, 4], [(4, 1), (4, 2), (4, 3)])
    assert impsep.lower_bound_m(star, [1, 2, 3]) == (1, 1)
    assert impsep.solve_above_guarantee(star, [1, 2, 3], 0) == [4]
    assert impsep.solve_budget(star, [1, 2, 3], 0) is None
    cycle = impsep.Graph([1, 2, 3, 4, 5, 6], [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)])
    assert impsep.solve_above_guarantee(cycle, [1, 3, 5], 0) is None
    assert len(impsep.solve_above_guarantee(cycle, [1, 3, 5], 1, parallel=True)) == 3
    triangle = impsep.Graph([1, 2, 3], [(1, 2), (2, 3), (1, 3)])
    with pytest.raises(impsep.Error) as info:
        impsep.lower_bound_m(triangle, [1, 2, 3])
    assert info.value.kind == "AdjacentTerminals"


def test_files():
    parsed = impsep.read_graph_file(str(DATA / "theta.sep"))
    assert parsed["graph"] == THETA
    assert parsed["x"] == [1] and parsed["y"] == [5]
    assert parsed["terminals"] is None
    with pytest.raises(impsep.ParseError) as info:
        impsep.parse_graph_file("p sep 2 1\ne 1 1\n")
    assert info.value.line == 2
    assert isinstance(info.value, impsep.Error)
