import json

import pytest
from hypothesis import given, strategies as st

from gpstar import ColoringConflict, GPGraph, PartialColoring, SimpleGraph
from gpstar.coloring import MAX_COLOR, Palette3, merge

G = GPGraph(9, 3)


def test_assignment_and_conflict():
    col = PartialColoring(G)
    col[0] = 1
    col[0] = 1  # same color again is fine
    with pytest.raises(ColoringConflict):
        col[0] = 2


def test_recolor_logs_changes():
    col = PartialColoring(G, {0: 1})
    col.recolor(0, 2)
    col.recolor(0, 2)
    col.recolor(0, None)
    assert col.log == [(0, 1, 2), (0, 2, None)]
    assert 0 not in col


@pytest.mark.parametrize("bad", [-1, MAX_COLOR + 1, True, 1.0])
def test_color_range(bad):
    with pytest.raises(ValueError):
        PartialColoring(G)[0] = bad


def test_unknown_edge():
    with pytest.raises(KeyError):
        PartialColoring(G)[len(G.edges)] = 0


def test_colors_at_vertex_and_edge():
    path = SimpleGraph.path(3)  # x0 - x1 - x2 - x3
    col = PartialColoring(path, {0: 0, 2: 2})
    assert col.colors_at_vertex(1) == {0}
    assert col.colors_at_vertex(2) == {2}
    assert col.colors_at_edge(1) == {0, 2}
    assert col.colors_at_edge(0) == set()
    with pytest.raises(KeyError):
        col.colors_at_vertex(9)


def test_uncolored_and_total():
    col = PartialColoring(SimpleGraph.cycle(4), {0: 0, 1: 1})
    assert col.uncolored() == [2, 3]
    assert not col.is_total()
    col[2], col[3] = 0, 2
    assert col.is_total()


def test_json_round_trip():
    col = PartialColoring(G, {0: 1, 5: 3})
    back = PartialColoring.from_json(col.to_json())
    assert back.as_dict() == col.as_dict()
    data = json.loads(col.to_json())
    assert data["n"] == 9 and data["k"] == 3


def test_from_dict_errors():
    with pytest.raises(ValueError):
        PartialColoring.from_dict({"edges": []})
    with pytest.raises(ValueError):
        PartialColoring.from_dict({"n": 9, "k": 3, "edges": [{"u": 0, "v": 5, "color": 1}]})


def test_simple_graph_rules():
    with pytest.raises(ValueError):
        SimpleGraph([(0, 0)])
    with pytest.raises(ValueError):
        SimpleGraph([(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        SimpleGraph.cycle(2)


def test_palette_distinct():
    with pytest.raises(ValueError):
        Palette3(0, 0, 1)
    assert tuple(Palette3(2, 0, 1)) == (2, 0, 1)


partials = st.dictionaries(st.integers(0, len(G.edges) - 1), st.integers(0, 4), max_size=20)


@given(partials, partials)
def test_merge_agrees_with_union(a, b):
    ca, cb = PartialColoring(G, a), PartialColoring(G, b)
    clash = any(a[e] != b[e] for e in a.keys() & b.keys())
    if clash:
        with pytest.raises(ColoringConflict):
            merge(ca, cb)
        return
    out = merge(ca, cb)
    assert out.as_dict() == {**a, **b}
    # inputs untouched, and the operation is symmetric
    assert ca.as_dict() == a
    assert merge(cb, ca).as_dict() == out.as_dict()


@given(partials)
def test_merge_identity(a):
    ca = PartialColoring(G, a)
    assert merge(ca, PartialColoring(G)).as_dict() == a


def test_merge_needs_same_graph():
    with pytest.raises(ValueError):
        merge(PartialColoring(G), PartialColoring(GPGraph(9, 3)))
