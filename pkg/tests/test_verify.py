from hypothesis import given, settings, strategies as st

from gpstar import Defect, GPGraph, PartialColoring, SimpleGraph, is_star, verify_star
from gpstar.verify import star_index
from oracles import four_trails, gp_edges, is_star_brute


def test_bicolored_c4():
    g = SimpleGraph.cycle(4)
    viol = verify_star(g, PartialColoring(g, {0: 0, 1: 1, 2: 0, 3: 1}))
    assert [v.kind for v in viol] == [Defect.BICOLORED_C4]


def test_bicolored_p4():
    g = SimpleGraph.path(4)
    viol = verify_star(g, PartialColoring(g, {0: 0, 1: 1, 2: 0, 3: 1}))
    assert [v.kind for v in viol] == [Defect.BICOLORED_P4]
    assert viol[0].colors == (0, 1)


def test_three_colored_cycle_is_fine():
    g = SimpleGraph.cycle(6)
    assert is_star(g, PartialColoring(g, dict(enumerate([0, 1, 2, 0, 1, 2]))))


def test_adjacent_equal_and_uncolored():
    g = SimpleGraph.path(3)
    col = PartialColoring(g, {0: 1, 1: 1})
    kinds = sorted(v.kind.value for v in verify_star(g, col, require_total=True))
    assert kinds == ["AdjacentEqual", "Uncolored"]
    assert verify_star(g, col)[0].kind is Defect.ADJACENT_EQUAL


def test_partial_windows_ignored():
    g = SimpleGraph.path(4)
    assert not verify_star(g, PartialColoring(g, {0: 0, 1: 1, 2: 0}))


def test_violation_dict():
    g = SimpleGraph.path(4)
    (v,) = verify_star(g, PartialColoring(g, {0: 0, 1: 1, 2: 0, 3: 1}))
    assert v.to_dict(g) == {"kind": "BicoloredP4", "witness": [[0, 1], [1, 2], [2, 3], [3, 4]], "colors": [0, 1]}


def test_walk_index_matches_trail_enumeration():
    for n, k in [(5, 2), (8, 3), (9, 3), (12, 5), (6, 3)]:
        g = GPGraph(n, k)
        idx = star_index(g)
        pairs = gp_edges(n, k)
        ids = [g.eid(u, v) for u, v in pairs]
        trails = {tuple(sorted(ids[e] for e in w)) for w in four_trails(pairs)}
        mine = {tuple(sorted(w)) for w in idx.paths + idx.cycles}
        assert mine == trails


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([(5, 2), (6, 1), (7, 3), (8, 3), (6, 3)]), st.data())
def test_agrees_with_brute_force(p, data):
    n, k = p
    g = GPGraph(n, k)
    pairs = gp_edges(n, k)
    ids = [g.eid(u, v) for u, v in pairs]
    colors = data.draw(st.lists(st.integers(0, 4), min_size=len(pairs), max_size=len(pairs)))
    col = PartialColoring(g, {ids[x]: c for x, c in enumerate(colors)})
    assert is_star(g, col) == is_star_brute(pairs, colors)
