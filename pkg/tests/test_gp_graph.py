from math import gcd

import pytest
from hypothesis import given, strategies as st

from gpstar import GPGraph, build_gp
from gpstar.gp_graph import Kind, min_shift
from oracles import gp_edges, t_of


@st.composite
def nk(draw, n_max=60):
    n = draw(st.integers(3, n_max))
    k = draw(st.integers(1, n // 2))
    return n, k


def test_parameters_of_gp_10_4():
    g = GPGraph(10, 4)
    assert (g.d, g.t, g.m) == (2, 3, 5)


def test_parameters_of_gp_9_3():
    g = GPGraph(9, 3)
    assert (g.d, g.t, g.ell) == (3, 1, 6)


def test_n_equal_2k_has_degree_two_inner_vertices():
    g = GPGraph(6, 3)
    assert len(g.vertices) == 12
    assert len(g.edges) == 15
    assert all(len(g.adjacency[g.n + j]) == 2 for j in range(6))


@pytest.mark.parametrize("n,k", [(5, 3), (1, 1), (2, 1), (8, 0), (8, -1)])
def test_rejects_bad_parameters(n, k):
    with pytest.raises(ValueError):
        GPGraph(n, k)


def test_rejects_non_integers():
    with pytest.raises(TypeError):
        GPGraph(9.0, 3)


@pytest.mark.parametrize(
    "n,k,i,r,expect",
    [(9, 3, 1, 0, (9, 0)), (9, 3, 1, 2, (15, 6)), (10, 4, 2, 1, (15, 5))],
)
def test_double_index(n, k, i, r, expect):
    assert GPGraph(n, k).double_index(i, r) == expect


def test_double_index_range_checked():
    g = GPGraph(9, 3)
    with pytest.raises(IndexError):
        g.double_index(0, 0)
    with pytest.raises(IndexError):
        g.double_index(1, 3)


@pytest.mark.parametrize(
    "n,k,r,conn,a,b",
    [
        (9, 3, 1, (2, 3), (1, 1), (3, 0)),
        (10, 4, 0, (0, 9), (1, 0), (2, 2)),
        (12, 3, 2, (5, 6), (1, 2), (3, 1)),
    ],
)
def test_connector_for_spoke_pair(n, k, r, conn, a, b):
    g = GPGraph(n, k)
    e, sa, sb = g.connector_for_spoke_pair(r)
    assert g.edges[e].endpoints == conn
    assert sa == g.spoke(*a) and sb == g.spoke(*b)
    # both spokes touch an end of the connector
    ends = set(g.edges[e].endpoints)
    assert set(g.edges[sa].endpoints) & ends and set(g.edges[sb].endpoints) & ends


def test_connector_needs_d_at_least_two():
    with pytest.raises(ValueError):
        GPGraph(9, 2).connector_for_spoke_pair(0)


@given(nk())
def test_edge_set_matches_definition(p):
    n, k = p
    g = build_gp(n, k)
    assert sorted(e.endpoints for e in g.edges) == gp_edges(n, k)


@given(nk())
def test_degrees(p):
    n, k = p
    g = GPGraph(n, k)
    inner = 2 if n == 2 * k else 3
    assert all(len(g.adjacency[j]) == 3 for j in range(n))
    assert all(len(g.adjacency[n + j]) == inner for j in range(n))
    assert len(g.edges) == (2 * n + n // 2 if n == 2 * k else 3 * n)


@given(nk())
def test_shift_and_ell(p):
    n, k = p
    g = GPGraph(n, k)
    assert g.d == gcd(n, k) and g.m == n // g.d
    assert g.t == t_of(n, k) == min_shift(n, k)
    assert g.ell == k * (g.m - 1) % n


@given(nk())
def test_spoke_ends_distances(p):
    n, k = p
    g = GPGraph(n, k)

    def dist(a, b):
        x = (a - b) % n
        return min(x, n - x)

    for i in range(1, g.d + 1):
        for r in range(g.m):
            here = g.outer_of(i, r)
            assert dist(here, g.outer_of(i, (r + 1) % g.m)) == k
            assert dist(here, g.outer_of(i, (r + g.t) % g.m)) == g.d
            assert g.locate(here) == (i, r)


@given(nk())
def test_inner_cycles_partition_inner_edges(p):
    n, k = p
    g = GPGraph(n, k)
    seen = []
    verts = []
    for i in range(1, g.d + 1):
        cyc = g.inner_cycle(i)
        assert len(cyc) == (1 if g.m == 2 else g.m)
        seen += cyc
        verts.append({x for e in cyc for x in g.edges[e].endpoints})
    inner = [e for e, edge in enumerate(g.edges) if edge.kind is Kind.INNER]
    assert sorted(seen) == sorted(inner)
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            assert not verts[a] & verts[b]


@given(nk())
def test_outer_cycle_and_spokes(p):
    n, k = p
    g = GPGraph(n, k)
    assert [g.edges[e].endpoints for e in g.outer_cycle[:-1]] == [(j, j + 1) for j in range(n - 1)]
    assert len(g.spokes) == n
    assert {g.spoke(i, r) for i in range(1, g.d + 1) for r in range(g.m)} == set(g.spokes)


def test_deterministic_edge_order():
    assert GPGraph(20, 6).edges == GPGraph(20, 6).edges


def test_eid_unknown_edge():
    with pytest.raises(KeyError):
        GPGraph(9, 3).eid(0, 5)
