import pytest
from hypothesis import given, strategies as st

from oracles import brute_fibre, count_contingency_tables, graphs
from toricreg.errors import CapabilityError
from toricreg.fibre import (apply_pi, enumerate_fibre, fibres_by_degree, format_vertex_monomial, gamma_complex,
                            iter_fibre, parse_vertex_monomial, support_mask)
from toricreg.graph_core import complete_bipartite, cycle_graph, empty_graph, path_graph


@st.composite
def graph_and_edge_monomial(draw, max_vertices=5, max_exp=2, max_edges=None):
    g = draw(graphs(min_vertices=2, max_vertices=max_vertices, max_edges=max_edges))
    w = tuple(draw(st.lists(st.integers(0, max_exp), min_size=g.n_edges, max_size=g.n_edges)))
    return g, w


def test_apply_pi_on_k22():
    g = complete_bipartite(2, 2)
    assert apply_pi(g, (1, 0, 0, 1)) == (1, 1, 1, 1)
    with pytest.raises(ValueError):
        apply_pi(g, (1, 0))


@given(graph_and_edge_monomial())
def test_fibre_round_trip(data):
    g, w = data
    alpha = apply_pi(g, w)
    fib = enumerate_fibre(g, alpha)
    assert w in fib
    assert all(apply_pi(g, v) == alpha for v in fib)
    assert fib == sorted(set(fib))


@given(graph_and_edge_monomial(max_vertices=5, max_exp=1, max_edges=6))
def test_fibre_matches_brute_force(data):
    g, w = data
    alpha = apply_pi(g, w)
    assert enumerate_fibre(g, alpha) == brute_fibre(g, alpha)


@given(graphs(min_vertices=1, max_vertices=4, max_edges=5), st.data())
def test_fibre_of_arbitrary_alpha_matches_brute_force(g, data):
    # alpha need not be in the image; the search must then come back empty
    alpha = tuple(data.draw(st.lists(st.integers(0, 2), min_size=g.n_vertices, max_size=g.n_vertices)))
    if g.n_edges > 6:
        return
    assert enumerate_fibre(g, alpha) == brute_fibre(g, alpha)


def test_k33_margins_two():
    g = complete_bipartite(3, 3)
    fib = enumerate_fibre(g, (2,) * 6)
    assert len(fib) == 21 == count_contingency_tables([2, 2, 2], [2, 2, 2])
    gamma = gamma_complex(g, (2,) * 6)
    assert len(gamma.facet_masks) == 15 and gamma.dim == 5


def test_obviously_empty_fibres():
    g = complete_bipartite(2, 2)
    assert enumerate_fibre(g, (1, 0, 0, 0)) == []        # odd degree
    assert enumerate_fibre(g, (1, 1, 0, 0)) == []        # both on the x side
    h = empty_graph(2)
    assert enumerate_fibre(h, (1, 1)) == []               # no edges at all
    assert gamma_complex(g, (1, 1, 0, 0)).is_void


def test_zero_monomial_fibre():
    g = cycle_graph(4)
    assert enumerate_fibre(g, (0,) * 4) == [(0,) * 4]
    assert gamma_complex(g, (0,) * 4).facet_masks == (0,)


def test_odd_cycle_fibres_are_singletons():
    g = cycle_graph(5)
    assert len(enumerate_fibre(g, (2,) * 5)) == 1


def test_fibre_cap():
    g = complete_bipartite(3, 3)
    with pytest.raises(CapabilityError):
        enumerate_fibre(g, (2,) * 6, cap=20)
    with pytest.raises(CapabilityError):
        fibres_by_degree(g, 3, cap=100)


@given(graphs(min_vertices=2, max_vertices=5), st.integers(0, 3))
def test_bulk_grouping_matches_per_alpha_enumeration(g, j):
    groups = fibres_by_degree(g, j)
    for alpha, masks in groups.items():
        assert sum(alpha) == 2 * j
        assert masks == {support_mask(w) for w in iter_fibre(g, alpha)}


def test_vertex_monomial_parsing():
    g = complete_bipartite(2, 2)
    a = parse_vertex_monomial(g, "x1^2*y1*y2*x1^0")
    assert a == (2, 0, 1, 1)
    assert format_vertex_monomial(g, a) == "x1^2*y1*y2"
    assert parse_vertex_monomial(g, "1") == (0, 0, 0, 0)
    assert parse_vertex_monomial(g, "x1*x1") == (2, 0, 0, 0)
    for bad in ("z1", "x1^a", "x1^-1", "x1**y1"):
        with pytest.raises(ValueError):
            parse_vertex_monomial(g, bad)


def test_support_mask():
    assert support_mask((0, 3, 0, 1)) == 0b1010
    assert support_mask(()) == 0


def test_path_fibre():
    g = path_graph(3)
    assert enumerate_fibre(g, (1, 2, 1)) == [(1, 1)]
