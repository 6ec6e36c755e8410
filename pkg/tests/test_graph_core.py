import io
import random

import pytest
from hypothesis import given, strategies as st

from oracles import bipartite_graphs, brute_induced_cycles, graphs
from toricreg.errors import CapabilityError, ParseError
from toricreg.graph_core import (Graph, bipartition, chordal_bipartite_4x5, complement, complete_bipartite,
                                 complete_graph, connected_components, cycle_graph, disjoint_union,
                                 empty_graph, find_induced_cycle, induced_subgraph, is_bipartite, is_chordal,
                                 is_chordal_bipartite, is_induced_cycle, is_perfect_elimination_ordering,
                                 parse_edge_list, path_graph)


def test_parse_skips_comments_and_blank_lines():
    g = parse_edge_list("# a square\n\na b\nb c\n  # indented comment\nc d\nd a\n")
    assert g.vertices == ("a", "b", "c", "d")
    assert g.n_edges == 4


def test_parse_isolated_vertex_and_stream():
    g = parse_edge_list(io.StringIO("a b\nz\n"))
    assert g.vertices == ("a", "b", "z")
    assert g.degree(g.index_of("z")) == 0


def test_parse_errors():
    with pytest.raises(ParseError, match="loop at line 2"):
        parse_edge_list("a b\nc c\n")
    with pytest.raises(ParseError):
        parse_edge_list("a b c\n")


def test_parse_collapses_duplicate_edges():
    g = parse_edge_list("a b\nb a\n")
    assert g.n_edges == 1


def _labelled(g):
    return {frozenset((g.vertices[u], g.vertices[v])) for u, v in g.edges}, set(g.vertices)


@given(graphs())
def test_edge_list_round_trip(g):
    assert _labelled(parse_edge_list(g.to_edge_list())) == _labelled(g)


def test_loops_rejected_by_constructor():
    with pytest.raises(ValueError):
        Graph(("a",), ((0, 0),))


def test_complete_bipartite_edge_layout():
    g = complete_bipartite(2, 3)
    assert g.vertices == ("x1", "x2", "y1", "y2", "y3")
    # e_{i,j} sits at (i-1)*m + (j-1)
    assert [g.edge_label(k) for k in range(6)] == ["x1-y1", "x1-y2", "x1-y3", "x2-y1", "x2-y2", "x2-y3"]


def test_index_of_unknown_label():
    with pytest.raises(KeyError):
        complete_bipartite(1, 1).index_of("q")


def test_induced_subgraph_keeps_labels():
    g = cycle_graph(5)
    h = induced_subgraph(g, [4, 0, 1])
    assert h.vertices == ("v1", "v2", "v5")
    assert h.n_edges == 2
    with pytest.raises(ValueError):
        induced_subgraph(g, [7])


def test_components_and_bipartition():
    g = disjoint_union(path_graph(3), cycle_graph(3))
    comps = connected_components(g)
    assert comps == [frozenset({0, 1, 2}), frozenset({3, 4, 5})]
    assert bipartition(g) is None
    parts = bipartition(complete_bipartite(2, 2))
    assert parts.left == frozenset({0, 1})


def test_empty_and_complete_graphs():
    assert empty_graph(3).n_edges == 0
    assert complete_graph(5).n_edges == 10
    assert is_chordal(complete_graph(5)).chordal


def test_cycles_are_not_chordal():
    for k in range(4, 9):
        res = is_chordal(cycle_graph(k))
        assert not res.chordal
        assert is_induced_cycle(cycle_graph(k), res.certificate)


@given(graphs())
def test_complement_is_an_involution(g):
    assert complement(complement(g)) == g
    assert complement(g).n_edges == g.n_vertices * (g.n_vertices - 1) // 2 - g.n_edges


@given(graphs(max_vertices=7))
def test_is_chordal_matches_brute_force(g):
    res = is_chordal(g)
    holes = brute_induced_cycles(g, 4)
    assert res.chordal == (not holes)
    if res.chordal:
        # replay the elimination order step by step
        assert is_perfect_elimination_ordering(g, res.certificate)
    else:
        assert len(res.certificate) >= 4 and is_induced_cycle(g, res.certificate)


@given(graphs(max_vertices=7), st.integers(4, 6))
def test_find_induced_cycle_matches_brute_force(g, k):
    cyc = find_induced_cycle(g, k)
    assert (cyc is None) == (not brute_induced_cycles(g, k))
    if cyc is not None:
        assert len(cyc) >= k and is_induced_cycle(g, cyc)


@given(bipartite_graphs(), st.randoms(use_true_random=False))
def test_chordal_bipartite_invariant_under_relabelling(g, rnd):
    perm = list(range(g.n_vertices))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert is_chordal_bipartite(g).chordal_bipartite == is_chordal_bipartite(h).chordal_bipartite
    assert is_chordal(g).chordal == is_chordal(h).chordal


def test_relabel_moves_labels_with_vertices():
    g = path_graph(3)
    h = g.relabel([2, 0, 1])
    assert h.vertices == ("v2", "v3", "v1")
    assert h.has_edge(h.index_of("v1"), h.index_of("v2"))


def test_chordal_bipartite_recognition():
    assert is_chordal_bipartite(chordal_bipartite_4x5()).chordal_bipartite
    res = is_chordal_bipartite(cycle_graph(6))
    assert not res.chordal_bipartite and len(res.cycle) == 6
    odd = is_chordal_bipartite(cycle_graph(5))
    assert odd.bipartition is None and len(odd.cycle) % 2 == 1
    assert is_chordal_bipartite(cycle_graph(4)).chordal_bipartite


def test_chordal_bipartite_cap():
    with pytest.raises(CapabilityError):
        is_chordal_bipartite(complete_bipartite(9, 9), vertex_cap=16)


def test_is_bipartite():
    assert is_bipartite(complete_bipartite(3, 4))
    assert not is_bipartite(complete_graph(3))
    rnd = random.Random(5)
    for _ in range(20):
        k = rnd.randrange(3, 10)
        assert is_bipartite(cycle_graph(k)) == (k % 2 == 0)
