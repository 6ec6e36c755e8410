from itertools import combinations

import pytest
from hypothesis import given, strategies as st

import toricreg.chordal_bipartite as cb
from oracles import all_orderings_have_gamma, bipartite_graphs, brute_induced_cycles, has_gamma
from toricreg.betti import dominates
from toricreg.errors import CapabilityError, InvariantViolation
from toricreg.fibre import apply_pi
from toricreg.graph_core import (bipartite_from_matrix, chordal_bipartite_4x5, complement, complete_bipartite,
                                 cycle_graph, is_chordal, path_graph)
from toricreg.toric import toric_betti_table

EXPECTED_H_EDGES = {
    ("e1,2", "e2,1"), ("e1,3", "e2,1"), ("e1,3", "e2,2"), ("e1,3", "e3,2"), ("e1,3", "e4,2"),
    ("e2,3", "e3,2"), ("e2,3", "e4,2"),
    ("e3,3", "e4,2"), ("e3,4", "e4,2"), ("e3,4", "e4,3"), ("e3,5", "e4,2"), ("e3,5", "e4,3"), ("e3,5", "e4,4"),
}


def test_find_gamma():
    assert cb.find_gamma([[1, 1], [1, 0]]) == (0, 1, 0, 1)
    assert cb.find_gamma([[1, 0], [1, 1]]) is None
    assert cb.is_gamma_free([[1, 1, 0], [1, 1, 1]])


def test_c6_every_ordering_contains_the_pattern():
    a = cb.biadjacency_matrix(cycle_graph(6))
    assert all_orderings_have_gamma(a.entries)
    with pytest.raises(cb.NotChordalBipartite) as info:
        cb.gamma_free_order(cycle_graph(6))
    w = info.value.witness
    assert w["submatrix"] == [[1, 1], [1, 0]]
    assert set(w["rows"]) | set(w["cols"]) <= set(cycle_graph(6).vertices)


def test_non_bipartite_rejected():
    with pytest.raises(cb.NotChordalBipartite):
        cb.regularity_upper_bound(cycle_graph(5))


@given(bipartite_graphs(max_side=4))
def test_gamma_free_verifier(g):
    holes = brute_induced_cycles(g, 6)
    try:
        a = cb.gamma_free_order(g)
    except cb.NotChordalBipartite as exc:
        assert holes, "rejected a chordal bipartite graph"
        assert exc.witness is not None
        return
    assert not holes, "accepted a graph with an induced cycle of length >= 6"
    assert not has_gamma(a.entries)
    # the matrix is a row/column permutation of the biadjacency matrix
    for r, u in enumerate(a.row_perm):
        for c, v in enumerate(a.col_perm):
            assert a.entries[r][c] == int(g.has_edge(u, v))


@given(bipartite_graphs(max_side=4))
def test_cover_pieces_are_cochordal_and_partition_h(g):
    try:
        a = cb.gamma_free_order(g)
    except cb.NotChordalBipartite:
        return
    h = cb.initial_ideal_graph(a)
    pieces = cb.cochordal_cover(h)
    assert sorted(e for p in pieces for e in p.edges) == sorted(h.edges)
    for p in pieces:
        assert is_chordal(complement(p.graph)).chordal


@given(bipartite_graphs(max_side=4))
def test_initial_binomials_lie_in_the_toric_ideal(g):
    try:
        a = cb.gamma_free_order(g)
    except cb.NotChordalBipartite:
        return
    h = cb.initial_ideal_graph(a)
    for lead, trail in h.binomials:
        images = []
        for mono in (lead, trail):
            w = [0] * g.n_edges
            for (i, j) in mono:
                w[g.edge_index[tuple(sorted((a.row_perm[i - 1], a.col_perm[j - 1])))]] += 1
            images.append(apply_pi(g, w))
        assert images[0] == images[1]


def test_example_pipeline():
    g = chordal_bipartite_4x5()
    a = cb.gamma_free_order(g)
    assert a.entries == ((1, 1, 1, 0, 0), (1, 1, 1, 0, 0), (0, 1, 1, 1, 1), (0, 1, 1, 1, 1))
    h = cb.initial_ideal_graph(a)
    assert set(h.edge_labels()) == EXPECTED_H_EDGES and len(h.edges) == 13
    cover = cb.cochordal_cover(h)
    assert [len(p.edges) for p in cover] == [5, 2, 6]
    ub = cb.regularity_upper_bound(g)
    assert ub.upper == 4 and ub.cover_bound == 4 and ub.single_pass_bound == 4
    obj = ub.to_json_obj()
    assert obj["row_perm"] == ["x1", "x2", "x3", "x4"] and len(obj["h_edges"]) == 13


def test_example_dominance():
    g = chordal_bipartite_4x5()
    toric = toric_betti_table(g, 8)
    initial = cb.initial_ideal_betti(g)
    assert dominates(initial, toric, max_j=8) == []
    assert toric.regularity() == 4


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)])
def test_complete_bipartite_bounds(n, m):
    rb = cb.regularity_bounds(complete_bipartite(n, m))
    assert rb.lower == rb.upper == rb.exact == min(n, m)


def test_leaves_and_zero_ideal():
    assert cb.regularity_upper_bound(path_graph(5)).status == "zero_ideal"
    # a pendant leaf hanging off K_{2,2} is pruned away
    g = bipartite_from_matrix([[1, 1, 1], [1, 1, 0]])
    assert sorted(cb.prune_leaves(g)) == [0, 1, 2, 3]
    assert cb.regularity_bounds(path_graph(4)).status == "zero_ideal"


def test_not_chordal_bipartite_bounds_have_no_upper():
    rb = cb.regularity_bounds(cycle_graph(8))
    assert rb.status == "not_chordal_bipartite" and rb.upper is None


def test_rows_argument_chooses_the_side():
    g = complete_bipartite(2, 3)
    a = cb.biadjacency_matrix(g, rows=[2, 3, 4])
    assert (a.n_rows, a.n_cols) == (3, 2)
    with pytest.raises(ValueError):
        cb.biadjacency_matrix(g, rows=[0, 2])


def test_exhaustive_fallback_is_capped(monkeypatch):
    # a sort that never converges pushes large inputs to the capped exhaustive search
    monkeypatch.setattr(cb, "_sort_to_fixpoint", lambda a, max_iter: (a, False))
    g = bipartite_from_matrix([[1] * 8] * 8)
    monkeypatch.setattr(cb, "find_gamma", lambda e: (0, 1, 0, 1))
    with pytest.raises(CapabilityError):
        cb.gamma_free_order(g)


def test_broken_cover_is_an_invariant_violation(monkeypatch):
    h = cb.initial_ideal_graph(cb.gamma_free_order(complete_bipartite(3, 3)))
    monkeypatch.setattr(cb, "is_chordal", lambda g: type("R", (), {"chordal": False, "certificate": (0, 1, 2, 3)})())
    with pytest.raises(InvariantViolation):
        cb.cochordal_cover(h)


@given(st.lists(st.lists(st.integers(0, 1), min_size=3, max_size=3), min_size=2, max_size=4))
def test_find_gamma_matches_scan(rows):
    assert (cb.find_gamma(rows) is not None) == has_gamma(rows)


def test_example_has_no_biclique_certificate_above_two():
    # every value-3 certificate needs an induced K_{3,3} or two induced K_{2,2} with no edges between them
    g = chordal_bipartite_4x5()
    xs = [v for v in range(g.n_vertices) if g.vertices[v].startswith("x")]
    ys = [v for v in range(g.n_vertices) if g.vertices[v].startswith("y")]

    def complete(a, b):
        return all(g.has_edge(u, v) for u in a for v in b)

    k33 = [(a, b) for a in combinations(xs, 3) for b in combinations(ys, 3) if complete(a, b)]
    k22 = [(a, b) for a in combinations(xs, 2) for b in combinations(ys, 2) if complete(a, b)]
    assert not k33
    for (a1, b1), (a2, b2) in combinations(k22, 2):
        s1, s2 = set(a1) | set(b1), set(a2) | set(b2)
        if s1 & s2:
            continue
        assert any(g.has_edge(u, v) for u in s1 for v in s2)
    assert cb.regularity_bounds(g).lower == 2
