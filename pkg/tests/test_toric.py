import random
from itertools import combinations_with_replacement
from math import comb

import pytest
from hypothesis import given, strategies as st

from oracles import graphs
from toricreg.betti import BettiTable
from toricreg.errors import CertificateError, PartialResultError, ZeroIdealError
from toricreg.fibre import apply_pi
from toricreg.graph_core import complete_bipartite, cycle_graph, disjoint_union, parse_edge_list, path_graph
from toricreg.homology import FieldSpec
from toricreg.toric import (_degree_entries, candidate_multidegrees, induced_balanced_bicliques,
                            initial_ideal_betti_dominance, lower_bound_from_certificate, regularity_from_table,
                            search_biclique_certificate, toric_betti_multigraded, toric_betti_table,
                            toric_ideal_is_zero, toric_multigraded_betti)

K33 = {(0, 2): 9, (1, 3): 16, (2, 4): 9, (3, 6): 1}


def test_zero_ideal_detection():
    assert toric_ideal_is_zero(path_graph(5))
    assert toric_ideal_is_zero(cycle_graph(5))        # one odd cycle: the map is injective
    assert not toric_ideal_is_zero(cycle_graph(4))
    assert not toric_ideal_is_zero(cycle_graph(6))
    bowtie = parse_edge_list("a b\nb c\nc a\nc d\nd e\ne c\n")
    assert not toric_ideal_is_zero(bowtie)             # two odd cycles through a vertex
    two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3))
    assert toric_ideal_is_zero(two_triangles)          # odd cycles in different components


def test_small_tables():
    assert toric_betti_table(complete_bipartite(2, 2), 4) == {(0, 2): 1}
    # 2x2 minors of a 2x3 matrix: three quadrics, two linear syzygies
    assert toric_betti_table(complete_bipartite(2, 3), 5) == {(0, 2): 3, (1, 3): 2}
    assert toric_betti_table(complete_bipartite(3, 3), 6) == K33


def test_even_cycle_is_principal():
    # I_{C_{2k}} is generated by one binomial of degree k
    for k in (2, 3, 4):
        assert toric_betti_table(cycle_graph(2 * k), k + 1) == {(0, k): 1}


def test_bowtie_is_principal_of_degree_three():
    bowtie = parse_edge_list("a b\nb c\nc a\nc d\nd e\ne c\n")
    assert toric_betti_table(bowtie, 4) == {(0, 3): 1}


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4)])
def test_quadric_count_of_complete_bipartite(n, m):
    t = toric_betti_table(complete_bipartite(n, m), 2)
    assert t[(0, 2)] == comb(n, 2) * comb(m, 2)


def test_zero_ideal_table():
    t = toric_betti_table(path_graph(4), 4)
    assert t.zero_ideal and not t.entries
    with pytest.raises(ZeroIdealError):
        regularity_from_table(t)


def test_regularity_from_table():
    assert regularity_from_table(BettiTable(K33)) == 3
    with pytest.raises(ZeroIdealError):
        regularity_from_table(BettiTable({}, truncated_at=3))


def test_multigraded_witnesses_are_rechecked_directly():
    g = complete_bipartite(3, 3)
    mg = toric_multigraded_betti(g, 6)
    assert mg.witnesses(3, 6) == [(2,) * 6]
    rnd = random.Random(11)
    for (i, alpha), v in rnd.sample(sorted(mg.entries.items()), 3):
        assert toric_betti_multigraded(g, alpha)[i] == v


def test_candidate_multidegrees_cover_the_image():
    g = complete_bipartite(2, 3)
    cands = set(candidate_multidegrees(g, 3))
    for combo in combinations_with_replacement(range(g.n_edges), 3):
        w = [0] * g.n_edges
        for k in combo:
            w[k] += 1
        assert apply_pi(g, w) in cands


@pytest.mark.parametrize("j", [2, 3, 4])
def test_bulk_and_per_alpha_routes_agree(j):
    g = complete_bipartite(3, 3)
    bulk = _degree_entries(g, j, FieldSpec(), cap=10**6)
    # a cap below the monomial count forces the one-alpha-at-a-time route
    per_alpha = _degree_entries(g, j, FieldSpec(), cap=comb(g.n_edges + j - 1, j) - 1)
    assert bulk == per_alpha


def test_worker_count_does_not_change_the_result():
    g = complete_bipartite(3, 3)
    serial = toric_multigraded_betti(g, 5)
    parallel = toric_multigraded_betti(g, 5, workers=2)
    assert serial.entries == parallel.entries
    assert list(serial.entries) == list(parallel.entries)


def test_prime_field_agrees_on_k33():
    assert toric_betti_table(complete_bipartite(3, 3), 6, FieldSpec(32003)) == K33


def test_partial_result_keeps_finished_degrees():
    g = complete_bipartite(3, 3)
    with pytest.raises(PartialResultError) as info:
        toric_betti_table(g, 6, cap=20)
    done = info.value.completed
    assert done.truncated_at < 6
    assert done == BettiTable(K33).restricted(done.truncated_at)


def test_truncation_argument_checked():
    with pytest.raises(ValueError):
        toric_betti_table(complete_bipartite(2, 2), 0)


# --- biclique certificates ----------------------------------------------------

def test_lower_bound_certificates():
    g = complete_bipartite(3, 3)
    assert lower_bound_from_certificate(g, [range(6)]) == 3
    two = disjoint_union(complete_bipartite(2, 2), complete_bipartite(2, 3))
    assert lower_bound_from_certificate(two, [range(4), [4, 5, 6, 7]]) == 3


@pytest.mark.parametrize("parts", [
    [[0, 1, 3, 4], [1, 2, 4, 5]],        # overlapping
    [[0, 3]],                             # a single edge is K_{1,1}
    [[0, 1, 3, 4, 5]],                    # unbalanced
])
def test_bad_certificates_rejected(parts):
    with pytest.raises(CertificateError):
        lower_bound_from_certificate(complete_bipartite(3, 3), parts)


def test_adjacent_parts_rejected():
    g = complete_bipartite(4, 4)
    with pytest.raises(CertificateError):
        lower_bound_from_certificate(g, [[0, 1, 4, 5], [2, 3, 6, 7]])


def test_non_induced_part_rejected():
    g = parse_edge_list("a c\na d\nb c\nb d\na b\n")   # K_{2,2} plus a chord
    with pytest.raises(CertificateError):
        lower_bound_from_certificate(g, [[0, 1, 2, 3]])


def test_biclique_search():
    assert [sorted(p) for p in search_biclique_certificate(complete_bipartite(3, 3))] == [list(range(6))]
    assert search_biclique_certificate(path_graph(4)) == []
    two = disjoint_union(complete_bipartite(2, 2), complete_bipartite(2, 2))
    parts = search_biclique_certificate(two)
    assert lower_bound_from_certificate(two, parts) == 3
    assert [n for _, n in induced_balanced_bicliques(complete_bipartite(2, 3))] == [2, 2, 2]


@given(graphs(max_vertices=7))
def test_biclique_search_certificates_validate(g):
    parts = search_biclique_certificate(g)
    if parts:
        lower_bound_from_certificate(g, parts)


def test_dominance_check():
    upper = BettiTable({(0, 2): 3, (1, 3): 2})
    assert initial_ideal_betti_dominance(BettiTable({(0, 2): 3}), upper).dominated
    res = initial_ideal_betti_dominance(BettiTable({(0, 2): 4}), upper)
    assert not res.dominated and res.violations == [(0, 2)]


@given(graphs(min_vertices=2, max_vertices=6, max_edges=7), st.randoms(use_true_random=False))
def test_table_invariant_under_relabelling(g, rnd):
    perm = list(range(g.n_vertices))
    rnd.shuffle(perm)
    assert toric_betti_table(g, 4) == toric_betti_table(g.relabel(perm), 4)
