import pytest

from toricreg.errors import CapabilityError
from toricreg.graph_core import complete_graph, path_graph
from toricreg.homology import edge_ideal_betti
from toricreg.k2d import (CORRECTED, VERBATIM, K2dInstance, k2d_closed_formula, k2d_report, k2d_subset_count,
                          linear_strand_betti)


def test_h_shape():
    h = K2dInstance(4).h
    assert h.vertices == ("e2", "e3", "e4", "f1", "f2", "f3")
    assert h.n_edges == 6
    assert h.has_edge(h.index_of("e4"), h.index_of("f3"))
    assert not h.has_edge(h.index_of("e2"), h.index_of("f2"))


@pytest.mark.parametrize("d", range(2, 8))
def test_report_rows_agree(d):
    rep = k2d_report(d)
    assert rep.passed and rep.linear
    assert rep.rows[0].strand == d * (d - 1) // 2


def test_verbatim_discrepancy_is_reported():
    rep = k2d_report(3)
    row = rep.rows[0]
    assert (row.verbatim, row.strand) == (2, 3)
    assert 0 in rep.verbatim_disagreements
    assert rep.to_json_obj()["verbatim_disagreements"] == rep.verbatim_disagreements


@pytest.mark.parametrize("d", range(2, 11))
def test_corrected_formula_matches_subset_count(d):
    for i in range(0, 2 * d - 3):
        assert k2d_closed_formula(d, i, CORRECTED) == k2d_subset_count(d, i)


def test_strand_sum_against_hochster_on_other_graphs():
    for g in (path_graph(5), complete_graph(4)):
        t = edge_ideal_betti(g)
        for i in range(g.n_vertices - 1):
            assert linear_strand_betti(g, i) == t[(i, i + 2)]


def test_argument_checks():
    with pytest.raises(ValueError):
        k2d_closed_formula(3, 0, "other")
    with pytest.raises(ValueError):
        K2dInstance(1)
    with pytest.raises(CapabilityError):
        k2d_report(11)
    with pytest.raises(CapabilityError):
        linear_strand_betti(complete_graph(6), 0, cap=5)
    assert k2d_closed_formula(3, 0, VERBATIM) == 2


def test_hochster_skipped_beyond_cap():
    rep = k2d_report(8, hochster_cap=7)
    assert rep.linear is None and all(r.hochster is None for r in rep.rows)
    assert rep.passed
