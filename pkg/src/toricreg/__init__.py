"""Betti numbers and Castelnuovo-Mumford regularity of toric ideals of graphs."""

from .betti import BettiTable, dominates
from .chordal_bipartite import (cochordal_cover, gamma_free_order, initial_ideal_betti, initial_ideal_graph,
                                is_gamma_free, regularity_bounds, regularity_upper_bound)
from .errors import (CapabilityError, CertificateError, InvariantViolation, ParseError, PartialResultError,
                     ToricRegError, ZeroIdealError)
from .fibre import apply_pi, enumerate_fibre, gamma_complex, iter_fibre
from .graph_core import (Graph, complete_bipartite, is_chordal, is_chordal_bipartite, parse_edge_list)
from .homology import QQ, FieldSpec, SimplicialComplex, hochster_betti, reduced_homology_dims
from .k2d import k2d_closed_formula, k2d_report, linear_strand_betti
from .knn import KnnInstance, verify_nonvanishing, verify_taylor
from .toric import (lower_bound_from_certificate, regularity_from_table, search_biclique_certificate,
                    toric_betti_table, toric_multigraded_betti)

__version__ = "0.1.0"
