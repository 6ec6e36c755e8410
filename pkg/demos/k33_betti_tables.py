"""
Fibres and Betti numbers of K_{3,3}
===================================

The toric ideal of K_{3,3} is generated by the 2x2 minors of a generic 3x3
matrix.  Its Betti numbers can be read off from simplicial complexes built
from fibres of the monomial map.
"""

from toricreg.fibre import enumerate_fibre, gamma_complex
from toricreg.graph_core import complete_bipartite
from toricreg.homology import hochster_betti, reduced_homology_dims
from toricreg.toric import regularity_from_table, toric_betti_table

g = complete_bipartite(3, 3)
print(g.n_vertices, "vertices,", g.n_edges, "edges")

# %%
# Edge monomials mapping to alpha = (x1 x2 x3 y1 y2 y3)^2 are 3x3 matrices
# with all row and column sums equal to 2.
alpha = (2,) * 6
fibre = enumerate_fibre(g, alpha)
print("fibre size:", len(fibre))

# %%
# The supports of those matrices generate the fibre complex.
gamma = gamma_complex(g, alpha)
print("facets:", len(gamma.facet_masks), " dimension:", gamma.dim)
print("reduced homology:", reduced_homology_dims(gamma))

# %%
# Its Stanley-Reisner ideal is generated by the row and column products.
print(hochster_betti(gamma))

# %%
# The toric ideal itself, truncated at internal degree 6.  The entry in
# position (i, j) = (3, 6) comes from the homology of the same fibre.
table = toric_betti_table(g, 6)
print(table)
print("regularity through the cutoff:", regularity_from_table(table))
