"""Chordal bipartite graphs: Γ-free biadjacency orderings, the quadratic initial ideal as an
edge ideal, its row-wise co-chordal cover, and the resulting regularity upper bound.

A 0/1 matrix is Γ-free when no rows i < j and columns k < l carry the pattern

    [[1, 1],
     [1, 0]]

A bipartite graph is chordal bipartite iff its biadjacency matrix admits a
Γ-free row/column ordering.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Sequence

from .betti import BettiTable
from .errors import CapabilityError, CertificateError, InvariantViolation
from .graph_core import Bipartition, Graph, bipartition, complement, induced_subgraph, is_chordal
from .homology import QQ, FieldSpec, edge_ideal_betti
from .toric import (RegularityBounds, lower_bound_from_certificate, regularity_from_table,
                    search_biclique_certificate, toric_betti_table, toric_ideal_is_zero)

EXHAUSTIVE_SIDE_CAP = 7
FULL_PERMUTATION_CAP = 10**5


class NotChordalBipartite(CertificateError):
    """Raised when no Γ-free ordering exists; ``witness`` names the offending 2x2 pattern."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class BiadjacencyMatrix:
    """Rows are x-side vertices, columns y-side vertices, both in the chosen order.

    ``row_perm[i]`` / ``col_perm[j]`` give the graph vertex index for row i / column j.
    """

    entries: tuple[tuple[int, ...], ...]
    row_perm: tuple[int, ...]
    col_perm: tuple[int, ...]
    row_labels: tuple[str, ...] = ()
    col_labels: tuple[str, ...] = ()

    @property
    def n_rows(self) -> int:
        return len(self.entries)

    @property
    def n_cols(self) -> int:
        return len(self.entries[0]) if self.entries else len(self.col_perm)

    def permuted(self, rows: Sequence[int], cols: Sequence[int]) -> BiadjacencyMatrix:
        return BiadjacencyMatrix(
            tuple(tuple(self.entries[r][c] for c in cols) for r in rows),
            tuple(self.row_perm[r] for r in rows),
            tuple(self.col_perm[c] for c in cols),
            tuple(self.row_labels[r] for r in rows) if self.row_labels else (),
            tuple(self.col_labels[c] for c in cols) if self.col_labels else (),
        )

    def to_json_obj(self) -> dict:
        return {
            "matrix": [list(r) for r in self.entries],
            "row_perm": list(self.row_labels or self.row_perm),
            "col_perm": list(self.col_labels or self.col_perm),
        }


def biadjacency_matrix(g: Graph, rows: Iterable[int] | None = None) -> BiadjacencyMatrix:
    """A_G in the graph's own vertex order; ``rows`` selects the x-side (default: the
    canonical left part)."""
    parts = bipartition(g)
    if parts is None:
        raise ValueError("graph is not bipartite")
    if rows is not None:
        left = frozenset(rows)
        ok = all((u in left) != (v in left) for u, v in g.edges)
        if not ok:
            raise ValueError("the given row set is not one side of a bipartition")
        parts = Bipartition(left, frozenset(range(g.n_vertices)) - left)
    x, y = sorted(parts.left), sorted(parts.right)
    entries = tuple(tuple(int(g.has_edge(u, v)) for v in y) for u in x)
    return BiadjacencyMatrix(entries, tuple(x), tuple(y),
                             tuple(g.vertices[u] for u in x), tuple(g.vertices[v] for v in y))


def find_gamma(entries: Sequence[Sequence[int]]) -> tuple[int, int, int, int] | None:
    """First (i, j, k, l), i < j, k < l, with entries (i,k)=(i,l)=(j,k)=1 and (j,l)=0."""
    n = len(entries)
    m = len(entries[0]) if n else 0
    for i, j in itertools.combinations(range(n), 2):
        ri, rj = entries[i], entries[j]
        for k in range(m):
            if not (ri[k] and rj[k]):
                continue
            for l in range(k + 1, m):
                if ri[l] and not rj[l]:
                    return (i, j, k, l)
    return None


def is_gamma_free(a: BiadjacencyMatrix | Sequence[Sequence[int]]) -> bool:
    entries = a.entries if isinstance(a, BiadjacencyMatrix) else a
    return find_gamma(entries) is None


def _revlex_key(vec: Sequence[int]):
    # sorts so that u comes before v when, at the last coordinate where they differ, u has 0
    return tuple(reversed(vec))


def _sort_to_fixpoint(a: BiadjacencyMatrix, max_iter: int) -> tuple[BiadjacencyMatrix, bool]:
    for _ in range(max_iter):
        rows = sorted(range(a.n_rows), key=lambda r: _revlex_key(a.entries[r]))
        b = a.permuted(rows, range(a.n_cols))
        cols = sorted(range(b.n_cols), key=lambda c: _revlex_key([row[c] for row in b.entries]))
        b = b.permuted(range(b.n_rows), cols)
        if b.entries == a.entries:
            return b, True
        a = b
    return a, False


def _witness(a: BiadjacencyMatrix, quad) -> dict:
    i, j, k, l = quad
    lab_r = a.row_labels or tuple(map(str, a.row_perm))
    lab_c = a.col_labels or tuple(map(str, a.col_perm))
    return {"rows": [lab_r[i], lab_r[j]], "cols": [lab_c[k], lab_c[l]], "submatrix": [[1, 1], [1, 0]]}


def gamma_free_order(g: Graph, rows: Iterable[int] | None = None) -> BiadjacencyMatrix:
    """A Γ-free row/column ordering of A_G, verified by a full quadruple scan.

    The input order is kept when it is already Γ-free.  Otherwise rows and
    columns are re-sorted alternately until both are sorted (a doubly lexical
    ordering), and small matrices fall back to exhaustive search.  Raises
    NotChordalBipartite with a witness when no ordering exists.
    """
    if bipartition(g) is None:
        raise ValueError("gamma_free_order needs a bipartite graph")
    a = biadjacency_matrix(g, rows)
    if is_gamma_free(a):
        return a
    b, converged = _sort_to_fixpoint(a, 2 * (a.n_rows + a.n_cols))
    quad = find_gamma(b.entries)
    if quad is None:
        return b
    if converged:
        # a doubly lexical ordering of a totally balanced matrix is always Γ-free
        raise NotChordalBipartite("graph is not chordal bipartite", _witness(b, quad))
    if a.n_rows > EXHAUSTIVE_SIDE_CAP or a.n_cols > EXHAUSTIVE_SIDE_CAP:
        raise CapabilityError("row/column sorting did not reach a fixpoint and the matrix is too "
                              "large for exhaustive search")
    found = _exhaustive_order(a)
    if found is None:
        raise NotChordalBipartite("graph is not chordal bipartite (exhaustive search)", _witness(b, quad))
    return found


def _exhaustive_order(a: BiadjacencyMatrix) -> BiadjacencyMatrix | None:
    full = factorial(a.n_rows) * factorial(a.n_cols) <= FULL_PERMUTATION_CAP
    for rows in itertools.permutations(range(a.n_rows)):
        if full:
            col_orders = itertools.permutations(range(a.n_cols))
        else:
            b = a.permuted(rows, range(a.n_cols))
            col_orders = [sorted(range(b.n_cols), key=lambda c: _revlex_key([row[c] for row in b.entries]))]
        for cols in col_orders:
            cand = a.permuted(rows, cols)
            if is_gamma_free(cand):
                return cand
    return None


# --- the initial-ideal graph ------------------------------------------------

@dataclass(frozen=True)
class InitialIdealGraph:
    """Vertices: positions (i, j) of ones (1-based).  Edges join the anti-diagonal
    (a, d), (c, b) of every all-ones 2x2 submatrix on rows a < c, columns b < d."""

    matrix: BiadjacencyMatrix
    vertices: tuple[tuple[int, int], ...]
    edges: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    binomials: tuple[tuple[tuple[tuple[int, int], tuple[int, int]], tuple[tuple[int, int], tuple[int, int]]], ...] = ()

    @staticmethod
    def label(pos: tuple[int, int]) -> str:
        return f"e{pos[0]},{pos[1]}"

    def as_graph(self) -> Graph:
        index = {p: k for k, p in enumerate(self.vertices)}
        return Graph(tuple(self.label(p) for p in self.vertices),
                     tuple((index[u], index[v]) for u, v in self.edges))

    def edge_labels(self) -> list[tuple[str, str]]:
        return [(self.label(u), self.label(v)) for u, v in self.edges]


def initial_ideal_graph(a: BiadjacencyMatrix) -> InitialIdealGraph:
    """The graph H whose edge ideal is the initial ideal of I_G for this ordering.

    Also records the Gröbner binomials e_{a,d} e_{c,b} - e_{a,b} e_{c,d}, leading term first.
    """
    quad = find_gamma(a.entries)
    if quad is not None:
        raise ValueError(f"matrix is not Γ-free: pattern at rows/cols {quad}")
    e = a.entries
    verts = tuple((i + 1, j + 1) for i in range(a.n_rows) for j in range(a.n_cols) if e[i][j])
    edges, binoms = [], []
    for r1, r2 in itertools.combinations(range(a.n_rows), 2):
        common = [c for c in range(a.n_cols) if e[r1][c] and e[r2][c]]
        for c1, c2 in itertools.combinations(common, 2):
            ur, ll = (r1 + 1, c2 + 1), (r2 + 1, c1 + 1)
            edges.append((ur, ll))
            binoms.append(((ur, ll), ((r1 + 1, c1 + 1), (r2 + 1, c2 + 1))))
    order = sorted(range(len(edges)), key=lambda k: edges[k])
    return InitialIdealGraph(a, verts, tuple(edges[k] for k in order), tuple(binoms[k] for k in order))


@dataclass(frozen=True)
class CoverPiece:
    row: int
    graph: Graph
    edges: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    complement_peo: tuple[int, ...]


def cochordal_cover(h: InitialIdealGraph, n_rows: int | None = None) -> list[CoverPiece]:
    """Split the edges of H by the row of their upper-right endpoint into H_1..H_{n-1}.

    H_i lives on the vertices in rows >= i.  Each piece's complement is checked
    for chordality; a failure is a bug and raises InvariantViolation.
    """
    n = h.matrix.n_rows if n_rows is None else n_rows
    pieces = []
    for i in range(1, n):
        verts = tuple(p for p in h.vertices if p[0] >= i)
        index = {p: k for k, p in enumerate(verts)}
        mine = tuple(e for e in h.edges if e[0][0] == i)
        gi = Graph(tuple(InitialIdealGraph.label(p) for p in verts),
                   tuple((index[u], index[v]) for u, v in mine))
        res = is_chordal(complement(gi))
        if not res.chordal:
            raise InvariantViolation(
                f"cover piece H_{i} is not co-chordal",
                certificate=[gi.vertices[v] for v in res.certificate])
        pieces.append(CoverPiece(i, gi, mine, res.certificate))
    covered = [e for p in pieces for e in p.edges]
    if sorted(covered) != sorted(h.edges) or len(covered) != len(set(covered)):
        raise InvariantViolation("cover pieces do not partition the edges of H")
    return pieces


# --- the bound --------------------------------------------------------------

def prune_leaves(g: Graph) -> frozenset[int]:
    """Vertices left after repeatedly deleting vertices of degree at most one."""
    alive = set(range(g.n_vertices))
    deg = {v: g.degree(v) for v in alive}
    stack = [v for v in alive if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u in g.neighbors[v]:
            if u in alive:
                deg[u] -= 1
                if deg[u] <= 1:
                    stack.append(u)
    return frozenset(alive)


@dataclass
class UpperBound:
    status: str                       # "ok" or "zero_ideal"
    upper: int | None
    single_pass_bound: int            # min(n - r, m - s) as stated
    pruned_bound: int | None          # min side size after pruning leaves to a fixpoint
    cover_bound: int | None           # number of nonempty cover pieces + 1
    matrix: BiadjacencyMatrix | None = None
    h: InitialIdealGraph | None = None
    cover: list[CoverPiece] = field(default_factory=list)

    def to_json_obj(self) -> dict:
        out = {
            "status": self.status,
            "upper": self.upper,
            "single_pass_bound": self.single_pass_bound,
            "pruned_bound": self.pruned_bound,
            "cover_bound": self.cover_bound,
        }
        if self.matrix is not None:
            out.update(self.matrix.to_json_obj())
            out["h_edges"] = [list(e) for e in self.h.edge_labels()]
            out["cover"] = [{"row": p.row, "edges": [[InitialIdealGraph.label(u), InitialIdealGraph.label(v)]
                                                     for u, v in p.edges]} for p in self.cover]
        return out


def regularity_upper_bound(g: Graph, rows: Iterable[int] | None = None) -> UpperBound:
    """Upper bound min(n - r, m - s) on reg(I_G) for chordal bipartite g, with its certificate.

    r, s count degree-one vertices on the row and column sides.  The certificate
    is the co-chordal cover of H built on the leaf-pruned core, oriented so that
    the smaller side indexes the rows.
    """
    parts = bipartition(g)
    if parts is None:
        raise NotChordalBipartite("graph is not bipartite")
    if rows is not None:
        left = frozenset(rows)
        parts = Bipartition(left, frozenset(range(g.n_vertices)) - left)
    gamma_free_order(g, parts.left)  # raises with a witness when not chordal bipartite
    n, m = len(parts.left), len(parts.right)
    r = sum(1 for v in parts.left if g.degree(v) == 1)
    s = sum(1 for v in parts.right if g.degree(v) == 1)
    single = min(n - r, m - s)
    core = prune_leaves(g)
    if toric_ideal_is_zero(g) or not core:
        return UpperBound("zero_ideal", None, single, None, None)
    core_left = sorted(v for v in core if v in parts.left)
    core_right = sorted(v for v in core if v in parts.right)
    pruned = min(len(core_left), len(core_right))
    sub = induced_subgraph(g, core)
    pos = {v: k for k, v in enumerate(sorted(core))}
    row_side = core_left if len(core_left) <= len(core_right) else core_right
    a = gamma_free_order(sub, [pos[v] for v in row_side])
    a = BiadjacencyMatrix(a.entries, tuple(sorted(core)[k] for k in a.row_perm),
                          tuple(sorted(core)[k] for k in a.col_perm), a.row_labels, a.col_labels)
    h = initial_ideal_graph(a)
    cover = cochordal_cover(h)
    nonempty = sum(1 for p in cover if p.edges)
    cover_bound = max(nonempty, 1) + 1
    return UpperBound("ok", min(single, pruned, cover_bound), single, pruned, cover_bound, a, h, cover)


def initial_ideal_betti(g: Graph, field: FieldSpec = QQ) -> BettiTable:
    """Betti table of in(I_G) = I(H) for a chordal bipartite graph, by Hochster's formula."""
    a = gamma_free_order(g)
    return edge_ideal_betti(initial_ideal_graph(a).as_graph(), field)


def regularity_bounds(g: Graph, search_cap: int | None = None, table_cap: int | None = None,
                      field: FieldSpec = QQ) -> RegularityBounds:
    """Combine the biclique lower bound, the chordal bipartite upper bound and, when
    ``table_cap`` is given, a toric Betti table truncated at that internal degree."""
    if toric_ideal_is_zero(g):
        return RegularityBounds(status="zero_ideal")
    parts = search_biclique_certificate(g, search_cap)
    lower = lower_bound_from_certificate(g, parts) if parts else None
    lower_cert = [sorted(g.vertices[v] for v in p) for p in parts]
    upper = cert = None
    status = "ok"
    try:
        ub = regularity_upper_bound(g)
        upper, cert = ub.upper, ub.to_json_obj()
    except NotChordalBipartite:
        status = "not_chordal_bipartite"
    table = table_reg = None
    if table_cap is not None:
        table = toric_betti_table(g, table_cap, field)
        table_reg = regularity_from_table(table) if table.entries else None
    exact = None
    if lower is not None and lower == upper:
        exact = lower
    elif table_reg is not None and table_reg == upper:
        exact = upper
    return RegularityBounds(lower, lower_cert, upper, cert, exact, status, table, table_reg)
