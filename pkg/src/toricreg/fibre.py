"""Edge monomials, the degree map to vertex monomials, fibres and fibre complexes.

Monomials are plain exponent tuples: a vertex monomial has one entry per
vertex of the graph, an edge monomial one entry per edge (in the graph's edge
index order).
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from math import comb
from typing import Iterator, Sequence

from .errors import CapabilityError
from .graph_core import Graph, bipartition
from .homology import SimplicialComplex, join, maximal_masks  # noqa: F401  (join re-exported)

VertexMonomial = tuple[int, ...]
EdgeMonomial = tuple[int, ...]

DEFAULT_FIBRE_CAP = 10**6


def apply_pi(g: Graph, w: Sequence[int]) -> VertexMonomial:
    """Image of an edge monomial: each edge passes its exponent to both endpoints."""
    if len(w) != g.n_edges:
        raise ValueError(f"edge monomial has {len(w)} entries, graph has {g.n_edges} edges")
    alpha = [0] * g.n_vertices
    for (u, v), e in zip(g.edges, w):
        alpha[u] += e
        alpha[v] += e
    return tuple(alpha)


def support_mask(w: Sequence[int]) -> int:
    m = 0
    for k, e in enumerate(w):
        if e:
            m |= 1 << k
    return m


def _fibre_obviously_empty(g: Graph, alpha: Sequence[int]) -> bool:
    if sum(alpha) % 2:
        return True
    parts = bipartition(g)
    if parts is not None:
        # necessary only; per-component imbalance is caught by the search itself
        if sum(alpha[v] for v in parts.left) != sum(alpha[v] for v in parts.right):
            return True
    for v, a in enumerate(alpha):
        if a and not g.neighbors[v]:
            return True
    return False


def iter_fibre(g: Graph, alpha: Sequence[int], cap: int = DEFAULT_FIBRE_CAP) -> Iterator[EdgeMonomial]:
    """Yield every edge monomial w with pi(w) = alpha, in lexicographic order of exponent tuples.

    Backtracking over edges in index order.  After each choice, every vertex
    whose residual degree changed (or whose neighbours' did) must still be
    coverable by its remaining incident edges.
    """
    alpha = tuple(alpha)
    if len(alpha) != g.n_vertices:
        raise ValueError(f"vertex monomial has {len(alpha)} entries, graph has {g.n_vertices} vertices")
    if any(a < 0 for a in alpha):
        raise ValueError("exponents must be nonnegative")
    if _fibre_obviously_empty(g, alpha):
        return
    edges = g.edges
    ne = len(edges)
    # later[v][k] = incident edges of v with index >= k
    later = [[[] for _ in range(ne + 1)] for _ in range(g.n_vertices)]
    for v in range(g.n_vertices):
        inc = g.incident_edges[v]
        for k in range(ne + 1):
            later[v][k] = [e for e in inc if e >= k]
    touched = []
    for (u, v) in edges:
        s = {u, v} | g.neighbors[u] | g.neighbors[v]
        touched.append(tuple(sorted(s)))

    res = list(alpha)
    w = [0] * ne
    count = 0

    def feasible(k, verts):
        # can each vertex's residual still be met by edges k.. ?
        for x in verts:
            need = res[x]
            if not need:
                continue
            avail = 0
            for e in later[x][k]:
                a, b = edges[e]
                avail += min(res[a], res[b])
                if avail >= need:
                    break
            if avail < need:
                return False
        return True

    def rec(k):
        nonlocal count
        if k == ne:
            count += 1
            if count > cap:
                raise CapabilityError(f"fibre has more than {cap} elements")
            yield tuple(w)
            return
        u, v = edges[k]
        top = min(res[u], res[v])
        for x in range(top + 1):
            res[u] -= x
            res[v] -= x
            w[k] = x
            if feasible(k + 1, touched[k]):
                yield from rec(k + 1)
            res[u] += x
            res[v] += x
        w[k] = 0

    if not feasible(0, range(g.n_vertices)):
        return
    yield from rec(0)


def enumerate_fibre(g: Graph, alpha: Sequence[int], cap: int = DEFAULT_FIBRE_CAP) -> list[EdgeMonomial]:
    """All edge monomials mapping to ``alpha``; empty when none exist."""
    return list(iter_fibre(g, alpha, cap))


def fibres_by_degree(g: Graph, j: int, cap: int = DEFAULT_FIBRE_CAP) -> dict[VertexMonomial, set[int]]:
    """Support masks of all degree-``j`` edge monomials, grouped by their image under pi.

    This walks every multiset of ``j`` edges once, so it partitions all fibres
    of total degree ``2j`` in a single pass.
    """
    total = comb(g.n_edges + j - 1, j) if g.n_edges else (1 if j == 0 else 0)
    if total > cap:
        raise CapabilityError(f"{total} edge monomials of degree {j} exceed the cap of {cap}")
    out: dict[VertexMonomial, set[int]] = {}
    n = g.n_vertices
    ends = g.edges
    for combo in combinations_with_replacement(range(g.n_edges), j):
        alpha = [0] * n
        mask = 0
        for k in combo:
            a, b = ends[k]
            alpha[a] += 1
            alpha[b] += 1
            mask |= 1 << k
        key = tuple(alpha)
        bucket = out.get(key)
        if bucket is None:
            out[key] = {mask}
        else:
            bucket.add(mask)
    return out


def gamma_complex(g: Graph, alpha: Sequence[int], cap: int = DEFAULT_FIBRE_CAP) -> SimplicialComplex:
    """Complex on the edge set generated by the supports of the fibre of ``alpha``.

    An empty fibre gives the void complex.
    """
    masks = {support_mask(w) for w in iter_fibre(g, alpha, cap)}
    return SimplicialComplex(g.n_edges, maximal_masks(masks))


def parse_vertex_monomial(g: Graph, text: str) -> VertexMonomial:
    """Parse ``x1^2*y1*y2`` (``*``-separated ``label^exp`` factors, exp defaults to 1).

    ``1`` denotes the empty monomial.  Repeated labels multiply.
    """
    alpha = [0] * g.n_vertices
    text = text.strip()
    if text in ("", "1"):
        return tuple(alpha)
    for factor in text.split("*"):
        factor = factor.strip()
        if not factor:
            raise ValueError(f"empty factor in monomial {text!r}")
        label, _, exp = factor.partition("^")
        try:
            e = int(exp) if exp else 1
        except ValueError:
            raise ValueError(f"bad exponent in factor {factor!r}") from None
        if e < 0:
            raise ValueError(f"negative exponent in factor {factor!r}")
        try:
            v = g.index_of(label)
        except KeyError:
            raise ValueError(f"unknown vertex {label!r} in monomial {text!r}") from None
        alpha[v] += e
    return tuple(alpha)


def format_vertex_monomial(g: Graph, alpha: Sequence[int]) -> str:
    parts = [g.vertices[v] + (f"^{a}" if a > 1 else "") for v, a in enumerate(alpha) if a]
    return "*".join(parts) or "1"
