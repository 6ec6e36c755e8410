"""Betti numbers of toric ideals of graphs via the homology of fibre complexes.

For a vertex monomial alpha, the multigraded Betti number beta_{i,alpha}(I_G)
is the dimension of the i-th reduced homology of the fibre complex of alpha.
Graded numbers beta_{i,j} collect all alpha of total degree 2j.  There is no
general a priori degree bound, so tables are computed up to a caller-chosen
internal degree and carry that cutoff with them.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, NamedTuple, Sequence

from .betti import BettiTable, dominates
from .errors import CapabilityError, CertificateError, PartialResultError, ZeroIdealError
from .fibre import DEFAULT_FIBRE_CAP, VertexMonomial, fibres_by_degree, gamma_complex, iter_fibre, support_mask
from .graph_core import Graph, bipartition, connected_components, induced_subgraph
from .homology import QQ, FieldSpec, homology_vanishes, maximal_masks, reduced_homology_masks

# above this many degree-j edge monomials, fibres are enumerated one alpha at a time
BULK_MONOMIAL_CAP = 3 * 10**6


def toric_ideal_is_zero(g: Graph) -> bool:
    """I_G = 0 iff no component has an even closed walk: each is a tree or has one odd cycle."""
    for comp in connected_components(g):
        h = induced_subgraph(g, comp)
        cyclomatic = h.n_edges - h.n_vertices + 1
        if cyclomatic >= 2 or (cyclomatic == 1 and bipartition(h) is not None):
            return False
    return True


def _betti_from_masks(masks: Iterable[int], field: FieldSpec) -> dict[int, int]:
    facets = maximal_masks(masks)
    if len(facets) < 2 or homology_vanishes(facets):
        return {}
    return {d: h for d, h in reduced_homology_masks(facets, field).items() if h and d >= 0}


def toric_betti_multigraded(g: Graph, alpha: Sequence[int], field: FieldSpec = QQ,
                            cap: int = DEFAULT_FIBRE_CAP) -> list[int]:
    """``[beta_{0,alpha}, beta_{1,alpha}, ...]`` up to the dimension of the fibre complex."""
    if sum(alpha) % 2:
        return []
    c = gamma_complex(g, alpha, cap)
    if c.is_void:
        return []
    dims = reduced_homology_masks(c.facet_masks, field)
    return [dims.get(i, 0) for i in range(c.dim + 1)]


# --- enumerating candidate multidegrees -------------------------------------

def _compositions(total: int, parts: int, bounds: Sequence[int]):
    if parts == 0:
        if total == 0:
            yield ()
        return
    first = bounds[0]
    for a in range(min(total, first) + 1):
        for rest in _compositions(total - a, parts - 1, bounds[1:]):
            yield (a,) + rest


def candidate_multidegrees(g: Graph, j: int) -> Iterable[VertexMonomial]:
    """Vertex monomials of total degree 2j that pass cheap realizability checks.

    Bipartite graphs: j on each side.  Every vertex exponent is at most j and
    at most the sum of its neighbours' exponents.
    """
    n = g.n_vertices
    parts = bipartition(g)
    bounds = [j if g.neighbors[v] else 0 for v in range(n)]
    if parts is not None:
        left, right = sorted(parts.left), sorted(parts.right)
        gen = (
            (a, b)
            for a in _compositions(j, len(left), [bounds[v] for v in left])
            for b in _compositions(j, len(right), [bounds[v] for v in right])
        )

        def assemble(ab):
            alpha = [0] * n
            for v, x in zip(left, ab[0]):
                alpha[v] = x
            for v, x in zip(right, ab[1]):
                alpha[v] = x
            return tuple(alpha)

        candidates = map(assemble, gen)
    else:
        candidates = _compositions(2 * j, n, bounds)
    for alpha in candidates:
        if all(alpha[v] <= sum(alpha[u] for u in g.neighbors[v]) for v in range(n) if alpha[v]):
            yield alpha


# --- tables -----------------------------------------------------------------

def _degree_entries(g: Graph, j: int, field: FieldSpec, cap: int) -> dict[tuple[int, VertexMonomial], int]:
    out = {}
    if comb(g.n_edges + j - 1, j) <= min(cap, BULK_MONOMIAL_CAP):
        groups = fibres_by_degree(g, j, cap).items()
    else:
        groups = ((a, {support_mask(w) for w in iter_fibre(g, a, cap)}) for a in candidate_multidegrees(g, j))
    for alpha, masks in groups:
        if len(masks) < 2:
            continue
        for i, h in _betti_from_masks(masks, field).items():
            out[(i, alpha)] = h
    return out


def _degree_worker(args):
    g, j, field, cap = args
    return j, _degree_entries(g, j, field, cap)


@dataclass(frozen=True)
class MultigradedBetti:
    """Nonzero ``beta_{i,alpha}(I_G)`` for all alpha of total degree at most ``2 * truncated_at``."""

    graph: Graph
    entries: dict[tuple[int, VertexMonomial], int]
    truncated_at: int
    zero_ideal: bool = False

    def graded(self) -> BettiTable:
        table: dict[tuple[int, int], int] = {}
        for (i, alpha), v in self.entries.items():
            key = (i, sum(alpha) // 2)
            table[key] = table.get(key, 0) + v
        return BettiTable(table, truncated_at=self.truncated_at, zero_ideal=self.zero_ideal)

    def witnesses(self, i: int, j: int) -> list[VertexMonomial]:
        return sorted(a for (k, a) in self.entries if k == i and sum(a) == 2 * j)


def toric_multigraded_betti(g: Graph, max_internal_degree: int, field: FieldSpec = QQ,
                            cap: int = DEFAULT_FIBRE_CAP, workers: int = 1) -> MultigradedBetti:
    """All nonzero multigraded Betti numbers of I_G in internal degrees j <= max_internal_degree.

    Degrees are processed independently (optionally in worker processes) and
    merged in increasing order, so the result does not depend on ``workers``.
    """
    if max_internal_degree < 1:
        raise ValueError("max_internal_degree must be at least 1")
    zero = toric_ideal_is_zero(g)
    entries: dict[tuple[int, VertexMonomial], int] = {}
    if zero:
        return MultigradedBetti(g, entries, max_internal_degree, zero_ideal=True)
    degrees = list(range(2, max_internal_degree + 1))  # I_G has no generators of degree 1
    done = []
    try:
        if workers > 1 and len(degrees) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = dict(pool.map(_degree_worker, [(g, j, field, cap) for j in degrees]))
            for j in degrees:
                entries.update(results[j])
                done.append(j)
        else:
            for j in degrees:
                entries.update(_degree_entries(g, j, field, cap))
                done.append(j)
    except CapabilityError as exc:
        completed = MultigradedBetti(g, dict(sorted(entries.items())), done[-1] if done else 1).graded()
        raise PartialResultError(
            f"{exc}; completed internal degrees: {[1] + done}", completed=completed) from exc
    return MultigradedBetti(g, dict(sorted(entries.items(), key=lambda kv: (sum(kv[0][1]), kv[0]))),
                            max_internal_degree)


def toric_betti_table(g: Graph, max_internal_degree: int, field: FieldSpec = QQ,
                      cap: int = DEFAULT_FIBRE_CAP, workers: int = 1) -> BettiTable:
    """Graded Betti table of I_G truncated at internal degree ``max_internal_degree``."""
    return toric_multigraded_betti(g, max_internal_degree, field, cap, workers).graded()


def regularity_from_table(t: BettiTable) -> int:
    """max(j - i) over the nonzero entries.  Raises ZeroIdealError on an empty table."""
    if not t.entries:
        if t.zero_ideal:
            raise ZeroIdealError("the toric ideal is zero; regularity is undefined")
        if t.truncated_at is not None:
            raise ZeroIdealError(f"no nonzero Betti numbers with j <= {t.truncated_at}")
    return t.regularity()


# --- lower bounds from induced balanced bicliques ---------------------------

def _balanced_biclique_size(g: Graph, part: frozenset[int]) -> int:
    h = induced_subgraph(g, part)
    sides = bipartition(h)
    if sides is None or len(connected_components(h)) != 1:
        raise CertificateError(f"part {sorted(g.vertices[v] for v in part)} does not induce a connected bipartite graph")
    a, b = len(sides.left), len(sides.right)
    if h.n_edges != a * b:
        raise CertificateError(f"part {sorted(g.vertices[v] for v in part)} is not complete bipartite")
    if a != b:
        raise CertificateError(f"part {sorted(g.vertices[v] for v in part)} induces K_{a},{b}, which is unbalanced")
    if a < 2:
        raise CertificateError(f"part {sorted(g.vertices[v] for v in part)} induces K_1,1; need n >= 2")
    return a


def lower_bound_from_certificate(g: Graph, parts: Sequence[Iterable[int]]) -> int:
    """Verified bound sum(n_i) - (t - 1) from disjoint induced K_{n_i,n_i} with no edges between them."""
    sets = [frozenset(p) for p in parts]
    if not sets:
        raise CertificateError("empty certificate")
    for a, b in itertools.combinations(range(len(sets)), 2):
        if sets[a] & sets[b]:
            raise CertificateError(f"parts {a} and {b} are not disjoint")
        for u in sets[a]:
            if g.neighbors[u] & sets[b]:
                raise CertificateError(f"parts {a} and {b} are joined by an edge; the union is not induced as a disjoint union")
    sizes = [_balanced_biclique_size(g, s) for s in sets]
    return sum(sizes) - (len(sizes) - 1)


def induced_balanced_bicliques(g: Graph, max_vertices: int | None = None) -> list[tuple[frozenset[int], int]]:
    """Every induced K_{n,n} with n >= 2, as (vertex set, n), in a deterministic order."""
    n_cap = g.n_vertices // 2 if max_vertices is None else max_vertices // 2
    adj = g.neighbors
    found = {}

    def independent(s):
        return all(v not in adj[u] for u, v in itertools.combinations(s, 2))

    for n in range(2, n_cap + 1):
        for a in itertools.combinations(range(g.n_vertices), n):
            if not independent(a):
                continue
            common = set.intersection(*(set(adj[v]) for v in a))
            common = sorted(v for v in common if v > a[0])
            for b in itertools.combinations(common, n):
                if independent(b):
                    s = frozenset(a) | frozenset(b)
                    found.setdefault(s, n)
    return sorted(found.items(), key=lambda kv: (-kv[1], sorted(kv[0])))


def search_biclique_certificate(g: Graph, size_cap: int | None = None) -> list[frozenset[int]]:
    """Family of disjoint, mutually non-adjacent induced balanced bicliques maximizing
    sum(n_i) - (t - 1), using at most ``size_cap`` vertices in total.  Empty if none exists.

    Ties go to the family with fewer parts, then to the first one found.
    """
    cap = g.n_vertices if size_cap is None else size_cap
    cands = induced_balanced_bicliques(g, cap)
    closed = []
    for s, _ in cands:
        nb = set(s)
        for v in s:
            nb |= g.neighbors[v]
        closed.append(frozenset(nb))

    best_value, best = 0, []

    def rec(start, chosen, blocked, value, size):
        nonlocal best_value, best
        if chosen and (value > best_value or (value == best_value and len(chosen) < len(best))):
            best_value, best = value, list(chosen)
        for k in range(start, len(cands)):
            s, n = cands[k]
            if size + 2 * n > cap or s & blocked:
                continue
            chosen.append(k)
            rec(k + 1, chosen, blocked | closed[k], value + n - 1, size + 2 * n)
            chosen.pop()

    rec(0, [], frozenset(), 1, 0)
    return [cands[k][0] for k in best]


# --- comparison with an initial ideal ---------------------------------------

class DominanceResult(NamedTuple):
    dominated: bool
    violations: list[tuple[int, int]]


def initial_ideal_betti_dominance(toric: BettiTable, monomial: BettiTable) -> DominanceResult:
    """Check beta_{i,j}(I) <= beta_{i,j}(in(I)) on the degree range both tables cover."""
    a, b = toric.truncated_at, monomial.truncated_at
    if a is not None and b is not None and a != b:
        raise ValueError(f"tables are truncated at different degrees ({a} vs {b})")
    shared = a if a is not None else b
    bad = dominates(monomial, toric, shared)
    return DominanceResult(not bad, bad)


@dataclass
class RegularityBounds:
    lower: int | None = None
    lower_certificate: list[list[str]] = field(default_factory=list)
    upper: int | None = None
    upper_certificate: dict | None = None
    exact: int | None = None
    status: str = "ok"
    table: BettiTable | None = None
    table_regularity: int | None = None

    def __post_init__(self):
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            raise CertificateError(f"lower bound {self.lower} exceeds upper bound {self.upper}")
