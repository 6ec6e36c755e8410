"""Finite simple graphs and the graph predicates the rest of the package relies on.

Vertices are identified by position; labels are only for display and
round-tripping.  Edges are stored as sorted pairs ``(u, v)`` with ``u < v`` in
lexicographic order, and an edge's *index* is its position in that order.  For
``complete_bipartite(n, m)`` this makes edge ``e_{i,j}`` land at index
``(i - 1) * m + (j - 1)``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence, TextIO

from .errors import CapabilityError, ParseError

DEFAULT_CYCLE_SEARCH_CAP = 16


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise ValueError("vertex labels must be distinct")
        canon = set()
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {self.vertices[u]!r}")
            canon.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @classmethod
    def from_labeled_edges(cls, pairs: Iterable[tuple[str, str]], vertices: Sequence[str] = ()) -> Graph:
        """Build a graph from label pairs; vertices are ordered by first appearance."""
        labels = list(vertices)
        index = {lab: i for i, lab in enumerate(labels)}
        edges = []
        for a, b in pairs:
            for lab in (a, b):
                if lab not in index:
                    index[lab] = len(labels)
                    labels.append(lab)
            edges.append((index[a], index[b]))
        return cls(tuple(labels), tuple(edges))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nb = [set() for _ in self.vertices]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << u for u in s) for s in self.neighbors)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: k for k, e in enumerate(self.edges)}

    @cached_property
    def incident_edges(self) -> tuple[tuple[int, ...], ...]:
        inc = [[] for _ in self.vertices]
        for k, (u, v) in enumerate(self.edges):
            inc[u].append(k)
            inc[v].append(k)
        return tuple(tuple(x) for x in inc)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def index_of(self, label: str) -> int:
        try:
            return self.vertices.index(label)
        except ValueError:
            raise KeyError(f"no vertex labelled {label!r}") from None

    def indices(self, labels: Iterable[str]) -> list[int]:
        return [self.index_of(lab) for lab in labels]

    def edge_label(self, k: int) -> str:
        u, v = self.edges[k]
        return f"{self.vertices[u]}-{self.vertices[v]}"

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Move vertex ``i`` to position ``perm[i]`` (labels travel with the vertex)."""
        labels = [None] * len(perm)
        for i, p in enumerate(perm):
            labels[p] = self.vertices[i]
        return Graph(tuple(labels), tuple((perm[u], perm[v]) for u, v in self.edges))

    def to_edge_list(self) -> str:
        """Edge-list text; isolated vertices get a line of their own."""
        lines = [f"{self.vertices[u]} {self.vertices[v]}\n" for u, v in self.edges]
        lines += [f"{lab}\n" for v, lab in enumerate(self.vertices) if not self.neighbors[v]]
        return "".join(lines)


class Bipartition(NamedTuple):
    left: frozenset[int]
    right: frozenset[int]


class ChordalityResult(NamedTuple):
    chordal: bool
    # elimination ordering if chordal, else the vertices of an induced cycle in cyclic order
    certificate: tuple[int, ...]


class ChordalBipartiteResult(NamedTuple):
    chordal_bipartite: bool
    bipartition: Bipartition | None
    # an induced cycle of length >= 6, or an odd cycle when not bipartite
    cycle: tuple[int, ...] | None


# --- parsing ----------------------------------------------------------------

def parse_edge_list(text: str | TextIO) -> Graph:
    """Parse whitespace-separated label pairs, one edge per line.

    Blank lines and lines starting with ``#`` are skipped.  A line may carry a
    single label to declare an isolated vertex.
    """
    if not isinstance(text, str):
        text = text.read()
    labels: list[str] = []
    index: dict[str, int] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) > 2:
            raise ParseError(f"expected two vertex labels at line {lineno}, got {len(parts)}")
        for lab in parts:
            if lab not in index:
                index[lab] = len(labels)
                labels.append(lab)
        if len(parts) == 2:
            a, b = parts
            if a == b:
                raise ParseError(f"loop at line {lineno}")
            edges.append((index[a], index[b]))
    return Graph(tuple(labels), tuple(edges))


# --- constructors -----------------------------------------------------------

def complete_bipartite(n: int, m: int) -> Graph:
    labels = tuple(f"x{i}" for i in range(1, n + 1)) + tuple(f"y{j}" for j in range(1, m + 1))
    return Graph(labels, tuple((i, n + j) for i in range(n) for j in range(m)))


def cycle_graph(k: int, prefix: str = "v") -> Graph:
    labels = tuple(f"{prefix}{i}" for i in range(1, k + 1))
    return Graph(labels, tuple((i, (i + 1) % k) for i in range(k)))


def path_graph(k: int, prefix: str = "v") -> Graph:
    labels = tuple(f"{prefix}{i}" for i in range(1, k + 1))
    return Graph(labels, tuple((i, i + 1) for i in range(k - 1)))


def complete_graph(k: int, prefix: str = "v") -> Graph:
    labels = tuple(f"{prefix}{i}" for i in range(1, k + 1))
    return Graph(labels, tuple(itertools.combinations(range(k), 2)))


def empty_graph(k: int, prefix: str = "v") -> Graph:
    return Graph(tuple(f"{prefix}{i}" for i in range(1, k + 1)))


def disjoint_union(g: Graph, h: Graph, suffixes: tuple[str, str] = ("", "'")) -> Graph:
    labels = tuple(v + suffixes[0] for v in g.vertices) + tuple(v + suffixes[1] for v in h.vertices)
    off = g.n_vertices
    return Graph(labels, g.edges + tuple((u + off, v + off) for u, v in h.edges))


def bipartite_from_matrix(rows: Sequence[Sequence[int]]) -> Graph:
    """Graph with x-side = rows, y-side = columns, edges at the 1 entries."""
    n = len(rows)
    m = len(rows[0]) if n else 0
    labels = tuple(f"x{i}" for i in range(1, n + 1)) + tuple(f"y{j}" for j in range(1, m + 1))
    return Graph(labels, tuple((i, n + j) for i in range(n) for j in range(m) if rows[i][j]))


def chordal_bipartite_4x5() -> Graph:
    """The 4 x 5 chordal bipartite graph with biadjacency rows 11100, 11100, 01111, 01111."""
    return bipartite_from_matrix([
        [1, 1, 1, 0, 0],
        [1, 1, 1, 0, 0],
        [0, 1, 1, 1, 1],
        [0, 1, 1, 1, 1],
    ])


# --- basic operations -------------------------------------------------------

def induced_subgraph(g: Graph, w: Iterable[int]) -> Graph:
    """Induced subgraph on ``w``; vertices keep their labels and relative order."""
    keep = sorted(set(w))
    for v in keep:
        if not 0 <= v < g.n_vertices:
            raise ValueError(f"vertex index {v} out of range for a graph on {g.n_vertices} vertices")
    pos = {v: i for i, v in enumerate(keep)}
    edges = tuple((pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos)
    return Graph(tuple(g.vertices[v] for v in keep), edges)


def connected_components(g: Graph) -> list[frozenset[int]]:
    seen = [False] * g.n_vertices
    comps = []
    for s in range(g.n_vertices):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.neighbors[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(frozenset(comp))
    return comps


def complement(g: Graph) -> Graph:
    n = g.n_vertices
    edges = tuple((u, v) for u, v in itertools.combinations(range(n), 2) if not g.has_edge(u, v))
    return Graph(g.vertices, edges)


def bipartition(g: Graph) -> Bipartition | None:
    """Two-colouring with the smallest vertex of each component on the left, or None."""
    side = [-1] * g.n_vertices
    for s in range(g.n_vertices):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.neighbors[u]:
                if side[v] < 0:
                    side[v] = 1 - side[u]
                    queue.append(v)
                elif side[v] == side[u]:
                    return None
    left = frozenset(v for v in range(g.n_vertices) if side[v] == 0)
    return Bipartition(left, frozenset(range(g.n_vertices)) - left)


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def _odd_cycle(g: Graph) -> tuple[int, ...]:
    # BFS layering; an edge inside a layer closes an odd cycle through the BFS tree
    for s in range(g.n_vertices):
        parent = {s: None}
        depth = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in sorted(g.neighbors[u]):
                if v not in depth:
                    depth[v] = depth[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif depth[v] == depth[u]:
                    a, b = [u], [v]
                    while a[-1] != b[-1]:
                        a.append(parent[a[-1]])
                        b.append(parent[b[-1]])
                    return tuple(a + b[-2::-1])
    raise ValueError("graph is bipartite")


# --- induced cycles ---------------------------------------------------------

def find_induced_cycle(g: Graph, min_length: int, vertex_cap: int | None = None) -> tuple[int, ...] | None:
    """Exhaustive search for an induced cycle with at least ``min_length`` vertices.

    Returns the cycle's vertices in cyclic order, starting from its smallest
    vertex, or None.  Exponential; intended for small graphs and as an oracle.
    """
    if vertex_cap is not None and g.n_vertices > vertex_cap:
        raise CapabilityError(
            f"induced-cycle search is capped at {vertex_cap} vertices (graph has {g.n_vertices})")
    adj = g.adjacency_masks
    nbrs = [sorted(s) for s in g.neighbors]

    def extend(s, path, interior):
        last = path[-1]
        for u in nbrs[last]:
            if u <= s or (interior >> u) & 1 or u == last:
                continue
            if adj[u] & interior:
                continue
            if len(path) >= 2 and (adj[u] >> s) & 1:
                if len(path) + 1 >= min_length:
                    return path + [u]
                continue
            new_interior = interior | (1 << last) if len(path) >= 2 else interior
            found = extend(s, path + [u], new_interior)
            if found:
                return found
        return None

    for s in range(g.n_vertices):
        cyc = extend(s, [s], 0)
        if cyc:
            return tuple(cyc)
    return None


# --- chordality -------------------------------------------------------------

def maximum_cardinality_search(g: Graph) -> list[int]:
    """Visit order of MCS (ties to the smallest index).  Its reverse is a PEO iff g is chordal."""
    n = g.n_vertices
    weight = [0] * n
    visited = [False] * n
    order = []
    for _ in range(n):
        v = max((u for u in range(n) if not visited[u]), key=lambda u: (weight[u], -u))
        visited[v] = True
        order.append(v)
        for u in g.neighbors[v]:
            if not visited[u]:
                weight[u] += 1
    return order


def is_perfect_elimination_ordering(g: Graph, order: Sequence[int]) -> bool:
    """True iff eliminating vertices in ``order`` always removes a simplicial vertex."""
    if sorted(order) != list(range(g.n_vertices)):
        return False
    remaining = (1 << g.n_vertices) - 1
    adj = g.adjacency_masks
    for v in order:
        later = adj[v] & remaining
        u = later
        while u:
            low = u & -u
            w = low.bit_length() - 1
            if (later & ~low) & ~adj[w]:
                return False
            u ^= low
        remaining &= ~(1 << v)
    return True


def _chordless_cycle(g: Graph) -> tuple[int, ...]:
    # a cycle through v, two non-adjacent neighbours u, w, and a shortest u-w path avoiding N[v]
    for v in range(g.n_vertices):
        for u, w in itertools.combinations(sorted(g.neighbors[v]), 2):
            if g.has_edge(u, w):
                continue
            blocked = (g.neighbors[v] | {v}) - {u, w}
            parent = {u: None}
            queue = deque([u])
            while queue and w not in parent:
                a = queue.popleft()
                for b in sorted(g.neighbors[a]):
                    if b not in parent and b not in blocked:
                        parent[b] = a
                        queue.append(b)
            if w in parent:
                path = [w]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return (v,) + tuple(reversed(path))
    raise ValueError("graph is chordal")


def is_chordal(g: Graph) -> ChordalityResult:
    order = maximum_cardinality_search(g)[::-1]
    if is_perfect_elimination_ordering(g, order):
        return ChordalityResult(True, tuple(order))
    return ChordalityResult(False, _chordless_cycle(g))


def is_induced_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    want = {frozenset((cycle[i], cycle[(i + 1) % k])) for i in range(k)}
    have = {frozenset(p) for p in itertools.combinations(cycle, 2) if g.has_edge(*p)}
    return want == have


def is_chordal_bipartite(g: Graph, vertex_cap: int = DEFAULT_CYCLE_SEARCH_CAP) -> ChordalBipartiteResult:
    """Bipartite with no induced cycle of length six or more (brute-force search)."""
    parts = bipartition(g)
    if parts is None:
        return ChordalBipartiteResult(False, None, _odd_cycle(g))
    if g.n_vertices > vertex_cap:
        raise CapabilityError(
            f"brute-force chordal bipartite recognition is capped at {vertex_cap} vertices; "
            "use chordal_bipartite.gamma_free_order instead")
    cyc = find_induced_cycle(g, 6)
    if cyc is not None:
        return ChordalBipartiteResult(False, parts, cyc)
    return ChordalBipartiteResult(True, parts, None)
