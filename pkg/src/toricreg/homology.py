"""Simplicial complexes over an indexed ground set and their reduced homology over a field.

Faces are stored as integer bitmasks (bit ``v`` set iff vertex ``v`` is in the
face).  A complex is represented by its facets only; the void complex has no
facets and the irrelevant complex ``{∅}`` has the single facet ``0``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, NamedTuple, Sequence

from .betti import BettiTable
from .errors import CapabilityError
from .graph_core import Graph

DEFAULT_PRIME = 32003
MAX_FACES_PER_DIM = 10**6
HOCHSTER_GROUND_CAP = 20


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def maximal_masks(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal members of ``masks``, deduplicated and sorted."""
    kept: list[int] = []
    for m in sorted(set(masks), key=popcount, reverse=True):
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: rationals (characteristic 0) or GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError(f"{self.characteristic} is not prime")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(0)

    @classmethod
    def prime(cls, p: int = DEFAULT_PRIME) -> FieldSpec:
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Accepts ``q`` / ``Q`` for the rationals and ``p:<prime>`` for GF(p)."""
        t = text.strip().lower()
        if t in ("q", "qq", "0"):
            return cls(0)
        if t.startswith("p:"):
            return cls(int(t[2:]))
        raise ValueError(f"unknown field {text!r}; use 'q' or 'p:<prime>'")

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldSpec(0)


@dataclass(frozen=True)
class SimplicialComplex:
    ground_size: int
    facet_masks: tuple[int, ...]
    # original vertex ids after a restriction; display only
    vertex_ids: tuple[int, ...] | None = field(default=None, compare=False)

    @classmethod
    def from_facets(cls, ground_size: int, facets: Iterable[Iterable[int]], vertex_ids=None) -> SimplicialComplex:
        masks = []
        for f in facets:
            m = to_mask(f)
            if m >> ground_size:
                raise ValueError(f"facet {sorted(f)} is not inside the ground set 0..{ground_size - 1}")
            masks.append(m)
        return cls(ground_size, maximal_masks(masks), vertex_ids)

    @classmethod
    def from_masks(cls, ground_size: int, masks: Iterable[int]) -> SimplicialComplex:
        return cls(ground_size, maximal_masks(masks))

    @classmethod
    def void(cls, ground_size: int = 0) -> SimplicialComplex:
        return cls(ground_size, ())

    @classmethod
    def irrelevant(cls, ground_size: int = 0) -> SimplicialComplex:
        """The complex whose only face is the empty set."""
        return cls(ground_size, (0,))

    @classmethod
    def simplex(cls, vertices: Iterable[int], ground_size: int | None = None) -> SimplicialComplex:
        m = to_mask(vertices)
        return cls(m.bit_length() if ground_size is None else ground_size, (m,))

    @property
    def facets(self) -> list[tuple[int, ...]]:
        return sorted(tuple(bits(m)) for m in self.facet_masks)

    @property
    def is_void(self) -> bool:
        return not self.facet_masks

    @property
    def dim(self) -> int | None:
        """None for the void complex; -1 for ``{∅}``."""
        if self.is_void:
            return None
        return max(popcount(m) for m in self.facet_masks) - 1

    @property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.facet_masks:
            m |= f
        return m

    def contains(self, face: Iterable[int]) -> bool:
        m = to_mask(face)
        return any(m & f == m for f in self.facet_masks)

    def is_cone(self) -> bool:
        """Some vertex lies in every facet (so all reduced homology vanishes)."""
        if self.is_void:
            return False
        common = self.facet_masks[0]
        for f in self.facet_masks[1:]:
            common &= f
        return common != 0

    def is_pure(self) -> bool:
        return len({popcount(m) for m in self.facet_masks}) <= 1

    def __repr__(self):
        return f"SimplicialComplex(ground_size={self.ground_size}, facets={self.facets})"


# --- faces ------------------------------------------------------------------

def _face_masks_of_dim(facet_masks: Sequence[int], d: int, cap: int = MAX_FACES_PER_DIM) -> list[int]:
    if not facet_masks:
        return []
    if d == -1:
        return [0]
    k = d + 1
    out = set()
    for f in facet_masks:
        if popcount(f) < k:
            continue
        if popcount(f) == k:
            out.add(f)
            continue
        for combo in itertools.combinations(bits(f), k):
            out.add(to_mask(combo))
        if len(out) > cap:
            raise CapabilityError(f"more than {cap} faces in dimension {d}")
    return sorted(out)


def faces_of_dim(c: SimplicialComplex, d: int) -> list[tuple[int, ...]]:
    """All ``d``-dimensional faces as sorted vertex tuples, in lexicographic order."""
    if d < -1:
        raise ValueError("dimension must be >= -1")
    return sorted(tuple(bits(m)) for m in _face_masks_of_dim(c.facet_masks, d))


def f_vector(c: SimplicialComplex) -> dict[int, int]:
    if c.is_void:
        return {}
    return {d: len(_face_masks_of_dim(c.facet_masks, d)) for d in range(-1, c.dim + 1)}


# --- exact rank -------------------------------------------------------------

def sparse_rank(columns: Iterable[dict[int, int]], characteristic: int = 0) -> int:
    """Rank of a sparse integer matrix given column by column over QQ or GF(p).

    Columns are reduced against earlier pivots by their largest row index.
    Over QQ the reduction is fraction-free: ``v <- b*v - a*pivot`` followed by
    division by the content of ``v``, so entries stay integral and small.
    """
    p = characteristic
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for col in columns:
        if p:
            v = {k: x % p for k, x in col.items() if x % p}
        else:
            v = {k: x for k, x in col.items() if x}
        while v:
            low = max(v)
            piv = pivots.get(low)
            if piv is None:
                if p:
                    inv = pow(v[low], -1, p)
                    v = {k: x * inv % p for k, x in v.items()}
                pivots[low] = v
                rank += 1
                break
            a = v[low]
            if p:
                for k, x in piv.items():
                    y = (v.get(k, 0) - a * x) % p
                    if y:
                        v[k] = y
                    else:
                        v.pop(k, None)
            else:
                b = piv[low]
                new = {k: b * x for k, x in v.items()}
                for k, x in piv.items():
                    y = new.get(k, 0) - a * x
                    if y:
                        new[k] = y
                    else:
                        new.pop(k, None)
                g = 0
                for x in new.values():
                    g = gcd(g, x)
                    if g == 1:
                        break
                if g > 1:
                    new = {k: x // g for k, x in new.items()}
                v = new
    return rank


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of a dense integer matrix by Bareiss fraction-free elimination."""
    a = [list(row) for row in matrix]
    if not a or not a[0]:
        return 0
    rows, cols = len(a), len(a[0])
    prev = 1
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        if r == rows:
            break
    return r


def _boundary_columns(faces: Sequence[int], lower_index: dict[int, int]):
    for f in faces:
        col = {}
        for pos, v in enumerate(bits(f)):
            col[lower_index[f ^ (1 << v)]] = -1 if pos & 1 else 1
        yield col


def boundary_matrix(c: SimplicialComplex, d: int) -> list[list[int]]:
    """Dense matrix of the boundary map from d-faces to (d-1)-faces (rows = lower faces)."""
    upper = _face_masks_of_dim(c.facet_masks, d)
    lower = _face_masks_of_dim(c.facet_masks, d - 1)
    index = {m: i for i, m in enumerate(lower)}
    mat = [[0] * len(upper) for _ in lower]
    for j, col in enumerate(_boundary_columns(upper, index)):
        for i, x in col.items():
            mat[i][j] = x
    return mat


def reduced_homology_masks(facet_masks: Sequence[int], field: FieldSpec = QQ,
                           cap: int = MAX_FACES_PER_DIM) -> dict[int, int]:
    """Reduced Betti numbers ``{d: dim H~_d}`` for d = -1..dim, from facet bitmasks."""
    if not facet_masks:
        return {}
    top = max(popcount(m) for m in facet_masks) - 1
    p = field.characteristic
    dims = {}
    lower = _face_masks_of_dim(facet_masks, -1, cap)
    rank_in = 0  # rank of the boundary map out of the current dimension
    for d in range(-1, top + 1):
        if d < top:
            upper = _face_masks_of_dim(facet_masks, d + 1, cap)
            index = {m: i for i, m in enumerate(lower)}
            rank_up = sparse_rank(_boundary_columns(upper, index), p)
        else:
            upper, rank_up = [], 0
        dims[d] = len(lower) - rank_in - rank_up
        lower, rank_in = upper, rank_up
    return dims


def reduced_homology_dims(c: SimplicialComplex, field: FieldSpec = QQ,
                          cap: int = MAX_FACES_PER_DIM) -> dict[int, int]:
    """``{d: dim H~_d(c; field)}`` for d = -1..dim(c); empty for the void complex."""
    return reduced_homology_masks(c.facet_masks, field, cap)


def homology_vanishes(facet_masks: Sequence[int]) -> bool:
    """Cheap sufficient test for acyclicity: void, or a cone over some vertex."""
    if not facet_masks:
        return True
    common = facet_masks[0]
    for f in facet_masks[1:]:
        common &= f
        if not common:
            return False
    return common != 0


# --- restriction and Stanley-Reisner data -----------------------------------

def restrict_masks(facet_masks: Sequence[int], w: int) -> tuple[int, ...]:
    if not facet_masks:
        return ()
    return maximal_masks(f & w for f in facet_masks)


def restrict(c: SimplicialComplex, w: Iterable[int]) -> SimplicialComplex:
    """Faces of ``c`` inside ``w``, re-indexed onto 0..|w|-1 in increasing order of ``w``."""
    keep = sorted(set(w))
    for v in keep:
        if not 0 <= v < c.ground_size:
            raise ValueError(f"vertex {v} is outside the ground set")
    pos = {v: i for i, v in enumerate(keep)}
    wmask = to_mask(keep)
    facets = [[pos[v] for v in bits(m)] for m in restrict_masks(c.facet_masks, wmask)]
    ids = tuple(c.vertex_ids[v] for v in keep) if c.vertex_ids else tuple(keep)
    return SimplicialComplex.from_facets(len(keep), facets, vertex_ids=ids)


def stanley_reisner_masks(c: SimplicialComplex) -> list[int]:
    if c.is_void:
        raise ValueError("the void complex has the unit ideal as Stanley-Reisner ideal")
    facets = c.facet_masks

    def is_face(m):
        return any(m & f == m for f in facets)

    found = set()
    faces = [0]
    size = 0
    while faces:
        next_faces = set()
        for f in faces:
            for v in range(c.ground_size):
                if (f >> v) & 1:
                    continue
                s = f | (1 << v)
                if s in found or s in next_faces:
                    continue
                if is_face(s):
                    next_faces.add(s)
                elif all(is_face(s ^ (1 << u)) for u in bits(s)):
                    found.add(s)
        faces = sorted(next_faces)
        size += 1
    return sorted(found, key=lambda m: (popcount(m), bits(m)))


def stanley_reisner_generators(c: SimplicialComplex) -> list[tuple[int, ...]]:
    """Minimal non-faces of ``c``, i.e. the supports of the minimal monomial generators of I(c)."""
    return [tuple(bits(m)) for m in stanley_reisner_masks(c)]


def complex_from_nonfaces(ground_size: int, nonfaces: Iterable[Iterable[int]]) -> SimplicialComplex:
    """All subsets of the ground set containing no listed non-face (brute force over 2^n)."""
    gens = [to_mask(g) for g in nonfaces]
    faces = [s for s in range(1 << ground_size) if not any(s & g == g for g in gens)]
    return SimplicialComplex.from_masks(ground_size, faces) if faces else SimplicialComplex.void(ground_size)


def hochster_betti(c: SimplicialComplex, field: FieldSpec = QQ,
                   cap: int = HOCHSTER_GROUND_CAP) -> BettiTable:
    """Graded Betti table of the Stanley-Reisner ideal I(c), summed over restrictions.

    Restrictions that are cones (including full simplices) contribute nothing
    and are skipped before any linear algebra is done.
    """
    if c.is_void:
        raise ValueError("the void complex has the unit ideal as Stanley-Reisner ideal")
    n = c.ground_size
    if n > cap:
        raise CapabilityError(f"Hochster sums are capped at a ground set of {cap} vertices (got {n})")
    entries: dict[tuple[int, int], int] = {}
    for w in range(1, 1 << n):
        restricted = restrict_masks(c.facet_masks, w)
        if homology_vanishes(restricted):
            continue
        j = popcount(w)
        for d, h in reduced_homology_masks(restricted, field).items():
            i = j - d - 2
            if h and i >= 0:
                entries[(i, j)] = entries.get((i, j), 0) + h
    return BettiTable(entries)


# --- independence complexes -------------------------------------------------

def maximal_independent_sets(g: Graph) -> list[int]:
    """Maximal independent sets as bitmasks (Bron-Kerbosch with pivoting on the complement)."""
    n = g.n_vertices
    full = (1 << n) - 1
    non_adj = [full & ~a & ~(1 << v) for v, a in enumerate(g.adjacency_masks)]
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(r)
            return
        pivot = max(bits(p | x), key=lambda u: popcount(p & non_adj[u]))
        for v in bits(p & ~non_adj[pivot]):
            expand(r | (1 << v), p & non_adj[v], x & non_adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, full, 0)
    return sorted(out)


def independence_complex(g: Graph) -> SimplicialComplex:
    """Complex of independent sets; its Stanley-Reisner ideal is the edge ideal of g."""
    return SimplicialComplex(g.n_vertices, maximal_masks(maximal_independent_sets(g)))


def edge_ideal_betti(g: Graph, field: FieldSpec = QQ, cap: int = HOCHSTER_GROUND_CAP) -> BettiTable:
    return hochster_betti(independence_complex(g), field, cap)


# --- joins and shellings ----------------------------------------------------

def join(c1: SimplicialComplex, c2: SimplicialComplex, offset: int | None = None) -> SimplicialComplex:
    """Join of two complexes on one ground set whose vertex supports are disjoint.

    With ``offset`` given, ``c2`` is first shifted by ``offset`` onto fresh
    vertices and the result lives on ``offset + c2.ground_size`` vertices.
    """
    if offset is not None:
        if offset < c1.ground_size:
            raise ValueError("offset must be at least c1.ground_size")
        shifted = tuple(m << offset for m in c2.facet_masks)
        ground = offset + c2.ground_size
    else:
        shifted = c2.facet_masks
        ground = max(c1.ground_size, c2.ground_size)
        if c1.vertex_mask & c2.vertex_mask:
            raise ValueError("join needs disjoint vertex sets: "
                             f"shared vertices {bits(c1.vertex_mask & c2.vertex_mask)}")
    if c1.is_void or c2.is_void:
        return SimplicialComplex.void(ground)
    return SimplicialComplex(ground, maximal_masks(a | b for a in c1.facet_masks for b in shifted))


class ShellingResult(NamedTuple):
    shelling: bool
    violation: tuple[int, int] | None  # positions (i, l) in the order, 0-based


def is_shelling(c: SimplicialComplex, order: Sequence[Iterable[int]]) -> ShellingResult:
    """Check the facet order F_1..F_t: each earlier F_i meets F_l inside some codimension-one
    face F_j ∩ F_l = F_l minus one vertex, with j < l."""
    masks = [to_mask(f) for f in order]
    if sorted(masks) != sorted(c.facet_masks):
        raise ValueError("order is not a permutation of the facets")
    for l in range(1, len(masks)):
        fl = masks[l]
        ridges = {masks[j] & fl for j in range(l) if popcount(masks[j] & fl) == popcount(fl) - 1}
        for i in range(l):
            meet = masks[i] & fl
            if not any(meet & r == meet for r in ridges):
                return ShellingResult(False, (i, l))
    return ShellingResult(True, None)
