"""Non-vanishing certificates for the toric ideal of K_{n,n}.

With alpha = (x_1...x_n y_1...y_n)^(n-1), the Stanley-Reisner ideal of the
fibre complex is generated by the n row products m_i = e_{i,1}...e_{i,n} and
the n column products p_{n+j} = e_{1,j}...e_{n,j}.  On the Taylor simplex over
these 2n generators (vertex k-1 <-> generator k, rows first), the faces whose
lcm label strictly divides w = e_{1,1}...e_{n,n} form a shellable complex with
facets sigma_{i,j} = everything except i and n+j.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from functools import cached_property

from .errors import CapabilityError
from .fibre import gamma_complex
from .graph_core import Graph, complete_bipartite
from .homology import (QQ, FieldSpec, SimplicialComplex, hochster_betti, is_shelling,
                       maximal_masks, reduced_homology_dims, stanley_reisner_generators, to_mask)
from .toric import toric_betti_multigraded

DEFAULT_N_CAP = 3


@dataclass(frozen=True)
class KnnInstance:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")

    @cached_property
    def graph(self) -> Graph:
        return complete_bipartite(self.n, self.n)

    @property
    def alpha(self) -> tuple[int, ...]:
        return (self.n - 1,) * (2 * self.n)

    @property
    def w(self) -> tuple[int, ...]:
        return (1,) * (self.n * self.n)

    def edge(self, i: int, j: int) -> int:
        """Index of e_{i,j} (1-based i, j)."""
        return (i - 1) * self.n + (j - 1)


def srideal_generators(inst: KnnInstance) -> list[frozenset[int]]:
    """Row products m_1..m_n, then column products p_{n+1}..p_{2n}, as edge-index sets."""
    n = inst.n
    rows = [frozenset(inst.edge(i, j) for j in range(1, n + 1)) for i in range(1, n + 1)]
    cols = [frozenset(inst.edge(i, j) for i in range(1, n + 1)) for j in range(1, n + 1)]
    return rows + cols


def sigma(inst: KnnInstance, i: int, j: int) -> frozenset[int]:
    """Facet sigma_{i,j} on the Taylor vertices 1..2n, as 0-based indices."""
    n = inst.n
    return frozenset(range(2 * n)) - {i - 1, n + j - 1}


def taylor_restricted_facets(inst: KnnInstance) -> list[frozenset[int]]:
    """The n^2 facets sigma_{i,j}, ordered by (i, j)."""
    return [sigma(inst, i, j) for i in range(1, inst.n + 1) for j in range(1, inst.n + 1)]


def taylor_restricted_complex(inst: KnnInstance) -> SimplicialComplex:
    return SimplicialComplex.from_facets(2 * inst.n, taylor_restricted_facets(inst))


def is_taylor_restricted_face(inst: KnnInstance, face) -> bool:
    """Closed-form membership: at most n-1 row generators and at most n-1 column generators."""
    n = inst.n
    a = sum(1 for k in face if k < n)
    return a <= n - 1 and len(face) - a <= n - 1


def taylor_faces_below_w(inst: KnnInstance) -> SimplicialComplex:
    """Faces of the full Taylor simplex whose lcm label misses some variable of w,
    found by scanning all 2^(2n) subsets of generators."""
    gens = [to_mask(g) for g in srideal_generators(inst)]
    everything = (1 << (inst.n * inst.n)) - 1
    faces = []
    for s in range(1 << (2 * inst.n)):
        label = 0
        for k in range(2 * inst.n):
            if (s >> k) & 1:
                label |= gens[k]
        if label != everything:
            faces.append(s)
    return SimplicialComplex(2 * inst.n, maximal_masks(faces))


def shelling_order(inst: KnnInstance) -> list[frozenset[int]]:
    """sigma_{1,n+1}, sigma_{2,n+1}, ..., sigma_{n,n+1}, sigma_{1,n+2}, ..., sigma_{n,2n}."""
    return [sigma(inst, i, j) for j in range(1, inst.n + 1) for i in range(1, inst.n + 1)]


@dataclass
class KnnReport:
    n: int
    field: str
    shelling_ok: bool
    taylor_homology_dim: int          # dim H~_{2n-3} of the restricted Taylor complex
    sr_generators_ok: bool | None = None
    hochster_beta: int | None = None  # beta_{2n-2, n^2} of I(Gamma(alpha))
    toric_beta: int | None = None     # beta_{n^2-2n, alpha} of I_{K_{n,n}}
    skipped: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        checks = [self.shelling_ok, self.taylor_homology_dim > 0]
        if self.sr_generators_ok is not None:
            checks.append(self.sr_generators_ok)
        for b in (self.hochster_beta, self.toric_beta):
            if b is not None:
                checks.append(b > 0)
        return all(checks)

    @property
    def regularity_lower_bound(self) -> int | None:
        return self.n if self.toric_beta else None

    def to_json_obj(self) -> dict:
        out = asdict(self)
        out["passed"] = self.passed
        out["regularity_lower_bound"] = self.regularity_lower_bound
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def verify_taylor(inst: KnnInstance, field: FieldSpec = QQ) -> KnnReport:
    """Shelling order and top homology of the restricted Taylor complex (cheap for any n)."""
    n = inst.n
    delta = taylor_restricted_complex(inst)
    shell = is_shelling(delta, shelling_order(inst))
    h = reduced_homology_dims(delta, field).get(2 * n - 3, 0)
    return KnnReport(n, str(field), shell.shelling, h)


def verify_nonvanishing(inst: KnnInstance, field: FieldSpec = QQ, cap: int = DEFAULT_N_CAP) -> KnnReport:
    """Compute every link of the chain: the restricted Taylor complex has top homology,
    beta_{2n-2,n^2}(I(Gamma(alpha))) != 0 by Hochster, and beta_{n^2-2n,alpha}(I_{K_{n,n}}) != 0."""
    n = inst.n
    if n > cap:
        raise CapabilityError(f"K_{{n,n}} verification is capped at n = {cap} (got {n})")
    report = verify_taylor(inst, field)
    gamma = gamma_complex(inst.graph, inst.alpha)
    report.sr_generators_ok = (
        sorted(map(sorted, srideal_generators(inst))) == sorted(map(list, stanley_reisner_generators(gamma))))
    report.hochster_beta = hochster_betti(gamma, field)[(2 * n - 2, n * n)]
    betti = toric_betti_multigraded(inst.graph, inst.alpha, field)
    report.toric_beta = betti[n * n - 2 * n] if len(betti) > n * n - 2 * n else 0
    return report
