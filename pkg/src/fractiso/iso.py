"""Deciding fractional isomorphism, and building/verifying witnesses.

Witness convention: ``S1`` is indexed (vertex of H, vertex of G) and ``S2`` is
indexed (edge of G, edge of H), so that ``S1 M_G = M_H S2^t`` and
``M_G S2 = S1^t M_H``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import lp
from .hypergraph import (
    GuardExceeded,
    Hypergraph,
    adjacency_matrix,
    bipartite_representation,
    default_limit,
    degree_sequence,
    dual,
    hyperedge_sizes,
    incidence_lists,
    incidence_matrix,
    is_graph,
    require_graph,
)
from .partition import CommonPartition, PartitionParameters, common_partition, parameters
from .rational import RationalMatrix

DEFAULT_LP_LIMIT = 30
METHODS = ("partition", "lp", "both")


class WitnessError(ValueError):
    pass


class MethodDisagreement(RuntimeError):
    """The partition and LP deciders returned different answers."""


@dataclass(frozen=True)
class IsoWitness:
    S1: RationalMatrix
    S2: RationalMatrix


@dataclass(frozen=True)
class IsoVerdict:
    result: bool
    method: str
    witness: IsoWitness | None = None
    shared_parameters: PartitionParameters | None = None
    adjacency_witness: RationalMatrix | None = field(default=None, repr=False)
    reason: str = ""

    def __bool__(self) -> bool:
        return self.result


def fast_reject(g: Hypergraph, h: Hypergraph) -> str | None:
    """Cheap necessary conditions; returns the first failing one or None."""
    if g.n != h.n:
        return f"vertex counts differ ({g.n} vs {h.n})"
    if g.m != h.m:
        return f"hyperedge counts differ ({g.m} vs {h.m})"
    if degree_sequence(g) != degree_sequence(h):
        return "degree multisets differ"
    if hyperedge_sizes(g) != hyperedge_sizes(h):
        return "hyperedge-size multisets differ"
    return None


def identity_witness(g: Hypergraph) -> IsoWitness:
    return IsoWitness(RationalMatrix.identity(g.n), RationalMatrix.identity(g.m))


def verify_witness(g: Hypergraph, h: Hypergraph, w: IsoWitness) -> bool:
    if w.S1.shape != (g.n, g.n) or w.S1.shape != (h.n, h.n):
        raise WitnessError(f"S1 has shape {w.S1.shape}, expected {(g.n, g.n)} for both hypergraphs")
    if w.S2.shape != (g.m, g.m) or w.S2.shape != (h.m, h.m):
        raise WitnessError(f"S2 has shape {w.S2.shape}, expected {(g.m, g.m)} for both hypergraphs")
    if not (w.S1.is_doubly_stochastic() and w.S2.is_doubly_stochastic()):
        return False
    if g.m == 0 or g.n == 0:
        return True
    mg, mh = incidence_matrix(g), incidence_matrix(h)
    return w.S1 @ mg == mh @ w.S2.T and mg @ w.S2 == w.S1.T @ mh


def verify_adjacency_witness(g: Hypergraph, h: Hypergraph, s: RationalMatrix) -> bool:
    if s.shape != (g.n, g.n) or g.n != h.n:
        raise WitnessError(f"S has shape {s.shape}, expected {(g.n, g.n)}")
    if not s.is_doubly_stochastic():
        return False
    return adjacency_matrix(g) @ s == s @ adjacency_matrix(h)


def invert_witness(w: IsoWitness) -> IsoWitness:
    """Witness for (H, G) given one for (G, H)."""
    return IsoWitness(w.S1.T, w.S2.T)


def compose_witnesses(w_gh: IsoWitness, w_hk: IsoWitness, g: Hypergraph | None = None,
                      h: Hypergraph | None = None, k: Hypergraph | None = None) -> IsoWitness:
    """Witness for (G, K) from witnesses for (G, H) and (H, K).

    When the hypergraphs are supplied the inputs are checked first and the
    result is verified before it is returned.
    """
    if w_gh.S1.shape != w_hk.S1.shape or w_gh.S2.shape != w_hk.S2.shape:
        raise WitnessError("witness dimensions do not chain")
    if g is not None and h is not None and not verify_witness(g, h, w_gh):
        raise WitnessError("first witness does not verify")
    if h is not None and k is not None and not verify_witness(h, k, w_hk):
        raise WitnessError("second witness does not verify")
    out = IsoWitness(w_hk.S1 @ w_gh.S1, w_gh.S2 @ w_hk.S2)
    if g is not None and k is not None and not verify_witness(g, k, out):
        raise WitnessError("composed witness does not verify")
    return out


def witness_from_partition(g: Hypergraph, h: Hypergraph, common: CommonPartition) -> IsoWitness:
    """Block witness: 1/v_i on matching vertex classes, 1/a_j on matching edge classes."""
    gp, hp, params = common.g_partition, common.h_partition, common.params
    for side, hg, part in (("G", g, gp), ("H", h, hp)):
        try:
            got = parameters(part, hg)
        except ValueError as exc:
            raise WitnessError(f"{side}-side partition is not equitable: {exc}") from None
        if got != params:
            raise WitnessError(f"{side}-side parameters do not match the shared parameters")
    s1 = [[Fraction(0)] * g.n for _ in range(h.n)]
    for gc, hc in zip(gp.vertex_classes, hp.vertex_classes):
        val = Fraction(1, len(gc))
        for x in hc:
            for y in gc:
                s1[x][y] = val
    s2 = [[Fraction(0)] * h.m for _ in range(g.m)]
    for gc, hc in zip(gp.edge_classes, hp.edge_classes):
        val = Fraction(1, len(gc))
        for x in gc:
            for y in hc:
                s2[x][y] = val
    w = IsoWitness(RationalMatrix.from_rows(s1, g.n), RationalMatrix.from_rows(s2, h.m))
    if not verify_witness(g, h, w):
        raise WitnessError("block witness failed verification")
    return w


def iso_by_partition(g: Hypergraph, h: Hypergraph) -> IsoVerdict:
    if g.n != h.n or g.m != h.m:
        return IsoVerdict(False, "partition", reason="dimensions differ")
    common = common_partition(g, h)
    if common is None:
        return IsoVerdict(False, "partition", reason="no common equitable partition")
    return IsoVerdict(True, "partition", witness_from_partition(g, h, common), common.params,
                      reason="common equitable partition")


def _lp_guard(sizes, limit: int | None) -> None:
    limit = default_limit(DEFAULT_LP_LIMIT) if limit is None else limit
    if max(sizes, default=0) > limit:
        raise GuardExceeded(
            f"exact LP refused: size {max(sizes)} exceeds the LP limit {limit} "
            "(raise it with --limit or FRACTISO_LIMIT, or use --method partition)"
        )


def _matrix_from(x, offset: int, size: int) -> RationalMatrix:
    return RationalMatrix(size, size, x[offset:offset + size * size])


def _doubly_stochastic_rows(nvars: int, offset: int, size: int) -> list[lp.Constraint]:
    rows = []
    for a in range(size):
        row = [0] * nvars
        for b in range(size):
            row[offset + a * size + b] = 1
        rows.append(lp.Constraint(tuple(row), lp.EQ, 1))
        col = [0] * nvars
        for b in range(size):
            col[offset + b * size + a] = 1
        rows.append(lp.Constraint(tuple(col), lp.EQ, 1))
    return rows


def incidence_lp_constraints(g: Hypergraph, h: Hypergraph) -> tuple[int, list[lp.Constraint]]:
    """Feasibility system for the two incidence equations plus double stochasticity.

    Variables: S1 row-major (n*n), then S2 row-major (m*m).
    """
    n, m = g.n, g.m
    nv = n * n + m * m
    off = n * n
    cons = _doubly_stochastic_rows(nv, 0, n) + _doubly_stochastic_rows(nv, off, m)
    inc_g, inc_h = incidence_lists(g), incidence_lists(h)
    for a in range(n):
        for j in range(m):
            # (S1 M_G)[a, j] - (M_H S2^t)[a, j] = 0
            row = [0] * nv
            for b in g.edges[j]:
                row[a * n + b] += 1
            for k in inc_h[a]:
                row[off + j * m + k] -= 1
            cons.append(lp.Constraint(tuple(row), lp.EQ, 0))
            # (M_G S2)[a, j] - (S1^t M_H)[a, j] = 0
            row = [0] * nv
            for k in inc_g[a]:
                row[off + k * m + j] += 1
            for b in h.edges[j]:
                row[b * n + a] -= 1
            cons.append(lp.Constraint(tuple(row), lp.EQ, 0))
    return nv, cons


def iso_by_lp(g: Hypergraph, h: Hypergraph, limit: int | None = None) -> IsoVerdict:
    if g.m == 0 or h.m == 0:
        ok = g.n == h.n and g.m == h.m == 0
        return IsoVerdict(ok, "lp", identity_witness(g) if ok else None,
                          reason="no hyperedges" if ok else "dimensions differ")
    why = fast_reject(g, h)
    if why:
        return IsoVerdict(False, "lp", reason=why)
    _lp_guard((g.n, g.m), limit)
    nv, cons = incidence_lp_constraints(g, h)
    x = lp.feasible(cons, nv)
    if x is None:
        return IsoVerdict(False, "lp", reason="LP infeasible")
    w = IsoWitness(_matrix_from(x, 0, g.n), _matrix_from(x, g.n * g.n, g.m))
    if not verify_witness(g, h, w):
        raise WitnessError("LP returned a point that is not a witness")
    return IsoVerdict(True, "lp", w, reason="LP feasible")


def adjacency_lp_constraints(g: Hypergraph, h: Hypergraph) -> tuple[int, list[lp.Constraint]]:
    """Double stochasticity of S plus A_G S = S A_H; variables are S row-major."""
    n = g.n
    nv = n * n
    ag, ah = adjacency_matrix(g), adjacency_matrix(h)
    cons = _doubly_stochastic_rows(nv, 0, n)
    for a in range(n):
        for b in range(n):
            row = [0] * nv
            for k in range(n):
                if ag[a, k]:
                    row[k * n + b] += ag[a, k]
                if ah[k, b]:
                    row[a * n + k] -= ah[k, b]
            cons.append(lp.Constraint(tuple(row), lp.EQ, 0))
    return nv, cons


def graph_iso_by_adjacency_lp(g: Hypergraph, h: Hypergraph, limit: int | None = None) -> IsoVerdict:
    require_graph(g)
    require_graph(h)
    why = fast_reject(g, h)
    if why:
        return IsoVerdict(False, "adjacency-lp", reason=why)
    if g.n == 0:
        return IsoVerdict(True, "adjacency-lp", adjacency_witness=RationalMatrix.identity(0), reason="empty graphs")
    _lp_guard((g.n,), limit)
    nv, cons = adjacency_lp_constraints(g, h)
    x = lp.feasible(cons, nv)
    if x is None:
        return IsoVerdict(False, "adjacency-lp", reason="LP infeasible")
    s = _matrix_from(x, 0, g.n)
    if not verify_adjacency_witness(g, h, s):
        raise WitnessError("LP returned a point that is not a witness")
    return IsoVerdict(True, "adjacency-lp", adjacency_witness=s, reason="LP feasible")


def decide(g: Hypergraph, h: Hypergraph, method: str = "partition", limit: int | None = None) -> IsoVerdict:
    """Run one decider, or both and insist they agree."""
    if method == "partition":
        return iso_by_partition(g, h)
    if method == "lp":
        return iso_by_lp(g, h, limit)
    if method != "both":
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    by_part = iso_by_partition(g, h)
    by_lp = iso_by_lp(g, h, limit)
    if by_part.result != by_lp.result:
        raise MethodDisagreement(
            f"partition says {by_part.result} ({by_part.reason}), LP says {by_lp.result} ({by_lp.reason})"
        )
    return IsoVerdict(by_part.result, "both", by_lp.witness or by_part.witness,
                      by_part.shared_parameters, reason=f"{by_part.reason}; {by_lp.reason}")


@dataclass(frozen=True)
class DerivedChecks:
    duals_iso: bool | None
    bipartite_iso: bool
    g_is_graph: bool
    h_is_graph: bool

    @property
    def graphness_transfers(self) -> bool:
        return self.g_is_graph == self.h_is_graph

    def as_dict(self) -> dict:
        return {
            "duals_iso": self.duals_iso,
            "bipartite_iso": self.bipartite_iso,
            "g_is_graph": self.g_is_graph,
            "h_is_graph": self.h_is_graph,
            "graphness_transfers": self.graphness_transfers,
        }


def derived_iso_checks(g: Hypergraph, h: Hypergraph, method: str = "partition",
                       limit: int | None = None) -> DerivedChecks:
    """Run the deciders on the duals and the bipartite representations.

    ``duals_iso`` is None when the hypergraphs have no hyperedges.
    """
    duals = None
    if g.m and h.m:
        duals = decide(dual(g), dual(h), method, limit).result
    bip = decide(bipartite_representation(g), bipartite_representation(h), method, limit).result
    return DerivedChecks(duals, bip, is_graph(g), is_graph(h))
