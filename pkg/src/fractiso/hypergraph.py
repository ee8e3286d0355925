"""Hypergraph data model and derived constructions.

A hypergraph is a vertex count ``n`` together with an ordered multiset of
hyperedges.  Vertices are ``0 .. n-1``.  Graphs are the hypergraphs whose
hyperedges all have exactly two vertices.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .rational import RationalMatrix

DEFAULT_SET_LIMIT = 20


class HypergraphError(ValueError):
    pass


class NotAGraphError(HypergraphError):
    pass


class NoHyperedgesError(HypergraphError):
    pass


class GuardExceeded(HypergraphError):
    """An exponential construction was refused by the vertex-count guard."""


def default_limit(fallback: int) -> int:
    env = os.environ.get("FRACTISO_LIMIT")
    if env:
        try:
            return int(env)
        except ValueError:
            raise HypergraphError(f"FRACTISO_LIMIT must be an integer, got {env!r}") from None
    return fallback


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise HypergraphError("vertex count must be nonnegative")
        for e in self.edges:
            if any(b <= a for a, b in zip(e, e[1:])):
                raise HypergraphError(f"hyperedge {e} is not strictly increasing; use make()")
            if e and (e[0] < 0 or e[-1] >= self.n):
                raise HypergraphError(f"hyperedge {e} has a vertex outside [0, {self.n})")

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, edges={[list(e) for e in self.edges]})"


def make(n: int, edges: Iterable[Iterable[int]] = ()) -> Hypergraph:
    """Build a hypergraph, sorting each hyperedge and collapsing repeated vertices."""
    norm = []
    for e in edges:
        e = sorted(set(int(v) for v in e))
        for v in e:
            if not 0 <= v < n:
                raise HypergraphError(f"vertex index {v} out of range for n={n}")
        norm.append(tuple(e))
    return Hypergraph(int(n), tuple(norm))


def incidence_matrix(h: Hypergraph) -> RationalMatrix:
    if h.m == 0:
        raise NoHyperedgesError("a hypergraph without hyperedges has no incidence matrix")
    if h.n == 0:
        raise NoHyperedgesError("a hypergraph without vertices has no incidence matrix")
    rows = [[0] * h.m for _ in range(h.n)]
    for j, e in enumerate(h.edges):
        for v in e:
            rows[v][j] = 1
    return RationalMatrix.from_rows(rows)


def incidence_lists(h: Hypergraph) -> list[list[int]]:
    """For each vertex, the indices of the hyperedges containing it."""
    inc: list[list[int]] = [[] for _ in range(h.n)]
    for j, e in enumerate(h.edges):
        for v in e:
            inc[v].append(j)
    return inc


def is_graph(h: Hypergraph) -> bool:
    return all(len(e) == 2 for e in h.edges)


def require_graph(h: Hypergraph) -> None:
    if not is_graph(h):
        raise NotAGraphError("input hypergraph is not a graph (some hyperedge does not have exactly 2 vertices)")


def degrees(h: Hypergraph) -> list[int]:
    deg = [0] * h.n
    for e in h.edges:
        for v in e:
            deg[v] += 1
    return deg


def degree_sequence(h: Hypergraph) -> tuple[int, ...]:
    return tuple(sorted(degrees(h)))


def hyperedge_sizes(h: Hypergraph) -> tuple[int, ...]:
    return tuple(sorted(len(e) for e in h.edges))


def exposed_vertices(h: Hypergraph) -> list[int]:
    return [v for v, d in enumerate(degrees(h)) if d == 0]


def dual(h: Hypergraph) -> Hypergraph:
    if h.m == 0:
        raise NoHyperedgesError("the dual needs at least one hyperedge")
    return Hypergraph(h.m, tuple(tuple(js) for js in incidence_lists(h)))


def two_section(h: Hypergraph) -> Hypergraph:
    pairs = set()
    for e in h.edges:
        pairs.update(combinations(e, 2))
    return Hypergraph(h.n, tuple(sorted(pairs)))


def bipartite_representation(h: Hypergraph) -> Hypergraph:
    """Graph on n + m vertices: vertex i joined to n + j when i lies in hyperedge j."""
    edges = [(v, h.n + j) for j, e in enumerate(h.edges) for v in e]
    edges.sort()
    return Hypergraph(h.n + h.m, tuple(edges))


def adjacency_matrix(g: Hypergraph) -> RationalMatrix:
    require_graph(g)
    rows = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        rows[u][v] += 1
        rows[v][u] += 1
    return RationalMatrix.from_rows(rows, g.n)


def neighbors(g: Hypergraph) -> list[set[int]]:
    require_graph(g)
    nb: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edges:
        nb[u].add(v)
        nb[v].add(u)
    return nb


def open_neighborhood_hypergraph(g: Hypergraph) -> Hypergraph:
    nb = neighbors(g)
    return Hypergraph(g.n, tuple(tuple(sorted(s)) for s in nb))


def closed_neighborhood_hypergraph(g: Hypergraph) -> Hypergraph:
    nb = neighbors(g)
    return Hypergraph(g.n, tuple(tuple(sorted(s | {v})) for v, s in enumerate(nb)))


def _maximal_cliques(n: int, adj: Sequence[set[int]]) -> list[tuple[int, ...]]:
    # Bron-Kerbosch with Tomita pivoting; isolated vertices yield singleton cliques.
    out: list[tuple[int, ...]] = []

    def expand(r: list[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r + [v], p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand([], set(range(n)), set())
    return sorted(out)


def _guard(g: Hypergraph, limit: int | None) -> None:
    limit = default_limit(DEFAULT_SET_LIMIT) if limit is None else limit
    if g.n > limit:
        raise GuardExceeded(
            f"refusing exponential set enumeration on {g.n} vertices (vertex limit {limit}; "
            "raise it with --limit or FRACTISO_LIMIT)"
        )


def clique_hypergraph(g: Hypergraph, limit: int | None = None) -> Hypergraph:
    """Hypergraph whose hyperedges are the maximal cliques of ``g``."""
    _guard(g, limit)
    adj = neighbors(g)
    return Hypergraph(g.n, tuple(_maximal_cliques(g.n, adj)))


def independent_set_hypergraph(g: Hypergraph, limit: int | None = None) -> Hypergraph:
    """Hypergraph whose hyperedges are the maximal independent sets of ``g``."""
    _guard(g, limit)
    adj = neighbors(g)
    everyone = set(range(g.n))
    comp = [everyone - adj[v] - {v} for v in range(g.n)]
    return Hypergraph(g.n, tuple(_maximal_cliques(g.n, comp)))


def disjoint_union(*hs: Hypergraph) -> Hypergraph:
    n = 0
    edges: list[tuple[int, ...]] = []
    for h in hs:
        edges.extend(tuple(v + n for v in e) for e in h.edges)
        n += h.n
    return Hypergraph(n, tuple(edges))


def relabel(h: Hypergraph, vertex_perm: Sequence[int], edge_perm: Sequence[int] | None = None) -> Hypergraph:
    """Rename vertex v to vertex_perm[v]; new edge k is old edge edge_perm[k]."""
    if sorted(vertex_perm) != list(range(h.n)):
        raise HypergraphError("vertex_perm is not a permutation")
    order = range(h.m) if edge_perm is None else edge_perm
    if sorted(order) != list(range(h.m)):
        raise HypergraphError("edge_perm is not a permutation")
    return make(h.n, ([vertex_perm[v] for v in h.edges[k]] for k in order))
