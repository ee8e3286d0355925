"""Equitable partitions of hypergraphs by joint vertex/hyperedge refinement.

Vertices and hyperedges are coloured simultaneously.  Each round a vertex's
new colour is its old colour plus the multiset of colours of its hyperedges,
and a hyperedge's new colour is its old colour plus the multiset of colours of
its vertices.  Signatures are interned to integers by sorting, so colour ids
do not depend on vertex or edge labels.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .hypergraph import Hypergraph, disjoint_union, incidence_lists, require_graph


class NotEquitableError(ValueError):
    pass


@dataclass(frozen=True)
class EquitablePartition:
    vertex_classes: tuple[tuple[int, ...], ...]
    edge_classes: tuple[tuple[int, ...], ...]
    rounds: int = 0

    def vertex_class_of(self) -> list[int]:
        out = [0] * sum(len(c) for c in self.vertex_classes)
        for i, cls in enumerate(self.vertex_classes):
            for v in cls:
                out[v] = i
        return out

    def edge_class_of(self) -> list[int]:
        out = [0] * sum(len(c) for c in self.edge_classes)
        for j, cls in enumerate(self.edge_classes):
            for e in cls:
                out[e] = j
        return out


@dataclass(frozen=True)
class PartitionParameters:
    v: tuple[int, ...]
    a: tuple[int, ...]
    D: tuple[tuple[int, ...], ...]
    U: tuple[tuple[int, ...], ...]

    def as_dict(self) -> dict:
        return {"v": list(self.v), "a": list(self.a), "D": [list(r) for r in self.D], "U": [list(r) for r in self.U]}


def _intern(sigs: Sequence) -> list[int]:
    table = {s: k for k, s in enumerate(sorted(set(sigs)))}
    return [table[s] for s in sigs]


def refine(h: Hypergraph, vertex_colors=None, edge_colors=None) -> tuple[list[int], list[int], int]:
    """Run joint refinement to its fixed point; returns final colours and the round count."""
    inc = incidence_lists(h)
    vc = _intern(list(vertex_colors)) if vertex_colors is not None else [0] * h.n
    ec = _intern(list(edge_colors)) if edge_colors is not None else [0] * h.m
    nv, ne = len(set(vc)), len(set(ec))
    rounds = 0
    while True:
        new_vc = _intern([(vc[v], tuple(sorted(ec[j] for j in inc[v]))) for v in range(h.n)])
        new_ec = _intern([(ec[j], tuple(sorted(vc[u] for u in e))) for j, e in enumerate(h.edges)])
        rounds += 1
        nv2, ne2 = len(set(new_vc)), len(set(new_ec))
        vc, ec = new_vc, new_ec
        # each round refines the previous one, so equal class counts mean a fixed point
        if nv2 == nv and ne2 == ne:
            return vc, ec, rounds
        nv, ne = nv2, ne2


def _classes(colors: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    groups: dict[int, list[int]] = {}
    for x, c in enumerate(colors):
        groups.setdefault(c, []).append(x)
    return tuple(tuple(groups[c]) for c in sorted(groups))


def coarsest_partition(h: Hypergraph) -> EquitablePartition:
    vc, ec, rounds = refine(h)
    return EquitablePartition(_classes(vc), _classes(ec), rounds)


def partition_from_colors(vertex_colors, edge_colors) -> EquitablePartition:
    return EquitablePartition(_classes(_intern(list(vertex_colors))), _classes(_intern(list(edge_colors))))


def parameters(p: EquitablePartition, h: Hypergraph) -> PartitionParameters:
    """Class sizes and the incidence-count matrices D, U; raises if ``p`` is not equitable."""
    vclass = p.vertex_class_of()
    eclass = p.edge_class_of()
    if len(vclass) != h.n or len(eclass) != h.m:
        raise NotEquitableError("partition does not cover the hypergraph")
    s, r = len(p.vertex_classes), len(p.edge_classes)
    D: list[list[int | None]] = [[None] * r for _ in range(s)]
    U: list[list[int | None]] = [[None] * r for _ in range(s)]
    inc = incidence_lists(h)
    for v in range(h.n):
        counts = Counter(eclass[j] for j in inc[v])
        i = vclass[v]
        for j in range(r):
            if D[i][j] is None:
                D[i][j] = counts[j]
            elif D[i][j] != counts[j]:
                raise NotEquitableError(f"vertices of class {i} meet edge class {j} unequally")
    for k, e in enumerate(h.edges):
        counts = Counter(vclass[u] for u in e)
        j = eclass[k]
        for i in range(s):
            if U[i][j] is None:
                U[i][j] = counts[i]
            elif U[i][j] != counts[i]:
                raise NotEquitableError(f"edges of class {j} contain class {i} unequally")
    return PartitionParameters(
        v=tuple(len(c) for c in p.vertex_classes),
        a=tuple(len(c) for c in p.edge_classes),
        D=tuple(tuple(x for x in row) for row in D),
        U=tuple(tuple(x for x in row) for row in U),
    )


def is_equitable(p: EquitablePartition, h: Hypergraph) -> bool:
    try:
        parameters(p, h)
    except NotEquitableError:
        return False
    return True


@dataclass(frozen=True)
class CommonPartition:
    """A common equitable partition, with class k on each side corresponding."""

    params: PartitionParameters
    g_partition: EquitablePartition
    h_partition: EquitablePartition


def common_partition(g: Hypergraph, h: Hypergraph) -> CommonPartition | None:
    """Refine the disjoint union with no side marking; present iff every class splits evenly."""
    vc, ec, _ = refine(disjoint_union(g, h))
    vsplit = _split(vc, g.n)
    esplit = _split(ec, g.m)
    if vsplit is None or esplit is None:
        return None
    gp = EquitablePartition(vsplit[0], esplit[0])
    hp = EquitablePartition(vsplit[1], esplit[1])
    return CommonPartition(parameters(gp, g), gp, hp)


def _split(colors: Sequence[int], cut: int):
    """Per-colour members on each side (second side re-indexed from 0), or None if uneven."""
    left: dict[int, list[int]] = {}
    right: dict[int, list[int]] = {}
    for x, c in enumerate(colors):
        if x < cut:
            left.setdefault(c, []).append(x)
        else:
            right.setdefault(c, []).append(x - cut)
    keys = sorted(set(left) | set(right))
    if any(len(left.get(c, ())) != len(right.get(c, ())) for c in keys):
        return None
    return tuple(tuple(left[c]) for c in keys), tuple(tuple(right[c]) for c in keys)


@dataclass(frozen=True)
class IteratedDegrees:
    """Per-round interned iterated degrees; round 0 is the plain degree."""

    signatures: tuple[tuple[int, ...], ...]
    stable_round: int | None

    @property
    def rounds(self) -> int:
        return len(self.signatures) - 1

    def graph_sequence(self, k: int) -> tuple[int, ...]:
        return tuple(sorted(self.signatures[k]))

    def classes(self, k: int | None = None) -> tuple[tuple[int, ...], ...]:
        k = self.rounds if k is None else k
        return _classes(self.signatures[k])


def _neighbor_lists(g: Hypergraph) -> list[list[int]]:
    nb: list[list[int]] = [[] for _ in range(g.n)]
    for a, b in g.edges:
        nb[a].append(b)
        nb[b].append(a)
    return nb


def iterated_degree_sequence(g: Hypergraph, k: int | None = None) -> IteratedDegrees:
    """Iterated degrees d_1(v), d_2(v), ... up to round ``k`` or until stable.

    d_t(v) is the multiset of d_{t-1}(w) over the neighbours w of v; interning
    keeps every round a flat integer colouring.
    """
    require_graph(g)
    nb = _neighbor_lists(g)
    sigs = [_intern([len(x) for x in nb])]
    stable = None
    while k is None or len(sigs) <= k:
        prev = sigs[-1]
        cur = _intern([tuple(sorted(prev[w] for w in nb[v])) for v in range(g.n)])
        sigs.append(cur)
        if stable is None and len(set(cur)) == len(set(prev)):
            stable = len(sigs) - 1
            if k is None:
                break
    return IteratedDegrees(tuple(tuple(s) for s in sigs), stable)


def same_ultimate_degree_sequence(g: Hypergraph, h: Hypergraph) -> bool:
    """Compare iterated degree sequences of two graphs on a shared interning table."""
    require_graph(g)
    require_graph(h)
    if g.n != h.n:
        return False
    it = iterated_degree_sequence(disjoint_union(g, h))
    for sig in it.signatures:
        if Counter(sig[:g.n]) != Counter(sig[g.n:]):
            return False
    return True
