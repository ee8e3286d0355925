"""Named fixtures and random regular graphs."""

from __future__ import annotations

import random

from .hypergraph import Hypergraph, HypergraphError, disjoint_union, dual, make

__all__ = [
    "cycle", "complete", "path", "star", "gem", "disjoint_union",
    "k_uniform_r_regular_fixture", "FIXTURES", "random_regular",
]


def cycle(n: int) -> Hypergraph:
    if n < 3:
        raise HypergraphError("a cycle needs at least 3 vertices")
    return make(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Hypergraph:
    if n < 1:
        raise HypergraphError("a complete graph needs at least 1 vertex")
    return make(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def path(n: int) -> Hypergraph:
    if n < 1:
        raise HypergraphError("a path needs at least 1 vertex")
    return make(n, ((i, i + 1) for i in range(n - 1)))


def star(leaves: int) -> Hypergraph:
    return make(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def gem() -> Hypergraph:
    """Induced path 0-1-2-3 plus the universal vertex 4."""
    return make(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])


# 4-uniform 2-regular pair on 8 vertices, re-indexed from 0.
_H4U = [(1, 2, 3, 4), (3, 4, 5, 6), (5, 6, 7, 8), (1, 2, 7, 8)]
_G4U = [(1, 2, 3, 4), (1, 2, 3, 8), (4, 5, 6, 7), (5, 6, 7, 8)]

FIXTURES = {
    "H4u": lambda: make(8, ([v - 1 for v in e] for e in _H4U)),
    "G4u": lambda: make(8, ([v - 1 for v in e] for e in _G4U)),
    "K4+gem*": lambda: disjoint_union(complete(4), dual(gem())),
    "K4*+gem": lambda: disjoint_union(dual(complete(4)), gem()),
}


def k_uniform_r_regular_fixture(name: str) -> Hypergraph:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise HypergraphError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None


def random_regular(n: int, r: int, seed: int | None = 0, max_tries: int = 1000) -> Hypergraph:
    """Simple r-regular graph on n vertices (Steger-Wormald pairing).

    Half-edges are shuffled and paired; pairs that would make a loop or a
    repeated edge are returned to the pool and re-paired in the next pass.
    An attempt restarts only when the leftover half-edges cannot be paired
    at all.
    """
    if n < 1 or r < 0 or r >= n or (n * r) % 2:
        raise HypergraphError(f"no simple {r}-regular graph on {n} vertices")
    if 2 * r > n - 1:
        # sparse complement is faster to sample
        co = random_regular(n, n - 1 - r, seed, max_tries)
        present = set(co.edges)
        return make(n, ((i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in present))
    rng = random.Random(seed)

    def attempt():
        edges = set()
        stubs = [v for v in range(n) for _ in range(r)]
        while stubs:
            rng.shuffle(stubs)
            left = []
            for a, b in zip(stubs[::2], stubs[1::2]):
                e = (a, b) if a < b else (b, a)
                if a != b and e not in edges:
                    edges.add(e)
                else:
                    left += [a, b]
            pending = sorted(set(left))
            if left and not any((u, w) not in edges for i, u in enumerate(pending) for w in pending[i + 1:]):
                return None
            stubs = left
        return edges

    for _ in range(max_tries):
        edges = attempt()
        if edges is not None:
            return make(n, sorted(edges))
    raise HypergraphError(f"random_regular({n}, {r}) failed after {max_tries} attempts")
