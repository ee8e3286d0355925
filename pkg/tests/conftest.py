import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fractiso.generators import FIXTURES, complete, cycle, gem, path, star  # noqa: E402
from fractiso.hypergraph import Hypergraph, disjoint_union, make, relabel  # noqa: E402


def two_c3() -> Hypergraph:
    return disjoint_union(cycle(3), cycle(3))


def c5_c7() -> Hypergraph:
    return disjoint_union(cycle(5), cycle(7))


def corpus() -> dict[str, Hypergraph]:
    """Named fixtures shared by many tests (graphs and hypergraphs)."""
    out = {
        "C3": cycle(3),
        "C4": cycle(4),
        "C5": cycle(5),
        "C6": cycle(6),
        "2C3": two_c3(),
        "C5+C7": c5_c7(),
        "C12": cycle(12),
        "K2": complete(2),
        "K4": complete(4),
        "P4": path(4),
        "star3": star(3),
        "gem": gem(),
        "K2+K1": make(3, [[0, 1]]),
        "empty2": make(2, []),
        "edge012": make(3, [[0, 1, 2]]),
        "with-empty-edge": make(4, [[0, 1], [], [1, 2, 3], [0, 3]]),
        "repeated-edge": make(3, [[0, 1], [0, 1], [1, 2], [0, 2]]),
        "mixed": make(6, [[0, 1, 2], [2, 3], [3, 4, 5], [0, 5], [1, 4]]),
    }
    for name, fn in FIXTURES.items():
        out[name] = fn()
    return out


def random_graph(rng: random.Random, n: int, p: float, min_degree: int = 0) -> Hypergraph:
    edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    deg = [0] * n
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    for v in range(n):
        while deg[v] < min_degree and n > 1:
            w = rng.randrange(n)
            e = (min(v, w), max(v, w))
            if w != v and e not in edges:
                edges.append(e)
                deg[v] += 1
                deg[w] += 1
    return make(n, edges)


def random_hypergraph(rng: random.Random, n: int, m: int, max_size: int = 4) -> Hypergraph:
    return make(n, [rng.sample(range(n), rng.randint(1, min(max_size, n))) for _ in range(m)])


def edge_swapped(g: Hypergraph, rng: random.Random, swaps: int) -> Hypergraph:
    """Degree-preserving double edge swaps; keeps the graph simple."""
    edges = [tuple(e) for e in g.edges]
    present = set(edges)
    for _ in range(swaps * 20):
        if swaps == 0 or len(edges) < 2:
            break
        i, j = rng.sample(range(len(edges)), 2)
        (a, b), (c, d) = edges[i], edges[j]
        if rng.random() < 0.5:
            c, d = d, c
        e1, e2 = tuple(sorted((a, d))), tuple(sorted((c, b)))
        if len({a, b, c, d}) < 4 or e1 in present or e2 in present:
            continue
        present -= {edges[i], edges[j]}
        present |= {e1, e2}
        edges[i], edges[j] = e1, e2
        swaps -= 1
    return make(g.n, edges)


def hyperedge_swapped(h: Hypergraph, rng: random.Random, swaps: int) -> Hypergraph:
    """Exchange a vertex between two hyperedges; keeps degrees and hyperedge sizes."""
    edges = [set(e) for e in h.edges]
    for _ in range(swaps * 20):
        if swaps == 0 or len(edges) < 2:
            break
        i, j = rng.sample(range(len(edges)), 2)
        a_only, b_only = edges[i] - edges[j], edges[j] - edges[i]
        if not a_only or not b_only:
            continue
        x, y = rng.choice(sorted(a_only)), rng.choice(sorted(b_only))
        edges[i] = (edges[i] - {x}) | {y}
        edges[j] = (edges[j] - {y}) | {x}
        swaps -= 1
    return make(h.n, edges)


def shuffled(h: Hypergraph, rng: random.Random) -> Hypergraph:
    vp = list(range(h.n))
    ep = list(range(h.m))
    rng.shuffle(vp)
    rng.shuffle(ep)
    return relabel(h, vp, ep)


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    mod = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
