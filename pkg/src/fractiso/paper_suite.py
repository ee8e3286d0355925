"""Scripted table of reference fixtures with expected and computed values.

Each check computes a value with the library and compares it to the value
printed in the source text.  ``run_suite`` returns one row per check.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .generators import FIXTURES, complete, cycle, gem, random_regular
from .hypergraph import (
    Hypergraph,
    bipartite_representation,
    degree_sequence,
    degrees,
    disjoint_union,
    dual,
    hyperedge_sizes,
    incidence_matrix,
    is_graph,
    make,
    two_section,
)
from .invariants import (
    alpha_c_f,
    chi_f,
    gamma_f,
    invariance_suite,
    k_f,
    omega_f,
    p_f,
    sufficient_pfm_construction,
    theta_f,
    total_gamma_f,
)
from .iso import (
    adjacency_lp_constraints,
    derived_iso_checks,
    graph_iso_by_adjacency_lp,
    iso_by_lp,
    iso_by_partition,
    verify_witness,
)
from .lp import feasible
from .partition import coarsest_partition, common_partition, parameters, same_ultimate_degree_sequence
from .rational import RationalMatrix


@dataclass(frozen=True)
class SuiteRow:
    name: str
    expected: str
    computed: str

    @property
    def ok(self) -> bool:
        return self.expected == self.computed


def two_c3() -> Hypergraph:
    return disjoint_union(cycle(3), cycle(3))


def c5_c7() -> Hypergraph:
    return disjoint_union(cycle(5), cycle(7))


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (list, tuple)):
        return "{" + ",".join(_fmt(v) for v in x) + "}"
    return str(x)


def bipartite_side_swap_equal(h1: Hypergraph, h2: Hypergraph) -> bool:
    """B of (h1 + dual h2) equals B of (dual h1 + h2) under the explicit side swap.

    In the first graph the vertex side lists h1's vertices then h2's edges and
    the edge side lists h1's edges then h2's vertices; the second graph lists
    the same objects with the roles exchanged.
    """
    left = bipartite_representation(disjoint_union(h1, dual(h2)))
    right = bipartite_representation(disjoint_union(dual(h1), h2))
    n1, m1, n2, m2 = h1.n, h1.m, h2.n, h2.m
    # position in `left` -> position in `right`
    mapping = {}
    for v in range(n1):
        mapping[v] = m1 + n2 + v                   # h1 vertex: an edge of dual(h1)
    for j in range(m2):
        mapping[n1 + j] = m1 + n2 + n1 + j         # h2 edge: an edge of h2
    for j in range(m1):
        mapping[n1 + m2 + j] = j                   # h1 edge: a vertex of dual(h1)
    for v in range(n2):
        mapping[n1 + m2 + m1 + v] = m1 + v         # h2 vertex: a vertex of h2
    moved = sorted(tuple(sorted((mapping[a], mapping[b]))) for a, b in left.edges)
    return left.n == right.n and moved == sorted(right.edges)


def _uniform_regular(h: Hypergraph) -> str:
    return f"sizes={_fmt(sorted(set(hyperedge_sizes(h))))} degrees={_fmt(sorted(set(degree_sequence(h))))}"


def _block(w_matrix: RationalMatrix) -> str:
    vals = sorted(set(w_matrix.entries))
    return _fmt(vals)


def _checks() -> list[tuple[str, str, Callable[[], object]]]:
    H = FIXTURES["H4u"]
    G = FIXTURES["G4u"]
    A = FIXTURES["K4+gem*"]
    B = FIXTURES["K4*+gem"]

    def two_section_degrees(h):
        d = degree_sequence(two_section(h))
        return {k: d.count(k) for k in sorted(set(d))}

    def inc_sums():
        M = incidence_matrix(H())
        return f"{M.rows}x{M.cols} col={_fmt(sorted(set(M.col_sums())))} row={_fmt(sorted(set(M.row_sums())))}"

    def params_h():
        return parameters(coarsest_partition(H()), H()).as_dict()

    def common_2c3_c6():
        c = common_partition(two_c3(), cycle(6))
        return None if c is None else c.params.as_dict()

    def adjacency_feasible():
        nv, cons = adjacency_lp_constraints(two_c3(), cycle(6))
        return feasible(cons, nv) is not None

    def lp_witness(g, h):
        v = iso_by_lp(g, h)
        return v.result and verify_witness(g, h, v.witness)

    def block_witness(g, h):
        w = iso_by_partition(g, h).witness
        return f"S1{_block(w.S1)} S2{_block(w.S2)} verified={_fmt(verify_witness(g, h, w))}"

    def derived(g, h):
        d = derived_iso_checks(g, h)
        return f"duals={_fmt(d.duals_iso)} B={_fmt(d.bipartite_iso)} graphs={_fmt(d.g_is_graph)}/{_fmt(d.h_is_graph)}"

    def regular_pair():
        return graph_iso_by_adjacency_lp(random_regular(10, 3, seed=1), random_regular(10, 3, seed=2)).result

    def exposed():
        h = make(3, [[0, 1]])
        return f"k_f={k_f(h)} p_f={p_f(h)}"

    def chi_pair():
        return f"{chi_f(two_c3())}/{omega_f(two_c3())} vs {chi_f(cycle(6))}/{omega_f(cycle(6))}"

    def clique_pair():
        return f"{alpha_c_f(two_c3())}/{theta_f(two_c3())} vs {alpha_c_f(cycle(6))}/{theta_f(cycle(6))}"

    def invariance():
        r = invariance_suite(two_c3(), cycle(6))
        chi = r.row("chif")
        return f"holds={_fmt(r.holds)} chif={chi.g_value}/{chi.h_value}"

    return [
        ("H is 4-uniform 2-regular", "sizes={4} degrees={2}", lambda: _uniform_regular(H())),
        ("G is 4-uniform 2-regular", "sizes={4} degrees={2}", lambda: _uniform_regular(G())),
        ("incidence matrix of H", "8x4 col={4} row={2}", inc_sums),
        ("H is not a graph", "false", lambda: is_graph(H())),
        ("2-section of H is 5-regular", "{5: 8}", lambda: two_section_degrees(H())),
        ("2-section of G: six of degree 4, two of degree 6", "{4: 6, 6: 2}", lambda: two_section_degrees(G())),
        ("B(K4+gem*) = B(K4*+gem)", "true", lambda: bipartite_side_swap_equal(complete(4), gem())),
        ("degrees of K4+gem*", "{2,2,2,2,2,2,2,3,3,3,3}", lambda: degree_sequence(A())),
        ("degrees of K4*+gem", "{2,2,2,2,2,2,2,2,3,3,4}", lambda: degree_sequence(B())),
        ("coarsest partition of C6", "1 vertex class, 1 edge class",
         lambda: "{} vertex class, {} edge class".format(*map(len, (coarsest_partition(cycle(6)).vertex_classes,
                                                                     coarsest_partition(cycle(6)).edge_classes)))),
        ("parameters of H", str({"v": [8], "a": [4], "D": [[2]], "U": [[4]]}), params_h),
        ("common partition (2C3, C6)", str({"v": [6], "a": [6], "D": [[2]], "U": [[2]]}), common_2c3_c6),
        ("common partition (G, H) present", "true", lambda: common_partition(G(), H()) is not None),
        ("common partition of the 2-sections", "false",
         lambda: common_partition(two_section(G()), two_section(H())) is not None),
        ("ultimate degree sequences of 2C3 and C6 agree", "true",
         lambda: same_ultimate_degree_sequence(two_c3(), cycle(6))),
        ("2C3 ~f C6 (partition)", "true", lambda: iso_by_partition(two_c3(), cycle(6)).result),
        ("C5+C7 ~f C12 (partition)", "true", lambda: iso_by_partition(c5_c7(), cycle(12)).result),
        ("2C3 ~f C6 (LP, verified witness)", "true", lambda: lp_witness(two_c3(), cycle(6))),
        ("C5+C7 ~f C12 (LP, verified witness)", "true", lambda: lp_witness(c5_c7(), cycle(12))),
        ("G ~f H 4-uniform (LP, verified witness)", "true", lambda: lp_witness(G(), H())),
        ("G ~f H 4-uniform (partition)", "true", lambda: iso_by_partition(G(), H()).result),
        ("2-sections of G, H not ~f", "false", lambda: iso_by_partition(two_section(G()), two_section(H())).result),
        ("K4+gem* vs K4*+gem not ~f (LP)", "false", lambda: iso_by_lp(A(), B()).result),
        ("K4+gem* vs K4*+gem not ~f (partition)", "false", lambda: iso_by_partition(A(), B()).result),
        ("two 3-regular 10-vertex graphs ~f (adjacency LP)", "true", regular_pair),
        ("C6 ~f 2C3 (adjacency LP)", "true", lambda: graph_iso_by_adjacency_lp(cycle(6), two_c3()).result),
        ("A_{2C3} S = S A_{C6} feasible", "true", adjacency_feasible),
        ("block witness (2C3, C6)", "S1{1/6} S2{1/6} verified=true", lambda: block_witness(two_c3(), cycle(6))),
        ("block witness (G, H) 4-uniform", "S1{1/8} S2{1/4} verified=true", lambda: block_witness(G(), H())),
        ("derived checks (2C3, C6)", "duals=true B=true graphs=true/true", lambda: derived(two_c3(), cycle(6))),
        ("derived checks (G, H) 4-uniform", "duals=true B=true graphs=false/false", lambda: derived(G(), H())),
        ("B's of the counterexample ~f", "true",
         lambda: iso_by_partition(bipartite_representation(A()), bipartite_representation(B())).result),
        ("exposed vertex gives infinity", "k_f=infinity p_f=infinity", exposed),
        ("chi_f/omega_f of 2C3 vs C6", "3/3 vs 2/2", chi_pair),
        ("alpha^c_f/theta_f of 2C3 vs C6", "2/2 vs 3/3", clique_pair),
        ("gamma_f(C12), Gamma_f(C12)", "4, 6", lambda: f"{gamma_f(cycle(12))}, {total_gamma_f(cycle(12))}"),
        ("gamma_f(C5+C7), Gamma_f(C5+C7)", "4, 6", lambda: f"{gamma_f(c5_c7())}, {total_gamma_f(c5_c7())}"),
        ("1/r_i matching on 2C3", "{1/2}", lambda: _fmt(sorted(set(sufficient_pfm_construction(two_c3()))))),
        ("invariance suite (2C3, C6)", "holds=true chif=3/2", invariance),
    ]


def _run(check) -> SuiteRow:
    name, expected, fn = check
    try:
        got = fn()
    except Exception as exc:  # noqa: BLE001 - a crashing row is reported, not raised
        return SuiteRow(name, expected, f"error: {type(exc).__name__}: {exc}")
    return SuiteRow(name, expected, got if isinstance(got, str) else _fmt(got))


def run_suite(workers: int = 4) -> list[SuiteRow]:
    checks = _checks()
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run, checks))


def format_table(rows: list[SuiteRow]) -> str:
    w = max(len(r.name) for r in rows)
    lines = [f"{'check':<{w}}  status  expected | computed"]
    for r in rows:
        lines.append(f"{r.name:<{w}}  {'PASS' if r.ok else 'FAIL':<6}  {r.expected} | {r.computed}")
    failed = sum(not r.ok for r in rows)
    lines.append(f"{len(rows) - failed}/{len(rows)} checks passed")
    return "\n".join(lines)
