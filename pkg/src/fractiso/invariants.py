"""Fractional covering, packing and derived graph parameters as exact rationals."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import lp
from .hypergraph import (
    Hypergraph,
    NoHyperedgesError,
    clique_hypergraph,
    closed_neighborhood_hypergraph,
    dual,
    exposed_vertices,
    incidence_lists,
    independent_set_hypergraph,
    is_graph,
    open_neighborhood_hypergraph,
    require_graph,
)
from .iso import iso_by_partition
from .partition import coarsest_partition


@dataclass(frozen=True)
class InvariantValue:
    """A finite exact value, or infinity (``value is None``) with the reason."""

    value: Fraction | None
    reason: str = field(default="", compare=False)

    @classmethod
    def infinite(cls, reason: str) -> "InvariantValue":
        return cls(None, reason)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        if self.value is None:
            return "infinity"
        v = self.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def covering_lp(h: Hypergraph) -> lp.LPProblem:
    """minimize 1.x subject to M x >= 1 (one variable per hyperedge)."""
    inc = incidence_lists(h)
    rows = []
    for v in range(h.n):
        row = [0] * h.m
        for j in inc[v]:
            row[j] = 1
        rows.append(lp.Constraint(tuple(row), lp.GE, 1))
    return lp.LPProblem(lp.MINIMIZE, (1,) * h.m, tuple(rows))


def packing_lp(h: Hypergraph) -> lp.LPProblem:
    """maximize 1.y subject to M^t y <= 1 (one variable per vertex)."""
    rows = []
    for e in h.edges:
        row = [0] * h.n
        for v in e:
            row[v] = 1
        rows.append(lp.Constraint(tuple(row), lp.LE, 1))
    return lp.LPProblem(lp.MAXIMIZE, (1,) * h.n, tuple(rows))


def _exposed_reason(h: Hypergraph) -> str | None:
    exposed = exposed_vertices(h)
    if exposed:
        return f"vertex {exposed[0]} is exposed (in no hyperedge)"
    return None


def _solve_covering(h: Hypergraph) -> tuple[InvariantValue, tuple[Fraction, ...] | None]:
    if h.n == 0:
        return InvariantValue(Fraction(0)), ()
    why = _exposed_reason(h)
    if why:
        return InvariantValue.infinite(why + "; no covering exists"), None
    out = lp.solve(covering_lp(h))
    assert isinstance(out, lp.Optimal), out
    return InvariantValue(out.value), out.solution


def _solve_packing(h: Hypergraph) -> tuple[InvariantValue, tuple[Fraction, ...] | None]:
    if h.n == 0:
        return InvariantValue(Fraction(0)), ()
    why = _exposed_reason(h)
    if why:
        return InvariantValue.infinite(why + "; its packing weight is unbounded"), None
    out = lp.solve(packing_lp(h))
    assert isinstance(out, lp.Optimal), out
    return InvariantValue(out.value), out.solution


def k_f(h: Hypergraph) -> InvariantValue:
    return _solve_covering(h)[0]


def p_f(h: Hypergraph) -> InvariantValue:
    return _solve_packing(h)[0]


def _require_edges(h: Hypergraph, name: str) -> None:
    if h.m == 0:
        raise NoHyperedgesError(f"{name} needs at least one hyperedge")


def mu_f(h: Hypergraph) -> InvariantValue:
    _require_edges(h, "mu_f")
    return p_f(dual(h))


def tau_f(h: Hypergraph) -> InvariantValue:
    _require_edges(h, "tau_f")
    return k_f(dual(h))


def alpha_f(g: Hypergraph) -> InvariantValue:
    require_graph(g)
    return p_f(g)


def chi_f(g: Hypergraph, limit: int | None = None) -> InvariantValue:
    require_graph(g)
    return k_f(independent_set_hypergraph(g, limit))


def omega_f(g: Hypergraph, limit: int | None = None) -> InvariantValue:
    require_graph(g)
    return p_f(independent_set_hypergraph(g, limit))


def alpha_c_f(g: Hypergraph, limit: int | None = None) -> InvariantValue:
    require_graph(g)
    return p_f(clique_hypergraph(g, limit))


def theta_f(g: Hypergraph, limit: int | None = None) -> InvariantValue:
    require_graph(g)
    return k_f(clique_hypergraph(g, limit))


def gamma_f(g: Hypergraph) -> InvariantValue:
    return k_f(closed_neighborhood_hypergraph(g))


def total_gamma_f(g: Hypergraph) -> InvariantValue:
    return k_f(open_neighborhood_hypergraph(g))


def sufficient_pfm_construction(g: Hypergraph) -> tuple[Fraction, ...] | None:
    """Edge weights 1/r_i inside each class of the coarsest equitable partition.

    Applies only when every class induces an r_i-regular subgraph with
    r_i > 0; otherwise returns None.  The weights form a fractional matching
    of total weight n/2, which is checked before returning.
    """
    require_graph(g)
    cls = coarsest_partition(g).vertex_class_of()
    internal = [0] * g.n
    for a, b in g.edges:
        if cls[a] == cls[b]:
            internal[a] += 1
            internal[b] += 1
    r: dict[int, int] = {}
    for v in range(g.n):
        r.setdefault(cls[v], internal[v])
        if r[cls[v]] != internal[v] or internal[v] == 0:
            return None
    weights = tuple(Fraction(1, r[cls[a]]) if cls[a] == cls[b] else Fraction(0) for a, b in g.edges)
    load = [Fraction(0)] * g.n
    for (a, b), w in zip(g.edges, weights):
        load[a] += w
        load[b] += w
    assert all(x <= 1 for x in load) and sum(weights) == Fraction(g.n, 2)
    return weights


def perfect_fractional_matching(g: Hypergraph) -> tuple[bool, tuple[Fraction, ...] | None]:
    """Whether mu_f(g) = n/2, with an edge-weight assignment when it does.

    The constructive assignment is preferred when it applies; otherwise the
    optimal LP matching is returned.
    """
    require_graph(g)
    if g.m == 0:
        return g.n == 0, (() if g.n == 0 else None)
    val, sol = _solve_packing(dual(g))
    if val.is_infinite or val.value != Fraction(g.n, 2):
        return False, None
    return True, sufficient_pfm_construction(g) or sol


@dataclass(frozen=True)
class ParamSpec:
    name: str
    func: Callable
    graph_only: bool
    needs_edges: bool
    exponential: bool
    provenance: str


PARAMS: dict[str, ParamSpec] = {
    p.name: p
    for p in [
        ParamSpec("kf", k_f, False, False, False, "covering LP min 1.x, M x >= 1 on H"),
        ParamSpec("pf", p_f, False, False, False, "packing LP max 1.y, M^t y <= 1 on H"),
        ParamSpec("muf", mu_f, False, True, False, "packing LP on the dual hypergraph"),
        ParamSpec("tauf", tau_f, False, True, False, "covering LP on the dual hypergraph"),
        ParamSpec("alphaf", alpha_f, True, False, False, "packing LP on G as a 2-uniform hypergraph"),
        ParamSpec("chif", chi_f, True, False, True, "covering LP on the maximal-independent-set hypergraph"),
        ParamSpec("omegaf", omega_f, True, False, True, "packing LP on the maximal-independent-set hypergraph"),
        ParamSpec("alphacf", alpha_c_f, True, False, True, "packing LP on the maximal-clique hypergraph"),
        ParamSpec("thetaf", theta_f, True, False, True, "covering LP on the maximal-clique hypergraph"),
        ParamSpec("gammaf", gamma_f, True, False, False, "covering LP on the closed-neighbourhood hypergraph"),
        ParamSpec("totalgammaf", total_gamma_f, True, False, False, "covering LP on the open-neighbourhood hypergraph"),
    ]
}
PARAM_ALIASES = {"Gammaf": "totalgammaf", "alpha_c_f": "alphacf"}

INVARIANT_HYPERGRAPH = ("kf", "pf", "muf", "tauf")
INVARIANT_GRAPH = ("alphaf", "gammaf", "totalgammaf")
NON_INVARIANT_GRAPH = ("chif", "omegaf", "alphacf", "thetaf")


def compute(name: str, h: Hypergraph, limit: int | None = None) -> InvariantValue:
    name = PARAM_ALIASES.get(name, name)
    try:
        spec = PARAMS[name]
    except KeyError:
        raise ValueError(f"unknown parameter {name!r}; known: {', '.join(PARAMS)}") from None
    if spec.exponential:
        return spec.func(h, limit)
    return spec.func(h)


@dataclass(frozen=True)
class InvariantReport:
    values: dict[str, InvariantValue]
    provenance: dict[str, str]

    def lines(self) -> list[str]:
        return [f"{k} = {v}" for k, v in self.values.items()]

    def as_dict(self) -> dict:
        return {
            k: {"value": str(v), "provenance": self.provenance[k], **({"reason": v.reason} if v.reason else {})}
            for k, v in self.values.items()
        }


def invariant_report(h: Hypergraph, limit: int | None = None, include_exponential: bool = True) -> InvariantReport:
    """Every parameter that applies to ``h``."""
    graph = is_graph(h)
    values, prov = {}, {}
    for name, spec in PARAMS.items():
        if spec.graph_only and not graph:
            continue
        if spec.needs_edges and h.m == 0:
            continue
        if spec.exponential and not include_exponential:
            continue
        values[name] = compute(name, h, limit)
        prov[name] = spec.provenance
    return InvariantReport(values, prov)


@dataclass(frozen=True)
class InvarianceRow:
    name: str
    g_value: InvariantValue
    h_value: InvariantValue
    asserted: bool

    @property
    def equal(self) -> bool:
        return self.g_value == self.h_value


@dataclass(frozen=True)
class InvarianceReport:
    rows: tuple[InvarianceRow, ...]

    @property
    def violations(self) -> list[InvarianceRow]:
        return [r for r in self.rows if r.asserted and not r.equal]

    @property
    def holds(self) -> bool:
        return not self.violations

    def row(self, name: str) -> InvarianceRow:
        return next(r for r in self.rows if r.name == name)


def invariance_suite(g: Hypergraph, h: Hypergraph, limit: int | None = None,
                     include_exponential: bool = True) -> InvarianceReport:
    """Compare the parameters of two fractionally isomorphic hypergraphs.

    Invariant parameters are asserted equal; chi_f, omega_f, alpha^c_f and
    theta_f are reported side by side without any expectation.
    """
    if not iso_by_partition(g, h).result:
        raise ValueError("invariance_suite needs fractionally isomorphic inputs")
    names = [x for x in INVARIANT_HYPERGRAPH if g.m or not PARAMS[x].needs_edges]
    if is_graph(g):
        names += INVARIANT_GRAPH
        if include_exponential:
            names += NON_INVARIANT_GRAPH
    rows = []
    for name in names:
        asserted = name not in NON_INVARIANT_GRAPH
        rows.append(InvarianceRow(name, compute(name, g, limit), compute(name, h, limit), asserted))
    return InvarianceReport(tuple(rows))
