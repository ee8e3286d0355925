import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import c5_c7, random_graph, random_hypergraph, two_c3
from fractiso.generators import FIXTURES, complete, cycle, gem, path, random_regular, star
from fractiso.hypergraph import NoHyperedgesError, NotAGraphError, make
from fractiso.invariants import (
    InvariantValue,
    alpha_c_f,
    alpha_f,
    chi_f,
    compute,
    gamma_f,
    invariance_suite,
    invariant_report,
    k_f,
    mu_f,
    omega_f,
    p_f,
    perfect_fractional_matching,
    sufficient_pfm_construction,
    tau_f,
    theta_f,
    total_gamma_f,
)

F = Fraction


def test_examples():
    assert k_f(cycle(3)).value == F(3, 2)
    assert alpha_f(cycle(5)).value == F(5, 2)
    assert chi_f(cycle(5)).value == F(5, 2)
    assert gamma_f(complete(4)).value == 1
    assert total_gamma_f(complete(4)).value == F(4, 3)
    assert mu_f(complete(2)).value == 1


@pytest.mark.parametrize("g, omega, chi, alpha, theta, mu, tau, k", [
    (two_c3(), 3, 3, 2, 2, 2, 4, 4),
    (cycle(6), 2, 2, 3, 3, 3, 3, 3),
])
def test_integer_values_on_regular_pair(g, omega, chi, alpha, theta, mu, tau, k):
    n, e = g.n, list(g.edges)
    assert oracles.clique_number(n, e) == omega and oracles.chromatic_number(n, e) == chi
    assert oracles.independence_number(n, e) == alpha and oracles.clique_cover_number(n, e) == theta
    assert oracles.matching_number(n, e) == mu and oracles.vertex_cover_number(n, e) == tau
    assert oracles.covering_number(n, e) == k


def test_fractional_values_on_regular_pair():
    # invariant parameters agree, the clique-based ones do not
    for g in (two_c3(), cycle(6)):
        assert alpha_f(g).value == mu_f(g).value == tau_f(g).value == k_f(g).value == 3
    assert (omega_f(two_c3()).value, theta_f(two_c3()).value) == (3, 2)
    assert (omega_f(cycle(6)).value, theta_f(cycle(6)).value) == (2, 3)


def test_exposed_vertices_give_infinity():
    h = make(3, [[0, 1]])
    assert k_f(h).is_infinite and p_f(h).is_infinite
    assert "exposed" in k_f(h).reason
    assert str(k_f(h)) == "infinity"
    assert total_gamma_f(make(2, [])).is_infinite


def test_empty_hypergraph_is_zero():
    assert k_f(make(0, [])).value == 0 and p_f(make(0, [])).value == 0


def test_dual_parameters_need_edges():
    with pytest.raises(NoHyperedgesError):
        mu_f(make(2, []))
    with pytest.raises(NoHyperedgesError):
        tau_f(make(2, []))


def test_graph_only_parameters():
    with pytest.raises(NotAGraphError):
        alpha_f(FIXTURES["H4u"]())
    with pytest.raises(NotAGraphError):
        chi_f(make(3, [[0, 1, 2]]))


def test_value_formatting():
    assert str(InvariantValue(F(3, 2))) == "3/2"
    assert str(InvariantValue(F(4))) == "4"
    assert InvariantValue(F(1), "a") == InvariantValue(F(1), "b")


def test_four_uniform_pair():
    g, h = FIXTURES["G4u"](), FIXTURES["H4u"]()
    for f in (k_f, p_f, mu_f, tau_f):
        assert f(g) == f(h)
    assert k_f(h).value == 2


# against integer oracles ------------------------------------------------------------

def test_sandwiched_by_integer_parameters():
    rng = random.Random(1)
    for _ in range(40):
        n = rng.randint(2, 7)
        g = random_graph(rng, n, rng.random(), min_degree=1)
        e = list(g.edges)
        assert alpha_f(g).value >= oracles.independence_number(n, e)
        assert omega_f(g).value >= oracles.clique_number(n, e)
        assert chi_f(g).value <= oracles.chromatic_number(n, e)
        assert theta_f(g).value <= oracles.clique_cover_number(n, e)
        assert mu_f(g).value >= oracles.matching_number(n, e)
        assert tau_f(g).value <= oracles.vertex_cover_number(n, e)
        # LP duality pairs
        assert omega_f(g) == chi_f(g) and alpha_c_f(g) == theta_f(g)
        assert mu_f(g) == tau_f(g)
        # alpha_f of a graph without exposed vertices sits between n/2 and n
        assert F(n, 2) <= alpha_f(g).value <= n


def test_hypergraph_covering_against_oracle():
    rng = random.Random(2)
    for _ in range(40):
        h = random_hypergraph(rng, rng.randint(1, 6), rng.randint(1, 6))
        cover = oracles.covering_number(h.n, list(h.edges))
        if cover is None:
            assert k_f(h).is_infinite
            continue
        assert k_f(h).value <= cover
        assert p_f(h).value >= oracles.packing_number(h.n, list(h.edges))
        assert k_f(h) == p_f(h)


def test_lp_values_against_vertex_enumeration():
    from fractiso.invariants import covering_lp, packing_lp

    rng = random.Random(3)
    for _ in range(20):
        h = random_hypergraph(rng, rng.randint(1, 4), rng.randint(1, 4))
        if k_f(h).is_infinite:
            continue
        c, p = covering_lp(h), packing_lp(h)
        want_c = oracles.lp_by_vertices("min", c.objective, [(r.coeffs, r.relation, r.rhs) for r in c.constraints])
        want_p = oracles.lp_by_vertices("max", p.objective, [(r.coeffs, r.relation, r.rhs) for r in p.constraints])
        assert k_f(h).value == want_c and p_f(h).value == want_p


# perfect fractional matchings ----------------------------------------------------

def test_perfect_fractional_matching():
    ok, w = perfect_fractional_matching(cycle(6))
    assert ok and sum(w) == 3
    assert not perfect_fractional_matching(make(3, [[0, 1]]))[0]
    ok, w = perfect_fractional_matching(cycle(3))
    assert ok and w == (F(1, 2),) * 3
    assert not perfect_fractional_matching(star(3))[0]
    assert perfect_fractional_matching(make(0, [])) == (True, ())


def test_sufficient_construction():
    assert sufficient_pfm_construction(two_c3()) == (F(1, 2),) * 6
    assert sufficient_pfm_construction(cycle(6)) == (F(1, 2),) * 6
    assert sufficient_pfm_construction(star(3)) is None
    assert sufficient_pfm_construction(path(2)) == (F(1),)


def test_pfm_weights_are_a_matching():
    rng = random.Random(4)
    for _ in range(30):
        g = random_graph(rng, rng.randint(2, 8), 0.5)
        ok, w = perfect_fractional_matching(g)
        assert ok == (g.m > 0 and mu_f(g).value == F(g.n, 2))
        if ok:
            load = [F(0)] * g.n
            for (a, b), x in zip(g.edges, w):
                assert x >= 0
                load[a] += x
                load[b] += x
            assert load == [F(1)] * g.n


# invariance -----------------------------------------------------------------------

def test_invariance_suite_regular_pair():
    rep = invariance_suite(two_c3(), cycle(6))
    assert rep.holds
    row = rep.row("chif")
    assert not row.asserted and not row.equal
    assert row.g_value.value == 3 and row.h_value.value == 2


def test_invariance_suite_c5c7_c12():
    rep = invariance_suite(c5_c7(), cycle(12))
    assert rep.holds
    assert rep.row("alphaf").g_value.value == 6


def test_invariance_suite_random_regular_and_hypergraphs():
    for seed in range(5):
        assert invariance_suite(random_regular(10, 3, seed=seed), random_regular(10, 3, seed=seed + 50)).holds
    assert invariance_suite(FIXTURES["G4u"](), FIXTURES["H4u"]()).holds


def test_invariance_suite_rejects_non_isomorphic():
    with pytest.raises(ValueError):
        invariance_suite(cycle(4), path(4))


def _edge_orders():
    return st.integers(2, 7).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 10**6)))


@settings(max_examples=40, deadline=None)
@given(_edge_orders())
def test_independent_of_edge_order(arg):
    n, seed = arg
    rng = random.Random(seed)
    g = random_graph(rng, n, 0.6)
    edges = list(g.edges)
    rng.shuffle(edges)
    h = make(n, edges)
    for name in ("kf", "pf", "alphaf", "gammaf", "totalgammaf", "chif", "thetaf"):
        assert compute(name, g) == compute(name, h), name


# report and lookup -------------------------------------------------------------------

def test_report_contents():
    rep = invariant_report(gem())
    assert set(rep.values) == {"kf", "pf", "muf", "tauf", "alphaf", "chif", "omegaf", "alphacf", "thetaf",
                               "gammaf", "totalgammaf"}
    assert all("LP" in v for v in rep.provenance.values())
    assert "kf = " in rep.lines()[0]
    hyper = invariant_report(FIXTURES["H4u"]())
    assert set(hyper.values) == {"kf", "pf", "muf", "tauf"}
    assert "muf" not in invariant_report(make(2, [])).values
    assert "chif" not in invariant_report(gem(), include_exponential=False).values
    assert invariant_report(make(3, [[0, 1]])).as_dict()["kf"]["value"] == "infinity"


def test_compute_aliases_and_unknown():
    g = complete(4)
    assert compute("Gammaf", g) == compute("totalgammaf", g) == total_gamma_f(g)
    assert compute("alpha_c_f", g) == alpha_c_f(g)
    with pytest.raises(ValueError):
        compute("zetaf", g)
