from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from fractiso import lp
from fractiso.lp import (
    EQ,
    GE,
    LE,
    MAXIMIZE,
    MINIMIZE,
    Infeasible,
    LPProblem,
    Optimal,
    Unbounded,
    constraint,
    dual_of,
    feasible,
    solve,
    verify_duality,
)


def triangle_packing():
    rows = [((1, 1, 0), LE, 1), ((0, 1, 1), LE, 1), ((1, 0, 1), LE, 1)]
    return LPProblem(MAXIMIZE, (1, 1, 1), rows)


def test_triangle_packing_is_three_halves():
    out = solve(triangle_packing())
    assert isinstance(out, Optimal)
    assert out.value == Fraction(3, 2)
    assert out.solution == (Fraction(1, 2),) * 3


def test_triangle_packing_against_vertex_enumeration():
    p = triangle_packing()
    want = oracles.lp_by_vertices("max", p.objective, [(c.coeffs, c.relation, c.rhs) for c in p.constraints])
    assert want == Fraction(3, 2) == solve(p).value


def test_results_are_fractions():
    out = solve(triangle_packing())
    assert all(type(x) is Fraction for x in out.solution)
    assert type(out.value) is Fraction


def test_infeasible():
    p = LPProblem(MINIMIZE, (1, 1), [((1, 1), LE, 1), ((1, 1), GE, 2)])
    assert isinstance(solve(p), Infeasible)


def test_unbounded():
    p = LPProblem(MAXIMIZE, (1, 0), [((1, -1), LE, 1)])
    assert isinstance(solve(p), Unbounded)


def test_equality_and_negative_rhs():
    # x - y = -1, x + y <= 3, maximize x  ->  x = 1, y = 2
    p = LPProblem(MAXIMIZE, (1, 0), [((1, -1), EQ, -1), ((1, 1), LE, 3)])
    out = solve(p)
    assert out.value == 1 and out.solution == (1, 2)


def test_zero_rows():
    ok = LPProblem(MINIMIZE, (1,), [((0,), LE, 5), ((0,), EQ, 0), ((1,), GE, 2)])
    assert solve(ok).value == 2
    bad = LPProblem(MINIMIZE, (1,), [((0,), GE, 1)])
    assert isinstance(solve(bad), Infeasible)


def test_zero_equality_with_tight_bound():
    p = LPProblem(MINIMIZE, (0,), [((0,), EQ, 0), ((1,), LE, 0)])
    assert solve(p).value == 0
    assert oracles.lp_by_vertices(p.sense, p.objective, [(c.coeffs, c.relation, c.rhs) for c in p.constraints]) == 0


def test_redundant_equalities():
    rows = [((1, 1, 0), EQ, 1), ((2, 2, 0), EQ, 2), ((0, 1, 1), EQ, 1), ((1, 2, 1), EQ, 2)]
    out = solve(LPProblem(MAXIMIZE, (1, 0, 1), rows))
    assert out.value == 2 and out.solution == (1, 0, 1)


def test_no_constraints():
    assert solve(LPProblem(MINIMIZE, (1, 2))).value == 0
    assert isinstance(solve(LPProblem(MAXIMIZE, (1, 0))), Unbounded)


def test_rejects_floats_and_bad_input():
    with pytest.raises(TypeError):
        constraint((0.5, 1), LE, 1)
    with pytest.raises(ValueError):
        LPProblem("argmin", (1,))
    with pytest.raises(ValueError):
        LPProblem(MINIMIZE, (1, 1), [((1,), LE, 1)])
    with pytest.raises(ValueError):
        constraint((1,), "<", 1)


def test_string_rationals_accepted():
    p = LPProblem(MAXIMIZE, ("1/3",), [(("2/3",), LE, "1/2")])
    assert solve(p).value == Fraction(1, 4)


def test_feasible():
    x = feasible([constraint((1, 1), EQ, 1), constraint((1, -1), EQ, 0)])
    assert x == (Fraction(1, 2), Fraction(1, 2))
    assert feasible([constraint((1,), LE, -1)]) is None
    assert feasible([], nvars=2) == (0, 0)
    with pytest.raises(ValueError):
        feasible([])


def test_dual_and_verify_duality():
    p = triangle_packing()
    d = dual_of(p)
    assert d.sense == MINIMIZE and d.nvars == 3
    dv = solve(d).value
    check = verify_duality(p, dv)
    assert check and check.primal.value == dv == Fraction(3, 2)
    assert not verify_duality(p, Fraction(2))
    assert not verify_duality(LPProblem(MAXIMIZE, (1,)), 0)
    assert not verify_duality(p, None)


def test_degenerate_problem_terminates():
    # the classic Beale example cycles under the textbook largest-coefficient rule
    p = LPProblem(
        MINIMIZE,
        (Fraction(-3, 4), 150, Fraction(-1, 50), 6),
        [
            ((Fraction(1, 4), -60, Fraction(-1, 25), 9), LE, 0),
            ((Fraction(1, 2), -90, Fraction(-1, 50), 3), LE, 0),
            ((0, 0, 1, 0), LE, 1),
        ],
    )
    out = solve(p)
    assert out.value == Fraction(-1, 20)
    assert p.is_feasible_point(out.solution)


coef = st.integers(-3, 3)


@st.composite
def bounded_lps(draw):
    nv = draw(st.integers(1, 3))
    rows = []
    for _ in range(draw(st.integers(0, 3))):
        rel = draw(st.sampled_from([LE, GE, EQ]))
        rows.append((tuple(draw(coef) for _ in range(nv)), rel, draw(st.integers(-4, 6))))
    rows += [(tuple(int(k == j) for k in range(nv)), LE, draw(st.integers(0, 5))) for j in range(nv)]
    sense = draw(st.sampled_from([MINIMIZE, MAXIMIZE]))
    obj = tuple(Fraction(draw(coef), draw(st.integers(1, 3))) for _ in range(nv))
    return LPProblem(sense, obj, rows)


@settings(max_examples=300, deadline=None)
@given(bounded_lps())
def test_matches_vertex_enumeration(p):
    want = oracles.lp_by_vertices(p.sense, p.objective, [(c.coeffs, c.relation, c.rhs) for c in p.constraints])
    out = solve(p)
    if want is None:
        assert isinstance(out, Infeasible)
    else:
        assert isinstance(out, Optimal)
        assert out.value == want
        assert p.is_feasible_point(out.solution)
        assert p.value_at(out.solution) == out.value


@settings(max_examples=150, deadline=None)
@given(bounded_lps())
def test_strong_duality(p):
    out = solve(p)
    dual = solve(dual_of(p))
    if isinstance(out, Optimal):
        assert isinstance(dual, Optimal) and dual.value == out.value
    else:
        assert not isinstance(dual, Optimal)


def test_triangle_packing_duals():
    out = solve(triangle_packing())
    assert out.duals == (Fraction(1, 2),) * 3
    eq = LPProblem(MAXIMIZE, (1, 0), [((1, -1), EQ, -1), ((1, 1), LE, 3)])
    assert solve(eq).duals is None


def test_duals_with_negated_and_zero_rows():
    # -x <= -2 is stored as x >= 2; the zero row has price 0
    p = LPProblem(MINIMIZE, (3,), [((-1,), LE, -2), ((0,), LE, 1)])
    out = solve(p)
    assert out.value == 6 and out.duals == (-3, 0)


@settings(max_examples=150, deadline=None)
@given(bounded_lps())
def test_duals_certify_optimality(p):
    out = solve(p)
    if not isinstance(out, Optimal) or out.duals is None:
        return
    y = out.duals
    assert sum(c.rhs * yi for c, yi in zip(p.constraints, y)) == out.value
    maximize = p.sense == MAXIMIZE
    for c, yi in zip(p.constraints, y):
        # shadow prices: >= 0 when raising the rhs loosens a max or tightens a min
        if c.relation == (LE if maximize else GE):
            assert yi >= 0
        else:
            assert yi <= 0
    for j, cj in enumerate(p.objective):
        reduced = cj - sum(c.coeffs[j] * yi for c, yi in zip(p.constraints, y))
        assert (reduced <= 0) if maximize else (reduced >= 0)


def test_no_shared_state_between_solves():
    from concurrent.futures import ThreadPoolExecutor

    p = triangle_packing()
    with ThreadPoolExecutor(4) as pool:
        vals = list(pool.map(lambda _: solve(p).value, range(8)))
    assert vals == [Fraction(3, 2)] * 8
    assert lp.solve(p).value == Fraction(3, 2)
