"""Exact linear programming over the rationals.

Two-phase dense-tableau simplex with a symbolic rhs perturbation and a
Bland's-rule fallback against cycling.  All arithmetic is exact; the tableau
runs on gmpy2 ``mpq`` values and results are handed back as
:class:`fractions.Fraction`.  Variables are implicitly nonnegative.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence, Union

from gmpy2 import mpq

from .rational import to_rational

log = logging.getLogger(__name__)

LE, EQ, GE = "<=", "=", ">="
_FLIP = {LE: GE, GE: LE, EQ: EQ}
MINIMIZE, MAXIMIZE = "min", "max"


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    relation: str
    rhs: Fraction

    def __post_init__(self):
        if self.relation not in _FLIP:
            raise ValueError(f"unknown relation {self.relation!r}")
        object.__setattr__(self, "coeffs", tuple(to_rational(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", to_rational(self.rhs))

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        lhs = sum((a * xi for a, xi in zip(self.coeffs, x) if a), Fraction(0))
        if self.relation == LE:
            return lhs <= self.rhs
        if self.relation == GE:
            return lhs >= self.rhs
        return lhs == self.rhs


def constraint(coeffs, relation: str, rhs) -> Constraint:
    return Constraint(tuple(coeffs), relation, rhs)


@dataclass(frozen=True)
class LPProblem:
    sense: str
    objective: tuple[Fraction, ...]
    constraints: tuple[Constraint, ...] = ()

    def __post_init__(self):
        if self.sense not in (MINIMIZE, MAXIMIZE):
            raise ValueError(f"sense must be 'min' or 'max', got {self.sense!r}")
        obj = tuple(to_rational(c) for c in self.objective)
        if not obj:
            raise ValueError("an LP needs at least one variable")
        cons = tuple(c if isinstance(c, Constraint) else Constraint(*c) for c in self.constraints)
        for c in cons:
            if len(c.coeffs) != len(obj):
                raise ValueError(f"constraint has {len(c.coeffs)} coefficients, expected {len(obj)}")
        object.__setattr__(self, "objective", obj)
        object.__setattr__(self, "constraints", cons)

    @property
    def nvars(self) -> int:
        return len(self.objective)

    def is_feasible_point(self, x: Sequence[Fraction]) -> bool:
        return len(x) == self.nvars and all(xi >= 0 for xi in x) and all(c.satisfied_by(x) for c in self.constraints)

    def value_at(self, x: Sequence[Fraction]) -> Fraction:
        return sum((c * xi for c, xi in zip(self.objective, x)), Fraction(0))


@dataclass(frozen=True)
class Optimal:
    """``duals`` holds the shadow price of each constraint (the rate at which
    the optimum moves with its rhs) when every row is an inequality and none
    was found redundant; otherwise it is None."""

    value: Fraction
    solution: tuple[Fraction, ...] = field(repr=False)
    duals: tuple[Fraction, ...] | None = field(default=None, repr=False, compare=False)


@dataclass(frozen=True)
class Infeasible:
    pass


@dataclass(frozen=True)
class Unbounded:
    pass


LPOutcome = Union[Optimal, Infeasible, Unbounded]


class _Tableau:
    """Dense simplex tableau.  Artificial variables are not stored as columns;
    they only ever leave the basis, so their columns are never needed.

    ``r`` is a symbolic perturbation of the right-hand side: each run solves
    the problem with rhs ``b + delta * r`` for an infinitesimal delta > 0.
    Ratios are compared in that ordered field, which breaks the massive
    degeneracy of the isomorphism systems without changing any answer.
    """

    def __init__(self, rows, rhs, basis, ncols):
        self.T = rows
        self.b = rhs
        self.r = [mpq(0)] * len(rows)
        self.basis = basis
        self.ncols = ncols
        self.d: list = []
        self.v = mpq(0)
        self.pivots = 0
        self.deleted = False

    def pivot(self, r: int, c: int) -> None:
        T, b, p = self.T, self.b, self.r
        row = T[r]
        piv = row[c]
        if piv != 1:
            inv = 1 / piv
            nz = [k for k, a in enumerate(row) if a]
            for k in nz:
                row[k] *= inv
            b[r] *= inv
            p[r] *= inv
        else:
            nz = [k for k, a in enumerate(row) if a]
        br, pr = b[r], p[r]
        for i, other in enumerate(T):
            if i == r:
                continue
            f = other[c]
            if f:
                for k in nz:
                    other[k] -= f * row[k]
                if br:
                    b[i] -= f * br
                if pr:
                    p[i] -= f * pr
        f = self.d[c]
        if f:
            d = self.d
            for k in nz:
                d[k] -= f * row[k]
            self.v += f * br
        self.basis[r] = c
        self.pivots += 1

    def drop_zero_artificials(self) -> None:
        """Pivot every artificial at zero level out of the basis; rows that
        have become identically zero are redundant and are deleted."""
        # column counts taken once; sparse columns limit fill-in
        count = [0] * self.ncols
        for row in self.T:
            for k, a in enumerate(row):
                if a:
                    count[k] += 1
        i = 0
        while i < len(self.T):
            if self.basis[i] >= self.ncols and self.b[i] == 0:
                row = self.T[i]
                nz = [k for k, a in enumerate(row) if a]
                k = min(nz, key=lambda k: (abs(row[k]) != 1, count[k], k)) if nz else None
                if k is None:
                    del self.T[i], self.b[i], self.r[i], self.basis[i]
                    self.deleted = True
                    continue
                self.pivot(i, k)
            i += 1

    def run(self, allowed: int, floor=None) -> bool:
        """Minimize over columns < ``allowed``.  False means unbounded.

        Ratios use the perturbed rhs, ties broken by lowest basic variable
        index.  The entering column is the one with the fewest nonzeros among
        those with negative reduced cost (least fill-in); after the first
        pivot that does not strictly improve the perturbed objective the run
        switches to Bland's rule (lowest index enters) for good, so it cannot
        cycle.  The final basis is feasible and optimal for the unperturbed
        rhs as well.  If the objective reaches a known lower bound ``floor``
        the run stops early.
        """
        T, b, d, basis = self.T, self.b, self.d, self.basis
        # fresh positive perturbation in the current basis coordinates
        self.r = p = [mpq(1 + (i * 7919) % 1009, 1009) for i in range(len(T))]
        bland = False
        while True:
            if floor is not None and self.v == floor:
                return True
            if bland:
                c = next((j for j in range(allowed) if d[j] < 0), None)
            else:
                c, fewest = None, None
                for j in range(allowed):
                    if d[j] < 0:
                        k = sum(1 for row in T if row[j])
                        if fewest is None or k < fewest:
                            c, fewest = j, k
            if c is None:
                return True
            best = None
            for i, row in enumerate(T):
                a = row[c]
                if a > 0:
                    key = (b[i] / a, p[i] / a, basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            if best[0][0] == 0 and best[0][1] == 0:
                bland = True
            self.pivot(best[1], c)


def _normalized_rows(p: LPProblem):
    """Rows with rhs >= 0 as (coeffs, relation, rhs, source index, negated);
    all-zero rows are checked and dropped."""
    out = []
    for src, con in enumerate(p.constraints):
        coeffs = [mpq(a.numerator, a.denominator) for a in con.coeffs]
        rhs = mpq(con.rhs.numerator, con.rhs.denominator)
        rel = con.relation
        if not any(coeffs):
            ok = (rhs >= 0) if rel == LE else (rhs <= 0) if rel == GE else (rhs == 0)
            if not ok:
                return None
            continue
        negated = rhs < 0
        if negated:
            coeffs = [-a for a in coeffs]
            rhs = -rhs
            rel = _FLIP[rel]
        out.append((coeffs, rel, rhs, src, negated))
    return out


def solve(p: LPProblem) -> LPOutcome:
    """Solve ``p`` exactly; returns :class:`Optimal`, :class:`Infeasible` or :class:`Unbounded`."""
    rows = _normalized_rows(p)
    if rows is None:
        return Infeasible()
    nv = p.nvars
    nslack = sum(1 for row in rows if row[1] != EQ)
    ncols = nv + nslack
    T, b, basis, art = [], [], [], []
    s = nv
    for i, (coeffs, rel, rhs, _, _) in enumerate(rows):
        row = coeffs + [mpq(0)] * nslack
        if rel == LE:
            row[s] = mpq(1)
            basis.append(s)
            s += 1
        else:
            if rel == GE:
                row[s] = mpq(-1)
                s += 1
            basis.append(ncols + i)
            art.append(i)
        T.append(row)
        b.append(rhs)
    tab = _Tableau(T, b, basis, ncols)

    # Artificials sitting in zero-rhs rows can be pivoted out before phase 1:
    # a pivot in a row with zero rhs changes no rhs, so feasibility is kept.
    tab.d = [mpq(0)] * ncols
    tab.drop_zero_artificials()
    art = [i for i, j in enumerate(tab.basis) if j >= ncols]

    # phase 1: minimize the sum of the remaining artificials
    d = [mpq(0)] * ncols
    v = mpq(0)
    for i in art:
        for k, a in enumerate(T[i]):
            if a:
                d[k] -= a
        v += b[i]
    tab.d, tab.v = d, v
    if art:
        # the sum of artificials is never negative, so 0 is optimal
        tab.run(ncols, floor=0)
        if tab.v > 0:
            log.debug("infeasible after %d phase-1 pivots", tab.pivots)
            return Infeasible()
        tab.drop_zero_artificials()

    # phase 2
    sign = 1 if p.sense == MINIMIZE else -1
    cost = [mpq(c.numerator, c.denominator) * sign for c in p.objective] + [mpq(0)] * nslack
    d = list(cost)
    v = mpq(0)
    for i, j in enumerate(tab.basis):
        cb = cost[j]
        if cb:
            for k, a in enumerate(tab.T[i]):
                if a:
                    d[k] -= cb * a
            v += cb * tab.b[i]
    tab.d, tab.v = d, v
    if any(cost) and not tab.run(ncols):
        return Unbounded()
    x = [Fraction(0)] * nv
    total = mpq(0)
    for i, j in enumerate(tab.basis):
        if j < nv:
            q = tab.b[i]
            x[j] = Fraction(int(q.numerator), int(q.denominator))
            total += cost[j] * q
    total *= sign
    value = Fraction(int(total.numerator), int(total.denominator))
    log.debug("optimal %s after %d pivots", value, tab.pivots)
    return Optimal(value, tuple(x), _duals(p, rows, tab, sign))


def _duals(p: LPProblem, rows, tab: "_Tableau", sign: int) -> tuple[Fraction, ...] | None:
    """Shadow prices read off the reduced costs of the slack columns."""
    if tab.deleted or any(rel == EQ for _, rel, _, _, _ in rows):
        return None
    y = [Fraction(0)] * len(p.constraints)
    s = p.nvars
    for _, rel, _, src, negated in rows:
        # min form: slack +e_i has reduced cost -pi_i, surplus -e_i has +pi_i
        pi = -tab.d[s] if rel == LE else tab.d[s]
        q = pi * sign * (-1 if negated else 1)
        y[src] = Fraction(int(q.numerator), int(q.denominator))
        s += 1
    return tuple(y)


def feasible(constraints: Sequence, nvars: int | None = None) -> tuple[Fraction, ...] | None:
    """A point satisfying every constraint exactly, or None."""
    cons = tuple(c if isinstance(c, Constraint) else Constraint(*c) for c in constraints)
    if nvars is None:
        if not cons:
            raise ValueError("nvars is required when there are no constraints")
        nvars = len(cons[0].coeffs)
    out = solve(LPProblem(MINIMIZE, (0,) * nvars, cons))
    return out.solution if isinstance(out, Optimal) else None


def dual_of(p: LPProblem) -> LPProblem:
    """The LP dual of ``p``, rewritten so every dual variable is nonnegative.

    Free dual variables (from equality rows) are split into two columns and
    sign-restricted ones are negated as needed.
    """
    maximize = p.sense == MAXIMIZE
    cols: list[tuple[list[Fraction], Fraction]] = []  # (column of A^t, dual objective coeff)
    for con in p.constraints:
        col, rhs = list(con.coeffs), con.rhs
        # natural sign of the dual variable: >= 0 for (min, >=) and (max, <=)
        natural = GE if not maximize else LE
        if con.relation == EQ:
            cols.append((col, rhs))
            cols.append(([-a for a in col], -rhs))
        elif con.relation == natural:
            cols.append((col, rhs))
        else:
            cols.append(([-a for a in col], -rhs))
    if not cols:
        cols.append(([Fraction(0)] * p.nvars, Fraction(0)))
    objective = tuple(c for _, c in cols)
    rel = LE if not maximize else GE
    rows = tuple(
        Constraint(tuple(col[j] for col, _ in cols), rel, p.objective[j]) for j in range(p.nvars)
    )
    return LPProblem(MAXIMIZE if not maximize else MINIMIZE, objective, rows)


class DualityCheck(NamedTuple):
    ok: bool
    primal: LPOutcome
    dual_value: Fraction | None
    reason: str

    def __bool__(self) -> bool:
        return self.ok


def verify_duality(primal: LPProblem, dual_value) -> DualityCheck:
    """Solve ``primal`` and compare its optimum with ``dual_value`` exactly."""
    out = solve(primal)
    if not isinstance(out, Optimal):
        return DualityCheck(False, out, dual_value, f"primal is {type(out).__name__}")
    if dual_value is None:
        return DualityCheck(False, out, None, "dual has no finite optimum")
    dual_value = to_rational(dual_value)
    if out.value != dual_value:
        return DualityCheck(False, out, dual_value, f"primal optimum {out.value} != dual optimum {dual_value}")
    return DualityCheck(True, out, dual_value, "optimal values agree")
