"""Exact rational feasibility, cross-checked against Fourier-Motzkin."""
from __future__ import annotations

import random
from fractions import Fraction

import pytest

from convexa.errors import BudgetExceededError
from convexa.geometry.linprog import (
    GE,
    GT,
    LE,
    LT,
    BudgetCounter,
    feasible,
    witness_satisfies,
)


# ---------------------------------------------------------------------------
# Oracle: Fourier-Motzkin elimination over exact fractions.  Independent
# of the simplex implementation; decides mixed strict/weak systems.
# ---------------------------------------------------------------------------


def _to_le(constraints, dim):
    rows = []
    for normal, offset, rel in constraints:
        a = [Fraction(c) for c in normal]
        assert len(a) == dim
        b = Fraction(offset)
        if rel in (GE, GT):
            a = [-c for c in a]
            b = -b
        rows.append((tuple(a), b, rel in (LT, GT)))
    return rows


def fm_feasible(constraints, dim: int) -> bool:
    rows = _to_le(constraints, dim)
    for var in reversed(range(dim)):
        uppers, lowers, rest = [], [], []
        for a, b, strict in rows:
            c = a[var]
            reduced = a[:var]
            if c > 0:
                uppers.append((tuple(x / c for x in reduced), b / c, strict))
            elif c < 0:
                lowers.append((tuple(x / -c for x in reduced), b / -c, strict))
            else:
                rest.append((reduced, b, strict))
        rows = rest
        for la, lb, ls in lowers:
            for ua, ub, us in uppers:
                rows.append(
                    (
                        tuple(x + y for x, y in zip(la, ua)),
                        lb + ub,
                        ls or us,
                    )
                )
    for _, b, strict in rows:
        if b < 0 or (strict and b == 0):
            return False
    return True


def random_system(rng: random.Random, dim: int = 2):
    rows = []
    for _ in range(rng.randrange(0, 7)):
        normal = tuple(rng.randint(-3, 3) for _ in range(dim))
        offset = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        rel = rng.choice((LE, LT, GE, GT))
        rows.append((normal, offset, rel))
    return rows


# ---------------------------------------------------------------------------
# agreement with the oracle
# ---------------------------------------------------------------------------


def test_feasibility_agrees_with_fourier_motzkin_2d():
    rng = random.Random(20260814)
    disagreements = []
    for trial in range(200):
        system = random_system(rng, 2)
        got = feasible(system, 2)
        want = fm_feasible(system, 2)
        if (got is not None) != want:
            disagreements.append((trial, system))
        if got is not None:
            assert witness_satisfies(system, got.point), (trial, system)
    assert not disagreements


def test_feasibility_agrees_with_fourier_motzkin_3d():
    rng = random.Random(77)
    for trial in range(60):
        system = random_system(rng, 3)
        got = feasible(system, 3)
        assert (got is not None) == fm_feasible(system, 3), (trial, system)
        if got is not None:
            assert witness_satisfies(system, got.point)


# ---------------------------------------------------------------------------
# targeted cases
# ---------------------------------------------------------------------------


def test_empty_system_is_feasible():
    w = feasible([], 2)
    assert w is not None and len(w.point) == 2
    assert w.strict_slacks == ()


def test_weak_boundary_point_is_allowed():
    system = [((1,), 0, LE), ((1,), 0, GE)]
    w = feasible(system, 1)
    assert w is not None and w.point == (Fraction(0),)


def test_strict_boundary_point_is_rejected():
    assert feasible([((1,), 0, LT), ((1,), 0, GE)], 1) is None
    assert feasible([((1,), 1, GT), ((1,), 1, LE)], 1) is None


def test_open_interval_yields_interior_point_with_positive_slack():
    system = [((1,), 1, LT), ((1,), 0, GT)]
    w = feasible(system, 1)
    assert w is not None
    (x,) = w.point
    assert Fraction(0) < x < Fraction(1)
    assert len(w.strict_slacks) == 2
    assert all(s > 0 for s in w.strict_slacks)


def test_infeasible_weak_system():
    assert feasible([((1, 0), 0, LE), ((1, 0), 1, GE)], 2) is None


def test_zero_normal_rows_decide_immediately():
    assert feasible([((0, 0), -1, LE)], 2) is None
    assert feasible([((0, 0), 0, LT)], 2) is None
    assert feasible([((0, 0), 0, LE), ((0, 0), 1, LE)], 2) is not None
    assert feasible([((0, 0), 0, GT)], 2) is None
    assert feasible([((0, 0), -1, GT)], 2) is not None


def test_duplicate_and_dominated_rows_do_not_change_the_answer():
    base = [((1, 0), 5, LE), ((0, 1), 5, LE), ((1, 0), 0, GE), ((0, 1), 0, GE)]
    noisy = base + [((1, 0), 5, LE), ((1, 0), 7, LE), ((1, 0), 3, LT)]
    w = feasible(noisy, 2)
    assert w is not None
    assert witness_satisfies(noisy, w.point)
    assert w.point[0] < 3


def test_exact_fraction_io():
    system = [((3,), 1, LE), ((3,), 1, GE)]
    w = feasible(system, 1)
    assert w is not None
    assert w.point == (Fraction(1, 3),)
    assert all(isinstance(x, Fraction) for x in w.point)


def test_fraction_coefficients_are_exact():
    third = Fraction(1, 3)
    system = [((third,), Fraction(2, 9), LE), ((1,), Fraction(2, 3), GE)]
    w = feasible(system, 1)
    assert w is not None and w.point == (Fraction(2, 3),)


def test_dimension_mismatch_raises():
    with pytest.raises(ValueError):
        feasible([((1, 2, 3), 0, LE)], 2)


def test_unknown_relation_raises():
    with pytest.raises(ValueError):
        feasible([((1,), 0, "eq")], 1)


def test_witness_satisfies_checks_every_relation():
    system = [((1, 0), 1, LT), ((0, 1), 0, GE)]
    assert witness_satisfies(system, (Fraction(1, 2), Fraction(0)))
    assert not witness_satisfies(system, (Fraction(1), Fraction(0)))
    assert not witness_satisfies(system, (Fraction(1, 2), Fraction(-1)))


# ---------------------------------------------------------------------------
# budget accounting
# ---------------------------------------------------------------------------


def test_budget_counter_raises_past_the_limit():
    counter = BudgetCounter(limit=2)
    counter.tick()
    counter.tick()
    with pytest.raises(BudgetExceededError):
        counter.tick({"where": "third call"})
    assert counter.count == 3


def test_feasible_ticks_the_counter_once_per_call():
    counter = BudgetCounter(limit=10)
    feasible([((1,), 0, GE)], 1, counter)
    feasible([((1,), 0, GE)], 1, counter)
    assert counter.count == 2
    tight = BudgetCounter(limit=1)
    feasible([], 1, tight)
    with pytest.raises(BudgetExceededError):
        feasible([], 1, tight)
