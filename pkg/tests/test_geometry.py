"""Halfspace bodies, atom enumeration, and nondegeneracy checks."""
from __future__ import annotations

import random
from fractions import Fraction

import pytest

from convexa.codes import NeuralCode, neurons_to_mask as m
from convexa.errors import BudgetExceededError, NotFullDimensionalError
from convexa.geometry.atoms import (
    DEGENERATE,
    INAPPLICABLE,
    NONDEGENERATE,
    REALIZED_CODE_SWEEP_LIMIT,
    atom_nonempty,
    atom_of_point,
    closure_realization,
    interior_realization,
    nondegeneracy_check_closed,
    nondegeneracy_check_open,
    realized_code,
)
from convexa.geometry.bodies import (
    CLOSED,
    OPEN,
    Constraint,
    HalfspaceBody,
    Realization,
    empty_body,
    interval_body,
    polygon_body,
    realization_from_json_obj,
    realization_to_json_obj,
    segment_body,
    transform_realization,
)
from convexa.geometry.fixtures import interval_realization, theta_figure_realization
from convexa.geometry.linprog import BudgetCounter

F = Fraction


# ---------------------------------------------------------------------------
# Oracle: codes of interval families on the line, by endpoint sorting.
# Membership only changes at endpoints, so sampling every endpoint and
# every gap between consecutive endpoints (plus both outsides)
# classifies every atom.  Independent of the LP machinery.
# ---------------------------------------------------------------------------


def interval_code_oracle(pairs, mode=CLOSED) -> NeuralCode:
    def member(i, x):
        lo, hi = pairs[i]
        lo, hi = F(lo), F(hi)
        return lo <= x <= hi if mode == CLOSED else lo < x < hi

    points = sorted({F(v) for pair in pairs for v in pair})
    samples = []
    if points:
        samples.append(points[0] - 1)
        samples.append(points[-1] + 1)
        for a, b in zip(points, points[1:]):
            samples.append((a + b) / 2)
        samples.extend(points)
    else:
        samples.append(F(0))
    words = set()
    for x in samples:
        words.add(sum(1 << i for i in range(len(pairs)) if member(i, x)))
    return NeuralCode(len(pairs), frozenset(words))


def random_intervals(rng: random.Random, n: int):
    out = []
    for _ in range(n):
        a = F(rng.randint(-6, 6), rng.randint(1, 2))
        b = F(rng.randint(-6, 6), rng.randint(1, 2))
        if rng.random() < 0.15:
            a, b = max(a, b), min(a, b)  # occasionally empty on purpose
        else:
            a, b = min(a, b), max(a, b)
        out.append((a, b))
    return out


def test_realized_code_matches_the_interval_oracle():
    rng = random.Random(1729)
    for trial in range(100):
        n = rng.randint(1, 5)
        pairs = random_intervals(rng, n)
        mode = CLOSED if rng.random() < 0.7 else OPEN
        real = interval_realization(pairs, mode)
        got = realized_code(real)
        want = interval_code_oracle(pairs, mode)
        assert got == want, (trial, pairs, mode)


# ---------------------------------------------------------------------------
# bodies and realizations
# ---------------------------------------------------------------------------


def test_constraint_validation():
    with pytest.raises(ValueError):
        Constraint((F(1),), F(0), "ge")
    c = Constraint((1, 2), 3, "le")
    assert c.normal == (F(1), F(2)) and c.offset == F(3)
    assert c.holds_at((F(1), F(1)))
    assert not c.holds_at((F(2), F(1)))


def test_realization_rejects_mixed_relations():
    strict = HalfspaceBody(1, (Constraint((F(1),), F(1), "lt"),))
    weak = HalfspaceBody(1, (Constraint((F(1),), F(1), "le"),))
    with pytest.raises(ValueError):
        Realization(1, (strict, weak), CLOSED)
    with pytest.raises(ValueError):
        Realization(1, (weak,), OPEN)


def test_empty_body_contains_nothing():
    body = empty_body(2)
    assert not body.contains((F(0), F(0)))
    real = Realization(1, (interval_body(0, 1), empty_body(1)), CLOSED)
    code = realized_code(real)
    assert code.codewords == {0, m([1])}


def test_atom_of_point_on_the_theta_figure():
    real = theta_figure_realization()
    assert atom_of_point(real, (F(0), F(7))) == m([1, 2, 3])
    assert atom_of_point(real, (F(0), F(-5))) == m([2, 4])
    assert atom_of_point(real, (F(50), F(50))) == 0


def test_atom_witnesses_land_in_their_atom():
    real = theta_figure_realization()
    for sigma in ([1, 2, 3], [2, 4], [4]):
        wit = atom_nonempty(real, sigma)
        assert wit is not None
        assert atom_of_point(real, wit.point) == m(sigma)
    assert atom_nonempty(real, [1, 2, 4]) is None


# ---------------------------------------------------------------------------
# theta figure: the known degenerate picture
# ---------------------------------------------------------------------------


def test_theta_figure_realizes_the_catalog_code(catalog_codes):
    real = theta_figure_realization()
    assert realized_code(real) == catalog_codes["C_theta"]


def test_theta_figure_is_degenerate(catalog_codes):
    real = theta_figure_realization()
    assert nondegeneracy_check_closed(real) == DEGENERATE
    # the only casualty of passing to interiors is the triple overlap
    open_code = realized_code(interior_realization(real))
    assert open_code.codewords == catalog_codes["C_theta"].codewords - {m([1, 2, 3])}


# ---------------------------------------------------------------------------
# interiors, closures, nondegeneracy
# ---------------------------------------------------------------------------


def test_overlapping_intervals_are_nondegenerate():
    real = interval_realization([(-1, 1), (0, 2)])
    assert nondegeneracy_check_closed(real) == NONDEGENERATE


def test_point_touch_is_degenerate():
    real = interval_realization([(-1, 0), (0, 1)])
    assert nondegeneracy_check_closed(real) == DEGENERATE


def test_open_mode_nondegeneracy():
    touching = interval_realization([(-1, 0), (0, 1)], OPEN)
    # closures meet at a point the open picture never had
    assert nondegeneracy_check_open(touching) == DEGENERATE
    overlapping = interval_realization([(-1, 1), (0, 2)], OPEN)
    assert nondegeneracy_check_open(overlapping) == NONDEGENERATE


def test_interior_of_a_segment_is_refused():
    real = Realization(2, (segment_body((0, 0), (1, 0)),), CLOSED)
    with pytest.raises(NotFullDimensionalError) as exc:
        interior_realization(real)
    assert exc.value.body_index == 0
    assert nondegeneracy_check_closed(real) == INAPPLICABLE


def test_interior_keeps_explicitly_empty_bodies_empty():
    real = Realization(1, (interval_body(0, 1), empty_body(1)), CLOSED)
    inner = interior_realization(real)
    assert inner.mode == OPEN
    assert realized_code(inner).codewords == {0, m([1])}


def test_mode_guards():
    closed = interval_realization([(0, 1)])
    opened = interval_realization([(0, 1)], OPEN)
    with pytest.raises(ValueError):
        interior_realization(opened)
    with pytest.raises(ValueError):
        closure_realization(closed)
    with pytest.raises(ValueError):
        nondegeneracy_check_closed(opened)
    with pytest.raises(ValueError):
        nondegeneracy_check_open(closed)


def test_closure_round_trip_on_open_intervals():
    real = interval_realization([(0, 1), (F(1, 2), 2)], OPEN)
    closed = closure_realization(real)
    assert closed.mode == CLOSED
    assert realized_code(closed) == interval_code_oracle(
        [(0, 1), (F(1, 2), 2)], CLOSED
    )


# ---------------------------------------------------------------------------
# affine invariance
# ---------------------------------------------------------------------------


def random_invertible(rng: random.Random):
    while True:
        mat = [[F(rng.randint(-3, 3)) for _ in range(2)] for _ in range(2)]
        if mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0] != 0:
            return mat


def test_affine_maps_preserve_the_realized_code():
    real = theta_figure_realization()
    base = realized_code(real)
    rng = random.Random(5)
    for _ in range(5):
        mat = random_invertible(rng)
        shift = [F(rng.randint(-4, 4)), F(rng.randint(-4, 4))]
        moved = transform_realization(real, mat, shift)
        assert realized_code(moved) == base


def test_transform_validation():
    real = theta_figure_realization()
    with pytest.raises(ValueError):
        transform_realization(real, [[1, 0]])  # wrong shape
    with pytest.raises(ValueError):
        transform_realization(real, [[1, 1], [1, 1]])  # singular
    with pytest.raises(ValueError):
        transform_realization(real, [[1, 0], [0, 1]], [1])  # bad shift


# ---------------------------------------------------------------------------
# serialization and limits
# ---------------------------------------------------------------------------


def test_realization_json_round_trip():
    real = theta_figure_realization()
    obj = realization_to_json_obj(real)
    back = realization_from_json_obj(obj)
    assert back == real


def test_malformed_realization_objects_raise():
    with pytest.raises(ValueError):
        realization_from_json_obj({"dim": 2})
    with pytest.raises(ValueError):
        realization_from_json_obj(
            {"dim": 1, "mode": CLOSED, "bodies": [[{"normal": ["x"], "offset": "0", "rel": "le"}]]}
        )


def test_many_bodies_require_candidates():
    n = REALIZED_CODE_SWEEP_LIMIT + 1
    pairs = [(3 * i, 3 * i + 1) for i in range(n)]
    real = interval_realization(pairs)
    with pytest.raises(ValueError):
        realized_code(real)
    cands = [0] + [1 << i for i in range(n)]
    code = realized_code(real, candidates=cands)
    assert code.codewords == {0, *(1 << i for i in range(n))}


def test_feasibility_budget_propagates():
    real = theta_figure_realization()
    with pytest.raises(BudgetExceededError):
        realized_code(real, counter=BudgetCounter(limit=3))
