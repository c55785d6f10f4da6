"""Atom feasibility and realized codes for halfspace realizations.

The atom of a neuron set sigma is the set of points lying in every
body indexed by sigma and in no other body.  Membership constraints
are linear; NON-membership in an excluded body is a disjunction over
its facets (violate at least one).  The search below branches on the
first violated facet per excluded body — branch k satisfies facets
1..k-1 and violates facet k — so branches are disjoint and infeasible
prefixes prune whole subtrees.  All arithmetic is exact.
"""
from __future__ import annotations

from collections.abc import Iterable

from ..codes import NeuralCode, neurons_to_mask
from ..errors import NotFullDimensionalError
from .bodies import (
    CLOSED,
    OPEN,
    Constraint,
    HalfspaceBody,
    Realization,
    empty_body,
)
from .linprog import BudgetCounter, FeasibilityWitness, feasible

NONDEGENERATE, DEGENERATE, INAPPLICABLE = "nondegenerate", "degenerate", "inapplicable"

REALIZED_CODE_SWEEP_LIMIT = 12


def _as_mask(sigma, n: int) -> int:
    if isinstance(sigma, int):
        mask = sigma
    else:
        mask = neurons_to_mask(sigma)
    if mask < 0 or mask >> n:
        raise ValueError(f"neuron set {sigma!r} does not fit in 1..{n}")
    return mask


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _negation(c: Constraint):
    """Complement halfspace of one facet (closed <-> strict flips)."""
    return (c.normal, c.offset, "gt" if c.rel == "le" else "ge")


def _empty_body_set(real: Realization, counter: BudgetCounter | None) -> set[int]:
    return {
        j
        for j, body in enumerate(real.bodies)
        if feasible(body.triples(), real.dim, counter) is None
    }


def atom_nonempty(
    real: Realization,
    sigma,
    counter: BudgetCounter | None = None,
    empty_bodies: set[int] | None = None,
) -> FeasibilityWitness | None:
    """Witness point in exactly the bodies of sigma, or None.

    ``empty_bodies`` may carry precomputed indices of empty bodies
    (they are automatically excluded); omitted, they are detected here.
    """
    mask = _as_mask(sigma, real.n)
    if counter is None:
        counter = BudgetCounter()
    inside: list = []
    for i in _bits(mask):
        inside.extend(real.bodies[i].triples())
    start = feasible(inside, real.dim, counter)
    if start is None:
        return None
    if empty_bodies is None:
        empty_bodies = _empty_body_set(real, counter)
    excluded = [
        j for j in range(real.n) if not mask >> j & 1 and j not in empty_bodies
    ]
    bodies = real.bodies

    def dfs(cons, wit, k):
        if not any(bodies[j].contains(wit.point) for j in excluded[k:]):
            return wit  # the current witness already avoids everything left
        prefix: list = []
        for facet in bodies[excluded[k]].constraints:
            trial = cons + prefix + [_negation(facet)]
            w2 = feasible(trial, real.dim, counter)
            if w2 is not None:
                deeper = dfs(trial, w2, k + 1)
                if deeper is not None:
                    return deeper
            prefix.append(facet.as_triple())
        return None

    return dfs(inside, start, 0)


def atom_of_point(real: Realization, point) -> int:
    """Bitmask of the bodies containing the point (exact membership)."""
    return sum(
        1 << j for j, body in enumerate(real.bodies) if body.contains(point)
    )


def _nerve(real: Realization, counter, note, empty_bodies):
    """All supports with nonempty intersection, grown level by level.

    Monotone: a support is only tested when every one-smaller subset
    already proved nonempty.  ``note`` is fed every witness point found.
    """
    live = [j for j in range(real.n) if j not in empty_bodies]
    members = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for mask in frontier:
            top = mask.bit_length()
            for j in live:
                if j < top:
                    continue
                grown = mask | 1 << j
                if any(grown ^ (1 << t) not in members for t in _bits(grown)):
                    continue
                cons: list = []
                for t in _bits(grown):
                    cons.extend(real.bodies[t].triples())
                wit = feasible(cons, real.dim, counter)
                if wit is not None:
                    members.add(grown)
                    nxt.append(grown)
                    note(wit.point)
        frontier = nxt
    return members


def realized_code(
    real: Realization,
    candidates: Iterable | None = None,
    counter: BudgetCounter | None = None,
) -> NeuralCode:
    """The code of all nonempty atoms of the realization.

    Works in stages: sample points from body/intersection feasibility
    classify many atoms for free; the remaining candidates (supports
    whose bodies do intersect — no other support can carry an atom)
    each get a full atom search.  For more than 12 bodies a candidate
    codeword list must be supplied; it is verified first and then the
    completeness sweep still runs, so the result does not depend on
    the candidates being right.
    """
    if real.n > REALIZED_CODE_SWEEP_LIMIT and candidates is None:
        raise ValueError(
            f"more than {REALIZED_CODE_SWEEP_LIMIT} bodies: supply candidate codewords"
        )
    if counter is None:
        counter = BudgetCounter()
    found: set[int] = set()

    def note(point):
        found.add(atom_of_point(real, point))

    empty_bodies = _empty_body_set(real, counter)
    for j, body in enumerate(real.bodies):
        if j not in empty_bodies:
            wit = feasible(body.triples(), real.dim, counter)
            if wit is not None:
                note(wit.point)
    members = _nerve(real, counter, note, empty_bodies)
    if candidates is not None:
        for cand in candidates:
            mask = _as_mask(cand, real.n)
            if mask in found or mask not in members:
                continue
            if atom_nonempty(real, mask, counter, empty_bodies) is not None:
                found.add(mask)
    for mask in sorted(members):
        if mask not in found:
            if atom_nonempty(real, mask, counter, empty_bodies) is not None:
                found.add(mask)
    return NeuralCode(real.n, frozenset(found))


def interior_realization(real: Realization) -> Realization:
    """Interiors of all bodies of a closed realization.

    For a full-dimensional halfspace intersection the interior is the
    same system made strict; a nonempty body whose strict system is
    infeasible is lower-dimensional, and strictification would not be
    its topological interior, so it is refused.
    """
    if real.mode != CLOSED:
        raise ValueError("interior_realization expects a closed realization")
    out = []
    for idx, body in enumerate(real.bodies):
        if feasible(body.triples(), real.dim) is None:
            out.append(empty_body(real.dim, OPEN))
            continue
        strict = [
            Constraint(c.normal, c.offset, "lt") for c in body.constraints
        ]
        if feasible([c.as_triple() for c in strict], real.dim) is None:
            raise NotFullDimensionalError(idx)
        out.append(HalfspaceBody(real.dim, tuple(strict)))
    return Realization(real.dim, tuple(out), OPEN)


def closure_realization(real: Realization) -> Realization:
    """Closures of all bodies of an open realization.

    A nonempty open halfspace intersection closes to the weak system;
    an empty body stays empty (weakening could invent points).
    """
    if real.mode != OPEN:
        raise ValueError("closure_realization expects an open realization")
    out = []
    for body in real.bodies:
        if feasible(body.triples(), real.dim) is None:
            out.append(empty_body(real.dim, CLOSED))
            continue
        weak = tuple(Constraint(c.normal, c.offset, "le") for c in body.constraints)
        out.append(HalfspaceBody(real.dim, weak))
    return Realization(real.dim, tuple(out), CLOSED)


def nondegeneracy_check_closed(
    real: Realization,
    candidates: Iterable | None = None,
    counter: BudgetCounter | None = None,
) -> str:
    """Does passing to interiors preserve the realized code?

    Returns "inapplicable" when some nonempty body is not
    full-dimensional (its topological interior is not a strictified
    halfspace system, so the comparison is refused, not approximated).
    """
    if real.mode != CLOSED:
        raise ValueError("nondegeneracy_check_closed expects a closed realization")
    try:
        inner = interior_realization(real)
    except NotFullDimensionalError:
        return INAPPLICABLE
    before = realized_code(real, candidates, counter)
    after = realized_code(inner, candidates, counter)
    return NONDEGENERATE if before == after else DEGENERATE


def nondegeneracy_check_open(
    real: Realization,
    candidates: Iterable | None = None,
    counter: BudgetCounter | None = None,
) -> str:
    """Does passing to closures preserve the realized code?"""
    if real.mode != OPEN:
        raise ValueError("nondegeneracy_check_open expects an open realization")
    outer = closure_realization(real)
    before = realized_code(real, candidates, counter)
    after = realized_code(outer, candidates, counter)
    return NONDEGENERATE if before == after else DEGENERATE
