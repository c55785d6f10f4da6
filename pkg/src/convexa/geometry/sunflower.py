"""Constructive closed realizations of the sunflower family.

For n >= 3 the build lives in 3-space and has three stages:

1. An inner polygon with 2^n - 2 edges and rational vertices in convex
   position (rationalized points of the unit circle), inside a
   slightly scaled copy of itself that plays the role of a filled-in
   disc (body n+1).  Each edge is assigned its own proper nonempty
   subset of {1..n}; body i (i <= n) is the disc minus every edge
   sliver whose subset omits i, cut off by that edge's chord line.
   Consecutive edges' subsets share a neuron, so the little corner
   regions of the scaled polygon carry legal intersection words; for
   non-adjacent edges the slivers must not meet at all, which is
   verified exactly by feasibility calls, shrinking the scale factor
   until it holds.
2. A pyramid (body 2n+2) over the inner polygon with apex above the
   center.
3. One segment per i <= n (body n+1+i) from the apex to a point pushed
   just outside the edge whose subset is {1..n} minus i.  A segment
   leaves the pyramid instantly because its far endpoint violates that
   edge's lifted facet.

n = 2 uses the classic six-segment planar picture instead.
"""
from __future__ import annotations

import math
from fractions import Fraction

from ..codes import mask_to_neurons, word_key
from .bodies import (
    CLOSED,
    Constraint,
    HalfspaceBody,
    Realization,
    segment_body,
)
from .linprog import feasible

F = Fraction

MAX_SUNFLOWER_N = 6
_RATIONALIZE_DENOMINATOR = 10**4


def _sunflower_two() -> Realization:
    a, b = (F(-2), F(0)), (F(2), F(0))
    c, d = (F(0), F(-2)), (F(0), F(0))
    return Realization(
        2,
        (
            segment_body(d, b),
            segment_body(a, d),
            segment_body(a, b),
            segment_body(c, a),
            segment_body(b, c),
            segment_body(d, c),
        ),
        CLOSED,
    )


def _circle_vertices(m: int) -> list[tuple[Fraction, Fraction]]:
    """m rational points of the unit circle, in counterclockwise order."""
    params = []
    for k in range(m):
        theta = -math.pi + 2 * math.pi * (k + F(1, 2)) / m
        params.append(F(math.tan(theta / 2)).limit_denominator(_RATIONALIZE_DENOMINATOR))
    if any(s >= t for s, t in zip(params, params[1:])):
        raise AssertionError("circle parameters failed to stay increasing")
    verts = []
    for t in params:
        den = 1 + t * t
        verts.append(((1 - t * t) / den, 2 * t / den))
    return verts


def _edge_lines(verts):
    """Outward (normal, offset) of each edge line; origin strictly inside."""
    m = len(verts)
    lines = []
    for k in range(m):
        p, q = verts[k], verts[(k + 1) % m]
        a = (q[1] - p[1], p[0] - q[0])
        b = a[0] * p[0] + a[1] * p[1]
        if b <= 0:
            raise AssertionError("edge line does not keep the origin strictly inside")
        lines.append((a, b))
    return lines


def _edge_subset_cycle(n: int) -> list[int]:
    """All proper nonempty subsets of [n] in a cycle where neighbors meet.

    Blocks by minimum element: every subset in block i contains i, so
    only the block junctions need care; block i ends with {i, i+1} and
    block 1 starts with {1, n}, making every junction (and the
    wrap-around) share a neuron.
    """
    full = (1 << n) - 1
    order = []
    for i in range(1, n + 1):
        block = [
            s
            for s in range(1, full)
            if s >> (i - 1) & 1 and not s & ((1 << (i - 1)) - 1)
        ]
        if i < n:
            anchor = 1 << (i - 1) | 1 << i  # {i, i+1} closes the block
            block.remove(anchor)
        else:
            anchor = None
        if i == 1:
            head = 1 << (n - 1) | 1  # {1, n} opens the cycle
            block.remove(head)
            block.sort(key=word_key)
            block = [head] + block
        else:
            block.sort(key=word_key)
        if anchor is not None:
            block.append(anchor)
        order.extend(block)
    assert len(order) == full - 1 and len(set(order)) == full - 1
    for k, s in enumerate(order):
        if not s & order[(k + 1) % len(order)]:
            raise AssertionError(
                f"adjacent subsets {mask_to_neurons(s)} and "
                f"{mask_to_neurons(order[(k + 1) % len(order)])} are disjoint"
            )
    return order


def _slivers_disjoint(lines, delta: Fraction) -> bool:
    """No point of the scaled polygon lies beyond two non-adjacent chords."""
    m = len(lines)
    outer = [(a, (1 + delta) * b, "le") for a, b in lines]
    for k in range(m):
        for l in range(k + 2, m):
            if k == 0 and l == m - 1:
                continue
            rows = outer + [
                (lines[k][0], lines[k][1], "gt"),
                (lines[l][0], lines[l][1], "gt"),
            ]
            if feasible(rows, 2) is not None:
                return False
    return True


def _push_points(verts, lines, delta: Fraction):
    """One point just beyond each edge: outside its chord, inside all others.

    Pushing the edge midpoint along the outward normal by
    eps <= delta*b/(2|a|^2) keeps the point inside the scaled polygon;
    eps halves until every other chord still contains it strictly.
    """
    m = len(verts)
    points = []
    for k in range(m):
        p, q = verts[k], verts[(k + 1) % m]
        mid = ((p[0] + q[0]) / 2, (p[1] + q[1]) / 2)
        a, b = lines[k]
        eps = delta * b / (2 * (a[0] * a[0] + a[1] * a[1]))
        while True:
            x = (mid[0] + eps * a[0], mid[1] + eps * a[1])
            if all(
                al[0] * x[0] + al[1] * x[1] < bl
                for j, (al, bl) in enumerate(lines)
                if j != k
            ):
                break
            eps /= 2
        assert a[0] * x[0] + a[1] * x[1] > b
        points.append(x)
    return points


def build_sunflower_realization(n: int) -> Realization:
    """Closed realization whose code is the n-th sunflower code.

    Plane for n = 2, 3-space for 3 <= n <= 6; larger n is rejected
    because the polygon needs 2^n - 2 edges.
    """
    if n < 2:
        raise ValueError("sunflower construction needs n >= 2")
    if n == 2:
        return _sunflower_two()
    if n > MAX_SUNFLOWER_N:
        raise ValueError(
            f"n > {MAX_SUNFLOWER_N} rejected: the {2**n - 2}-gon coordinates blow up"
        )
    m = 2**n - 2
    verts = _circle_vertices(m)
    lines = _edge_lines(verts)
    subsets = _edge_subset_cycle(n)
    delta = F(1, 4)
    while not _slivers_disjoint(lines, delta):
        delta /= 2
    pushed = _push_points(verts, lines, delta)

    zero, one = F(0), F(1)

    def flat(a, b):  # a 2-D row placed in the z = 0 plane
        return Constraint((a[0], a[1], zero), b, "le")

    z_rows = (
        Constraint((zero, zero, one), zero, "le"),
        Constraint((zero, zero, -one), zero, "le"),
    )
    outer_rows = tuple(flat(a, (1 + delta) * b) for a, b in lines)

    bodies: list[HalfspaceBody] = [None] * (2 * n + 2)
    for i in range(1, n + 1):
        cut = tuple(
            flat(a, b)
            for (a, b), s in zip(lines, subsets)
            if not s >> (i - 1) & 1
        )
        bodies[i - 1] = HalfspaceBody(3, outer_rows + cut + z_rows)
    bodies[n] = HalfspaceBody(3, outer_rows + z_rows)

    apex = (zero, zero, one)
    edge_of = {s: k for k, s in enumerate(subsets)}
    full = (1 << n) - 1
    for i in range(1, n + 1):
        k = edge_of[full ^ (1 << (i - 1))]
        w = (pushed[k][0], pushed[k][1], zero)
        bodies[n + i] = segment_body(apex, w)

    pyramid = tuple(
        Constraint((a[0], a[1], b), b, "le") for a, b in lines
    ) + (Constraint((zero, zero, -one), zero, "le"),)
    bodies[2 * n + 1] = HalfspaceBody(3, pyramid)

    return Realization(3, tuple(bodies), CLOSED)
