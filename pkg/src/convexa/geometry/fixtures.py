"""Hand-built rational realizations used by tests and the CLI.

Coordinates are rational rebuilds of small planar pictures; only the
atom structure matters, and the test suite recomputes it exactly.
"""
from __future__ import annotations

from fractions import Fraction

from .bodies import CLOSED, Realization, interval_body, polygon_body

F = Fraction


def interval_realization(pairs, mode: str = CLOSED) -> Realization:
    """One interval body per (lo, hi) pair on the line."""
    return Realization(1, tuple(interval_body(lo, hi, mode) for lo, hi in pairs), mode)


def theta_figure_realization() -> Realization:
    """Three triangles through a common apex over a low trapezoid.

    The triangles meet pairwise only at the apex, so the triple-overlap
    atom is that single point: present among closed bodies, gone when
    every body is replaced by its interior.  Realizes the code
    {123, 14, 24, 34, 1, 2, 3, 4, empty} in closed mode.
    """
    apex = (F(0), F(7))
    u1 = polygon_body([apex, (F(-9), F(-6)), (F(-5), F(-6))])
    u2 = polygon_body([apex, (F(-2), F(-6)), (F(2), F(-6))])
    u3 = polygon_body([apex, (F(9), F(-6)), (F(5), F(-6))])
    u4 = polygon_body(
        [
            (F(-9), F(-6)),
            (F(9), F(-6)),
            (F(69, 10), F(-3)),
            (F(-69, 10), F(-3)),
        ]
    )
    return Realization(2, (u1, u2, u3, u4), CLOSED)
