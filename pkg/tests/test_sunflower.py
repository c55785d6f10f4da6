"""Constructed realizations of the sunflower family."""
from __future__ import annotations

from fractions import Fraction as F

import pytest

from convexa.catalog import generate_sunflower
from convexa.codes import neurons_to_mask as m
from convexa.geometry.atoms import atom_nonempty, atom_of_point, realized_code
from convexa.geometry.bodies import CLOSED
from convexa.geometry.sunflower import MAX_SUNFLOWER_N, build_sunflower_realization


def test_out_of_range_sizes_are_rejected():
    for n in (0, 1):
        with pytest.raises(ValueError):
            build_sunflower_realization(n)
    with pytest.raises(ValueError):
        build_sunflower_realization(MAX_SUNFLOWER_N + 1)


def test_two_petal_construction_realizes_the_code():
    real = build_sunflower_realization(2)
    assert real.mode == CLOSED
    assert real.dim == 2 and real.n == 6
    assert realized_code(real) == generate_sunflower(2)


def test_three_petal_construction_realizes_the_code():
    real = build_sunflower_realization(3)
    assert real.dim == 3 and real.n == 8
    assert realized_code(real) == generate_sunflower(3)


def test_two_petal_center_atom():
    real = build_sunflower_realization(2)
    assert atom_of_point(real, (F(0), F(-2))) == m([4, 5, 6])
    wit = atom_nonempty(real, [4, 5, 6])
    assert wit is not None
    assert atom_of_point(real, wit.point) == m([4, 5, 6])


def test_hub_body_carries_no_lone_atom():
    # the hub region is covered by its intersections with the petals'
    # base regions: {hub} alone is never a codeword of the family
    n = 3
    hub = n + 1
    code = generate_sunflower(n)
    assert [hub] not in code
    real = build_sunflower_realization(n)
    assert atom_nonempty(real, [hub]) is None
