"""Catalog fixtures and the two parametric code families."""
from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from convexa.catalog import generate_Dn, generate_sunflower, list_names, named_code
from convexa.codes import (
    adjoin_union_neuron,
    format_code,
    has_empty_codeword,
    neurons_to_mask as m,
    parse_code,
    restrict,
)
from convexa.containment import containment_graph, recognize_cycle


FIXTURE_NAMES = (
    "C6",
    "C10",
    "C15",
    "C_star",
    "RemoveHyp",
    "C_Cr",
    "C_theta",
    "C8",
    "SimplD",
)


def test_listing_mentions_every_fixture_and_both_families():
    names = list_names()
    for name in FIXTURE_NAMES:
        assert name in names
    assert any(n.startswith("D<k>") for n in names)
    assert any(n.startswith("S<k>") for n in names)


def test_unknown_name_raises_key_error():
    with pytest.raises(KeyError):
        named_code("C7")


def test_family_names_resolve():
    assert named_code("D5") == generate_Dn(5)
    assert named_code("S3") == generate_sunflower(3)


def test_fixture_shapes(catalog_codes):
    expected = {
        "C6": (5, 9),
        "C10": (5, 12),
        "C15": (5, 11),
        "C_star": (5, 12),
        "RemoveHyp": (5, 11),
        "C_Cr": (6, 13),
        "C_theta": (4, 9),
        "C8": (8, 11),
        "SimplD": (8, 19),
    }
    for name, (n, size) in expected.items():
        code = catalog_codes[name]
        assert (code.n, len(code)) == (n, size), name


def test_every_fixture_contains_the_empty_codeword(catalog_codes):
    for name, code in catalog_codes.items():
        assert has_empty_codeword(code), name


def test_fixtures_round_trip_through_the_text_format(catalog_codes):
    for code in catalog_codes.values():
        assert parse_code(format_code(code)) == code


def test_pinwheel_needs_five():
    for n in (0, 1, 4):
        with pytest.raises(ValueError):
            generate_Dn(n)
    assert generate_Dn(5).n == 6


def test_pinwheel_shape():
    for n in (5, 7, 10):
        code = generate_Dn(n)
        assert code.n == n + 1
        # chain pairs/triples plus three extra words and the empty one
        assert len(code) == (n - 1) + (n - 2) + 3 + 1
        assert [n + 1] in code
        assert [1, 2, n + 1] in code
        assert [n - 1, n, n + 1] in code


def test_pinwheel_graph_is_a_cycle():
    for n in range(5, 13):
        code = generate_Dn(n)
        g = containment_graph([w for w in code.codewords if w])
        assert recognize_cycle(g) is not None, n


def test_sunflower_needs_two():
    for n in (0, 1):
        with pytest.raises(ValueError):
            generate_sunflower(n)


def test_sunflower_counts():
    for n in (2, 3, 4, 6):
        code = generate_sunflower(n)
        assert code.n == 2 * n + 2
        assert len(code) == 2**n + 2 * n + 2


def test_sunflower_structure():
    n = 3
    code = generate_sunflower(n)
    hub = n + 1
    # hub together with each nonempty proper subset of the petals' base
    assert [1, hub] in code
    assert [1, 2, hub] in code
    assert [1, 2, 3, hub] not in code  # full base only with the polygon
    assert [1, 2, 3, hub, 2 * n + 2] in code
    # petal singletons and the all-petals center
    for p in range(n + 2, 2 * n + 3):
        assert [p] in code
    assert range(n + 2, 2 * n + 3) in code


def test_simplification_example_reduces_as_documented(catalog_codes):
    """Adjoining a neuron for {4,5,6,7} and cutting back to {1,2,3,8,9}."""
    widened = adjoin_union_neuron(catalog_codes["SimplD"], [4, 5, 6, 7])
    assert widened.n == 9
    reduced = restrict(widened, [1, 2, 3, 8, 9])
    expect = {
        m(s)
        for s in (
            [1, 2, 3],
            [1, 2, 9],
            [1, 3, 8],
            [2, 8, 9],
            [3, 9],
            [1, 2],
            [1, 3],
            [2, 9],
            [3],
            [8],
            [9],
            [],
        )
    }
    assert reduced.original_words() == expect


@given(st.integers(5, 20))
def test_pinwheel_is_deterministic(n):
    assert generate_Dn(n) == generate_Dn(n)


@given(st.integers(2, 8))
def test_sunflower_words_stay_within_the_universe(n):
    code = generate_sunflower(n)
    for w in code.codewords:
        assert w & ~code.full_mask == 0
