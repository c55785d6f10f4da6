"""Five-index receptive-field criterion: rows, search, safe additions."""
from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from convexa.codes import NeuralCode, neurons_to_mask as m
from convexa.errors import BudgetExceededError
from convexa.ideal import canonical_form
from convexa.rf_criterion import (
    ROW_DESCRIPTIONS,
    cf_criterion,
    check_tuple,
    safe_codeword_additions,
    search_rf_obstruction,
)

from conftest import codes


def test_row_descriptions_cover_all_seven_rows():
    assert len(ROW_DESCRIPTIONS) == 7
    assert all(isinstance(d, str) and d for d in ROW_DESCRIPTIONS)


def test_known_passing_tuple_on_c6(catalog_codes):
    res = check_tuple(catalog_codes["C6"], (3, 2, 1, 5, 4))
    assert res.passed
    assert res.failing_rows() == ()
    assert res.tuple == (3, 2, 1, 5, 4)


def test_near_miss_fails_exactly_one_row(catalog_codes):
    """This code survives the criterion because a single row breaks.

    With (i,j,k,l,m) = (1,2,3,5,4) everything holds except the demand
    for a codeword containing {k,l,m} = {3,4,5}.
    """
    res = check_tuple(catalog_codes["RemoveHyp"], (1, 2, 3, 5, 4))
    assert not res.passed
    assert res.failing_rows() == (3,)
    assert "{k,l,m}" in ROW_DESCRIPTIONS[2]


def test_indices_out_of_range_raise(catalog_codes):
    with pytest.raises(ValueError):
        check_tuple(catalog_codes["C6"], (0, 1, 2, 3, 4))
    with pytest.raises(ValueError):
        check_tuple(catalog_codes["C6"], (1, 2, 3, 4, 6))


def test_repeated_indices_are_legal(catalog_codes):
    res = check_tuple(catalog_codes["C6"], (1, 1, 1, 1, 1))
    assert not res.passed  # rows 4/5 forbid {i,j,k,l} ⊆ some codeword


def test_search_results_on_the_catalog(catalog_codes):
    found = {
        name: {c.tuple for c in search_rf_obstruction(catalog_codes[name])}
        for name in ("C6", "C10", "C15", "C_Cr")
    }
    assert (3, 2, 1, 5, 4) in found["C6"]
    assert (1, 3, 4, 2, 5) in found["C10"]
    assert (1, 2, 3, 4, 5) in found["C15"]
    # inapplicable here: the cycle certificate is the only route
    assert found["C_Cr"] == set()


def test_search_is_silent_on_known_closed_codes(catalog_codes):
    for name in ("C_star", "C_theta", "RemoveHyp"):
        assert search_rf_obstruction(catalog_codes[name]) == (), name


def test_search_order_is_lexicographic(catalog_codes):
    tuples = [c.tuple for c in search_rf_obstruction(catalog_codes["C6"])]
    assert tuples == sorted(tuples)
    assert len(tuples) == len(set(tuples))


def test_certificates_replay(catalog_codes):
    for cert in search_rf_obstruction(catalog_codes["C10"]):
        assert check_tuple(catalog_codes["C10"], cert.tuple).passed


@settings(max_examples=40)
@given(codes(min_n=3, max_n=5), st.data())
def test_cf_criterion_agrees_with_direct_check(code, data):
    t = tuple(
        data.draw(st.integers(1, code.n), label=name) for name in "ijklm"
    )
    direct = check_tuple(code, t).passed
    via_cf = cf_criterion(canonical_form(code), t)
    assert via_cf == direct


def test_safe_additions_on_c6(catalog_codes):
    code = catalog_codes["C6"]
    t = (3, 2, 1, 5, 4)
    safe = safe_codeword_additions(code, t)
    for labels in ([3], [3, 4], [4, 5], [5]):
        assert m(labels) in safe
    # never proposes an existing codeword
    assert not safe & code.codewords
    # each addition (on its own, and jointly with all the others)
    # keeps the tuple passing
    widened = NeuralCode(code.n, code.codewords | safe)
    assert check_tuple(widened, t).passed
    for sigma in safe:
        one = NeuralCode(code.n, code.codewords | {sigma})
        assert check_tuple(one, t).passed


def test_unsafe_additions_really_break_the_criterion(catalog_codes):
    code = catalog_codes["C6"]
    t = (3, 2, 1, 5, 4)
    safe = safe_codeword_additions(code, t)
    for sigma in range(1 << code.n):
        if sigma in code.codewords or sigma in safe:
            continue
        bigger = NeuralCode(code.n, code.codewords | {sigma})
        assert not check_tuple(bigger, t).passed, bin(sigma)


def test_safe_additions_require_a_passing_tuple(catalog_codes):
    with pytest.raises(ValueError):
        safe_codeword_additions(catalog_codes["RemoveHyp"], (1, 2, 3, 5, 4))


def test_safe_additions_respect_size_guard():
    big = NeuralCode(21, frozenset({0}))
    with pytest.raises(BudgetExceededError):
        safe_codeword_additions(big, (1, 2, 3, 4, 5))


@settings(max_examples=30)
@given(codes(min_n=3, max_n=4))
def test_passing_tuples_survive_their_own_safe_additions(code):
    certs = search_rf_obstruction(code)
    for cert in certs[:2]:
        safe = safe_codeword_additions(code, cert.tuple)
        widened = NeuralCode(code.n, code.codewords | safe)
        assert check_tuple(widened, cert.tuple).passed
