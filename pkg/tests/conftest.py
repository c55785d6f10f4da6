"""Shared fixtures and hypothesis strategies."""
from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from convexa import NeuralCode, named_code

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    max_examples=60,
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def catalog_codes():
    return {name: named_code(name) for name in
            ("C6", "C10", "C15", "C_star", "RemoveHyp", "C_Cr", "C_theta", "C8",
             "SimplD")}


def random_code(rng: random.Random, n: int, density: float = 0.35) -> NeuralCode:
    words = {0} if rng.random() < 0.5 else set()
    for w in range(1, 1 << n):
        if rng.random() < density:
            words.add(w)
    if not words:
        words.add(0)
    return NeuralCode(n, frozenset(words))


def codes(min_n=1, max_n=5, with_empty=None):
    """Hypothesis strategy for small neural codes (bitmask codewords)."""

    def build(n, picks, include_empty):
        words = set(picks)
        if include_empty:
            words.add(0)
        if not words:
            words.add(0)
        return NeuralCode(n, frozenset(words))

    return st.integers(min_n, max_n).flatmap(
        lambda n: st.builds(
            build,
            st.just(n),
            st.sets(st.integers(0, (1 << n) - 1), max_size=min(24, 1 << n)),
            st.booleans() if with_empty is None else st.just(with_empty),
        )
    )


def permutations_of(n: int):
    return st.permutations(list(range(1, n + 1)))


# ---------------------------------------------------------------------------
# acceptance reporting: one PASS/FAIL line per criterion in the summary
# ---------------------------------------------------------------------------

_ACCEPTANCE_RESULTS: dict[int, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    criteria = getattr(item.module, "CRITERIA", None)
    if not criteria:
        return
    entry = criteria.get(item.originalname or item.name)
    if entry is None:
        return
    num, label = entry
    verdict = "PASS" if report.passed else "FAIL"
    _ACCEPTANCE_RESULTS[num] = f"criterion {num:2d}: {verdict} — {label}"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE_RESULTS):
        terminalreporter.write_line(_ACCEPTANCE_RESULTS[num])
