"""Named example codes and the two parametric families.

Fixture data is embedded here; parametric families are generated.
Names: the fixed fixtures below, plus ``D<k>`` (k >= 5) and ``S<k>``
(k >= 2).
"""
from __future__ import annotations

import re

from .codes import NeuralCode, neurons_to_mask, parse_code

_FIXTURES: dict[str, str] = {
    # five-neuron examples
    "C6": "123, 125, 145, 234, 12, 15, 23, 4, {}",
    "C10": "134, 135, 234, 245, 12, 13, 24, 34, 1, 2, 5, {}",
    "C15": "123, 125, 145, 234, 345, 12, 15, 23, 34, 45, {}",
    "C_star": "2345, 123, 134, 145, 13, 14, 23, 34, 45, 3, 4, {}",
    "RemoveHyp": "123, 124, 235, 45, 12, 14, 23, 35, 4, 5, {}",
    # six neurons
    "C_Cr": "123, 126, 156, 234, 345, 456, 12, 16, 23, 34, 45, 56, {}",
    # four neurons
    "C_theta": "123, 14, 24, 34, 1, 2, 3, 4, {}",
    # eight neurons
    "C8": "12378, 1457, 2456, 3468, 278, 17, 38, 45, 46, 2, {}",
    "SimplD": (
        "12467, 2678, 123, 138, 345, 456, 1246, 1267, 2467,"
        " 267, 467, 12, 13, 45, 46, 67, 3, 8, {}"
    ),
}

_FAMILY_RE = re.compile(r"^([DS])(\d+)$")


def generate_Dn(n: int) -> NeuralCode:
    """Pinwheel-family code on n+1 neurons (n >= 5).

    Codewords: the chain {1,2}, {1,2,3}, {2,3}, ..., {n-2,n-1,n},
    {n-1,n}; plus {1,2,n+1}, {n+1}, {n-1,n,n+1}, and the empty
    codeword.
    """
    if n < 5:
        raise ValueError("the pinwheel family needs n >= 5")
    if n + 1 > 64:
        raise ValueError("too many neurons")
    words: list[tuple[int, ...]] = []
    for i in range(1, n):
        words.append((i, i + 1))
    for i in range(1, n - 1):
        words.append((i, i + 1, i + 2))
    words.append((1, 2, n + 1))
    words.append((n + 1,))
    words.append((n - 1, n, n + 1))
    words.append(())
    return NeuralCode.make(n + 1, words)


def generate_sunflower(n: int) -> NeuralCode:
    """Sunflower code on 2n+2 neurons (n >= 2).

    Codewords: the empty codeword; sigma ∪ {n+1} for every nonempty
    proper sigma ⊂ [n]; the petal singletons {n+2}, ..., {2n+2}; the
    petal ends ([n+1] \\ {i}) ∪ {n+1+i} for 1 <= i <= n; the polygon
    codeword [n+1] ∪ {2n+2}; and the center {n+2, ..., 2n+2}.
    Total 2^n + 2n + 2 codewords.
    """
    if n < 2:
        raise ValueError("the sunflower family needs n >= 2")
    if 2 * n + 2 > 64:
        raise ValueError("too many neurons")
    nn = 2 * n + 2
    hub = n + 1
    words: set[int] = {0}
    full_n = (1 << n) - 1
    hub_bit = 1 << (hub - 1)
    for sigma in range(1, full_n):  # nonempty proper subsets of [n]
        words.add(sigma | hub_bit)
    for p in range(n + 2, nn + 1):
        words.add(1 << (p - 1))
    base = full_n | hub_bit  # [n+1]
    for i in range(1, n + 1):
        words.add((base & ~(1 << (i - 1))) | (1 << (n + i)))  # ([n+1]\{i}) ∪ {n+1+i}
    words.add(base | (1 << (nn - 1)))  # polygon codeword
    words.add(neurons_to_mask(range(n + 2, nn + 1)))  # center
    code = NeuralCode(nn, frozenset(words))
    assert len(code) == 2**n + 2 * n + 2
    return code


def list_names() -> tuple[str, ...]:
    """Fixed fixture names plus family name patterns."""
    return tuple(sorted(_FIXTURES)) + ("D<k> (k>=5)", "S<k> (k>=2)")


def named_code(name: str) -> NeuralCode:
    """Resolve a catalog name to a code."""
    if name in _FIXTURES:
        return parse_code(_FIXTURES[name])
    m = _FAMILY_RE.match(name)
    if m:
        k = int(m.group(2))
        return generate_Dn(k) if m.group(1) == "D" else generate_sunflower(k)
    raise KeyError(f"unknown catalog name: {name!r}")
