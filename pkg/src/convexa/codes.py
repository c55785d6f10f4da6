"""Combinatorial neural codes over neuron labels 1..n.

A codeword is a subset of neurons, stored as an n-bit mask (neuron i is
bit i-1).  A code is an immutable collection of codewords on a fixed
universe of n <= 64 neurons.  The empty codeword is an ordinary member:
it is never inserted automatically, and :func:`has_empty_codeword`
exists so callers can report its absence.
"""
from __future__ import annotations

import json
import re
import warnings
from collections.abc import Iterable
from dataclasses import dataclass
from typing import NamedTuple

from .errors import CodeParseError

MAX_NEURONS = 64


def neurons_to_mask(neurons: Iterable[int]) -> int:
    """Pack neuron labels (1-based) into a bitmask."""
    mask = 0
    for i in neurons:
        if not 1 <= int(i) <= MAX_NEURONS:
            raise ValueError(f"neuron label out of range 1..{MAX_NEURONS}: {i}")
        mask |= 1 << (int(i) - 1)
    return mask


def mask_to_neurons(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into an increasing tuple of neuron labels."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def word_key(mask: int) -> tuple[int, ...]:
    """Canonical sort key for codewords: the increasing label tuple.

    Tuple comparison then matches the "lexicographically smaller set"
    convention used for orientation tie-breaks, e.g. {1,5} < {2,3}.
    """
    return mask_to_neurons(mask)


@dataclass(frozen=True)
class NeuralCode:
    """A set of codewords on neurons 1..n, each codeword an n-bit mask."""

    n: int
    codewords: frozenset[int]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_NEURONS:
            raise ValueError(f"neuron count must be in 0..{MAX_NEURONS}, got {self.n}")
        full = (1 << self.n) - 1
        for w in self.codewords:
            if w & ~full:
                raise ValueError(
                    f"codeword {set(mask_to_neurons(w))} uses neurons beyond n={self.n}"
                )
        object.__setattr__(self, "codewords", frozenset(self.codewords))

    @classmethod
    def make(cls, n: int, words: Iterable[Iterable[int]]) -> "NeuralCode":
        """Build a code from iterables of neuron labels."""
        return cls(n, frozenset(neurons_to_mask(w) for w in words))

    def __len__(self) -> int:
        return len(self.codewords)

    def __contains__(self, item) -> bool:
        if isinstance(item, int):
            return item in self.codewords
        return neurons_to_mask(item) in self.codewords

    def sorted_masks(self) -> tuple[int, ...]:
        """Codewords in canonical (label-tuple) order."""
        return tuple(sorted(self.codewords, key=word_key))

    def words(self) -> tuple[tuple[int, ...], ...]:
        """Codewords as increasing label tuples, canonically ordered."""
        return tuple(mask_to_neurons(w) for w in self.sorted_masks())

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1


def has_empty_codeword(code: NeuralCode) -> bool:
    return 0 in code.codewords


def maximal_codewords(code: NeuralCode) -> frozenset[int]:
    """Codewords not properly contained in any other codeword."""
    ws = code.codewords
    return frozenset(
        w for w in ws if not any(w != u and w & u == w for u in ws)
    )


class Restriction(NamedTuple):
    """Result of restricting a code to a neuron subset.

    ``code`` lives on the dense universe {1..|tau|}; new label i
    corresponds to original label ``original_labels[i-1]``.
    """

    code: NeuralCode
    original_labels: tuple[int, ...]

    def original_words(self) -> frozenset[int]:
        """Restricted codewords re-expressed in original labels."""
        out = set()
        for w in self.code.codewords:
            out.add(
                neurons_to_mask(
                    self.original_labels[i - 1] for i in mask_to_neurons(w)
                )
            )
        return frozenset(out)


def restrict(code: NeuralCode, tau: Iterable[int]) -> Restriction:
    """Restrict the code to the neurons in ``tau`` (relabelled densely).

    The restricted code is { sigma ∩ tau : sigma in code }, with tau's
    members relabelled to 1..|tau| in increasing original order.
    Distinct codewords may collapse; an empty tau yields the code {∅}
    on a 0-neuron universe.
    """
    tau_mask = neurons_to_mask(tau)
    if tau_mask & ~code.full_mask:
        raise ValueError("restriction set uses neurons beyond the code's universe")
    originals = mask_to_neurons(tau_mask)
    position = {lab: idx + 1 for idx, lab in enumerate(originals)}
    new_words = set()
    for w in code.codewords:
        inter = w & tau_mask
        new_words.add(neurons_to_mask(position[i] for i in mask_to_neurons(inter)))
    return Restriction(NeuralCode(len(originals), frozenset(new_words)), originals)


def add_redundant_neuron(code: NeuralCode, sigma: Iterable[int]) -> NeuralCode:
    """Adjoin neuron n+1 to every codeword containing ``sigma``.

    Models adding a set equal to the union of the regions indexed by
    supersets of sigma; codewords tau ⊇ sigma gain the new neuron,
    all others are unchanged.
    """
    if code.n >= MAX_NEURONS:
        raise ValueError("cannot exceed 64 neurons")
    sig = neurons_to_mask(sigma)
    if sig & ~code.full_mask:
        raise ValueError("sigma uses neurons beyond the code's universe")
    new_bit = 1 << code.n
    words = frozenset(
        w | new_bit if w & sig == sig else w for w in code.codewords
    )
    return NeuralCode(code.n + 1, words)


def adjoin_union_neuron(code: NeuralCode, r: Iterable[int]) -> NeuralCode:
    """Adjoin neuron n+1 to every codeword meeting ``r``.

    Models adding a set equal to the union of the regions of the
    neurons in r: codewords tau with tau ∩ r nonempty gain the new
    neuron.
    """
    if code.n >= MAX_NEURONS:
        raise ValueError("cannot exceed 64 neurons")
    r_mask = neurons_to_mask(r)
    if r_mask == 0:
        raise ValueError("r must be nonempty")
    if r_mask & ~code.full_mask:
        raise ValueError("r uses neurons beyond the code's universe")
    new_bit = 1 << code.n
    words = frozenset(w | new_bit if w & r_mask else w for w in code.codewords)
    return NeuralCode(code.n + 1, words)


def permute_neurons(code: NeuralCode, perm: dict[int, int]) -> NeuralCode:
    """Relabel neurons by a permutation {1..n} -> {1..n}."""
    if sorted(perm) != list(range(1, code.n + 1)) or sorted(
        perm.values()
    ) != list(range(1, code.n + 1)):
        raise ValueError("perm must be a permutation of 1..n")
    words = frozenset(
        neurons_to_mask(perm[i] for i in mask_to_neurons(w)) for w in code.codewords
    )
    return NeuralCode(code.n, words)


# ---------------------------------------------------------------------------
# Parsing and formatting
# ---------------------------------------------------------------------------

_HEADER_RE = re.compile(r"^\s*n\s*=\s*(\d+)\s*$")
_TOKEN_RE = re.compile(r"\{[^{}]*\}|[^\s,{}]+")


def _parse_token(tok: str) -> tuple[int, ...]:
    if tok.startswith("{"):
        inner = tok[1:-1].strip()
        if not inner:
            return ()
        labs = []
        for part in re.split(r"[\s,]+", inner):
            if not part.isdigit():
                raise CodeParseError(f"malformed codeword token: {tok!r}")
            labs.append(int(part))
        return tuple(labs)
    if tok == "0":
        return ()
    if not tok.isdigit():
        raise CodeParseError(f"malformed codeword token: {tok!r}")
    labs = tuple(int(ch) for ch in tok)
    if 0 in labs:
        raise CodeParseError(
            f"digit 0 inside token {tok!r}; digit-string tokens use digits 1..9"
        )
    return labs


def parse_code(text: str) -> NeuralCode:
    """Parse a code from text or JSON.

    Text format: codewords separated by commas or whitespace; each is a
    digit string (one neuron per digit, labels 1..9), or ``{a,b,...}``
    with multi-digit labels, with ``{}`` (or ``0``) for the empty
    codeword.  An optional first line ``n=<int>`` fixes the universe;
    otherwise n is the largest label mentioned.  JSON alternative:
    ``{"n": int, "codewords": [[...], ...]}``.

    Duplicate codewords produce a warning and are deduplicated; a label
    exceeding a declared n is an error.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError:
            obj = None
        if isinstance(obj, dict) and "codewords" in obj:
            return _code_from_json_obj(obj)

    lines = stripped.splitlines()
    declared_n = None
    if lines:
        m = _HEADER_RE.match(lines[0])
        if m:
            declared_n = int(m.group(1))
            lines = lines[1:]
    body = "\n".join(lines)

    words: list[tuple[int, ...]] = []
    for tok in _TOKEN_RE.findall(body):
        words.append(_parse_token(tok))
    if not words:
        raise CodeParseError("no codewords found")

    max_label = max((max(w) for w in words if w), default=0)
    if declared_n is not None:
        if max_label > declared_n:
            raise CodeParseError(
                f"label {max_label} exceeds declared n={declared_n}"
            )
        n = declared_n
    else:
        if max_label == 0:
            raise CodeParseError(
                "cannot infer n from an empty-codeword-only description; "
                "add an n=<int> header"
            )
        n = max_label

    masks = [neurons_to_mask(w) for w in words]
    if len(set(masks)) != len(masks):
        warnings.warn("duplicate codewords in input; deduplicating", stacklevel=2)
    return NeuralCode(n, frozenset(masks))


def _code_from_json_obj(obj: dict) -> NeuralCode:
    try:
        n = int(obj["n"])
        raw = obj["codewords"]
        words = [tuple(int(i) for i in w) for w in raw]
    except (KeyError, TypeError, ValueError) as exc:
        raise CodeParseError(f"malformed JSON code object: {exc}") from exc
    masks = [neurons_to_mask(w) for w in words]
    if len(set(masks)) != len(masks):
        warnings.warn("duplicate codewords in input; deduplicating", stacklevel=2)
    code = NeuralCode(n, frozenset(masks))
    if any(w & ~code.full_mask for w in masks):  # pragma: no cover - caught above
        raise CodeParseError("codeword label exceeds declared n")
    return code


def format_code(code: NeuralCode) -> str:
    """Render a code in the text format (round-trips through parse_code)."""
    toks = []
    for w in code.sorted_masks():
        labs = mask_to_neurons(w)
        if not labs:
            toks.append("{}")
        elif code.n <= 9:
            toks.append("".join(str(i) for i in labs))
        else:
            toks.append("{" + ",".join(str(i) for i in labs) + "}")
    return f"n={code.n}\n" + ", ".join(toks)


def code_to_json_obj(code: NeuralCode) -> dict:
    return {
        "n": code.n,
        "codewords": [list(w) for w in code.words()],
    }
