"""Pseudo-monomials, neural-ideal membership, and canonical forms.

Everything works over F2.  A pseudo-monomial is a product
prod_{i in sigma} x_i * prod_{j in tau} (1 + x_j) with sigma, tau
disjoint.  The neural ideal of a code is generated by the
characteristic functions of the non-codewords; a pseudo-monomial lies
in it exactly when it evaluates to 0 on every codeword, which is the
membership test used throughout.  The canonical form is the set of
minimal pseudo-monomials of the ideal.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .codes import NeuralCode, mask_to_neurons, neurons_to_mask
from .errors import BudgetExceededError

CANONICAL_FORM_MAX_N = 20


@dataclass(frozen=True)
class PseudoMonomial:
    """Bitmask pair (sigma, tau) with sigma & tau == 0."""

    sigma: int
    tau: int

    def __post_init__(self):
        if self.sigma & self.tau:
            raise ValueError("sigma and tau must be disjoint")
        if self.sigma < 0 or self.tau < 0:
            raise ValueError("masks must be nonnegative")

    @property
    def degree(self) -> int:
        return (self.sigma | self.tau).bit_count()

    def key(self) -> tuple:
        return (self.degree, mask_to_neurons(self.sigma), mask_to_neurons(self.tau))


def characteristic(v: int, n: int) -> PseudoMonomial:
    """The pseudo-monomial that is 1 exactly at the point v in {0,1}^n."""
    full = (1 << n) - 1
    if v & ~full:
        raise ValueError("v uses neurons beyond n")
    return PseudoMonomial(v, full & ~v)


def evaluate(pm: PseudoMonomial, v: int) -> int:
    """Evaluate at a 0/1 point given as a bitmask: 1 iff sigma ⊆ v and tau ∩ v = ∅."""
    return 1 if (pm.sigma & v) == pm.sigma and (pm.tau & v) == 0 else 0


def divides(g: PseudoMonomial, f: PseudoMonomial) -> bool:
    """g | f for pseudo-monomials: componentwise mask containment."""
    return (g.sigma & f.sigma) == g.sigma and (g.tau & f.tau) == g.tau


def ideal_contains(code: NeuralCode, pm: PseudoMonomial) -> bool:
    """Membership of a pseudo-monomial in the code's neural ideal.

    Sound and complete for pseudo-monomials: they are multilinear, so
    vanishing on every codeword is equivalent to membership.
    """
    if (pm.sigma | pm.tau) & ~code.full_mask:
        raise ValueError("pseudo-monomial mentions neurons beyond the code's universe")
    return all(evaluate(pm, v) == 0 for v in code.codewords)


@dataclass(frozen=True)
class CanonicalForm:
    """Minimal pseudo-monomials of a neural ideal, canonically ordered."""

    n: int
    elements: tuple[PseudoMonomial, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, pm: PseudoMonomial) -> bool:
        return pm in set(self.elements)

    def as_set(self) -> frozenset[PseudoMonomial]:
        return frozenset(self.elements)


def canonical_form(code: NeuralCode) -> CanonicalForm:
    """Compute the canonical form by degree-ordered enumeration.

    Enumerates all 3^n pseudo-monomials in nondecreasing degree
    (ties broken by sigma then tau label tuples), keeps those in the
    ideal, and skips anything divisible by an already-kept element.
    Processing by degree makes the kept set exactly the minimal
    members.
    """
    n = code.n
    if n > CANONICAL_FORM_MAX_N:
        raise BudgetExceededError(
            f"canonical form enumeration is limited to n <= {CANONICAL_FORM_MAX_N}",
            {"n": n},
        )
    words = tuple(code.codewords)
    kept: list[PseudoMonomial] = []
    labels = range(1, n + 1)
    for deg in range(0, n + 1):
        level: list[PseudoMonomial] = []
        for support in combinations(labels, deg):
            smask = neurons_to_mask(support)
            # every sigma ⊆ support, tau = support \ sigma
            for r in range(deg, -1, -1):
                for sig in combinations(support, r):
                    sigma = neurons_to_mask(sig)
                    level.append(PseudoMonomial(sigma, smask & ~sigma))
        level.sort(key=PseudoMonomial.key)
        for pm in level:
            if any(divides(g, pm) for g in kept):
                continue
            if all(evaluate(pm, v) == 0 for v in words):
                kept.append(pm)
    kept.sort(key=PseudoMonomial.key)
    return CanonicalForm(n, tuple(kept))


# ---------------------------------------------------------------------------
# Receptive-field relationships
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RFRelation:
    """Set relationship implied by a canonical-form element.

    kind "empty-intersection": the common region of sigma is empty.
    kind "covering": the common region of sigma lies inside the union
    of the regions of tau.
    """

    kind: str
    sigma: int
    tau: int


def rf_relationships(cf: CanonicalForm) -> tuple[RFRelation, ...]:
    """Translate each canonical-form element into its set relationship."""
    out = []
    for pm in cf.elements:
        if pm.tau == 0:
            out.append(RFRelation("empty-intersection", pm.sigma, 0))
        else:
            out.append(RFRelation("covering", pm.sigma, pm.tau))
    return tuple(out)


# ---------------------------------------------------------------------------
# Text and JSON forms
# ---------------------------------------------------------------------------

_FACTOR_RE = re.compile(
    r"x(\d+)|\(\s*1\s*\+\s*x(\d+)\s*\)|\(\s*x(\d+)\s*\+\s*1\s*\)"
)


def format_pseudo_monomial(pm: PseudoMonomial) -> str:
    """Text form like ``x1*x3*(1+x2)`` (sigma factors first)."""
    parts = [f"x{i}" for i in mask_to_neurons(pm.sigma)]
    parts += [f"(1+x{j})" for j in mask_to_neurons(pm.tau)]
    return "*".join(parts) if parts else "1"


def parse_pseudo_monomial(text: str) -> PseudoMonomial:
    """Parse ``x1*x3*(1+x2)`` style text; ``(x2+1)`` is accepted too."""
    s = text.strip()
    if s == "1":
        return PseudoMonomial(0, 0)
    pos = 0
    sigma = 0
    tau = 0
    while pos < len(s):
        if s[pos] in "* \t":
            pos += 1
            continue
        m = _FACTOR_RE.match(s, pos)
        if not m:
            raise ValueError(f"malformed pseudo-monomial text: {text!r}")
        if m.group(1):
            sigma |= 1 << (int(m.group(1)) - 1)
        else:
            j = int(m.group(2) or m.group(3))
            tau |= 1 << (j - 1)
        pos = m.end()
    return PseudoMonomial(sigma, tau)


def cf_to_json_obj(cf: CanonicalForm) -> list[dict]:
    return [
        {"sigma": list(mask_to_neurons(pm.sigma)), "tau": list(mask_to_neurons(pm.tau))}
        for pm in cf.elements
    ]
