"""Rigid structures and non-closed-convexity certificates.

Two witness modes: an intersection structure (support, ∩) is rigid
automatically, while a union structure (support, ∪) is certified by
the path criterion: the containment graph of the codewords meeting the
support (optionally after restricting the code to a superset sigma')
must be a path whose consecutive triples are braced *relative to the
support*: each triple must share a neuron of the support, or contain a
whole codeword that meets the support.  Merely sharing a neuron
outside the support is not enough — the convexity argument works in a
universe where outside neurons are forgotten and codewords meeting the
support survive as markers, so a brace must still be visible there.

A pair of rigid witnesses yields the distinguished subcode; if its
containment graph is disconnected, the code has no closed-convex
realization, and the pair is packaged as a replayable certificate.
A cycle-shaped containment graph gives a one-shot criterion: remove a
valley vertex whose residual path satisfies the triple condition, and
the valley (as ∩) together with its complement (as ∪) splits the two
neighbors of the valley into separate components.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .codes import NeuralCode, mask_to_neurons, neurons_to_mask, word_key
from .containment import (
    ContainmentGraph,
    LinearOrdering,
    containment_graph,
    recognize_cycle,
    recognize_path,
    triplewise_condition,
)
from .errors import BudgetExceededError

UNION = "union"
INTERSECTION = "intersection"


@dataclass(frozen=True)
class RigidWitness:
    """A certified rigid structure.

    ``support`` is a neuron bitmask.  Union-mode witnesses carry the
    path ordering that certifies them and the restriction universe
    ``sigma_prime`` it was computed in (None means the full universe).
    Intersection-mode witnesses are automatic and carry no certificate.
    """

    support: int
    mode: str
    path: LinearOrdering | None = None
    sigma_prime: int | None = None

    def __post_init__(self):
        if self.mode not in (UNION, INTERSECTION):
            raise ValueError(f"unknown witness mode: {self.mode}")
        if self.support == 0:
            raise ValueError("witness support must be nonempty")


def intersection_witness(support) -> RigidWitness:
    """(support, ∩) is rigid with no side conditions."""
    mask = support if isinstance(support, int) else neurons_to_mask(support)
    return RigidWitness(mask, INTERSECTION)


def _restricted_words(code: NeuralCode, sigma_prime: int | None) -> frozenset[int]:
    if sigma_prime is None:
        return code.codewords
    return frozenset(w & sigma_prime for w in code.codewords)


def _braced_triples(path: LinearOrdering, r_mask: int, verts) -> bool:
    """Triple condition strong enough to survive forgetting non-support neurons.

    For consecutive path codewords (a, b, c), the brace must remain
    after the code is cut down to the support plus one marker neuron
    per codeword meeting the support: a ∩ b ∩ c must meet the support,
    or contain some codeword that meets the support (the markers of
    such codewords are exactly what survives the cut).  The candidate
    codewords are the path's own vertices.  The naive condition
    "a ∩ b ∩ c nonempty" is implied but not sufficient: a brace neuron
    outside the support vanishes in the cut-down universe and the
    convexity argument breaks (which is how a known closed-convex code
    would otherwise be flagged).
    """
    seq = path.sequence
    vert_set = tuple(verts)
    for a, b, c in zip(seq, seq[1:], seq[2:]):
        triple = a & b & c
        if triple & r_mask:
            continue
        if any(v and (v & triple) == v for v in vert_set):
            continue
        return False
    return True


def path_rigidity_witness(
    code: NeuralCode, r, sigma_prime=None
) -> RigidWitness | None:
    """Certify (r, ∪) via the path criterion, or return None.

    Builds the containment graph of the codewords meeting r (within
    restrict(code, sigma_prime) when sigma_prime is given; codewords
    are kept in original labels, so the certificate reads in the
    code's own universe).  Succeeds when the graph is a path whose
    consecutive triples are braced relative to r (_braced_triples).
    """
    r_mask = r if isinstance(r, int) else neurons_to_mask(r)
    if r_mask == 0:
        raise ValueError("r must be nonempty")
    sp_mask = None
    if sigma_prime is not None:
        sp_mask = (
            sigma_prime if isinstance(sigma_prime, int) else neurons_to_mask(sigma_prime)
        )
        if r_mask & ~sp_mask:
            raise ValueError("sigma_prime must contain r")
    words = _restricted_words(code, sp_mask)
    verts = [w for w in words if w & r_mask]
    g = containment_graph(verts)
    path = recognize_path(g)
    if path is None or not _braced_triples(path, r_mask, verts):
        return None
    return RigidWitness(r_mask, UNION, path=path, sigma_prime=sp_mask)


def verify_witness(code: NeuralCode, w: RigidWitness) -> bool:
    """Re-derive a witness from scratch and compare."""
    if w.mode == INTERSECTION:
        return w.support != 0
    fresh = path_rigidity_witness(code, w.support, w.sigma_prime)
    return fresh is not None and fresh.path == w.path


def _satisfies(word: int, w: RigidWitness) -> bool:
    if w.mode == UNION:
        return bool(word & w.support)
    return (word & w.support) == w.support


def distinguished_subcode(
    code: NeuralCode, w1: RigidWitness, w2: RigidWitness
) -> NeuralCode:
    """Codewords compatible with both witnesses.

    Union mode keeps codewords meeting the support; intersection mode
    keeps codewords containing it.  The empty codeword never qualifies
    (supports are nonempty), so it is never a member.
    """
    words = frozenset(
        w for w in code.codewords if _satisfies(w, w1) and _satisfies(w, w2)
    )
    return NeuralCode(code.n, words)


@dataclass(frozen=True)
class RigidPairCertificate:
    """Disconnected distinguished subcode of two rigid witnesses."""

    kind: str = field(default="rigid-pair", init=False)
    witnesses: tuple[RigidWitness, RigidWitness] = ()
    subcode: frozenset[int] = frozenset()
    component_a: frozenset[int] = frozenset()
    component_b: frozenset[int] = frozenset()


@dataclass(frozen=True)
class CycleCertificate:
    """Cycle-shaped containment graph with a certified valley removal."""

    kind: str = field(default="cycle", init=False)
    ordering: LinearOrdering = None
    valley: int = 0  # the removed vertex, used in intersection mode
    witnesses: tuple[RigidWitness, RigidWitness] = ()  # (union, intersection)
    subcode: frozenset[int] = frozenset()
    component_a: frozenset[int] = frozenset()
    component_b: frozenset[int] = frozenset()


def rigid_pair_obstruction(
    code: NeuralCode, w1: RigidWitness, w2: RigidWitness
) -> RigidPairCertificate | None:
    """Certificate when the distinguished subcode is disconnected.

    Witnesses are re-verified first; an invalid witness is an error,
    not a negative result.
    """
    for w in (w1, w2):
        if not verify_witness(code, w):
            raise ValueError("invalid rigid witness")
    sub = distinguished_subcode(code, w1, w2)
    comps = containment_graph(sub.codewords).connected_components()
    if len(comps) < 2:
        return None
    return RigidPairCertificate(
        witnesses=(w1, w2),
        subcode=sub.codewords,
        component_a=comps[0],
        component_b=comps[1],
    )


def _valleys(order: LinearOrdering) -> list[tuple[int, int, int]]:
    """(valley, predecessor, successor) triples, canonically ordered."""
    seq = order.sequence
    q = len(seq)
    out = []
    for i, v in enumerate(seq):
        a, b = seq[(i - 1) % q], seq[(i + 1) % q]
        if (v & a) == v and (v & b) == v and v not in (a, b):
            out.append((v, a, b))
    out.sort(key=lambda t: word_key(t[0]))
    return out


def cycle_criterion(code: NeuralCode) -> CycleCertificate | None:
    """One-shot obstruction for cycle-shaped containment graphs.

    Requires the containment graph of the nonempty codewords to be a
    simple cycle with at least four vertices, and some valley vertex
    sigma_2 (one properly contained in both neighbors) whose removal
    leaves a path satisfying the braced triple condition.  The certificate
    pairs (complement of sigma_2, ∪) with (sigma_2, ∩); the
    distinguished subcode is the two neighbors of sigma_2, which are
    incomparable, so its containment graph is disconnected.
    """
    verts = [w for w in code.codewords if w]
    order = recognize_cycle(containment_graph(verts))
    if order is None or len(order) < 4:
        return None
    seq = order.sequence
    q = len(seq)
    for valley, _pred, _succ in _valleys(order):
        i = seq.index(valley)
        residual = tuple(seq[(i + k) % q] for k in range(1, q))
        if not triplewise_condition(LinearOrdering("path", residual)):
            continue
        complement = code.full_mask & ~valley
        if complement == 0:
            continue
        w_union = path_rigidity_witness(code, complement)
        if w_union is None:
            # the residual path passed the naive triple check but not
            # the braced one, or a codeword inside the valley broke it
            continue
        w_inter = intersection_witness(valley)
        sub = distinguished_subcode(code, w_union, w_inter)
        comps = containment_graph(sub.codewords).connected_components()
        if len(comps) < 2:  # pragma: no cover - neighbors are incomparable
            continue
        return CycleCertificate(
            ordering=order,
            valley=valley,
            witnesses=(w_union, w_inter),
            subcode=sub.codewords,
            component_a=comps[0],
            component_b=comps[1],
        )
    return None


# ---------------------------------------------------------------------------
# Search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchBudget:
    max_support: int = 4
    max_candidates: int = 20_000
    max_pair_checks: int = 2_000_000


def _candidate_supports(code: NeuralCode, budget: SearchBudget) -> list[int]:
    """Union-candidate pool: codewords, their complements, small supports."""
    pool: list[int] = []
    seen: set[int] = set()

    def push(mask: int):
        if mask and mask not in seen:
            seen.add(mask)
            pool.append(mask)

    for w in sorted(code.codewords, key=word_key):
        push(w)
    for w in sorted(code.codewords, key=word_key):
        push(code.full_mask & ~w)
    small = _small_supports(code.n, budget.max_support)
    if len(pool) + len(small) > budget.max_candidates:
        raise BudgetExceededError(
            "union-candidate pool exceeds max_candidates",
            {"pool": len(pool) + len(small), "max_candidates": budget.max_candidates},
        )
    for m in small:
        push(m)
    return pool


def _small_supports(n: int, max_size: int) -> list[int]:
    out = []
    for size in range(1, min(n, max_size) + 1):
        for combo in combinations(range(1, n + 1), size):
            out.append(neurons_to_mask(combo))
    return out


def search_rigid_obstruction(
    code: NeuralCode, budget: SearchBudget = SearchBudget()
) -> RigidPairCertificate | CycleCertificate | None:
    """Deterministic obstruction search; returns the first certificate.

    Order: (a) the cycle criterion; (b) for each union candidate r
    (codewords, then complements of codewords, then all supports of
    size <= budget.max_support), attempt the path criterion directly
    and then within the restriction to r, and pair every certified
    union witness with all intersection supports of size <=
    budget.max_support and with previously certified union witnesses.

    Absence of a certificate is reported as None; it never means the
    code is closed-convex.  Budget exhaustion raises
    BudgetExceededError instead of returning None.
    """
    cyc = cycle_criterion(code)
    if cyc is not None:
        return cyc

    inter_supports = _small_supports(code.n, budget.max_support)
    if len(inter_supports) > budget.max_candidates:
        raise BudgetExceededError(
            "intersection-candidate pool exceeds max_candidates",
            {"pool": len(inter_supports), "max_candidates": budget.max_candidates},
        )
    pool = _candidate_supports(code, budget)

    checks = 0
    union_witnesses: list[RigidWitness] = []
    for r in pool:
        w_u = path_rigidity_witness(code, r)
        if w_u is None:
            w_u = path_rigidity_witness(code, r, sigma_prime=r)
        if w_u is None:
            continue
        for c in inter_supports:
            checks += 1
            if checks > budget.max_pair_checks:
                raise BudgetExceededError(
                    "pair-check budget exhausted",
                    {"checks": checks, "last_union_support": mask_to_neurons(r)},
                )
            cert = rigid_pair_obstruction(code, w_u, intersection_witness(c))
            if cert is not None:
                return cert
        for w_prev in union_witnesses:
            checks += 1
            if checks > budget.max_pair_checks:
                raise BudgetExceededError(
                    "pair-check budget exhausted",
                    {"checks": checks, "last_union_support": mask_to_neurons(r)},
                )
            cert = rigid_pair_obstruction(code, w_u, w_prev)
            if cert is not None:
                return cert
        union_witnesses.append(w_u)
    return None


def replay_certificate(code: NeuralCode, cert) -> bool:
    """Re-derive every claim in a certificate from the raw definitions."""
    if cert.kind == "rigid-pair":
        w1, w2 = cert.witnesses
        if not (verify_witness(code, w1) and verify_witness(code, w2)):
            return False
        sub = distinguished_subcode(code, w1, w2)
        if sub.codewords != cert.subcode or 0 in sub.codewords:
            return False
        comps = containment_graph(sub.codewords).connected_components()
        return (
            len(comps) >= 2
            and cert.component_a in comps
            and cert.component_b in comps
            and cert.component_a != cert.component_b
        )
    if cert.kind == "cycle":
        verts = [w for w in code.codewords if w]
        order = recognize_cycle(containment_graph(verts))
        if order != cert.ordering or len(order) < 4:
            return False
        seq = order.sequence
        q = len(seq)
        if cert.valley not in seq:
            return False
        i = seq.index(cert.valley)
        pred, succ = seq[(i - 1) % q], seq[(i + 1) % q]
        v = cert.valley
        if not ((v & pred) == v and (v & succ) == v and v not in (pred, succ)):
            return False
        residual = tuple(seq[(i + k) % q] for k in range(1, q))
        if not triplewise_condition(LinearOrdering("path", residual)):
            return False
        w_union, w_inter = cert.witnesses
        if w_inter.mode != INTERSECTION or w_inter.support != v:
            return False
        if w_union.mode != UNION or w_union.support != (code.full_mask & ~v):
            return False
        if not verify_witness(code, w_union):
            return False
        sub = distinguished_subcode(code, w_union, w_inter)
        if sub.codewords != cert.subcode or sub.codewords != {pred, succ}:
            return False
        comps = containment_graph(sub.codewords).connected_components()
        return len(comps) == 2
    if cert.kind == "rf-tuple":
        from .rf_criterion import check_tuple

        return check_tuple(code, cert.tuple).passed
    raise ValueError(f"unknown certificate kind: {cert.kind!r}")


# ---------------------------------------------------------------------------
# JSON rendering
# ---------------------------------------------------------------------------


def _witness_to_obj(w: RigidWitness) -> dict:
    obj: dict = {"support": list(mask_to_neurons(w.support)), "mode": w.mode}
    if w.mode == UNION:
        obj["path"] = [list(mask_to_neurons(v)) for v in w.path.sequence]
        if w.sigma_prime is not None:
            obj["sigma_prime"] = list(mask_to_neurons(w.sigma_prime))
    return obj


def certificate_to_obj(cert) -> dict:
    """JSON-ready dict for any certificate kind."""
    if cert.kind in ("rigid-pair", "cycle"):
        obj = {
            "kind": cert.kind,
            "witnesses": [_witness_to_obj(w) for w in cert.witnesses],
            "subcode": [
                list(mask_to_neurons(w)) for w in sorted(cert.subcode, key=word_key)
            ],
            "components": [
                [list(mask_to_neurons(w)) for w in sorted(c, key=word_key)]
                for c in (cert.component_a, cert.component_b)
            ],
        }
        if cert.kind == "cycle":
            obj["ordering"] = [
                list(mask_to_neurons(v)) for v in cert.ordering.sequence
            ]
            obj["valley"] = list(mask_to_neurons(cert.valley))
        return obj
    if cert.kind == "rf-tuple":
        return {"kind": "rf-tuple", "tuple": list(cert.tuple)}
    raise ValueError(f"unknown certificate kind: {cert.kind!r}")
