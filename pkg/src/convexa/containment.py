"""Codeword containment graphs and path/cycle structure tests.

Vertices are codewords; two codewords are adjacent when one properly
contains the other.  Recognition of path and cycle shapes returns a
canonical linear ordering so downstream certificates are
deterministic.
"""
from __future__ import annotations

import json
from collections.abc import Iterable
from dataclasses import dataclass

from .codes import mask_to_neurons, word_key


@dataclass(frozen=True)
class ContainmentGraph:
    vertices: tuple[int, ...]  # canonical word_key order
    edges: frozenset[tuple[int, int]]  # each (u, v) with word_key(u) < word_key(v)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbors(self, v: int) -> tuple[int, ...]:
        out = [u if w == v else w for (u, w) in self.edges if v in (u, w)]
        return tuple(sorted(out, key=word_key))

    def connected_components(self) -> tuple[frozenset[int], ...]:
        """Components as frozensets, ordered by their smallest vertex."""
        seen: set[int] = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            stack = [v]
            comp = set()
            while stack:
                u = stack.pop()
                if u in comp:
                    continue
                comp.add(u)
                stack.extend(w for w in self.neighbors(u) if w not in comp)
            seen |= comp
            comps.append(frozenset(comp))
        return tuple(sorted(comps, key=lambda c: min(word_key(v) for v in c)))


def containment_graph(codewords: Iterable[int]) -> ContainmentGraph:
    """Graph on the given codewords with edges for proper containment."""
    verts = sorted(set(codewords), key=word_key)
    edges = set()
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            if (u & v) == u or (u & v) == v:  # u ⊆ v or v ⊆ u; equality excluded
                edges.add((u, v))
    return ContainmentGraph(tuple(verts), frozenset(edges))


@dataclass(frozen=True)
class LinearOrdering:
    """A path or cycle ordering of codewords."""

    kind: str  # "path" | "cycle"
    sequence: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.sequence)


def recognize_path(g: ContainmentGraph) -> LinearOrdering | None:
    """The unique-up-to-reversal path ordering, or None.

    Orientation tie-break: the lexicographically smaller endpoint (by
    label tuple) comes first.  A single vertex counts as a path; two
    vertices must be joined by an edge.
    """
    q = len(g.vertices)
    if q == 0:
        return None
    if q == 1:
        return LinearOrdering("path", (g.vertices[0],))
    if len(g.edges) != q - 1:
        return None
    degs = {v: g.degree(v) for v in g.vertices}
    ends = [v for v in g.vertices if degs[v] == 1]
    if len(ends) != 2 or any(degs[v] not in (1, 2) for v in g.vertices):
        return None
    if len(g.connected_components()) != 1:
        return None
    start = min(ends, key=word_key)
    seq = [start]
    prev = None
    cur = start
    while len(seq) < q:
        nxt = [u for u in g.neighbors(cur) if u != prev]
        if len(nxt) != 1:
            return None
        prev, cur = cur, nxt[0]
        seq.append(cur)
    return LinearOrdering("path", tuple(seq))


def recognize_cycle(g: ContainmentGraph) -> LinearOrdering | None:
    """The canonical cycle ordering, or None.

    Requires a simple cycle (connected, all degrees 2, q >= 3).  The
    ordering starts at the lexicographically smallest vertex and runs
    toward its smaller neighbor.
    """
    q = len(g.vertices)
    if q < 3 or len(g.edges) != q:
        return None
    if any(g.degree(v) != 2 for v in g.vertices):
        return None
    if len(g.connected_components()) != 1:
        return None
    start = min(g.vertices, key=word_key)
    first = min(g.neighbors(start), key=word_key)
    seq = [start, first]
    prev, cur = start, first
    while len(seq) < q:
        nxt = [u for u in g.neighbors(cur) if u != prev]
        if len(nxt) != 1:
            return None
        prev, cur = cur, nxt[0]
        seq.append(cur)
    # closing edge must exist (guaranteed by degree count, but be explicit)
    closing = tuple(sorted((seq[-1], start), key=word_key))
    if closing not in g.edges:
        return None
    return LinearOrdering("cycle", tuple(seq))


def triplewise_condition(ordering: LinearOrdering) -> bool:
    """Every three consecutive codewords share a neuron.

    For cycles the scan wraps around; paths with fewer than three
    vertices pass vacuously.
    """
    seq = ordering.sequence
    q = len(seq)
    if ordering.kind == "path":
        return all(seq[i] & seq[i + 1] & seq[i + 2] for i in range(q - 2))
    return all(seq[i] & seq[(i + 1) % q] & seq[(i + 2) % q] for i in range(q))


@dataclass(frozen=True)
class IntervalViolation:
    neuron: int
    positions: tuple[int, ...]  # 1-based positions along the ordering


def interval_condition(ordering: LinearOrdering, n: int) -> IntervalViolation | None:
    """Check that each neuron occupies contiguous positions along a path.

    Returns None when the condition holds, otherwise the first
    violating neuron with its (1-based) position set.  Cheap necessary
    condition for closed-convexity of path-shaped codes.
    """
    if ordering.kind != "path":
        raise ValueError("interval condition applies to path orderings")
    for i in range(1, n + 1):
        bit = 1 << (i - 1)
        pos = tuple(p + 1 for p, w in enumerate(ordering.sequence) if w & bit)
        if pos and pos[-1] - pos[0] + 1 != len(pos):
            return IntervalViolation(i, pos)
    return None


def alternating_condition(ordering: LinearOrdering) -> bool:
    """Containment directions strictly alternate along the ordering.

    Consecutive codewords must be strictly comparable.  For cycles the
    scan wraps (so an odd cycle always fails).  On a genuine
    containment-graph path alternation is automatic, because two
    same-direction steps would force a chord.
    """
    seq = ordering.sequence
    q = len(seq)
    pairs = q - 1 if ordering.kind == "path" else q
    dirs = []
    for i in range(pairs):
        a, b = seq[i], seq[(i + 1) % q]
        if a & b == a and a != b:
            dirs.append(1)  # a ⊂ b
        elif a & b == b and a != b:
            dirs.append(-1)  # a ⊃ b
        else:
            return False
    if ordering.kind == "path":
        return all(dirs[i] != dirs[i + 1] for i in range(len(dirs) - 1))
    return all(dirs[i] != dirs[(i + 1) % q] for i in range(q))


# ---------------------------------------------------------------------------
# Exports
# ---------------------------------------------------------------------------


def _vertex_name(v: int) -> str:
    labs = mask_to_neurons(v)
    return "{" + ",".join(str(i) for i in labs) + "}" if labs else "{}"


def to_dot(g: ContainmentGraph) -> str:
    lines = ["graph containment {"]
    for v in g.vertices:
        lines.append(f'  "{_vertex_name(v)}";')
    for u, v in sorted(g.edges, key=lambda e: (word_key(e[0]), word_key(e[1]))):
        lines.append(f'  "{_vertex_name(u)}" -- "{_vertex_name(v)}";')
    lines.append("}")
    return "\n".join(lines)


def to_json_adjacency(g: ContainmentGraph) -> str:
    adj = {
        _vertex_name(v): [_vertex_name(u) for u in g.neighbors(v)] for v in g.vertices
    }
    return json.dumps(adj, indent=2)
