"""Convex bodies as exact halfspace intersections.

A body is a finite list of rational constraints a.x <= b (closed) or
a.x < b (open).  A realization is an ordered tuple of bodies in a
common ambient dimension, tagged with the mode every body must obey:
"closed" bodies use only weak rows, "open" bodies only strict rows,
so each body is honestly closed resp. open as a point set.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

OPEN, CLOSED = "open", "closed"
_MODES = {OPEN, CLOSED}
_MODE_REL = {CLOSED: "le", OPEN: "lt"}


def _fr(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass int, Fraction, or str")
    return Fraction(x)


@dataclass(frozen=True)
class Constraint:
    """One halfspace row: normal . x  (<= | <)  offset."""

    normal: tuple[Fraction, ...]
    offset: Fraction
    rel: str  # "le" or "lt"

    def __post_init__(self):
        object.__setattr__(self, "normal", tuple(_fr(c) for c in self.normal))
        object.__setattr__(self, "offset", _fr(self.offset))
        if self.rel not in ("le", "lt"):
            raise ValueError(f"constraint relation must be le or lt, got {self.rel!r}")

    def as_triple(self):
        return (self.normal, self.offset, self.rel)

    def holds_at(self, point) -> bool:
        val = sum(c * x for c, x in zip(self.normal, point))
        return val <= self.offset if self.rel == "le" else val < self.offset


@dataclass(frozen=True)
class HalfspaceBody:
    """Intersection of finitely many halfspaces in Q^dim."""

    dim: int
    constraints: tuple[Constraint, ...]

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))
        if self.dim < 1:
            raise ValueError("ambient dimension must be positive")
        for c in self.constraints:
            if len(c.normal) != self.dim:
                raise ValueError("constraint/body dimension mismatch")
        object.__setattr__(
            self, "_triples", tuple(c.as_triple() for c in self.constraints)
        )

    def contains(self, point) -> bool:
        pt = [_fr(x) for x in point]
        if len(pt) != self.dim:
            raise ValueError("point/body dimension mismatch")
        return all(c.holds_at(pt) for c in self.constraints)

    def triples(self):
        return self._triples


@dataclass(frozen=True)
class Realization:
    """An ordered collection of bodies, all open or all closed."""

    dim: int
    bodies: tuple[HalfspaceBody, ...]
    mode: str

    def __post_init__(self):
        object.__setattr__(self, "bodies", tuple(self.bodies))
        if self.mode not in _MODES:
            raise ValueError(f"mode must be open or closed, got {self.mode!r}")
        want = _MODE_REL[self.mode]
        for i, body in enumerate(self.bodies):
            if body.dim != self.dim:
                raise ValueError(f"body {i + 1} has dimension {body.dim}, want {self.dim}")
            for c in body.constraints:
                if c.rel != want:
                    raise ValueError(
                        f"body {i + 1} mixes relation {c.rel!r} into a {self.mode} realization"
                    )

    @property
    def n(self) -> int:
        return len(self.bodies)


def empty_body(dim: int, mode: str = CLOSED) -> HalfspaceBody:
    """The explicitly empty body 0.x (<= | <) -1."""
    zero = (Fraction(0),) * dim
    return HalfspaceBody(dim, (Constraint(zero, Fraction(-1), _MODE_REL[mode]),))


def interval_body(lo, hi, mode: str = CLOSED) -> HalfspaceBody:
    """The interval [lo, hi] on the line; open mode gives (lo, hi)."""
    lo, hi = _fr(lo), _fr(hi)
    rel = _MODE_REL[mode]
    return HalfspaceBody(
        1,
        (
            Constraint((Fraction(-1),), -lo, rel),
            Constraint((Fraction(1),), hi, rel),
        ),
    )


def _dedupe_cyclic(points):
    out = []
    for p in points:
        if not out or p != out[-1]:
            out.append(p)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def polygon_body(vertices, mode: str = CLOSED) -> HalfspaceBody:
    """Convex polygon in the plane from its vertex cycle.

    Vertices may come in either orientation; each edge contributes the
    outward halfspace.  Open mode yields the interior.
    """
    pts = _dedupe_cyclic([tuple(_fr(x) for x in v) for v in vertices])
    if any(len(p) != 2 for p in pts):
        raise ValueError("polygon vertices must be planar")
    if len(pts) < 3:
        raise ValueError("polygon needs at least three distinct vertices")
    area2 = sum(
        pts[i][0] * pts[(i + 1) % len(pts)][1] - pts[(i + 1) % len(pts)][0] * pts[i][1]
        for i in range(len(pts))
    )
    if area2 == 0:
        raise ValueError("degenerate (zero-area) polygon")
    if area2 < 0:
        pts.reverse()
    rel = _MODE_REL[mode]
    rows = []
    m = len(pts)
    for i in range(m):
        p, q = pts[i], pts[(i + 1) % m]
        d = (q[0] - p[0], q[1] - p[1])
        normal = (d[1], -d[0])  # outward for counterclockwise order
        rows.append(Constraint(normal, normal[0] * p[0] + normal[1] * p[1], rel))
    body = HalfspaceBody(2, tuple(rows))
    for i, v in enumerate(pts):
        if not body.contains(v):
            raise ValueError(f"vertices are not in convex position (vertex {i + 1})")
    return body


def _orthogonal_pair(d):
    """Two independent rational vectors orthogonal to a nonzero 3-vector."""
    a, b, c = d
    if a != 0:
        return (b, -a, Fraction(0)), (c, Fraction(0), -a)
    if b != 0:
        return (b, -a, Fraction(0)), (Fraction(0), c, -b)
    return (c, Fraction(0), -a), (Fraction(0), c, -b)


def segment_body(p, q) -> HalfspaceBody:
    """Closed segment between two distinct points of the plane or 3-space."""
    p = tuple(_fr(x) for x in p)
    q = tuple(_fr(x) for x in q)
    if len(p) != len(q) or len(p) not in (2, 3):
        raise ValueError("segments live in dimension 2 or 3")
    if p == q:
        raise ValueError("segment endpoints coincide")
    d = tuple(b - a for a, b in zip(p, q))
    rows = []
    if len(p) == 2:
        orthos = [(d[1], -d[0])]
    else:
        orthos = list(_orthogonal_pair(d))
    for a in orthos:  # pin the affine hull: a.x == a.p
        val = sum(c * x for c, x in zip(a, p))
        rows.append(Constraint(a, val, "le"))
        rows.append(Constraint(tuple(-c for c in a), -val, "le"))
    lo = sum(c * x for c, x in zip(d, p))
    hi = sum(c * x for c, x in zip(d, q))
    rows.append(Constraint(tuple(-c for c in d), -lo, "le"))
    rows.append(Constraint(d, hi, "le"))
    return HalfspaceBody(len(p), tuple(rows))


def _invert(matrix):
    """Exact inverse of a square rational matrix (Gauss-Jordan)."""
    d = len(matrix)
    aug = [
        [_fr(matrix[i][j]) for j in range(d)]
        + [Fraction(1) if i == j else Fraction(0) for j in range(d)]
        for i in range(d)
    ]
    for col in range(d):
        piv = next((r for r in range(col, d) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("transform matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(d):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[d:] for row in aug]


def transform_realization(real: Realization, matrix, shift=None) -> Realization:
    """Push a realization through the invertible affine map x -> Mx + s.

    Convexity, openness/closedness, and all intersection patterns are
    preserved, so the realized code is unchanged.
    """
    d = real.dim
    if len(matrix) != d or any(len(row) != d for row in matrix):
        raise ValueError("transform matrix has the wrong shape")
    s = [_fr(x) for x in (shift if shift is not None else [0] * d)]
    if len(s) != d:
        raise ValueError("shift vector has the wrong length")
    minv = _invert(matrix)
    new_bodies = []
    for body in real.bodies:
        rows = []
        for c in body.constraints:
            a2 = tuple(
                sum(minv[k][j] * c.normal[k] for k in range(d)) for j in range(d)
            )
            b2 = c.offset + sum(x * t for x, t in zip(a2, s))
            rows.append(Constraint(a2, b2, c.rel))
        new_bodies.append(HalfspaceBody(d, tuple(rows)))
    return Realization(d, tuple(new_bodies), real.mode)


def _frac_to_str(x: Fraction) -> str:
    return str(x)


def _frac_from_str(s) -> Fraction:
    return Fraction(str(s))


def realization_to_json_obj(real: Realization) -> dict:
    return {
        "dim": real.dim,
        "mode": real.mode,
        "bodies": [
            [
                {
                    "normal": [_frac_to_str(c) for c in row.normal],
                    "offset": _frac_to_str(row.offset),
                    "rel": row.rel,
                }
                for row in body.constraints
            ]
            for body in real.bodies
        ],
    }


def realization_from_json_obj(obj) -> Realization:
    try:
        dim = int(obj["dim"])
        mode = obj["mode"]
        bodies = []
        for rows in obj["bodies"]:
            constraints = tuple(
                Constraint(
                    tuple(_frac_from_str(c) for c in row["normal"]),
                    _frac_from_str(row["offset"]),
                    row["rel"],
                )
                for row in rows
            )
            bodies.append(HalfspaceBody(dim, constraints))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed realization object: {exc}") from exc
    return Realization(dim, tuple(bodies), mode)
