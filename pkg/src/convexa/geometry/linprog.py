"""Exact rational linear feasibility.

Mixed weak/strict systems are decided by maximizing a slack variable
t in [0, 1] that tightens every strict row (a.x < b becomes
a.x + t <= b): the strict system is feasible iff the optimum has
t > 0.  Two-phase simplex with Bland's rule; every pivot is exact
rational arithmetic.  gmpy2.mpq is used for tableau entries when
available (pure speed; Fraction otherwise), and all public values are
plain fractions.Fraction.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import BudgetExceededError

try:  # optional fast rationals
    from gmpy2 import mpq as _RAT
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _RAT = Fraction

_ZERO = _RAT(0)
_ONE = _RAT(1)

LE, LT, GE, GT = "le", "lt", "ge", "gt"
_RELS = {LE, LT, GE, GT}


def _rat(x) -> "_RAT":
    if isinstance(x, Fraction):
        return _RAT(x.numerator, x.denominator)
    return _RAT(x)


def _frac(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


class BudgetCounter:
    """Counts feasibility calls against a cap."""

    def __init__(self, limit: int = 1_000_000):
        self.limit = limit
        self.count = 0

    def tick(self, context: dict | None = None):
        self.count += 1
        if self.count > self.limit:
            raise BudgetExceededError(
                f"feasibility-call budget of {self.limit} exhausted", context
            )


@dataclass(frozen=True)
class FeasibilityWitness:
    """An exact solution point with per-strict-row slacks."""

    point: tuple[Fraction, ...]
    strict_slacks: tuple[Fraction, ...]


def _normalize(constraints, dim):
    """Return rows as (coeffs tuple, rhs, strict) with relation <= / <."""
    rows = []
    for normal, offset, rel in constraints:
        a = [_rat(c) for c in normal]
        if len(a) != dim:
            raise ValueError("constraint dimension mismatch")
        b = _rat(offset)
        if rel not in _RELS:
            raise ValueError(f"unknown relation {rel!r}")
        if rel in (GE, GT):
            a = [-c for c in a]
            b = -b
        rows.append((a, b, rel in (LT, GT)))
    return rows


def _pivot(tab, basis, r, c):
    piv = tab[r][c]
    inv = _ONE / piv
    tab[r] = [x * inv for x in tab[r]]
    row_r = tab[r]
    for i in range(len(tab)):
        if i != r:
            f = tab[i][c]
            if f:
                row_i = tab[i]
                tab[i] = [x - f * y for x, y in zip(row_i, row_r)]
    basis[r] = c


def _run_simplex(tab, basis, m):
    """Minimize with Bland's rule; objective in row m, rhs last column."""
    ncols = len(tab[0]) - 1
    while True:
        enter = -1
        obj = tab[m]
        for j in range(ncols):
            if obj[j] < _ZERO:
                enter = j
                break
        if enter < 0:
            return
        leave = -1
        best = None
        for i in range(m):
            coef = tab[i][enter]
            if coef > _ZERO:
                ratio = tab[i][-1] / coef
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:  # pragma: no cover - objectives here are bounded
            raise RuntimeError("unbounded objective in simplex")
        _pivot(tab, basis, leave, enter)


def feasible(constraints, dim: int, counter: BudgetCounter | None = None):
    """Decide a mixed system of <=, <, >=, > rows over Q^dim.

    Returns a FeasibilityWitness (point + positive slack for every
    strict row) or None.  The witness re-substitutes exactly.
    """
    if counter is not None:
        counter.tick()
    all_rows = _normalize(constraints, dim)
    # dominance pruning: rows sharing a normal keep only the tightest
    # (smallest offset; strict beats weak on ties), and rows with a
    # zero normal are decided immediately
    best: dict = {}
    for a, b, strict in all_rows:
        key = tuple(a)
        cur = best.get(key)
        if cur is None or (b, not strict) < (cur[0], not cur[1]):
            best[key] = (b, strict)
    rows = []
    for key, (b, strict) in best.items():
        if not any(key):
            if b < _ZERO or (strict and b == _ZERO):
                return None
            continue
        rows.append((list(key), b, strict))
    has_strict = any(s for (_, _, s) in rows)

    # columns: u (dim) | v (dim) | t | slacks (m+1) | [artificials] | rhs
    m = len(rows) + 1  # + the t <= 1 bound row
    t_col = 2 * dim
    nslack = m
    base_cols = 2 * dim + 1 + nslack

    body = []
    rhs = []
    for a, b, strict in rows:
        row = [_ZERO] * base_cols
        for j, coef in enumerate(a):
            row[j] = coef
            row[dim + j] = -coef
        if strict:
            row[t_col] = _ONE
        body.append(row)
        rhs.append(b)
    bound = [_ZERO] * base_cols
    bound[t_col] = _ONE
    body.append(bound)
    rhs.append(_ONE)
    for i in range(m):
        body[i][2 * dim + 1 + i] = _ONE

    # sign-normalize and attach artificials where the slack cannot start basic
    art_rows = [i for i in range(m) if rhs[i] < _ZERO]
    nart = len(art_rows)
    tab = []
    basis = []
    for i in range(m):
        row = body[i]
        b = rhs[i]
        if b < _ZERO:
            row = [-x for x in row]
            b = -b
        row = row + [_ZERO] * nart + [b]
        tab.append(row)
    for k, i in enumerate(art_rows):
        tab[i][base_cols + k] = _ONE
    basis = []
    for i in range(m):
        if i in art_rows:
            basis.append(base_cols + art_rows.index(i))
        else:
            basis.append(2 * dim + 1 + i)

    ncols = base_cols + nart
    if nart:
        # minimize sum of artificials; reduced costs = c - c_B B^-1 A
        cost = [_ZERO] * (ncols + 1)
        for k in range(nart):
            cost[base_cols + k] = _ONE
        for i in range(m):
            if basis[i] >= base_cols:
                cost = [x - y for x, y in zip(cost, tab[i])]
        tab.append(cost)
        _run_simplex(tab, basis, m)
        if tab[m][-1] < _ZERO:  # residual infeasibility (value is -objective)
            return None
        tab.pop()
        # pivot lingering artificials out, drop redundant rows
        drop = []
        for i in range(m):
            if basis[i] >= base_cols:
                piv_col = next(
                    (j for j in range(base_cols) if tab[i][j] != _ZERO), None
                )
                if piv_col is None:
                    drop.append(i)
                else:
                    _pivot(tab, basis, i, piv_col)
        for i in reversed(drop):
            tab.pop(i)
            basis.pop(i)
            m -= 1
        for row in tab:
            del row[base_cols:-1]
        ncols = base_cols

    # phase 2: maximize t == minimize -t
    cost = [_ZERO] * (ncols + 1)
    cost[t_col] = -_ONE
    for i in range(m):
        if basis[i] == t_col:
            cost = [x + y for x, y in zip(cost, tab[i])]
    tab.append(cost)
    _run_simplex(tab, basis, m)

    values = {}
    for i in range(m):
        values[basis[i]] = tab[i][-1]
    t_val = values.get(t_col, _ZERO)
    if has_strict and t_val <= _ZERO:
        return None

    raw = [values.get(j, _ZERO) - values.get(dim + j, _ZERO) for j in range(dim)]
    slacks = []
    for a, b, strict in all_rows:  # exact re-substitution doubles as a bug guard
        val = sum(c * x for c, x in zip(a, raw))
        if val > b or (strict and val == b):  # pragma: no cover
            raise RuntimeError("simplex produced an invalid witness")
        if strict:
            slacks.append(_frac(b - val))
    return FeasibilityWitness(tuple(_frac(x) for x in raw), tuple(slacks))


def witness_satisfies(constraints, point) -> bool:
    """Exact re-substitution of a point into a mixed system."""
    pt = [Fraction(x) for x in point]
    for normal, offset, rel in constraints:
        val = sum(Fraction(c) * x for c, x in zip(normal, pt))
        b = Fraction(offset)
        ok = {
            LE: val <= b,
            LT: val < b,
            GE: val >= b,
            GT: val > b,
        }[rel]
        if not ok:
            return False
    return True
