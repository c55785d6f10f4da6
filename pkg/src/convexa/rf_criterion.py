"""Five-index receptive-field obstruction criterion.

For an index tuple (i, j, k, l, m), seven conditions on the code are
checked; when all seven hold the code has no closed-convex
realization.  Indices are evaluated exactly as given — repeated
indices are legal and simply make some rows unsatisfiable or vacuous.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .codes import NeuralCode, neurons_to_mask
from .ideal import CanonicalForm, PseudoMonomial

ROW_DESCRIPTIONS = (
    "some codeword contains {i,j,k}",
    "some codeword contains {i,j,m}",
    "some codeword contains {k,l,m}",
    "no codeword contains {i,j,k,l}",
    "no codeword contains {i,j,k,m}",
    "every codeword containing k contains j or l",
    "every codeword containing j contains i or k",
)


@dataclass(frozen=True)
class RFCheckResult:
    tuple: tuple[int, int, int, int, int]
    rows: tuple[bool, bool, bool, bool, bool, bool, bool]

    @property
    def passed(self) -> bool:
        return all(self.rows)

    def failing_rows(self) -> tuple[int, ...]:
        """1-based indices of rows that do not hold."""
        return tuple(r + 1 for r, ok in enumerate(self.rows) if not ok)


@dataclass(frozen=True)
class RFTupleCertificate:
    kind: str = field(default="rf-tuple", init=False)
    tuple: tuple[int, int, int, int, int] = ()
    rows: tuple[bool, ...] = ()


def check_tuple(code: NeuralCode, t) -> RFCheckResult:
    """Evaluate all seven rows for the index tuple t = (i, j, k, l, m)."""
    i, j, k, l, m = (int(x) for x in t)
    for x in (i, j, k, l, m):
        if not 1 <= x <= code.n:
            raise ValueError(f"index {x} outside 1..{code.n}")
    bi, bj, bk, bl, bm = (1 << (x - 1) for x in (i, j, k, l, m))
    words = code.codewords
    ijk = bi | bj | bk
    ijm = bi | bj | bm
    klm = bk | bl | bm
    ijkl = ijk | bl
    ijkm = ijk | bm
    rows = (
        any(w & ijk == ijk for w in words),
        any(w & ijm == ijm for w in words),
        any(w & klm == klm for w in words),
        not any(w & ijkl == ijkl for w in words),
        not any(w & ijkm == ijkm for w in words),
        all(not (w & bk) or (w & (bj | bl)) for w in words),
        all(not (w & bj) or (w & (bi | bk)) for w in words),
    )
    return RFCheckResult((i, j, k, l, m), rows)


def search_rf_obstruction(code: NeuralCode) -> tuple[RFTupleCertificate, ...]:
    """All passing tuples over the full n^5 grid, in lexicographic order.

    An empty result means this criterion is inapplicable to the code,
    not that the code is closed-convex.
    """
    out = []
    rng = range(1, code.n + 1)
    for t in product(rng, repeat=5):
        res = check_tuple(code, t)
        if res.passed:
            out.append(RFTupleCertificate(tuple=res.tuple, rows=res.rows))
    return tuple(out)


def cf_criterion(cf: CanonicalForm, t) -> bool:
    """Equivalent reformulation of the criterion on the canonical form.

    Requires, for t = (i, j, k, l, m):
    (i)  the elements x_i x_k (1+x_j), x_j x_m (1+x_i), x_k x_m (1+x_l);
    (ii) pure monomials x_sigma, x_tau with sigma ⊆ {i,j,k,l} and
         tau ⊆ {i,j,k,m};
    (iii) the elements x_k (1+x_j)(1+x_l), x_j (1+x_i)(1+x_k).
    """
    i, j, k, l, m = (int(x) for x in t)
    bi, bj, bk, bl, bm = (1 << (x - 1) for x in (i, j, k, l, m))
    elems = cf.as_set()

    def has(sigma: int, tau: int) -> bool:
        if sigma & tau:  # repeated indices can collide; such a factor pair
            return False  # is not a pseudo-monomial, so it cannot appear
        return PseudoMonomial(sigma, tau) in elems

    if not (
        has(bi | bk, bj) and has(bj | bm, bi) and has(bk | bm, bl)
    ):
        return False
    mono_supports = {pm.sigma for pm in elems if pm.tau == 0}
    ijkl = bi | bj | bk | bl
    ijkm = bi | bj | bk | bm
    if not any(s and s & ijkl == s for s in mono_supports):
        return False
    if not any(s and s & ijkm == s for s in mono_supports):
        return False
    return has(bk, bj | bl) and has(bj, bi | bk)


def safe_codeword_additions(code: NeuralCode, t) -> frozenset[int]:
    """All non-codewords whose addition keeps every row of the criterion true.

    Precondition: check_tuple(code, t) passes.  Rows 1-3 are monotone
    under additions, so a candidate sigma is safe iff it avoids the two
    forbidden four-index supersets and respects rows 6-7 itself; the
    row conditions are per-codeword, so any subset of the returned set
    may be adjoined jointly without breaking the criterion.
    """
    from .errors import BudgetExceededError

    if code.n > 20:
        raise BudgetExceededError(
            "safe-addition enumeration is limited to n <= 20", {"n": code.n}
        )
    base = check_tuple(code, t)
    if not base.passed:
        raise ValueError("criterion does not hold for the given tuple")
    i, j, k, l, m = base.tuple
    bi, bj, bk, bl, bm = (1 << (x - 1) for x in (i, j, k, l, m))
    ijkl = bi | bj | bk | bl
    ijkm = bi | bj | bk | bm
    out = set()
    for sigma in range(1 << code.n):
        if sigma in code.codewords:
            continue
        if sigma & ijkl == ijkl or sigma & ijkm == ijkm:
            continue
        if sigma & bk and not sigma & (bj | bl):
            continue
        if sigma & bj and not sigma & (bi | bk):
            continue
        out.add(sigma)
    return frozenset(out)
