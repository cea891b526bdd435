"""Extremal enumerators, nonexistence certificates, and code search.

The extremal enumerator of length n forces A_1 = ... = A_[n/2] = 0 (or the
even-weight prefix in the even case) through an exact unitriangular solve
in the Gleason basis.  An independent power-series route recovers the same
leading coefficients from the expansion of (1+v)^-n in powers of
phi = v(1-v)/(1+v)^2, and serves purely as a cross-check oracle.

The backtracking search grows self-orthogonal codes one generator at a
time inside the dual of the span, keeping every coset at or above the
target weight.  Candidate pools are vectorized with numpy.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from kleincode.kcore import (
    KCode,
    KWord,
    row_weight,
    span,
    span_rows,
)
from kleincode.wenum import (
    RationalWE,
    WeightEnum,
    _basis_even,
    _basis_odd,
    shadow,
    shadow_we,
)


def dmax_bound(n: int, even: bool = False) -> int:
    """Largest minimal distance allowed for a self-dual code of length n."""
    if even:
        if n % 2:
            raise ValueError("even codes need even length")
        return 2 * (n // 6) + 2
    return n // 2 + 1


@dataclass(frozen=True)
class ExtremalSolve:
    n: int
    even: bool
    basis_coeffs: tuple[int, ...]
    A: tuple[Fraction, ...]

    @property
    def m(self) -> int:
        return self.n // 2

    def to_weight_enum(self) -> WeightEnum:
        if any(a.denominator != 1 for a in self.A):
            raise ValueError("extremal enumerator is not integral")
        return WeightEnum(self.n, tuple(int(a) for a in self.A))


def extremal_we(n: int, even: bool = False) -> ExtremalSolve:
    """The unique enumerator with the longest forced zero prefix."""
    if even:
        if n % 2:
            raise ValueError("even extremal enumerators need even length")
        nzero = n // 6
        residual = [Fraction(0)] * (n + 1)
        residual[0] = Fraction(1)
        coeffs = []
        # impose A_0 = 1, A_2 = ... = A_{2 nzero} = 0
        for beta in range(nzero + 1):
            basis = _basis_even(n, beta)
            cb = residual[2 * beta]
            coeffs.append(cb)
            for t in range(n + 1):
                residual[t] -= cb * basis[t]
        A = [Fraction(0)] * (n + 1)
        for beta, cb in enumerate(coeffs):
            basis = _basis_even(n, beta)
            for t in range(n + 1):
                A[t] += cb * basis[t]
    else:
        m = n // 2
        residual = [Fraction(0)] * (n + 1)
        residual[0] = Fraction(1)
        coeffs = []
        for i in range(m + 1):
            basis = _basis_odd(n, i)
            ai = residual[i]
            coeffs.append(ai)
            for t in range(n + 1):
                residual[t] -= ai * basis[t]
        A = [Fraction(0)] * (n + 1)
        for i, ai in enumerate(coeffs):
            basis = _basis_odd(n, i)
            for t in range(n + 1):
                A[t] += ai * basis[t]
    # the imposed prefix must be exact
    assert A[0] == 1
    if any(x.denominator != 1 for x in coeffs):
        raise ValueError("triangular solve left non-integral basis coefficients")
    return ExtremalSolve(n, even, tuple(int(x) for x in coeffs), tuple(A))


# ---------------------------------------------------------------------------
# power-series cross-check for the extremal coefficients
# ---------------------------------------------------------------------------

def _series_mul(p: list[Fraction], q: list[Fraction], trunc: int) -> list[Fraction]:
    out = [Fraction(0)] * trunc
    for i, x in enumerate(p):
        if not x or i >= trunc:
            continue
        for j, y in enumerate(q):
            if i + j >= trunc:
                break
            if y:
                out[i + j] += x * y
    return out


def _series_inv_onepv(n: int, trunc: int) -> list[Fraction]:
    """(1+v)^-n as a power series (binomial series with negative exponent)."""
    out = []
    for k in range(trunc):
        out.append(Fraction(comb(n + k - 1, k) * (-1) ** k))
    return out


def _phi_series(trunc: int) -> list[Fraction]:
    """phi = v(1-v)/(1+v)^2 as a power series."""
    inv2 = _series_inv_onepv(2, trunc)
    num = [Fraction(0), Fraction(1), Fraction(-1)][:trunc]
    return _series_mul(num, inv2, trunc)


def burmann_bk(n: int, k: int) -> Fraction:
    """Coefficient of phi^k in the expansion of (1+v)^-n.

    Solved triangularly from truncated power series: phi has valuation 1
    with unit leading coefficient.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    trunc = k + 1
    target = _series_inv_onepv(n, trunc)
    phi = _phi_series(trunc)
    power = [Fraction(1)] + [Fraction(0)] * (trunc - 1)
    residual = list(target)
    bk = Fraction(0)
    for j in range(k + 1):
        bk = residual[j]
        for t in range(trunc):
            residual[t] -= bk * power[t]
        if j < k:
            power = _series_mul(power, phi, trunc)
    return bk


@dataclass(frozen=True)
class NonexistenceCert:
    n: int
    even: bool
    kind: str                   # "shadow" or "A-negative"
    index: int                  # coefficient index in the offending enumerator
    value: Fraction

    def __str__(self) -> str:
        where = "shadow" if self.kind == "shadow" else "extremal"
        return (f"n={self.n}: {where} coefficient A_{self.index} = {self.value} "
                "is not a nonnegative integer")


def nonexistence_certificate(n: int, even: bool = False) -> NonexistenceCert | None:
    """Exact witness that no extremal code of length n exists, if any.

    Odd case: lengths 7..11 fail through a fractional or negative shadow
    coefficient; from 12 on the coefficient A_(m+2) of the extremal
    enumerator itself is negative.
    """
    if even:
        sol = extremal_we(n, even=True)
        for i, a in enumerate(sol.A):
            if a < 0 or a.denominator != 1:
                return NonexistenceCert(n, True, "A-negative", i, a)
        return None
    if n <= 6:
        return None
    sol = extremal_we(n)
    if 7 <= n <= 11:
        w = sol.to_weight_enum()
        sh = shadow_we(w, 2 ** n)
        for i, a in enumerate(sh.A):
            if a < 0 or a.denominator != 1:
                return NonexistenceCert(n, False, "shadow", i, a)
        return None
    m = n // 2
    a = sol.A[m + 2]
    if a < 0:
        return NonexistenceCert(n, False, "A-negative", m + 2, a)
    return None


@dataclass
class ShadowReport:
    n: int
    h: int                          # minimal shadow weight
    h_equals_n: bool
    is_gamma_power: bool
    a1: int
    a2: int
    a2_bound: Fraction              # (n/2)(5-n)
    meets_bound: bool
    shadow_top_count: int | None    # words of weight n-2 in the shadow


def shadow_extremal_check(c: KCode) -> ShadowReport:
    """Shadow minimal-weight report for a self-dual code."""
    sh = shadow(c)
    dist = sh.shadow_distribution()
    h = next(i for i, x in enumerate(dist) if x)
    n = c.n
    wd = c.weight_distribution()
    a1, a2 = (wd[1] if n >= 1 else 0), (wd[2] if n >= 2 else 0)
    bound = Fraction(n, 2) * (5 - n)
    meets = a1 == 0 and Fraction(a2) == bound
    is_gamma = False
    if h == n:
        # equality forces the repetition-of-gamma1 code
        is_gamma = wd == tuple(comb(n, i) for i in range(n + 1))
    top = dist[n - 2] if n >= 2 else None
    return ShadowReport(n, h, h == n, is_gamma, a1, a2, bound, meets, top)


# ---------------------------------------------------------------------------
# backtracking search
# ---------------------------------------------------------------------------

# even self-dual [12, 6, 6] code, as printed via its generator matrix
_EXTREMAL12_GENS = [
    "aaaaaa000000",
    "bbbbbb000000",
    "000000aaaaaa",
    "000000bbbbbb",
    "a0bab0aaaa00",
    "abccbabbbb00",
    "caca00a0aaa0",
    "cca0a0b0bbb0",
    "ccbaaba00aaa",
    "bccbaab00bbb",
    "caabcbaa00aa",
    "b0baa0bb00bb",
]


def extremal_code_12() -> KCode:
    """The even self-dual [12, 6, 6] code (generator matrix frozen)."""
    return span([KWord.parse(t) for t in _EXTREMAL12_GENS])


class SearchBudgetExceeded(RuntimeError):
    pass


@dataclass
class SearchResult:
    code: KCode | None
    status: str                 # "found", "exhausted", "exhausted-pool", "budget"
    nodes: int
    elapsed: float
    all_codes: list[KCode] | None = None


def _weight_table(n: int) -> np.ndarray:
    table = np.arange(1 << 16, dtype=np.uint32)
    table = (table & 0x5555) + ((table >> 1) & 0x5555)
    table = (table & 0x3333) + ((table >> 2) & 0x3333)
    table = (table & 0x0F0F) + ((table >> 4) & 0x0F0F)
    table = (table & 0x00FF) + ((table >> 8) & 0x00FF)
    return table.astype(np.uint8)


_POP16 = None


def _popcount64(arr: np.ndarray) -> np.ndarray:
    global _POP16
    if _POP16 is None:
        _POP16 = _weight_table(16)
    out = _POP16[arr & 0xFFFF].astype(np.uint32)
    out += _POP16[(arr >> 16) & 0xFFFF]
    out += _POP16[(arr >> 32) & 0xFFFF]
    out += _POP16[(arr >> 48) & 0xFFFF]
    return out


def _word_pool(n: int, weights: list[int]) -> np.ndarray:
    """All packed rows of the given weights, ascending as integers."""
    arr = np.arange(4 ** n, dtype=np.uint64)
    wt = _support_weight(arr)
    mask = np.zeros(len(arr), dtype=bool)
    for w in weights:
        mask |= wt == w
    return arr[mask]


def _sym_swap(arr: np.ndarray) -> np.ndarray:
    even = arr & np.uint64(0x5555555555555555)
    odd = arr & np.uint64(0xAAAAAAAAAAAAAAAA)
    return (even << np.uint64(1)) | (odd >> np.uint64(1))


def _support_weight(arr: np.ndarray) -> np.ndarray:
    sup = (arr | (arr >> np.uint64(1))) & np.uint64(0x5555555555555555)
    return _popcount64(sup)


def _np_act_rows(g, arr: np.ndarray, n: int) -> np.ndarray:
    """Vectorized group action on an array of packed rows."""
    out = np.zeros_like(arr)
    for i in range(n):
        syms = (arr >> np.uint64(2 * i)) & np.uint64(3)
        lut = np.array(g.taus[i], dtype=np.uint64)
        out |= lut[syms.astype(np.intp)] << np.uint64(2 * g.sigma[i])
    return out


def search(n: int, even: bool = False, d_target: int = 2,
           budget_secs: float | None = None, exhaustive: bool = False,
           pool_weights: list[int] | None = None,
           collect_all: bool = False) -> SearchResult:
    """Search for a self-dual (even) code with minimal weight >= d_target.

    Isomorph-free generation: self-orthogonal codes whose nonzero cosets
    all have weight >= d_target are grown one generator at a time; at each
    level one canonical representative per equivalence class is kept and
    extension candidates are reduced to Aut-orbit representatives first.
    The candidate pool per class is the set of coset-minimal words of the
    allowed weights, filtered with numpy.

    With an unrestricted pool the sweep is complete up to equivalence, so
    status "exhausted" proves nonexistence; pool_weights trades that proof
    for speed (status "exhausted-pool").  With collect_all the search
    returns only after the last level and reports every class found (the
    witness in `code`, all of them in `all_codes`).
    """
    if even and n % 2:
        raise ValueError("even codes need even length")
    if 2 * n > 64:
        raise ValueError("search supports n <= 32")
    if d_target < 1:
        raise ValueError("d_target must be positive")
    if d_target > n:
        return SearchResult(None, "exhausted", 0, 0.0)
    if exhaustive and pool_weights is not None:
        raise ValueError("exhaustive mode cannot restrict the generator pool")
    if pool_weights is None and not exhaustive and not collect_all and d_target > 2:
        # witness fast path: many interesting codes are spanned by their
        # minimal-weight words; fall back to the full pool if not
        quick = search(n, even, d_target, budget_secs=budget_secs,
                       pool_weights=[d_target + (d_target % 2 if even else 0)])
        if quick.status in ("found", "budget"):
            return quick
        remaining = None
        if budget_secs is not None:
            remaining = max(0.0, budget_secs - quick.elapsed)
        deep = search(n, even, d_target, budget_secs=remaining,
                      pool_weights=[x for x in range(d_target, n + 1)
                                    if not (even and x % 2)])
        deep.status = {"exhausted-pool": "exhausted"}.get(deep.status, deep.status)
        deep.nodes += quick.nodes
        return deep
    from kleincode.sym import canonical

    t0 = time.monotonic()
    state = {"nodes": 0}

    def check_budget():
        if budget_secs is not None and time.monotonic() - t0 > budget_secs:
            raise SearchBudgetExceeded

    weights = pool_weights
    if weights is None:
        weights = [x for x in range(d_target, n + 1) if not (even and x % 2)]
    if even:
        weights = [x for x in weights if x % 2 == 0]
    if not weights:
        return SearchResult(None, "exhausted", 0, time.monotonic() - t0)
    pool0 = _word_pool(n, weights)

    wt_in_pool = np.zeros(n + 1, dtype=bool)
    for w in weights:
        wt_in_pool[w] = True
    maxval = np.uint64(0xFFFFFFFFFFFFFFFF)

    def class_data(rows: tuple[int, ...]):
        """Valid pool words for the span of `rows`, their coset labels,
        and the sorted unique labels.

        A word is valid when it is orthogonal to the span and its whole
        coset stays at or above the target weight.  The label of a coset
        is its minimal word of pool weight (the plain minimum may fall
        outside a restricted pool and would not be Aut-equivariant).
        """
        pool = pool0
        for r in rows:
            swap = _sym_swap(np.array([r], dtype=np.uint64))[0]
            pool = pool[(_popcount64(pool & swap) & 1) == 0]
        span_words = [s for s in KCode(n, rows).words() if s]
        for s in span_words:
            pool = pool[_support_weight(pool ^ np.uint64(s)) >= d_target]
        lab = pool.copy()
        for s in span_words:
            t = pool ^ np.uint64(s)
            t = np.where(wt_in_pool[_support_weight(t)], t, maxval)
            np.minimum(lab, t, out=lab)
        return pool, lab, np.unique(lab)

    def orbit_reps(valid: np.ndarray, lab: np.ndarray, labels: np.ndarray,
                   gens) -> list[int]:
        """One representative per Aut-orbit on the label set.

        Orbits are connected components of the maps the generators induce
        on the labels, found by vectorized min-label propagation."""
        if len(labels) == 0 or not gens:
            return [int(x) for x in labels]
        maps = []
        for g in gens:
            acted = _np_act_rows(g, labels, n)
            idx = np.searchsorted(valid, acted)
            # Aut preserves the valid set
            assert idx.max(initial=0) < len(valid) and np.all(valid[idx] == acted)
            lab2 = lab[idx]
            m = np.searchsorted(labels, lab2)
            maps.append(m)
        rep = np.arange(len(labels))
        while True:
            new = rep.copy()
            for m in maps:
                np.minimum.at(new, m, rep)
                np.minimum(new, rep[m], out=new)
            new = np.minimum(new, new[new])
            new = np.minimum(new, new[new])
            if np.array_equal(new, rep):
                break
            rep = new
        return [int(x) for x in labels[np.unique(rep)]]

    found: list[KCode] = []
    visited: set[tuple[int, ...]] = set()

    def pool_rank_reaches(rows: tuple[int, ...], pool: np.ndarray) -> bool:
        """Can span + pool still reach full dimension n?

        Any target code is spanned inside span + pool: each of its cosets
        with a pool-weight word keeps exactly its label in the pool."""
        need = n - len(rows)
        if len(pool) < need:
            return False
        basis = list(rows)
        got = 0
        for x in pool:
            r = int(x)
            for b in basis:
                if r & (b & -b):
                    r ^= b
            if r:
                low = r & -r
                basis = [(b ^ r) if (b & low) else b for b in basis]
                basis.append(r)
                basis.sort(key=lambda v: v & -v)
                got += 1
                if got == need:
                    return True
        return False

    # full isomorph rejection pays off while subtrees are big; deeper down
    # the pool has collapsed and exact-span dedup is enough
    canon_below = max(2, (2 * n) // 3)

    def dfs(rows: tuple[int, ...], gens) -> bool:
        """Depth-first over classes; canonical keys at shallow depth,
        raw span keys deeper."""
        if rows in visited:
            return False
        visited.add(rows)
        state["nodes"] += 1
        check_budget()
        if len(rows) == n:
            found.append(KCode(n, rows))
            return not collect_all
        valid, lab, labels = class_data(rows)
        if not pool_rank_reaches(rows, labels):
            return False
        # spread supports first: high packed values sit on fresh positions
        for x in sorted(orbit_reps(valid, lab, labels, gens), reverse=True):
            child = span_rows(list(rows) + [x], n)
            if child.dim2 < canon_below:
                res = canonical(child)
                if dfs(res.image.rows, res.aut_gens_of_image()):
                    return True
            else:
                if dfs(child.rows, []):
                    return True
        return False

    try:
        done = False
        for w in weights:
            g1 = 0
            for i in range(w):
                g1 |= 1 << (2 * i)
            res = canonical(KCode(n, span_rows([g1], n).rows))
            if dfs(res.image.rows, res.aut_gens_of_image()):
                done = True
                break
    except SearchBudgetExceeded:
        return SearchResult(found[0] if found else None, "budget",
                            state["nodes"], time.monotonic() - t0)
    elapsed = time.monotonic() - t0
    if found:
        return SearchResult(found[0], "found", state["nodes"], elapsed,
                            all_codes=found)
    status = "exhausted" if pool_weights is None else "exhausted-pool"
    return SearchResult(None, status, state["nodes"], elapsed)
