"""Weight enumerators, transform identities, Gleason bases and shadows.

All coefficient arithmetic is exact (Python ints and Fractions); floating
point never enters.  Polynomial substitutions are done by binomial
convolution on coefficient vectors, which is plenty for degrees in the
hundreds.

A Hamming enumerator of degree n is the coefficient vector (A_0..A_n) of
sum A_i u^(n-i) v^i.  Complete enumerators are sparse maps from exponent
tuples to counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

from kleincode.kcore import KCode, row_symbol, row_weight, span_rows


class NonIntegralError(ValueError):
    """A transform produced non-integral coefficients for integral input."""


@dataclass(frozen=True)
class WeightEnum:
    n: int
    A: tuple[int, ...]

    def __post_init__(self):
        if len(self.A) != self.n + 1:
            raise ValueError("coefficient vector must have length n+1")

    @property
    def size(self) -> int:
        return sum(self.A)

    def __mul__(self, other: "WeightEnum") -> "WeightEnum":
        out = [0] * (self.n + other.n + 1)
        for i, a in enumerate(self.A):
            if not a:
                continue
            for j, b in enumerate(other.A):
                out[i + j] += a * b
        return WeightEnum(self.n + other.n, tuple(out))

    def at(self, u, v):
        return sum(a * u ** (self.n - i) * v ** i for i, a in enumerate(self.A))

    def to_json(self) -> dict:
        return {"n": self.n, "A": list(self.A)}

    def __str__(self) -> str:
        return _poly_str(self.n, self.A)


@dataclass(frozen=True)
class RationalWE:
    n: int
    A: tuple[Fraction, ...]

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.A)

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self.A)

    def to_weight_enum(self) -> WeightEnum:
        if not self.is_integral():
            raise NonIntegralError(f"non-integral coefficients: {self.A}")
        return WeightEnum(self.n, tuple(int(a) for a in self.A))

    def to_json(self) -> dict:
        return {"n": self.n,
                "A": [str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
                      for a in self.A]}

    def __str__(self) -> str:
        return _poly_str(self.n, self.A)


def _poly_str(n: int, coeffs) -> str:
    parts = []
    for i, a in enumerate(coeffs):
        if not a:
            continue
        mono = []
        if n - i:
            mono.append(f"u^{n - i}" if n - i > 1 else "u")
        if i:
            mono.append(f"v^{i}" if i > 1 else "v")
        body = " ".join(mono) or "1"
        parts.append(f"{a} {body}" if (a != 1 or not mono) else body)
    return " + ".join(parts) if parts else "0"


def hamming_we(c: KCode) -> WeightEnum:
    return WeightEnum(c.n, c.weight_distribution())


def _linear_power(alpha, beta, e: int) -> list:
    """Coefficients of (alpha*u + beta*v)^e in v-degree order."""
    return [comb(e, k) * alpha ** (e - k) * beta ** k for k in range(e + 1)]


def substitute(A: Iterable, n: int, u_image: tuple, v_image: tuple) -> list:
    """Coefficients of W(au+bv, cu+dv) where u_image=(a,b), v_image=(c,d)."""
    a, b = u_image
    c, d = v_image
    out = [0] * (n + 1)
    for i, coef in enumerate(A):
        if not coef:
            continue
        first = _linear_power(a, b, n - i)
        second = _linear_power(c, d, i)
        for j, x in enumerate(first):
            if not x:
                continue
            for k, y in enumerate(second):
                out[j + k] += coef * x * y
    return out


def macwilliams(w: WeightEnum, size: int) -> WeightEnum:
    """Dual enumerator (1/|C|) W(u+3v, u-v); rejects non-integral output."""
    if size != w.size:
        raise ValueError(f"size {size} does not match sum of coefficients {w.size}")
    raw = substitute(w.A, w.n, (1, 3), (1, -1))
    out = []
    for x in raw:
        q, r = divmod(x, size)
        if r:
            raise NonIntegralError("MacWilliams transform is not integral; "
                                   "input is not a code enumerator with that size")
        out.append(q)
    return WeightEnum(w.n, tuple(out))


def shadow_we(w: WeightEnum, size: int) -> RationalWE:
    """Shadow enumerator (1/|C|) W(u+3v, -(u-v)), exact rationals."""
    raw = substitute(w.A, w.n, (1, 3), (-1, 1))
    return RationalWE(w.n, tuple(Fraction(x, size) for x in raw))


# ---------------------------------------------------------------------------
# complete and symmetrized enumerators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CompleteWE:
    """Sparse table (i,j,k,l) -> count of words with that many 0/a/b/c."""

    n: int
    counts: Mapping[tuple[int, int, int, int], int]

    def to_hamming(self) -> WeightEnum:
        A = [0] * (self.n + 1)
        for (i, j, k, l), cnt in self.counts.items():
            A[self.n - i] += cnt
        return WeightEnum(self.n, tuple(A))

    def to_sym(self) -> "SymWE":
        out: dict[tuple[int, int, int], int] = {}
        for (i, j, k, l), cnt in self.counts.items():
            key = (i, j, k + l)
            out[key] = out.get(key, 0) + cnt
        return SymWE(self.n, out)

    def to_json(self) -> dict:
        return {f"({i},{j},{k},{l})": cnt
                for (i, j, k, l), cnt in sorted(self.counts.items())}


@dataclass(frozen=True)
class SymWE:
    """Sparse table (i,j,k) -> count: i zeros, j a's, k symbols in {b,c}."""

    n: int
    counts: Mapping[tuple[int, int, int], int]

    def to_hamming(self) -> WeightEnum:
        A = [0] * (self.n + 1)
        for (i, j, k), cnt in self.counts.items():
            A[self.n - i] += cnt
        return WeightEnum(self.n, tuple(A))

    def to_json(self) -> dict:
        return {f"({i},{j},{k})": cnt for (i, j, k), cnt in sorted(self.counts.items())}


def complete_we(c: KCode) -> CompleteWE:
    if c.dim2 > 24:
        raise ValueError("code too large to enumerate")
    counts: dict[tuple[int, int, int, int], int] = {}
    n = c.n
    for r in c.words():
        tally = [0, 0, 0, 0]
        for i in range(n):
            tally[row_symbol(r, i)] += 1
        key = tuple(tally)
        counts[key] = counts.get(key, 0) + 1
    return CompleteWE(n, counts)


def swe(c: KCode) -> SymWE:
    return complete_we(c).to_sym()


def _mono_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            key = tuple(x + y for x, y in zip(e1, e2))
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def _mono_pow(p: dict, e: int, nvars: int) -> dict:
    out = {tuple([0] * nvars): 1}
    base = p
    while e:
        if e & 1:
            out = _mono_mul(out, base)
        e >>= 1
        if e:
            base = _mono_mul(base, base)
    return out


def macwilliams_complete(w: CompleteWE, size: int) -> CompleteWE:
    """Dual complete enumerator via the four-variable substitution."""
    forms = [
        {(1, 0, 0, 0): 1, (0, 1, 0, 0): 1, (0, 0, 1, 0): 1, (0, 0, 0, 1): 1},
        {(1, 0, 0, 0): 1, (0, 1, 0, 0): 1, (0, 0, 1, 0): -1, (0, 0, 0, 1): -1},
        {(1, 0, 0, 0): 1, (0, 1, 0, 0): -1, (0, 0, 1, 0): 1, (0, 0, 0, 1): -1},
        {(1, 0, 0, 0): 1, (0, 1, 0, 0): -1, (0, 0, 1, 0): -1, (0, 0, 0, 1): 1},
    ]
    cache: list[dict[int, dict]] = [{} for _ in range(4)]

    def form_pow(v: int, e: int) -> dict:
        if e not in cache[v]:
            cache[v][e] = _mono_pow(forms[v], e, 4)
        return cache[v][e]

    acc: dict[tuple[int, int, int, int], int] = {}
    for (i, j, k, l), cnt in w.counts.items():
        term = form_pow(0, i)
        for v, e in ((1, j), (2, k), (3, l)):
            if e:
                term = _mono_mul(term, form_pow(v, e))
        for key, val in term.items():
            acc[key] = acc.get(key, 0) + cnt * val
    out = {}
    for key, val in acc.items():
        q, r = divmod(val, size)
        if r:
            raise NonIntegralError("complete MacWilliams transform is not integral")
        if q:
            out[key] = q
    return CompleteWE(w.n, out)


# ---------------------------------------------------------------------------
# Gleason decompositions
# ---------------------------------------------------------------------------

def _basis_odd(n: int, i: int) -> list[int]:
    """(u+v)^(n-2i) (v(u-v))^i as a coefficient vector."""
    first = _linear_power(1, 1, n - 2 * i)
    # (v(u-v))^i = v^i (u-v)^i
    second = _linear_power(1, -1, i)
    coeffs = [0] * (n + 1)
    for j, x in enumerate(first):
        for k, y in enumerate(second):
            coeffs[j + k + i] += x * y
    return coeffs


def gleason_odd(w: WeightEnum) -> tuple[int, ...]:
    """Coefficients a_i with W = sum a_i (u+v)^(n-2i) (v(u-v))^i.

    The basis is unitriangular in the v-valuation, so the a_i come from a
    back-substitution; a nonzero residual means W is not self-dual-shaped.
    """
    n = w.n
    m = n // 2
    residual = [Fraction(x) for x in w.A]
    a = []
    for i in range(m + 1):
        ai = residual[i]
        a.append(ai)
        if ai:
            basis = _basis_odd(n, i)
            for t in range(n + 1):
                residual[t] -= ai * basis[t]
    if any(residual):
        raise ValueError("enumerator is not in the Gleason ring for self-dual codes")
    if any(x.denominator != 1 for x in a):
        raise NonIntegralError("Gleason coefficients are not integral")
    return tuple(int(x) for x in a)


def _basis_even(n: int, beta: int) -> list[int]:
    """(u^2+3v^2)^((n-6b)/2) (v^2(u^2-v^2)^2)^b as a coefficient vector."""
    alpha = (n - 6 * beta) // 2
    # work in t = v^2 degree against s = u^2
    p = _linear_power(1, 3, alpha)             # (s+3t)^alpha
    q = _linear_power(1, -1, 2 * beta)         # (s-t)^(2 beta)
    half = [0] * (n // 2 + 1)
    for j, x in enumerate(p):
        for k, y in enumerate(q):
            half[j + k + beta] += x * y
    out = [0] * (n + 1)
    for t, x in enumerate(half):
        out[2 * t] = x
    return out


def gleason_even(w: WeightEnum) -> tuple[int, ...]:
    """Coefficients c_b of W in the basis (u^2+3v^2)^a (v^2(u^2-v^2)^2)^b."""
    n = w.n
    if n % 2:
        raise ValueError("even decomposition needs even degree")
    if any(w.A[i] for i in range(1, n + 1, 2)):
        raise ValueError("odd-weight coefficients present; not an even enumerator")
    residual = [Fraction(x) for x in w.A]
    coeffs = []
    for beta in range(n // 6 + 1):
        cb = residual[2 * beta]
        coeffs.append(cb)
        if cb:
            basis = _basis_even(n, beta)
            for t in range(n + 1):
                residual[t] -= cb * basis[t]
    if any(residual):
        raise ValueError("enumerator is not in the even Gleason ring")
    if any(x.denominator != 1 for x in coeffs):
        raise NonIntegralError("Gleason coefficients are not integral")
    return tuple(int(x) for x in coeffs)


# ---------------------------------------------------------------------------
# shadows
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ShadowSet:
    """The four cosets of the even subcode C0 inside its dual.

    For even C the shadow is C itself and there is a single coset.  For
    non-even C the cosets are C0, C1 = C \\ C0, and the two shadow cosets
    C2, C3 with shadow = C2 u C3 = dual(C0) \\ C.
    """

    code: KCode
    even_subcode: KCode
    coset_reps: tuple[int, ...]   # reps of C1, C2, C3 (empty when C even)

    @property
    def is_even_case(self) -> bool:
        return not self.coset_reps

    def shadow_words(self):
        if self.is_even_case:
            yield from self.code.words()
            return
        for rep in self.coset_reps[1:]:
            for r in self.even_subcode.words():
                yield r ^ rep

    def shadow_distribution(self) -> tuple[int, ...]:
        dist = [0] * (self.code.n + 1)
        for r in self.shadow_words():
            dist[row_weight(r)] += 1
        return tuple(dist)

    def coset_codes(self) -> tuple[KCode, KCode]:
        """The two even self-dual neighbours C0 u C2 and C0 u C3."""
        if self.is_even_case:
            raise ValueError("even code has no proper shadow cosets")
        t2, t3 = self.coset_reps[1], self.coset_reps[2]
        rows = list(self.even_subcode.rows)
        return (span_rows(rows + [t2], self.code.n),
                span_rows(rows + [t3], self.code.n))


def shadow(c: KCode) -> ShadowSet:
    if not c.is_self_dual():
        raise ValueError("shadow is defined for self-dual codes")
    c0 = c.even_subcode()
    if c0.dim2 == c.dim2:
        return ShadowSet(c, c0, ())
    d0 = c0.dual()
    t1 = next(r for r in c.rows if not c0.contains_row(r))
    t2 = next(r for r in d0.rows if not c.contains_row(r))
    return ShadowSet(c, c0, (t1, t2, t1 ^ t2))
