"""Binary codes from Kleinian codes: the A and B constructions.

The hat substitution sends symbols to four-bit blocks

    0 -> 0000    a -> 1100    b -> 1010    c -> 0110

and is additive.  Construction A glues in the all-ones block code d4^n;
construction B uses the doubly-even part of d4^n plus a shift block
depending on n mod 4.  Both multiply the length by four.

Marked enumerators classify the two-bit pairs of a marked binary word as
00 / 11 / mixed; the variable convention (00 -> x, 11 -> y, mixed -> z)
is pinned by the small-code identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from kleincode.kcore import KCode, row_symbol
from kleincode.wenum import SymWE, WeightEnum, substitute, swe


@dataclass(frozen=True)
class BinaryCode:
    """A binary linear code as a canonical GF(2) RREF basis of m-bit rows."""

    m: int
    rows: tuple[int, ...]

    @classmethod
    def from_generators(cls, m: int, gens) -> "BinaryCode":
        basis: list[int] = []
        for r in gens:
            for b in basis:
                if r & (b & -b):
                    r ^= b
            if r:
                low = r & -r
                basis = [(b ^ r) if (b & low) else b for b in basis]
                basis.append(r)
                basis.sort(key=lambda v: v & -v)
        return cls(m, tuple(basis))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def size(self) -> int:
        return 1 << self.dim

    def words(self) -> Iterator[int]:
        cur = 0
        yield 0
        prev = 0
        for t in range(1, 1 << self.dim):
            gray = t ^ (t >> 1)
            idx = (gray ^ prev).bit_length() - 1
            prev = gray
            cur ^= self.rows[idx]
            yield cur

    def contains(self, word: int) -> bool:
        for b in self.rows:
            if word & (b & -b):
                word ^= b
        return word == 0

    def weight_distribution(self) -> tuple[int, ...]:
        if self.dim > 24:
            raise ValueError("code too large to enumerate")
        dist = [0] * (self.m + 1)
        for w in self.words():
            dist[w.bit_count()] += 1
        return tuple(dist)

    def weight_enum(self) -> WeightEnum:
        return WeightEnum(self.m, self.weight_distribution())

    def min_weight(self) -> int:
        return min(w.bit_count() for w in self.words() if w)

    def dual(self) -> "BinaryCode":
        basis: list[int] = []
        pivots: list[int] = []
        red: list[int] = []
        for r in self.rows:
            for b, pos in zip(red, pivots):
                if (r >> pos) & 1:
                    r ^= b
            if r:
                pos = (r & -r).bit_length() - 1
                red = [(b ^ r) if ((b >> pos) & 1) else b for b in red]
                red.append(r)
                pivots.append(pos)
        pivot_set = set(pivots)
        out = []
        for f in range(self.m):
            if f in pivot_set:
                continue
            v = 1 << f
            for b, pos in zip(red, pivots):
                if (b >> f) & 1:
                    v |= 1 << pos
            out.append(v)
        return BinaryCode.from_generators(self.m, out)

    def is_self_dual(self) -> bool:
        if 2 * self.dim != self.m:
            return False
        return all((x & y).bit_count() % 2 == 0
                   for i, x in enumerate(self.rows) for y in self.rows[i:])

    def is_even(self) -> bool:
        # parity is linear for binary codes
        return all(r.bit_count() % 2 == 0 for r in self.rows)

    def is_doubly_even(self) -> bool:
        if any(r.bit_count() % 4 for r in self.rows):
            return False
        return all((x & y).bit_count() % 2 == 0
                   for i, x in enumerate(self.rows) for y in self.rows[i + 1:])


def parse_binary(text: str) -> BinaryCode:
    rows = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if any(ch not in "01" for ch in line):
            raise ValueError(f"line {lineno}: binary lines use 0/1 only")
        if width is None:
            width = len(line)
        elif len(line) != width:
            raise ValueError(f"line {lineno}: unequal lengths")
        rows.append(int(line[::-1], 2))    # bit i = column i
    if width is None:
        raise ValueError("no generators in binary code file")
    return BinaryCode.from_generators(width, rows)


def emit_binary(code: BinaryCode) -> str:
    lines = []
    for r in code.rows:
        lines.append("".join("1" if (r >> i) & 1 else "0" for i in range(code.m)))
    return "\n".join(lines) + "\n"


_HAT = (0b0000, 0b0011, 0b0101, 0b0110)    # bit 4i+j = block bit j


def hat_row(row: int, n: int) -> int:
    """Blockwise substitution K^n -> F2^(4n)."""
    out = 0
    for i in range(n):
        out |= _HAT[row_symbol(row, i)] << (4 * i)
    return out


def hat_word_bits(row: int, n: int) -> str:
    bits = hat_row(row, n)
    return "".join("1" if (bits >> i) & 1 else "0" for i in range(4 * n))


def rho_a(c: KCode) -> BinaryCode:
    """hat(C) + d4^n."""
    gens = [hat_row(r, c.n) for r in c.rows]
    for i in range(c.n):
        gens.append(0b1111 << (4 * i))
    return BinaryCode.from_generators(4 * c.n, gens)


def rho_b(c: KCode) -> BinaryCode:
    """hat(C) + (d4^n)_0, shifted into two cosets by the n mod 4 rule.

    The shift carries one bit per block (three in the last block when
    n = 2 mod 4, keeping its weight divisible by 4).  The bit sits in the
    block position no hat image uses, so the shift is orthogonal to
    hat(C) for every code; a shift on a used position would instead
    require the all-c word to be a codeword.
    """
    n = c.n
    if n % 2:
        raise ValueError("construction B needs even length")
    gens = [hat_row(r, n) for r in c.rows]
    # (d4^n)_0: pairs of all-ones blocks
    for i in range(n - 1):
        gens.append((0b1111 << (4 * i)) | (0b1111 << (4 * (i + 1))))
    if n % 4 == 0:
        shift = 0
        for i in range(n):
            shift |= 0b1000 << (4 * i)
    else:
        shift = 0
        for i in range(n - 1):
            shift |= 0b1000 << (4 * i)
        shift |= 0b0111 << (4 * (n - 1))
    gens.append(shift)
    return BinaryCode.from_generators(4 * n, gens)


def predicted_we(w: WeightEnum, mode: str) -> WeightEnum:
    """Binary enumerator of rho_A/rho_B from the Kleinian enumerator."""
    n = w.n
    if mode == "A":
        out = _subst_quartic(w.A, n)
        return WeightEnum(4 * n, tuple(out))
    if mode != "B":
        raise ValueError("mode must be 'A' or 'B'")
    if n % 2:
        raise ValueError("construction B needs even length")
    half = _subst_quartic(w.A, n)
    out = [x for x in half]
    # (x^4 - y^4)^n
    from math import comb
    for j in range(n + 1):
        out[4 * j] += comb(n, j) * (-1) ** j
    # 2^n [(x^3 y + x y^3)^n + (-1)^(n/2) (x^3 y - x y^3)^n]
    sign = (-1) ** (n // 2)
    for j in range(n + 1):
        coeff = comb(n, j) * (1 + sign * (-1) ** j) * 2 ** n
        if coeff:
            out[n + 2 * j] += coeff
    for i, x in enumerate(out):
        q, r = divmod(x, 2)
        if r:
            raise ValueError("construction-B enumerator is not integral")
        out[i] = q
    return WeightEnum(4 * n, tuple(out))


def _subst_quartic(A, n: int) -> list[int]:
    """W(x^4+y^4, 2 x^2 y^2) as a degree-4n coefficient vector."""
    out = [0] * (4 * n + 1)
    from math import comb
    for i, a in enumerate(A):
        if not a:
            continue
        # (x^4+y^4)^(n-i) (2 x^2 y^2)^i
        scale = 2 ** i
        for j in range(n - i + 1):
            out[4 * j + 2 * i] += a * scale * comb(n - i, j)
    return out


@dataclass(frozen=True)
class Marking:
    """A nowhere-zero word selecting the coordinate pairing."""

    symbols: tuple[int, ...]

    def __post_init__(self):
        if any(s not in (1, 2, 3) for s in self.symbols):
            raise ValueError("marking symbols must be nonzero")

    @classmethod
    def standard(cls, n: int) -> "Marking":
        return cls((1,) * n)

    def intervals(self) -> tuple[tuple[int, int], ...]:
        """Pairing of {1..4n} per block: a -> (4i-3,4i-2),(4i-1,4i);
        b -> (4i-3,4i-1),(4i-2,4i); c -> (4i-3,4i),(4i-1,4i-2)."""
        out = []
        for i, s in enumerate(self.symbols, start=1):
            base = 4 * i - 3
            if s == 1:
                out.append((base, base + 1))
                out.append((base + 2, base + 3))
            elif s == 2:
                out.append((base, base + 2))
                out.append((base + 1, base + 3))
            else:
                out.append((base, base + 3))
                out.append((base + 2, base + 1))
        return tuple(out)


def marking_intervals(m: Marking) -> tuple[tuple[int, int], ...]:
    return m.intervals()


@dataclass(frozen=True)
class MarkedSmwe:
    """Sparse (x_deg, y_deg, z_deg) -> count with x: 00 pairs, y: 11,
    z: mixed."""

    n_pairs: int
    counts: Mapping[tuple[int, int, int], int]

    def to_json(self) -> dict:
        return {f"({i},{j},{k})": c for (i, j, k), c in sorted(self.counts.items())}


def bin_smwe(code: BinaryCode, intervals) -> MarkedSmwe:
    """Classify each codeword's pairs as 00/11/mixed and accumulate."""
    pairs = [(a - 1, b - 1) for a, b in intervals]
    if len(pairs) * 2 != code.m:
        raise ValueError("intervals must pair all coordinates")
    counts: dict[tuple[int, int, int], int] = {}
    for w in code.words():
        x = y = z = 0
        for a, b in pairs:
            bits = ((w >> a) & 1) | (((w >> b) & 1) << 1)
            if bits == 0:
                x += 1
            elif bits == 3:
                y += 1
            else:
                z += 1
        key = (x, y, z)
        counts[key] = counts.get(key, 0) + 1
    return MarkedSmwe(len(pairs), counts)


def _tri_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            key = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def _tri_pow(p: dict, e: int) -> dict:
    out = {(0, 0, 0): 1}
    base = p
    while e:
        if e & 1:
            out = _tri_mul(out, base)
        e >>= 1
        if e:
            base = _tri_mul(base, base)
    return out


def predicted_smwe(s: SymWE, mode: str) -> MarkedSmwe:
    """Marked enumerator of rho_A/rho_B from the symmetrized enumerator,
    for the standard all-a marking."""
    n = s.n
    forms = {
        "U": {(2, 0, 0): 1, (0, 2, 0): 1},     # x^2 + y^2
        "V": {(1, 1, 0): 2},                   # 2xy
        "W": {(0, 0, 2): 2},                   # 2z^2
    }
    acc: dict[tuple[int, int, int], int] = {}
    cache: dict[tuple[str, int], dict] = {}

    def fpow(name, e):
        if (name, e) not in cache:
            cache[(name, e)] = _tri_pow(forms[name], e)
        return cache[(name, e)]

    for (i, j, k), cnt in s.counts.items():
        term = fpow("U", i)
        for name, e in (("V", j), ("W", k)):
            if e:
                term = _tri_mul(term, fpow(name, e))
        for key, val in term.items():
            acc[key] = acc.get(key, 0) + cnt * val
    if mode == "A":
        half = {k: v for k, v in acc.items() if v}
    elif mode == "B":
        if n % 2:
            raise ValueError("construction B needs even length")
        from math import comb
        # (x^2-y^2)^n
        for j in range(n + 1):
            key = (2 * (n - j), 2 * j, 0)
            acc[key] = acc.get(key, 0) + comb(n, j) * (-1) ** j
        # 2^n ((x+y)^n + (-1)^(n/2) (x-y)^n) z^n
        sign = (-1) ** (n // 2)
        for j in range(n + 1):
            coeff = comb(n, j) * (1 + sign * (-1) ** j) * 2 ** n
            if coeff:
                key = (n - j, j, n)
                acc[key] = acc.get(key, 0) + coeff
        half = {}
        for key, val in acc.items():
            q, r = divmod(val, 2)
            if r:
                raise ValueError("construction-B marked enumerator is not integral")
            if q:
                half[key] = q
    else:
        raise ValueError("mode must be 'A' or 'B'")
    # exponents are already pair counts: each symbol becomes two pairs
    return MarkedSmwe(2 * n, half)


# invariant-ring generators for symmetrized enumerators of even self-dual
# codes; the ring is free over p2, q2, p6 plus the module generator p4
P2 = {(2, 0, 0): 1, (0, 2, 0): 2, (0, 0, 2): 1}
Q2 = {(2, 0, 0): 1, (0, 1, 1): 4, (0, 0, 2): -1}
P4 = {(4, 0, 0): 1, (0, 4, 0): 8, (2, 0, 2): 6, (0, 0, 4): 1}
P6 = {(6, 0, 0): 1, (2, 4, 0): 6, (0, 6, 0): 4, (2, 3, 1): 24,
      (2, 2, 2): 12, (0, 4, 2): 6, (0, 3, 3): 8, (2, 0, 4): 3}


def _ring_monomials(degree: int) -> list[dict]:
    out = []
    for gamma in (0, 1):
        for delta in range(degree // 6 + 1):
            rest = degree - 4 * gamma - 6 * delta
            if rest < 0 or rest % 2:
                continue
            for alpha in range(rest // 2 + 1):
                beta = rest // 2 - alpha
                poly = {(0, 0, 0): 1}
                for base, e in ((P2, alpha), (Q2, beta), (P4, gamma), (P6, delta)):
                    if e:
                        poly = _tri_mul(poly, _tri_pow(base, e))
                out.append(poly)
    return out


def swe_in_invariant_ring(s: SymWE) -> bool:
    """Exact membership of the symmetrized enumerator in the span of the
    weighted-degree-n monomials in p2, q2, p4, p6.

    The generator variables read (x, y, z) = (zero count, b-or-c count,
    a count); membership fails in every other role assignment.
    """
    from fractions import Fraction
    target = {(i, k, j): v for (i, j, k), v in s.counts.items()}
    monos = _ring_monomials(s.n)
    keys = sorted(set(target) | {k for m in monos for k in m})
    rows = [[Fraction(m.get(k, 0)) for m in monos] for k in keys]
    rhs = [Fraction(target.get(k, 0)) for k in keys]
    r = 0
    for c in range(len(monos)):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        rhs[r], rhs[piv] = rhs[piv], rhs[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        rhs[r] *= inv
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
                rhs[i] -= f * rhs[r]
        r += 1
    return all(any(x != 0 for x in rows[i]) or rhs[i] == 0
               for i in range(len(rows)))
