"""Words and linear codes over the Kleinian four-group K = {0, a, b, c}.

Symbol encoding
---------------
A symbol is an int 0..3 interpreted as a bit pair (p, q):

    0 = (0,0)    a = (1,0)    b = (0,1)    c = (1,1)

Addition in K is XOR of bit pairs, and the dot product

    x . y = p_x q_y  XOR  q_x p_y

is 1 exactly when x and y are distinct nonzero symbols.  This is the
standard symplectic form on F2^2, so word-level inner products reduce
to three bitwise ops and a popcount.

Word encoding
-------------
A length-n word is two n-bit planes P, Q (bit i = position i, position 0
is the leftmost symbol in string form).  A word may also be packed into a
single 2n-bit "row" with coordinate order position-major, p-bit before
q-bit: bit 2i = p_i, bit 2i+1 = q_i.  Codes are stored as the canonical
GF(2) reduced row-echelon basis of such rows, so equal codes always have
equal bases.

Dimensions are half-integers; we store dim2 = twice the dimension, i.e.
the GF(2) dimension of the row space (|C| = 2^dim2 = 4^k).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

SYMBOLS = "0abc"
SYM_A, SYM_B, SYM_C = 1, 2, 3


def sym_dot(x: int, y: int) -> int:
    """Dot product of two symbols: 1 iff x, y nonzero and distinct."""
    return ((x & 1) & (y >> 1)) ^ ((x >> 1) & (y & 1))


def sym_add(x: int, y: int) -> int:
    return x ^ y


def _even_plane_mask(n: int) -> int:
    # 0b...0101 with n ones in the even bit slots of a 2n-bit row
    m = 0
    for i in range(n):
        m |= 1 << (2 * i)
    return m


# 0b...010101 pattern, grown on demand so rows of any length work
_EVEN_BITS = int("55" * 64, 16)


def _even_bits(width: int) -> int:
    global _EVEN_BITS
    while _EVEN_BITS.bit_length() < width:
        _EVEN_BITS |= _EVEN_BITS << _EVEN_BITS.bit_length()
    return _EVEN_BITS


def row_support(row: int) -> int:
    """n-bit mask of nonzero positions of a packed 2n-bit row."""
    sup = (row | (row >> 1)) & _even_bits(row.bit_length())
    out = 0
    i = 0
    while sup:
        if sup & 1:
            out |= 1 << i
        sup >>= 2
        i += 1
    return out


def row_weight(row: int) -> int:
    """Number of nonzero positions of a packed row."""
    return ((row | (row >> 1)) & _even_bits(row.bit_length())).bit_count()


_row_weight = row_weight


def row_inner(x: int, y: int) -> int:
    """Scalar product of two packed rows (symplectic form, mod 2)."""
    return (x & _swap_planes_raw(y)).bit_count() & 1


def _swap_planes_raw(row: int) -> int:
    even = row & _even_bits(row.bit_length())
    odd = row ^ even
    return (even << 1) | (odd >> 1)


def row_symbol(row: int, i: int) -> int:
    return (row >> (2 * i)) & 3


def row_from_symbols(syms: Iterable[int]) -> int:
    row = 0
    for i, s in enumerate(syms):
        row |= s << (2 * i)
    return row


@dataclass(frozen=True)
class KWord:
    """A length-n vector over K, held as two n-bit planes."""

    n: int
    p: int
    q: int

    @classmethod
    def parse(cls, text: str) -> "KWord":
        p = q = 0
        for i, ch in enumerate(text):
            try:
                s = SYMBOLS.index(ch)
            except ValueError:
                raise ValueError(f"invalid symbol {ch!r} at column {i + 1}") from None
            p |= (s & 1) << i
            q |= (s >> 1) << i
        return cls(len(text), p, q)

    @classmethod
    def zero(cls, n: int) -> "KWord":
        return cls(n, 0, 0)

    @classmethod
    def from_row(cls, n: int, row: int) -> "KWord":
        p = q = 0
        for i in range(n):
            s = (row >> (2 * i)) & 3
            p |= (s & 1) << i
            q |= (s >> 1) << i
        return cls(n, p, q)

    def to_row(self) -> int:
        row = 0
        for i in range(self.n):
            row |= self[i] << (2 * i)
        return row

    def __getitem__(self, i: int) -> int:
        return ((self.p >> i) & 1) | (((self.q >> i) & 1) << 1)

    def symbols(self) -> tuple[int, ...]:
        return tuple(self[i] for i in range(self.n))

    def weight(self) -> int:
        return (self.p | self.q).bit_count()

    def support(self) -> int:
        return self.p | self.q

    def __add__(self, other: "KWord") -> "KWord":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return KWord(self.n, self.p ^ other.p, self.q ^ other.q)

    def inner(self, other: "KWord") -> int:
        if self.n != other.n:
            raise ValueError("length mismatch")
        return ((self.p & other.q) ^ (self.q & other.p)).bit_count() & 1

    def key(self) -> int:
        """Packed base-4 integer, leftmost symbol most significant (0<a<b<c)."""
        k = 0
        for i in range(self.n):
            k = (k << 2) | self[i]
        return k

    def __str__(self) -> str:
        return "".join(SYMBOLS[self[i]] for i in range(self.n))

    def __repr__(self) -> str:
        return f"KWord({str(self)!r})"


def dot(x: int, y: int) -> int:
    """Symbol dot product (alias usable on KSymbol ints)."""
    return sym_dot(x, y)


def inner(x: KWord, y: KWord) -> int:
    return x.inner(y)


def _rref(rows: list[int]) -> tuple[int, ...]:
    """Reduced row echelon form over GF(2); pivots scanned from bit 0 up.

    Returns rows sorted by pivot.  Same row space in, same tuple out.
    """
    basis: list[int] = []  # kept fully reduced, pivot of basis[i] increasing
    for r in rows:
        for b in basis:
            low = b & -b
            if r & low:
                r ^= b
        if r:
            # reduce existing rows by r, insert keeping pivot order
            low = r & -r
            basis = [(b ^ r) if (b & low) else b for b in basis]
            basis.append(r)
            basis.sort(key=lambda v: v & -v)
    return tuple(basis)


def _nullspace(rows: Iterable[int], width: int) -> list[int]:
    """Basis of {v : popcount(v & r) even for all r} inside GF(2)^width."""
    mat = list(rows)
    pivots: list[int] = []  # bit positions
    red: list[int] = []
    for r in mat:
        for b, pos in zip(red, pivots):
            if (r >> pos) & 1:
                r ^= b
        if r:
            pos = (r & -r).bit_length() - 1
            # back-substitute into earlier rows
            red = [(b ^ r) if ((b >> pos) & 1) else b for b in red]
            red.append(r)
            pivots.append(pos)
    pivot_set = set(pivots)
    out = []
    for f in range(width):
        if f in pivot_set:
            continue
        v = 1 << f
        for b, pos in zip(red, pivots):
            if (b >> f) & 1:
                v |= 1 << pos
        out.append(v)
    return out


@dataclass(frozen=True)
class KCode:
    """A linear code over K as a canonical RREF basis of packed rows."""

    n: int
    rows: tuple[int, ...]

    @property
    def dim2(self) -> int:
        """GF(2) dimension; the code dimension is k = dim2/2."""
        return len(self.rows)

    @property
    def k(self) -> Fraction:
        return Fraction(self.dim2, 2)

    @property
    def size(self) -> int:
        return 1 << self.dim2

    def words(self) -> Iterator[int]:
        """All codewords as packed rows, Gray-code order (zero first)."""
        rows = self.rows
        cur = 0
        yield 0
        prev = 0
        for t in range(1, 1 << len(rows)):
            gray = t ^ (t >> 1)
            idx = (gray ^ prev).bit_length() - 1
            prev = gray
            cur ^= rows[idx]
            yield cur

    def kwords(self) -> Iterator[KWord]:
        for r in self.words():
            yield KWord.from_row(self.n, r)

    def contains_row(self, row: int) -> bool:
        for b in self.rows:
            if row & (b & -b):
                row ^= b
        return row == 0

    def __contains__(self, w: KWord) -> bool:
        return self.contains_row(w.to_row())

    def weight_distribution(self) -> tuple[int, ...]:
        if self.dim2 > 24:
            raise ValueError("code too large to enumerate; 2^dim2 > 2^24")
        dist = [0] * (self.n + 1)
        for r in self.words():
            dist[_row_weight(r)] += 1
        return tuple(dist)

    def min_weight(self) -> int:
        if self.dim2 == 0:
            raise ValueError("zero code has no nonzero codeword")
        if self.dim2 > 24:
            raise ValueError("code too large to enumerate; 2^dim2 > 2^24")
        best = self.n
        for r in self.words():
            if r:
                w = _row_weight(r)
                if w < best:
                    best = w
        return best

    def dual(self) -> "KCode":
        twisted = [_swap_planes_raw(r) for r in self.rows]
        null = _nullspace(twisted, 2 * self.n)
        return KCode(self.n, _rref(null))

    def is_self_orthogonal(self) -> bool:
        rs = self.rows
        return all(row_inner(x, y) == 0 for i, x in enumerate(rs) for y in rs[i:])

    def is_self_dual(self) -> bool:
        return self.dim2 == self.n and self.is_self_orthogonal()

    def is_even(self) -> bool:
        if self.is_self_orthogonal():
            # weight parity is linear here, check generators only
            return all(_row_weight(r) % 2 == 0 for r in self.rows)
        return all(_row_weight(r) % 2 == 0 for r in self.words())

    def even_subcode(self) -> "KCode":
        """Subcode of even-weight codewords (index 1 or 2 when a subgroup)."""
        if self.is_self_orthogonal():
            odd = [r for r in self.rows if _row_weight(r) % 2]
            even = [r for r in self.rows if _row_weight(r) % 2 == 0]
            if odd:
                r0 = odd[0]
                even.extend(r ^ r0 for r in odd[1:])
            return KCode(self.n, _rref(even))
        evens = [r for r in self.words() if _row_weight(r) % 2 == 0]
        sub = KCode(self.n, _rref(evens))
        if sub.size != len(evens):
            raise ValueError("even-weight words do not form a subcode")
        return sub

    def direct_sum(self, other: "KCode") -> "KCode":
        shift = 2 * self.n
        rows = list(self.rows) + [r << shift for r in other.rows]
        return KCode(self.n + other.n, _rref(rows))

    def puncture(self, pos: int) -> "KCode":
        """Delete one position (projection onto the remaining coordinates)."""
        lo_mask = (1 << (2 * pos)) - 1
        rows = []
        for r in self.rows:
            rows.append((r & lo_mask) | ((r >> (2 * pos + 2)) << (2 * pos)))
        return KCode(self.n - 1, _rref(rows))

    def generator_words(self) -> list[KWord]:
        return [KWord.from_row(self.n, r) for r in self.rows]

    def __str__(self) -> str:
        gens = ", ".join(str(w) for w in self.generator_words()) or "0"
        return f"[{self.n}, {self.k}] <{gens}>"


def span(gens: Iterable[KWord], n: int | None = None) -> KCode:
    """Canonical code spanned by the given words (GF(2) span)."""
    gens = list(gens)
    if not gens:
        if n is None:
            raise ValueError("empty generator list needs an explicit length")
        return KCode(n, ())
    length = gens[0].n
    if any(g.n != length for g in gens):
        raise ValueError("generators have mixed lengths")
    if n is not None and n != length:
        raise ValueError("length does not match generators")
    return KCode(length, _rref([g.to_row() for g in gens]))


def span_rows(rows: Iterable[int], n: int) -> KCode:
    return KCode(n, _rref(list(rows)))


def dual(c: KCode) -> KCode:
    return c.dual()


def direct_sum(c: KCode, d: KCode) -> KCode:
    return c.direct_sum(d)


def min_weight(c: KCode) -> int:
    return c.min_weight()


def even_subcode(c: KCode) -> KCode:
    return c.even_subcode()


# ---------------------------------------------------------------------------
# named codes
# ---------------------------------------------------------------------------

def gamma1() -> KCode:
    """[1, 1/2, 1] code {0, a}."""
    return span([KWord.parse("a")])


def epsilon2() -> KCode:
    """[2, 1, 2] code {00, aa, bb, cc}."""
    return span([KWord.parse("aa"), KWord.parse("bb")])


def delta(n: int) -> KCode:
    """Words over {0, a} with an even number of a's (dim2 = n-1)."""
    if n < 2:
        raise ValueError("delta needs n >= 2")
    gens = []
    for i in range(n - 1):
        gens.append(KWord(n, 0b11 << i, 0))
    return span(gens)


def delta_plus(n: int, glue: str = "b") -> KCode:
    """Self-dual extension of delta(n) by the all-b glue word (or c,b^(n-1))."""
    if glue == "b":
        g = KWord(n, 0, (1 << n) - 1)
    elif glue == "cb":
        g = KWord(n, 1, (1 << n) - 1)
    else:
        raise ValueError("glue must be 'b' or 'cb'")
    base = delta(n)
    return span_rows(list(base.rows) + [g.to_row()], n)


_HEXACODE_GENS = ["a0a0bb", "a0bba0", "bba0a0", "00aaaa", "aa00aa", "b0b0ca"]


def hexacode() -> KCode:
    """The [6, 3, 4] Hexacode."""
    return span([KWord.parse(t) for t in _HEXACODE_GENS])


def child_at(c: KCode, pos: int, sym: int) -> KCode:
    """Length n-1 self-dual code from an even self-dual parent.

    Keeps the codewords whose symbol at `pos` lies in {0, sym} and deletes
    that position.
    """
    if sym not in (1, 2, 3):
        raise ValueError("glue symbol must be a, b or c")
    # {0, sym} is the kernel of s -> dot(s, sym); eliminate rows violating it
    rows = list(c.rows)
    bad = [r for r in rows if sym_dot(row_symbol(r, pos), sym)]
    good = [r for r in rows if not sym_dot(row_symbol(r, pos), sym)]
    if bad:
        r0 = bad[0]
        good.extend(r ^ r0 for r in bad[1:])
    kept = KCode(c.n, _rref(good))
    return kept.puncture(pos)


def shorter_hexacode() -> KCode:
    """The [5, 5/2, 3] shorter Hexacode: the child of the Hexacode."""
    return child_at(hexacode(), 5, SYM_A)


# Unique non-even self-dual [6,3] code with A1 = A2 = 0, produced once by
# the length-6 classification run and frozen as its canonical basis.
_ODD_HEXACODE_GENS = [
    "a00bb0",
    "b0b0a0",
    "0a0b0b",
    "0bb00a",
    "00a0bb",
    "000aaa",
]


def odd_hexacode() -> KCode:
    """The odd Hexacode: non-even self-dual [6, 3] with A1 = A2 = 0."""
    return span([KWord.parse(t) for t in _ODD_HEXACODE_GENS])


# F4 structure on K: a=1, b=omega, c=omega^2 with omega^2 = omega + 1.
def f4_mul(x: int, y: int) -> int:
    p1, q1 = x & 1, x >> 1
    p2, q2 = y & 1, y >> 1
    p = (p1 & p2) ^ (q1 & q2)
    q = (p1 & q2) ^ (q1 & p2) ^ (q1 & q2)
    return p | (q << 1)


def _f4_projective_points(m: int) -> list[tuple[int, ...]]:
    """One representative per projective point of F4^m (first nonzero = 1)."""
    pts = []
    for v in range(4 ** m):
        digs = [(v >> (2 * i)) & 3 for i in range(m)]
        lead = next((d for d in digs if d), 0)
        if lead == SYM_A:  # normalized: first nonzero entry is 1
            pts.append(tuple(digs))
    return pts


def hamming(m: int) -> KCode:
    """The perfect Hamming code of length (4^m - 1)/3 via the F4 structure."""
    if m < 2:
        raise ValueError("hamming needs m >= 2")
    pts = _f4_projective_points(m)
    gens = []
    for vec in _f4_kernel_basis([tuple(p) for p in pts]):
        gens.append(KWord.parse("".join(SYMBOLS[s] for s in vec)))
        gens.append(KWord.parse("".join(SYMBOLS[f4_mul(SYM_B, s)] for s in vec)))
    return span(gens)


def _f4_inv(x: int) -> int:
    if x == 0:
        raise ZeroDivisionError("F4 inverse of 0")
    return {SYM_A: SYM_A, SYM_B: SYM_C, SYM_C: SYM_B}[x]


def _collinear_triples(pts: list[tuple[int, ...]]) -> list[tuple[int, int, int, int, int, int]]:
    """All collinear point triples with dependency coefficients.

    Yields (i, j, k, ai, aj, ak) with ai*P_i + aj*P_j + ak*P_k = 0,
    one entry per unordered triple.
    """
    index = {p: i for i, p in enumerate(pts)}
    m = len(pts[0])
    seen = set()
    out = []
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            for beta in (SYM_A, SYM_B, SYM_C):
                s = tuple(pts[i][t] ^ f4_mul(beta, pts[j][t]) for t in range(m))
                lead = next((d for d in s if d), 0)
                norm = tuple(f4_mul(_f4_inv(lead), d) for d in s)
                k = index[norm]
                trip = frozenset((i, j, k))
                if trip in seen:
                    continue
                seen.add(trip)
                out.append((i, j, k, SYM_A, beta, lead))
    return out


def _extension_scalings(pts: list[tuple[int, ...]]) -> tuple[int, ...]:
    """Column scalings making the parity-extended Hamming code reach d = 4.

    A weight-3 word of the scaled code on a collinear triple has symbol sum
    sum(a/lam); backtrack for the first assignment with all these nonzero.
    """
    triples = _collinear_triples(pts)
    by_last: dict[int, list[tuple[int, int, int, int, int, int]]] = {}
    for t in triples:
        by_last.setdefault(max(t[0], t[1], t[2]), []).append(t)
    lam = [0] * len(pts)

    def ok(idx: int) -> bool:
        for i, j, k, ai, aj, ak in by_last.get(idx, ()):
            s = (f4_mul(ai, _f4_inv(lam[i]))
                 ^ f4_mul(aj, _f4_inv(lam[j]))
                 ^ f4_mul(ak, _f4_inv(lam[k])))
            if s == 0:
                return False
        return True

    def rec(idx: int) -> bool:
        if idx == len(pts):
            return True
        for v in (SYM_A, SYM_B, SYM_C):
            lam[idx] = v
            if ok(idx) and rec(idx + 1):
                return True
        lam[idx] = 0
        return False

    if not rec(0):
        raise ValueError("no valid extension scaling found")
    return tuple(lam)


def _f4_kernel_basis(cols: list[tuple[int, ...]]) -> list[list[int]]:
    """F4 kernel of the matrix with the given columns."""
    m = len(cols[0])
    length = len(cols)
    rows = [[cols[j][i] for j in range(length)] for i in range(m)]
    red: list[list[int]] = []
    pivots: list[int] = []
    for r in rows:
        r = r[:]
        for b, pv in zip(red, pivots):
            if r[pv]:
                coef = f4_mul(r[pv], _f4_inv(b[pv]))
                r = [x ^ f4_mul(coef, y) for x, y in zip(r, b)]
        pv = next((j for j, x in enumerate(r) if x), None)
        if pv is not None:
            red.append(r)
            pivots.append(pv)
    pivot_set = set(pivots)
    basis = []
    for f in range(length):
        if f in pivot_set:
            continue
        vec = [0] * length
        vec[f] = SYM_A
        for b, pv in zip(red, pivots):
            if b[f]:
                vec[pv] = f4_mul(b[f], _f4_inv(b[pv]))
        basis.append(vec)
    return basis


def extended_hamming(m: int) -> KCode:
    """Hamming code extended by a parity symbol to minimal weight 4.

    Columns are rescaled first so that no weight-3 codeword has zero
    symbol sum; plain parity extension then kills all weight-3 words.

    Only m = 2 admits such an extension.  For m = 3 an exhaustive sweep
    over all additive extension functionals (16 maps per coordinate,
    complete backtrack over the 630 weight-3 codewords) finds none, and
    the largest cap in PG(3,4) has 17 < 22 points, ruling out the
    multiplicative case as well.
    """
    if m < 2:
        raise ValueError("extended_hamming needs m >= 2")
    if m > 2:
        raise ValueError(
            "no distance-4 single-symbol extension of the Hamming code "
            f"exists for m={m}; only m=2 is extendable")
    pts = _f4_projective_points(m)
    lam = _extension_scalings(pts)
    cols = [tuple(f4_mul(lam[j], p) for p in pt) for j, pt in enumerate(pts)]
    gens = []
    for vec in _f4_kernel_basis(cols):
        total = 0
        for s in vec:
            total ^= s
        ext = vec + [total]
        for mult in (SYM_A, SYM_B):
            word = [f4_mul(mult, s) for s in ext]
            gens.append(KWord.parse("".join(SYMBOLS[s] for s in word)))
    return span(gens)


_STANDARD = {
    "gamma1": lambda **kw: gamma1(),
    "epsilon2": lambda **kw: epsilon2(),
    "delta": lambda n, **kw: delta(n),
    "delta+": lambda n, **kw: delta_plus(n),
    "C5": lambda **kw: shorter_hexacode(),
    "C6": lambda **kw: hexacode(),
    "O6": lambda **kw: odd_hexacode(),
    "hamming": lambda m, **kw: hamming(m),
    "hamming+": lambda m, **kw: extended_hamming(m),
}


def standard_code(name: str, **params) -> KCode:
    """Construct a named code: gamma1, epsilon2, delta, delta+, C5, C6, O6,
    hamming, hamming+ (delta/delta+ take n=, hamming variants take m=)."""
    try:
        factory = _STANDARD[name]
    except KeyError:
        raise ValueError(f"unknown code name {name!r}") from None
    return factory(**params)


# ---------------------------------------------------------------------------
# code file format: '#' comments, then one generator per line over {0,a,b,c}
# ---------------------------------------------------------------------------

def parse_code(text: str) -> KCode:
    words = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            w = KWord.parse(line)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        words.append(w)
    if not words:
        raise ValueError("no generators in code file")
    if len({w.n for w in words}) != 1:
        raise ValueError("generator lines have unequal lengths")
    return span(words)


def emit_code(c: KCode) -> str:
    lines = [str(w) for w in c.generator_words()]
    if not lines:
        lines = ["0" * c.n]
    return "\n".join(lines) + "\n"


def read_code(path) -> KCode:
    with open(path) as fh:
        return parse_code(fh.read())


def write_code(c: KCode, path) -> None:
    with open(path, "w") as fh:
        fh.write(emit_code(c))
