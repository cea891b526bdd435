"""Classification of self-dual codes with mass-formula audits.

Codes are enumerated by incremental extension: self-orthogonal codes grow
half a dimension at a time (one GF(2) generator), one canonical
representative is kept per equivalence class at each level, and only
representatives are extended.  Extension candidates are the nontrivial
cosets of C in its dual, reduced to orbit representatives under Aut(C)
before canonicalization.

Completeness is certified by the mass formula: the sum of orbit sizes
6^n n! / |Aut(C)| over the produced classes must equal the closed-form
count of all distinct self-dual codes.  A failed audit aborts loudly.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from kleincode.kcore import (
    KCode,
    KWord,
    child_at,
    row_symbol,
    row_weight,
    span_rows,
)
from kleincode.sym import (
    PERMS3,
    GroupElement,
    canonical,
    group_order,
)
from kleincode.wenum import RationalWE, WeightEnum, shadow


class MassAuditError(RuntimeError):
    """The classified classes do not reproduce the mass constant."""


def mass(n: int, even: bool = False) -> int:
    """Number of distinct (even) self-dual codes of length n."""
    if even:
        if n % 2:
            raise ValueError("even self-dual codes need even length")
        out = 1
        for i in range(n):
            out *= 2 ** i + 1
        return out
    out = 1
    for i in range(1, n + 1):
        out *= 2 ** i + 1
    return out


def average_we(n: int, even: bool = False) -> RationalWE:
    """Closed form of the Aut-weighted sum of Hamming enumerators."""
    if even:
        if n % 2:
            raise ValueError("even self-dual codes need even length")
        scale = Fraction(mass(n, True), 1 + 2 ** (n - 1))
        coeffs = [scale * (2 ** (n - 1) + 1)]
        for i in range(1, n + 1):
            coeffs.append(scale * comb(n, i) * 3 ** i if i % 2 == 0 else Fraction(0))
    else:
        scale = Fraction(mass(n), 1 + 2 ** n)
        coeffs = [scale * (2 ** n + 1)]
        for i in range(1, n + 1):
            coeffs.append(scale * comb(n, i) * 3 ** i)
    return RationalWE(n, tuple(coeffs))


# ---------------------------------------------------------------------------
# skeletons
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Skeleton:
    """Decomposition of the weight-<=2 subcode into gamma1/epsilon2/delta_l."""

    gamma1: int
    components: tuple[tuple[str, int], ...]   # sorted multiset of ("delta", l) / ("eps2", 2)
    untouched: int

    def name(self) -> str:
        if self.gamma1 == 0 and not self.components:
            return "-"
        items = Counter(self.components)
        parts = []
        for (kind, size), mult in sorted(items.items(), key=lambda kv: (-kv[0][1], kv[0][0])):
            base = f"d{size}" if kind == "delta" else "e2"
            parts.append(base + (f"^{mult}" if mult > 1 else ""))
        if self.gamma1:
            parts.append("g1" + (f"^{self.gamma1}" if self.gamma1 > 1 else ""))
        return " ".join(parts)


def skeleton(c: KCode) -> Skeleton:
    if not c.is_self_orthogonal():
        raise ValueError("skeleton is defined for self-orthogonal codes")
    words = [r for r in c.words() if r]
    one_rows = [r for r in words if row_weight(r) == 1]
    gamma_positions = set()
    for r in one_rows:
        for i in range(c.n):
            if row_symbol(r, i):
                gamma_positions.add(i)
    # weight-2 words avoid gamma positions after splitting the gamma1 factors off
    two_rows = [r for r in words if row_weight(r) == 2
                and not any(row_symbol(r, i) for i in gamma_positions)]
    # union-find over positions through the weight-2 supports
    parent = list(range(c.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for r in two_rows:
        sup = [i for i in range(c.n) if row_symbol(r, i)]
        a = find(sup[0])
        b = find(sup[1])
        if a != b:
            parent[a] = b
    comps: dict[int, list[int]] = {}
    for r in two_rows:
        i = next(i for i in range(c.n) if row_symbol(r, i))
        comps.setdefault(find(i), []).append(r)
    out = []
    covered = set(gamma_positions)
    for rows in comps.values():
        support = set()
        for r in rows:
            for i in range(c.n):
                if row_symbol(r, i):
                    support.add(i)
        covered |= support
        d = len(span_rows(rows, c.n).rows)
        s = len(support)
        if s == 2 and d == 2:
            out.append(("eps2", 2))
        elif d == s - 1:
            out.append(("delta", s))
        else:
            raise ValueError("weight-2 span is not a delta/eps2 sum; "
                             "input cannot be self-orthogonal")
    return Skeleton(len(gamma_positions), tuple(sorted(out)), c.n - len(covered))


# ---------------------------------------------------------------------------
# classification by extension
# ---------------------------------------------------------------------------

@dataclass
class ClassRecord:
    index: int
    n: int
    even: bool
    rep: KCode
    aut_order: int
    aut_gens: list[GroupElement]
    we: tuple[int, ...]
    skeleton: Skeleton
    is_even: bool

    @property
    def orbit_size(self) -> int:
        return 6 ** self.n * factorial(self.n) // self.aut_order

    def to_json(self) -> dict:
        return {
            "length": self.n,
            "even": self.is_even,
            "canonical_generators": [str(w) for w in self.rep.generator_words()],
            "aut_order": self.aut_order,
            "A": list(self.we),
            "skeleton": self.skeleton.name(),
        }


def full_group_gens(n: int) -> list[GroupElement]:
    """Generators of the whole group S3^n : S_n."""
    gens = []
    swap_ab = (0, 2, 1, 3)
    cycle_abc = (0, 2, 3, 1)
    ident = PERMS3[0]
    for tau0 in (swap_ab, cycle_abc):
        taus = (tau0,) + (ident,) * (n - 1)
        gens.append(GroupElement(tuple(range(n)), taus))
    if n > 1:
        sig = list(range(n))
        sig[0], sig[1] = 1, 0
        gens.append(GroupElement(tuple(sig), (ident,) * n))
        rot = tuple((i + 1) % n for i in range(n))
        gens.append(GroupElement(rot, (ident,) * n))
    return gens


def _coset_min(base: int, code_words: list[int]) -> int:
    return min(base ^ w for w in code_words)


def _complement_basis(code: KCode, ambient: KCode) -> list[int]:
    """Rows completing code's basis to a basis of the ambient code."""
    out = []
    current = list(code.rows)
    for r in ambient.rows:
        red = r
        for b in current:
            if red & (b & -b):
                red ^= b
        if red:
            out.append(red)
            current = list(span_rows(current + [red], code.n).rows)
    return out


def _extension_orbit_reps(code: KCode, gens: list[GroupElement],
                          even: bool) -> list[int]:
    """Orbit representatives of Aut(code) on the nonzero cosets of code in
    its dual (even-weight cosets only when `even`)."""
    extra = _complement_basis(code, code.dual())
    # quotient transversal: nonzero combinations of the complement basis
    code_words = list(code.words())
    labels = set()
    m = len(extra)
    for mask in range(1, 1 << m):
        base = 0
        mm = mask
        idx = 0
        while mm:
            if mm & 1:
                base ^= extra[idx]
            mm >>= 1
            idx += 1
        lab = _coset_min(base, code_words)
        if even and row_weight(lab) % 2:
            continue
        labels.add(lab)
    reps = []
    seen: set[int] = set()
    for lab in sorted(labels):
        if lab in seen:
            continue
        orbit = {lab}
        frontier = [lab]
        while frontier:
            r = frontier.pop()
            for g in gens:
                r2 = _coset_min(g.act_row(r), code_words)
                if r2 not in orbit:
                    orbit.add(r2)
                    frontier.append(r2)
        seen |= orbit
        reps.append(lab)
    return reps


def _extend_one(args):
    rows, n, gens, even = args
    code = KCode(n, rows)
    out = []
    for x in _extension_orbit_reps(code, gens, even):
        d = span_rows(list(rows) + [x], n)
        res = canonical(d)
        image_gens = [res.element.compose(h).compose(res.element.inverse())
                      for h in res.aut_gens]
        out.append((res.image.rows, image_gens))
    return out


def classify(n: int, even: bool = False, jobs: int = 1) -> list[ClassRecord]:
    """All equivalence classes of (even) self-dual codes of length n,
    with the mass audit as completeness certificate."""
    if even and n % 2:
        raise ValueError("even self-dual codes need even length")
    level: dict[tuple[int, ...], list[GroupElement]] = {
        (): full_group_gens(n)
    }
    for _ in range(n):
        tasks = [(rows, n, gens, even) for rows, gens in sorted(level.items())]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as ex:
                results = list(ex.map(_extend_one, tasks))
        else:
            results = [_extend_one(t) for t in tasks]
        nxt: dict[tuple[int, ...], list[GroupElement]] = {}
        for batch in results:
            for rows, gens in batch:
                if rows not in nxt:
                    nxt[rows] = gens
        level = nxt

    records = []
    total = 0
    for idx, rows in enumerate(sorted(level.keys())):
        code = KCode(n, rows)
        gens = level[rows]
        order = group_order(gens, n)
        rec = ClassRecord(
            index=idx,
            n=n,
            even=even,
            rep=code,
            aut_order=order,
            aut_gens=gens,
            we=code.weight_distribution(),
            skeleton=skeleton(code),
            is_even=code.is_even(),
        )
        total += rec.orbit_size
        records.append(rec)
    expected = mass(n, even)
    if total != expected:
        raise MassAuditError(
            f"mass audit failed for n={n} even={even}: "
            f"sum of orbit sizes {total} != {expected}")
    return records


def enumerate_all_self_dual(n: int, even: bool = False) -> list[KCode]:
    """Every distinct (even) self-dual code, by plain extension.

    Exponential in n; this is the brute-force completeness oracle."""
    level: set[tuple[int, ...]] = {()}
    for _ in range(n):
        nxt: set[tuple[int, ...]] = set()
        for rows in level:
            code = KCode(n, rows)
            code_words = list(code.words())
            extra = _complement_basis(code, code.dual())
            m = len(extra)
            for mask in range(1, 1 << m):
                base = 0
                mm, idx = mask, 0
                while mm:
                    if mm & 1:
                        base ^= extra[idx]
                    mm >>= 1
                    idx += 1
                if even and row_weight(_coset_min(base, code_words)) % 2:
                    continue
                d = span_rows(list(rows) + [base], n)
                nxt.add(d.rows)
        level = nxt
    return [KCode(n, rows) for rows in sorted(level)]


# ---------------------------------------------------------------------------
# children, parents, neighbours
# ---------------------------------------------------------------------------

def children(rec: ClassRecord) -> list[tuple[tuple[int, int], KCode]]:
    """One child per Aut-orbit of (position, glue symbol) pairs.

    Children of inequivalent orbits may still coincide as classes; callers
    dedupe via canonical forms when counting.
    """
    if not rec.is_even:
        raise ValueError("children are defined for even self-dual codes")
    cells = [(i, s) for i in range(rec.n) for s in (1, 2, 3)]
    cell_maps = [g.cell_perm() for g in rec.aut_gens]
    seen: set[int] = set()
    out = []
    for (i, s) in cells:
        c0 = 3 * i + (s - 1)
        if c0 in seen:
            continue
        orbit = {c0}
        frontier = [c0]
        while frontier:
            c = frontier.pop()
            for cm in cell_maps:
                c2 = cm[c]
                if c2 not in orbit:
                    orbit.add(c2)
                    frontier.append(c2)
        seen |= orbit
        out.append(((i, s), child_at(rec.rep, i, s)))
    return out


def primitive_part(c: KCode) -> KCode:
    """Split off all gamma1 factors (delete positions carrying weight-1 words)."""
    ones = [r for r in c.words() if row_weight(r) == 1]
    if not ones:
        return c
    positions = sorted(
        {next(i for i in range(c.n) if row_symbol(r, i)) for r in ones},
        reverse=True)
    rows = list(c.rows)
    for r in ones:
        pos = next(i for i in range(c.n) if row_symbol(r, i))
        sym = row_symbol(r, pos)
        fixed = []
        for row in rows:
            if row != r and row_symbol(row, pos):
                fixed.append(row ^ r if row_symbol(row, pos) == sym else row)
            else:
                fixed.append(row)
        rows = fixed
    out = span_rows(rows, c.n)
    for pos in positions:
        out = out.puncture(pos)
    return out


def parent_of(d: KCode) -> KCode:
    """Theorem-8 style parent: one position longer, even self-dual."""
    if not d.is_self_dual():
        raise ValueError("parent construction needs a self-dual code")
    if d.is_even():
        raise ValueError("parent construction needs a non-even code")
    sh = shadow(d)
    t1, t2, t3 = sh.coset_reps
    n = d.n
    a_row = 1 << (2 * n)          # symbol a at the new position
    b_row = 2 << (2 * n)
    rows = list(sh.even_subcode.rows)
    rows.append(t1 | a_row)
    rows.append(t2 | b_row)
    return span_rows(rows, n + 1)


def neighbors(d: KCode) -> tuple[KCode, KCode]:
    """The two even self-dual neighbours of a non-even self-dual code."""
    if d.n % 2:
        raise ValueError("neighbours need even length")
    sh = shadow(d)
    if sh.is_even_case:
        raise ValueError("even codes are their own neighbourhood")
    return sh.coset_codes()


@dataclass
class NeighGraph:
    n: int
    vertices: list[ClassRecord]                  # even classes
    edges: list[tuple[int, int, int]]            # (odd-class index, v1, v2)

    @property
    def loops(self) -> list[tuple[int, int, int]]:
        return [e for e in self.edges if e[1] == e[2]]

    @property
    def proper_edges(self) -> list[tuple[int, int, int]]:
        return [e for e in self.edges if e[1] != e[2]]

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj: dict[int, set[int]] = {i: set() for i in range(len(self.vertices))}
        for _, a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


def neighborhood_graph(n: int, even_classes: list[ClassRecord] | None = None,
                       all_classes: list[ClassRecord] | None = None) -> NeighGraph:
    if n % 2:
        raise ValueError("neighbourhood graphs need even length")
    if even_classes is None:
        even_classes = classify(n, even=True)
    if all_classes is None:
        all_classes = classify(n, even=False)
    vertex_index = {rec.rep.rows: i for i, rec in enumerate(even_classes)}
    edges = []
    for rec in all_classes:
        if rec.is_even:
            continue
        n1, n2 = neighbors(rec.rep)
        a = vertex_index[canonical(n1).image.rows]
        b = vertex_index[canonical(n2).image.rows]
        edges.append((rec.index, min(a, b), max(a, b)))
    return NeighGraph(n, even_classes, edges)


def length7_classes(even8: list[ClassRecord] | None = None) -> list[KCode]:
    """The self-dual classes of length 7, as children of the even length-8
    classes (one canonical representative each)."""
    if even8 is None:
        even8 = classify(8, even=True)
    seen: dict[tuple[int, ...], KCode] = {}
    for rec in even8:
        for _, child in children(rec):
            img = canonical(child).image
            seen.setdefault(img.rows, img)
    return [seen[k] for k in sorted(seen)]
