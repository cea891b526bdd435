"""The equivalence group S3^n : S_n — action, canonical forms, automorphisms.

A group element is a position permutation together with one permutation of
the nonzero symbols {a, b, c} per position; symbols move first, then
positions.  Canonical forms come from a minimal-image backtrack: target
positions are filled one at a time, each choice scored by the sorted
multiset of codeword prefixes it produces, with two prunings:

  * a G-invariant per-position signature restricts which source positions
    may fill the next slot (the signature order is part of the objective,
    so canonical forms stay well defined);
  * automorphisms discovered at leaf ties map already-explored branches
    onto untried ones, which are then skipped.

The skipped branches are exact images of explored ones, so the minimum is
unaffected and the discovered automorphisms generate the full stabilizer.
Their exact order is delegated to a Schreier-Sims computation on the 3n
cells (position, nonzero symbol).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from kleincode.kcore import KCode, KWord, row_inner, row_weight, span_rows

# the six permutations of (a, b, c) as lookup tables over (0, a, b, c)
PERMS3: tuple[tuple[int, int, int, int], ...] = (
    (0, 1, 2, 3),
    (0, 1, 3, 2),
    (0, 2, 1, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
    (0, 3, 2, 1),
)
_PERM_INDEX = {p: i for i, p in enumerate(PERMS3)}
IDENT3 = PERMS3[0]


def _perm_inverse_table(t):
    inv = [0, 0, 0, 0]
    for s in (1, 2, 3):
        inv[t[s]] = s
    return tuple(inv)


_PERM_INVS = tuple(_perm_inverse_table(p) for p in PERMS3)


def _perm_compose(t1, t2):
    """Table of s -> t1[t2[s]] (apply t2 first)."""
    return (0, t1[t2[1]], t1[t2[2]], t1[t2[3]])


def _perm_inverse(t):
    inv = [0, 0, 0, 0]
    for s in (1, 2, 3):
        inv[t[s]] = s
    return tuple(inv)


@dataclass(frozen=True)
class GroupElement:
    """(sigma; tau_1..tau_n): symbol perms applied per position, then the
    content of position i moves to position sigma[i]."""

    sigma: tuple[int, ...]
    taus: tuple[tuple[int, int, int, int], ...]

    @property
    def n(self) -> int:
        return len(self.sigma)

    @classmethod
    def identity(cls, n: int) -> "GroupElement":
        return cls(tuple(range(n)), (IDENT3,) * n)

    def compose(self, other: "GroupElement") -> "GroupElement":
        """self after other: act(self.compose(other), x) = act(self, act(other, x))."""
        sg, so = self.sigma, other.sigma
        sigma = tuple(sg[so[i]] for i in range(len(so)))
        taus = tuple(_perm_compose(self.taus[so[i]], other.taus[i])
                     for i in range(len(so)))
        return GroupElement(sigma, taus)

    def inverse(self) -> "GroupElement":
        n = self.n
        inv_sigma = [0] * n
        for i, j in enumerate(self.sigma):
            inv_sigma[j] = i
        taus = tuple(_perm_inverse(self.taus[inv_sigma[j]]) for j in range(n))
        return GroupElement(tuple(inv_sigma), taus)

    def act_row(self, row: int) -> int:
        out = 0
        for i in range(self.n):
            s = (row >> (2 * i)) & 3
            out |= self.taus[i][s] << (2 * self.sigma[i])
        return out

    def act_word(self, w: KWord) -> KWord:
        return KWord.from_row(self.n, self.act_row(w.to_row()))

    def act_code(self, c: KCode) -> KCode:
        return span_rows([self.act_row(r) for r in c.rows], c.n)

    def cell_perm(self) -> list[int]:
        """Image as a permutation of the 3n cells (position, nonzero symbol)."""
        out = [0] * (3 * self.n)
        for i in range(self.n):
            for s in (1, 2, 3):
                out[3 * i + (s - 1)] = 3 * self.sigma[i] + (self.taus[i][s] - 1)
        return out

    def __str__(self) -> str:
        sig = ",".join(str(x) for x in self.sigma)
        taus = ",".join("".join("0abc"[t[s]] for s in (1, 2, 3)) for t in self.taus)
        return f"sigma=[{sig}]; tau=[{taus}]"

    @classmethod
    def parse(cls, text: str) -> "GroupElement":
        sig_part, tau_part = text.split(";")
        sigma = tuple(int(x) for x in sig_part.split("=")[1].strip().strip("[]").split(","))
        entries = tau_part.split("=")[1].strip().strip("[]").split(",")
        taus = []
        for e in entries:
            imgs = tuple("0abc".index(ch) for ch in e.strip())
            taus.append((0,) + imgs)
        return cls(sigma, tuple(taus))


def act(g: GroupElement, x):
    if isinstance(x, KWord):
        return g.act_word(x)
    if isinstance(x, KCode):
        return g.act_code(x)
    raise TypeError("act expects a KWord or KCode")


def random_element(n: int, rng: random.Random) -> GroupElement:
    sigma = list(range(n))
    rng.shuffle(sigma)
    taus = tuple(PERMS3[rng.randrange(6)] for _ in range(n))
    return GroupElement(tuple(sigma), taus)


def all_group_elements(n: int) -> Iterator[GroupElement]:
    """Every element of S3^n : S_n; only sane for n <= 4."""
    from itertools import permutations, product
    for sigma in permutations(range(n)):
        for taus in product(PERMS3, repeat=n):
            yield GroupElement(sigma, taus)


class CanonicalBudgetError(RuntimeError):
    pass


@dataclass
class CanonicalResult:
    image: KCode
    element: GroupElement       # act(element, code) == image
    aut_gens: list[GroupElement]   # automorphisms of the input code
    nodes: int

    def aut_gens_of_image(self) -> list[GroupElement]:
        g = self.element
        ginv = g.inverse()
        return [g.compose(h).compose(ginv) for h in self.aut_gens]


class _Canonicalizer:
    def __init__(self, code: KCode, max_nodes: int = 20_000_000):
        self.code = code
        self.n = code.n
        self.words = sorted(code.words())
        self.nw = len(self.words)
        self.max_nodes = max_nodes
        self.nodes = 0
        self.signatures = self._position_signatures()
        # DFS state
        self.path: list[tuple[int, int]] = []       # (source position, perm index)
        self.used = [False] * self.n
        self.best_keys: list[tuple] = []
        self.best_complete = False
        self.best_path: list[tuple[int, int]] | None = None
        self.auts: list[GroupElement] = []
        # per recorded automorphism: (inv_sigma, taus, action table on the
        # 6n candidate points (position, perm index))
        self._aut_tables: list[tuple[list[int], tuple, list[int]]] = []

    def _position_signatures(self) -> list[tuple]:
        weights = [row_weight(r) for r in self.words]
        sigs = []
        for i in range(self.n):
            per_sym: list[list[int]] = [[], [], [], []]
            for w, wt in zip(self.words, weights):
                per_sym[(w >> (2 * i)) & 3].append(wt)
            tables = [tuple(sorted(x)) for x in per_sym]
            sig = min(
                (tables[0], tables[perm[1]], tables[perm[2]], tables[perm[3]])
                for perm in (_perm_inverse(p) for p in PERMS3)
            )
            sigs.append(sig)
        return sigs

    def run(self) -> CanonicalResult:
        order = list(range(self.nw))
        groups = [(0, self.nw)]
        self._dfs(0, order, groups)
        g = self._element_from_path(self.best_path)
        image = g.act_code(self.code)
        return CanonicalResult(image, g, self.auts, self.nodes)

    def _element_from_path(self, path) -> GroupElement:
        sigma = [0] * self.n
        taus: list = [IDENT3] * self.n
        for slot, (i, pidx) in enumerate(path):
            sigma[i] = slot
            taus[i] = PERMS3[pidx]
        return GroupElement(tuple(sigma), tuple(taus))

    def _group_counts(self, i: int, order, groups) -> list[list[int]]:
        """Per group, how many words carry each raw symbol at position i."""
        words = self.words
        shift = 2 * i
        out = []
        for start, end in groups:
            counts = [0, 0, 0, 0]
            for t in range(start, end):
                counts[(words[order[t]] >> shift) & 3] += 1
            out.append(counts)
        return out

    def _min_candidates(self, cand_positions, order, groups):
        """Minimal column key over (position, perm) candidates and its ties.

        The key lists, per refinement group, the sorted mapped column
        content encoded as negated symbol counts (more small symbols =
        smaller key), so tuple comparison matches sorted-column order.
        Candidates are filtered group by group; most die on the first one.
        """
        counts_by_pos = {i: self._group_counts(i, order, groups)
                         for i in cand_positions}
        survivors = [(i, p) for i in cand_positions for p in range(6)]
        key_parts: list[int] = []
        for gi in range(len(groups)):
            best = None
            keep = []
            for cand in survivors:
                c = counts_by_pos[cand[0]][gi]
                inv = _PERM_INVS[cand[1]]
                comp = (-c[inv[0]], -c[inv[1]], -c[inv[2]], -c[inv[3]])
                if best is None or comp < best:
                    best = comp
                    keep = [cand]
                elif comp == best:
                    keep.append(cand)
            survivors = keep
            key_parts.extend(best)
        return tuple(key_parts), survivors

    def _refine(self, i: int, perm, order, groups):
        words = self.words
        shift = 2 * i
        new_order: list[int] = []
        new_groups: list[tuple[int, int]] = []
        for start, end in groups:
            if end - start == 1:
                new_order.append(order[start])
                new_groups.append((len(new_order) - 1, len(new_order)))
                continue
            buckets: list[list[int]] = [[], [], [], []]
            for t in range(start, end):
                idx = order[t]
                buckets[perm[(words[idx] >> shift) & 3]].append(idx)
            for b in buckets:
                if b:
                    s = len(new_order)
                    new_order.extend(b)
                    new_groups.append((s, len(new_order)))
        return new_order, new_groups

    def _path_fixing_tables(self):
        fixers = []
        path = self.path
        for inv_sigma, taus, table in self._aut_tables:
            ok = True
            for (i, _pidx) in path:
                if inv_sigma[i] != i or taus[i] != IDENT3:
                    ok = False
                    break
            if ok:
                fixers.append(table)
        return fixers

    @staticmethod
    def _orbit_closure(explored: set[int], tables) -> set[int]:
        orbit = set(explored)
        frontier = list(explored)
        while frontier:
            p = frontier.pop()
            for table in tables:
                p2 = table[p]
                if p2 not in orbit:
                    orbit.add(p2)
                    frontier.append(p2)
        return orbit

    def _dfs(self, level: int, order, groups):
        if level == self.n:
            if not self.best_complete:
                self.best_complete = True
                self.best_path = list(self.path)
            else:
                # keys matched the best trail at every level: same image
                g_new = self._element_from_path(self.path)
                g_best = self._element_from_path(self.best_path)
                h = g_best.inverse().compose(g_new)
                if h.sigma != tuple(range(self.n)) or any(t != IDENT3 for t in h.taus):
                    self._record_aut(h)
            return

        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise CanonicalBudgetError(f"canonical search exceeded {self.max_nodes} nodes")

        # candidates: unused positions with the minimal signature
        min_sig = None
        cand_positions = []
        for i in range(self.n):
            if self.used[i]:
                continue
            s = self.signatures[i]
            if min_sig is None or s < min_sig:
                min_sig = s
                cand_positions = [i]
            elif s == min_sig:
                cand_positions.append(i)

        min_key, cands = self._min_candidates(cand_positions, order, groups)

        if self.best_complete:
            ref = self.best_keys[level]
            if min_key > ref:
                return
            if min_key < ref:
                # the current path beats the best; restart the trail here
                del self.best_keys[level:]
                self.best_keys.append(min_key)
                self.best_complete = False
        else:
            del self.best_keys[level:]
            self.best_keys.append(min_key)
        explored: set[int] = set()
        covered: set[int] = set()
        aut_version = -1
        for (i, pidx) in cands:
            if explored:
                if aut_version != len(self._aut_tables):
                    fixers = self._path_fixing_tables()
                    aut_version = len(self._aut_tables)
                    covered = self._orbit_closure(explored, fixers) if fixers else set(explored)
                if (i * 6 + pidx) in covered:
                    explored.add(i * 6 + pidx)
                    continue
            new_order, new_groups = self._refine(i, PERMS3[pidx], order, groups)
            self.path.append((i, pidx))
            self.used[i] = True
            self._dfs(level + 1, new_order, new_groups)
            self.used[i] = False
            self.path.pop()
            explored.add(i * 6 + pidx)
            aut_version = -1

    def _record_aut(self, h: GroupElement):
        self.auts.append(h)
        inv = h.inverse()
        n = self.n
        for g in (h, inv):
            inv_sigma = [0] * n
            for a, b in enumerate(g.sigma):
                inv_sigma[b] = a
            # action on candidate points: (i, tau) -> (s(i), tau o tau_g[s(i)])
            table = [0] * (6 * n)
            for i in range(n):
                i2 = inv_sigma[i]
                tg = g.taus[i2]
                for pidx in range(6):
                    perm2 = _perm_compose(PERMS3[pidx], tg)
                    table[i * 6 + pidx] = i2 * 6 + _PERM_INDEX[perm2]
            self._aut_tables.append((inv_sigma, g.taus, table))


def canonical(code: KCode, max_nodes: int = 20_000_000) -> CanonicalResult:
    """Distinguished representative of the equivalence class of `code`."""
    if code.dim2 == 0:
        return CanonicalResult(code, GroupElement.identity(code.n), [], 0)
    return _Canonicalizer(code, max_nodes).run()


@dataclass
class AutResult:
    order: int
    generators: list[GroupElement]


def aut_from_canonical(res: CanonicalResult) -> AutResult:
    return AutResult(group_order(res.aut_gens, res.image.n), res.aut_gens)


def aut(code: KCode) -> AutResult:
    res = canonical(code)
    return AutResult(group_order(res.aut_gens, code.n), res.aut_gens)


def group_order(gens: Sequence[GroupElement], n: int) -> int:
    if not gens:
        return 1
    from sympy.combinatorics import Permutation, PermutationGroup
    perms = [Permutation(g.cell_perm()) for g in gens]
    return int(PermutationGroup(perms).order())


def equivalent(c: KCode, d: KCode) -> GroupElement | None:
    """A witness g with act(g, c) = d, or None when the codes differ."""
    if c.n != d.n or c.dim2 != d.dim2:
        return None
    if c.weight_distribution() != d.weight_distribution():
        return None
    rc = canonical(c)
    rd = canonical(d)
    if rc.image.rows != rd.image.rows:
        return None
    return rd.element.inverse().compose(rc.element)


# ---------------------------------------------------------------------------
# orbits and covering radius
# ---------------------------------------------------------------------------

@dataclass
class OrbitTable:
    entries: list[tuple[KWord, int]]    # (representative, orbit size)

    def sizes(self) -> list[int]:
        return [s for _, s in self.entries]


def orbits(code: KCode, weight: int | None = None,
           aut_gens: Sequence[GroupElement] | None = None) -> OrbitTable:
    """Orbit decomposition of K^n (or one weight slice) under Aut(code)."""
    n = code.n
    if 4 ** n > 1 << 24:
        raise ValueError("ambient space too large to enumerate")
    if aut_gens is None:
        aut_gens = aut(code).generators
    if weight is None:
        pool = [KWord.from_row(n, _counter_row(v, n)) for v in range(4 ** n)]
    else:
        pool = [w for w in (KWord.from_row(n, _counter_row(v, n)) for v in range(4 ** n))
                if w.weight() == weight]
    seen: set[int] = set()
    entries = []
    for w in pool:
        r0 = w.to_row()
        if r0 in seen:
            continue
        orbit = {r0}
        frontier = [r0]
        while frontier:
            r = frontier.pop()
            for g in aut_gens:
                r2 = g.act_row(r)
                if r2 not in orbit:
                    orbit.add(r2)
                    frontier.append(r2)
        seen |= orbit
        entries.append((w, len(orbit)))
    return OrbitTable(entries)


def _counter_row(v: int, n: int) -> int:
    # v in base 4, digit i = symbol at position i
    row = 0
    for i in range(n):
        row |= ((v >> (2 * i)) & 3) << (2 * i)
    return row


def covering_radius(code: KCode) -> tuple[int, list[KWord]]:
    """Max over cosets of K^n / code of the coset minimal weight, plus one
    minimal-weight representative per coset."""
    n = code.n
    cosets = 4 ** n >> code.dim2
    if 4 ** n > 1 << 26:
        raise ValueError("ambient space too large to enumerate")
    dual_rows = code.dual().rows
    best: dict[int, tuple[int, int]] = {}
    for v in range(4 ** n):
        r = _counter_row(v, n)
        syn = 0
        for b in dual_rows:
            syn = (syn << 1) | row_inner(r, b)
        w = row_weight(r)
        cur = best.get(syn)
        if cur is None or w < cur[0]:
            best[syn] = (w, r)
    assert len(best) == cosets
    radius = max(w for w, _ in best.values())
    reps = [KWord.from_row(n, r) for _, r in sorted(best.values())]
    return radius, reps
