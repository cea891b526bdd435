"""Weight slices, covering, generalized designs and the Johnson relations.

A weight-k slice is checked against the design property by sweeping all
C(n,t)*3^t words of weight t and counting how many slice members cover
each; brute force is exact and cheap at these sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from kleincode.kcore import KCode, KWord, row_support, row_weight


def covers(x: KWord, y: KWord) -> bool:
    """True when y agrees with x on the whole support of x."""
    if x.n != y.n:
        raise ValueError("length mismatch")
    mismatch = (x.p ^ y.p) | (x.q ^ y.q)
    return mismatch & (x.p | x.q) == 0


def johnson_relation(x: KWord, y: KWord) -> tuple[int, int]:
    """(r, s) with r = #{i: x_i = y_i != 0} and s = #{i: x_i, y_i != 0}."""
    if x.weight() != y.weight():
        raise ValueError("Johnson relations live on a fixed-weight slice")
    both = (x.p | x.q) & (y.p | y.q)
    equal = ~((x.p ^ y.p) | (x.q ^ y.q))
    return ((both & equal).bit_count(), both.bit_count())


@dataclass(frozen=True)
class DesignSlice:
    n: int
    k: int
    members: tuple[KWord, ...]

    def __post_init__(self):
        seen = set()
        for w in self.members:
            if w.n != self.n or w.weight() != self.k:
                raise ValueError(f"{w} does not have weight {self.k}")
            key = (w.p, w.q)
            if key in seen:
                raise ValueError(f"duplicate slice member {w}")
            seen.add(key)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class DesignReport:
    n: int
    k: int
    t: int
    is_design: bool
    mu: int | None
    counterexample: KWord | None

    def __str__(self) -> str:
        if self.is_design:
            return f"generalized {self.t}-({self.n},{self.k},{self.mu}) design"
        return (f"not a {self.t}-design: {self.counterexample} is covered "
                "a different number of times")


def slice_of(code: KCode, weight: int) -> DesignSlice:
    """All codewords of the given nonzero weight."""
    members = tuple(KWord.from_row(code.n, r) for r in code.words()
                    if row_weight(r) == weight)
    return DesignSlice(code.n, weight, members)


def weight_t_words(n: int, t: int):
    for positions in combinations(range(n), t):
        for syms in product((1, 2, 3), repeat=t):
            p = q = 0
            for pos, s in zip(positions, syms):
                p |= (s & 1) << pos
                q |= (s >> 1) << pos
            yield KWord(n, p, q)


def check_design(y: DesignSlice, t: int) -> DesignReport:
    """Sweep X_t and count covers from the slice."""
    if t > y.k:
        raise ValueError("t cannot exceed the slice weight")
    mu = None
    for x in weight_t_words(y.n, t):
        cnt = sum(1 for m in y.members if covers(x, m))
        if mu is None:
            mu = cnt
        elif cnt != mu:
            return DesignReport(y.n, y.k, t, False, None, x)
    if mu is not None and mu > 0:
        # double count: |Y| C(k,t) = mu C(n,t) 3^t
        assert len(y) * comb(y.k, t) == mu * comb(y.n, t) * 3 ** t
    return DesignReport(y.n, y.k, t, True, mu, None)


def fisher_bound(n: int, k: int) -> int:
    """Least size of a generalized 2-(n,k,mu) design: 3n below the full
    weight, 2n+1 at k = n."""
    if not 2 <= k <= n:
        raise ValueError("need 2 <= k <= n")
    return 3 * n if k < n else 2 * n + 1
