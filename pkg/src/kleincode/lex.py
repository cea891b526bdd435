"""Greedy lexicographic code constructions.

Words of K^n are scanned in lexicographic order with 0 < a < b < c and
the leftmost position most significant.  The plain lexicode accepts every
word at distance >= d from all earlier picks; the self-orthogonal variant
additionally restricts picks to the dual of the span so far.  Periodicity
of the self-orthogonal family is detected structurally: the code at twice
the period length must split into two position-disjoint blocks, each
equivalent to the period element.
"""

from __future__ import annotations

from dataclasses import dataclass

from kleincode.kcore import (
    KCode,
    KWord,
    row_inner,
    row_weight,
    span_rows,
)


def _key_to_row(key: int, n: int) -> int:
    """Base-4 lex key (leftmost symbol most significant) to packed row."""
    row = 0
    for i in range(n):
        row |= ((key >> (2 * (n - 1 - i))) & 3) << (2 * i)
    return row


def lex_words(n: int):
    """All packed rows of K^n in lexicographic order."""
    for v in range(4 ** n):
        yield _key_to_row(v, n)


@dataclass
class LexTrace:
    n: int
    d: int
    accepted: list[KWord]
    code: KCode
    is_linear: bool
    self_orthogonal: bool


def _greedy(n: int, d: int, orthogonal: bool) -> LexTrace:
    """Greedy sweep in lex order.

    Words are handled as reversed-position rows ("keys"), where integer
    order is lexicographic order; all bitwise structure is position
    blind, so weights and inner products work unchanged.  Accepting a
    word filters the remaining pool once, which is exactly the
    distance-to-every-chosen-word rule.
    """
    import numpy as np

    from kleincode.extremal import _popcount64, _support_weight, _sym_swap

    if d < 1:
        raise ValueError("need d >= 1")
    if 4 ** n > 1 << 26:
        raise ValueError("ambient space too large")
    pool = np.arange(4 ** n, dtype=np.uint64)
    chosen_keys: list[int] = []
    while len(pool):
        x = int(pool[0])
        chosen_keys.append(x)
        xs = np.uint64(x)
        keep = _support_weight(pool ^ xs) >= d
        if orthogonal:
            swap = _sym_swap(np.array([xs], dtype=np.uint64))[0]
            keep &= (_popcount64(pool & swap) & 1) == 0
        pool = pool[keep]
    chosen = [_key_to_row(k, n) for k in chosen_keys]
    code = span_rows(chosen, n)
    linear = code.size == len(chosen)
    so = code.is_self_orthogonal()
    return LexTrace(n, d, [KWord.from_row(n, r) for r in chosen], code, linear, so)


def lexicode(n: int, d: int) -> LexTrace:
    """Greedy lexicographic code of length n and distance d."""
    return _greedy(n, d, orthogonal=False)


def so_lexicode_at(n: int, d: int) -> LexTrace:
    """Self-orthogonal lexicographic code at one fixed length."""
    return _greedy(n, d, orthogonal=True)


@dataclass
class PeriodReport:
    d: int
    period: int
    element: KCode
    verified_length: int


def _restrict(code: KCode, positions: tuple[int, ...]) -> KCode:
    """Projection onto a subset of positions."""
    pos_index = {p: i for i, p in enumerate(positions)}
    rows = []
    for r in code.rows:
        out = 0
        for p, i in pos_index.items():
            out |= ((r >> (2 * p)) & 3) << (2 * i)
        rows.append(out)
    return span_rows(rows, len(positions))


def so_lexicode(d: int, n_max: int) -> tuple[list[LexTrace], PeriodReport | None]:
    """Greedy self-orthogonal growth across lengths 1..n_max with
    direct-sum periodicity detection.

    The period p is the first length whose greedy code is self-dual with
    minimal weight >= d.  Verification at length 2p: the code must equal
    the direct sum of its two position halves, each equivalent to the
    period element.
    """
    from kleincode.sym import equivalent

    traces = [so_lexicode_at(n, d) for n in range(1, n_max + 1)]
    period = None
    for t in traces:
        if t.code.dim2 == t.code.n and t.code.min_weight() >= d:
            period = t.n
            break
    if period is None or 2 * period > n_max:
        return traces, None
    element = traces[period - 1].code
    double = traces[2 * period - 1].code
    p = period
    first = _restrict(double, tuple(range(p)))
    second = _restrict(double, tuple(range(p, 2 * p)))
    if first.direct_sum(second).rows != double.rows:
        return traces, None
    for half in (first, second):
        if equivalent(half, element) is None:
            return traces, None
    return traces, PeriodReport(d, period, element, 2 * period)
