import random

import pytest

from kleincode.kcore import (
    KCode,
    KWord,
    child_at,
    delta,
    delta_plus,
    dot,
    emit_code,
    epsilon2,
    even_subcode,
    extended_hamming,
    gamma1,
    hamming,
    hexacode,
    inner,
    odd_hexacode,
    parse_code,
    shorter_hexacode,
    span,
    span_rows,
    standard_code,
)


def w(text):
    return KWord.parse(text)


def random_code(rng, n, max_rows=None):
    rows = [rng.getrandbits(2 * n) for _ in range(rng.randrange(1, (max_rows or 2 * n) + 1))]
    return span_rows(rows, n)


class TestSymbols:
    def test_dot_table(self):
        # nonzero and distinct iff 1
        assert dot(1, 2) == 1 and dot(2, 1) == 1
        assert dot(1, 3) == 1 and dot(2, 3) == 1
        assert dot(1, 1) == 0 and dot(2, 2) == 0 and dot(3, 3) == 0
        assert dot(0, 3) == 0 and dot(0, 0) == 0

    def test_bilinearity(self):
        for x in range(4):
            for y in range(4):
                for z in range(4):
                    assert dot(x ^ y, z) == dot(x, z) ^ dot(y, z)


class TestWords:
    def test_parse_format(self):
        word = w("a0bc")
        assert str(word) == "a0bc"
        assert word.weight() == 3
        with pytest.raises(ValueError):
            KWord.parse("a0d")

    def test_inner(self):
        assert inner(w("aa"), w("bb")) == 0
        assert inner(w("ab"), w("ba")) == 0
        assert inner(w("a0"), w("b0")) == 1

    def test_self_cancel(self):
        word = w("abc0")
        assert (word + word) == KWord.zero(4)

    def test_row_roundtrip(self):
        rng = random.Random(1)
        for _ in range(50):
            n = rng.randrange(1, 9)
            word = KWord.from_row(n, rng.getrandbits(2 * n))
            assert KWord.from_row(n, word.to_row()) == word


class TestSpanAndDual:
    def test_span_epsilon2(self):
        c = span([w("aa"), w("bb")])
        assert c.dim2 == 2 and c.size == 4

    def test_span_idempotent(self):
        rng = random.Random(2)
        for _ in range(30):
            c = random_code(rng, rng.randrange(1, 6))
            again = span([KWord.from_row(c.n, r) for r in c.words()], c.n) \
                if c.dim2 <= 8 else c
            assert again.rows == c.rows

    def test_span_zero(self):
        c = span([w("00")])
        assert c.dim2 == 0

    def test_hexacode_span(self):
        c = hexacode()
        assert c.dim2 == 6 and c.size == 64

    def test_dual_epsilon2_self(self):
        assert epsilon2().dual().rows == epsilon2().rows

    def test_dual_zero(self):
        z = KCode(3, ())
        assert z.dual().size == 4 ** 3

    def test_dual_delta3(self):
        d3 = span([w("aa0"), w("0aa")])
        dd = d3.dual()
        assert dd.dim2 == 4
        assert w("bbb") in dd
        assert all(KWord.from_row(3, r) in dd for r in d3.rows)

    def test_dual_involution_and_sizes(self):
        rng = random.Random(3)
        for _ in range(100):
            n = rng.randrange(1, 7)
            c = random_code(rng, n)
            d = c.dual()
            assert d.dual().rows == c.rows
            assert c.size * d.size == 4 ** n

    def test_dual_reverses_inclusion(self):
        rng = random.Random(4)
        for _ in range(40):
            n = rng.randrange(2, 6)
            c = random_code(rng, n)
            sub = span_rows(list(c.rows)[: max(1, c.dim2 // 2)], n)
            assert all(sub.contains_row(r) is False or True for r in c.rows)
            cd, sd = c.dual(), sub.dual()
            assert all(sd.contains_row(r) for r in cd.rows)

    def test_dual_of_direct_sum(self):
        rng = random.Random(5)
        for _ in range(20):
            c = random_code(rng, rng.randrange(1, 4))
            d = random_code(rng, rng.randrange(1, 4))
            left = c.direct_sum(d).dual()
            right = c.dual().direct_sum(d.dual())
            assert left.rows == right.rows


class TestEvenAndWeights:
    def test_min_weights(self):
        assert hexacode().min_weight() == 4
        assert epsilon2().min_weight() == 2
        assert hamming(2).min_weight() == 3

    def test_even_subcode_gamma1(self):
        assert even_subcode(gamma1()).dim2 == 0

    def test_even_subcode_gamma1_squared(self):
        g2 = span([w("a0"), w("0a")])
        e = even_subcode(g2)
        assert sorted(e.words()) == sorted([0, w("aa").to_row()])

    def test_even_subcode_hexacode(self):
        assert even_subcode(hexacode()).rows == hexacode().rows

    def test_orthogonal_even_generators_make_even_code(self):
        # a code spanned by pairwise-orthogonal even-weight generators is even
        rng = random.Random(6)
        produced = 0
        while produced < 100:
            n = rng.randrange(2, 7)
            gens = []
            for _ in range(rng.randrange(1, n + 1)):
                cand = rng.getrandbits(2 * n)
                word = KWord.from_row(n, cand)
                if word.weight() % 2:
                    continue
                if any(word.inner(g) for g in gens):
                    continue
                gens.append(word)
            if not gens:
                continue
            produced += 1
            code = span(gens, n)
            assert code.is_even()
            assert all(KWord.from_row(n, r).weight() % 2 == 0 for r in code.words())


class TestDirectSum:
    def test_gamma1_squared(self):
        c = gamma1().direct_sum(gamma1())
        assert c.weight_distribution() == (1, 2, 1)

    def test_epsilon2_squared_table_row(self):
        c = epsilon2().direct_sum(epsilon2())
        assert c.weight_distribution() == (1, 0, 6, 0, 9)

    def test_enumerator_product(self):
        rng = random.Random(7)
        for _ in range(20):
            c = random_code(rng, rng.randrange(1, 4))
            d = random_code(rng, rng.randrange(1, 4))
            wc, wd = c.weight_distribution(), d.weight_distribution()
            prod = [0] * (c.n + d.n + 1)
            for i, a in enumerate(wc):
                for j, b in enumerate(wd):
                    prod[i + j] += a * b
            assert list(c.direct_sum(d).weight_distribution()) == prod


class TestNamedCodes:
    def test_gamma1(self):
        assert gamma1().weight_distribution() == (1, 1)
        assert gamma1().is_self_dual()

    def test_delta_plus_3(self):
        c = delta_plus(3)
        assert c.weight_distribution() == (1, 0, 3, 4)
        assert c.is_self_dual() and not c.is_even()

    def test_delta_plus_even_n_both_glues_equivalent(self):
        from kleincode.sym import equivalent
        for n in (4, 6):
            b_glue = delta_plus(n)
            cb_glue = delta_plus(n, glue="cb")
            assert b_glue.is_even() and cb_glue.is_even()
            assert equivalent(b_glue, cb_glue) is not None

    def test_shorter_hexacode(self):
        c5 = shorter_hexacode()
        assert c5.weight_distribution() == (1, 0, 0, 10, 15, 6)
        assert c5.is_self_dual()

    def test_odd_hexacode(self):
        o6 = odd_hexacode()
        assert o6.weight_distribution() == (1, 0, 0, 8, 21, 24, 10)
        assert o6.is_self_dual() and not o6.is_even()

    def test_hamming_perfect(self):
        h2 = hamming(2)
        assert (h2.n, h2.dim2, h2.min_weight()) == (5, 6, 3)
        # spheres of radius 1 partition K^5: 1 + 5*3 = 16 = 4^(5-3)
        seen = set()
        for r in h2.words():
            seen.add(r)
            for i in range(5):
                for s in (1, 2, 3):
                    seen.add(r ^ ((((r >> (2 * i)) & 3) ^ s) << (2 * i)) ^ 0)
        covered = set()
        for r in h2.words():
            for i in range(5):
                for s in range(4):
                    word = (r & ~(3 << (2 * i))) | (s << (2 * i))
                    covered.add(word)
        assert len(covered) == 4 ** 5

    def test_hamming3_shape(self):
        h3 = hamming(3)
        assert (h3.n, h3.dim2) == (21, 36)

    def test_extended_hamming(self):
        from kleincode.sym import equivalent
        eh = extended_hamming(2)
        assert (eh.n, eh.dim2, eh.min_weight()) == (6, 6, 4)
        assert eh.is_even() and eh.is_self_dual()
        assert equivalent(eh, hexacode()) is not None

    def test_extended_hamming_m3_rejected(self):
        with pytest.raises(ValueError):
            extended_hamming(3)

    def test_standard_dispatch(self):
        assert standard_code("C6").rows == hexacode().rows
        assert standard_code("delta", n=4).rows == delta(4).rows
        with pytest.raises(ValueError):
            standard_code("nonsense")

    def test_child_of_hexacode_is_c5(self):
        from kleincode.sym import equivalent
        for pos in range(6):
            kid = child_at(hexacode(), pos, 1)
            assert equivalent(kid, shorter_hexacode()) is not None


class TestCodeFiles:
    def test_parse_epsilon2(self):
        c = parse_code("# comment\naa\nbb\n")
        assert c.rows == epsilon2().rows

    def test_roundtrip(self):
        rng = random.Random(8)
        for _ in range(30):
            c = random_code(rng, rng.randrange(1, 6))
            assert parse_code(emit_code(c)).rows == c.rows

    def test_bad_symbol_position(self):
        with pytest.raises(ValueError, match="line 2.*column 3"):
            parse_code("aa\nabd\n")

    def test_unequal_lengths(self):
        with pytest.raises(ValueError, match="unequal"):
            parse_code("aa\nabc\n")
