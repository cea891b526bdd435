import random
from fractions import Fraction

import pytest

from kleincode.kcore import KCode, KWord, epsilon2, gamma1, hexacode, span, span_rows
from kleincode.wenum import (
    CompleteWE,
    NonIntegralError,
    WeightEnum,
    complete_we,
    gleason_even,
    gleason_odd,
    hamming_we,
    macwilliams,
    macwilliams_complete,
    shadow,
    shadow_we,
    swe,
)


def w(text):
    return KWord.parse(text)


def random_code(rng, n):
    return span_rows([rng.getrandbits(2 * n) for _ in range(rng.randrange(1, 2 * n + 1))], n)


def random_self_dual(rng, n):
    """Self-dual code by random extension."""
    code = KCode(n, ())
    while code.dim2 < n:
        dual = code.dual()
        pool = [r for r in dual.words() if not code.contains_row(r)]
        code = span_rows(list(code.rows) + [rng.choice(pool)], n)
    return code


class TestHamming:
    def test_paper_values(self):
        assert hamming_we(hexacode()).A == (1, 0, 0, 0, 45, 0, 18)
        assert hamming_we(epsilon2()).A == (1, 0, 3)
        assert hamming_we(gamma1()).A == (1, 1)

    def test_product(self):
        a = hamming_we(epsilon2())
        assert (a * a).A == (1, 0, 6, 0, 9)


class TestMacWilliams:
    def test_self_dual_fixed_points(self):
        assert macwilliams(WeightEnum(2, (1, 0, 3)), 4).A == (1, 0, 3)
        assert macwilliams(WeightEnum(1, (1, 1)), 2).A == (1, 1)

    def test_against_direct_dual(self):
        rng = random.Random(10)
        for _ in range(100):
            n = rng.randrange(1, 6)
            c = random_code(rng, n)
            lhs = macwilliams(hamming_we(c), c.size)
            assert lhs.A == c.dual().weight_distribution()

    def test_round_trip(self):
        rng = random.Random(11)
        for _ in range(50):
            c = random_code(rng, rng.randrange(1, 6))
            we = hamming_we(c)
            back = macwilliams(macwilliams(we, c.size), c.dual().size)
            assert back.A == we.A

    def test_non_integral_rejected(self):
        with pytest.raises(NonIntegralError):
            macwilliams(WeightEnum(2, (1, 1, 1)), 3)

    def test_transform_identity_eq1(self):
        # (1/|C|) sum_{x in C} g(x) = sum_{y in dual} f(y) for indicator f
        rng = random.Random(12)
        for _ in range(50):
            n = rng.randrange(1, 5)
            c = random_code(rng, n)
            dual_words = set(c.dual().words())
            target = rng.getrandbits(2 * n)
            # f = indicator of one word; g(x) = (-1)^((target, x))
            from kleincode.kcore import row_inner
            lhs = sum((-1) ** row_inner(target, x) for x in c.words())
            rhs = c.size if target in dual_words else 0
            assert lhs == rhs


class TestComplete:
    def test_epsilon2(self):
        cw = complete_we(epsilon2())
        assert dict(cw.counts) == {(2, 0, 0, 0): 1, (0, 2, 0, 0): 1,
                                   (0, 0, 2, 0): 1, (0, 0, 0, 2): 1}

    def test_gamma1(self):
        assert dict(complete_we(gamma1()).counts) == {(1, 0, 0, 0): 1, (0, 1, 0, 0): 1}

    def test_marginalizes_to_hamming(self):
        rng = random.Random(13)
        for _ in range(100):
            c = random_code(rng, rng.randrange(1, 6))
            assert complete_we(c).to_hamming().A == c.weight_distribution()

    def test_complete_macwilliams_self_dual(self):
        cw = complete_we(epsilon2())
        assert macwilliams_complete(cw, 4).counts == cw.counts

    def test_complete_macwilliams_zero_code(self):
        cw = complete_we(KCode(1, ()))
        dual = macwilliams_complete(cw, 1)
        assert dict(dual.counts) == {(1, 0, 0, 0): 1, (0, 1, 0, 0): 1,
                                     (0, 0, 1, 0): 1, (0, 0, 0, 1): 1}

    def test_complete_macwilliams_against_dual(self):
        rng = random.Random(14)
        for _ in range(100):
            n = rng.randrange(1, 6)
            c = random_code(rng, n)
            assert macwilliams_complete(complete_we(c), c.size).counts \
                == complete_we(c.dual()).counts


class TestSym:
    def test_gamma1(self):
        assert dict(swe(gamma1()).counts) == {(1, 0, 0): 1, (0, 1, 0): 1}

    def test_epsilon2(self):
        assert dict(swe(epsilon2()).counts) == {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 2}

    def test_marginalizes(self):
        rng = random.Random(15)
        for _ in range(100):
            c = random_code(rng, rng.randrange(1, 6))
            assert swe(c).to_hamming().A == c.weight_distribution()


class TestGleason:
    def test_gamma1(self):
        assert gleason_odd(hamming_we(gamma1())) == (1,)

    def test_epsilon2(self):
        # (u+v)^2 - 2 v(u-v) = u^2 + 3v^2
        assert gleason_odd(hamming_we(epsilon2())) == (1, -2)

    def test_hexacode_even(self):
        # (u^2+3v^2)^3 - 9 v^2(u^2-v^2)^2 = u^6 + 45 u^2 v^4 + 18 v^6
        assert gleason_even(hamming_we(hexacode())) == (1, -9)
        assert gleason_even(hamming_we(epsilon2())) == (1,)

    def test_table1_n4(self):
        assert gleason_even(WeightEnum(4, (1, 0, 6, 0, 9))) == (1,)

    def test_integral_on_self_dual(self):
        rng = random.Random(16)
        for _ in range(40):
            n = rng.randrange(1, 6)
            c = random_self_dual(rng, n)
            coeffs = gleason_odd(hamming_we(c))
            assert all(isinstance(x, int) for x in coeffs)

    def test_rejects_non_ring_members(self):
        # W of a non self-dual code usually fails; a known non-member:
        with pytest.raises(ValueError):
            gleason_odd(WeightEnum(2, (1, 1, 1)))


class TestShadow:
    def test_gamma1(self):
        sh = shadow(gamma1())
        assert sorted(str(KWord.from_row(1, r)) for r in sh.shadow_words()) == ["b", "c"]

    def test_gamma1_squared(self):
        g2 = span([w("a0"), w("0a")])
        assert shadow(g2).shadow_distribution() == (0, 0, 4)

    def test_hexacode_even_case(self):
        sh = shadow(hexacode())
        assert sh.is_even_case
        assert sh.shadow_distribution() == (1, 0, 0, 0, 45, 0, 18)

    def test_shadow_we_gamma1(self):
        out = shadow_we(WeightEnum(1, (1, 1)), 2)
        assert out.A == (Fraction(0), Fraction(2))

    def test_shadow_we_matches_enumeration(self):
        rng = random.Random(17)
        for _ in range(40):
            n = rng.randrange(1, 6)
            c = random_self_dual(rng, n)
            sh = shadow(c)
            predicted = shadow_we(hamming_we(c), c.size)
            assert predicted.is_integral() and predicted.is_nonnegative()
            assert tuple(int(a) for a in predicted.A) == sh.shadow_distribution()

    def test_cosets_partition(self):
        rng = random.Random(18)
        for _ in range(20):
            n = rng.randrange(1, 6)
            c = random_self_dual(rng, n)
            if c.is_even():
                continue
            sh = shadow(c)
            d0 = sh.even_subcode.dual()
            words = set(d0.words())
            code_words = set(c.words())
            shadow_words = set(sh.shadow_words())
            assert code_words | shadow_words == words
            assert not (code_words & shadow_words)
