import random

import pytest

from kleincode.kcore import (
    KCode,
    KWord,
    delta_plus,
    epsilon2,
    gamma1,
    hexacode,
    span,
    span_rows,
)
from kleincode.sym import (
    GroupElement,
    all_group_elements,
    aut,
    canonical,
    covering_radius,
    equivalent,
    group_order,
    orbits,
    random_element,
)

from paper_tables import HEXACODE_ORBITS


def w(text):
    return KWord.parse(text)


def random_code(rng, n):
    return span_rows([rng.getrandbits(2 * n) for _ in range(rng.randrange(1, 2 * n + 1))], n)


class TestGroupElement:
    def test_identity(self):
        g = GroupElement.identity(3)
        word = w("abc")
        assert g.act_word(word) == word

    def test_compose_inverse(self):
        rng = random.Random(20)
        for _ in range(60):
            n = rng.randrange(1, 7)
            g, h = random_element(n, rng), random_element(n, rng)
            word = KWord.from_row(n, rng.getrandbits(2 * n))
            assert g.compose(h).act_word(word) == g.act_word(h.act_word(word))
            assert g.inverse().act_word(g.act_word(word)) == word

    def test_preserves_weight_and_inner(self):
        rng = random.Random(21)
        for _ in range(60):
            n = rng.randrange(1, 7)
            g = random_element(n, rng)
            x = KWord.from_row(n, rng.getrandbits(2 * n))
            y = KWord.from_row(n, rng.getrandbits(2 * n))
            assert g.act_word(x).weight() == x.weight()
            assert g.act_word(x).inner(g.act_word(y)) == x.inner(y)

    def test_symbol_swap_example(self):
        # swapping b and c at position 1 fixes {00,aa,bc,cb} into epsilon2
        code = span([w("aa"), w("bc")])
        g = GroupElement((0, 1), ((0, 1, 2, 3), (0, 1, 3, 2)))
        assert g.act_code(code).rows == epsilon2().rows

    def test_parse_roundtrip(self):
        rng = random.Random(22)
        for _ in range(20):
            g = random_element(rng.randrange(1, 6), rng)
            assert GroupElement.parse(str(g)) == g

    def test_act_preserves_enumerator(self):
        rng = random.Random(23)
        for _ in range(100):
            n = rng.randrange(1, 6)
            c = random_code(rng, n)
            g = random_element(n, rng)
            assert g.act_code(c).weight_distribution() == c.weight_distribution()


class TestCanonical:
    def test_idempotent(self):
        for code in (gamma1(), epsilon2(), hexacode(), delta_plus(3)):
            image = canonical(code).image
            assert canonical(image).image.rows == image.rows

    def test_orbit_constant(self):
        rng = random.Random(24)
        for code in (epsilon2(), delta_plus(3), hexacode(), delta_plus(6)):
            ref = canonical(code).image.rows
            for _ in range(20 if code.n <= 4 else 8):
                g = random_element(code.n, rng)
                assert canonical(g.act_code(code)).image.rows == ref

    def test_element_witnesses_image(self):
        rng = random.Random(25)
        for _ in range(40):
            c = random_code(rng, rng.randrange(1, 6))
            res = canonical(c)
            assert res.element.act_code(c).rows == res.image.rows

    def test_separates_inequivalent(self):
        g2 = span([w("a0"), w("0a")])
        assert canonical(epsilon2()).image.rows != canonical(g2).image.rows

    def test_aut_gens_fix_code(self):
        rng = random.Random(26)
        for _ in range(40):
            c = random_code(rng, rng.randrange(1, 6))
            res = canonical(c)
            for g in res.aut_gens:
                assert g.act_code(c).rows == c.rows
            for g in res.aut_gens_of_image():
                assert g.act_code(res.image).rows == res.image.rows


class TestAut:
    def test_paper_orders(self):
        assert aut(gamma1()).order == 2
        assert aut(epsilon2()).order == 12
        assert aut(hexacode()).order == 2160

    def test_brute_force_oracle(self):
        rng = random.Random(27)
        checked = 0
        while checked < 12:
            n = rng.randrange(1, 4)
            c = random_code(rng, n)
            if c.dim2 == 0:
                continue
            checked += 1
            stab = sum(1 for g in all_group_elements(n)
                       if g.act_code(c).rows == c.rows)
            assert aut(c).order == stab

    def test_order_divides_group(self):
        import math
        rng = random.Random(28)
        for _ in range(20):
            n = rng.randrange(1, 6)
            c = random_code(rng, n)
            if c.dim2 == 0:
                continue
            assert (6 ** n * math.factorial(n)) % aut(c).order == 0


class TestEquivalent:
    def test_witness(self):
        rng = random.Random(29)
        for _ in range(30):
            n = rng.randrange(1, 6)
            c = random_code(rng, n)
            g = random_element(n, rng)
            d = g.act_code(c)
            witness = equivalent(c, d)
            assert witness is not None
            assert witness.act_code(c).rows == d.rows

    def test_inequivalent(self):
        assert equivalent(epsilon2(), span([w("a0"), w("0a")])) is None

    def test_brute_force_oracle(self):
        rng = random.Random(30)
        for _ in range(8):
            n = rng.randrange(1, 4)
            c, d = random_code(rng, n), random_code(rng, n)
            brute = any(g.act_code(c).rows == d.rows for g in all_group_elements(n))
            assert (equivalent(c, d) is not None) == brute


class TestOrbitsAndCovering:
    def test_hexacode_weight2(self):
        table = orbits(hexacode(), weight=2)
        assert table.sizes() == [135]

    def test_hexacode_full_orbits(self):
        gens = aut(hexacode()).generators
        by_weight = {}
        for word, size in orbits(hexacode(), aut_gens=gens).entries:
            by_weight.setdefault(word.weight(), []).append(size)
        assert {k: sorted(v) for k, v in by_weight.items()} == HEXACODE_ORBITS

    def test_covering_radius_hexacode(self):
        radius, reps = covering_radius(hexacode())
        assert radius == 2
        weights = sorted(rep.weight() for rep in reps)
        assert weights.count(0) == 1 and weights.count(1) == 18 and weights.count(2) == 45

    def test_covering_radius_full_space(self):
        full = KCode(2, ()).dual()
        assert covering_radius(full)[0] == 0

    def test_deep_hole_trios(self):
        c6 = hexacode()
        code_words = list(c6.words())
        from kleincode.kcore import row_weight
        weight2 = [r for r in range(4 ** 6)
                   if row_weight(_row_of(r)) == 2]
        # use actual packed rows for K^6
        weight2 = [v for v in (_row_of(r) for r in range(4 ** 6)) if row_weight(v) == 2]
        # group into cosets of the hexacode
        cosets = {}
        for v in weight2:
            key = min(v ^ cw for cw in code_words)
            cosets.setdefault(key, []).append(v)
        assert len(cosets) == 45
        assert all(len(v) == 3 for v in cosets.values())
        # every weight-2 deep hole has exactly 3 codewords at distance 2
        for v in weight2:
            near = sum(1 for cw in code_words if row_weight(v ^ cw) == 2)
            assert near == 3


def _row_of(counter: int) -> int:
    return counter
