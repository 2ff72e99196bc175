import json
import math
import random
from fractions import Fraction as F

import pytest

from seifert_delta import (
    InconsistentClass,
    LineBundleClass,
    NotCoprime,
    ParseError,
    SeifertData,
    degree_l,
    desing_degree,
    double_cover,
    euler_char,
    h1_order,
    make_class,
    normalize,
    parse_seifert,
    seifert_from_json,
)

HW = SeifertData(1, ((2, 1), (2, 1)))


class TestNormalize:
    def test_already_normalized(self):
        assert normalize(1, [(2, 1), (2, 1)]) == HW

    def test_shift_preserves_l(self):
        raw_l = F(0) - F(3, 2)
        S = normalize(0, [(2, 3)])
        assert S == SeifertData(-1, ((2, 1),))
        assert degree_l(S) == raw_l

    def test_trivial_arm_dropped(self):
        assert normalize(2, [(1, 0)]) == SeifertData(2, ())
        assert normalize(2, [(1, 3)]) == SeifertData(-1, ())

    def test_negative_coefficients(self):
        S = normalize(0, [(5, -2)])
        assert S == SeifertData(-1, ((5, 3),))
        assert degree_l(S) == F(2, 5)

    def test_not_coprime(self):
        with pytest.raises(NotCoprime):
            normalize(0, [(4, 2)])

    def test_random_l_preservation(self):
        rng = random.Random(99)
        for _ in range(200):
            n = rng.randint(0, 4)
            arms = []
            for _ in range(n):
                a = rng.randint(1, 12)
                b = rng.choice([x for x in range(-30, 31) if math.gcd(a, x) == 1])
                arms.append((a, b))
            b0 = rng.randint(-5, 5)
            raw_l = b0 - sum((F(bi, a) for a, bi in arms), F(0))
            assert degree_l(normalize(b0, arms)) == raw_l


class TestScalars:
    def test_degree_l(self):
        assert degree_l(HW) == 0
        assert degree_l(SeifertData(7, ())) == 7
        assert degree_l(SeifertData(2, ((3, 1),))) == F(5, 3)

    def test_euler_char(self):
        assert euler_char(HW) == 0
        assert euler_char(SeifertData(4, ())) == 1
        assert euler_char(SeifertData(0, ((3, 1),))) == F(1, 3)

    def test_symmetric_in_arms(self):
        S1 = SeifertData(2, ((3, 1), (5, 2)))
        S2 = SeifertData(2, ((5, 2), (3, 1)))
        assert S1 != S2  # equality is order-sensitive
        assert degree_l(S1) == degree_l(S2)
        assert euler_char(S1) == euler_char(S2)
        assert h1_order(S1) == h1_order(S2)


class TestH1Order:
    def test_examples(self):
        assert h1_order(HW) == 16
        assert h1_order(SeifertData(5, ())) == 4
        assert h1_order(SeifertData(2, ((3, 1),))) == 12

    def test_independent_of_b(self):
        for b in range(-4, 5):
            assert h1_order(SeifertData(b, ((3, 2), (4, 3)))) == 48

    def test_random_against_product(self):
        rng = random.Random(4)
        for _ in range(200):
            n = rng.randint(0, 5)
            arms = []
            for _ in range(n):
                a = rng.randint(2, 20)
                arms.append((a, rng.choice([x for x in range(1, a) if math.gcd(a, x) == 1])))
            S = SeifertData(rng.randint(-4, 4), tuple(arms))
            assert h1_order(S) == 4 * math.prod(a for a, _ in S.arms)


def test_double_cover():
    dc = double_cover(HW)
    assert dc.b == 2 and dc.arms == ((2, 1),) * 4
    assert double_cover(SeifertData(3, ())).b == 6
    assert double_cover(SeifertData(0, ((3, 2),))).arms == ((3, 2), (3, 2))


class TestLineBundleClass:
    def test_consistency_required(self):
        with pytest.raises(InconsistentClass):
            LineBundleClass(F(1, 2), (2,), (0,), (0,))
        LineBundleClass(F(1, 2), (2,), (1,), (0,))  # 1/2 = 1/2 mod 1

    def test_non_canonical_rejected(self):
        with pytest.raises(InconsistentClass):
            LineBundleClass(F(0), (2,), (2,), (0,))

    def test_make_class_canonicalizes(self):
        c = make_class(F(3, 2), (2,), (3,), (-2,))
        assert c.gammas == (1,) and c.deltas == (0,)

    def test_pairs(self):
        c = make_class(0, (2, 2), (0, 1), (1, 0))
        assert c.pairs == ((0, 1), (1, 0))


class TestDesingDegree:
    def test_weight_zero_class_of_hw(self):
        c = make_class(0, (2, 2), (0, 1), (1, 0))
        assert desing_degree(c) == -1

    def test_trivial(self):
        assert desing_degree(make_class(0, (), (), ())) == 0
        assert desing_degree(make_class(0, (3, 5), (0, 0), (0, 0))) == 0

    def test_fractional_degree(self):
        c = make_class(F(5, 3), (3,), (2,), (3,))
        assert desing_degree(c) == 1

    def test_always_integer(self):
        rng = random.Random(11)
        for _ in range(200):
            n = rng.randint(0, 4)
            orders = tuple(rng.randint(1, 9) for _ in range(n))
            gammas = tuple(rng.randrange(a) for a in orders)
            deltas = tuple(rng.randrange(a) for a in orders)
            e = sum((F(g + d, a) for a, g, d in zip(orders, gammas, deltas)), F(0))
            e += rng.randint(-3, 3)
            c = LineBundleClass(e, orders, gammas, deltas)
            desing_degree(c)  # asserts integrality internally


class TestParsing:
    def test_round_trip(self):
        for text in ["1;(2,1),(2,1)", "3;", "-2;(5,3)", "0;(3,1),(4,3),(5,2)"]:
            S = parse_seifert(text)
            assert parse_seifert(str(S)) == S

    def test_whitespace(self):
        assert parse_seifert(" 1 ; (2, 1) , (2,1) ") == HW
        assert parse_seifert("3") == SeifertData(3, ())
        assert parse_seifert("3;") == SeifertData(3, ())

    def test_unnormalized_input(self):
        assert parse_seifert("0;(2,3)") == SeifertData(-1, ((2, 1),))

    def test_errors(self):
        for bad in ["", "x;", "1;(2,1", "1;(2,1)(3,1)", "1;[2,1]", "1.5"]:
            with pytest.raises(ParseError):
                parse_seifert(bad)
        with pytest.raises(NotCoprime):
            parse_seifert("1;(4,2)")

    def test_json_form(self):
        assert seifert_from_json([1, [2, 1], [2, 1]]) == HW
        assert seifert_from_json([3]) == SeifertData(3, ())
        assert seifert_from_json(json.loads("[0, [2, 3]]")) == SeifertData(-1, ((2, 1),))
        for bad in [[], ["1"], [1, [2]], [1, [2, 1, 0]], "1", [1, (2, "1")]]:
            with pytest.raises(ParseError):
                seifert_from_json(bad)
