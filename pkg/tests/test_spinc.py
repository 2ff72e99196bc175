import itertools
import math
import random
from collections import Counter
from fractions import Fraction as F

import pytest

from seifert_delta import (
    HolonomyClass,
    SeifertData,
    SpinCStructure,
    check_conditions,
    enumerate_spinc,
    h1_order,
    holonomy,
    make_class,
    normalize,
    spinc_to_json,
)

HW = SeifertData(1, ((2, 1), (2, 1)))


def test_counts():
    assert sum(1 for _ in enumerate_spinc(HW)) == 16
    assert sum(1 for _ in enumerate_spinc(SeifertData(3, ()))) == 4
    assert sum(1 for _ in enumerate_spinc(SeifertData(0, ((3, 1),)))) == 12


def test_counts_match_h1_random():
    rng = random.Random(2024)
    for _ in range(25):
        n = rng.randint(0, 3)
        arms = []
        for _ in range(n):
            a = rng.randint(2, 7)
            arms.append((a, rng.choice([x for x in range(1, a) if math.gcd(a, x) == 1])))
        S = SeifertData(rng.randint(-3, 3), tuple(arms))
        assert sum(1 for _ in enumerate_spinc(S)) == h1_order(S)


def test_conditions_hold_for_all_enumerated():
    for S in [HW, SeifertData(2, ((3, 1),)), SeifertData(-1, ((5, 2), (4, 3)))]:
        for s in enumerate_spinc(S):
            assert check_conditions(s.cls, s.m, S)


def test_conditions_examples():
    # weight -1 classes of the Hantzsche-Wendt manifold: delta_i = gamma_i, e = 0
    cls = make_class(0, (2, 2), (0, 1), (0, 1))
    assert check_conditions(cls, -1, HW)
    # wrong local residues
    bad = make_class(0, (2, 2), (0, 0), (0, 1))
    assert not check_conditions(bad, 0, HW)
    # degree off by one
    off = make_class(1, (2, 2), (0, 1), (1, 0))
    assert not check_conditions(off, 0, HW)
    # weight-0 class with the right pairing
    good = make_class(0, (2, 2), (0, 1), (1, 0))
    assert check_conditions(good, 0, HW)
    assert not check_conditions(good, -1, HW)


def test_holonomy():
    structs = list(enumerate_spinc(HW))
    for s in structs:
        expected = HolonomyClass.TRIVIAL if s.m == 0 else HolonomyClass.NONTRIVIAL
        assert holonomy(s) is expected
        assert holonomy(s.flip_tau()) is expected
    split = Counter(holonomy(s) for s in structs)
    assert split[HolonomyClass.TRIVIAL] == split[HolonomyClass.NONTRIVIAL] == 8


def test_each_class_twice_no_duplicates():
    for S in [HW, SeifertData(1, ((3, 2), (2, 1)))]:
        structs = list(enumerate_spinc(S))
        assert len(set(structs)) == len(structs)
        by_class = Counter((s.cls, s.m) for s in structs)
        assert all(v == 2 for v in by_class.values())
        for s in structs:
            assert s.flip_tau() in set(structs)


def test_canonical_order():
    structs = list(enumerate_spinc(SeifertData(1, ((3, 2), (2, 1)))))
    ms = [s.m for s in structs]
    assert ms == [0] * 12 + [-1] * 12
    for block in (structs[:12], structs[12:]):
        gammas = [s.cls.gammas for s in block[::2]]
        assert gammas == sorted(gammas)
        assert all(s.tau == 1 for s in block[::2])
        assert all(s.tau == -1 for s in block[1::2])
        # tau pairs are adjacent and share the class
        for even, odd in zip(block[::2], block[1::2]):
            assert even.cls == odd.cls


def test_no_arms():
    structs = list(enumerate_spinc(SeifertData(4, ())))
    assert [(s.m, s.tau) for s in structs] == [(0, 1), (0, -1), (-1, 1), (-1, -1)]
    assert structs[0].cls.e == F(-1)
    assert structs[2].cls.e == F(3)  # -chi + l = -1 + 4


def test_validation():
    cls = make_class(0, (2, 2), (0, 1), (1, 0))
    with pytest.raises(ValueError):
        SpinCStructure(cls, 0, 0)
    with pytest.raises(ValueError):
        SpinCStructure(cls, 1, 1)


def test_json_rendering():
    s = next(iter(enumerate_spinc(HW)))
    assert spinc_to_json(s) == {
        "m": 0,
        "tau": "+",
        "e": "0",
        "gamma": [0, 0],
        "delta": [1, 1],
    }


def test_half_in_each_holonomy_class_random():
    rng = random.Random(5)
    for _ in range(10):
        n = rng.randint(0, 3)
        arms = []
        for _ in range(n):
            a = rng.randint(1, 6)
            arms.append((a, rng.choice([x for x in range(1, a + 1) if math.gcd(a, x) == 1])))
        S = normalize(rng.randint(-3, 3), arms)
        split = Counter(s.m for s in enumerate_spinc(S))
        prod = math.prod(a for a, _ in S.arms)
        assert split[0] == split[-1] == 2 * prod
