import math
from collections import Counter
from fractions import Fraction as F

import pytest

from seifert_delta import (
    Character,
    MetacyclicParams,
    NotCoprime,
    SeifertData,
    ZeroEuler,
    delta_multiset,
    enumerate_spinc,
    eta_diff_closed,
    eta_pinc,
    metacyclic_eta_dir,
    pinc_sign_rp2a,
    rootsum_identity_check,
    rp2_circle_bundle_deltas,
    rp2a_policy,
)


def test_params_validation():
    with pytest.raises(NotCoprime):
        MetacyclicParams(2, 4)
    with pytest.raises(ValueError):
        MetacyclicParams(0, 1)
    assert MetacyclicParams(3, 2).order == 24


def test_character_validation():
    with pytest.raises(ValueError):
        Character(2, 0)
    assert Character(0, 3).partner(2) == Character(0, 1)


def test_eta_dir_real_and_finite():
    for m, r in [(1, 1), (2, 1), (3, 2), (5, 4)]:
        p = MetacyclicParams(m, r)
        for nu in (0, 1):
            for u in range(2 * m):
                v = metacyclic_eta_dir(p, Character(nu, u))
                assert isinstance(v, float) and math.isfinite(v)


def test_nu1_partner_difference_vanishes():
    p = MetacyclicParams(1, 1)
    c = Character(1, 0)
    assert abs(metacyclic_eta_dir(p, c) - metacyclic_eta_dir(p, c.partner(1))) < 1e-9


def test_nu0_partner_difference():
    # eta difference is -1 on the lower half of the u range, +1 on the upper
    p = MetacyclicParams(2, 1)
    d = metacyclic_eta_dir(p, Character(0, 0)) - metacyclic_eta_dir(p, Character(0, 2))
    assert abs(d - (-1.0)) < 1e-9
    d2 = metacyclic_eta_dir(p, Character(0, 2)) - metacyclic_eta_dir(p, Character(0, 0))
    assert abs(d2 - 1.0) < 1e-9


def test_eta_diff_closed_table():
    assert eta_diff_closed(4, Character(1, 5)) == 0
    assert eta_diff_closed(4, Character(0, 0)) == F(1, 2)
    assert eta_diff_closed(4, Character(0, 4)) == F(-1, 2)


def test_oracle_match_small():
    for m in range(1, 7):
        for r in range(1, 7):
            if math.gcd(m, r) != 1:
                continue
            p = MetacyclicParams(m, r)
            for nu in (0, 1):
                for u in range(2 * m):
                    c = Character(nu, u)
                    diff = metacyclic_eta_dir(p, c) - metacyclic_eta_dir(
                        p, c.partner(m)
                    )
                    assert abs(diff - float(-2 * eta_diff_closed(m, c))) < 1e-8


def test_pinc_sign_table():
    assert pinc_sign_rp2a(3, 0).value == F(-1, 2)
    assert pinc_sign_rp2a(3, 3).value == F(1, 2)
    assert pinc_sign_rp2a(3, 2).value == F(-1, 2)
    with pytest.raises(ValueError):
        pinc_sign_rp2a(3, 6)


def test_rp2a_policy_resolves_signs():
    # a convention assigning u = gamma to the tau = +1 representative
    S = SeifertData(1, ((3, 1),))

    def u_of(s):
        return s.cls.gammas[0]

    policy = rp2a_policy(u_of)
    for s in enumerate_spinc(S):
        if s.m != 0:
            continue
        h = eta_pinc(s, policy)
        assert h.value in (F(1, 2), F(-1, 2))
        assert eta_pinc(s.flip_tau(), policy).value == -h.value


def test_rootsum_identity():
    assert rootsum_identity_check(2, 0)
    assert rootsum_identity_check(5, 3)
    assert rootsum_identity_check(1, 0)
    for p in range(1, 31):
        for q in range(p):
            assert rootsum_identity_check(p, q)


def test_circle_bundle_deltas():
    assert rp2_circle_bundle_deltas(1) == Counter({F(0): 2, F(3, 8): 1, F(-1, 8): 1})
    assert rp2_circle_bundle_deltas(2) == Counter({F(0): 3, F(1, 2): 1})
    assert rp2_circle_bundle_deltas(-1) == Counter({F(0): 2, F(1, 8): 1, F(-3, 8): 1})


def test_circle_bundle_matches_general_machinery():
    for b in range(-5, 6):
        if b == 0:
            continue
        assert rp2_circle_bundle_deltas(b) == delta_multiset(SeifertData(b, ()))


def test_zero_euler():
    with pytest.raises(ZeroEuler):
        rp2_circle_bundle_deltas(0)
