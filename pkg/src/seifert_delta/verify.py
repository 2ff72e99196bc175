"""Identity sweeps behind the `verify` command and the acceptance suite.

Each suite runs a family of exact identities up to a size bound and
reports the first counterexample of every failing check.  All sweeps are
deterministic; random corpora are seeded.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import arith, invariants, lens, plumbing, prism, spinc
from .errors import UnknownSuite
from .seifert import LineBundleClass, SeifertData, degree_l, h1_order, normalize

_HALF = Fraction(1, 2)


@dataclass
class CheckResult:
    name: str
    ok: bool
    cases: int
    counterexample: str | None = None


@dataclass
class SuiteReport:
    suite: str
    bound: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.ok)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.checks if not c.ok)

    @property
    def ok(self) -> bool:
        return self.failed == 0


class _Check:
    """Collects cases for one named identity, recording the first failure."""

    def __init__(self, name: str):
        self.result = CheckResult(name, True, 0)

    def case(self, ok: bool, describe) -> None:
        self.result.cases += 1
        if not ok and self.result.ok:
            self.result.ok = False
            self.result.counterexample = describe()


def _coprime_pairs(amax: int):
    for a in range(1, amax + 1):
        for b in range(1, a + 1):
            if math.gcd(b, a) == 1:
                yield b, a


def verify_arith(bound: int) -> SuiteReport:
    rep = SuiteReport("arith", bound)

    odd = _Check("sawtooth_odd")
    for p in range(-2 * bound, 2 * bound + 1):
        for q in range(1, bound + 1):
            x = Fraction(p, q)
            odd.case(
                arith.sawtooth(-x) == -arith.sawtooth(x),
                lambda x=x: f"x={x}",
            )
    rep.checks.append(odd.result)

    oracle = _Check("root_of_unity_oracles")
    for b, a in _coprime_pairs(min(bound, 60)):
        sd = arith.dedekind_sum_numeric(b, a)
        lv = arith.lambda_sum_numeric(b, a, (b + 1) % a)
        ok = (
            abs(sd - complex(arith.dedekind_sum(b, a))) < 1e-9
            and abs(sd.imag) < 1e-9
            and abs(lv - complex(arith.lambda_sum(b, a, b + 1))) < 1e-9
            and abs(lv.imag) < 1e-9
        )
        oracle.case(ok, lambda b=b, a=a: f"(b,a)=({b},{a})")
    rep.checks.append(oracle.result)

    shift = _Check("rademacher_shift")
    for b, a in _coprime_pairs(min(bound, 40)):
        ys = [Fraction(0), _HALF, Fraction(2, 5)]
        for g in range(a):
            x = Fraction(g, a)
            for y in ys:
                base = arith.dedekind_rademacher(b, a, x, y)
                for m in range(-3, 4):
                    ok = arith.dedekind_rademacher(b - m * a, a, x + m * y, y) == base
                    shift.case(
                        ok,
                        lambda b=b, a=a, x=x, y=y, m=m: f"b={b} a={a} x={x} y={y} m={m}",
                    )
    rep.checks.append(shift.result)

    lam_rel = _Check("lambda_vs_dedekind_rademacher")
    for b, a in _coprime_pairs(min(bound, 60)):
        bp = arith.mod_inverse(b, a)
        for n in range(a):
            rhs = (
                -arith.dedekind_rademacher(b, a, Fraction(n, a), 0)
                + Fraction(a - 1, 4 * a)
                - _HALF * arith.frac_part(Fraction(n, a))
                - _HALF * arith.sawtooth(Fraction(bp * n, a))
            )
            lam_rel.case(
                arith.lambda_sum(b, a, n) == rhs,
                lambda b=b, a=a, n=n: f"b={b} a={a} n={n}",
            )
    rep.checks.append(lam_rel.result)

    half_shift = _Check("half_shift_lemma")
    for b, a in _coprime_pairs(min(bound, 40)):
        bp = arith.mod_inverse(b, a)
        for g in range(a):
            lhs = arith.dedekind_rademacher(
                b, a, Fraction(2 * g + b, 2 * a), _HALF
            ) + _HALF * arith.sawtooth(Fraction(2 * bp * g + 1, 2 * a))
            half_shift.case(
                lhs == -arith.lambda_sum(b, a, g),
                lambda b=b, a=a, g=g: f"b={b} a={a} gamma={g}",
            )
    rep.checks.append(half_shift.result)

    conj = _Check("lambda_conjugation")
    for b, a in _coprime_pairs(min(bound, 60)):
        for g in range(a):
            conj.case(
                arith.lambda_sum(b, a, -1 - b - g) == arith.lambda_sum(b, a, g),
                lambda b=b, a=a, g=g: f"b={b} a={a} gamma={g}",
            )
    rep.checks.append(conj.result)

    recip = _Check("dedekind_reciprocity")
    for a in range(1, min(bound, 60) + 1):
        for b in range(1, a + 1):
            if math.gcd(a, b) != 1:
                continue
            lhs = arith.dedekind_sum(b, a) + arith.dedekind_sum(a, b)
            rhs = Fraction(-1, 4) + (
                Fraction(a, b) + Fraction(b, a) + Fraction(1, a * b)
            ) / 12
            recip.case(lhs == rhs, lambda a=a, b=b: f"a={a} b={b}")
    rep.checks.append(recip.result)

    return rep


def verify_lens(bound: int) -> SuiteReport:
    rep = SuiteReport("lens", bound)

    closed = _Check("closed_form_b1")
    for a in range(1, min(bound, 60) + 1):
        L = lens.LensSpace(a, 1)
        for u in range(a):
            closed.case(
                lens.lens_delta(L, u) == lens.lens_delta_closed_b1(a, u),
                lambda a=a, u=u: f"a={a} u={u}",
            )
    rep.checks.append(closed.result)

    conj = _Check("lens_conjugation")
    for b, a in _coprime_pairs(min(bound, 40)):
        L = lens.LensSpace(a, b)
        for u in range(a):
            conj.case(
                lens.lens_delta(L, u) == lens.lens_delta(L, (-1 - b - u) % a),
                lambda a=a, b=b, u=u: f"a={a} b={b} u={u}",
            )
    rep.checks.append(conj.result)

    orbit = _Check("orbit_symmetry_b1")
    for a in range(1, min(bound, 60) + 1):
        L = lens.LensSpace(a, 1)
        vals = [lens.lens_delta(L, u) for u in range(a)]
        ok = all(vals[u] == vals[(a - 2 - u) % a] for u in range(a))
        orbit.case(ok, lambda a=a: f"a={a}")
    rep.checks.append(orbit.result)

    return rep


def _random_seifert(rng: random.Random, nmax: int, amax: int) -> SeifertData:
    n = rng.randint(0, nmax)
    arms = []
    for _ in range(n):
        a = rng.randint(1, amax)
        choices = [b for b in range(1, a + 1) if math.gcd(a, b) == 1]
        arms.append((a, rng.choice(choices)))
    return normalize(rng.randint(-4, 4), arms)


def invariants_corpus(count: int = 20, amax: int = 12, seed: int = 20260810):
    """Deterministic corpus of small Seifert data, pinned examples first."""
    fixed = [
        SeifertData(1, ((2, 1), (2, 1))),
        SeifertData(3, ()),
        SeifertData(-2, ()),
        SeifertData(2, ((3, 1),)),
        SeifertData(1, ((5, 2), (3, 1))),
        SeifertData(0, ((3, 1),)),
        SeifertData(-1, ((2, 1), (4, 3))),
    ]
    rng = random.Random(seed)
    out = list(fixed)
    while len(out) < count:
        S = _random_seifert(rng, nmax=3, amax=amax)
        if math.prod(a for a, _ in S.arms) <= 500:
            out.append(S)
    return out[:count]


def verify_invariants(bound: int) -> SuiteReport:
    rep = SuiteReport("invariants", bound)
    corpus = invariants_corpus(count=max(20, bound), amax=min(bound, 12))

    cancel = _Check("geometric_cancellation")
    for S in corpus:
        geom = invariants.eta_sig(S).scale(Fraction(1, 8)) + invariants.transgression(S)
        expected_c0 = degree_l(S) / 24 + _HALF * sum(
            (arith.dedekind_sum(bi, a) for a, bi in S.arms), Fraction(0)
        )
        cancel.case(
            geom.is_constant and geom.c0 == expected_c0,
            lambda S=S: f"S={S}",
        )
    rep.checks.append(cancel.result)

    raw = _Check("eta_f_raw_equals_lambda_form")
    pair_sum = _Check("tau_pair_structure")
    swap = _Check("m_minus1_gamma_delta_swap")
    via_n = _Check("delta_via_n_equals_delta")
    count_check = _Check("enumeration_count")
    for S in corpus:
        count = 0
        for s in spinc.enumerate_spinc(S):
            count += 1
            raw.case(
                invariants.eta_f0_raw(s, S) == invariants.eta_f0(s, S),
                lambda s=s, S=S: f"S={S} m={s.m} gammas={s.cls.gammas}",
            )
            via_n.case(
                invariants.delta_via_n(s, S) == invariants.delta(s, S),
                lambda s=s, S=S: f"S={S} m={s.m} gammas={s.cls.gammas}",
            )
            if s.tau != 1:
                continue
            if s.m == 0:
                plus = invariants.delta(s, S, invariants.plus_first_policy)
                minus = invariants.delta(s.flip_tau(), S, invariants.plus_first_policy)
                pair = invariants.delta_pair(s.cls, S)
                ok = (
                    invariants.UnorderedPair.of(plus, minus) == pair
                    and minus - plus == _HALF
                    and (plus + minus) / 2 == pair.lo + Fraction(1, 4)
                )
                pair_sum.case(ok, lambda s=s, S=S: f"S={S} gammas={s.cls.gammas}")
            else:
                swapped = spinc.SpinCStructure(
                    LineBundleClass(
                        s.cls.e, s.cls.orders, s.cls.deltas, s.cls.gammas
                    ),
                    s.tau,
                    s.m,
                )
                swap.case(
                    invariants.delta(swapped, S) == invariants.delta(s, S),
                    lambda s=s, S=S: f"S={S} gammas={s.cls.gammas}",
                )
        count_check.case(
            count == h1_order(S), lambda S=S, count=count: f"S={S} count={count}"
        )
    rep.checks.extend(
        [raw.result, via_n.result, pair_sum.result, swap.result, count_check.result]
    )
    return rep


def verify_prism(bound: int) -> SuiteReport:
    rep = SuiteReport("prism", bound)

    oracle = _Check("metacyclic_group_sum_vs_closed_form")
    mmax = min(bound, 10)
    for m in range(1, mmax + 1):
        for r in range(1, mmax + 1):
            if math.gcd(m, r) != 1:
                continue
            p = prism.MetacyclicParams(m, r)
            for nu in (0, 1):
                for u in range(2 * m):
                    c = prism.Character(nu, u)
                    diff = prism.metacyclic_eta_dir(p, c) - prism.metacyclic_eta_dir(
                        p, c.partner(m)
                    )
                    target = -2 * prism.eta_diff_closed(m, c)
                    oracle.case(
                        abs(diff - float(target)) < 1e-8,
                        lambda m=m, r=r, nu=nu, u=u: f"m={m} r={r} nu={nu} u={u}",
                    )
    rep.checks.append(oracle.result)

    roots = _Check("root_of_unity_identity")
    for p in range(1, min(bound * 6, 60) + 1):
        for q in range(p):
            roots.case(
                prism.rootsum_identity_check(p, q), lambda p=p, q=q: f"p={p} q={q}"
            )
    rep.checks.append(roots.result)

    bundles = _Check("circle_bundle_multisets")
    for b in range(-min(bound, 10), min(bound, 10) + 1):
        if b == 0:
            continue
        bundles.case(
            prism.rp2_circle_bundle_deltas(b)
            == invariants.delta_multiset(SeifertData(b, ())),
            lambda b=b: f"b={b}",
        )
    rep.checks.append(bundles.result)

    return rep


def _arm_multisets(amax: int, nmax: int):
    arms = [
        (a, b) for a in range(2, amax + 1) for b in range(1, a) if math.gcd(a, b) == 1
    ]

    def grow(start: int, chosen: tuple, budget: int):
        yield chosen
        if budget == 0:
            return
        for i in range(start, len(arms)):
            yield from grow(i, chosen + (arms[i],), budget - 1)

    yield from grow(0, (), nmax)


def verify_plumbing(bound: int, nmax: int = 4, bmax: int = 4) -> SuiteReport:
    rep = SuiteReport("plumbing", bound)

    rt = _Check("continued_fraction_round_trip")
    for b, a in _coprime_pairs(min(bound, 40)):
        if b == a:
            continue
        ds = plumbing.neg_cont_frac(a, b)
        val = Fraction(ds[-1])
        for d in reversed(ds[:-1]):
            val = d - 1 / val
        rt.case(
            val == Fraction(a, b) and all(d >= 2 for d in ds),
            lambda a=a, b=b: f"a={a} b={b}",
        )
    rep.checks.append(rt.result)

    definite = _Check("arm_chains_negative_definite")
    for b, a in _coprime_pairs(min(bound, 12)):
        if b == a:
            continue
        chain = plumbing.neg_cont_frac(a, b)
        lat = plumbing.graph_lattice(plumbing.PlumbingGraph(0, (chain,)))
        # strip the central vertex: rows/cols 1..s form the chain block
        sub = tuple(tuple(row[1:]) for row in lat.matrix[1:])
        definite.case(
            plumbing.lattice_signature(plumbing.IntLattice(sub)) == -len(chain),
            lambda a=a, b=b: f"a={a} b={b}",
        )
    rep.checks.append(definite.result)

    # Arm order only conjugates the lattice by a permutation, so sweeping
    # unordered arm multisets covers every ordered tuple.
    sigma = _Check("signature_relation")
    amax = min(bound, 10)
    for arms in _arm_multisets(amax, nmax):
        for b in range(-bmax, bmax + 1):
            S = SeifertData(b, arms)
            sigma.case(plumbing.sigma_relation_check(S), lambda S=S: f"S={S}")
    rep.checks.append(sigma.result)

    froy = _Check("froyshov_equality")
    amax_f = min(bound, 9)
    for arms in _arm_multisets(amax_f, 3):
        if any(bi != a - 1 for a, bi in arms):
            continue
        for b in range(-2, 3):
            S = SeifertData(b, arms)
            for s in spinc.enumerate_spinc(S):
                if s.m != 0 or s.tau != 1:
                    continue
                froy.case(
                    plumbing.froyshov_equality_check(S, s.cls),
                    lambda S=S, s=s: f"S={S} gammas={s.cls.gammas}",
                )
    rep.checks.append(froy.result)

    return rep


SUITES = {
    "arith": verify_arith,
    "lens": verify_lens,
    "invariants": verify_invariants,
    "prism": verify_prism,
    "plumbing": verify_plumbing,
}


def run_suite(name: str, bound: int) -> list[SuiteReport]:
    """Run one named suite, or all of them, to the given size bound."""
    if name == "all":
        return [fn(bound) for fn in SUITES.values()]
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return [SUITES[name](bound)]
