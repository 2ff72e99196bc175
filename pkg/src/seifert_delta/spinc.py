"""Enumeration of spin^c structures as triples (line bundle class, tau sign, m).

Every spin^c structure on Y = S(b; (a_1,b_1), ...) is labelled by an
orbifold line bundle class E_0 on the double cover, a weight m in {0, -1}
recording the fibre holonomy (-1)^m of the reducible, and one of the two
equivariant structures tau on E_0, represented here purely by its sign
relative to a fixed but arbitrary base choice.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterator

from .seifert import LineBundleClass, SeifertData, degree_l, euler_char


class HolonomyClass(enum.Enum):
    TRIVIAL = "trivial"
    NONTRIVIAL = "nontrivial"


@dataclass(frozen=True, slots=True)
class SpinCStructure:
    cls: LineBundleClass
    tau: int  # +1 or -1
    m: int  # 0 or -1

    def __post_init__(self):
        if self.tau not in (1, -1):
            raise ValueError(f"tau must be +1 or -1, got {self.tau}")
        if self.m not in (0, -1):
            raise ValueError(f"m must be 0 or -1, got {self.m}")

    def flip_tau(self) -> "SpinCStructure":
        return replace(self, tau=-self.tau)


def expected_degree(S: SeifertData, m: int) -> Fraction:
    """The degree e = -chi - m*l forced on the class of any weight-m structure."""
    return -euler_char(S) - m * degree_l(S)


def check_conditions(cls: LineBundleClass, m: int, S: SeifertData) -> bool:
    """True iff (cls, m) satisfies both defining conditions for S, exactly.

    The degree condition is e = -chi - m*l; the local condition is
    gamma_i + delta_i = -1 + m*b_i mod a_i for every arm.
    """
    if cls.orders != tuple(a for a, _ in S.arms):
        return False
    if Fraction(cls.e) != expected_degree(S, m):
        return False
    for (a, bi), g, d in zip(S.arms, cls.gammas, cls.deltas):
        if (g + d - (-1 + m * bi)) % a != 0:
            return False
    return True


def enumerate_spinc(S: SeifertData) -> Iterator[SpinCStructure]:
    """Yield all 4 a_1...a_n spin^c structures of S in canonical order.

    Order: m = 0 block then m = -1 block; within a block, lexicographic in
    the gamma tuple; tau = +1 before tau = -1.  The delta residues are
    solved from the local condition, the degree from the global one.
    """
    orders = tuple(a for a, _ in S.arms)
    bs = tuple(bi for _, bi in S.arms)
    for m in (0, -1):
        e = expected_degree(S, m)
        # delta_table[i][g] solves gamma + delta = -1 + m*b_i mod a_i
        delta_table = tuple(
            tuple((-1 + m * bi - g) % a for g in range(a))
            for a, bi in zip(orders, bs)
        )
        for gammas in itertools.product(*(range(a) for a in orders)):
            deltas = tuple(delta_table[i][g] for i, g in enumerate(gammas))
            cls = LineBundleClass(e, orders, gammas, deltas)
            yield SpinCStructure(cls, 1, m)
            yield SpinCStructure(cls, -1, m)


def holonomy(s: SpinCStructure) -> HolonomyClass:
    """Fibre holonomy (-1)^m of the reducible: trivial exactly when m = 0."""
    return HolonomyClass.TRIVIAL if s.m == 0 else HolonomyClass.NONTRIVIAL


def spinc_to_json(s: SpinCStructure) -> dict:
    """Render a structure as a JSON-ready dict with exact values as strings."""
    return {
        "m": s.m,
        "tau": "+" if s.tau == 1 else "-",
        "e": str(Fraction(s.cls.e)),
        "gamma": list(s.cls.gammas),
        "delta": list(s.cls.deltas),
    }
