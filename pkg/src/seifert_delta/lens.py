"""Lens spaces L(a,b), their spin^c labels u in Z_a, and their delta invariants."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import dedekind_sum, lambda_sum
from .errors import NotCoprime


@dataclass(frozen=True)
class LensSpace:
    """L(a,b): quotient of S^3 by (x,y) -> (wx, w^b y), w a primitive a-th root."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1:
            raise ValueError(f"a must be positive, got {self.a}")
        if math.gcd(self.a, self.b) != 1:
            raise NotCoprime(f"gcd({self.a}, {self.b}) != 1")


def lens_delta(L: LensSpace, u: int) -> Fraction:
    """delta(L(a,b), s_u) = lambda(b,a;u) - s(b,a)/2; the 3-sphere (a=1) gives 0.

    b enters only through its residue mod a, which is normalized first.
    """
    if L.a == 1:
        return Fraction(0)
    if not 0 <= u < L.a:
        raise ValueError(f"spin^c label u={u} out of range for a={L.a}")
    b = L.b % L.a
    return lambda_sum(b, L.a, u) - Fraction(1, 2) * dedekind_sum(b, L.a)


def lens_delta_closed_b1(a: int, u: int) -> Fraction:
    """Closed form for L(a,1): -(2u + 2 - a)^2/(8a) + 1/8."""
    if not 0 <= u < a:
        raise ValueError(f"spin^c label u={u} out of range for a={a}")
    return -Fraction((2 * u + 2 - a) ** 2, 8 * a) + Fraction(1, 8)


def lens_delta_negative(a: int, u: int) -> Fraction:
    """delta(L(a,-1), s_u) = -delta(L(a,1), s_u)."""
    return -lens_delta_closed_b1(a, u)
