"""Exact number-theoretic sums: sawtooth, Dedekind, Dedekind-Rademacher, lambda.

Everything on the primary path is exact `fractions.Fraction` arithmetic.
The ``*_numeric`` functions evaluate the defining root-of-unity sums in
floating point and exist only as independent oracles.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from .errors import NotCoprime

Rational = Fraction

_HALF = Fraction(1, 2)
_TAU = 2.0 * math.pi


def _require_coprime(b: int, a: int) -> None:
    if a < 1:
        raise NotCoprime(f"modulus must be positive, got a={a}")
    if math.gcd(b, a) != 1:
        raise NotCoprime(f"gcd({b}, {a}) != 1")


def frac_part(x) -> Fraction:
    """Fractional part {x} in [0, 1), also for negative rationals."""
    return Fraction(x) % 1


def sawtooth(x) -> Fraction:
    """Sawtooth ((x)): 0 at integers, {x} - 1/2 otherwise."""
    r = Fraction(x) % 1
    if r == 0:
        return Fraction(0)
    return r - _HALF


def mod_inverse(b: int, a: int) -> int:
    """Inverse of b modulo a, in [0, a).  a = 1 gives 0."""
    _require_coprime(b, a)
    return pow(b, -1, a)


@lru_cache(maxsize=None)
def _dedekind_sum_reduced(b: int, a: int) -> Fraction:
    # ((bj/a))((j/a)) = (2(bj mod a) - a)(2j - a)/(4a^2); both factors are
    # nonzero for 0 < j < a since gcd(b,a) = 1, so accumulate in integers.
    acc = 0
    for j in range(1, a):
        acc += (2 * (b * j % a) - a) * (2 * j - a)
    return Fraction(acc, 4 * a * a)


def dedekind_sum(b: int, a: int) -> Fraction:
    """Dedekind sum s(b,a) = sum_{j=1}^{a-1} ((bj/a))((j/a))."""
    _require_coprime(b, a)
    return _dedekind_sum_reduced(b % a, a)


def dedekind_sum_numeric(b: int, a: int) -> complex:
    """s(b,a) as -1/(4a) sum (1+w^-j)(1+w^-bj) / ((1-w^-j)(1-w^-bj)), w = e^(2 pi i/a).

    Floating-point oracle; the imaginary part is a diagnostic and should
    vanish to rounding error.
    """
    _require_coprime(b, a)
    total = 0j
    for j in range(1, a):
        wj = cmath.exp(-1j * _TAU * j / a)
        wbj = cmath.exp(-1j * _TAU * (b * j % a) / a)
        total += (1 + wj) * (1 + wbj) / ((1 - wj) * (1 - wbj))
    return -total / (4 * a)


def dedekind_rademacher(b: int, a: int, x, y) -> Fraction:
    """Dedekind-Rademacher sum s(b,a;x,y) = sum_{j=0}^{a-1} ((x + b(j+y)/a))(((j+y)/a)).

    Periodic in x and y with period 1.  For y not an integer multiple of
    1/a mod 1 the value genuinely depends on b as an integer, not just on
    b mod a.
    """
    _require_coprime(b, a)
    x = Fraction(x)
    y = Fraction(y)
    # With y = p/q and x = u/v, term j multiplies the sawtooths of
    # (u*aq + vb(jq+p)) / (v*aq) and (jq+p) / (aq); accumulate the integer
    # numerators over the common denominator 4*(v*aq)*(aq).
    p, q = y.numerator, y.denominator
    u, v = x.numerator, x.denominator
    d1 = v * a * q
    d2 = a * q
    base = u * a * q
    acc = 0
    for j in range(a):
        t = j * q + p
        r2 = t % d2
        if not r2:
            continue
        r1 = (base + v * b * t) % d1
        if not r1:
            continue
        acc += (2 * r1 - d1) * (2 * r2 - d2)
    return Fraction(acc, 4 * d1 * d2)


@lru_cache(maxsize=None)
def _lambda_reduced(b: int, a: int, n: int) -> Fraction:
    bp = pow(b, -1, a)
    return (
        -dedekind_rademacher(b, a, Fraction(n, a), 0)
        + Fraction(a - 1, 4 * a)
        - _HALF * Fraction(n, a)
        - _HALF * sawtooth(Fraction(bp * n, a))
    )


def lambda_sum(b: int, a: int, n: int) -> Fraction:
    """lambda(b,a;n), exactly.

    Evaluated through the closed form
    -s(b,a; n/a, 0) + (a-1)/(4a) - {n/a}/2 - ((b'n/a))/2 with bb' = 1 mod a;
    the defining root-of-unity sum is available as lambda_sum_numeric.
    Depends on b and n only mod a.  a = 1 gives 0.
    """
    _require_coprime(b, a)
    if a == 1:
        return Fraction(0)
    return _lambda_reduced(b % a, a, n % a)


def lambda_sum_numeric(b: int, a: int, n: int) -> complex:
    """lambda(b,a;n) = 1/a sum_{j=1}^{a-1} w^(nj) / ((1-w^-j)(1-w^-bj)), w = e^(2 pi i/a)."""
    _require_coprime(b, a)
    total = 0j
    for j in range(1, a):
        num = cmath.exp(1j * _TAU * (n * j % a) / a)
        wj = cmath.exp(-1j * _TAU * j / a)
        wbj = cmath.exp(-1j * _TAU * (b * j % a) / a)
        total += num / ((1 - wj) * (1 - wbj))
    return total / a
