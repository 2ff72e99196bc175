"""Seifert data over RP^2, derived scalars, and orbifold line bundle classes.

A manifold Y = S(b; (a_1,b_1), ..., (a_n,b_n)) fibers over the orbifold
RP^2(a_1, ..., a_n); its orientation double cover fibers over
S^2(a_1, a_1, ..., a_n, a_n).  Line bundle classes live on the double
cover and carry one (gamma, delta) pair per original arm, one residue for
each of the two preimages of the orbifold point.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InconsistentClass, NotCoprime, ParseError


@dataclass(frozen=True)
class SeifertData:
    """Normalized Seifert invariants (b; (a_1,b_1), ..., (a_n,b_n)).

    Normalized means 0 < b_i < a_i with gcd(a_i, b_i) = 1; arms with
    a_i = 1 have been absorbed into b.  Arms are ordered; all derived
    invariants are symmetric functions of them.
    """

    b: int
    arms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for a, bi in self.arms:
            if a < 2 or not 0 < bi < a:
                raise ValueError(f"arm ({a},{bi}) is not in normalized form")
            if math.gcd(a, bi) != 1:
                raise NotCoprime(f"arm ({a},{bi}) has gcd > 1")

    @property
    def n(self) -> int:
        return len(self.arms)

    def __str__(self) -> str:
        return f"{self.b};" + ",".join(f"({a},{bi})" for a, bi in self.arms)


@dataclass(frozen=True)
class DoubleCoverData:
    """Seifert invariants of the pullback to the orientation double cover."""

    b: int
    arms: tuple[tuple[int, int], ...]


def normalize(b: int, arms) -> SeifertData:
    """Shift each b_i into (0, a_i) and drop a_i = 1 arms, keeping l fixed.

    Replacing (a_i, b_i) by (a_i, b_i + k a_i) goes with b -> b + k, so the
    degree l = b - sum b_i/a_i is preserved.
    """
    b = int(b)
    kept = []
    for a, bi in arms:
        a, bi = int(a), int(bi)
        if a < 1:
            raise ValueError(f"arm order must be positive, got a={a}")
        if math.gcd(a, bi) != 1:
            raise NotCoprime(f"arm ({a},{bi}) has gcd > 1")
        k = -(bi // a)
        bi += k * a  # now bi = original bi mod a, in [0, a)
        b += k
        if a == 1:
            continue  # bi is 0 here; arm carries no data
        kept.append((a, bi))
    return SeifertData(b, tuple(kept))


_ARM_RE = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_seifert(text: str) -> SeifertData:
    """Parse "b;(a1,b1),(a2,b2),..." (arms optional: "b;" or "b")."""
    s = text.strip()
    if ";" in s:
        head, _, tail = s.partition(";")
    else:
        head, tail = s, ""
    head = head.strip()
    if not re.fullmatch(r"-?\d+", head):
        raise ParseError(f"bad Euler class in {text!r}")
    b = int(head)
    tail = tail.strip()
    arms = []
    if tail:
        pos = 0
        first = True
        while pos < len(tail):
            if not first:
                if tail[pos] != ",":
                    raise ParseError(f"expected ',' between arms in {text!r}")
                pos += 1
            m = _ARM_RE.match(tail, pos)
            if m is None:
                raise ParseError(f"bad arm syntax in {text!r}")
            arms.append((int(m.group(1)), int(m.group(2))))
            pos = m.end()
            while pos < len(tail) and tail[pos].isspace():
                pos += 1
            first = False
    return normalize(b, arms)


def seifert_from_json(obj) -> SeifertData:
    """Parse the JSON array form [b, [a1,b1], [a2,b2], ...]."""
    if not isinstance(obj, list) or not obj or not isinstance(obj[0], int):
        raise ParseError(f"expected [b, [a1,b1], ...], got {obj!r}")
    arms = []
    for item in obj[1:]:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(v, int) for v in item)
        ):
            raise ParseError(f"bad arm entry {item!r}")
        arms.append((item[0], item[1]))
    return normalize(obj[0], arms)


def degree_l(S: SeifertData) -> Fraction:
    """Degree l = b - sum b_i/a_i of the defining circle bundle."""
    return S.b - sum((Fraction(bi, a) for a, bi in S.arms), Fraction(0))


def euler_char(S: SeifertData) -> Fraction:
    """Orbifold Euler characteristic chi = 1 - sum (a_i - 1)/a_i of the base."""
    return 1 - sum((Fraction(a - 1, a) for a, bi in S.arms), Fraction(0))


def _det_exact(rows: list[list[Fraction]]) -> Fraction:
    """Determinant by fraction-free-enough Gaussian elimination, exact."""
    m = [row[:] for row in rows]
    dim = len(m)
    det = Fraction(1)
    for col in range(dim):
        pivot = next((r for r in range(col, dim) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, dim):
            if m[r][col] == 0:
                continue
            factor = m[r][col] * inv
            for c in range(col, dim):
                m[r][c] -= factor * m[col][c]
    return det


def h1_order(S: SeifertData) -> int:
    """Order of H_1(Y), as |det| of the presentation matrix of the fundamental group.

    The (n+2)x(n+2) relation matrix has rows a_i q_i + b_i h, then
    q_1 + ... + q_n + 2v + b h, then 2h; its determinant has absolute value
    4 a_1 ... a_n, which is asserted.
    """
    n = S.n
    dim = n + 2
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for i, (a, bi) in enumerate(S.arms):
        rows[i][i] = Fraction(a)
        rows[i][n] = Fraction(bi)
    for i in range(n):
        rows[n][i] = Fraction(1)
    rows[n][n] = Fraction(S.b)
    rows[n][n + 1] = Fraction(2)
    rows[n + 1][n] = Fraction(2)
    det = _det_exact(rows)
    order = abs(det)
    assert order.denominator == 1
    expected = 4 * math.prod(a for a, _ in S.arms)
    assert order == expected, f"determinant {order} != 4*prod(a_i) = {expected}"
    return int(order)


def double_cover(S: SeifertData) -> DoubleCoverData:
    """Seifert data of the pullback to the double cover: (2b; each arm twice)."""
    doubled = []
    for arm in S.arms:
        doubled.append(arm)
        doubled.append(arm)
    return DoubleCoverData(2 * S.b, tuple(doubled))


@dataclass(frozen=True, slots=True)
class LineBundleClass:
    """Isomorphism class (e; gamma_1, delta_1, ..., gamma_n, delta_n) on the double cover.

    ``orders`` holds the a_i; gamma_i and delta_i are the canonical residues
    in [0, a_i) at the two preimages of the i-th orbifold point.  The exact
    rational degree e must equal sum (gamma_i + delta_i)/a_i modulo 1.
    """

    e: Fraction
    orders: tuple[int, ...]
    gammas: tuple[int, ...]
    deltas: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.e, Fraction):
            object.__setattr__(self, "e", Fraction(self.e))
        if not (len(self.orders) == len(self.gammas) == len(self.deltas)):
            raise InconsistentClass("orders / gammas / deltas lengths differ")
        for a, g, d in zip(self.orders, self.gammas, self.deltas):
            if a < 1 or not (0 <= g < a and 0 <= d < a):
                raise InconsistentClass(
                    f"residues ({g},{d}) not canonical for order {a}"
                )
        # e = sum (gamma_i + delta_i)/a_i mod 1, checked in integers:
        # scale by A = prod a_i and reduce mod A.
        A = math.prod(self.orders)
        scaled = self.e * A
        if scaled.denominator != 1 or (
            scaled.numerator
            - sum(
                (g + d) * (A // a)
                for a, g, d in zip(self.orders, self.gammas, self.deltas)
            )
        ) % A:
            raise InconsistentClass(
                f"degree {self.e} inconsistent mod 1 with residues"
            )

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.gammas, self.deltas))


def make_class(e, orders, gammas, deltas) -> LineBundleClass:
    """Build a LineBundleClass, canonicalizing the residues mod a_i."""
    orders = tuple(int(a) for a in orders)
    gammas = tuple(int(g) % a for g, a in zip(gammas, orders))
    deltas = tuple(int(d) % a for d, a in zip(deltas, orders))
    return LineBundleClass(Fraction(e), orders, gammas, deltas)


def desing_degree(c: LineBundleClass) -> int:
    """Integer degree e - sum ({gamma_i/a_i} + {delta_i/a_i}) of the desingularization."""
    deg = c.e - sum(
        (Fraction(g + d, a) for a, g, d in zip(c.orders, c.gammas, c.deltas)),
        Fraction(0),
    )
    assert deg.denominator == 1, f"desingularized degree {deg} is not an integer"
    return int(deg)
