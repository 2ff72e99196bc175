"""Star-shaped plumbing lattices, exact signatures, and the Froyshov equality.

Y and its double cover bound star-shaped plumbings X and X~ built from the
same arm data; the double cover discards the central RP^2 class, leaving
the signature relation sigma(X~) = 2 sigma(X) + sign(l) as a consistency
check on the whole construction.  Arm chains come from negative continued
fractions; writing the arm data with negative coefficients, (a_i, b_i - a_i)
and central weight b - n, the chain for arm i expands a_i/(a_i - b_i), and
for b_i = a_i - 1 the graph degenerates to single -a_i vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidFraction, WrongForm
from .invariants import UnorderedPair, delta_pair
from .seifert import LineBundleClass, SeifertData, degree_l


@dataclass(frozen=True)
class PlumbingGraph:
    """Star-shaped graph: one central vertex plus linear arms of weights -d_j."""

    central_weight: int
    arms: tuple[tuple[int, ...], ...]  # each chain stores the d_j >= 2

    def __post_init__(self):
        for chain in self.arms:
            if any(d < 2 for d in chain):
                raise ValueError(f"arm weights must be >= 2, got {chain}")

    @property
    def dim(self) -> int:
        return 1 + sum(len(chain) for chain in self.arms)


@dataclass(frozen=True)
class IntLattice:
    """Dense symmetric integer intersection matrix."""

    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.matrix)
        for row in self.matrix:
            if len(row) != n:
                raise ValueError("matrix is not square")
        for i in range(n):
            for j in range(i):
                if self.matrix[i][j] != self.matrix[j][i]:
                    raise ValueError("matrix is not symmetric")

    @property
    def dim(self) -> int:
        return len(self.matrix)


@lru_cache(maxsize=None)
def neg_cont_frac(a: int, b: int) -> tuple[int, ...]:
    """The unique all->=2 expansion [d_1, ..., d_s] with a/b = d_1 - 1/(d_2 - ...)."""
    if not (a > 0 and 0 < b < a) or math.gcd(a, b) != 1:
        raise InvalidFraction(f"need coprime 0 < b < a, got a={a}, b={b}")
    out = []
    while b:
        d = -(-a // b)  # ceil(a/b)
        out.append(d)
        a, b = b, d * b - a
    return tuple(out)


def star_plumbing_double(S: SeifertData) -> PlumbingGraph:
    """Plumbing graph bounded by the double cover: central b~ = 2(b - n), arms doubled."""
    chains = []
    for a, bi in S.arms:
        chain = neg_cont_frac(a, a - bi)
        chains.append(chain)
        chains.append(chain)
    return PlumbingGraph(2 * (S.b - S.n), tuple(chains))


def graph_lattice(g: PlumbingGraph) -> IntLattice:
    """Intersection matrix: central weight on the diagonal, -d_j along arms, 1 on edges."""
    dim = g.dim
    m = [[0] * dim for _ in range(dim)]
    m[0][0] = g.central_weight
    idx = 1
    for chain in g.arms:
        prev = 0
        for d in chain:
            m[idx][idx] = -d
            m[prev][idx] = m[idx][prev] = 1
            prev = idx
            idx += 1
    return IntLattice(tuple(tuple(row) for row in m))


def star_lattice_double(S: SeifertData) -> IntLattice:
    """Intersection lattice of the plumbing bounded by the double cover of Y."""
    return graph_lattice(star_plumbing_double(S))


def _rows_from_graph(g: PlumbingGraph) -> dict[int, dict[int, Fraction]]:
    rows: dict[int, dict[int, Fraction]] = {0: {}}
    one = Fraction(1)
    if g.central_weight:
        rows[0][0] = Fraction(g.central_weight)
    idx = 1
    for chain in g.arms:
        prev = 0
        for d in chain:
            rows[idx] = {idx: Fraction(-d), prev: one}
            rows[prev][idx] = one
            prev = idx
            idx += 1
    return rows


def _signature_core(rows: dict[int, dict[int, Fraction]]) -> int:
    """Signature of a sparse symmetric matrix by exact congruence reduction.

    Diagonal pivots are consumed with sign bookkeeping; an all-zero diagonal
    with a surviving off-diagonal entry is reduced through a hyperbolic
    2x2 block contributing one sign of each.  Null directions count in
    neither sign.
    """
    active = set(rows)
    n_plus = n_minus = 0

    def drop(i: int) -> dict[int, Fraction]:
        row = rows.pop(i)
        active.discard(i)
        for j in row:
            if j != i and j in rows:
                rows[j].pop(i, None)
        return row

    while active:
        pivot = None
        best = None
        for i in active:
            if rows[i].get(i):
                size = len(rows[i])
                if best is None or size < best:
                    pivot, best = i, size
                    if size <= 2:
                        break
        if pivot is not None:
            row = drop(pivot)
            d = row.pop(pivot)
            if d > 0:
                n_plus += 1
            else:
                n_minus += 1
            nbrs = [(j, v) for j, v in row.items() if j in rows]
            for x, (j, vj) in enumerate(nbrs):
                for k, vk in nbrs[x:]:
                    upd = vj * vk / d
                    new = rows[j].get(k, Fraction(0)) - upd
                    if new:
                        rows[j][k] = new
                        rows[k][j] = new
                    else:
                        rows[j].pop(k, None)
                        rows[k].pop(j, None)
            continue
        # every remaining diagonal entry is zero
        pair = None
        for i in active:
            for j in rows[i]:
                if j != i and rows[i][j]:
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            break  # all-zero block: null directions only
        i, j = pair
        a = rows[i][j]
        row_i = drop(i)
        row_j = drop(j)
        row_i.pop(j, None)
        row_j.pop(i, None)
        n_plus += 1
        n_minus += 1
        touched = [k for k in set(row_i) | set(row_j) if k in rows]
        for x, k in enumerate(touched):
            for l in touched[x:]:
                upd = (
                    row_i.get(k, Fraction(0)) * row_j.get(l, Fraction(0))
                    + row_j.get(k, Fraction(0)) * row_i.get(l, Fraction(0))
                ) / a
                if not upd:
                    continue
                new = rows[k].get(l, Fraction(0)) - upd
                if new:
                    rows[k][l] = new
                    rows[l][k] = new
                else:
                    rows[k].pop(l, None)
                    rows[l].pop(k, None)
    return n_plus - n_minus


def lattice_signature(L: IntLattice) -> int:
    """Signature n+ - n- of a symmetric integer matrix, by exact pivoting."""
    rows = {
        i: {j: Fraction(v) for j, v in enumerate(row) if v}
        for i, row in enumerate(L.matrix)
    }
    return _signature_core(rows)


def sigma_relation_check(S: SeifertData) -> bool:
    """Check sigma(X~) = 2 sigma(X) + eps with eps = sign(l).

    sigma(X~) is computed from the lattice; sigma(X) is -sum of the arm
    chain lengths, the arms being negative definite and the central RP^2
    class carrying no homology.
    """
    sig_double = _signature_core(_rows_from_graph(star_plumbing_double(S)))
    sig_base = -sum(len(neg_cont_frac(a, a - bi)) for a, bi in S.arms)
    l = degree_l(S)
    eps = (l > 0) - (l < 0)
    return sig_double == 2 * sig_base + eps


def _require_special_form(S: SeifertData) -> None:
    for a, bi in S.arms:
        if bi != a - 1:
            raise WrongForm(f"arm ({a},{bi}) is not of the (a, a-1) shape")


def c_squared(S: SeifertData, gammas) -> Fraction:
    """Square -sum (2 gamma_i + 1 - a_i)^2 / a_i of the extending spin^c class.

    Only defined for the special data with every b_i = a_i - 1 (the (a_i,-1)
    arms before normalization); gammas are the canonical integer lifts.
    """
    _require_special_form(S)
    gammas = tuple(int(g) for g in gammas)
    if len(gammas) != S.n:
        raise WrongForm(f"expected {S.n} gamma lifts, got {len(gammas)}")
    total = Fraction(0)
    for (a, _), g in zip(S.arms, gammas):
        if not 0 <= g < a:
            raise WrongForm(f"gamma lift {g} out of range for a={a}")
        total -= Fraction((2 * g + 1 - a) ** 2, a)
    return total


def froyshov_equality_check(S: SeifertData, cls: LineBundleClass) -> bool:
    """Check that the delta pair of a weight-0 class attains the Froyshov bound exactly.

    For the special data (every b_i = a_i - 1, central weight b, so b - n
    before normalization), the bound reads
    (b - n)/8 +- 1/4 + (c^2 + n)/8 and both tau signs must realise it.
    """
    _require_special_form(S)
    pair = delta_pair(cls, S)
    c2 = c_squared(S, cls.gammas)
    n = S.n
    base = Fraction(S.b - n, 8) + (c2 + n) / 8
    expected = UnorderedPair.of(base - Fraction(1, 4), base + Fraction(1, 4))
    return pair == expected
