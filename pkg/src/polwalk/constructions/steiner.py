"""Complete graphs K_S embedded with one Euler walk and triangular faces.

For a prime ``S = 6k + 1`` with ``k`` odd, a valuation of the corners of a
:class:`GluingPolygon` by elements of ``Z/SZ`` is built from Skolem triples;
gluing the polygon along matching side valuations yields K_S whose
non-complete walks are the triples of a Steiner system.  ``S = 9`` is served
from a stored top permutation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from ..core import PolarizedGraph, relabel_vertices, trace_walks
from ..errors import InputError, InternalError
from .polygon import GluingPolygon, gluing_quotient_full

NINE_POINT_SEQUENCE = (19, 11, 23, 6, 21, 15, 20, 7, 13, 10, 16, 5,
                       14, 2, 9, 24, 1, 22, 4, 17, 8, 3, 12, 18)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for p in range(3, math.isqrt(n) + 1, 2):
        if n % p == 0:
            return False
    return True


@dataclass(frozen=True)
class SkolemTriples:
    k: int
    triples: tuple[tuple[int, int, int], ...]

    @property
    def alpha(self) -> tuple[int, ...]:
        return tuple(t[0] for t in self.triples)

    @property
    def beta(self) -> tuple[int, ...]:
        return tuple(t[1] for t in self.triples)

    @property
    def gamma(self) -> tuple[int, ...]:
        return tuple(t[2] for t in self.triples)

    @property
    def sums(self) -> tuple[int, int, int]:
        return sum(self.alpha), sum(self.beta), sum(self.gamma)

    def check(self) -> None:
        k = self.k
        values = [x for t in self.triples for x in t]
        problems = []
        if len(self.triples) != k:
            problems.append("wrong number of triples")
        for j, (a, b, c) in enumerate(self.triples, start=1):
            if a != j or a + b != c:
                problems.append(f"triple {j} malformed")
        if len(set(values)) != 3 * k or not all(1 <= x <= 3 * k + 1 for x in values):
            problems.append("values not distinct in 1..3k+1")
        if any(x + y == 6 * k + 1 for x, y in combinations(values, 2)):
            problems.append("two values sum to 6k+1")
        if len({3 * k, 3 * k + 1} & set(values)) != 1:
            problems.append("must contain exactly one of 3k, 3k+1")
        if problems:
            raise InternalError("; ".join(problems))


def _skolem_pairs(k: int) -> Optional[list[tuple[int, int]]]:
    """Pairs (b_j, c_j) with c_j - b_j = j filling 1..2k+1 minus one hole.

    Positions are filled left to right with the smallest admissible ``j``,
    so the first solution found is the lexicographically smallest sequence.
    """
    top = 2 * k + 1
    hole = top if k % 4 in (0, 1) else 2 * k
    slot = [0] * (top + 2)
    slot[hole] = -1
    pairs: list[Optional[tuple[int, int]]] = [None] * (k + 1)
    used = [False] * (k + 1)

    def place(pos: int) -> bool:
        while pos <= top and slot[pos] != 0:
            pos += 1
        if pos > top:
            return True
        for j in range(1, k + 1):
            if used[j] or pos + j > top or slot[pos + j] != 0:
                continue
            used[j] = True
            slot[pos] = slot[pos + j] = j
            pairs[j] = (pos, pos + j)
            if place(pos + 1):
                return True
            used[j] = False
            slot[pos] = slot[pos + j] = 0
        return False

    if not place(1):
        return None
    return [p for p in pairs[1:]]  # type: ignore[misc]


def skolem_triples(k: int) -> SkolemTriples:
    if k < 1:
        raise InputError("k must be positive")
    pairs = _skolem_pairs(k)
    if pairs is None:
        raise InternalError(f"no Skolem-type sequence found for k={k}")
    triples = tuple((j, b + k, c + k) for j, (b, c) in enumerate(pairs, start=1))
    result = SkolemTriples(k, triples)
    result.check()
    S = 6 * k + 1
    if is_prime(S):
        for total in result.sums:
            if math.gcd(total, S) != 1:
                raise InternalError(f"sum {total} not coprime to {S}")
    return result


@dataclass(frozen=True)
class SteinerSystem:
    S: int
    triples: tuple[tuple[int, int, int], ...]

    def is_valid(self) -> bool:
        if len(self.triples) * 6 != self.S * (self.S - 1):
            return False
        seen = set()
        for t in self.triples:
            if len(set(t)) != 3 or not all(0 <= x < self.S for x in t):
                return False
            for pair in combinations(sorted(t), 2):
                if pair in seen:
                    return False
                seen.add(pair)
        return len(seen) == self.S * (self.S - 1) // 2


def steiner_from_walks(G: PolarizedGraph) -> SteinerSystem:
    """Vertex triples of the length-3 walks of ``G``."""
    tri = []
    for w in trace_walks(G).walks:
        if w.length == 3 and w is not trace_walks(G).complete_walk:
            tri.append(tuple(sorted(G.origin(d) for d in w.darts)))
    return SteinerSystem(G.vertex_count, tuple(sorted(tri)))


@dataclass(frozen=True)
class Valuation:
    """Corner values (mod S) of the glued polygon, 1-based lists with a dummy at 0."""

    S: int
    triples: SkolemTriples
    bottom: tuple[int, ...]
    top: tuple[int, ...]
    polygon: GluingPolygon


def ks_valuation(S: int) -> Valuation:
    """Corner valuation and top permutation for a prime ``S = 6k+1``, ``k`` odd."""
    if not (is_prime(S) and S % 12 == 7):
        raise InputError(f"S={S} is not a prime congruent to 7 mod 12")
    k = (S - 1) // 6
    sk = skolem_triples(k)
    f = k * S
    bottom = [0] * (2 * f + 2)
    for j in range(1, k + 1):
        a, b, _ = sk.triples[j - 1]
        start = 2 * S * (j - 1) + 1
        bottom[start] = 0
        for m in range(start, start + 2 * S):
            bottom[m + 1] = (bottom[m] + (a if m % 2 else b)) % S
    top = [0] * (2 * f + 2)
    for m in range(1, 2 * f + 1):
        j = (m - 1) % k
        a, b, _ = sk.triples[j]
        top[m + 1] = (top[m] + (b if m <= f else a)) % S
    if top[2 * f + 1] != bottom[2 * f + 1]:
        raise InternalError("top and bottom valuations disagree at the right end")
    side_of = {}
    for m in range(1, 2 * f + 1):
        key = (bottom[m], bottom[m + 1])
        if key in side_of:
            raise InternalError(f"oriented value pair {key} repeated on the bottom")
        side_of[key] = m
    seq = []
    for m in range(1, 2 * f + 1):
        key = (top[m], top[m + 1])
        if key not in side_of:
            raise InternalError(f"top side {m} has no matching bottom side")
        seq.append(side_of[key])
    return Valuation(S, sk, tuple(bottom), tuple(top), GluingPolygon(f, tuple(seq)))


def ks_polarization(S: int) -> PolarizedGraph:
    """K_S with an Euler complete walk and triangular remaining walks.

    Admissible ``S``: primes ``S = 12l + 7`` and the stored case ``S = 9``.
    For the primes, vertex ``x`` is the corner class of value ``x``.
    """
    if S == 9:
        q = gluing_quotient_full(GluingPolygon(12, NINE_POINT_SEQUENCE))
        if q.vertex_count != 9:
            raise InternalError("stored sequence no longer glues to 9 vertices")
        return q.graph
    val = ks_valuation(S)
    q = gluing_quotient_full(val.polygon)
    if q.vertex_count != S:
        raise InternalError(f"gluing produced {q.vertex_count} corner classes, expected {S}")
    p = val.polygon
    perm = [-1] * S
    for m in range(1, 2 * p.f + 2):
        for corner, value in ((p.bottom_corner(m), val.bottom[m]), (p.top_corner(m), val.top[m])):
            cls = q.corner_class[corner]
            if perm[cls] not in (-1, value):
                raise InternalError("a corner class carries two values")
            perm[cls] = value
    return relabel_vertices(q.graph, perm)


def admissible_ks(S: int) -> bool:
    return S == 9 or (is_prime(S) and S % 12 == 7)
