"""A graph of every genus with large reduced valence, by connected sums.

Leaves are the complete graphs ``K_S`` (``S`` prime, ``S = 7 mod 12``, genus
``(S-1)(S-3)/6``) and small base cases.  Any other genus ``g`` is the sum of
the largest leaf genus ``g' < g`` and the graph for ``g - g'``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional

from ..core import PolarizedGraph, reduced_edge_count
from ..errors import InputError
from ..ops import connected_sum
from .monographs import lower_bound_graph
from .optimal import genus_optimal
from .steiner import is_prime, ks_polarization

DEFAULT_BASE = 5


def complete_leaf_genera(limit: int) -> list[tuple[int, int]]:
    """Pairs ``(genus, S)`` of the K_S leaves with genus <= ``limit``."""
    out = []
    S = 7
    while (S - 1) * (S - 3) // 6 <= limit:
        if is_prime(S):
            out.append(((S - 1) * (S - 3) // 6, S))
        S += 12
    return out


def leaf_vertex_count(g: int) -> Optional[int]:
    """``S`` if ``g`` is a K_S leaf genus, else None."""
    # (S-1)(S-3) = 6g  <=>  S = 2 + sqrt(6g + 1)
    r = math.isqrt(6 * g + 1)
    if r * r != 6 * g + 1:
        return None
    S = 2 + r
    if S % 12 == 7 and is_prime(S):
        return S
    return None


@dataclass(frozen=True)
class FamilyRecipe:
    genus: int
    kind: str  # "complete", "optimal", "star" or "sum"
    S: Optional[int] = None
    children: tuple["FamilyRecipe", ...] = field(default=())

    def leaves(self) -> list["FamilyRecipe"]:
        if not self.children:
            return [self]
        return [leaf for c in self.children for leaf in c.leaves()]

    def as_dict(self) -> dict:
        d: dict = {"genus": self.genus, "kind": self.kind}
        if self.S is not None:
            d["S"] = self.S
        if self.children:
            d["children"] = [c.as_dict() for c in self.children]
        return d


def family_recipe(g: int, base: int = DEFAULT_BASE) -> FamilyRecipe:
    if g < 1:
        raise InputError("genus must be at least 1")
    S = leaf_vertex_count(g)
    if S is not None:
        return FamilyRecipe(g, "complete", S=S)
    if g <= 5:
        return FamilyRecipe(g, "optimal")
    if g <= base:
        return FamilyRecipe(g, "star")
    g1 = max(h for h, _ in complete_leaf_genera(g - 1))
    return FamilyRecipe(g, "sum", children=(family_recipe(g1, base), family_recipe(g - g1, base)))


@lru_cache(maxsize=None)
def _build(g: int, base: int) -> PolarizedGraph:
    r = family_recipe(g, base)
    if r.kind == "complete":
        return ks_polarization(r.S)
    if r.kind == "optimal":
        return genus_optimal(g)
    if r.kind == "star":
        return lower_bound_graph(g)
    left, right = r.children
    return connected_sum(_build(left.genus, base), 0, _build(right.genus, base), 0).graph


def asymptotic_family(g: int, base: int = DEFAULT_BASE) -> tuple[PolarizedGraph, FamilyRecipe]:
    """Graph of genus ``g`` from the recursive family and its recipe tree.

    Genera up to ``base`` that are not leaves use the genus-optimal graphs
    (``g <= 5``) or the star graphs; ``base = 5`` uses no star graph at all.
    """
    return _build(g, base), family_recipe(g, base)


@dataclass(frozen=True)
class FamilyFit:
    D: float
    D_prime: float
    worst_ratio: float
    worst_ratio_genus: int


def reduced_valence(G: PolarizedGraph) -> Fraction:
    return Fraction(2 * reduced_edge_count(G), G.vertex_count)


def _round_up(x: float, digits: int = 6) -> float:
    scale = 10 ** digits
    return math.ceil(x * scale) / scale


def fit_constants(samples: Iterable[tuple[int, int, Fraction]]) -> FamilyFit:
    """Smallest (rounded up) ``D``, ``D'`` for ``S <= D sqrt(g)`` and
    ``V_r >= sqrt(6g) - D' g^(9/20)`` over ``(g, S, V_r)`` samples."""
    D = 0.0
    Dp = 0.0
    worst = (math.inf, 0)
    for g, S, Vr in samples:
        D = max(D, S / math.sqrt(g))
        Dp = max(Dp, (math.sqrt(6 * g) - float(Vr)) / g ** 0.45)
        worst = min(worst, (float(Vr) / math.sqrt(6 * g), g))
    return FamilyFit(_round_up(D), _round_up(Dp), worst[0], worst[1])
