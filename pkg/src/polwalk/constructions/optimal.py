"""Ordinary graphs of genus 1..5 with the largest possible average valence.

Genus 1 and 2 come from star blow-ups of the standard monograph followed by
doubling or parallel edges; the cut choices were found by the bounded
searches below and are frozen here.  Genus 3 is K_7 with the three edges of
one triangular walk removed: what is left is K_7 minus a triangle, cut by the
six remaining triangles and one Euler walk.  Genus 4 is K_7; genus 5 is
entered from its list of walks.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator, Optional, Sequence

from ..core import PolarizedGraph, delete_edges, from_vertex_walks, stats, trace_walks
from ..errors import InputError, InternalError, PreconditionError
from ..ops import add_parallel_edge, blow_up_darts, double_edge, subdivide
from .polygon import standard_monograph
from .steiner import ks_polarization

OPTIMAL_VALENCE = {
    1: Fraction(24, 7),
    2: Fraction(13, 3),
    3: Fraction(36, 7),
    4: Fraction(6),
    5: Fraction(25, 4),
}

OPTIMAL_SIZE = {1: (7, 12), 2: (6, 13), 3: (7, 18), 4: (7, 21), 5: (8, 25)}

# Walks of the genus-5 optimum on vertices 1..8: the complete walk, then the
# eight triangles.
GENUS5_WALKS = (
    (1, 2, 3, 7, 8, 5, 6, 3, 8, 2, 1, 5, 4, 6, 2, 7, 1, 3, 4, 8, 1, 4, 2, 5, 7, 6, 1),
    (3, 2, 4, 3), (7, 3, 6, 7), (8, 7, 2, 8), (5, 8, 4, 5),
    (6, 5, 2, 6), (8, 3, 1, 8), (5, 1, 7, 5), (6, 4, 1, 6),
)

# Frozen search results (see search_genus1 and search_genus2).
GENUS1_CUTS = (0, 2, 4)
GENUS2_CUTS = (1, 3, 5, 7, 9)
GENUS2_PAIRS = (0, 2)


# -- star blow-ups -------------------------------------------------------


def _arcs_from_cuts(rotation: Sequence[int], cuts: Sequence[int]) -> list[list[int]]:
    D = len(rotation)
    arcs = []
    for i, c in enumerate(cuts):
        nxt = cuts[(i + 1) % len(cuts)]
        length = (nxt - c) % D or D
        arcs.append([rotation[(c + t) % D] for t in range(length)])
    return arcs


def _arc_ok(G: PolarizedGraph, in_mc: set[int], arc: Sequence[int]) -> bool:
    return arc[0] in in_mc and (arc[-1] ^ 1) in in_mc


def star_blowup(G: PolarizedGraph, cuts: Sequence[int]) -> tuple[PolarizedGraph, list[int]]:
    """Split the rotation of vertex 0 at ``cuts`` and move every arc to its own vertex.

    Returns the graph and the new (spoke) edges in the cyclic order they
    take at vertex 0.
    """
    arcs = _arcs_from_cuts(G.rotation(0), cuts)
    spokes = []
    for arc in arcs:
        r = blow_up_darts(G, 0, arc)
        G = r.graph
        spokes.append(r.new_edges[0])
    return G, spokes


def _cut_choices(G: PolarizedGraph, parts: int) -> Iterator[tuple[int, ...]]:
    in_mc = set(trace_walks(G).complete_walk.darts)
    rot = G.rotation(0)
    for cuts in combinations(range(len(rot)), parts):
        if all(_arc_ok(G, in_mc, arc) for arc in _arcs_from_cuts(rot, cuts)):
            yield cuts


def _genus1_finish(G: PolarizedGraph, spokes: Sequence[int]) -> PolarizedGraph:
    for s in spokes:
        r = double_edge(G, 2 * s)
        G = subdivide(r.graph, r.new_edges[0]).graph
    return G


def _is_target(G: PolarizedGraph, g: int) -> bool:
    st = stats(G)
    return (st.is_ordinary and st.has_mc and st.gamma == g
            and (st.S, st.A) == OPTIMAL_SIZE[g] and st.V == OPTIMAL_VALENCE[g])


def search_genus1() -> tuple[int, ...]:
    """First cut set of the 6-dart vertex of the genus-1 monograph that works."""
    base = standard_monograph(1)
    for cuts in _cut_choices(base, 3):
        G, spokes = star_blowup(base, cuts)
        if _is_target(_genus1_finish(G, spokes), 1):
            return cuts
    raise InternalError("no genus-1 certificate found")


def _genus2_finish(G: PolarizedGraph, spokes: Sequence[int],
                   pairs: Sequence[int]) -> PolarizedGraph:
    n = len(spokes)
    for i in pairs:
        chain = [2 * spokes[i] + 1, 2 * spokes[(i + 1) % n]]
        G = add_parallel_edge(G, chain).graph
    return G


def search_genus2() -> tuple[tuple[int, ...], tuple[int, ...]]:
    """First (cut set, spoke pairs) giving the genus-2 optimum.

    The 12 darts of the genus-2 monograph are split into five arcs; two
    parallel edges then close triangles over pairs of consecutive spokes.
    """
    base = standard_monograph(2)
    for cuts in _cut_choices(base, 5):
        G, spokes = star_blowup(base, cuts)
        for pairs in combinations(range(len(spokes)), 2):
            try:
                H = _genus2_finish(G, spokes, pairs)
            except PreconditionError:
                continue
            if _is_target(H, 2):
                return cuts, pairs
    raise InternalError("no genus-2 certificate found")


# -- polygon gluings ----------------------------------------------------------


def search_polygon(f: int, classes: int) -> Optional[tuple[int, ...]]:
    """First top sequence (lexicographic) gluing to an ordinary graph.

    Returns None when no :class:`GluingPolygon` with ``f`` half-moons glues
    to an ordinary graph on ``classes`` vertices.  This is the case for
    ``f = 6, classes = 7``, which is why genus 3 is built differently.
    Depth-first over top positions with incremental corner merging; a branch
    dies as soon as it has fewer than ``classes`` corner classes, a loop, or
    a repeated pair of endpoints (merging can only make these worse).
    """
    n2 = 2 * f
    # corners: bottom p_1..p_{2f+1} -> 0..2f ; top p'_2..p'_{2f} -> 2f+1..4f-1
    top_index = {1: 0, n2 + 1: n2}
    for m in range(2, n2 + 1):
        top_index[m] = n2 + m - 1
    ncorners = 4 * f
    edges = [(m, m + 1) for m in range(n2)] + [(2 * j, 2 * j + 2) for j in range(f)]

    parent = list(range(ncorners))

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def healthy() -> bool:
        roots = {find(c) for c in range(ncorners)}
        if len(roots) < classes:
            return False
        seen = set()
        for a, b in edges:
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            key = (min(ra, rb), max(ra, rb))
            if key in seen:
                return False
            seen.add(key)
        return True

    seq: list[int] = []
    used = [False] * (n2 + 1)

    def dfs() -> Optional[tuple[int, ...]]:
        m = len(seq) + 1
        if m > n2:
            if len({find(c) for c in range(ncorners)}) == classes:
                return tuple(seq)
            return None
        for k in range(1, n2 + 1):
            if used[k] or (seq and k == seq[-1] + 1):
                continue
            saved = parent[:]
            # top side m carries a_k: p'_m ~ p_k and p'_{m+1} ~ p_{k+1}
            for x, y in ((top_index[m], k - 1), (top_index[m + 1], k)):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
            if healthy():
                used[k] = True
                seq.append(k)
                found = dfs()
                if found:
                    return found
                seq.pop()
                used[k] = False
            parent[:] = saved
        return None

    return dfs()


# -- assembly --------------------------------------------------------------


def _genus1() -> PolarizedGraph:
    G, spokes = star_blowup(standard_monograph(1), GENUS1_CUTS)
    return _genus1_finish(G, spokes)


def _genus2() -> PolarizedGraph:
    G, spokes = star_blowup(standard_monograph(2), GENUS2_CUTS)
    return _genus2_finish(G, spokes, GENUS2_PAIRS)


def _genus3() -> PolarizedGraph:
    K = ks_polarization(7)
    w = trace_walks(K)
    triangle = next(walk for i, walk in enumerate(w.walks) if i != w.complete_index)
    G, _ = delete_edges(K, [d >> 1 for d in triangle.darts])
    return G


def _genus5() -> PolarizedGraph:
    return from_vertex_walks(8, GENUS5_WALKS, base=1)


_BUILDERS: dict[int, Callable[[], PolarizedGraph]] = {
    1: _genus1, 2: _genus2, 3: _genus3, 4: lambda: ks_polarization(7), 5: _genus5,
}


def genus_optimal(g: int) -> PolarizedGraph:
    """Ordinary genus-``g`` graph with a complete walk and maximal valence, ``g`` in 1..5."""
    if g not in _BUILDERS:
        raise InputError("genus_optimal is available for g = 1..5 only")
    G = _BUILDERS[g]()
    if not _is_target(G, g):
        raise InternalError(f"genus-{g} certificate does not reach its target")
    return G
