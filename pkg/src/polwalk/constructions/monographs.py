"""Graphs assembled from the 4g-gon monograph by surgeries."""

from __future__ import annotations

from ..core import PolarizedGraph, trace_walks
from ..errors import InputError
from ..ops import add_parallel_edge, blow_up_darts, subdivide
from .polygon import monograph_4g_gon, standard_monograph


def homotopic_optimal(S: int, g: int) -> PolarizedGraph:
    """Homotopic graph with ``S`` vertices, genus ``g`` and the most edges.

    Start from the single-walk 4g-gon monograph, cut ``a_1`` into ``S'``
    segments (``S'`` the largest odd number <= ``S``), lay a parallel edge
    over each pair of consecutive segments (the last pair uses the final
    segment followed by ``b_1``), lay ``d_k`` over ``a_{k+1} b_{k+1}`` for
    ``k < g``, and subdivide once more when ``S`` is even.  The result has
    ``3g + floor(3(S-1)/2)`` edges.
    """
    if S < 1 or g < 1:
        raise InputError("S and g must be positive")
    odd = S if S % 2 else S - 1
    G = monograph_4g_gon(g)
    a = [2 * (j - 1) for j in range(1, g + 1)]
    b = [2 * j - 1 for j in range(1, g + 1)]
    segments = [a[0]]
    for _ in range(odd - 1):
        r = subdivide(G, segments[-1])
        G = r.graph
        segments.append(r.new_edges[0])
    path = segments + [b[0]]
    for j in range(0, odd, 2):
        G = add_parallel_edge(G, [2 * path[j], 2 * path[j + 1]]).graph
    for k in range(1, g):
        G = add_parallel_edge(G, [2 * a[k], 2 * b[k]]).graph
    if S % 2 == 0:
        G = subdivide(G, 0).graph
    return G


def corner_arcs(G: PolarizedGraph, v: int = 0) -> list[list[int]]:
    """Pairs ``[reverse(x), tau(x)]`` at ``v`` for darts ``x`` on non-complete walks."""
    w = trace_walks(G)
    arcs = []
    for i, walk in enumerate(w.walks):
        if i == w.complete_index:
            continue
        for x in walk.darts:
            if G.head(x) == v:
                arcs.append([x ^ 1, G.tau(x)])
    return arcs


def lower_bound_graph(g: int) -> PolarizedGraph:
    """Star blow-up of the standard monograph: ``3g + 1`` vertices, ``6g`` edges.

    Every corner of the ``g`` triangular walks at the single vertex is split
    off by an elementary blow-up.  The centre keeps only the ``3g`` new edges;
    each outer vertex has degree 3 and the triangles survive.
    """
    if g < 1:
        raise InputError("g must be at least 1")
    G = standard_monograph(g)
    for arc in corner_arcs(G):
        G = blow_up_darts(G, 0, arc).graph
    return G
