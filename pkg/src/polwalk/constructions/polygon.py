"""Quotients of polygons with paired sides and non-crossing diagonals.

A polygon is given by its sides in counter-clockwise order, each labelled
``(edge, sign)``: sign ``+1`` means the side runs along the edge's positive
direction, ``-1`` against it.  Each label occurs twice with opposite signs,
so the gluing is orientable.  Diagonals join two corners; they cut the
polygon into regions which become the faces of the quotient graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..core import PolarizedGraph, from_faces, trace_walks
from ..errors import InputError


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class PolygonQuotient:
    graph: PolarizedGraph
    corner_class: tuple[int, ...]  # quotient vertex of each polygon corner
    diagonal_edges: tuple[int, ...]  # quotient edge id of each diagonal

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count


def _crosses(a: tuple[int, int], b: tuple[int, int], n: int) -> bool:
    i, j = sorted(a)
    k, l = sorted(b)
    if len({i, j, k, l}) < 4:
        return False
    return (i < k < j) != (i < l < j)


def polygon_regions(n: int, chords: Sequence[tuple[int, int]]) -> list[list[tuple[int, int]]]:
    """Regions of a convex ``n``-gon cut by chords, as counter-clockwise corner steps.

    Each region is a list of ``(from_corner, to_corner)`` steps.
    """
    adj: dict[int, set[int]] = {c: {(c + 1) % n, (c - 1) % n} for c in range(n)}
    for a, b in chords:
        if not (0 <= a < n and 0 <= b < n) or a == b:
            raise InputError(f"bad diagonal {(a, b)}")
        if (b - a) % n in (1, n - 1):
            raise InputError(f"diagonal {(a, b)} joins adjacent corners")
        if b in adj[a]:
            raise InputError(f"diagonal {(a, b)} repeated")
        adj[a].add(b)
        adj[b].add(a)
    for x in range(len(chords)):
        for y in range(x):
            if _crosses(chords[x], chords[y], n):
                raise InputError("diagonals cross")
    # Walking a region counter-clockwise, at corner y coming from x we leave
    # towards the neighbour just clockwise of x as seen from y.
    order = {c: sorted(adj[c], key=lambda z: (z - c) % n) for c in range(n)}
    seen = set()
    regions = []
    for start in [(c, (c + 1) % n) for c in range(n)] + [(a, b) for a, b in chords] + \
            [(b, a) for a, b in chords]:
        if start in seen:
            continue
        region = []
        step = start
        while step not in seen:
            seen.add(step)
            region.append(step)
            x, y = step
            ring = order[y]
            z = ring[ring.index(x) - 1]
            step = (y, z)
        regions.append(region)
    return regions


def polygon_quotient(sides: Sequence[tuple[int, int]],
                     chords: Sequence[tuple[int, int]] = ()) -> PolygonQuotient:
    """Glue a polygon and return the induced polarized graph.

    Side ``k`` runs from corner ``k`` to corner ``k+1``.  Side labels must be
    ``0 .. L-1``; diagonal ``i`` becomes edge ``L + i`` oriented from its first
    corner to its second.  Quotient vertices are numbered by their smallest
    corner.
    """
    n = len(sides)
    labels = sorted({lab for lab, _ in sides})
    L = len(labels)
    if labels != list(range(L)):
        raise InputError("side labels must be 0..L-1")
    occ: dict[int, list[tuple[int, int]]] = {lab: [] for lab in labels}
    for k, (lab, sign) in enumerate(sides):
        if sign not in (1, -1):
            raise InputError("side signs must be +1 or -1")
        occ[lab].append((k, sign))
    uf = _UnionFind(n)
    for lab, pair in occ.items():
        if len(pair) != 2 or {s for _, s in pair} != {1, -1}:
            raise InputError(f"edge {lab} must label one positive and one negative side")
        (kp, _), (km, _) = sorted(pair, key=lambda t: -t[1])
        uf.union(kp, (km + 1) % n)
        uf.union((kp + 1) % n, km)
    roots = {}
    corner_class = []
    for c in range(n):
        r = uf.find(c)
        if r not in roots:
            roots[r] = len(roots)
        corner_class.append(roots[r])
    S = len(roots)

    dart_of: dict[tuple[int, int], int] = {}
    for k, (lab, sign) in enumerate(sides):
        dart_of[(k, (k + 1) % n)] = 2 * lab + (0 if sign == 1 else 1)
    for i, (a, b) in enumerate(chords):
        dart_of[(a, b)] = 2 * (L + i)
        dart_of[(b, a)] = 2 * (L + i) + 1
    total = 2 * (L + len(chords))
    origin = [0] * total
    for (a, _), d in dart_of.items():
        origin[d] = corner_class[a]
    faces = []
    for region in polygon_regions(n, chords):
        if all((b - a) % n == n - 1 for a, b in region):
            continue  # the outside of the polygon
        faces.append([dart_of[step] for step in region])
    G = from_faces(S, faces, origin)
    return PolygonQuotient(G, tuple(corner_class), tuple(range(L, L + len(chords))))


def monograph_sides(g: int) -> list[tuple[int, int]]:
    """Sides ``a1 b1 .. ag bg, then a1 b1 .. ag bg reversed`` of the 4g-gon.

    Edge ``2(j-1)`` is ``a_j`` and edge ``2j-1`` is ``b_j``.
    """
    first = [(i, 1) for i in range(2 * g)]
    return first + [(i, -1) for i in range(2 * g)]


def monograph_4g_gon(g: int) -> PolarizedGraph:
    """One vertex, ``2g`` loops, a single walk; genus ``g``."""
    if g < 1:
        raise InputError("g must be at least 1")
    return polygon_quotient(monograph_sides(g)).graph


def standard_monograph(g: int) -> PolarizedGraph:
    """The 4g-gon monograph with a diagonal cutting off each ``a_j b_j``.

    One vertex and ``3g`` loops; ``g`` triangular walks plus a complete walk
    of length ``3g``.  Diagonal ``d_j`` is edge ``2g + j - 1``.
    """
    if g < 1:
        raise InputError("g must be at least 1")
    chords = [(2 * j, 2 * j + 2) for j in range(g)]
    return polygon_quotient(monograph_sides(g), chords).graph


@dataclass(frozen=True)
class GluingPolygon:
    """Polygon with ``f`` half-moons on the bottom and a permuted top.

    Bottom corners ``p_1 .. p_{2f+1}``; side ``a_m`` runs from ``p_m`` to
    ``p_{m+1}`` and diagonal ``d_j`` from ``p_{2j-1}`` to ``p_{2j+1}``.  The
    top, read left to right, carries the reversed sides ``seq[1], .., seq[2f]``
    (``seq`` is 1-based in this description and stored as a tuple).
    """

    f: int
    seq: tuple[int, ...]

    def __post_init__(self):
        if self.f < 1:
            raise InputError("f must be positive")
        if sorted(self.seq) != list(range(1, 2 * self.f + 1)):
            raise InputError("seq must be a permutation of 1..2f")
        for a, b in zip(self.seq, self.seq[1:]):
            if b == a + 1:
                raise InputError(f"consecutive sides {a}, {b} on the top")

    def sides(self) -> list[tuple[int, int]]:
        """Counter-clockwise sides; edge ``m - 1`` is ``a_m``."""
        f2 = 2 * self.f
        bottom = [(m, 1) for m in range(f2)]
        top = [(self.seq[pos] - 1, -1) for pos in range(f2 - 1, -1, -1)]
        return bottom + top

    def chords(self) -> list[tuple[int, int]]:
        return [(2 * j, 2 * j + 2) for j in range(self.f)]

    def bottom_corner(self, m: int) -> int:
        """Polygon corner index of ``p_m`` (1-based)."""
        return m - 1

    def top_corner(self, m: int) -> int:
        """Polygon corner index of ``p'_m`` (1-based); ends are shared."""
        f2 = 2 * self.f
        if m == 1:
            return 0
        return 2 * f2 + 1 - m  # m = 2f+1 gives corner 2f


def gluing_quotient(p: GluingPolygon) -> tuple[PolarizedGraph, int]:
    q = polygon_quotient(p.sides(), p.chords())
    return q.graph, q.vertex_count


def gluing_quotient_full(p: GluingPolygon) -> PolygonQuotient:
    return polygon_quotient(p.sides(), p.chords())


def half_moon_walks(G: PolarizedGraph) -> list:
    """Walks of length 3 (the triangles cut off by the diagonals)."""
    return [w for w in trace_walks(G).walks if w.length == 3]
