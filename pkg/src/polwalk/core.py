"""Polarized graphs (rotation systems) and their left walks.

Darts are plain integers: edge ``e`` owns darts ``2*e`` (written ``e+``) and
``2*e + 1`` (written ``e-``), so the reverse of a dart is ``d ^ 1``.  A
polarization is stored as a successor array over darts (next dart around the
common origin) plus the origin map.

The left-walk map sends a dart ``d`` arriving at ``p`` to the dart that
follows ``reverse(d)`` in the cyclic order at ``p``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .errors import InputError, NotAPolarizationError, PreconditionError, StructuralError

Dart = int


def dart(edge: int, side: int = 0) -> Dart:
    return 2 * edge + side


def edge_of(d: Dart) -> int:
    return d >> 1


def side_of(d: Dart) -> int:
    return d & 1


def reverse(d: Dart) -> Dart:
    return d ^ 1


def format_dart(d: Dart) -> str:
    return f"{d >> 1}{'-' if d & 1 else '+'}"


def parse_dart(token: str) -> Dart:
    """Parse ``"3+"``, ``"3-"`` or a bare dart id such as ``"7"``."""
    token = token.strip()
    try:
        if token.endswith("+"):
            return dart(int(token[:-1]), 0)
        if token.endswith("-") and len(token) > 1:
            return dart(int(token[:-1]), 1)
        value = int(token)
    except ValueError:
        raise InputError(f"bad dart {token!r}") from None
    if value < 0:
        raise InputError(f"bad dart {token!r}")
    return value


def _normalized(cycle: Sequence[int]) -> tuple[int, ...]:
    if not cycle:
        return ()
    i = min(range(len(cycle)), key=cycle.__getitem__)
    return tuple(cycle[i:]) + tuple(cycle[:i])


class PolarizedGraph:
    """A finite multigraph (loops allowed) with a cyclic order at each vertex.

    Parameters
    ----------
    vertex_count : int
        Number of vertices ``S``; vertices are ``0 .. S-1``.
    rotations : sequence of sequences of int
        ``rotations[v]`` lists the darts leaving ``v`` in cyclic order.  Every
        dart ``0 .. 2A-1`` must occur exactly once overall.

    Instances are immutable; all operations build new graphs.
    """

    __slots__ = ("_n", "_rot", "_succ", "_origin", "_walks", "_hash")

    def __init__(self, vertex_count: int, rotations: Sequence[Sequence[int]]):
        if vertex_count < 1:
            raise InputError("a polarized graph needs at least one vertex")
        if len(rotations) != vertex_count:
            raise InputError(
                f"expected {vertex_count} rotations, got {len(rotations)}")
        total = sum(len(r) for r in rotations)
        if total % 2:
            raise InputError("odd number of darts")
        origin = [-1] * total
        succ = [-1] * total
        rot = []
        for v, cycle in enumerate(rotations):
            cycle = [int(x) for x in cycle]
            for x in cycle:
                if not 0 <= x < total:
                    raise InputError(f"dart {x} out of range 0..{total - 1}")
                if origin[x] != -1:
                    raise InputError(f"dart {format_dart(x)} listed twice")
                origin[x] = v
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                succ[a] = b
            rot.append(_normalized(cycle))
        self._n = vertex_count
        self._rot = tuple(rot)
        self._succ = tuple(succ)
        self._origin = tuple(origin)
        self._walks = None
        self._hash = None

    # -- basic accessors -------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._succ) // 2

    @property
    def dart_count(self) -> int:
        return len(self._succ)

    @property
    def rotations(self) -> tuple[tuple[int, ...], ...]:
        return self._rot

    def rotation(self, v: int) -> tuple[int, ...]:
        """Cyclic order at ``v``, normalized to start at its smallest dart."""
        self._check_vertex(v)
        return self._rot[v]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise InputError(f"unknown vertex {v}")

    def _check_dart(self, d: Dart) -> None:
        if not 0 <= d < len(self._succ):
            raise InputError(f"unknown dart {d}")

    def origin(self, d: Dart) -> int:
        self._check_dart(d)
        return self._origin[d]

    def head(self, d: Dart) -> int:
        self._check_dart(d)
        return self._origin[d ^ 1]

    def succ(self, d: Dart) -> Dart:
        """Next dart after ``d`` in the cyclic order at its origin."""
        self._check_dart(d)
        return self._succ[d]

    def tau(self, d: Dart) -> Dart:
        self._check_dart(d)
        return self._succ[d ^ 1]

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.origin(2 * e), self.origin(2 * e + 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._rot[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self._rot)

    def is_loop(self, e: int) -> bool:
        u, w = self.endpoints(e)
        return u == w

    def neighbors(self, v: int) -> set[int]:
        """Distinct vertices other than ``v`` joined to ``v`` by an edge."""
        return {self._origin[x ^ 1] for x in self.rotation(v)} - {v}

    def successor_array(self) -> tuple[int, ...]:
        return self._succ

    def origin_array(self) -> tuple[int, ...]:
        return self._origin

    def is_connected(self) -> bool:
        if self._n == 1:
            return True
        seen = {0}
        todo = [0]
        while todo:
            v = todo.pop()
            for x in self._rot[v]:
                w = self._origin[x ^ 1]
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == self._n

    def underlying_edges(self) -> list[tuple[int, int]]:
        """Edge list ``[(origin(e+), origin(e-)), ...]`` indexed by edge id."""
        return [(self._origin[2 * e], self._origin[2 * e + 1])
                for e in range(self.edge_count)]

    # -- identity --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolarizedGraph):
            return NotImplemented
        return self._n == other._n and self._rot == other._rot

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._rot))
        return self._hash

    def __repr__(self) -> str:
        return (f"PolarizedGraph(S={self._n}, A={self.edge_count}, "
                f"rotations={[list(r) for r in self._rot]})")


def tau(G: PolarizedGraph, d: Dart) -> Dart:
    """Left-walk successor of ``d``."""
    return G.tau(d)


@dataclass(frozen=True)
class Walk:
    """A left walk, stored from its smallest dart."""

    darts: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.darts)

    def edges(self) -> set[int]:
        return {d >> 1 for d in self.darts}

    def itinerary(self, G: PolarizedGraph) -> list[int]:
        """Vertices visited, closing back at the start (length + 1 entries)."""
        seq = [G.origin(d) for d in self.darts]
        return seq + seq[:1]


@dataclass(frozen=True)
class WalkDecomposition:
    walks: tuple[Walk, ...]
    complete_index: Optional[int]

    @property
    def complete_walk(self) -> Optional[Walk]:
        if self.complete_index is None:
            return None
        return self.walks[self.complete_index]

    def walk_of(self) -> dict[int, int]:
        """Map each dart to the index of its walk."""
        return {d: i for i, w in enumerate(self.walks) for d in w.darts}


def _require_connected(G: PolarizedGraph) -> None:
    if not G.is_connected():
        raise StructuralError("the graph is disconnected")


def trace_walks(G: PolarizedGraph) -> WalkDecomposition:
    """Partition the darts of ``G`` into left walks.

    Walks come out sorted by their smallest dart; the first walk covering
    every edge is designated the complete walk.
    """
    if G._walks is not None:
        return G._walks
    _require_connected(G)
    succ = G.successor_array()
    n = len(succ)
    A = n // 2
    seen = bytearray(n)
    walks = []
    complete = None
    for start in range(n):
        if seen[start]:
            continue
        orbit = []
        d = start
        while not seen[d]:
            seen[d] = 1
            orbit.append(d)
            d = succ[d ^ 1]
        if complete is None and len({x >> 1 for x in orbit}) == A:
            complete = len(walks)
        walks.append(Walk(tuple(orbit)))
    result = WalkDecomposition(tuple(walks), complete)
    G._walks = result
    return result


@dataclass(frozen=True)
class CompleteWalkSearch:
    walk: Optional[Walk]
    steps: int


def find_complete_walk(G: PolarizedGraph) -> CompleteWalkSearch:
    """Decide whether ``G`` has a complete walk by tracing two orbits only.

    Every complete walk passes through edge 0, so it suffices to follow the
    orbits of ``0+`` and ``0-``.  ``steps`` counts applications of the
    left-walk map; it never exceeds ``2A``.
    """
    if G.edge_count == 0:
        raise PreconditionError("the graph has no edges")
    _require_connected(G)
    succ = G.successor_array()
    A = G.edge_count
    steps = 0
    found = None
    first_orbit: set[int] = set()
    for start in (0, 1):
        if start in first_orbit:
            continue
        orbit = [start]
        d = succ[start ^ 1]
        steps += 1
        while d != start:
            orbit.append(d)
            d = succ[d ^ 1]
            steps += 1
        if start == 0:
            first_orbit = set(orbit)
        if found is None and len({x >> 1 for x in orbit}) == A:
            i = min(range(len(orbit)), key=orbit.__getitem__)
            found = Walk(tuple(orbit[i:] + orbit[:i]))
    return CompleteWalkSearch(found, steps)


def has_complete_walk(G: PolarizedGraph) -> bool:
    return find_complete_walk(G).walk is not None


def reduced_valences(G: PolarizedGraph) -> tuple[int, ...]:
    """Number of distinct neighbours of each vertex (loops ignored)."""
    return tuple(len(G.neighbors(v)) for v in range(G.vertex_count))


def reduced_edge_count(G: PolarizedGraph) -> int:
    pairs = {(min(u, w), max(u, w)) for u, w in G.underlying_edges() if u != w}
    return len(pairs)


def is_ordinary(G: PolarizedGraph) -> bool:
    seen = set()
    for u, w in G.underlying_edges():
        if u == w:
            return False
        key = (min(u, w), max(u, w))
        if key in seen:
            return False
        seen.add(key)
    return True


@dataclass(frozen=True)
class GraphStats:
    S: int
    A: int
    A_r: int
    F: int
    chi: int
    gamma: int
    V: Fraction
    V_r: Fraction
    ell: Mapping[int, int]
    parity: int
    is_ordinary: bool
    satisfies_C: bool
    has_mc: bool
    degrees: tuple[int, ...] = field(default=())
    reduced_degrees: tuple[int, ...] = field(default=())
    mc_length: Optional[int] = None


def stats(G: PolarizedGraph, w: Optional[WalkDecomposition] = None) -> GraphStats:
    if w is None:
        w = trace_walks(G)
    S, A, F = G.vertex_count, G.edge_count, len(w.walks)
    if A == 0:
        raise InputError("graphs without edges are not supported")
    chi = S - A + F
    ell = Counter(walk.length for walk in w.walks)
    mc = w.complete_walk
    return GraphStats(
        S=S, A=A, A_r=reduced_edge_count(G), F=F, chi=chi,
        gamma=1 - chi // 2,
        V=Fraction(2 * A, S), V_r=Fraction(2 * reduced_edge_count(G), S),
        ell=dict(sorted(ell.items())), parity=S % 2,
        is_ordinary=is_ordinary(G),
        satisfies_C=ell.get(1, 0) == 0 and ell.get(2, 0) == 0,
        has_mc=mc is not None,
        degrees=G.degrees(), reduced_degrees=reduced_valences(G),
        mc_length=None if mc is None else mc.length,
    )


def genus(G: PolarizedGraph) -> int:
    return stats(G).gamma


# -- building graphs from faces ------------------------------------------


def from_faces(S: int, faces: Sequence[Sequence[int]],
               origin: Sequence[int] | Mapping[int, int]) -> PolarizedGraph:
    """Rebuild the polarization whose left walks are ``faces``.

    ``origin[d]`` declares the origin vertex of every dart.  The cyclic order
    is recovered from ``succ(reverse(d)) = next(d)``; each vertex must end up
    with a single cycle.
    """
    darts = [d for face in faces for d in face]
    n = len(darts)
    if n == 0 or n % 2:
        raise InputError("faces must use an even, positive number of darts")
    if sorted(darts) != list(range(n)):
        counts = Counter(darts)
        dup = sorted(d for d, c in counts.items() if c > 1)
        missing = sorted(set(range(n)) - set(counts))
        raise InputError(f"faces must use each dart once (duplicated {dup[:5]}, "
                         f"missing {missing[:5]})")
    org = [origin[d] for d in range(n)]
    for v in org:
        if not 0 <= v < S:
            raise InputError(f"origin {v} outside 0..{S - 1}")
    succ = [-1] * n
    for face in faces:
        if not face:
            raise InputError("empty face")
        for a, b in zip(face, list(face[1:]) + [face[0]]):
            if org[b] != org[a ^ 1]:
                raise InputError(
                    f"dart {format_dart(b)} cannot follow {format_dart(a)}: "
                    f"it leaves {org[b]}, not {org[a ^ 1]}")
            succ[a ^ 1] = b
    by_vertex: list[list[int]] = [[] for _ in range(S)]
    for d in range(n):
        by_vertex[org[d]].append(d)
    rotations = []
    for v, ds in enumerate(by_vertex):
        if not ds:
            rotations.append([])
            continue
        cycle = [ds[0]]
        x = succ[ds[0]]
        while x != ds[0]:
            cycle.append(x)
            x = succ[x]
        if len(cycle) != len(ds):
            raise NotAPolarizationError(
                f"vertex {v}: induced permutation of its {len(ds)} darts "
                f"is not a single cycle")
        rotations.append(cycle)
    return PolarizedGraph(S, rotations)


def from_vertex_walks(S: int, walks: Iterable[Sequence[int]], base: int = 0) -> PolarizedGraph:
    """Build an ordinary polarized graph from closed walks given as vertices.

    Each walk is a vertex sequence (the closing repetition of the first vertex
    is optional).  Every pair ``{u, w}`` that occurs must occur once in each
    direction.  Edge ids follow the sorted order of the pairs; ``e+`` runs from
    the smaller vertex to the larger.  ``base`` is subtracted from every label.
    """
    cycles = []
    for walk in walks:
        seq = [v - base for v in walk]
        if len(seq) > 1 and seq[0] == seq[-1]:
            seq = seq[:-1]
        if len(seq) < 2:
            raise InputError("each walk needs at least two vertices")
        cycles.append(seq)
    steps = [(seq[i], seq[(i + 1) % len(seq)]) for seq in cycles for i in range(len(seq))]
    if len(set(steps)) != len(steps):
        raise InputError("a directed step occurs twice")
    pairs = sorted({(min(u, w), max(u, w)) for u, w in steps})
    for u, w in pairs:
        if u == w:
            raise InputError("loops cannot be described by vertex walks")
        if (u, w) not in steps or (w, u) not in steps:
            raise InputError(f"pair {{{u + base}, {w + base}}} not used in both directions")
    index = {p: e for e, p in enumerate(pairs)}

    def to_dart(u: int, w: int) -> int:
        return 2 * index[(min(u, w), max(u, w))] + (0 if u < w else 1)

    faces = [[to_dart(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))]
             for seq in cycles]
    origin = [0] * (2 * len(pairs))
    for e, (u, w) in enumerate(pairs):
        origin[2 * e], origin[2 * e + 1] = u, w
    return from_faces(S, faces, origin)


# -- edits used by several modules -----------------------------------------


def relabel_vertices(G: PolarizedGraph, perm: Sequence[int]) -> PolarizedGraph:
    """Return the graph where old vertex ``v`` becomes ``perm[v]``."""
    if sorted(perm) != list(range(G.vertex_count)):
        raise InputError("not a permutation of the vertices")
    rot: list[tuple[int, ...]] = [()] * G.vertex_count
    for v, r in enumerate(G.rotations):
        rot[perm[v]] = r
    return PolarizedGraph(G.vertex_count, rot)


def delete_edges(G: PolarizedGraph, edges: Iterable[int]) -> tuple[PolarizedGraph, dict[int, int]]:
    """Remove edges (keeping every vertex); return the graph and old->new edge ids."""
    gone = set(edges)
    keep = [e for e in range(G.edge_count) if e not in gone]
    new_id = {e: i for i, e in enumerate(keep)}
    rot = []
    for r in G.rotations:
        rot.append([2 * new_id[x >> 1] + (x & 1) for x in r if (x >> 1) not in gone])
    return PolarizedGraph(G.vertex_count, rot), new_id


def reduce_to_condition_C(G: PolarizedGraph) -> PolarizedGraph:
    """Delete edges until no left walk has length 1 or 2.

    A walk of length 1 is a loop bounding a disk: its edge goes.  A walk of
    length 2 is a bigon: the edge with the larger id goes, its twin keeps the
    adjacency.  The other dart of a deleted edge always lies on the complete
    walk, so the two walks merge, which keeps the genus, the vertex set, every
    vertex's set of neighbours and the complete walk.
    """
    if G.vertex_count < 3:
        raise PreconditionError("reduction needs at least three vertices")
    if trace_walks(G).complete_walk is None:
        raise PreconditionError("reduction needs a complete walk")
    while True:
        w = trace_walks(G)
        short = [walk for walk in w.walks if walk.length <= 2]
        if not short:
            return G
        short.sort(key=lambda walk: (walk.length, walk.darts[0]))
        victim = max(d >> 1 for d in short[0].darts)
        G, _ = delete_edges(G, [victim])


# -- isomorphism ---------------------------------------------------------


def _code_from(G: PolarizedGraph, start: int) -> tuple[int, ...]:
    succ = G.successor_array()
    label = {start: 0}
    order = [start]
    i = 0
    code = []
    while i < len(order):
        d = order[i]
        for nxt in (d ^ 1, succ[d]):
            if nxt not in label:
                label[nxt] = len(order)
                order.append(nxt)
        code.append(label[d ^ 1])
        code.append(label[succ[d]])
        i += 1
    return tuple(code)


def canonical_code(G: PolarizedGraph) -> tuple:
    """Orientation-preserving isomorphism invariant of a connected graph.

    Two connected polarized graphs are isomorphic (by a relabelling of
    vertices and darts that respects reversal and cyclic orders) exactly when
    their codes agree.
    """
    _require_connected(G)
    best = min(_code_from(G, s) for s in range(G.dart_count))
    return (G.vertex_count, best)


def is_isomorphic(G: PolarizedGraph, H: PolarizedGraph) -> bool:
    if (G.vertex_count, G.edge_count) != (H.vertex_count, H.edge_count):
        return False
    if sorted(G.degrees()) != sorted(H.degrees()):
        return False
    if G.edge_count == 0:
        return G.vertex_count == 1
    target = _code_from(G, 0)
    return any(_code_from(H, s) == target for s in range(H.dart_count))
