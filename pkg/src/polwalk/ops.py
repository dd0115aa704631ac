"""Surgeries on polarized graphs.

Every operation is pure: it returns an :class:`OpResult` holding the new graph
and how old edges and vertices were renumbered.  Operations that need the
complete walk (MC) compute it from the input and refuse to run without one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .core import PolarizedGraph, format_dart, trace_walks
from .errors import InputError, PreconditionError


@dataclass(frozen=True)
class OpResult:
    graph: PolarizedGraph
    edge_map: dict[int, int]
    vertex_map: dict[int, int]
    new_edges: tuple[int, ...] = ()
    new_vertices: tuple[int, ...] = ()
    extra: dict = field(default_factory=dict)

    def dart(self, d: int) -> int:
        """Image of an old dart in the new graph."""
        return 2 * self.edge_map[d >> 1] + (d & 1)


def _identity(n: int) -> dict[int, int]:
    return {i: i for i in range(n)}


def _mc_darts(G: PolarizedGraph) -> tuple[set[int], tuple[int, ...]]:
    mc = trace_walks(G).complete_walk
    if mc is None:
        raise PreconditionError("the graph has no complete walk")
    return set(mc.darts), mc.darts


def _check_edge(G: PolarizedGraph, e: int) -> None:
    if not 0 <= e < G.edge_count:
        raise InputError(f"unknown edge {e}")


def _check_dart(G: PolarizedGraph, d: int) -> None:
    if not 0 <= d < G.dart_count:
        raise InputError(f"unknown dart {d}")


def _rotation_lists(G: PolarizedGraph) -> list[list[int]]:
    return [list(r) for r in G.rotations]


def _insert_after(cycle: list[int], anchor: int, items: Sequence[int]) -> None:
    i = cycle.index(anchor)
    cycle[i + 1:i + 1] = list(items)


def _insert_before(cycle: list[int], anchor: int, items: Sequence[int]) -> None:
    i = cycle.index(anchor)
    cycle[i:i] = list(items)


def contract_edge(G: PolarizedGraph, e: int) -> OpResult:
    """Contract the non-loop edge ``e`` into its origin ``u = origin(e+)``.

    The cyclic order of the other endpoint ``w``, read after ``e-``, replaces
    ``e+`` at ``u``.  Faces are preserved (walks through ``e`` shorten).
    """
    _check_edge(G, e)
    x = 2 * e
    u, w = G.origin(x), G.origin(x + 1)
    if u == w:
        raise PreconditionError(f"edge {e} is a loop and cannot be contracted")
    rot = _rotation_lists(G)
    rw = rot[w]
    i = rw.index(x + 1)
    block = rw[i + 1:] + rw[:i]
    ru = rot[u]
    j = ru.index(x)
    ru[j:j + 1] = block
    vmap = {}
    for v in range(G.vertex_count):
        if v == w:
            vmap[v] = u if u < w else u - 1
        else:
            vmap[v] = v if v < w else v - 1
    emap = {f: (f if f < e else f - 1) for f in range(G.edge_count) if f != e}
    new_rot: list[list[int]] = [[] for _ in range(G.vertex_count - 1)]
    for v, r in enumerate(rot):
        if v == w:
            continue
        new_rot[vmap[v]] = [2 * emap[d >> 1] + (d & 1) for d in r]
    return OpResult(PolarizedGraph(G.vertex_count - 1, new_rot), emap, vmap)


def blow_up_elementary(G: PolarizedGraph, v: int, cut: tuple[int, int]) -> OpResult:
    """Split vertex ``v`` along an arc of its cyclic order.

    ``cut = (i, j)`` selects positions ``i, i+1, ..., j-1`` (mod degree) of the
    normalized rotation at ``v``; those darts move to a new vertex joined to
    ``v`` by a new edge.  The first moved dart must lie on the MC and the MC
    must arrive at ``v`` through the last moved dart, so the MC then runs along
    the new edge in both directions.
    """
    if not 0 <= v < G.vertex_count:
        raise InputError(f"unknown vertex {v}")
    rot_v = list(G.rotation(v))
    deg = len(rot_v)
    i, j = cut
    if not (0 <= i < deg and 0 <= j <= deg):
        raise InputError(f"cut {cut} outside rotation of length {deg}")
    length = (j - i) % deg
    if length == 0:
        raise InputError("the moved arc must be a proper non-empty part of the rotation")
    arc = [rot_v[(i + k) % deg] for k in range(length)]
    stay = [rot_v[(j + k) % deg] for k in range(deg - length)]
    in_mc, _ = _mc_darts(G)
    if arc[0] not in in_mc or (arc[-1] ^ 1) not in in_mc:
        raise PreconditionError(
            f"arc must start with an MC-outgoing dart and end with an MC-incoming "
            f"dart (got {format_dart(arc[0])} .. {format_dart(arc[-1])})")
    n = G.edge_count
    nv = G.vertex_count
    rot = _rotation_lists(G)
    rot[v] = stay + [2 * n]
    rot.append([2 * n + 1] + arc)
    H = PolarizedGraph(nv + 1, rot)
    return OpResult(H, _identity(n), _identity(nv), new_edges=(n,), new_vertices=(nv,))


def blow_up_darts(G: PolarizedGraph, v: int, arc: Sequence[int]) -> OpResult:
    """Same as :func:`blow_up_elementary` with the moved arc given by its darts."""
    rot_v = list(G.rotation(v))
    if not arc or arc[0] not in rot_v:
        raise InputError("arc must be a non-empty run of darts at v")
    i = rot_v.index(arc[0])
    j = (i + len(arc)) % len(rot_v)
    if [rot_v[(i + k) % len(rot_v)] for k in range(len(arc))] != list(arc):
        raise InputError("arc is not contiguous in the rotation at v")
    return blow_up_elementary(G, v, (i, j))


def subdivide(G: PolarizedGraph, e: int) -> OpResult:
    """Insert a degree-2 vertex in the middle of ``e``.

    Edge ``e`` keeps its origin and now ends at the new vertex; the new edge
    continues from the new vertex to the old head of ``e``.
    """
    _check_edge(G, e)
    n = G.edge_count
    nv = G.vertex_count
    x = 2 * e
    rot = _rotation_lists(G)
    w = G.origin(x + 1)
    r = rot[w]
    r[r.index(x + 1)] = 2 * n + 1
    rot.append([x + 1, 2 * n])
    H = PolarizedGraph(nv + 1, rot)
    return OpResult(H, _identity(n), _identity(nv), new_edges=(n,), new_vertices=(nv,))


def surgery(G: PolarizedGraph, v: int, e_in: int, f_out: int) -> OpResult:
    """Replace the MC passage ``e_in, f_out`` through ``v`` by a single edge.

    ``f_out`` must follow ``reverse(e_in)`` at ``v``, the MC must use
    ``e_in``, and the MC must traverse neither edge in both directions.  The
    new edge takes the place of ``e_in`` at its origin and of
    ``reverse(f_out)`` at its head; the MC stays complete but the number of
    faces may change.  A vertex of degree 2 is removed, which makes this the
    inverse of :func:`subdivide`.
    """
    _check_dart(G, e_in)
    _check_dart(G, f_out)
    if G.head(e_in) != v or G.origin(f_out) != v:
        raise PreconditionError("e_in must arrive at v and f_out must leave v")
    if G.succ(e_in ^ 1) != f_out:
        raise PreconditionError("f_out does not follow reverse(e_in) at v")
    a_edge, b_edge = e_in >> 1, f_out >> 1
    if a_edge == b_edge:
        raise PreconditionError("e_in and f_out belong to the same edge")
    in_mc, _ = _mc_darts(G)
    if e_in not in in_mc:
        raise PreconditionError("the MC does not pass through e_in")
    for d in (e_in, f_out):
        if (d ^ 1) in in_mc:
            raise PreconditionError(
                f"edge {d >> 1} is traversed both ways by the MC; double it first")
    c = G.edge_count  # provisional id for the new edge
    rot = _rotation_lists(G)
    u = G.origin(e_in)
    w = G.head(f_out)
    rot[v] = [d for d in rot[v] if d not in (e_in ^ 1, f_out)]
    ru = rot[u]
    ru[ru.index(e_in)] = 2 * c
    rw = rot[w]
    rw[rw.index(f_out ^ 1)] = 2 * c + 1
    gone = {a_edge, b_edge}
    keep = [f for f in range(G.edge_count + 1) if f not in gone]
    new_id = {f: i for i, f in enumerate(keep)}
    new_rot = [[2 * new_id[d >> 1] + (d & 1) for d in r] for r in rot]
    emap = {f: new_id[f] for f in range(G.edge_count) if f not in gone}
    vmap = _identity(G.vertex_count)
    if not new_rot[v]:
        # v had degree 2: it would be left isolated, so it goes away
        del new_rot[v]
        vmap = {x: (x if x < v else x - 1) for x in range(G.vertex_count) if x != v}
    H = PolarizedGraph(len(new_rot), new_rot)
    return OpResult(H, emap, vmap, new_edges=(new_id[c],))


def add_parallel_edge(G: PolarizedGraph, chain: Sequence[int]) -> OpResult:
    """Add an edge alongside a run of consecutive MC darts.

    ``chain`` lists darts ``c1 .. cm`` of distinct edges with
    ``tau(c_i) = c_{i+1}``, all on the MC, whose reverses are also on the MC.
    The new edge ``e`` joins ``origin(c1)`` to ``head(cm)``; ``e+`` sits just
    before ``c1`` and ``e-`` just after ``reverse(cm)``.  The new walk is
    exactly ``(c1, .., cm, e-)`` and the MC uses ``e+`` instead of the chain.
    """
    chain = list(chain)
    if not chain:
        raise InputError("empty chain")
    for d in chain:
        _check_dart(G, d)
    if len({d >> 1 for d in chain}) != len(chain):
        raise PreconditionError("chain darts must belong to distinct edges")
    in_mc, _ = _mc_darts(G)
    for a, b in zip(chain, chain[1:]):
        if G.tau(a) != b:
            raise PreconditionError(
                f"{format_dart(b)} does not follow {format_dart(a)} on a left walk")
    for d in chain:
        if d not in in_mc:
            raise PreconditionError(f"{format_dart(d)} is not on the MC")
        if (d ^ 1) not in in_mc:
            raise PreconditionError(f"reverse of {format_dart(d)} is not on the MC")
    if G.tau(chain[-1]) == chain[0]:
        raise PreconditionError("the chain is a whole walk")
    n = G.edge_count
    rot = _rotation_lists(G)
    end = chain[-1] ^ 1
    _insert_after(rot[G.origin(end)], end, [2 * n + 1])
    _insert_before(rot[G.origin(chain[0])], chain[0], [2 * n])
    H = PolarizedGraph(G.vertex_count, rot)
    return OpResult(H, _identity(n), _identity(G.vertex_count), new_edges=(n,))


def double_edge(G: PolarizedGraph, b: int) -> OpResult:
    """Double an edge traversed both ways by the MC; ``b`` is one of its darts.

    The copy is placed along ``reverse(b)``, creating the walk
    ``(reverse(b), new-)`` of length 2.
    """
    _check_dart(G, b)
    return add_parallel_edge(G, [b ^ 1])


def _last_mc_corner(G: PolarizedGraph, v: int) -> int:
    """Dart after which another rotation is spliced at ``v`` (see connected_sum)."""
    _, mc = _mc_darts(G)
    positions = [i for i, d in enumerate(mc) if G.origin(d) == v]
    if not positions:
        raise PreconditionError(f"the MC does not visit vertex {v}")
    i = positions[-1]
    return mc[i - 1] ^ 1


def connected_sum(G1: PolarizedGraph, v1: int, G2: PolarizedGraph, v2: int) -> OpResult:
    """Identify ``v1`` of ``G1`` with ``v2`` of ``G2`` through their MC faces.

    Let ``x`` be the dart by which the MC of ``G1`` leaves ``v1`` for the last
    time and ``y`` the dart it arrived by.  The cyclic order of ``v2``, opened
    at the analogous corner of ``G2``, is inserted between ``reverse(y)`` and
    ``x``.  The two MCs concatenate into one.  Vertices and edges of ``G2``
    are numbered after those of ``G1`` (``v2`` is dropped);
    ``extra["edge_map2"]`` and ``extra["vertex_map2"]`` give their new ids.
    """
    for G, v in ((G1, v1), (G2, v2)):
        if not 0 <= v < G.vertex_count:
            raise InputError(f"unknown vertex {v}")
        if G.edge_count == 0:
            raise InputError("connected sum needs graphs with edges")
    anchor1 = _last_mc_corner(G1, v1)
    anchor2 = _last_mc_corner(G2, v2)
    n1 = G1.edge_count
    S1 = G1.vertex_count
    vmap2 = {}
    nxt = S1
    for v in range(G2.vertex_count):
        if v == v2:
            vmap2[v] = v1
        else:
            vmap2[v] = nxt
            nxt += 1
    rot: list[list[int]] = [list(r) for r in G1.rotations] + [[] for _ in range(G2.vertex_count - 1)]

    def shift(d: int) -> int:
        return d + 2 * n1

    for v, r in enumerate(G2.rotations):
        if v != v2:
            rot[vmap2[v]] = [shift(d) for d in r]
    r2 = list(G2.rotation(v2))
    k = r2.index(anchor2)
    block = r2[k + 1:] + r2[:k + 1]
    _insert_after(rot[v1], anchor1, [shift(d) for d in block])
    H = PolarizedGraph(S1 + G2.vertex_count - 1, rot)
    emap2 = {e: e + n1 for e in range(G2.edge_count)}
    return OpResult(H, _identity(n1), _identity(S1),
                    extra={"edge_map2": emap2, "vertex_map2": vmap2})


def mc_corners(G: PolarizedGraph, v: Optional[int] = None) -> list[tuple[int, int]]:
    """Consecutive MC pairs ``(y, x)`` with ``x = tau(y)``, optionally at ``v``."""
    _, mc = _mc_darts(G)
    out = []
    for i, x in enumerate(mc):
        y = mc[i - 1]
        if v is None or G.origin(x) == v:
            out.append((y, x))
    return out
