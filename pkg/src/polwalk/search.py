"""Exhaustive and random generation of small polarized graphs.

These are oracles: they enumerate every cyclic order at every vertex of
small multigraphs, so their cost grows like a product of factorials.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product
from pathlib import Path
from typing import Iterator, Optional, Sequence

from .core import PolarizedGraph, trace_walks
from .errors import InputError
from .textio import dumps, loads

Multigraph = tuple[int, tuple[tuple[int, int], ...]]  # (S, edges)


@dataclass(frozen=True)
class SearchBudget:
    max_S: int
    max_A: int
    node_limit: int = 10**7
    seed: int = 0

    def __post_init__(self):
        if self.max_S < 1 or self.max_A < 1 or self.node_limit < 1:
            raise InputError("search limits must be positive")


def _darts_by_vertex(S: int, edges: Sequence[tuple[int, int]]) -> list[list[int]]:
    at: list[list[int]] = [[] for _ in range(S)]
    for e, (u, w) in enumerate(edges):
        if not (0 <= u < S and 0 <= w < S):
            raise InputError(f"edge {e} has an endpoint outside 0..{S - 1}")
        at[u].append(2 * e)
        at[w].append(2 * e + 1)
    return at


def polarization_count(S: int, edges: Sequence[tuple[int, int]]) -> int:
    from math import factorial
    total = 1
    for ds in _darts_by_vertex(S, edges):
        total *= factorial(max(len(ds) - 1, 0))
    return total


class Enumeration:
    """Iterator over all polarizations of a multigraph, with an optional cap.

    After iteration, ``truncated`` tells whether the cap stopped it early.
    """

    def __init__(self, S: int, edges: Sequence[tuple[int, int]], limit: Optional[int] = None):
        self.S = S
        self.edges = tuple(tuple(e) for e in edges)
        self.limit = limit
        self.produced = 0
        self.truncated = False

    def __iter__(self) -> Iterator[PolarizedGraph]:
        at = _darts_by_vertex(self.S, self.edges)
        choices = []
        for ds in at:
            if len(ds) <= 1:
                choices.append([tuple(ds)])
            else:
                first, rest = ds[0], ds[1:]
                choices.append([(first,) + p for p in permutations(rest)])
        for combo in product(*choices):
            if self.limit is not None and self.produced >= self.limit:
                self.truncated = True
                return
            self.produced += 1
            yield PolarizedGraph(self.S, combo)


def enumerate_polarizations(S: int, edges: Sequence[tuple[int, int]],
                            limit: Optional[int] = None) -> Enumeration:
    """Every cyclic order at every vertex, each counted once.

    The smallest dart at each vertex is held first, so a vertex of degree
    ``d`` contributes ``(d-1)!`` choices.  Mirror images are distinct.
    """
    return Enumeration(S, edges, limit)


# -- underlying multigraphs ------------------------------------------------


def _connected(S: int, edges: Sequence[tuple[int, int]]) -> bool:
    adj: list[set[int]] = [set() for _ in range(S)]
    for u, w in edges:
        adj[u].add(w)
        adj[w].add(u)
    seen = {0}
    todo = [0]
    while todo:
        v = todo.pop()
        for w in adj[v] - seen:
            seen.add(w)
            todo.append(w)
    return len(seen) == S


def _canonical_multigraph(S: int, edges: Sequence[tuple[int, int]]) -> tuple:
    best = None
    for perm in permutations(range(S)):
        key = tuple(sorted((min(perm[u], perm[w]), max(perm[u], perm[w])) for u, w in edges))
        if best is None or key < best:
            best = key
    return best


def underlying_multigraphs(max_S: int, max_A: int) -> list[Multigraph]:
    """Connected multigraphs (loops allowed) with ``S <= max_S`` and ``1 <= A <= max_A``.

    Isomorphic copies are removed by brute-force canonical labelling when
    ``S <= 6``; beyond that duplicates are kept.
    """
    out = []
    for S in range(1, max_S + 1):
        slots = [(u, w) for u in range(S) for w in range(u, S)]
        seen = set()
        for A in range(max(1, S - 1), max_A + 1):
            for edges in combinations_with_replacement(slots, A):
                if not _connected(S, edges):
                    continue
                if S <= 6:
                    key = _canonical_multigraph(S, edges)
                    if key in seen:
                        continue
                    seen.add(key)
                out.append((S, tuple(edges)))
    return out


def _reduced_valence_of(S: int, edges: Sequence[tuple[int, int]]) -> Fraction:
    pairs = {(min(u, w), max(u, w)) for u, w in edges if u != w}
    return Fraction(2 * len(pairs), S)


# -- maximization ----------------------------------------------------------


@dataclass(frozen=True)
class SearchResult:
    best: Optional[Fraction]
    witness: Optional[PolarizedGraph]
    complete: bool  # False: budget ran out, ``best`` is only a lower bound
    explored: int


def _genus_and_mc(G: PolarizedGraph) -> tuple[int, bool]:
    w = trace_walks(G)
    chi = G.vertex_count - G.edge_count + len(w.walks)
    return 1 - chi // 2, w.complete_index is not None


def _first_witness(args: tuple[int, Multigraph, int]) -> tuple[Optional[str], int, bool]:
    g, (S, edges), limit = args
    en = enumerate_polarizations(S, edges, limit)
    for G in en:
        gam, mc = _genus_and_mc(G)
        if gam == g and mc:
            return dumps(G), en.produced, False
    return None, en.produced, en.truncated


def brute_force_max_vr(g: int, budget: SearchBudget, *,
                       graphs: Optional[Sequence[Multigraph]] = None,
                       workers: Optional[int] = None,
                       cache_dir: Optional[str | os.PathLike] = None) -> SearchResult:
    """Largest reduced valence of a genus-``g`` graph with a complete walk.

    Candidate multigraphs (all within the budget, or ``graphs`` if given) are
    visited by decreasing reduced valence, which depends only on the
    multigraph; the first one with a qualifying polarization settles the
    maximum.  Ties are broken by the smallest serialization among the
    multigraphs of that valence.  ``node_limit`` caps the total number of
    polarizations examined; hitting it gives ``complete=False``.
    """
    if g < 0:
        raise InputError("genus must be non-negative")
    cache_file = None
    if cache_dir is not None and graphs is None:
        key = hashlib.sha256(json.dumps([g, budget.max_S, budget.max_A,
                                         budget.node_limit]).encode()).hexdigest()[:16]
        cache_file = Path(cache_dir) / f"maxvr-{key}.json"
        if cache_file.exists():
            data = json.loads(cache_file.read_text())
            return SearchResult(
                None if data["best"] is None else Fraction(data["best"]),
                None if data["witness"] is None else loads(data["witness"]),
                data["complete"], data["explored"])
    if graphs is None:
        graphs = underlying_multigraphs(budget.max_S, budget.max_A)
    groups: dict[Fraction, list[Multigraph]] = {}
    for mg in graphs:
        groups.setdefault(_reduced_valence_of(*mg), []).append(mg)
    if workers is None:
        workers = int(os.environ.get("POLWALK_THREADS", "1") or 1)
    explored = 0
    complete = True
    result = SearchResult(None, None, True, 0)
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for vr in sorted(groups, reverse=True):
            hits = []
            if pool:
                jobs = [(g, mg, budget.node_limit - explored) for mg in groups[vr]]
                outcomes = list(pool.map(_first_witness, jobs))
            else:
                outcomes = None
            # replay in job order so the total respects node_limit either way
            for i, mg in enumerate(groups[vr]):
                remaining = budget.node_limit - explored
                if outcomes is None:
                    text, produced, truncated = _first_witness((g, mg, remaining))
                else:
                    text, produced, truncated = outcomes[i]
                    if produced > remaining or (produced == remaining and text is None
                                                and truncated):
                        truncated, text, produced = True, None, remaining
                explored += produced
                if truncated:
                    complete = False
                    break
                if text is not None:
                    hits.append(text)
            if hits:
                result = SearchResult(vr, loads(min(hits)), complete, explored)
                break
            if not complete:
                result = SearchResult(None, None, False, explored)
                break
        else:
            result = SearchResult(None, None, complete, explored)
    finally:
        if pool:
            pool.shutdown()
    if cache_file is not None:
        cache_file.parent.mkdir(parents=True, exist_ok=True)
        cache_file.write_text(json.dumps({
            "best": None if result.best is None else str(result.best),
            "witness": None if result.witness is None else dumps(result.witness),
            "complete": result.complete, "explored": result.explored}))
    return result


# -- random instances ------------------------------------------------------


def random_polarized(S: int, A: int, seed: int) -> PolarizedGraph:
    """Random connected multigraph with random cyclic orders.

    Edges are drawn uniformly (with repetition, loops allowed) among vertex
    pairs; disconnected draws are rejected.  Deterministic for a given seed.
    """
    if S < 1 or A < max(1, S - 1):
        raise InputError("need S >= 1 and A >= max(1, S-1)")
    rng = random.Random(seed)
    slots = [(u, w) for u in range(S) for w in range(u, S)]
    while True:
        edges = [rng.choice(slots) for _ in range(A)]
        if _connected(S, edges):
            break
    rotations = []
    for ds in _darts_by_vertex(S, edges):
        ds = list(ds)
        rng.shuffle(ds)
        rotations.append(ds)
    return PolarizedGraph(S, rotations)
