"""Reading and writing the line-oriented ``polgraph 1`` text format.

Example::

    polgraph 1
    vertices 1
    edges 1
    v 0: 0+ 0-
"""

from __future__ import annotations

import re

from .core import PolarizedGraph, format_dart, parse_dart
from .errors import InputError

HEADER = "polgraph 1"

_VERTEX_LINE = re.compile(r"^v\s+(\d+)\s*:(.*)$")


def dumps(G: PolarizedGraph) -> str:
    lines = [HEADER, f"vertices {G.vertex_count}", f"edges {G.edge_count}"]
    for v, rot in enumerate(G.rotations):
        body = " ".join(format_dart(d) for d in rot)
        lines.append(f"v {v}: {body}" if body else f"v {v}:")
    return "\n".join(lines) + "\n"


def loads(text: str) -> PolarizedGraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0].split() != HEADER.split():
        raise InputError("missing 'polgraph 1' header")
    try:
        key, value = lines[1].split()
        if key != "vertices":
            raise ValueError
        S = int(value)
        key, value = lines[2].split()
        if key != "edges":
            raise ValueError
        A = int(value)
    except (IndexError, ValueError):
        raise InputError("expected 'vertices <S>' and 'edges <A>' lines") from None
    if S < 1 or A < 0:
        raise InputError("vertex count must be positive and edge count non-negative")
    body = lines[3:]
    if len(body) != S:
        raise InputError(f"expected {S} vertex lines, found {len(body)}")
    rotations: list[list[int] | None] = [None] * S
    for ln in body:
        m = _VERTEX_LINE.match(ln)
        if not m:
            raise InputError(f"bad vertex line {ln!r}")
        v = int(m.group(1))
        if v >= S or rotations[v] is not None:
            raise InputError(f"vertex {v} out of range or repeated")
        rotations[v] = [parse_dart(tok) for tok in m.group(2).split()]
    used = sorted(d for r in rotations for d in r)  # type: ignore[union-attr]
    if used != list(range(2 * A)):
        raise InputError(f"each of the {2 * A} darts must appear exactly once")
    return PolarizedGraph(S, rotations)  # type: ignore[arg-type]


def read_file(path: str) -> PolarizedGraph:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def write_file(G: PolarizedGraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(G))
