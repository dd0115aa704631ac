"""Polarized graphs (rotation systems), their left walks, and valence bounds."""

from .core import (GraphStats, PolarizedGraph, Walk, WalkDecomposition, find_complete_walk,
                   from_faces, is_isomorphic, reduce_to_condition_C, stats, trace_walks)
from .errors import (InputError, InternalError, NotAPolarizationError, PolwalkError,
                     PreconditionError, StructuralError)
from .textio import dumps, loads

__version__ = "0.1.0"

__all__ = [
    "GraphStats", "InputError", "InternalError", "NotAPolarizationError", "PolarizedGraph",
    "PolwalkError", "PreconditionError", "StructuralError", "Walk", "WalkDecomposition",
    "dumps", "find_complete_walk", "from_faces", "is_isomorphic", "loads",
    "reduce_to_condition_C", "stats", "trace_walks",
]
