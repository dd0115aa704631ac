"""Valence bounds for polarized graphs, evaluated in exact arithmetic.

Irrational quantities such as ``1 + sqrt(1 + 6g)`` are only ever compared
through squared integer inequalities; the float returned by :func:`bound_b`
is for display.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import GraphStats
from .errors import InputError


def _check_genus(g: int) -> None:
    if g < 0:
        raise InputError("genus must be non-negative")


def bound_b(g: int) -> float:
    """Display value of ``1 + sqrt(1 + 6g)``."""
    _check_genus(g)
    return 1 + math.sqrt(1 + 6 * g)


def compare_b(V: Fraction | int, g: int) -> bool:
    """Exact test of ``V <= 1 + sqrt(1 + 6g)``."""
    _check_genus(g)
    V = Fraction(V)
    if V <= 1:
        return True
    return (V - 1) ** 2 <= 6 * g + 1


def _floor_parity(x_floor: int, p: int) -> int:
    return x_floor if x_floor % 2 == p else x_floor - 1


def _ceil_parity(x_ceil: int, p: int) -> int:
    return x_ceil if x_ceil % 2 == p else x_ceil + 1


def _floor_ceil_S(g: int, j: int) -> tuple[int, int]:
    """Floor and ceiling of ``2 + sqrt(6g + j)``."""
    n = 6 * g + j
    r = math.isqrt(n)
    return 2 + r, 2 + r + (0 if r * r == n else 1)


@dataclass(frozen=True)
class BrBound:
    value: Fraction
    terms: tuple[Fraction, Fraction, Fraction, Fraction]
    attained_by: tuple[int, ...]


def bound_br_terms(g: int) -> BrBound:
    """The four candidates whose maximum bounds the reduced valence.

    With ``S_j = 2 + sqrt(6g + j)``: the largest even integer below ``S_0``
    minus one, the largest odd integer below ``S_1`` minus one,
    ``3 + (6g - 4)/c0`` and ``3 + (6g - 3)/c1`` where ``c0`` (``c1``) is the
    smallest even (odd) integer above ``S_0`` (``S_1``).  ``attained_by``
    lists the 1-based indices of the terms equal to the maximum.
    """
    _check_genus(g)
    f0, c0 = _floor_ceil_S(g, 0)
    f1, c1 = _floor_ceil_S(g, 1)
    terms = (
        Fraction(_floor_parity(f0, 0) - 1),
        Fraction(_floor_parity(f1, 1) - 1),
        3 + Fraction(6 * g - 4, _ceil_parity(c0, 0)),
        3 + Fraction(6 * g - 3, _ceil_parity(c1, 1)),
    )
    best = max(terms)
    return BrBound(best, terms, tuple(i + 1 for i, t in enumerate(terms) if t == best))


def bound_br(g: int) -> Fraction:
    return bound_br_terms(g).value


def homotopic_bound(S: int, g: int) -> tuple[int, Fraction]:
    """Edge cap and total-valence cap for homotopic graphs with ``S`` vertices."""
    if S < 1:
        raise InputError("S must be positive")
    _check_genus(g)
    return 3 * g + (3 * (S - 1)) // 2, 3 + Fraction(6 * g - 4 + S % 2, S)


def lower_bound(g: int) -> Fraction:
    """Valence ``12g / (3g + 1)`` reached by the star construction."""
    _check_genus(g)
    return Fraction(12 * g, 3 * g + 1)


def appendix_bounds(g: int) -> tuple[int, int, int]:
    _check_genus(g)
    if g == 0:
        B, C = 0, 0
    elif g == 1:
        B, C = 1, 3
    else:
        B, C = 3 * g - 3, 6 * g - 3
    return B, C, C + 1


@dataclass(frozen=True)
class BoundReport:
    """Outcome of each inequality; ``None`` means not applicable.

    Slacks are ``right-hand side - left-hand side``.
    """

    spade_ok: bool
    heart_ok: Optional[bool]
    diamond_ok: Optional[bool]
    club_r_ok: bool
    diamond_r_ok: Optional[bool]
    heart_slack: Optional[Fraction]
    diamond_slack: Optional[Fraction]
    club_r_slack: Fraction
    diamond_r_slack: Optional[Fraction]

    @property
    def all_ok(self) -> bool:
        flags = (self.spade_ok, self.heart_ok, self.diamond_ok,
                 self.club_r_ok, self.diamond_r_ok)
        return all(f is not False for f in flags)

    def as_dict(self) -> dict:
        def show(x):
            return None if x is None else str(x)
        return {
            "spade": self.spade_ok,
            "heart": self.heart_ok, "heart_slack": show(self.heart_slack),
            "diamond": self.diamond_ok, "diamond_slack": show(self.diamond_slack),
            "club_r": self.club_r_ok, "club_r_slack": show(self.club_r_slack),
            "diamond_r": self.diamond_r_ok, "diamond_r_slack": show(self.diamond_r_slack),
        }


def valence_cap(S: int, gamma: int) -> Fraction:
    return 3 + Fraction(6 * gamma - 4 + S % 2, S)


def audit(st: GraphStats) -> BoundReport:
    """Evaluate the face-count and valence inequalities on ``st``.

    The face and total-valence bounds need condition (C) and a complete walk;
    the reduced-valence bound needs only the complete walk.
    """
    spade = (not st.degrees) or sum(st.degrees) == 2 * st.A
    spade = spade and st.V * st.S == 2 * st.A
    cap = valence_cap(st.S, st.gamma)
    full = st.satisfies_C and st.has_mc
    heart_slack = 1 + Fraction(st.A, 3) - st.F if full else None
    diamond_slack = cap - st.V if full else None
    club_slack = (st.S - 1) - st.V_r
    diamond_r_slack = cap - st.V_r if st.has_mc else None

    def ok(x):
        return None if x is None else x >= 0

    return BoundReport(
        spade_ok=spade,
        heart_ok=ok(heart_slack), diamond_ok=ok(diamond_slack),
        club_r_ok=club_slack >= 0, diamond_r_ok=ok(diamond_r_slack),
        heart_slack=heart_slack, diamond_slack=diamond_slack,
        club_r_slack=club_slack, diamond_r_slack=diamond_r_slack,
    )
