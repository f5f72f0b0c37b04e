"""Closed-form word distance on L2 for the generating set {t, at}.

A shortest path sweeps the lamplighter once across every position where
the two lamp stands differ.  With ``A`` the leftmost and ``B`` the
rightmost position it has to reach and ``C`` the height gap, the distance
is ``2(B - A) - C``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    AT,
    AT_INV,
    T,
    T_INV,
    LampStand,
    diff_M,
    diff_m,
    ext_max,
    ext_min,
)

__all__ = ["DistanceBreakdown", "distance", "dist", "geodesic_witness"]


@dataclass(frozen=True)
class DistanceBreakdown:
    A: int
    B: int
    C: int
    distance: int

    def __str__(self):
        return f"{self.distance} (A={self.A} B={self.B} C={self.C})"


def distance(g1: LampStand, g2: LampStand) -> DistanceBreakdown:
    h1, h2 = g1.height, g2.height
    # The heights are finite, so both extremes are finite even when the
    # lamp sets agree and diff_m / diff_M are infinite.
    A = int(ext_min(diff_m(g1, g2), h1, h2))
    B = int(ext_max(diff_M(g1, g2) + 1, h1, h2))
    C = abs(h2 - h1)
    return DistanceBreakdown(A, B, C, 2 * (B - A) - C)


def dist(g1: LampStand, g2: LampStand) -> int:
    """Just the distance.  Same value as ``distance(g1, g2).distance``."""
    d = g1.lit ^ g2.lit
    h1, h2 = g1.height, g2.height
    lo, hi = (h1, h2) if h1 <= h2 else (h2, h1)
    if d:
        lo = min(lo, min(d))
        hi = max(hi, max(d) + 1)
    return 2 * (hi - lo) - abs(h2 - h1)


def geodesic_witness(g1: LampStand, g2: LampStand) -> tuple:
    """A shortest word ``w`` over {t, at} and inverses with ``g1 * w == g2``.

    The lamplighter walks to one extreme, sweeps to the other toggling the
    differing lamps on the way, then walks to ``g2``'s height.  It starts
    leftwards whenever that is no longer than starting rightwards.
    """
    bd = distance(g1, g2)
    A, B = bd.A, bd.B
    h1, h2 = g1.height, g2.height
    toggle = g1.lit ^ g2.lit
    word = []
    if h1 <= h2:
        word += [T_INV] * (h1 - A)
        for k in range(A, B):
            word.append(AT if k in toggle else T)
        word += [T_INV] * (B - h2)
    else:
        word += [T] * (B - h1)
        for k in range(B - 1, A - 1, -1):
            word.append(AT_INV if k in toggle else T_INV)
        word += [T] * (h2 - A)
    return tuple(word)
