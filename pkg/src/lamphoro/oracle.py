"""Brute-force ground truth: breadth-first search of the Cayley graph.

Nothing here uses the closed-form metric; the ball is built purely from
the four edges ``g -> g*t, g*t^-1, g*(at), g*(at)^-1``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from .core import AT, AT_INV, T, T_INV, LampStand, apply_word, identity, serialize
from .errors import OutOfBallError, ResourceLimitError

__all__ = [
    "DEFAULT_RADIUS_CAP",
    "Ball",
    "bfs_ball",
    "oracle_distance",
    "export_dot",
    "growth_csv",
    "radius_cap",
]

DEFAULT_RADIUS_CAP = 12
RADIUS_CAP_ENV = "LAMPHORO_RADIUS_CAP"

_EDGES = (T, T_INV, AT, AT_INV)


def radius_cap() -> int:
    return int(os.environ.get(RADIUS_CAP_ENV, DEFAULT_RADIUS_CAP))


@dataclass(frozen=True)
class Ball:
    radius: int
    dist: Mapping[str, int]
    sphere_sizes: tuple
    elements: Mapping[str, LampStand]

    def __contains__(self, g) -> bool:
        key = g if isinstance(g, str) else serialize(g)
        return key in self.dist

    def __len__(self):
        return len(self.dist)

    def members(self, max_radius: int | None = None) -> list:
        """Elements ordered by (distance, height, lamps), optionally truncated."""
        r = self.radius if max_radius is None else max_radius
        out = [(d, self.elements[k]) for k, d in self.dist.items() if d <= r]
        out.sort(key=lambda item: (item[0], item[1].sort_key()))
        return [g for _, g in out]


def bfs_ball(radius: int, cap: int | None = None) -> Ball:
    cap = radius_cap() if cap is None else cap
    if radius < 0:
        raise ValueError("radius must be non-negative")
    if radius > cap:
        raise ResourceLimitError(f"ball radius {radius} exceeds cap {cap}")
    start = identity()
    dist = {serialize(start): 0}
    elements = {serialize(start): start}
    frontier = [start]
    sizes = [1]
    for d in range(1, radius + 1):
        nxt = []
        for g in frontier:
            for letter in _EDGES:
                x = apply_word(g, (letter,))
                key = serialize(x)
                if key not in dist:
                    dist[key] = d
                    elements[key] = x
                    nxt.append(x)
        sizes.append(len(nxt))
        frontier = nxt
    return Ball(radius, MappingProxyType(dist), tuple(sizes), MappingProxyType(elements))


def oracle_distance(ball: Ball, g: LampStand) -> int:
    try:
        return ball.dist[serialize(g)]
    except KeyError:
        raise OutOfBallError(
            f"{serialize(g)} is not within distance {ball.radius} of the identity"
        ) from None


def export_dot(ball: Ball, max_radius: int | None = None) -> str:
    """Graphviz digraph of the ball; edges point along ``t`` and ``at``."""
    r = ball.radius if max_radius is None else max_radius
    if r > ball.radius:
        raise ValueError(f"max_radius {r} exceeds ball radius {ball.radius}")
    nodes = ball.members(r)
    keys = {serialize(g) for g in nodes}
    lines = ["digraph L2 {"]
    for g in nodes:
        key = serialize(g)
        lines.append(f'  "{key}" [dist={ball.dist[key]}];')
    for g in nodes:
        for letter in (T, AT):
            x = serialize(apply_word(g, (letter,)))
            if x in keys:
                lines.append(f'  "{serialize(g)}" -> "{x}" [label="{letter}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def growth_csv(ball: Ball) -> str:
    rows = ["radius,sphere_size,ball_size"]
    total = 0
    for r, size in enumerate(ball.sphere_sizes):
        total += size
        rows.append(f"{r},{size},{total}")
    return "\n".join(rows) + "\n"
