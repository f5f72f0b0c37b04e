"""Basis neighbourhoods of the horoboundary and bounded convergence checks.

Word distances are integers, so a basic open set around ``h`` is simply
the set of horofunctions that agree with ``h`` exactly on a finite set
``K``.  All checks here run up to a budget and return witnesses; they never
claim anything beyond the budget.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .core import LampStand, parse
from .errors import ParseError
from .horofn import (
    HEIGHT_MINUS,
    HEIGHT_PLUS,
    PLUS,
    BoundaryRay,
    BusemannMinus,
    BusemannPlus,
    Horofunction,
    RibMinus,
    RibPlus,
    Spine,
    _direction,
    ray_point,
)

__all__ = [
    "BasisNeighborhood",
    "member",
    "ConvergedBy",
    "NotWithinBudget",
    "converges_to",
    "busemann_to_height_check",
    "RayPairReport",
    "visual_embedding_check",
    "horizon_of",
    "family_from_json",
]


@dataclass(frozen=True)
class BasisNeighborhood:
    center: Horofunction
    K: tuple

    def __init__(self, center: Horofunction, K: Iterable[LampStand]):
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "K", tuple(K))

    def __contains__(self, hf: Horofunction) -> bool:
        return member(self, hf)

    def separating_point(self, hf: Horofunction):
        for x in self.K:
            a, b = self.center(x), hf(x)
            if a != b:
                return x, a, b
        return None


def member(nbhd: BasisNeighborhood, hf: Horofunction) -> bool:
    return nbhd.separating_point(hf) is None


@dataclass(frozen=True)
class ConvergedBy:
    n0: int


@dataclass(frozen=True)
class NotWithinBudget:
    n: int
    x: LampStand
    values: tuple  # (value of h_n at x, value of the limit at x)


def _as_family(seq) -> Callable[[int], Horofunction]:
    if callable(seq) and not isinstance(seq, Horofunction):
        return seq
    items = list(seq)
    return lambda n: items[n - 1]


def converges_to(h_seq, limit: Horofunction, K, budget: int, start: int = 1):
    """Least ``n0`` with ``h_n`` in ``B_K(limit)`` for every ``n0 <= n <= budget``.

    ``h_seq`` is a callable ``n -> Horofunction`` or a sequence indexed
    from 1.  If ``h_budget`` itself lies outside the neighbourhood the
    result is a :class:`NotWithinBudget` witness.
    """
    nbhd = BasisNeighborhood(limit, K)
    if not nbhd.K:
        raise ValueError("K must be nonempty")
    family = _as_family(h_seq)
    n0 = None
    witness = None
    for n in range(budget, start - 1, -1):
        sep = nbhd.separating_point(family(n))
        if sep is not None:
            witness = (n, sep)
            break
        n0 = n
    if n0 is None:
        n, (x, limit_value, value) = witness
        return NotWithinBudget(n, x, (value, limit_value))
    return ConvergedBy(n0)


def busemann_to_height_check(ray_family, K, budget: int, direction=PLUS, start: int = 1):
    """Busemann functions of rays whose extreme lamp escapes converge to +-H."""
    direction = _direction(direction)
    rays = _as_family(ray_family)
    ctor = BusemannPlus if direction == PLUS else BusemannMinus
    limit = HEIGHT_PLUS if direction == PLUS else HEIGHT_MINUS

    def family(n):
        ray = rays(n)
        if not isinstance(ray, BoundaryRay):
            ray = BoundaryRay(direction, ray)
        return ctor(ray)

    return converges_to(family, limit, K, budget, start)


def horizon_of(K: Sequence[LampStand], direction=PLUS) -> int:
    """Lamp position beyond which a ray's lamps cannot affect values on ``K``.

    For plus rays: the largest lit lamp or height over ``K`` (and 0 for the
    basepoint); lamps strictly above it never matter.  For minus rays: the
    smallest such value, lamps strictly below it never matter.
    """
    direction = _direction(direction)
    if direction == PLUS:
        return max(0, *(max([x.height, *x.lit]) for x in K))
    return min(0, *(min([x.height, *x.lit]) for x in K))


@dataclass(frozen=True)
class RayPairReport:
    first: BoundaryRay
    second: BoundaryRay
    horizon: int
    agree_within_horizon: bool
    agree_on_K: bool
    witness: object  # (x, value1, value2) or None

    @property
    def consistent(self) -> bool:
        """Rays agreeing up to the horizon must give equal functions on K."""
        return self.agree_on_K or not self.agree_within_horizon


def visual_embedding_check(ray_pairs, K) -> list:
    """Compare Busemann functions of same-direction ray pairs on ``K``."""
    K = tuple(K)
    out = []
    for r1, r2 in ray_pairs:
        if r1.direction != r2.direction:
            raise ValueError("ray pairs must share a direction")
        bound = horizon_of(K, r1.direction)
        diff = r1.lit ^ r2.lit
        if r1.direction == PLUS:
            agree = all(p > bound for p in diff)
            b1, b2 = BusemannPlus(r1), BusemannPlus(r2)
        else:
            agree = all(p < bound for p in diff)
            b1, b2 = BusemannMinus(r1), BusemannMinus(r2)
        sep = BasisNeighborhood(b1, K).separating_point(b2)
        out.append(RayPairReport(r1, r2, bound, agree, sep is None, sep))
    return out



def _linear(pair, n: int) -> int:
    a, b = pair
    return int(a) * n + int(b)


def family_from_json(doc) -> Callable[[int], Horofunction]:
    """Indexed horofunction family from a JSON document.

    Parameters that vary with ``n`` are given as ``[a, b]`` meaning
    ``a*n + b``::

        {"family": "spine", "l": [1, 0]}
        {"family": "rib+", "f": "{};0", "lamps": [[-1, 0]]}
        {"family": "bus-", "lit": [2], "lamps": [[1, 0]]}
        {"family": "ray-rib", "direction": "+", "lit": [-2, 1]}

    ``lamps`` toggles the listed positions into the base lamp set, ``height``
    (ribs only) overrides the base height, and ``ray-rib`` gives the ribs at
    the points of the canonical geodesic ray with the given lamps.
    """
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", doc, exc.pos) from None
    if not isinstance(doc, dict) or "family" not in doc:
        raise ParseError("family spec must be an object with a 'family' key")
    fam = doc["family"]
    growing = [tuple(p) for p in doc.get("lamps", ())]

    def toggled(base, n):
        lit = set(base)
        for pair in growing:
            lit ^= {_linear(pair, n)}
        return frozenset(lit)

    try:
        if fam == "spine":
            l = doc["l"]
            return lambda n: Spine(_linear(l, n) if isinstance(l, list) else int(l))
        if fam in ("rib+", "rib-"):
            base = parse(doc.get("f", "{};0"))
            ctor = RibPlus if fam == "rib+" else RibMinus
            height = doc.get("height")

            def rib(n):
                hh = base.height if height is None else _linear(height, n)
                return ctor(LampStand(toggled(base.lit, n), hh))

            return rib
        if fam in ("bus+", "bus-"):
            base = frozenset(int(p) for p in doc.get("lit", ()))
            direction = PLUS if fam == "bus+" else "-"
            ctor = BusemannPlus if fam == "bus+" else BusemannMinus
            return lambda n: ctor(BoundaryRay(direction, toggled(base, n)))
        if fam == "ray-rib":
            ray = BoundaryRay(doc["direction"], frozenset(int(p) for p in doc.get("lit", ())))
            ctor = RibPlus if ray.direction == PLUS else RibMinus
            return lambda n: ctor(ray_point(ray, n))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"invalid {fam!r} family spec: {exc}") from None
    raise ParseError(f"unknown horofunction family {fam!r}")
