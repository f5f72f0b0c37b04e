"""Left action of L2 on horofunctions.

``g`` sends the limit of ``d(g_n, .) - d(g_n, id)`` to the limit along
``g * g_n``.  On each family this is a closed-form rule: spines and ribs
move up by ``H(g)``, Busemann rays get ``g``'s lamps toggled in, and the two
height functions are fixed.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .core import LampStand, inverse, mul, serialize
from .errors import UnsupportedInputError
from .horofn import (
    HEIGHT_MINUS,
    HEIGHT_PLUS,
    MINUS,
    PLUS,
    BoundaryRay,
    BusemannMinus,
    BusemannPlus,
    HeightMinus,
    HeightPlus,
    Horofunction,
    Point,
    RibMinus,
    RibPlus,
    Spine,
    enumerate_rib_class,
    format_horofunction,
)
from .topology import BasisNeighborhood

__all__ = [
    "act",
    "orbit",
    "category_of",
    "verify_invariance",
    "FixedRays",
    "fixed_rays",
    "ProbeReport",
    "north_south_probe",
    "rib_bijection_check",
]


def _toggle_in(g: LampStand, lit) -> frozenset:
    return g.lit ^ frozenset(p + g.height for p in lit)


def act(g: LampStand, hf: Horofunction) -> Horofunction:
    if isinstance(hf, Point):
        return Point(mul(g, hf.g))
    if isinstance(hf, Spine):
        return Spine(g.height + hf.l)
    if isinstance(hf, RibPlus):
        return RibPlus.normalized(mul(g, hf.f))
    if isinstance(hf, RibMinus):
        return RibMinus.normalized(mul(g, hf.f))
    if isinstance(hf, BusemannPlus):
        return BusemannPlus(BoundaryRay(PLUS, _toggle_in(g, hf.ray.lit)))
    if isinstance(hf, BusemannMinus):
        return BusemannMinus(BoundaryRay(MINUS, _toggle_in(g, hf.ray.lit)))
    if isinstance(hf, (HeightPlus, HeightMinus)):
        return hf
    raise TypeError(f"not a horofunction: {hf!r}")


def orbit(g: LampStand, hf: Horofunction, steps: int) -> list:
    """``[hf, g.hf, g.g.hf, ...]`` with ``steps + 1`` entries."""
    out = [hf]
    for _ in range(steps):
        out.append(act(g, out[-1]))
    return out


def category_of(hf: Horofunction) -> str:
    return hf.family


def verify_invariance(g: LampStand, hf: Horofunction) -> bool:
    return category_of(act(g, hf)) == category_of(hf)


@dataclass(frozen=True)
class FixedRays:
    """Attracting and repelling boundary rays of ``g`` (``H(g) != 0``).

    When a ray has infinitely many lit lamps its ``lit`` only lists the lamps
    inside ``window`` and the matching ``*_finite`` flag is False.
    """

    g: LampStand
    attractor: BoundaryRay
    repeller: BoundaryRay
    attractor_finite: bool
    repeller_finite: bool
    window: tuple


def _has_finite_limit(g: LampStand) -> bool:
    # Far from g's lamps, position p of g^n (n large) is lit iff an odd
    # number of g's lamps are congruent to p mod H(g).
    counts = Counter(p % abs(g.height) for p in g.lit)
    return all(c % 2 == 0 for c in counts.values())


def _windowed_limit(g: LampStand, lo: int, hi: int) -> frozenset:
    """Lamps in ``[lo, hi]`` of ``g^n`` once they stop changing."""
    step = abs(g.height)
    span = max([abs(p) for p in g.lit] + [0])
    # Lamp p receives contributions from the i-th factor only while
    # |p - i*H(g)| <= span, so this many factors settle the window.
    n_needed = (max(abs(lo), abs(hi)) + span) // step + 2
    x = LampStand(frozenset(), 0)
    prev = None
    for n in range(1, n_needed + 2):
        x = mul(x, g)
        cur = frozenset(p for p in x.lit if lo <= p <= hi)
        if n > n_needed and cur == prev:
            return cur
        prev = cur
    return prev


def _limit_ray(g: LampStand, window: tuple):
    direction = PLUS if g.height > 0 else MINUS
    finite = _has_finite_limit(g)
    if finite and g.lit:
        lo, hi = min(g.lit), max(g.lit)
        lit = _windowed_limit(g, min(lo, window[0]), max(hi, window[1]))
    elif finite:
        lit = frozenset()
    else:
        lit = _windowed_limit(g, *window)
    return BoundaryRay(direction, lit), finite


def fixed_rays(g: LampStand, window: int = 16) -> FixedRays:
    if g.height == 0:
        raise UnsupportedInputError("fixed rays need an element of nonzero height")
    win = (-window, window)
    attractor, a_fin = _limit_ray(g, win)
    repeller, r_fin = _limit_ray(inverse(g), win)
    return FixedRays(g, attractor, repeller, a_fin, r_fin, win)


@dataclass(frozen=True)
class ProbeReport:
    g: LampStand
    start: Horofunction
    pole: Horofunction
    reached_at: object  # int, or None when not within budget
    trajectory: tuple = field(repr=False)

    @property
    def converged(self) -> bool:
        return self.reached_at is not None


def _poles(g: LampStand, hf: Horofunction):
    """(attracting pole, repelling pole) of ``g`` on the half containing ``hf``."""
    up = g.height > 0
    if isinstance(hf, Spine):
        return (HEIGHT_PLUS, HEIGHT_MINUS) if up else (HEIGHT_MINUS, HEIGHT_PLUS)
    plus_half = isinstance(hf, (BusemannPlus, HeightPlus))
    minus_half = isinstance(hf, (BusemannMinus, HeightMinus))
    if not (plus_half or minus_half):
        raise UnsupportedInputError(
            f"{format_horofunction(hf)} is not a Busemann, height or spine horofunction"
        )
    fr = fixed_rays(g)
    # g^inf lies on the side the lamplighter moves to and always attracts;
    # the height pole of that side repels.  On the other side the height
    # pole attracts and g^-inf repels.
    if plus_half:
        if up:
            if not fr.attractor_finite:
                raise UnsupportedInputError("attracting ray has infinite support")
            return BusemannPlus(fr.attractor), HEIGHT_PLUS
        if not fr.repeller_finite:
            raise UnsupportedInputError("repelling ray has infinite support")
        return HEIGHT_PLUS, BusemannPlus(fr.repeller)
    if up:
        if not fr.repeller_finite:
            raise UnsupportedInputError("repelling ray has infinite support")
        return HEIGHT_MINUS, BusemannMinus(fr.repeller)
    if not fr.attractor_finite:
        raise UnsupportedInputError("attracting ray has infinite support")
    return BusemannMinus(fr.attractor), HEIGHT_MINUS


def north_south_probe(g: LampStand, h0: Horofunction, K, budget: int = 32) -> ProbeReport:
    """Iterate ``h -> g.h`` from ``h0`` until it enters ``B_K`` of the expected pole.

    The expected pole is the attractor of ``h0``'s half, or ``h0`` itself
    when ``h0`` is the repelling fixed point.
    """
    if g.height == 0:
        raise UnsupportedInputError("north-south dynamics need an element of nonzero height")
    attractor, repeller = _poles(g, h0)
    pole = repeller if h0 == repeller else attractor
    nbhd = BasisNeighborhood(pole, K)
    trajectory = []
    hf = h0
    for n in range(budget + 1):
        trajectory.append(hf)
        if nbhd.separating_point(hf) is None:
            return ProbeReport(g, h0, pole, n, tuple(trajectory))
        hf = act(g, hf)
    return ProbeReport(g, h0, pole, None, tuple(trajectory))


def rib_bijection_check(g: LampStand, l: int, k: int) -> bool:
    """``g`` maps the positive ribs at height ``l`` with lowest lamp ``k``
    one-to-one onto those at height ``H(g)+l`` with lowest lamp ``H(g)+k``."""
    if not k < l:
        raise UnsupportedInputError(f"need k < l, got k={k}, l={l}")
    if g.lit and not g.height + k < min(g.lit):
        raise UnsupportedInputError(
            f"need H(g)+k < m(g), got H(g)+k={g.height + k}, g={serialize(g)}"
        )
    source = enumerate_rib_class(l, k)
    images = [act(g, r) for r in source]
    target = set(enumerate_rib_class(g.height + l, g.height + k))
    return len(set(images)) == len(images) == len(target) and set(images) == target
