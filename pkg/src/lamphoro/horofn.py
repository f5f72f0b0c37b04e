"""Horofunctions on L2 and their closed-form evaluators.

Every horofunction is normalized to vanish at the identity.  The families
are: interior points, the spine ``Spine(l)``, positive and negative ribs
parametrized by a lamp stand, Busemann functions of finitely supported
boundary rays in either direction, and the height function with either
sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import ClassVar, Iterable

from .core import (
    AT,
    AT_INV,
    NEG_INF,
    POS_INF,
    T,
    T_INV,
    ExtInt,
    LampStand,
    apply_word,
    ext_max,
    ext_min,
    identity,
    parse,
    parse_lamp_set,
    parse_word,
    serialize,
)
from .errors import InvalidRayError, ParseError, UnsupportedInputError
from .metric import dist

__all__ = [
    "PLUS",
    "MINUS",
    "BoundaryRay",
    "Horofunction",
    "Point",
    "Spine",
    "RibPlus",
    "RibMinus",
    "BusemannPlus",
    "BusemannMinus",
    "HeightPlus",
    "HeightMinus",
    "HEIGHT_PLUS",
    "HEIGHT_MINUS",
    "evaluate",
    "rib_tip",
    "rib_class_size",
    "enumerate_rib_class",
    "busemann_of_ray",
    "ray_word",
    "ray_point",
    "parse_horofunction",
    "format_horofunction",
]

PLUS = "+"
MINUS = "-"


def _direction(value) -> str:
    if value in (PLUS, "plus", 1, "+1"):
        return PLUS
    if value in (MINUS, "minus", -1, "-1"):
        return MINUS
    raise ValueError(f"direction must be plus or minus, got {value!r}")


def _set_text(lit) -> str:
    return "{" + ",".join(str(p) for p in sorted(lit)) + "}"


@dataclass(frozen=True)
class BoundaryRay:
    """Asymptotic class of a geodesic ray, stored as its limiting lamp set.

    ``direction`` says where the lamplighter ends up (``+`` or ``-`` infinity).
    Only finitely many lamps may be lit.
    """

    direction: str
    lit: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "direction", _direction(self.direction))
        object.__setattr__(self, "lit", frozenset(self.lit))

    @property
    def m(self) -> ExtInt:
        return ExtInt(min(self.lit)) if self.lit else POS_INF

    @property
    def M(self) -> ExtInt:
        return ExtInt(max(self.lit)) if self.lit else NEG_INF

    def __str__(self):
        return self.direction + _set_text(self.lit)


class Horofunction:
    """Base class; concrete families are frozen dataclasses below."""

    family: ClassVar[str] = ""

    def __call__(self, g: LampStand) -> int:
        return self.evaluate(g)

    def evaluate(self, g: LampStand) -> int:  # pragma: no cover - abstract
        raise NotImplementedError

    def __str__(self):
        return format_horofunction(self)


def _spine(l: int, x: int) -> int:
    return abs(l) - abs(l - x)


@dataclass(frozen=True, eq=True)
class Point(Horofunction):
    g: LampStand
    family: ClassVar[str] = "point"

    def evaluate(self, x):
        return dist(self.g, x) - dist(self.g, identity())

    def __repr__(self):
        return f"Point({serialize(self.g)})"


@dataclass(frozen=True, eq=True)
class Spine(Horofunction):
    l: int
    family: ClassVar[str] = "spine"

    def evaluate(self, x):
        return _spine(self.l, x.height)

    def __repr__(self):
        return f"Spine({self.l})"


@dataclass(frozen=True, eq=True)
class RibPlus(Horofunction):
    """Positive rib at height ``l = f.height``; needs every lamp of ``f`` below ``l``."""

    f: LampStand
    family: ClassVar[str] = "rib+"

    def __post_init__(self):
        if self.f.lit and max(self.f.lit) >= self.f.height:
            raise UnsupportedInputError(
                f"positive rib needs M(f) < H(f), got {serialize(self.f)}"
            )

    @classmethod
    def normalized(cls, f: LampStand) -> "RibPlus":
        """Build from any ``f``; lamps at or above its height are ignored."""
        l = f.height
        return cls(LampStand(frozenset(p for p in f.lit if p < l), l))

    @property
    def l(self) -> int:
        return self.f.height

    def evaluate(self, x):
        f, l = self.f, self.f.height
        d = f.lit ^ x.lit
        mfx = min(d) if d else POS_INF
        low = int(ext_min(f.m, l, 0)) - int(ext_min(mfx, x.height, l))
        return 2 * low + _spine(l, x.height)

    def __repr__(self):
        return f"RibPlus({serialize(self.f)})"


@dataclass(frozen=True, eq=True)
class RibMinus(Horofunction):
    """Negative rib at height ``l = f.height``; needs every lamp of ``f`` at or above ``l``."""

    f: LampStand
    family: ClassVar[str] = "rib-"

    def __post_init__(self):
        if self.f.lit and min(self.f.lit) < self.f.height:
            raise UnsupportedInputError(
                f"negative rib needs m(f) >= H(f), got {serialize(self.f)}"
            )

    @classmethod
    def normalized(cls, f: LampStand) -> "RibMinus":
        """Build from any ``f``; lamps strictly below its height are ignored."""
        l = f.height
        return cls(LampStand(frozenset(p for p in f.lit if p >= l), l))

    @property
    def l(self) -> int:
        return self.f.height

    def evaluate(self, x):
        f, l = self.f, self.f.height
        d = f.lit ^ x.lit
        Mfx = max(d) if d else NEG_INF
        high = int(ext_max(Mfx + 1, x.height, l)) - int(ext_max(f.M + 1, l, 0))
        return 2 * high + _spine(l, x.height)

    def __repr__(self):
        return f"RibMinus({serialize(self.f)})"


@dataclass(frozen=True, eq=True)
class BusemannPlus(Horofunction):
    ray: BoundaryRay
    family: ClassVar[str] = "bus+"

    def __post_init__(self):
        if not isinstance(self.ray, BoundaryRay):
            object.__setattr__(self, "ray", BoundaryRay(PLUS, self.ray))
        if self.ray.direction != PLUS:
            raise UnsupportedInputError("BusemannPlus needs a plus-direction ray")

    def evaluate(self, x):
        d = self.ray.lit ^ x.lit
        mgx = min(d) if d else POS_INF
        return 2 * (int(ext_min(self.ray.m, 0)) - int(ext_min(mgx, x.height))) + x.height

    def __repr__(self):
        return f"BusemannPlus({_set_text(self.ray.lit)})"


@dataclass(frozen=True, eq=True)
class BusemannMinus(Horofunction):
    ray: BoundaryRay
    family: ClassVar[str] = "bus-"

    def __post_init__(self):
        if not isinstance(self.ray, BoundaryRay):
            object.__setattr__(self, "ray", BoundaryRay(MINUS, self.ray))
        if self.ray.direction != MINUS:
            raise UnsupportedInputError("BusemannMinus needs a minus-direction ray")

    def evaluate(self, x):
        d = self.ray.lit ^ x.lit
        Mgx = max(d) if d else NEG_INF
        return 2 * (int(ext_max(Mgx + 1, x.height)) - int(ext_max(self.ray.M + 1, 0))) - x.height

    def __repr__(self):
        return f"BusemannMinus({_set_text(self.ray.lit)})"


@dataclass(frozen=True, eq=True)
class HeightPlus(Horofunction):
    family: ClassVar[str] = "H+"

    def evaluate(self, x):
        return x.height

    def __repr__(self):
        return "HeightPlus"


@dataclass(frozen=True, eq=True)
class HeightMinus(Horofunction):
    family: ClassVar[str] = "H-"

    def evaluate(self, x):
        return -x.height

    def __repr__(self):
        return "HeightMinus"


HEIGHT_PLUS = HeightPlus()
HEIGHT_MINUS = HeightMinus()


def evaluate(hf: Horofunction, g: LampStand) -> int:
    return hf.evaluate(g)


def rib_tip(direction, l: int) -> Horofunction:
    f = LampStand(frozenset(), l)
    return RibPlus(f) if _direction(direction) == PLUS else RibMinus(f)


def rib_class_size(l: int, k, direction=PLUS) -> int:
    """Number of ribs at height ``l`` whose extreme lit lamp sits at ``k``.

    For positive ribs ``k`` is the lowest lit lamp (``+inf`` for the tip):
    ``2**(l-k-1)`` when ``k < l``.  Negative ribs mirror this with the
    highest lit lamp ``k >= l`` (``-inf`` for the tip): ``2**(k-l)``.
    """
    k = ExtInt(k)
    if _direction(direction) == PLUS:
        if k == POS_INF:
            return 1
        if k.is_finite and k < l:
            return 1 << (l - int(k) - 1)
        return 0
    if k == NEG_INF:
        return 1
    if k.is_finite and k >= l:
        return 1 << (int(k) - l)
    return 0


def enumerate_rib_class(l: int, k, direction=PLUS) -> list:
    """All ribs counted by :func:`rib_class_size`, in a deterministic order."""
    k = ExtInt(k)
    plus = _direction(direction) == PLUS
    if rib_class_size(l, k, direction) == 0:
        return []
    if not k.is_finite:
        return [rib_tip(direction, l)]
    k = int(k)
    free = list(range(k + 1, l)) if plus else list(range(l, k))
    out = []
    for r in range(len(free) + 1):
        for chosen in combinations(free, r):
            f = LampStand(frozenset(chosen) | {k}, l)
            out.append(RibPlus(f) if plus else RibMinus(f))
    return out


def ray_word(ray: BoundaryRay, n: int) -> tuple:
    """First ``n`` letters of the canonical geodesic ray with the given lamps.

    A plus ray first walks left to its lowest lamp (if negative) and then
    marches right toggling its lamps; a minus ray is the mirror image.
    """
    word = []
    if ray.direction == PLUS:
        lo = int(ext_min(ray.m, 0))
        word += [T_INV] * (-lo)
        p = lo
        while len(word) < n:
            word.append(AT if p in ray.lit else T)
            p += 1
    else:
        hi = int(ext_max(ray.M + 1, 0))
        word += [T] * hi
        p = hi
        while len(word) < n:
            p -= 1
            word.append(AT_INV if p in ray.lit else T_INV)
    return tuple(word[:n])


def ray_point(ray: BoundaryRay, n: int) -> LampStand:
    return apply_word(identity(), ray_word(ray, n))


def busemann_of_ray(prefix, direction) -> Horofunction:
    """Busemann function of the ray ``prefix`` followed by an endless march.

    ``prefix`` must be geodesic and must stay geodesic when continued by
    ``t`` (plus) or ``t^-1`` (minus) forever.  The invariant lamp set is the
    lamp configuration at the end of the prefix.
    """
    direction = _direction(direction)
    word = parse_word(prefix)
    step = T if direction == PLUS else T_INV
    g = identity()
    for i, letter in enumerate(word, 1):
        g = apply_word(g, (letter,))
        if dist(identity(), g) != i:
            raise InvalidRayError(f"prefix is not geodesic at letter {i} ({letter})")
    # Beyond this many extra steps the distance grows by exactly one per step.
    if direction == PLUS:
        extra = max(0, int(ext_max(g.M + 1, 0)) - g.height) + 2
    else:
        extra = max(0, g.height - int(ext_min(g.m, 0))) + 2
    x = g
    for j in range(1, extra + 1):
        x = apply_word(x, (step,))
        if dist(identity(), x) != len(word) + j:
            raise InvalidRayError("prefix followed by the final march is not geodesic")
    ray = BoundaryRay(direction, g.lit)
    return BusemannPlus(ray) if direction == PLUS else BusemannMinus(ray)


def format_horofunction(hf: Horofunction) -> str:
    """Literal syntax: ``point:{..};h``, ``spine:l``, ``rib+:{..};h``, ``bus+:{..}``, ``H+``..."""
    if isinstance(hf, Point):
        return "point:" + serialize(hf.g)
    if isinstance(hf, Spine):
        return f"spine:{hf.l}"
    if isinstance(hf, RibPlus):
        return "rib+:" + serialize(hf.f)
    if isinstance(hf, RibMinus):
        return "rib-:" + serialize(hf.f)
    if isinstance(hf, BusemannPlus):
        return "bus+:" + _set_text(hf.ray.lit)
    if isinstance(hf, BusemannMinus):
        return "bus-:" + _set_text(hf.ray.lit)
    if isinstance(hf, HeightPlus):
        return "H+"
    if isinstance(hf, HeightMinus):
        return "H-"
    raise TypeError(f"not a horofunction: {hf!r}")


def parse_horofunction(text: str) -> Horofunction:
    text = text.strip()
    if text in ("H+", "H"):
        return HEIGHT_PLUS
    if text == "H-":
        return HEIGHT_MINUS
    tag, sep, body = text.partition(":")
    if not sep:
        raise ParseError(f"unknown horofunction literal {text!r}", text, 0)
    offset = len(tag) + 1

    def _stand():
        try:
            return parse(body)
        except ParseError as exc:
            pos = None if exc.position is None else exc.position + offset
            raise ParseError(f"bad lamp stand in {text!r}", text, pos) from None

    if tag == "point":
        return Point(_stand())
    if tag == "spine":
        try:
            return Spine(int(body))
        except ValueError:
            raise ParseError("expected an integer height", text, offset) from None
    if tag in ("rib+", "rib-"):
        f = _stand()
        try:
            return RibPlus(f) if tag == "rib+" else RibMinus(f)
        except UnsupportedInputError as exc:
            raise ParseError(str(exc), text, offset) from None
    if tag in ("bus+", "bus-"):
        try:
            lit, end = parse_lamp_set(body)
        except ParseError as exc:
            pos = None if exc.position is None else exc.position + offset
            raise ParseError(f"bad lamp set in {text!r}", text, pos) from None
        rest = body[end:]
        if rest.strip():
            skipped = len(rest) - len(rest.lstrip())
            raise ParseError("trailing characters", text, offset + end + skipped)
        if tag == "bus+":
            return BusemannPlus(BoundaryRay(PLUS, lit))
        return BusemannMinus(BoundaryRay(MINUS, lit))
    raise ParseError(f"unknown horofunction family {tag!r}", text, 0)


def horofunctions_equal(a: Horofunction, b: Horofunction) -> bool:
    """Distinct (family, normalized payload) pairs are distinct functions."""
    return a == b


def iter_values(hf: Horofunction, points: Iterable[LampStand]) -> tuple:
    return tuple(hf.evaluate(x) for x in points)
