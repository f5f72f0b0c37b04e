"""Lamp-stand model of the lamplighter group L2 = Z/2 wr Z.

An element is a finite set of lit lamp positions together with the
lamplighter's position (its height).  Right multiplication by ``t`` steps
the lamplighter right, right multiplication by ``a`` toggles the lamp under
it.  The word metric used throughout the package is the one for the
generating set ``{t, at}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Sequence

from .errors import ParseError

__all__ = [
    "ExtInt",
    "POS_INF",
    "NEG_INF",
    "ext_min",
    "ext_max",
    "LampStand",
    "identity",
    "h",
    "m",
    "M",
    "diff_m",
    "diff_M",
    "mul",
    "inverse",
    "power",
    "mirror",
    "apply_word",
    "parse_word",
    "format_word",
    "generator",
    "parse",
    "serialize",
    "T",
    "T_INV",
    "AT",
    "AT_INV",
    "A",
]


@total_ordering
class ExtInt:
    """An element of Z u {-inf, +inf}.

    Finite values compare and hash like the plain ``int`` they wrap, so
    ``ExtInt(3) == 3`` and both may be used as the same dict key.  Adding a
    finite integer to an infinity leaves it unchanged.
    """

    __slots__ = ("_rank", "_value")

    def __init__(self, value: int):
        if isinstance(value, ExtInt):
            self._rank, self._value = value._rank, value._value
            return
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"ExtInt needs an int, got {value!r}")
        self._rank = 0
        self._value = int(value)

    @classmethod
    def _infinite(cls, rank: int) -> "ExtInt":
        obj = cls.__new__(cls)
        obj._rank = rank
        obj._value = 0
        return obj

    @property
    def is_finite(self) -> bool:
        return self._rank == 0

    def _key(self):
        return (self._rank, self._value)

    @staticmethod
    def _coerce(other):
        if isinstance(other, ExtInt):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return ExtInt(other)
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._value) if self._rank == 0 else hash(("ExtInt", self._rank))

    def __add__(self, other):
        if isinstance(other, ExtInt):
            if not other.is_finite:
                if self.is_finite or self._rank == other._rank:
                    return other
                raise ArithmeticError("+inf + -inf is undefined")
            other = other._value
        if isinstance(other, bool) or not isinstance(other, int):
            return NotImplemented
        if not self.is_finite:
            return self
        return ExtInt(self._value + other)

    __radd__ = __add__

    def __neg__(self):
        if self.is_finite:
            return ExtInt(-self._value)
        return ExtInt._infinite(-self._rank)

    def __int__(self):
        if not self.is_finite:
            raise OverflowError(f"{self} has no integer value")
        return self._value

    __index__ = __int__

    def __str__(self):
        if self._rank > 0:
            return "+inf"
        if self._rank < 0:
            return "-inf"
        return str(self._value)

    def __repr__(self):
        return f"ExtInt({self})" if self.is_finite else str(self)

    def to_json(self):
        """Integers stay integers; infinities become the strings ``"+inf"``/``"-inf"``."""
        return self._value if self.is_finite else str(self)

    @classmethod
    def from_json(cls, value) -> "ExtInt":
        if value in ("+inf", "inf"):
            return POS_INF
        if value == "-inf":
            return NEG_INF
        return cls(value)


POS_INF = ExtInt._infinite(1)
NEG_INF = ExtInt._infinite(-1)


def ext_min(*values) -> ExtInt:
    """Minimum over ints and ExtInts, returned as an ExtInt."""
    return min(ExtInt(v) for v in values)


def ext_max(*values) -> ExtInt:
    return max(ExtInt(v) for v in values)


@dataclass(frozen=True, eq=True)
class LampStand:
    """A group element: lit lamp positions and lamplighter height."""

    lit: frozenset
    height: int = 0

    def __post_init__(self):
        lit = frozenset(self.lit)
        for p in lit:
            if isinstance(p, bool) or not isinstance(p, int):
                raise TypeError(f"lamp positions must be ints, got {p!r}")
        if isinstance(self.height, bool) or not isinstance(self.height, int):
            raise TypeError(f"height must be an int, got {self.height!r}")
        object.__setattr__(self, "lit", lit)

    @classmethod
    def of(cls, lit: Iterable[int] = (), height: int = 0) -> "LampStand":
        return cls(frozenset(lit), height)

    @property
    def m(self) -> ExtInt:
        return m(self)

    @property
    def M(self) -> ExtInt:
        return M(self)

    def sort_key(self):
        return (self.height, len(self.lit), tuple(sorted(self.lit)))

    def __mul__(self, other):
        if not isinstance(other, LampStand):
            return NotImplemented
        return mul(self, other)

    def __invert__(self):
        return inverse(self)

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        return f"LampStand({serialize(self)!r})"


_IDENTITY = LampStand(frozenset(), 0)


def identity() -> LampStand:
    return _IDENTITY


def h(g: LampStand) -> int:
    return g.height


def m(g: LampStand) -> ExtInt:
    """Lowest lit lamp, ``+inf`` when nothing is lit."""
    return ExtInt(min(g.lit)) if g.lit else POS_INF


def M(g: LampStand) -> ExtInt:
    """Highest lit lamp, ``-inf`` when nothing is lit."""
    return ExtInt(max(g.lit)) if g.lit else NEG_INF


def diff_m(g1: LampStand, g2: LampStand) -> ExtInt:
    d = g1.lit ^ g2.lit
    return ExtInt(min(d)) if d else POS_INF


def diff_M(g1: LampStand, g2: LampStand) -> ExtInt:
    d = g1.lit ^ g2.lit
    return ExtInt(max(d)) if d else NEG_INF


def mul(g1: LampStand, g2: LampStand) -> LampStand:
    """Group product: run ``g2``'s moves starting from ``g1``'s lamplighter."""
    shift = g1.height
    return LampStand(g1.lit ^ frozenset(p + shift for p in g2.lit), g1.height + g2.height)


def inverse(g: LampStand) -> LampStand:
    shift = g.height
    return LampStand(frozenset(p - shift for p in g.lit), -shift)


def power(g: LampStand, n: int) -> LampStand:
    base = g if n >= 0 else inverse(g)
    out = _IDENTITY
    for _ in range(abs(n)):
        out = mul(out, base)
    return out


def mirror(g: LampStand) -> LampStand:
    """Reflect the lamp stand: lamp ``p`` goes to ``-1-p``, height to ``-height``.

    This swaps ``at`` with ``(at)^-1`` and ``t`` with ``t^-1``, so it is an
    isometry of the word metric (not a group homomorphism).
    """
    return LampStand(frozenset(-1 - p for p in g.lit), -g.height)


# Word letters.  Canonical spelling is ASCII.
T = "t"
T_INV = "t^-1"
AT = "at"
AT_INV = "(at)^-1"
A = "a"

_ALIASES = {
    "t": T,
    "t^-1": T_INV,
    "t⁻¹": T_INV,
    "T": T_INV,
    "at": AT,
    "(at)^-1": AT_INV,
    "(at)⁻¹": AT_INV,
    "t^-1a": AT_INV,
    "t⁻¹a": AT_INV,
    "A": AT_INV,
    "a": A,
}

_GENERATORS = {
    T: LampStand(frozenset(), 1),
    T_INV: LampStand(frozenset(), -1),
    AT: LampStand(frozenset({0}), 1),
    AT_INV: LampStand(frozenset({-1}), -1),
    A: LampStand(frozenset({0}), 0),
}


def generator(letter: str) -> LampStand:
    """The group element spelled by a single letter."""
    return _GENERATORS[parse_word([letter])[0]]


def parse_word(word) -> tuple:
    """Normalize a word to a tuple of canonical letters.

    Accepts a whitespace/comma separated string or an iterable of letters.
    """
    if isinstance(word, str):
        tokens = []
        pos = 0
        for raw in word.replace(",", " ").split(" "):
            if raw:
                tokens.append((raw, word.index(raw, pos)))
                pos = tokens[-1][1] + len(raw)
    else:
        tokens = [(tok, None) for tok in word]
    out = []
    for tok, where in tokens:
        try:
            out.append(_ALIASES[tok])
        except (KeyError, TypeError):
            raise ParseError(f"unknown word letter {tok!r}", word, where) from None
    return tuple(out)


def format_word(word: Sequence[str]) -> str:
    return " ".join(word)


def apply_word(start: LampStand, word) -> LampStand:
    """Right-multiply ``start`` by the letters of ``word`` in order."""
    lit = set(start.lit)
    pos = start.height
    for letter in parse_word(word):
        if letter == T:
            pos += 1
        elif letter == T_INV:
            pos -= 1
        elif letter == AT:
            lit ^= {pos}
            pos += 1
        elif letter == AT_INV:
            pos -= 1
            lit ^= {pos}
        else:
            lit ^= {pos}
    return LampStand(frozenset(lit), pos)


def serialize(g: LampStand) -> str:
    """Canonical text form ``{p1,p2,...};h`` with lamps ascending."""
    return "{" + ",".join(str(p) for p in sorted(g.lit)) + "};" + str(g.height)


def _parse_int(text: str, i: int, whole: str):
    j = i
    if j < len(text) and text[j] in "+-":
        j += 1
    k = j
    while k < len(text) and text[k].isdigit():
        k += 1
    if k == j:
        raise ParseError("expected an integer", whole, i)
    return int(text[i:k]), k


def _skip_ws(text: str, i: int) -> int:
    while i < len(text) and text[i].isspace():
        i += 1
    return i


def parse_lamp_set(text: str, i: int = 0, whole: str | None = None):
    """Parse ``{...}`` starting at ``i``; returns the frozenset and end index."""
    whole = text if whole is None else whole
    i = _skip_ws(text, i)
    if i >= len(text) or text[i] != "{":
        raise ParseError("expected '{'", whole, i)
    i = _skip_ws(text, i + 1)
    lamps = []
    if i < len(text) and text[i] == "}":
        return frozenset(), i + 1
    while True:
        value, i = _parse_int(text, i, whole)
        lamps.append(value)
        i = _skip_ws(text, i)
        if i < len(text) and text[i] == ",":
            i = _skip_ws(text, i + 1)
            continue
        if i < len(text) and text[i] == "}":
            i += 1
            break
        raise ParseError("expected ',' or '}'", whole, i)
    if len(set(lamps)) != len(lamps):
        raise ParseError("duplicate lamp position", whole, i - 1)
    return frozenset(lamps), i


def parse(text: str) -> LampStand:
    """Inverse of :func:`serialize`; lamps may be listed in any order."""
    if not isinstance(text, str):
        raise ParseError(f"expected text, got {type(text).__name__}")
    lit, i = parse_lamp_set(text)
    i = _skip_ws(text, i)
    if i >= len(text) or text[i] != ";":
        raise ParseError("expected ';'", text, i)
    height, i = _parse_int(text, _skip_ws(text, i + 1), text)
    i = _skip_ws(text, i)
    if i != len(text):
        raise ParseError("trailing characters", text, i)
    return LampStand(lit, height)
