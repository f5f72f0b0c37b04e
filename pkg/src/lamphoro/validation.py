"""Input coercion helpers shared by the estimators and the CLI."""

from __future__ import annotations

from .classify import Explicit, SequenceSpec, spec_from_json
from .core import LampStand, parse
from .horofn import Horofunction, parse_horofunction

__all__ = [
    "check_lamp_stand",
    "check_lamp_stands",
    "check_horofunction",
    "check_sequence",
]


def check_lamp_stand(x) -> LampStand:
    """Accept a LampStand, its text form, or a ``(lamps, height)`` pair."""
    if isinstance(x, LampStand):
        return x
    if isinstance(x, str):
        return parse(x)
    if isinstance(x, (tuple, list)) and len(x) == 2:
        lamps, height = x
        return LampStand(frozenset(int(p) for p in lamps), int(height))
    raise TypeError(f"cannot interpret {x!r} as a lamp stand")


def check_lamp_stands(X) -> list:
    if isinstance(X, (str, LampStand)):
        raise TypeError("expected a collection of lamp stands, got a single one")
    out = [check_lamp_stand(x) for x in X]
    if not out:
        raise ValueError("expected at least one lamp stand")
    return out


def check_horofunction(hf) -> Horofunction:
    if isinstance(hf, Horofunction):
        return hf
    if isinstance(hf, str):
        return parse_horofunction(hf)
    raise TypeError(f"cannot interpret {hf!r} as a horofunction")


def check_sequence(X) -> SequenceSpec:
    """A SequenceSpec, its JSON document, or a finite list held at its last element."""
    if isinstance(X, SequenceSpec):
        return X
    if isinstance(X, dict) or (isinstance(X, str) and X.lstrip().startswith("{\"")):
        return spec_from_json(X)
    return Explicit(tuple(check_lamp_stands(X)))
