"""Sequences in L2, their empirical horofunction limits, and classification.

A :class:`SequenceSpec` is a declarative rule ``n -> g_n``.  From a finite
horizon of such a sequence we estimate

* the limit of ``d(g_n, x) - d(g_n, id)`` on a finite set of points
  (:func:`empirical_limit`),
* where the lamplighter goes and whether the lit lamps escape to the left
  or right (:func:`stability_report`),
* and which of the eight horofunction categories the sequence converges to
  (:func:`classify`).

A finite horizon never proves a limit, so :func:`classify` answers
``Inconclusive`` whenever the data do not settle the question, and reports
``NoHorofunction`` only for the two non-convergence patterns that are
known to rule out a limit: an oscillating lamplighter, and lamps escaping
one side at a time along different subsequences.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import ClassVar, Sequence

from .core import (
    NEG_INF,
    POS_INF,
    LampStand,
    identity,
    mirror,
    parse,
    serialize,
)
from .errors import IndexRangeError, ParseError
from .horofn import (
    HEIGHT_MINUS,
    HEIGHT_PLUS,
    MINUS,
    PLUS,
    BoundaryRay,
    BusemannMinus,
    BusemannPlus,
    Horofunction,
    Point,
    RibMinus,
    RibPlus,
    Spine,
    _direction,
    ray_point,
)
from .metric import dist

__all__ = [
    "DEFAULT_HORIZON",
    "DEFAULT_WINDOW",
    "SequenceSpec",
    "SpineModel",
    "RibPlusModel",
    "RibMinusModel",
    "RayModel",
    "HeightModel",
    "Explicit",
    "Rule",
    "Custom",
    "spec_from_json",
    "materialize",
    "Stabilized",
    "Oscillating",
    "empirical_limit",
    "StabilityReport",
    "stability_report",
    "Classified",
    "NoHorofunction",
    "Inconclusive",
    "classify",
    "model_spec_for",
]

DEFAULT_HORIZON = 64
DEFAULT_WINDOW = 8


class SequenceSpec:
    family: ClassVar[str] = ""

    @property
    def start(self) -> int:
        return 0

    def materialize(self, n: int) -> LampStand:
        if n < self.start:
            raise IndexRangeError(f"index {n} is below the start index {self.start}")
        return self._at(n)

    def _at(self, n: int) -> LampStand:  # pragma: no cover - abstract
        raise NotImplementedError

    def to_json(self) -> dict:  # pragma: no cover - abstract
        raise NotImplementedError

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class SpineModel(SequenceSpec):
    """Lamps at ``-n`` and ``n``, lamplighter at ``l``."""

    l: int
    family: ClassVar[str] = "spine"

    @property
    def start(self):
        return 1

    def _at(self, n):
        return LampStand(frozenset({-n, n}), self.l)

    def to_json(self):
        return {"family": self.family, "l": self.l}


@dataclass(frozen=True)
class RibPlusModel(SequenceSpec):
    """``f``'s lamps below ``H(f)``, lamplighter at ``H(f)``, plus lamp ``n``."""

    f: LampStand
    family: ClassVar[str] = "rib+"

    def __post_init__(self):
        l = self.f.height
        object.__setattr__(self, "f", LampStand(frozenset(p for p in self.f.lit if p < l), l))

    @property
    def start(self):
        return max(self.f.height, 0)

    def _at(self, n):
        return LampStand(self.f.lit | {n}, self.f.height)

    def to_json(self):
        return {"family": self.family, "f": serialize(self.f)}


@dataclass(frozen=True)
class RibMinusModel(SequenceSpec):
    """``f``'s lamps at or above ``H(f)``, lamplighter at ``H(f)``, plus lamp ``-n``."""

    f: LampStand
    family: ClassVar[str] = "rib-"

    def __post_init__(self):
        l = self.f.height
        object.__setattr__(self, "f", LampStand(frozenset(p for p in self.f.lit if p >= l), l))

    @property
    def start(self):
        return max(1 - self.f.height, 0)

    def _at(self, n):
        return LampStand(self.f.lit | {-n}, self.f.height)

    def to_json(self):
        return {"family": self.family, "f": serialize(self.f)}


@dataclass(frozen=True)
class RayModel(SequenceSpec):
    """Points ``gamma(n)`` along the canonical geodesic ray of a boundary ray."""

    ray: BoundaryRay
    family: ClassVar[str] = "ray"

    def _at(self, n):
        return ray_point(self.ray, n)

    def to_json(self):
        return {"family": self.family, "direction": self.ray.direction, "lit": sorted(self.ray.lit)}


@dataclass(frozen=True)
class HeightModel(SequenceSpec):
    """Lamps at ``-n`` and ``n``, lamplighter at ``sign * n``."""

    sign: str
    family: ClassVar[str] = "height"

    def __post_init__(self):
        object.__setattr__(self, "sign", _direction(self.sign))

    @property
    def start(self):
        return 1

    def _at(self, n):
        return LampStand(frozenset({-n, n}), n if self.sign == PLUS else -n)

    def to_json(self):
        return {"family": self.family, "sign": self.sign}


@dataclass(frozen=True)
class Explicit(SequenceSpec):
    """A listed prefix, continued by holding the last element or cycling."""

    elements: tuple
    tail: str = "hold"
    family: ClassVar[str] = "explicit"

    def __post_init__(self):
        if not self.elements:
            raise ValueError("Explicit needs at least one element")
        if self.tail not in ("hold", "cycle"):
            raise ValueError(f"tail must be 'hold' or 'cycle', got {self.tail!r}")
        object.__setattr__(self, "elements", tuple(self.elements))

    def _at(self, n):
        if n < len(self.elements):
            return self.elements[n]
        if self.tail == "cycle":
            return self.elements[n % len(self.elements)]
        return self.elements[-1]

    def to_json(self):
        return {
            "family": self.family,
            "elements": [serialize(g) for g in self.elements],
            "tail": self.tail,
        }


@dataclass(frozen=True)
class Rule:
    """One primitive rule: ``base`` with lamps ``a*n + b`` toggled, then moved.

    The lamplighter sits at ``base.height + height_slope * n``; the result is
    translated by ``shift`` and finally reflected if ``mirror`` is set.
    """

    base: LampStand = identity()
    growing: tuple = ()
    height_slope: int = 0
    shift: int = 0
    mirror: bool = False

    def __post_init__(self):
        object.__setattr__(self, "growing", tuple(tuple(pair) for pair in self.growing))

    def apply(self, n: int) -> LampStand:
        lit = set(self.base.lit)
        for a, b in self.growing:
            lit ^= {a * n + b}
        g = LampStand(
            frozenset(p + self.shift for p in lit),
            self.base.height + self.height_slope * n + self.shift,
        )
        return mirror(g) if self.mirror else g

    def to_json(self):
        return {
            "base": serialize(self.base),
            "growing": [list(pair) for pair in self.growing],
            "height_slope": self.height_slope,
            "shift": self.shift,
            "mirror": self.mirror,
        }


@dataclass(frozen=True)
class Custom(SequenceSpec):
    """``g_n = rules[n % len(rules)].apply(n)``."""

    rules: tuple
    family: ClassVar[str] = "custom"

    def __post_init__(self):
        if not self.rules:
            raise ValueError("Custom needs at least one rule")
        object.__setattr__(self, "rules", tuple(self.rules))

    def _at(self, n):
        return self.rules[n % len(self.rules)].apply(n)

    def to_json(self):
        return {"family": self.family, "rules": [r.to_json() for r in self.rules]}


def _stand(value, where):
    try:
        return parse(value)
    except ParseError as exc:
        raise ParseError(f"bad lamp stand for {where!r}: {exc}") from None


def spec_from_json(doc) -> SequenceSpec:
    """Build a spec from a dict or JSON text such as ``{"family": "spine", "l": 3}``."""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", doc, exc.pos) from None
    if not isinstance(doc, dict) or "family" not in doc:
        raise ParseError("sequence spec must be an object with a 'family' key")
    fam = doc["family"]
    try:
        if fam == "spine":
            return SpineModel(int(doc["l"]))
        if fam == "rib+":
            return RibPlusModel(_stand(doc["f"], "f"))
        if fam == "rib-":
            return RibMinusModel(_stand(doc["f"], "f"))
        if fam == "ray":
            return RayModel(BoundaryRay(doc["direction"], frozenset(int(p) for p in doc.get("lit", ()))))
        if fam == "height":
            return HeightModel(doc["sign"])
        if fam == "explicit":
            return Explicit(tuple(_stand(e, "elements") for e in doc["elements"]), doc.get("tail", "hold"))
        if fam == "constant":
            return Explicit((_stand(doc["g"], "g"),))
        if fam == "custom":
            rules = []
            for r in doc["rules"]:
                rules.append(
                    Rule(
                        base=_stand(r.get("base", "{};0"), "base"),
                        growing=tuple((int(a), int(b)) for a, b in r.get("growing", ())),
                        height_slope=int(r.get("height_slope", 0)),
                        shift=int(r.get("shift", 0)),
                        mirror=bool(r.get("mirror", False)),
                    )
                )
            return Custom(tuple(rules))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"invalid {fam!r} sequence spec: {exc}") from None
    raise ParseError(f"unknown sequence family {fam!r}")


def materialize(spec: SequenceSpec, n: int) -> LampStand:
    return spec.materialize(n)


def model_spec_for(hf: Horofunction) -> SequenceSpec:
    """The standard sequence converging to a horofunction."""
    if isinstance(hf, Point):
        return Explicit((hf.g,))
    if isinstance(hf, Spine):
        return SpineModel(hf.l)
    if isinstance(hf, RibPlus):
        return RibPlusModel(hf.f)
    if isinstance(hf, RibMinus):
        return RibMinusModel(hf.f)
    if isinstance(hf, (BusemannPlus, BusemannMinus)):
        return RayModel(hf.ray)
    if hf == HEIGHT_PLUS:
        return HeightModel(PLUS)
    if hf == HEIGHT_MINUS:
        return HeightModel(MINUS)
    raise TypeError(f"no model sequence for {hf!r}")


# ---------------------------------------------------------------- limits


@dataclass(frozen=True)
class Stabilized:
    values: tuple
    at_n: int


@dataclass(frozen=True)
class Oscillating:
    witness: LampStand
    values: tuple
    indices: tuple
    proven: bool
    note: str = ""


def _profile(g: LampStand, points: Sequence[LampStand]) -> tuple:
    base = dist(g, identity())
    return tuple(dist(g, x) - base for x in points)


def empirical_limit(spec: SequenceSpec, K, N: int = DEFAULT_HORIZON, W: int = DEFAULT_WINDOW):
    """Estimate ``lim d(g_n, x) - d(g_n, id)`` for ``x`` in ``K``.

    Stabilized when the value vector on ``K`` is identical over the last
    ``W`` indices up to ``N``.  Otherwise an :class:`Oscillating` result
    names a point whose value changed; ``proven`` is set when that value
    also came back, i.e. the sequence of values is not merely slow.
    """
    K = list(K)
    if not K:
        raise ValueError("K must be nonempty")
    if not 0 < W < N:
        raise ValueError("need 0 < W < N")
    lo = spec.start
    if N - lo + 1 < W:
        raise ValueError(f"horizon {N} too short for window {W} from start {lo}")
    profiles = [(n, _profile(spec.materialize(n), K)) for n in range(lo, N + 1)]
    last = profiles[-1][1]
    i = len(profiles) - 1
    while i > 0 and profiles[i - 1][1] == last:
        i -= 1
    at_n = profiles[i][0]
    if N - at_n + 1 >= W:
        return Stabilized(last, at_n)

    window = profiles[-W:]
    ns = [n for n, _ in window]
    first_change = None
    for j, x in enumerate(K):
        vals = [vec[j] for _, vec in window]
        hit = _leave_and_return(vals)
        if hit is not None:
            i, k, r = hit
            return Oscillating(
                x, (vals[i], vals[k]), (ns[i], ns[k], ns[r]), True,
                "value leaves and returns within the window",
            )
        if first_change is None:
            for i in range(len(vals) - 1):
                if vals[i] != vals[i + 1]:
                    first_change = (x, (vals[i], vals[i + 1]), (ns[i], ns[i + 1]))
                    break
    x, vals, idx = first_change
    return Oscillating(x, vals, idx, False, "values still changing within the window")


def _leave_and_return(vals):
    """Indices ``i < k < r`` with ``vals[i] == vals[r] != vals[k]``, if any."""
    for i, v in enumerate(vals):
        for k in range(i + 1, len(vals)):
            if vals[k] != v:
                for r in range(k + 1, len(vals)):
                    if vals[r] == v:
                        return i, k, r
                break
    return None


# ---------------------------------------------------------------- stability


@dataclass(frozen=True)
class StabilityReport:
    """What a finite horizon says about lamplighter and lamps.

    ``height_limit`` is an int, ``POS_INF``/``NEG_INF``, ``"divergent"``, or
    None when undecided.  ``left_stable``/``right_stable`` are None when the
    horizon cannot decide.
    """

    height_limit: object
    left_stable: object
    right_stable: object
    window: tuple
    flicker_positions: frozenset
    recurrent_flicker: frozenset = frozenset()
    evidence: dict = field(default_factory=dict, compare=False)


def _windows(lo: int, N: int):
    span = N - lo
    mid = lo + span // 2
    quarter = N - max(span // 4, 1)
    return mid, quarter


def _boundedness(values, indices, quarter, threshold, upward: bool):
    """True if bounded, False if records keep growing past ``threshold``, else None."""
    prior = [v for n, v in zip(indices, values) if n < quarter]
    late = [v for n, v in zip(indices, values) if n >= quarter]
    if upward:
        best_prior = max(prior, default=NEG_INF)
        best_late = max(late)
        if best_late <= best_prior:
            return True
        return False if best_late > threshold else None
    best_prior = min(prior, default=POS_INF)
    best_late = min(late)
    if best_late >= best_prior:
        return True
    return False if best_late < -threshold else None


def _height_limit(indices, heights, mid, quarter, threshold):
    tail = [hh for n, hh in zip(indices, heights) if n >= mid]
    last = [hh for n, hh in zip(indices, heights) if n >= quarter]
    if len(set(tail)) == 1:
        return tail[0], None
    rising = all(a <= b for a, b in zip(tail, tail[1:]))
    falling = all(a >= b for a, b in zip(tail, tail[1:]))
    if rising and tail[-1] - tail[0] >= len(tail) // 2:
        return POS_INF, None
    if falling and tail[0] - tail[-1] >= len(tail) // 2:
        return NEG_INF, None
    late_idx = [n for n in indices if n >= quarter]
    if len(set(last)) > 1:
        # A value that is left and later revisited: two subsequences with
        # different limits.
        for i, v in enumerate(last):
            for j in range(i + 1, len(last)):
                if last[j] != v:
                    for k in range(j + 1, len(last)):
                        if last[k] == v:
                            return "divergent", (late_idx[i], late_idx[j], late_idx[k])
                    break
        if max(last) > threshold and min(last) < -threshold:
            hi = late_idx[last.index(max(last))]
            lo_ = late_idx[last.index(min(last))]
            return "divergent", (hi, lo_)
    # Not monotone, but the smallest value still to come keeps climbing
    # (or the largest keeps falling).
    if min(last) >= threshold and min(last) - min(tail) >= threshold // 2:
        return POS_INF, None
    if max(last) <= -threshold and max(tail) - max(last) >= threshold // 2:
        return NEG_INF, None
    return None, None


def _status_changes(elements, indices, start_index):
    changes = {}
    prev = None
    for n, g in zip(indices, elements):
        if n < start_index:
            continue
        if prev is not None:
            for p in prev.lit ^ g.lit:
                changes[p] = changes.get(p, 0) + 1
        prev = g
    return changes


def _materialize_range(spec, N):
    lo = spec.start
    if N - lo < 4:
        raise ValueError(f"horizon {N} too short (start index {lo})")
    indices = list(range(lo, N + 1))
    return indices, [spec.materialize(n) for n in indices]


def stability_report(spec: SequenceSpec, N: int = DEFAULT_HORIZON) -> StabilityReport:
    indices, elements = _materialize_range(spec, N)
    lo = indices[0]
    mid, quarter = _windows(lo, N)
    threshold = max((N - lo) // 4, 2)
    heights = [g.height for g in elements]
    hl, height_witness = _height_limit(indices, heights, mid, quarter, threshold)
    lows = [g.m for g in elements]
    highs = [g.M for g in elements]
    left = _boundedness(lows, indices, quarter, threshold, upward=False)
    right = _boundedness(highs, indices, quarter, threshold, upward=True)
    tail_changes = _status_changes(elements, indices, mid)
    late_changes = _status_changes(elements, indices, quarter)
    return StabilityReport(
        height_limit=hl,
        left_stable=left,
        right_stable=right,
        window=(lo, N),
        flicker_positions=frozenset(tail_changes),
        recurrent_flicker=frozenset(p for p, c in late_changes.items() if c >= 3),
        evidence={
            "height_witness": height_witness,
            "threshold": threshold,
            "quarter": quarter,
            "indices": indices,
            "elements": elements,
        },
    )


# ---------------------------------------------------------------- classify


@dataclass(frozen=True)
class Classified:
    """Case number (1 point, 2-3 Busemann, 4 spine, 5-6 rib, 7-8 height) and the limit."""

    case: int
    horofunction: Horofunction
    report: StabilityReport = field(compare=False, repr=False)

    def __str__(self):
        return repr(self.horofunction)


@dataclass(frozen=True)
class NoHorofunction:
    reason: str
    witness: dict
    report: StabilityReport = field(compare=False, repr=False)

    def __str__(self):
        return f"NoHorofunction({self.reason})"


@dataclass(frozen=True)
class Inconclusive:
    reason: str
    report: StabilityReport = field(compare=False, repr=False)

    def __str__(self):
        return f"Inconclusive({self.reason})"


CASE_POINT, CASE_BUS_PLUS, CASE_BUS_MINUS, CASE_SPINE = 1, 2, 3, 4
CASE_RIB_PLUS, CASE_RIB_MINUS, CASE_HEIGHT_PLUS, CASE_HEIGHT_MINUS = 5, 6, 7, 8


def _constant_on(elements, indices, start, select):
    vals = {select(g) for n, g in zip(indices, elements) if n >= start}
    return len(vals) == 1


def classify(spec: SequenceSpec, N: int = DEFAULT_HORIZON):
    rep = stability_report(spec, N)
    ev = rep.evidence
    indices, elements = ev["indices"], ev["elements"]
    quarter, threshold = ev["quarter"], ev["threshold"]
    last = elements[-1]
    hl = rep.height_limit

    if hl == "divergent":
        idx = ev["height_witness"]
        return NoHorofunction(
            "lamplighter height does not converge",
            {"indices": idx, "heights": tuple(elements[indices.index(n)].height for n in idx)},
            rep,
        )
    if hl is None:
        return Inconclusive("lamplighter height undecided within horizon", rep)

    ls, rs = rep.left_stable, rep.right_stable

    if hl == POS_INF or hl == NEG_INF:
        plus = hl == POS_INF
        stable = ls if plus else rs
        if stable is None:
            return Inconclusive("lamp escape undecided within horizon", rep)
        if not stable:
            return Classified(CASE_HEIGHT_PLUS if plus else CASE_HEIGHT_MINUS,
                              HEIGHT_PLUS if plus else HEIGHT_MINUS, rep)
        late = [g.height for n, g in zip(indices, elements) if n >= quarter]
        if plus:
            edge = min(late)
            behind = lambda g: frozenset(p for p in g.lit if p < edge)  # noqa: E731
        else:
            edge = max(late)
            behind = lambda g: frozenset(p for p in g.lit if p >= edge)  # noqa: E731
        if not _constant_on(elements, indices, quarter, behind):
            return Inconclusive("lamps behind the lamplighter not yet settled", rep)
        lit = behind(last)
        if plus:
            return Classified(CASE_BUS_PLUS, BusemannPlus(BoundaryRay(PLUS, lit)), rep)
        return Classified(CASE_BUS_MINUS, BusemannMinus(BoundaryRay(MINUS, lit)), rep)

    l = int(hl)
    if ls is None or rs is None:
        return Inconclusive("lamp escape undecided within horizon", rep)

    if ls and rs:
        if _constant_on(elements, indices, quarter, lambda g: g):
            return Classified(CASE_POINT, Point(last), rep)
        if rep.recurrent_flicker:
            p = min(rep.recurrent_flicker)
            return NoHorofunction(
                "bounded lamps keep flickering",
                {"position": p, "indices": _flicker_indices(elements, indices, quarter, p)},
                rep,
            )
        return Inconclusive("sequence not yet constant", rep)

    if ls and not rs:
        bad = sorted(p for p in rep.recurrent_flicker if p < l)
        if bad:
            return NoHorofunction(
                "lamp below the limit height keeps flickering",
                {"position": bad[0], "indices": _flicker_indices(elements, indices, quarter, bad[0])},
                rep,
            )
        below = lambda g: frozenset(p for p in g.lit if p < l)  # noqa: E731
        if not _constant_on(elements, indices, quarter, below):
            return Inconclusive("lamps below the lamplighter not yet settled", rep)
        return Classified(CASE_RIB_PLUS, RibPlus(LampStand(below(last), l)), rep)

    if rs and not ls:
        bad = sorted(p for p in rep.recurrent_flicker if p >= l)
        if bad:
            return NoHorofunction(
                "lamp at or above the limit height keeps flickering",
                {"position": bad[0], "indices": _flicker_indices(elements, indices, quarter, bad[0])},
                rep,
            )
        above = lambda g: frozenset(p for p in g.lit if p >= l)  # noqa: E731
        if not _constant_on(elements, indices, quarter, above):
            return Inconclusive("lamps above the lamplighter not yet settled", rep)
        return Classified(CASE_RIB_MINUS, RibMinus(LampStand(above(last), l)), rep)

    # Neither side stable: the lamps must escape both ways along one
    # subsequence; one-sided escapes along different subsequences give two
    # different ribs, so there is no limit.
    joint, left_only, right_only, neither = [], [], [], []
    for n, g in zip(indices, elements):
        if n < quarter:
            continue
        far_left = g.m < -threshold
        far_right = g.M > threshold
        if far_left and far_right:
            joint.append(n)
        elif far_left:
            left_only.append(n)
        elif far_right:
            right_only.append(n)
        else:
            neither.append(n)
    if joint and not (left_only or right_only or neither):
        return Classified(CASE_SPINE, Spine(l), rep)
    groups = [(name, idx) for name, idx in
              (("both", joint), ("left only", left_only), ("right only", right_only)) if len(idx) >= 2]
    if len(groups) >= 2:
        (a_name, a_idx), (b_name, b_idx) = groups[:2]
        return NoHorofunction(
            "lamps escape on different sides along different subsequences",
            {a_name: tuple(a_idx[:3]), b_name: tuple(b_idx[:3])},
            rep,
        )
    return Inconclusive("two-sided lamp escape not established", rep)


def _flicker_indices(elements, indices, start, p):
    out = []
    prev = None
    for n, g in zip(indices, elements):
        if n < start:
            continue
        state = p in g.lit
        if prev is not None and state != prev:
            out.append(n)
        prev = state
    return tuple(out[:3])
