"""Command-line interface: ``lamphoro <verb> ...``.

Exit status is 0 on success, 2 for unparsable or invalid input and 3 when
a resource cap (ball radius, horizon, budget) would be exceeded.  With
``--json`` every verb prints line-delimited JSON records carrying a
``schema_version`` field.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .action import act, north_south_probe, orbit
from .classify import (
    Classified,
    NoHorofunction,
    Stabilized,
    classify,
    empirical_limit,
    spec_from_json,
)
from .core import NEG_INF, POS_INF, ExtInt, apply_word, format_word, identity, parse, parse_word, serialize
from .errors import LamphoroError, ResourceLimitError
from .horofn import (
    enumerate_rib_class,
    format_horofunction,
    parse_horofunction,
    rib_class_size,
)
from .metric import distance, geodesic_witness
from .oracle import bfs_ball, export_dot, growth_csv
from .topology import ConvergedBy, converges_to, family_from_json

SCHEMA_VERSION = 1

DEFAULT_RADIUS_CAP = 12
DEFAULT_HORIZON_CAP = 64
DEFAULT_BUDGET_CAP = 64


def _env_int(name, default):
    value = os.environ.get(name)
    return int(value) if value else default


class _Output:
    def __init__(self, args, verb):
        self.json = args.json
        self.verb = verb
        self.lines = []

    def emit(self, text, **record):
        if self.json:
            record = {"schema_version": SCHEMA_VERSION, "verb": self.verb, **record}
            self.lines.append(json.dumps(record, sort_keys=True))
        else:
            self.lines.append(text)

    def raw(self, text):
        self.lines.append(text.rstrip("\n"))


def _element(text):
    """A lamp-stand literal, or a word over the generators read from the identity."""
    if text.lstrip().startswith("{"):
        return parse(text)
    return apply_word(identity(), parse_word(text))


def _check_cap(value, cap, what):
    if value is not None and value > cap:
        raise ResourceLimitError(f"{what} {value} exceeds cap {cap}")


def _ball(args, radius):
    _check_cap(radius, args.radius_cap, "radius")
    return bfs_ball(radius, cap=args.radius_cap)


def _points(args, default_radius):
    if getattr(args, "points", None):
        return [_element(p) for p in args.points]
    radius = default_radius if args.radius is None else args.radius
    return _ball(args, radius).members()


def _horizon(args):
    _check_cap(args.horizon, args.horizon_cap, "horizon")
    return args.horizon


def _budget(args, default):
    budget = default if args.budget is None else args.budget
    _check_cap(budget, args.budget_cap, "budget")
    return budget


def cmd_dist(args, out):
    g1, g2 = _element(args.g1), _element(args.g2)
    bd = distance(g1, g2)
    out.emit(str(bd), g1=serialize(g1), g2=serialize(g2),
             distance=bd.distance, A=bd.A, B=bd.B, C=bd.C)


def cmd_geodesic(args, out):
    g1, g2 = _element(args.g1), _element(args.g2)
    word = geodesic_witness(g1, g2)
    out.emit(f"{len(word)}: {format_word(word) or '(empty)'}", g1=serialize(g1), g2=serialize(g2),
             length=len(word), word=list(word))


def cmd_ball(args, out):
    ball = _ball(args, 3 if args.radius is None else args.radius)
    for g in ball.members():
        key = serialize(g)
        out.emit(f"{key} {ball.dist[key]}", element=key, distance=ball.dist[key])


def cmd_growth(args, out):
    ball = _ball(args, 8 if args.radius is None else args.radius)
    if out.json:
        total = 0
        for r, size in enumerate(ball.sphere_sizes):
            total += size
            out.emit("", radius=r, sphere_size=size, ball_size=total)
    else:
        out.raw(growth_csv(ball))


def cmd_export_dot(args, out):
    ball = _ball(args, 2 if args.radius is None else args.radius)
    dot = export_dot(ball, args.max_radius)
    if out.json:
        out.emit("", radius=ball.radius, dot=dot)
    else:
        out.raw(dot)


def cmd_horo_eval(args, out):
    hf = parse_horofunction(args.horofunction)
    for text in args.elements:
        g = _element(text)
        value = hf(g)
        out.emit(str(value), horofunction=format_horofunction(hf), element=serialize(g), value=value)


def cmd_horo_limit(args, out):
    spec = spec_from_json(args.spec)
    K = _points(args, 4)
    res = empirical_limit(spec, K, _horizon(args), args.window)
    if isinstance(res, Stabilized):
        out.emit(f"Stabilized(at_n={res.at_n})", result="stabilized", at_n=res.at_n)
        for x, v in zip(K, res.values):
            out.emit(f"{serialize(x)} {v}", element=serialize(x), value=v)
    else:
        out.emit(
            f"Oscillating(x={serialize(res.witness)}, values={list(res.values)}, "
            f"indices={list(res.indices)}, proven={res.proven})",
            result="oscillating",
            witness=serialize(res.witness),
            values=list(res.values),
            indices=list(res.indices),
            proven=res.proven,
            note=res.note,
        )


def cmd_classify(args, out):
    spec = spec_from_json(args.spec)
    res = classify(spec, _horizon(args))
    if isinstance(res, Classified):
        out.emit(str(res), result="classified", case=res.case,
                 horofunction=format_horofunction(res.horofunction))
    elif isinstance(res, NoHorofunction):
        out.emit(f"NoHorofunction: {res.reason} {json.dumps(res.witness, sort_keys=True)}",
                 result="no-horofunction", reason=res.reason, witness=res.witness)
    else:
        out.emit(f"Inconclusive: {res.reason}", result="inconclusive", reason=res.reason)


def cmd_act(args, out):
    g, hf = _element(args.g), parse_horofunction(args.horofunction)
    res = act(g, hf)
    out.emit(format_horofunction(res), g=serialize(g), horofunction=format_horofunction(hf),
             result=format_horofunction(res))


def cmd_orbit(args, out):
    g, hf = _element(args.g), parse_horofunction(args.horofunction)
    for n, h_n in enumerate(orbit(g, hf, _budget(args, 8))):
        out.emit(f"{n} {format_horofunction(h_n)}", n=n, horofunction=format_horofunction(h_n))


def cmd_dynamics(args, out):
    g, hf = _element(args.g), parse_horofunction(args.horofunction)
    K = _points(args, 2)
    rep = north_south_probe(g, hf, K, _budget(args, 32))
    pole = format_horofunction(rep.pole)
    for n, h_n in enumerate(rep.trajectory):
        out.emit(f"{n} {format_horofunction(h_n)}", n=n, horofunction=format_horofunction(h_n))
    if rep.converged:
        out.emit(f"reached {pole} at n={rep.reached_at}", pole=pole, reached_at=rep.reached_at)
    else:
        out.emit(f"did not reach {pole} within budget", pole=pole, reached_at=None)


def cmd_topology_limit(args, out):
    family = family_from_json(args.family)
    limit = parse_horofunction(args.limit)
    K = _points(args, 2)
    res = converges_to(family, limit, K, _budget(args, 32))
    if isinstance(res, ConvergedBy):
        out.emit(f"ConvergedBy({res.n0})", result="converged", n0=res.n0)
    else:
        out.emit(f"NotWithinBudget(n={res.n}, x={serialize(res.x)}, values={list(res.values)})",
                 result="not-within-budget", n=res.n, x=serialize(res.x), values=list(res.values))


def cmd_rib_enum(args, out):
    if args.k == "tip":
        k = POS_INF if args.direction == "plus" else NEG_INF
    elif args.k in ("+inf", "-inf"):
        k = ExtInt.from_json(args.k)
    else:
        k = ExtInt(int(args.k))
    ribs = enumerate_rib_class(args.l, k, args.direction)
    size = rib_class_size(args.l, k, args.direction)
    out.emit(f"count {size}", l=args.l, k=k.to_json(), direction=args.direction, count=size)
    for r in ribs:
        out.emit(format_horofunction(r), horofunction=format_horofunction(r))


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="line-delimited JSON output")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--radius", type=int, help="ball radius (K = ball of this radius)")
    common.add_argument("--horizon", type=int, default=64, help="last sequence index (default 64)")
    common.add_argument("--window", type=int, default=8, help="stabilization window (default 8)")
    common.add_argument("--budget", type=int, help="iteration budget")
    common.add_argument("--radius-cap", type=int,
                        default=_env_int("LAMPHORO_RADIUS_CAP", DEFAULT_RADIUS_CAP))
    common.add_argument("--horizon-cap", type=int,
                        default=_env_int("LAMPHORO_HORIZON_CAP", DEFAULT_HORIZON_CAP))
    common.add_argument("--budget-cap", type=int,
                        default=_env_int("LAMPHORO_BUDGET_CAP", DEFAULT_BUDGET_CAP))

    parser = argparse.ArgumentParser(prog="lamphoro", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("dist", cmd_dist, "word distance with its A/B/C breakdown")
    p.add_argument("g1")
    p.add_argument("g2")
    p = add("geodesic", cmd_geodesic, "a shortest word from g1 to g2")
    p.add_argument("g1")
    p.add_argument("g2")
    add("ball", cmd_ball, "BFS ball around the identity (default radius 3)")
    add("growth", cmd_growth, "sphere/ball sizes as CSV (default radius 8)")
    p = add("export-dot", cmd_export_dot, "Graphviz DOT of a BFS ball (default radius 2)")
    p.add_argument("--max-radius", type=int)
    p = add("horo-eval", cmd_horo_eval, "evaluate a horofunction literal")
    p.add_argument("horofunction")
    p.add_argument("elements", nargs="+")
    p = add("horo-limit", cmd_horo_limit, "empirical limit of a sequence on K")
    p.add_argument("spec")
    p.add_argument("--points", nargs="+")
    p = add("classify", cmd_classify, "classify a sequence spec")
    p.add_argument("spec")
    p = add("act", cmd_act, "act on a horofunction by a group element")
    p.add_argument("g")
    p.add_argument("horofunction")
    p = add("orbit", cmd_orbit, "iterate the action (default budget 8)")
    p.add_argument("g")
    p.add_argument("horofunction")
    p = add("dynamics", cmd_dynamics, "north-south probe (default radius 2, budget 32)")
    p.add_argument("g")
    p.add_argument("horofunction")
    p.add_argument("--points", nargs="+")
    p = add("topology-limit", cmd_topology_limit, "bounded convergence of a horofunction family")
    p.add_argument("family")
    p.add_argument("limit")
    p.add_argument("--points", nargs="+")
    p = add("rib-enum", cmd_rib_enum, "enumerate ribs at height l with extreme lamp k")
    p.add_argument("l", type=int)
    p.add_argument("k", help="extreme lit lamp, or 'tip' for the rib with no lamps")
    p.add_argument("--direction", choices=["plus", "minus"], default="plus")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Output(args, args.verb)
    try:
        args.func(args, out)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (LamphoroError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = "\n".join(out.lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
