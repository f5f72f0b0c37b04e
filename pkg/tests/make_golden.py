"""Regenerate the files under tests/golden.

    python tests/make_golden.py

Every value written here is computed by the package and then cross-checked
through an independent route (BFS distances, or empirical limits built only
from word distances) before it is stored.
"""

import json
import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, HERE)

from families import TOPOLOGY_FAMILIES, limit_families, threshold_by_limit  # noqa: E402

from lamphoro import (  # noqa: E402
    Stabilized,
    bfs_ball,
    converges_to,
    dist,
    empirical_limit,
    format_horofunction,
    growth_csv,
    identity,
    parse_horofunction,
)
from lamphoro.classify import model_spec_for  # noqa: E402
from lamphoro.topology import family_from_json  # noqa: E402

GOLDEN = os.path.join(HERE, "golden")
TOPOLOGY_BUDGET = 32


def growth():
    ball = bfs_ball(8)
    for key, d in ball.dist.items():
        assert dist(ball.elements[key], identity()) == d
    with open(os.path.join(GOLDEN, "growth_r8.csv"), "w", newline="\n") as fh:
        fh.write(growth_csv(ball))


def stabilization():
    K = bfs_ball(4).members()
    out = {}
    for hf in limit_families():
        res = empirical_limit(model_spec_for(hf), K, 64, 8)
        assert isinstance(res, Stabilized)
        assert res.values == tuple(hf(x) for x in K)
        out[format_horofunction(hf)] = res.at_n
    _dump("stabilization_ball4.json", out)


def topology():
    out = {}
    for name, (fam, lim) in TOPOLOGY_FAMILIES.items():
        family, limit = family_from_json(fam), parse_horofunction(lim)
        out[name] = {}
        for r in (1, 2, 3):
            K = bfs_ball(r).members()
            res = converges_to(family, limit, K, TOPOLOGY_BUDGET)
            assert res.n0 == threshold_by_limit(family, limit, K, TOPOLOGY_BUDGET), (name, r)
            out[name][str(r)] = res.n0
    _dump("topology_thresholds.json", out)


def _dump(name, obj):
    with open(os.path.join(GOLDEN, name), "w", newline="\n") as fh:
        json.dump(obj, fh, indent=1, sort_keys=True)
        fh.write("\n")


if __name__ == "__main__":
    growth()
    stabilization()
    topology()
