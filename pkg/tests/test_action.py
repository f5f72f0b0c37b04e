import random

import pytest

from lamphoro import (
    HEIGHT_MINUS,
    HEIGHT_PLUS,
    BusemannMinus,
    BusemannPlus,
    LampStand,
    Point,
    RibMinus,
    RibPlus,
    Spine,
    UnsupportedInputError,
    act,
    bfs_ball,
    dist,
    fixed_rays,
    identity,
    mul,
    north_south_probe,
    orbit,
    parse,
    parse_horofunction,
)
from lamphoro.action import category_of, rib_bijection_check, verify_invariance
from lamphoro.classify import model_spec_for

from families import limit_families

SAMPLE = [
    Point(parse("{1};-1")), Spine(2), RibPlus(parse("{-2};0")), RibMinus(parse("{1,3};1")),
    BusemannPlus(frozenset({-1, 2})), BusemannMinus(frozenset({0})), HEIGHT_PLUS, HEIGHT_MINUS,
]


def random_stand(rng, spread=3):
    lit = frozenset(p for p in range(-spread, spread + 1) if rng.random() < 0.3)
    return LampStand(lit, rng.randint(-spread, spread))


def test_examples():
    t = parse("{};1")
    assert act(t, Spine(0)) == Spine(1)
    assert act(t, BusemannPlus(frozenset({1}))) == BusemannPlus(frozenset({2}))
    assert act(parse("{0};0"), RibPlus(parse("{};1"))) == RibPlus(parse("{0};1"))
    assert act(parse("{5};-2"), HEIGHT_MINUS) == HEIGHT_MINUS


def test_axioms_and_invariance():
    rng = random.Random(7)
    for _ in range(100):
        g1, g2 = random_stand(rng), random_stand(rng)
        hf = rng.choice(SAMPLE)
        assert act(identity(), hf) == hf
        assert act(mul(g1, g2), hf) == act(g1, act(g2, hf))
        assert verify_invariance(g1, hf)
        assert category_of(act(g1, hf)) == hf.family


def test_act_matches_defining_limit():
    # g.h is the limit along g * g_n of the model sequence of h
    K = bfs_ball(2).members()
    rng = random.Random(11)
    for _ in range(25):
        g = random_stand(rng, 2)
        hf = rng.choice(SAMPLE)
        spec = model_spec_for(hf)
        n = 48
        gn = mul(g, spec.materialize(n))
        assert [act(g, hf)(x) for x in K] == [dist(gn, x) - dist(gn, identity()) for x in K]


def test_orbit():
    traj = orbit(parse("{};1"), Spine(0), 3)
    assert traj == [Spine(0), Spine(1), Spine(2), Spine(3)]


def test_fixed_rays():
    fr = fixed_rays(parse("{0,2};2"))
    assert fr.attractor_finite and fr.repeller_finite
    assert fr.attractor.lit == frozenset({0}) and fr.attractor.direction == "+"
    assert fr.repeller.direction == "-"
    infinite = fixed_rays(parse("{0};1"))
    assert not infinite.attractor_finite
    assert set(range(0, 17)) <= infinite.attractor.lit
    with pytest.raises(UnsupportedInputError):
        fixed_rays(parse("{1};0"))


@pytest.mark.parametrize("g", ["{};1", "{};-1", "{-1,0};1"])
@pytest.mark.parametrize("start", ["bus+:{}", "bus+:{-2,1}", "bus-:{0}", "bus-:{-1,3}", "H+", "H-", "spine:0", "spine:-3"])
def test_north_south(g, start):
    res = north_south_probe(parse(g), parse_horofunction(start), bfs_ball(2).members(), 32)
    assert res.converged


def test_probe_poles_follow_direction():
    K = bfs_ball(2).members()
    up, down = parse("{};1"), parse("{};-1")
    assert north_south_probe(up, BusemannPlus(frozenset({3})), K).pole == BusemannPlus(frozenset())
    assert north_south_probe(down, BusemannPlus(frozenset({3})), K).pole == HEIGHT_PLUS
    assert north_south_probe(up, BusemannMinus(frozenset({3})), K).pole == HEIGHT_MINUS
    assert north_south_probe(down, BusemannMinus(frozenset({3})), K).pole == BusemannMinus(frozenset())
    assert north_south_probe(up, Spine(-4), K).pole == HEIGHT_PLUS
    with pytest.raises(UnsupportedInputError):
        north_south_probe(up, RibPlus(parse("{};0")), K)
    with pytest.raises(UnsupportedInputError):
        north_south_probe(parse("{0};1"), BusemannPlus(frozenset()), K)


def test_rib_bijection():
    for d in range(1, 7):
        assert rib_bijection_check(parse("{};1"), 0, -d)
        assert rib_bijection_check(parse("{1,4};-2"), 3, 3 - d)
    with pytest.raises(UnsupportedInputError):
        rib_bijection_check(parse("{};1"), 0, 0)
    with pytest.raises(UnsupportedInputError):
        rib_bijection_check(parse("{0};1"), 0, -1)


def test_every_family_keeps_its_category():
    g = parse("{-1,2};1")
    for hf in limit_families():
        assert act(g, hf).family == hf.family
