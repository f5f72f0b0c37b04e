from itertools import product

import pytest
from hypothesis import given, strategies as st

from lamphoro import (
    HEIGHT_MINUS,
    HEIGHT_PLUS,
    BoundaryRay,
    BusemannMinus,
    BusemannPlus,
    InvalidRayError,
    LampStand,
    ParseError,
    Point,
    RibMinus,
    RibPlus,
    Spine,
    UnsupportedInputError,
    apply_word,
    busemann_of_ray,
    dist,
    enumerate_rib_class,
    format_horofunction,
    identity,
    parse,
    parse_horofunction,
    rib_class_size,
)
from lamphoro.core import NEG_INF, POS_INF, mirror
from lamphoro.horofn import ray_point, ray_word

from families import busemann_all, limit_families, rib_minus_all, rib_plus_all
from strategies import lamp_stands


def test_spine_values():
    assert Spine(0)(parse("{};2")) == -2
    assert Spine(3)(parse("{};3")) == 3
    assert Spine(-2)(parse("{5};-1")) == 1
    # independent of lamps
    assert Spine(1)(parse("{-9,9};4")) == Spine(1)(parse("{};4"))


def test_height_functions():
    g = parse("{1};-3")
    assert HEIGHT_PLUS(g) == -3 and HEIGHT_MINUS(g) == 3


def test_point_is_based_at_identity():
    g0 = parse("{0,2};1")
    hf = Point(g0)
    assert hf(identity()) == 0
    assert hf(g0) == -dist(g0, identity())


@given(lamp_stands)
def test_every_horofunction_vanishes_at_identity_and_is_1_lipschitz(x):
    for hf in [Spine(2), RibPlus(parse("{-1};1")), RibMinus(parse("{2};0")),
               BusemannPlus(frozenset({-2, 1})), BusemannMinus(frozenset({3})),
               HEIGHT_PLUS, HEIGHT_MINUS, Point(parse("{1};2"))]:
        assert hf(identity()) == 0
        assert abs(hf(x)) <= dist(x, identity())


def test_rib_constraints():
    with pytest.raises(UnsupportedInputError):
        RibPlus(parse("{1};1"))
    with pytest.raises(UnsupportedInputError):
        RibMinus(parse("{-1};0"))
    assert RibPlus.normalized(parse("{-1,1,4};1")) == RibPlus(parse("{-1};1"))
    assert RibMinus.normalized(parse("{-1,1,4};1")) == RibMinus(parse("{1,4};1"))


def test_mirror_exchanges_plus_and_minus_families(ball4):
    rib = RibPlus(parse("{-3,-1};0"))
    mirrored = RibMinus(mirror(rib.f))
    bus = BusemannPlus(frozenset({-2, 1}))
    bus_m = BusemannMinus(frozenset(-1 - p for p in bus.ray.lit))
    for x in ball4.members():
        assert rib(x) == mirrored(mirror(x))
        assert bus(x) == bus_m(mirror(x))
        assert HEIGHT_PLUS(x) == HEIGHT_MINUS(mirror(x))


def test_rib_class_counts():
    assert rib_class_size(0, -2) == 2
    assert rib_class_size(3, POS_INF) == 1
    assert rib_class_size(3, 3) == 0
    assert rib_class_size(0, 2, "-") == 4
    assert rib_class_size(0, NEG_INF, "-") == 1
    for l in range(-3, 4):
        for k in range(l - 6, l):
            ribs = enumerate_rib_class(l, k)
            assert len(ribs) == len(set(ribs)) == 2 ** (l - k - 1)
            assert all(r.f.m == k for r in ribs)


def test_rib_enumeration_partitions_all_ribs():
    by_height = {}
    for r in rib_plus_all():
        by_height.setdefault(r.l, set()).add(r)
    for l, ribs in by_height.items():
        listed = set(enumerate_rib_class(l, POS_INF))
        for k in range(-3, l):
            listed |= set(enumerate_rib_class(l, k))
        assert listed == ribs
    assert len(rib_minus_all()) == 124


def test_canonical_rays_are_geodesic():
    for bus in busemann_all():
        ray = bus.ray
        for n in range(1, 14):
            assert dist(identity(), ray_point(ray, n)) == n
        assert len(ray_word(ray, 5)) == 5


def test_busemann_of_ray():
    assert busemann_of_ray("t^-1 t^-1 at t at", "+") == BusemannPlus(frozenset({-2, 0}))
    assert busemann_of_ray("", "-") == BusemannMinus(frozenset())
    with pytest.raises(InvalidRayError):
        busemann_of_ray("t t^-1", "+")
    with pytest.raises(InvalidRayError):
        # geodesic prefix, but marching right afterwards backtracks
        busemann_of_ray("t^-1", "+")


@given(st.frozensets(st.integers(-4, 4), max_size=4), st.sampled_from("+-"))
def test_busemann_matches_ray_limit(lit, direction):
    ray = BoundaryRay(direction, lit)
    bus = BusemannPlus(ray) if direction == "+" else BusemannMinus(ray)
    far = ray_point(ray, 40)
    for x in [parse("{};0"), parse("{-2,1};3"), parse("{0};-4"), parse("{3};1")]:
        assert bus(x) == dist(far, x) - dist(far, identity())


def test_literal_roundtrip():
    for hf in limit_families() + [Point(parse("{1};-2"))]:
        assert parse_horofunction(format_horofunction(hf)) == hf
    assert parse_horofunction("H") == HEIGHT_PLUS


@pytest.mark.parametrize(
    "text, pos",
    [("spine:x", 6), ("rib+:{1,};0", 8), ("bus+:{1} 2", 9), ("wat:{};0", 0), ("rib+:{2};1", 5)],
)
def test_literal_errors(text, pos):
    with pytest.raises(ParseError) as err:
        parse_horofunction(text)
    assert err.value.position == pos


def test_busemann_accepts_raw_sets():
    assert BusemannPlus(frozenset({1})) == BusemannPlus(BoundaryRay("+", frozenset({1})))
    assert apply_word(identity(), ray_word(BoundaryRay("+", frozenset({1})), 3)) == LampStand(
        frozenset({1}), 3
    )


def test_all_enumerated_horofunctions_are_distinct():
    # lamps in [-3, 3] need separating points up to distance 14
    points = [
        LampStand(frozenset(p for p, b in zip(range(-3, 4), bits) if b), h)
        for bits in product((0, 1), repeat=7)
        for h in range(-5, 6)
    ]
    pool = limit_families() + [Point(parse(t)) for t in ["{};0", "{};1", "{0};0", "{-2,1};2"]]
    profiles = {tuple(hf(x) for x in points) for hf in pool}
    assert len(profiles) == len(pool)
