import pytest
from hypothesis import given

from lamphoro import (
    NEG_INF,
    POS_INF,
    ExtInt,
    LampStand,
    ParseError,
    apply_word,
    format_word,
    generator,
    identity,
    inverse,
    mirror,
    mul,
    parse,
    parse_word,
    power,
    serialize,
)
from lamphoro.core import M, diff_M, diff_m, h, m

from strategies import lamp_stands, words


def L(text):
    return parse(text)


def test_generators():
    assert generator("t") == L("{};1")
    assert generator("t^-1") == L("{};-1")
    assert generator("at") == L("{0};1")
    assert generator("(at)^-1") == L("{-1};-1")
    assert generator("a") == L("{0};0")


def test_mul_examples():
    at = generator("at")
    assert mul(at, at) == L("{0,1};2")
    assert mul(L("{-2,1,3};-1"), L("{0};2")) == L("{-2,-1,1,3};1")
    assert L("{0};1") * L("{};-1") == L("{0};0")


def test_inverse_and_power():
    g = L("{-2,1,3};-1")
    assert inverse(g) == L("{-1,2,4};1")
    assert ~g == inverse(g)
    assert power(g, 0) == identity()
    assert power(g, -2) == inverse(power(g, 2))
    assert power(generator("t"), 5) == L("{};5")


@given(lamp_stands, lamp_stands, lamp_stands)
def test_group_axioms(a, b, c):
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, identity()) == a == mul(identity(), a)
    assert mul(a, inverse(a)) == identity()


@given(lamp_stands, lamp_stands)
def test_mirror_is_an_automorphism(a, b):
    assert mirror(mul(a, b)) == mul(mirror(a), mirror(b))
    assert mirror(mirror(a)) == a
    assert mirror(generator("at")) == generator("(at)^-1")


@given(lamp_stands)
def test_serialize_roundtrip(g):
    assert parse(serialize(g)) == g


@given(words)
def test_word_replay_matches_products(word):
    expected = identity()
    for letter in word:
        expected = mul(expected, generator(letter))
    assert apply_word(identity(), word) == expected


def test_statistics():
    g = L("{-2,1,3};-1")
    assert (h(g), m(g), M(g)) == (-1, -2, 3)
    assert m(identity()) == POS_INF and M(identity()) == NEG_INF
    assert diff_m(g, L("{-2};0")) == 1
    assert diff_M(g, g) == NEG_INF


def test_extint():
    assert POS_INF + 5 == POS_INF
    assert -POS_INF == NEG_INF
    assert ExtInt(3) == 3 and hash(ExtInt(3)) == hash(3)
    assert NEG_INF < -10**9 < ExtInt(0) < POS_INF
    assert ExtInt.from_json(POS_INF.to_json()) == POS_INF
    with pytest.raises(OverflowError):
        int(POS_INF)


@pytest.mark.parametrize(
    "text, pos",
    [("{1,2};", 6), ("{1,1};0", 4), ("1,2};0", 0), ("{1};0 x", 6), ("{a};0", 1)],
)
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ParseError) as err:
        parse(text)
    assert err.value.position == pos
    assert f"position {pos}" in str(err.value)


def test_parse_is_lenient_about_spaces():
    assert parse(" { 3 , -1 } ; -2 ") == LampStand(frozenset({-1, 3}), -2)


def test_parse_word():
    assert parse_word("t at t⁻¹ (at)⁻¹") == ("t", "at", "t^-1", "(at)^-1")
    assert format_word(("t", "at")) == "t at"
    with pytest.raises(ParseError, match="'b'"):
        parse_word("t b")


def test_lampstand_validates_types():
    with pytest.raises(TypeError):
        LampStand(frozenset({1.5}), 0)
    with pytest.raises(TypeError):
        LampStand(frozenset(), "0")
