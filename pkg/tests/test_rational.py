import pytest
from gmpy2 import mpq

from truncdim.rational import fmt, parse_rat, rat, rat_ceil, rat_floor, rat_to_json


def test_fmt_always_shows_denominator():
    assert fmt(mpq(2)) == "2/1"
    assert fmt(mpq(10, 4)) == "5/2"


def test_parse_round_trip():
    for text in ("5/3", "7/1", "12"):
        assert fmt(parse_rat(text)) == fmt(mpq(text))


def test_floor_and_ceil():
    assert rat_floor(mpq(7, 2)) == 3
    assert rat_ceil(mpq(7, 2)) == 4
    assert rat_ceil(mpq(4)) == rat_floor(mpq(4)) == 4


def test_rat_rejects_floats():
    with pytest.raises(TypeError):
        rat(0.5)


def test_json_encoding():
    assert rat_to_json(mpq(10, 4)) == {"num": 5, "den": 2}
