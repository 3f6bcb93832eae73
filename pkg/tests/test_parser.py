from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from redinit import ParseError, Ring, format_ideal, load_ideal, parse_ideal
from redinit.examples import BUNDLED, data_path

from strategies import polynomials


def test_three_generators_in_three_variables():
    ring, gens = parse_ideal("ring x,y,z; char 32003; ideal x^2 + y*z, x*y, x*z")
    assert ring.names == ("x", "y", "z") and ring.characteristic == 32003
    assert len(gens) == 3
    assert gens[0] == ring.parse("y*z + x^2")


def test_principal_ideal_over_rationals():
    ring, gens = parse_ideal("ring x; char 0; ideal x")
    assert ring.characteristic == 0 and gens == [ring.var(0)]


def test_dangling_operator_position():
    with pytest.raises(ParseError) as err:
        parse_ideal("ring x; char 0; ideal x +")
    assert err.value.line == 1 and err.value.col == 25
    assert "dangling" in err.value.message


def test_comments_and_whitespace():
    ring, gens = parse_ideal("# header\nring x ,y;  # vars\nchar 5;\nideal 3*x^2 -  y\n")
    assert gens[0] == ring.parse("3*x^2 - y")


def test_rational_coefficients():
    ring, gens = parse_ideal("ring x, y; char 0; ideal 1/2*x - 3/4*y")
    assert gens[0].coefficient((1, 0)) == Fraction(1, 2)
    with pytest.raises(ParseError):
        parse_ideal("ring x, y; char 7; ideal 1/2*x")


@pytest.mark.parametrize("text, needle", [
    ("ring x; char 6; ideal x", "prime"),
    ("ring x; char 5; ideal y", "unknown variable"),
    ("ring x; char 5; ideal x - x", "zero"),
    ("ring x, x; char 5; ideal x", "duplicate"),
    ("ring x; char 5; ideal x^", "integer"),
    ("ring x; ideal x", "char"),
])
def test_errors(text, needle):
    with pytest.raises(ParseError) as err:
        parse_ideal(text)
    assert needle in str(err.value)


def test_characteristic_override():
    ring, gens = parse_ideal("ring x, y; char 5; ideal 7*x + y", characteristic=3)
    assert ring.characteristic == 3 and gens[0] == ring.parse("x + y")


@given(st.data())
def test_ideal_roundtrip(data):
    char = data.draw(st.sampled_from([0, 32003]))
    ring = Ring(("a", "b", "c"), char)
    gens = [g for g in data.draw(st.lists(polynomials(ring), min_size=1, max_size=4)) if not g.is_zero()]
    if not gens:
        return
    ring2, gens2 = parse_ideal(format_ideal(ring, gens))
    assert ring2 == ring and gens2 == gens


@pytest.mark.parametrize("name", BUNDLED)
def test_bundled_files_parse(name):
    ring, gens = load_ideal(data_path(name))
    assert gens and all(g.is_homogeneous() for g in gens)
