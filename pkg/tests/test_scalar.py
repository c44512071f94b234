from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gapvir.errors import ParseError
from gapvir.scalar import I_UNIT, Scalar, S

fracs = st.fractions(max_denominator=50, min_value=-50, max_value=50)
scalars = st.builds(lambda a, b: Scalar(a, b), fracs, fracs)


def test_text_forms():
    assert str(S(-3, 2) / 2) == "-3/2+i"
    assert str(Scalar.parse("-3/2+1/4*i")) == "-3/2+1/4*i"
    assert str(I_UNIT * -1) == "-i"
    assert str(Scalar(0)) == "0"


def test_floats_rejected():
    with pytest.raises(TypeError):
        Scalar.coerce(0.5)
    with pytest.raises(TypeError):
        Scalar(1) + 0.5


def test_parse_error():
    with pytest.raises(ParseError):
        Scalar.parse("1/0")
    with pytest.raises(ParseError):
        Scalar.parse("2*t")


@given(scalars)
def test_print_parse_roundtrip(x):
    assert Scalar.parse(str(x)) == x


@given(scalars, scalars, scalars)
def test_field_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert x * (y * z) == (x * y) * z
    if y:
        assert (x / y) * y == x


@given(fracs)
def test_rationals_agree_with_fraction(q):
    assert Scalar(q).as_fraction() == q
    assert Scalar(q) == Fraction(q)
