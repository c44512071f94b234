from fractions import Fraction

import pytest

from gapvir.algebra import C, I, L, LieElement, basis_symbols, bracket
from gapvir.errors import ParseError
from gapvir.twisted import (Kbar, Nbar, format_twisted, parse_twisted, theta, theta_element, theta_inv,
                            twisted_bracket, twisted_generators)


def test_theta_examples():
    assert theta(Nbar(0, 2, 3), 3) == L(1)
    assert theta(parse_twisted("N(1,0+1/3)", 3), 3) == I(1, 0)
    assert theta_inv(C(0), 3) == Kbar(0, 3)
    assert str(theta_inv(C(0), 3)) == "K(0)"


def test_lattice_is_enforced():
    with pytest.raises(ParseError):
        Nbar(1, 0, 3)
    with pytest.raises(ParseError):
        parse_twisted("N(0,1/2)", 2)
    with pytest.raises(ParseError):
        parse_twisted("N(1,1/2) + N(0,1)", 2)


@pytest.mark.parametrize("p", [2, 3, 4])
def test_theta_inverse_roundtrip(p):
    for s in basis_symbols(p, 5):
        assert theta(theta_inv(s, p), p) == s
    for t in twisted_generators(p, 4):
        assert theta_inv(theta(t, p), p) == t


@pytest.mark.parametrize("p", [2, 3])
def test_theta_preserves_brackets(p):
    gens = twisted_generators(p, 4)
    for a in gens:
        for b in gens:
            lhs = LieElement(p, theta_element(twisted_bracket(p, a, b), p))
            rhs = bracket(LieElement.of(p, theta(a, p)), LieElement.of(p, theta(b, p)))
            assert lhs == rhs, (a, b)


def test_relation_coefficient_examples():
    # Nbar_0(3), Nbar_0(-1) are L(2), L(-2)
    got = twisted_bracket(2, Nbar(0, 3, 2), Nbar(0, -1, 2))
    assert got == {Nbar(0, 1, 2): 4, Kbar(0, 2): Fraction(1, 2)}
    assert format_twisted(got) == "1/2*K(0) + 4*N(0,1)"
    # Nbar_1(1/3), Nbar_2(-4/3) are I(1,0), I(2,-2)
    got = twisted_bracket(3, Nbar(1, Fraction(1, 3), 3), Nbar(2, Fraction(-4, 3), 3))
    assert got == {}
    got = twisted_bracket(3, Nbar(1, Fraction(4, 3), 3), Nbar(2, Fraction(-4, 3), 3))
    assert got == {Kbar(1, 3): Fraction(4, 3)}
