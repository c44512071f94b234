from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gapvir.algebra import (C, Full, G_I, GI0, GIm, Gm, H_I, HIplus, I, L, LieElement, Vir, basis_symbols,
                            bracket, exp_ad, graded_degree, is_member, parse_element, twisted_degree)
from gapvir.errors import ParameterError, ParseError
from gapvir.scalar import Scalar


def E(text, p):
    return parse_element(text, p)


# An independent transcription of the three bracket families, over Fraction,
# keyed by plain tuples.  Used as the oracle for the bracket table.
def oracle_bracket(p, a, b):
    ka, kb = a[0], b[0]
    if ka == "C" or kb == "C":
        return {}
    if ka == "L" and kb == "L":
        m, n = a[1], b[1]
        out = {}
        if m - n:
            out[("L", m + n)] = Fraction(m - n)
        if m + n == 0 and m ** 3 - m:
            out[("C", 0)] = Fraction(m ** 3 - m, 12)
        return out
    if ka == "L" and kb == "I":
        m, (i, n) = a[1], b[1]
        c = -(n + Fraction(i, p))
        return {("I", i, m + n): c} if c else {}
    if ka == "I" and kb == "L":
        return {k: -v for k, v in oracle_bracket(p, b, a).items()}
    (i, m), (j, n) = a[1], b[1]
    if i + j == p and m + n + 1 == 0:
        c = m + Fraction(i, p)
        return {("C", min(i, p - i)): c} if c else {}
    return {}


def to_key(s):
    if s.kind == "L":
        return ("L", s.n)
    if s.kind == "I":
        return ("I", (s.sup, s.n))
    return ("C", s.sup)


def from_oracle(p, d):
    terms = {}
    for k, v in d.items():
        if k[0] == "L":
            terms[L(k[1])] = v
        elif k[0] == "I":
            terms[I(k[1], k[2])] = v
        else:
            terms[C(k[1], p)] = v
    return LieElement(p, terms)


def test_bracket_examples():
    assert str(bracket(E("L(2)", 3), E("L(-2)", 3))) == "4*L(0) + 1/2*C(0)"
    assert bracket(E("I(1,1)", 3), E("I(2,-2)", 3)) == E("4/3*C(1)", 3)
    assert bracket(E("L(1)", 3), E("I(2,-1)", 3)) == E("1/3*I(2,0)", 3)
    assert not bracket(E("C(1)", 2), E("L(5)", 2))


def test_central_normalization():
    assert C(3, 4) == C(1, 4)
    assert E("C(2)", 3) == E("C(1)", 3)


@pytest.mark.parametrize("p", [2, 3, 4, 5])
def test_bracket_table_matches_oracle(p):
    syms = basis_symbols(p, 4)
    for a in syms:
        for b in syms:
            got = bracket(LieElement.of(p, a), LieElement.of(p, b))
            assert got == from_oracle(p, oracle_bracket(p, to_key(a), to_key(b))), (a, b)


def test_graded_degree():
    assert graded_degree(E("L(3)+2*I(1,3)", 2)) == 3
    assert graded_degree(E("C(0)", 2)) == 0
    assert graded_degree(E("L(1)+L(2)", 2)) == "mixed"


def test_twisted_degree_is_additive_on_the_I_pairing():
    # integer degrees of I(1,-6) and I(1,5) sum to -1, yet the bracket is central
    z = bracket(E("I(1,-6)", 2), E("I(1,5)", 2))
    assert z == E("-11/2*C(1)", 2)
    assert twisted_degree(I(1, -6), 2) + twisted_degree(I(1, 5), 2) == 0


def test_is_member():
    assert is_member(E("I(1,0)", 2), Gm(1))
    assert not is_member(E("L(0)", 2), Gm(1))
    assert is_member(E("I(1,-5)", 4), H_I({1, 3}))
    assert not is_member(E("I(2,0)", 4), H_I({1, 3}))
    assert is_member(E("L(0) + C(0)", 2), Vir())
    assert not is_member(E("I(1,0)", 2), Vir())
    assert is_member(E("I(2,7) + L(-3)", 4), G_I({2}))
    assert is_member(E("I(1,0)", 4), GI0({1, 3}))
    assert not is_member(E("I(1,-1)", 4), GI0({1, 3}))
    assert is_member(E("I(1,0)", 4), HIplus({1, 3}))
    assert not is_member(E("L(1)", 4), GIm({1, 3}, 2))
    assert is_member(E("L(-100)", 3), Full())


def test_exp_ad_examples():
    assert exp_ad(E("I(1,0)", 2), E("C(1)", 2)) == E("C(1)", 2)
    assert exp_ad(E("I(1,0)", 2), E("L(1)", 2)) == E("L(1) + 1/2*I(1,1)", 2)
    assert exp_ad(E("I(1,-1)", 2), E("L(2)", 2)) == E("L(2) - 1/2*I(1,1)", 2)


def test_exp_ad_second_order_term():
    # [I(1,-1),[I(1,-1),L(1)]] = [I(1,-1), -1/2 I(1,0)] = -1/2*(-1/2) C(1)
    got = exp_ad(E("I(1,-1)", 2), E("L(1)", 2))
    assert got == E("L(1) - 1/2*I(1,0) + 1/8*C(1)", 2)


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as e:
        E("I(3,-2)", 3)
    assert e.value.position == 0
    with pytest.raises(ParseError) as e:
        E("L(1) + * L(2)", 3)
    assert e.value.position == 7
    with pytest.raises(ParseError):
        E("C(4)", 3)
    with pytest.raises(ParameterError):
        E("L(1)", 1)


def test_scalar_term_is_rejected():
    with pytest.raises(ParseError):
        E("-3/2 + C(0)", 3)


def test_print_parse_identity_examples():
    assert str(E("L(2)", 3)) == "L(2)"
    for text in ["4*L(0) + 1/2*C(0)", "-I(1,-3) + (1+2*i)*L(4)", "0", "(-3/2+1/4*i)*C(0)"]:
        x = E(text, 3)
        assert E(str(x), 3) == x


@st.composite
def symbols(draw, p):
    kind = draw(st.sampled_from("LIC"))
    n = draw(st.integers(-6, 6))
    if kind == "L":
        return L(n)
    if kind == "I":
        return I(draw(st.integers(1, p - 1)), n)
    return C(draw(st.integers(0, p // 2)), p)


@st.composite
def elements(draw, p=None):
    if p is None:
        p = draw(st.integers(2, 5))
    terms = {}
    for s in draw(st.lists(symbols(p), max_size=4)):
        terms[s] = Scalar(draw(st.fractions(max_denominator=5, min_value=-5, max_value=5)))
    return LieElement(p, terms)


@given(st.integers(2, 5).flatmap(lambda p: st.tuples(elements(p), elements(p), elements(p))))
def test_jacobi_and_antisymmetry(xyz):
    x, y, z = xyz
    assert bracket(x, y) == -bracket(y, x)
    jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
    assert not jac


@given(elements())
def test_print_parse_roundtrip(x):
    assert parse_element(str(x), x.p) == x
    assert LieElement.from_json(x.to_json()) == x


@given(st.integers(2, 5).flatmap(lambda p: st.tuples(st.just(p), symbols(p), symbols(p))))
def test_twisted_grading_respected(pab):
    p, a, b = pab
    z = bracket(LieElement.of(p, a), LieElement.of(p, b))
    for s in z.terms:
        assert twisted_degree(s, p) == twisted_degree(a, p) + twisted_degree(b, p)
