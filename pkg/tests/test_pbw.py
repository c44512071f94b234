import pytest
from hypothesis import given, strategies as st

from gapvir.algebra import C, Full, G_I, I, L, LieElement, Vir, basis_symbols, bracket
from gapvir.errors import ParameterError, ParseError
from gapvir.pbw import PBWModule, PBWVector, letter_key
from gapvir.whitfun import HeisenbergWhittakerData, WhittakerFunction


def W21(**kw):
    base = dict(lvals={1: 3, 2: 5}, ivals={(1, 0): 1}, cvals={0: 2, 1: "1/3"})
    base.update(kw)
    return WhittakerFunction(2, 1, **base)


def test_pbw_act_examples():
    M = PBWModule(WhittakerFunction(2, 1, {1: 0}, {(1, 0): 1}, {}))
    assert M.act(I(1, 0), M.parse("L(0)*v")) == M.parse("L(0)*v + 1/2*v")
    Mw = PBWModule(W21())
    assert Mw.act(L(1), Mw.vacuum) == Mw.vacuum * 3
    w = Mw.parse("I(1,-1)*v")
    assert Mw.act(C(1, 2), w) == w * Scalar_("1/3")


def Scalar_(x):
    from gapvir.scalar import Scalar

    return Scalar.parse(x)


def test_text_format_and_ordering():
    M = PBWModule(W21())
    v = M.parse("L(0)*I(1,-1)*v")
    # L(0) I(1,-1) = I(1,-1) L(0) + [L(0), I(1,-1)] = I(1,-1) L(0) + 1/2 I(1,-1)
    assert v == M.parse("I(1,-1)*L(0)*v + 1/2*I(1,-1)*v")
    assert str(M.parse("2*L(0)^2*I(1,-1)*v")) == "1/2*I(1,-1)*v + 2*I(1,-1)*L(0)*v + 2*I(1,-1)*L(0)^2*v"
    assert str(M.vacuum) == "v"
    with pytest.raises(ParseError):
        M.parse("L(0)")
    with pytest.raises(ParseError):
        M.parse("v*L(0)")


def test_letter_order():
    assert letter_key(I(1, -1)) < letter_key(L(0))
    assert letter_key(I(1, -1)) < letter_key(I(1, -2))
    assert letter_key(L(0)) < letter_key(L(-1))


def test_ambient_enforced():
    M = PBWModule(WhittakerFunction(4, 1, {1: 1}, {(1, 0): 1, (3, 0): 1}, {}, ambient=G_I({1, 3})))
    with pytest.raises(ParameterError):
        M.act(I(2, 0), M.vacuum)
    V = PBWModule(WhittakerFunction(2, 1, {1: 1, 2: 1}, {}, {}, ambient=Vir()))
    with pytest.raises(ParameterError):
        V.act(I(1, 0), V.vacuum)


@pytest.mark.parametrize("p,m", [(2, 1), (3, 1), (2, 2)])
def test_representation_property(p, m):
    lv = {m + k: k + 2 for k in range(m + 1)}
    iv = {(i, n): i + n for i in range(1, p) for n in range(m)}
    W = WhittakerFunction(p, m, lv, iv, {0: 1, 1: 2})
    M = PBWModule(W)
    vecs = [M.vacuum, M.parse(f"L({m - 1})*v"), M.parse("I(1,-1)*v + L(-1)*v")]
    syms = basis_symbols(p, 2)
    for a in syms:
        for b in syms:
            x, y = LieElement.of(p, a), LieElement.of(p, b)
            z = bracket(x, y)
            for v in vecs:
                assert M.act(x, M.act(y, v)) - M.act(y, M.act(x, v)) == M.act(z, v), (a, b, v)


def test_restriction_bound_kills():
    M = PBWModule(W21())
    v = M.parse("I(1,-2)*L(-1)*v + L(0)*v")
    N = M.restriction_bound(v)
    for n in range(N, N + 4):
        assert not M.act(L(n), v)
        assert not M.act(I(1, n), v)


def test_heisenberg_pbw():
    D = HeisenbergWhittakerData(2, [1], 1, {1: 2}, {(1, 0): 3})
    M = PBWModule(D)
    w = M.parse("I(1,-1)*v")
    # I(1,0) I(1,-1) v = I(1,-1) I(1,0) v + [I(1,0), I(1,-1)] v = 3 w + 1/2*2 v
    assert M.act(I(1, 0), w) == M.parse("3*I(1,-1)*v + v")


@given(st.lists(st.sampled_from(["L(0)", "L(-1)", "I(1,-1)", "I(1,-2)", "I(1,0)", "L(1)", "L(2)", "C(1)"]),
                max_size=4))
def test_words_normalize_consistently(letters):
    M = PBWModule(W21())
    text = "*".join(letters + ["v"])
    v = M.parse(text)
    out = M.vacuum
    for s in reversed(letters):
        out = M.act(_el(s), out)
    assert v == out
    assert M.parse(str(v)) == v


def _el(text):
    from gapvir.algebra import parse_element

    return parse_element(text, 2)
