from fractions import Fraction

import pytest

from gapvir.algebra import C, Full, G_I, I, L, LieElement, Vir, bracket, exp_ad, parse_element
from gapvir.errors import DegenerateInputError, PreconditionError, ValidationError
from gapvir.pbw import PBWModule, PBWVector
from gapvir.scalar import Scalar
from gapvir.whitfun import HeisenbergWhittakerData, WhittakerFunction
from gapvir.whittaker import (decompose, degree_reduce, eta_conjugate, eta_solver, is_whittaker_vector,
                              m0_vectors, m0_word, main_verdict, reachability_oracle, reducibility_witness,
                              support_degree, validate, virasoro_verdict, zero_level_verdict)


def WF(p, m, L_=None, I_=None, C_=None, ambient=None, **kw):
    return WhittakerFunction(p, m, L_ or {}, I_ or {}, C_ or {}, ambient, **kw)


# -- validation --------------------------------------------------------------

def test_validate_examples():
    assert validate(WF(2, 1, {1: 3, 2: 5}, {(1, 0): 1})) == []
    bad = validate(WhittakerFunction.candidate(2, 1, {1: 3, 2: 5, 3: 1}, {(1, 0): 1}, {}))
    assert (L(1), L(2), Scalar(-1)) in bad
    bad = validate(WhittakerFunction.candidate(2, 1, {1: 3}, {(1, 0): 1, (1, 1): 2}, {}))
    assert any((x, y) == (L(1), I(1, 0)) for x, y, _ in bad)


def test_strict_windows():
    with pytest.raises(ValidationError):
        WF(2, 1, {1: 3, 3: 1})
    with pytest.raises(ValidationError):
        WF(2, 1, {0: 3})
    with pytest.raises(ValidationError):
        WF(4, 1, I_={(2, 0): 1}, ambient=G_I({1, 3}))


def test_out_of_window_evaluates_to_zero():
    W = WF(3, 2, {2: 1, 3: 2, 4: 3}, {(1, 0): 1, (2, 1): 5}, {0: 4, 1: 2})
    assert W(L(5)) == 0 and W(I(2, 2)) == 0 and W(I(2, 1)) == 5
    assert W(C(2, 3)) == 2


def test_json_roundtrip():
    W = WF(4, 2, {2: 1, 4: "1/2+i"}, {(1, 0): 1, (3, 1): -2}, {0: 4, 1: 2}, G_I({1, 3}))
    assert WhittakerFunction.from_json(W.to_json()) == W


# -- verdicts ----------------------------------------------------------------

def test_virasoro_verdict():
    assert not virasoro_verdict(WF(2, 1, {1: 0, 2: 0}, ambient=Vir())).irreducible
    assert virasoro_verdict(WF(2, 1, {1: 0, 2: 1}, ambient=Vir())).irreducible
    assert virasoro_verdict(WF(2, 3, {5: 2, 6: 0}, ambient=Vir())).irreducible


def test_zero_level_verdict():
    assert zero_level_verdict(WF(2, 1, {1: 1}, {(1, 0): 1}, ambient=G_I({1}))).irreducible
    v = zero_level_verdict(WF(2, 1, {1: 1}, {(1, 0): 0}, ambient=G_I({1})))
    assert not v.irreducible and v.witness == "I(1,-1)*v"
    assert v.vector == PBWVector.basis((I(1, -1),))
    v = zero_level_verdict(WF(4, 2, {2: 1}, {(1, 1): 1, (3, 1): 0}, ambient=G_I({1, 3})))
    assert not v.irreducible and v.witness == "I(3,-1)*v"
    with pytest.raises(PreconditionError):
        zero_level_verdict(WF(2, 1, I_={(1, 0): 1}, C_={1: 1}))


def test_main_verdict():
    base = dict(I_={(1, 0): 1}, C_={1: 1})
    v = main_verdict(WF(2, 1, {1: "1/2", 2: 0}, **base))
    assert not v.irreducible and v.details["threshold"] == Scalar.parse("1/2")
    assert main_verdict(WF(2, 1, {1: "1/2", 2: 1}, **base)).irreducible
    assert main_verdict(WF(2, 1, {1: 5}, {(1, 0): 7}, {1: 0})).irreducible
    v = main_verdict(WF(3, 1, {1: 2}, {(1, 0): 0, (2, 0): 3}, {1: 0}))
    assert not v.irreducible and v.witness == "I(1,-1)*v"


def test_witness_examples():
    W = WF(2, 1, {1: 2, 2: 3}, {(1, 0): 0}, {1: 0})
    w = reducibility_witness(W, 1)
    assert w == PBWModule(W).parse("I(1,-1)*v")
    assert is_whittaker_vector(W, w, 6)[0]
    W3 = WF(3, 2, {2: 1, 3: 1, 4: 1}, {(1, 0): 4, (1, 1): 0, (2, 1): 1}, {1: 0})
    assert reducibility_witness(W3, 1) == PBWModule(W3).parse("I(1,-1)*v")
    with pytest.raises(PreconditionError):
        reducibility_witness(WF(2, 1, {1: 1}, {(1, 0): 1}), 1)


# -- the M_0 argument --------------------------------------------------------

def test_support_degree():
    W = WF(2, 2, {2: 1}, {(1, 1): 1}, ambient=G_I({1}))
    M = PBWModule(W)
    assert support_degree(M.parse("L(0)*v"), 2) == (1, 0)
    assert support_degree(M.vacuum, 2) == (0, 0)
    assert support_degree(M.parse("2*L(1)*L(0)*v + L(0)*v"), 2) == (1, 1)
    with pytest.raises(DegenerateInputError):
        support_degree(PBWVector.zero(), 2)
    with pytest.raises(ValidationError):
        support_degree(M.parse("I(1,-1)*v"), 2)


def test_degree_reduce_examples():
    W = WF(2, 1, {1: 3}, {(1, 0): 1}, ambient=G_I({1}))
    M = PBWModule(W)
    c, steps = degree_reduce(M.parse("L(0)*v"), W)
    assert c == Fraction(1, 2) and len(steps) == 1
    c, steps = degree_reduce(M.vacuum, W)
    assert c == 1 and steps == []
    c, steps = degree_reduce(M.parse("L(0)^2*v"), W)
    assert len(steps) == 2 and c == Fraction(1, 2)
    # brute force: (I_0 - 1)^2 L_0^2 v expanded with [L_0, I_0] = -1/2 I_0
    x = M.parse("L(0)^2*v")
    for _ in range(2):
        x = M.act(I(1, 0), x) - x
    assert x == M.vacuum * c


def test_degree_steps_strictly_decrease():
    W = WF(3, 2, {2: 1, 3: 4}, {(1, 1): 2, (2, 1): -1, (1, 0): 3}, ambient=G_I({1, 2}))
    for word in m0_vectors(2, 4):
        v = PBWModule(W).vector(word)
        c, steps = degree_reduce(v, W)
        for st in steps:
            assert st.degree_after < st.degree_before
        assert c


def test_m0_words():
    assert m0_word((2, 1)) == (L(1), L(0), L(0))
    assert len(m0_vectors(1, 4)) == 5


def test_reachability():
    W0 = WF(2, 1, {1: 1}, {(1, 0): 0}, {1: 0})
    M0 = PBWModule(W0)
    assert reachability_oracle(W0, M0.parse("I(1,-1)*v"), depth=3) == (False, None)
    W = WF(2, 1, {1: 3}, {(1, 0): 1}, ambient=G_I({1}))
    M = PBWModule(W)
    assert reachability_oracle(W, M.parse("L(0)*v")) == (True, 1)
    assert reachability_oracle(W, M.vacuum) == (True, 0)


# -- eta ---------------------------------------------------------------------

def test_eta_conjugate_examples():
    W = WF(2, 1, {1: 3}, {(1, 0): 1}, ambient=G_I({1}))
    assert eta_conjugate(W, LieElement.zero(2))[0] == W
    Wp, _ = eta_conjugate(W, parse_element("-6*I(1,0)", 2))
    assert Wp.L(1) == 3
    beta, x = Scalar(2), Scalar(7)
    W = WF(2, 1, {1: x}, {(1, 0): beta}, ambient=G_I({1}))
    Wp, vanish = eta_conjugate(W, LieElement.of(2, I(1, -1), 2 * x / beta))
    assert Wp.L(1) == 0 and 1 in vanish
    assert Wp.Iv(1, 0) == beta and Wp.Cv(0) == W.Cv(0)


def test_eta_solver_examples():
    beta, x = Scalar(2), Scalar(7)
    W = WF(2, 1, {1: x}, {(1, 0): beta}, ambient=G_I({1}))
    alpha, _ = eta_solver(W, [1])
    assert alpha == LieElement.of(2, I(1, -1), 2 * x / beta)
    W0 = WF(2, 1, {2: 4}, {(1, 0): beta}, ambient=G_I({1}))
    alpha, _ = eta_solver(W0, [1])
    assert not alpha
    a, b = Scalar(5), Scalar(-3)
    W2 = WF(2, 2, {2: a, 3: b}, {(1, 1): 1, (1, 0): 2}, ambient=G_I({1}))
    alpha, coeffs = eta_solver(W2, [2, 3])
    Wp, vanish = eta_conjugate(W2, alpha)
    assert Wp.L(2) == 0 and Wp.L(3) == 0
    assert Wp.ivals == W2.ivals and Wp.cvals == W2.cvals


def test_eta_solver_preconditions():
    with pytest.raises(PreconditionError):
        eta_solver(WF(2, 1, {1: 1}, {(1, 0): 0}, ambient=G_I({1})))
    with pytest.raises(PreconditionError):
        eta_solver(WF(2, 1, {1: 1}, {(1, 0): 1}, {1: 1}))
    with pytest.raises(PreconditionError):
        eta_solver(WF(2, 1, {1: 1}, {(1, 0): 1}, ambient=G_I({1})), [2])


def test_eta_printed_convention_runs():
    W = WF(2, 1, {1: 3, 2: 1}, {(1, 0): 2}, ambient=G_I({1}))
    alpha, coeffs = eta_solver(W, convention="printed")
    assert set(k for _, k in coeffs) == {0, -1}


def test_exp_ad_is_an_automorphism():
    alpha = parse_element("2*I(1,-1) - 1/3*I(1,0)", 2)
    pairs = [("L(1)", "L(2)"), ("L(3)", "I(1,0)"), ("I(1,1)", "I(1,-2)"), ("L(2)", "L(-2)")]
    for a, b in pairs:
        x, y = parse_element(a, 2), parse_element(b, 2)
        assert exp_ad(alpha, bracket(x, y)) == bracket(exp_ad(alpha, x), exp_ad(alpha, y))


# -- decomposition ---------------------------------------------------------

def test_decompose_examples():
    D = decompose(WF(2, 1, {1: 9}, {(1, 0): 4}, {1: 2}))
    assert D.J == frozenset({1}) and D.phi_e.L(1) == 4 and D.psi.L(1) == 5
    W = WF(3, 1, {1: 2, 2: 1}, {(1, 0): 1, (2, 0): 3})
    D = decompose(W)
    assert D.J == frozenset() and all(D.phi_e.L(n) == 0 for n in (1, 2))
    assert D.psi.L(1) == 2 and D.psi.Iv(2, 0) == 3
    D = decompose(WF(2, 1, {1: 3, 2: 1}, {}, {1: 2}))
    assert D.phi_e.L(1) == 0 and D.psi.L(1) == 3 and D.psi.L(2) == 1


def test_decompose_tensor_vacuum_reproduces_phi():
    from gapvir.fock import FockModule
    from gapvir.tensor import FockTensorModule

    W = WF(4, 1, {1: 3, 2: 1}, {(1, 0): 2, (2, 0): 5, (3, 0): -1}, {0: 7, 1: 0, 2: 3})
    D = decompose(W)
    assert D.J == frozenset({2})
    T = FockTensorModule(FockModule(D.phi_h), PBWModule(D.psi))
    assert is_whittaker_vector(W, T.vacuum, 2 * W.m + 3, T)[0]
