import itertools

import pytest

from gapvir.algebra import C, G_I, I, L, LieElement, basis_symbols, bracket
from gapvir.errors import FingerprintFailure, ParameterError, PreconditionError
from gapvir.fock import FockModule, FockPoly
from gapvir.linalg import solve, vandermonde
from gapvir.pbw import PBWModule
from gapvir.polymod import OmegaModule, UniPoly
from gapvir.scalar import Scalar
from gapvir.tensor import (FockTensorModule, OmegaTensorModule, SubmoduleSpec, TrivialModule, extract_top,
                           fingerprint, omega_tensor_whittaker_verdict, submodule_shape_check, tensor_act)
from gapvir.whitfun import HeisenbergWhittakerData, WhittakerFunction
from gapvir.whittaker import reducibility_witness


def fock(p, I_, level, phi=None, m=1):
    return FockModule(HeisenbergWhittakerData(p, I_, m, level, phi or {}))


def whit(p=2, m=1, lv=None, iv=None, cv=None, ambient=None):
    return PBWModule(WhittakerFunction(p, m, lv or {1: 1, 2: 1}, iv or {}, cv or {}, ambient))


# -- FockTensor ------------------------------------------------------------

def test_central_charge_adds():
    for c in [Scalar(3), Scalar.parse("-1/2"), Scalar.parse("2+i")]:
        T = FockTensorModule(fock(2, [1], {1: 1}), TrivialModule(2, c - 1))
        u = T.vacuum
        assert tensor_act(T, C(0), u) == u * c


def test_L0_on_fock_tensor():
    R = whit(2, 1, {1: 2}, ambient=G_I(set()))
    T = FockTensorModule(fock(2, [1], {1: 1}), R)
    u = T.vacuum
    want = u * Scalar.parse("1/16") + T.pure(FockPoly.one(), R.parse("L(0)*v"))
    assert tensor_act(T, L(0), u) == want
    assert str(tensor_act(T, L(0), u)) == "1/16*1⊗v + 1⊗L(0)*v"


def test_routing_by_superscript():
    R = whit(4, 1, {1: 1}, {(2, 0): 3}, {2: 1}, ambient=G_I({2}))
    T = FockTensorModule(fock(4, [1, 3], {1: 2, 3: 2}, {(1, 0): 5}), R)
    u = T.vacuum
    assert tensor_act(T, I(1, 0), u) == u * 5
    assert tensor_act(T, I(2, 0), u) == u * 3
    assert tensor_act(T, C(2, 4), u) == u
    with pytest.raises(ParameterError):
        FockTensorModule(fock(4, [1, 3], {1: 2, 3: 2}), whit(4, 1, {1: 1}, {(1, 0): 1}))


def test_fock_tensor_representation_property():
    R = whit(4, 1, {1: 1, 2: 2}, {(2, 0): 3}, {0: 2, 2: 1}, ambient=G_I({2}))
    T = FockTensorModule(fock(4, [1, 3], {1: 2, 3: 2}, {(1, 0): 1, (3, 0): -1}), R)
    vecs = [T.vacuum, T.pure(FockPoly.var(1, 1), R.parse("I(2,-1)*v"))]
    syms = basis_symbols(4, 1)
    for a, b in itertools.product(syms, syms):
        x, y = LieElement.of(4, a), LieElement.of(4, b)
        z = bracket(x, y)
        for v in vecs:
            assert T.act(x, T.act(y, v)) - T.act(y, T.act(x, v)) == T.act(z, v), (a, b)


# -- OmegaTensor --------------------------------------------------------------

def test_diagonal_L0():
    R = whit()
    T = OmegaTensorModule(OmegaModule(2, 2, (1, 3)), R)
    u = T.one_tensor(R.vacuum)
    assert tensor_act(T, L(0), u) == T.pure(UniPoly.t(1), R.vacuum) + T.pure(UniPoly.t(0), R.parse("L(0)*v"))


def test_omega_tensor_representation_property():
    R = whit(2, 1, {1: 2, 2: 1}, {(1, 0): 1}, {0: 1, 1: 1})
    T = OmegaTensorModule(OmegaModule(2, 3, (1, "1/2")), R)
    vecs = [T.one_tensor(R.vacuum), T.pure(UniPoly.t(2), R.parse("L(0)*v"))]
    syms = basis_symbols(2, 2)
    for a, b in itertools.product(syms, syms):
        x, y = LieElement.of(2, a), LieElement.of(2, b)
        z = bracket(x, y)
        for v in vecs:
            assert T.act(x, T.act(y, v)) - T.act(y, T.act(x, v)) == T.act(z, v), (a, b)


def test_extract_top_trivial():
    R = whit()
    T = OmegaTensorModule(OmegaModule(2, 1, (0, 1)), R)
    u = T.one_tensor(R.vacuum)
    assert extract_top(T, u) == u


def test_extract_top_I_family():
    R = whit(2, 1, {1: 1}, {(1, 0): 1}, {1: 1})
    T = OmegaTensorModule(OmegaModule(2, 1, (0, 1)), R)
    w = T.pure(UniPoly.t(1), R.vacuum) + T.pure(UniPoly.t(0), R.parse("L(0)*v"))
    out, combo = extract_top(T, w, certificate=True)
    assert out == T.one_tensor(R.vacuum)
    assert [x for _, x in combo] == [I(1, 3), I(1, 4)]
    # independent replay: 2x2 Vandermonde at nodes 3 + 1/2, 4 + 1/2
    beta = solve([[1, 1], [Scalar.parse("7/2"), Scalar.parse("9/2")]], [Scalar(0), Scalar(1)])
    replay = T.act(I(1, 3), w) * beta[0] + T.act(I(1, 4), w) * beta[1]
    assert replay == out


def test_extract_top_L_family():
    R = whit()
    T = OmegaTensorModule(OmegaModule(2, 2, (1, 0)), R)
    w = T.pure(UniPoly.t(2), R.vacuum)
    out, combo = extract_top(T, w, certificate=True)
    assert out == T.one_tensor(R.vacuum)
    replay = T.vector_type.zero()
    for c, x in combo:
        replay = replay + T.act(x, w) * c
    assert replay == out


def test_extract_top_needs_alpha():
    R = whit()
    T = OmegaTensorModule(OmegaModule(2, 1, (0, 0)), R)
    with pytest.raises(PreconditionError):
        extract_top(T, T.one_tensor(R.vacuum))


def test_fingerprint_roundtrip_and_separation():
    R = whit(2, 1, {1: 2}, {(1, 0): 1}, {1: 1})
    a = fingerprint(OmegaTensorModule(OmegaModule(2, 2, (1, 3)), R))
    assert a == (Scalar(2), (Scalar(1), Scalar(3)))
    b = fingerprint(OmegaTensorModule(OmegaModule(2, 1, (0, 1)), R))
    assert b == (Scalar(1), (Scalar(0), Scalar(1)))
    c = fingerprint(OmegaTensorModule(OmegaModule(2, 2, (1, 4)), R))
    assert a != c


def test_fingerprint_rejects_wrong_shape():
    class Fake(OmegaTensorModule):
        def _act_basis(self, s, key):
            out = super()._act_basis(s, key)
            if s == I(1, 4):
                out = {k: v * 2 for k, v in out.items()}
            return out

    R = whit()
    with pytest.raises(FingerprintFailure):
        fingerprint(Fake(OmegaModule(2, 2, (1, 3)), R))


def test_omega_tensor_verdicts():
    W = WhittakerFunction(2, 1, {1: 1}, {(1, 0): 1}, {1: 0})
    assert not omega_tensor_whittaker_verdict(2, (0, 0), W).irreducible
    Wr = WhittakerFunction(2, 1, {1: "1/2", 2: 0}, {(1, 0): 1}, {1: 1})
    assert not omega_tensor_whittaker_verdict(1, (0, 1), Wr).irreducible
    assert omega_tensor_whittaker_verdict(1, (1, 0), W).irreducible


# -- submodule shapes ------------------------------------------------------

def _shape_module(reducible=True):
    psi = WhittakerFunction(4, 1, {1: 1}, {(2, 0): 0 if reducible else 1}, {2: 0}, G_I({2}))
    R = PBWModule(psi)
    T = FockTensorModule(fock(4, [1, 3], {1: 1, 3: 1}, {(1, 0): 2}), R)
    return T, psi


def test_shape_trivial_cases():
    T, psi = _shape_module()
    assert submodule_shape_check(T, SubmoduleSpec.whole())["ok"]
    assert submodule_shape_check(T, SubmoduleSpec.zero())["ok"]


def test_shape_generated_by_witness():
    T, psi = _shape_module()
    w = reducibility_witness(psi, 2)
    rep = submodule_shape_check(T, SubmoduleSpec.generated_by(w), window=2, depth=2)
    assert rep["ok"] and rep["checked"] > 0
