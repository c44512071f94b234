"""Decision procedures for universal Whittaker modules.

Covers validation of Whittaker functions, the Virasoro / zero-level / full
irreducibility criteria, the degree-lowering argument on the L_0..L_{m-1}
part, the I_{-1} Whittaker-vector witness, conjugation by exp(ad alpha),
and the splitting phi = phi^e + psi along J = {i : phi(C_i) != 0}.
"""

import itertools
from dataclasses import dataclass, field

from gmpy2 import mpq

from .algebra import C, G_I, I, L, LieElement, bracket, bracket_basis, complement, exp_ad, half
from .errors import InvariantViolation, PreconditionError, ValidationError, DegenerateInputError
from .fock import phi_extension
from .linalg import SpanTracker
from .pbw import PBWModule, PBWVector, letter_key
from .scalar import ONE, ZERO, Scalar
from .verdict import Verdict
from .whitfun import HeisenbergWhittakerData, WhittakerFunction


def module(W):
    return PBWModule(W)


def pbw_act(x, v, W):
    return PBWModule(W).act(x, v)


# -- validation ------------------------------------------------------------

def _stored_value(W, s):
    """phi on a symbol, reading stored values even outside the windows."""
    if s.kind == "L":
        return W.lvals.get(s.n, ZERO)
    if s.kind == "I":
        return W.ivals.get((s.sup, s.n), ZERO)
    return W.cvals.get(s.sup, ZERO)


def validate(W, window=None):
    """Pairs of generators of g^(m) whose bracket phi does not kill.

    Returns a list of (x, y, value); empty means phi is a homomorphism on the
    sampled window (default index bound 3m+3).
    """
    nmax = 3 * W.m + 3 if window is None else window
    gens = W.generators(nmax)
    out = []
    for x, y in itertools.combinations(gens, 2):
        val = ZERO
        for s, c in bracket_basis(W.p, x, y):
            val = val + c * _stored_value(W, s)
        if val:
            out.append((x, y, val))
    return out


# -- verdicts --------------------------------------------------------------

def virasoro_verdict(W):
    if W.ambient.kind != "vir":
        raise PreconditionError("virasoro_verdict needs a Whittaker function on the Virasoro part")
    m = W.m
    a, b = W.L(2 * m - 1), W.L(2 * m)
    if a or b:
        return Verdict.Irreducible(f"(phi(L({2 * m - 1})), phi(L({2 * m}))) != (0, 0)")
    return Verdict.Reducible(f"phi(L({2 * m - 1})) = phi(L({2 * m})) = 0",
                             f"(phi(L({2 * m - 1})), phi(L({2 * m}))) = (0, 0)")


def _witness_or_none(W, i):
    try:
        return reducibility_witness(W, i)
    except PreconditionError:
        return None


def zero_level_verdict(W, indices=None):
    """Criterion for the zero-level case on the index set ``indices`` (default W.I)."""
    idx = W.I if indices is None else frozenset(indices)
    nonzero = sorted(i for i in idx if W.Cv(i))
    if nonzero:
        raise PreconditionError(f"phi(C_i) != 0 for i in {nonzero}; not zero level")
    m = W.m
    bad = sorted(i for i in idx if not W.Iv(i, m - 1))
    if not bad:
        return Verdict.Irreducible(f"phi(I(i,{m - 1})) != 0 for all i in {sorted(idx)}")
    i = bad[0]
    w = reducibility_witness(W, i)
    return Verdict.Reducible(f"I({i},-1)*v", f"phi(C({i})) = phi(I({i},{m - 1})) = 0", w, index=i)


def main_threshold(W):
    """sum_i phi(I_{m-1}^(i)) phi(I_{m-1}^(p-i)) / (2 phi(C_i))."""
    p, m = W.p, W.m
    acc = ZERO
    for i in range(1, p):
        acc = acc + W.Iv(i, m - 1) * W.Iv(p - i, m - 1) / (2 * W.Cv(i))
    return acc


def main_verdict(W):
    if W.ambient.kind != "full":
        raise PreconditionError("main_verdict needs a Whittaker function on the full algebra")
    p, m = W.p, W.m
    zero = [i for i in range(1, p) if not W.Cv(i)]
    if not zero:
        thr = main_threshold(W)
        pair = (W.L(2 * m), W.L(2 * m - 1))
        if pair != (ZERO, thr):
            return Verdict.Irreducible(f"(phi(L({2 * m})), phi(L({2 * m - 1}))) != (0, {thr})", threshold=thr)
        return Verdict.Reducible(f"phi(L({2 * m})) = 0 and phi(L({2 * m - 1})) = {thr}",
                                 "generic level at the critical pair", threshold=thr)
    bad = [i for i in zero if not W.Iv(i, m - 1)]
    if not bad:
        return Verdict.Irreducible(f"phi(I(i,{m - 1})) != 0 wherever phi(C_i) = 0", zero_level=zero)
    i = bad[0]
    w = reducibility_witness(W, i)
    return Verdict.Reducible(f"I({i},-1)*v", f"phi(C({i})) = phi(I({i},{m - 1})) = 0", w, index=i)


# -- the Whittaker-vector witness -----------------------------------------

def is_whittaker_vector(W, w, nmax, M=None):
    """x.w == phi(x) w for all generators of the subalgebra with index <= nmax."""
    M = PBWModule(W) if M is None else M
    for x in W.generators(nmax):
        if M.act(x, w) != w * W(x):
            return False, x
    return True, None


def reducibility_witness(W, i):
    m = W.m
    if i not in W.I:
        raise PreconditionError(f"superscript {i} is not in the index set {sorted(W.I)}")
    if W.Cv(i) or W.Iv(i, m - 1):
        raise PreconditionError(f"needs phi(C({i})) = 0 and phi(I({i},{m - 1})) = 0")
    M = PBWModule(W)
    w = M.vector([I(i, -1)])
    ok, x = is_whittaker_vector(W, w, 2 * m + 2, M)
    if not ok:
        raise InvariantViolation(f"I({i},-1)*v is not a Whittaker vector: fails at {x}")
    if set(w.terms) <= {()}:
        raise InvariantViolation("witness is a multiple of v")
    return w


# -- the L_0..L_{m-1} part ---------------------------------------------------

def _m0_exponents(word, m):
    exps = [0] * m
    for s in word:
        if s.kind != "L" or not 0 <= s.n <= m - 1:
            raise ValidationError(f"{s} is not one of L(0)..L({m - 1}); vector is outside M_0")
        exps[s.n] += 1
    return tuple(exps)


def support_degree(v, m):
    """The maximal exponent tuple (i_0, ..., i_{m-1}) of v, lexicographic from i_0."""
    if not v:
        raise DegenerateInputError("the zero vector has no degree")
    return max(_m0_exponents(w, m) for w in v.terms)


def m0_word(exps):
    """The PBW word L_{m-1}^{i_{m-1}} ... L_0^{i_0}."""
    word = []
    for n in range(len(exps) - 1, -1, -1):
        word += [L(n)] * exps[n]
    return tuple(word)


def m0_vectors(m, wmax):
    """Basis words of M_0 with weight sum (m - n) i_n <= wmax."""
    out = []
    ranges = [range(0, wmax // (m - n) + 1) for n in range(m)]
    for exps in itertools.product(*ranges):
        if sum((m - n) * e for n, e in enumerate(exps)) <= wmax:
            out.append(m0_word(exps))
    return out


@dataclass
class ReductionStep:
    operator: str
    degree_before: tuple
    degree_after: tuple


def degree_reduce(v, W, i=None):
    """Lower deg(v) one unit vector at a time until a multiple of v remains.

    Returns (scalar, steps).  Each step applies I_{m-q-1}^(i) - phi(...) with q
    the first nonzero position of deg(v)."""
    m = W.m
    if not W.zero_level:
        raise PreconditionError("degree_reduce needs phi(C_i) = 0 for all i")
    if i is None:
        good = [j for j in sorted(W.I) if W.Iv(j, m - 1)]
        if not good or len(good) != len(W.I):
            raise PreconditionError(f"needs phi(I(i,{m - 1})) != 0 for every i in {sorted(W.I)}")
        i = good[0]
    elif not W.Iv(i, m - 1):
        raise PreconditionError(f"needs phi(I({i},{m - 1})) != 0")
    M = PBWModule(W)
    steps = []
    deg = support_degree(v, m)
    while any(deg):
        q = next(k for k, e in enumerate(deg) if e)
        x = I(i, m - q - 1)
        v = M.act(x, v) - v * W(x)
        if not v:
            raise InvariantViolation(f"step with {x} annihilated the vector")
        new = support_degree(v, m)
        want = tuple(e - (k == q) for k, e in enumerate(deg))
        if new != want:
            raise InvariantViolation(f"degree went {deg} -> {new} under {x}, expected {want}")
        steps.append(ReductionStep(f"{x} - {W(x)}", deg, new))
        deg = new
    return v.coeff(()), steps


# -- exp(ad alpha) conjugation -----------------------------------------------

def eta_conjugate(W, alpha, window=None):
    """phi' = phi o exp(ad alpha) on g^(m); returns (phi', vanishing L-list)."""
    if not W.zero_level:
        raise PreconditionError("eta_conjugate needs zero level")
    p, m = W.p, W.m
    nmax = 3 * m + 3 if window is None else window
    for s in alpha.terms:
        if s.kind != "I" or s.sup not in W.I:
            raise PreconditionError(f"alpha must be supported on I-symbols of the ambient, found {s}")
    for x in W.generators(nmax):
        y = exp_ad(alpha, LieElement.of(p, x))
        outside = [s for s in y.terms if not W.contains(s)]
        if outside:
            raise PreconditionError(f"exp(ad alpha)({x}) leaves g^({m}) via {outside[0]}")

    def val(s):
        y = exp_ad(alpha, LieElement.of(p, s))
        return W(y)

    lv = {n: val(L(n)) for n in range(m, 2 * m + 1)}
    iv = {(i, n): val(I(i, n)) for i in W.I for n in range(m)}
    cv = {0: val(C(0))}
    cv.update({j: val(C(j)) for j in half(p, W.I)})
    Wp = WhittakerFunction(p, m, lv, iv, cv, W.ambient)
    vanishing = [n for n in range(m, 2 * m + 1) if not Wp.L(n)]
    return Wp, vanishing


def _alpha_from(W, coeffs):
    """alpha = -(1/|I|) sum_i sum_k a_{i,k} / (k + i/p) I_k^(i)."""
    p = W.p
    nI = len(W.I)
    terms = {}
    for (i, k), a in coeffs.items():
        if a:
            terms[I(i, k)] = -a / (Scalar(mpq(k) + mpq(i, p)) * nI)
    return LieElement(p, terms)


def eta_solver(W, window=None, convention="consequence"):
    """Coefficients a_{i,k} (k = -m..0) and alpha killing phi'(L_n) on the window.

    ``consequence``: phi(L_n) = sum_k a_{i,k} phi(I_{n+k}^(i)) for n in the
    window (triangular in a_{i,-1..-m}, diagonal phi(I_{m-1}); a_{i,0} = 0).
    ``printed``: (phi(L_m), ..., phi(L_2m)) = (a_{i,0}, ..., a_{i,-m}) A_i with
    A_i[l][k] = phi(I_{m+k-l-1}^(i)) solved exactly as written.
    Returns (alpha, coeffs).
    """
    if not W.zero_level:
        raise PreconditionError("eta_solver needs zero level")
    m = W.m
    win = list(range(m, 2 * m)) if window is None else sorted(set(window))
    if any(not m <= n <= 2 * m - 1 for n in win):
        raise PreconditionError(f"target window must lie in [{m}, {2 * m - 1}]")
    singular = [i for i in sorted(W.I) if not W.Iv(i, m - 1)]
    if singular:
        raise PreconditionError(f"singular system: phi(I(i,{m - 1})) = 0 for i in {singular}")
    coeffs = {}
    for i in sorted(W.I):
        if convention == "consequence":
            a = {k: ZERO for k in range(-m, 1)}
            # row n has diagonal unknown k = m - 1 - n; solve from n = 2m-1 down
            for n in sorted(win, reverse=True):
                kd = m - 1 - n
                rhs = W.L(n)
                for k in range(-m, 0):
                    if k != kd:
                        rhs = rhs - a[k] * W.Iv(i, n + k) if 0 <= n + k < m else rhs
                a[kd] = rhs / W.Iv(i, m - 1)
        elif convention == "printed":
            # x A = b with A lower triangular: solve from the last column backwards
            size = m + 1
            A = [[W.Iv(i, m + k - l - 1) if m + k - l - 1 >= 0 else ZERO for k in range(size)] for l in range(size)]
            b = [W.L(m + k) for k in range(size)]
            x = [ZERO] * size
            for k in range(size - 1, -1, -1):
                rhs = b[k]
                for l in range(k + 1, size):
                    rhs = rhs - x[l] * A[l][k]
                x[k] = rhs / A[k][k]
            a = {-l: x[l] for l in range(size)}
        else:
            raise ValidationError(f"unknown convention {convention!r}")
        for k, c in a.items():
            coeffs[(i, k)] = c
    return _alpha_from(W, coeffs), coeffs


# -- decomposition along J ---------------------------------------------------

@dataclass
class Decomposition:
    J: frozenset
    phi_h: HeisenbergWhittakerData
    phi_e: WhittakerFunction
    psi: WhittakerFunction
    checks: dict = field(default_factory=dict)


def decompose(W):
    if W.ambient.kind != "full":
        raise PreconditionError("decompose needs a Whittaker function on the full algebra")
    p, m = W.p, W.m
    J = W.J
    Jc = complement(p, J)
    phi_h = HeisenbergWhittakerData.restrict(W, J)
    if J:
        phi_e = phi_extension(phi_h)
    else:
        phi_e = WhittakerFunction(p, m)
    lv = {n: W.L(n) - phi_e.L(n) for n in range(m, 2 * m + 1)}
    iv = {(i, n): W.Iv(i, n) for i in Jc for n in range(m)}
    cv = {0: W.Cv(0) - len(J)}
    cv.update({j: W.Cv(j) for j in half(p, Jc)})
    psi = WhittakerFunction(p, m, lv, iv, cv, G_I(Jc))
    checks = {}
    for x in W.generators(2 * m + 3):
        inJ = x.kind in "IC" and x.sup in J
        if x.kind == "C" and x.sup == 0:
            rebuilt = phi_e(x) + psi(x)
        elif inJ:
            rebuilt = phi_e(x)
        elif x.kind == "L":
            rebuilt = phi_e(x) + psi(x)
        else:
            rebuilt = psi(x)
        if rebuilt != W(x):
            raise InvariantViolation(f"phi^e + psi^e disagrees with phi at {x}")
        checks[str(x)] = str(rebuilt)
    return Decomposition(J, phi_h, phi_e, psi, checks)


# -- bounded reachability ----------------------------------------------------

def reachability_oracle(W, v, depth=4, index=None, M=None):
    """Search for v_phi in the span generated from v by x - phi(x), x in g^(m).

    Returns (reached, steps) where steps is the BFS depth at which v_phi
    entered the span (None when not reached within the budget).
    """
    m = W.m
    M = PBWModule(W) if M is None else M
    nmax = 2 * m + 1 if index is None else index
    ops = [x for x in W.generators(nmax) if x.kind != "C"]
    span = SpanTracker()
    vac = {(): ONE}
    if not v:
        return False, None
    span.add(v.terms)
    if span.contains(vac):
        return True, 0
    frontier = [v]
    for d in range(1, depth + 1):
        new = []
        for u in frontier:
            for x in ops:
                w = M.act(x, u) - u * W(x)
                if w and span.add(w.terms):
                    new.append(w)
        if span.contains(vac):
            return True, d
        if not new:
            return False, None
        frontier = new
    return False, None
