"""The U(C L_0)-free rank-one modules Omega(lambda, alpha) on C[t].

    L_n f(t)     = lambda^n (t + alpha_0 n) f(t + n)
    I_n^(i) f(t) = alpha_i lambda^n f(t + n + i/p)
    C_j f(t)     = 0
"""

from functools import lru_cache
from math import comb

from gmpy2 import mpq

from .algebra import I, L, basis_symbols, check_p
from .errors import ClassificationFailure, InvariantViolation, ParameterError, ParseError, PreconditionError
from .module import Module
from .parsing import format_term, join_terms, parse_terms
from .scalar import ONE, ZERO, Scalar
from .vectors import SparseVector, add_into
from .verdict import Verdict


class UniPoly(SparseVector):
    """A polynomial in t, keyed by exponent."""

    __slots__ = ()

    @staticmethod
    def sort_key(k):
        return -k

    @classmethod
    def t(cls, k=1):
        return cls._wrap({k: ONE})

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @property
    def degree(self):
        return max(self.terms) if self.terms else None

    def __str__(self):
        parts = []
        for k, c in self.items():
            body = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            parts.append(format_term(c, body))
        return join_terms(parts)

    def __call__(self, x):
        x = Scalar.coerce(x)
        acc = ZERO
        for k, c in self.terms.items():
            acc = acc + c * x ** k
        return acc

    def shift(self, c):
        """f(t + c)."""
        acc = {}
        for k, a in self.terms.items():
            add_into(acc, _shifted_power(Scalar.coerce(c), k), a)
        return UniPoly._wrap(acc)

    def mul_t(self):
        return UniPoly._wrap({k + 1: c for k, c in self.terms.items()})

    def __matmul__(self, other):
        acc = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                add_into(acc, {a + b: ca * cb})
        return UniPoly._wrap(acc)

    @classmethod
    def parse(cls, text):
        def atom(name, args, bracket, pos):
            if name != "t" or args is not None:
                raise ParseError(f"unexpected symbol {name!r}", pos, "'t'")
            return "t"

        acc = {}
        for c, atoms in parse_terms(text, atom):
            add_into(acc, {sum(k for _, k in atoms): c})
        return cls._wrap(acc)

    def to_json(self):
        return {str(k): str(c) for k, c in sorted(self.terms.items())}

    @classmethod
    def from_json(cls, data):
        return cls({int(k): Scalar.parse(v) for k, v in data.items()})


@lru_cache(maxsize=4096)
def _shifted_power(c, k):
    """(t + c)^k as a term dict."""
    out = {}
    cp = ONE
    for j in range(k, -1, -1):
        out[j] = cp * comb(k, j)
        cp = cp * c
    return {e: v for e, v in out.items() if v}


class OmegaModule(Module):
    vector_type = UniPoly

    def __init__(self, p, lam, alpha):
        super().__init__()
        self.p = check_p(p)
        self.lam = Scalar.coerce(lam)
        if not self.lam:
            raise ParameterError("lambda must be nonzero")
        alpha = tuple(Scalar.coerce(a) for a in alpha)
        if len(alpha) != p:
            raise ParameterError(f"alpha needs {p} entries (alpha_0..alpha_{p - 1}), got {len(alpha)}")
        self.alpha = alpha

    @property
    def alpha_is_zero(self):
        return not any(self.alpha)

    def _act_basis(self, s, k):
        if s.kind == "C":
            return {}
        n = s.n
        scale = self.lam ** n
        if s.kind == "L":
            shifted = _shifted_power(Scalar(n), k)
            out = {}
            a0n = self.alpha[0] * n
            for e, c in shifted.items():
                add_into(out, {e + 1: c * scale})
                if a0n:
                    add_into(out, {e: c * scale * a0n})
            return out
        ai = self.alpha[s.sup]
        if not ai:
            return {}
        shifted = _shifted_power(Scalar(mpq(n) + mpq(s.sup, self.p)), k)
        return {e: c * ai * scale for e, c in shifted.items()}

    def __repr__(self):
        return f"OmegaModule(p={self.p}, lambda={self.lam}, alpha=({', '.join(map(str, self.alpha))}))"

    def to_json(self):
        return {"p": self.p, "lambda": str(self.lam), "alpha": [str(a) for a in self.alpha]}


def omega_act(M, x, f):
    return M.act(x, f)


def omega_verdict(M):
    if M.alpha_is_zero:
        return Verdict.Reducible("tΩ(λ,0̄)", "alpha is zero: t C[t] is a proper submodule")
    return Verdict.Irreducible("alpha is nonzero")


def recover_params(p, act, n_check=3, d_check=4):
    """Read (lambda, alpha) off an action oracle ``act(symbol, UniPoly)``.

    L_1 . 1 = lambda t + lambda alpha_0 and I_0^(i) . 1 = alpha_i; the result is
    then replayed against the oracle on generators |n| <= n_check and
    monomials of degree <= d_check.
    """
    check_p(p)
    one = UniPoly.t(0)
    l1 = act(L(1), one)
    if not isinstance(l1, UniPoly) or (l1.degree or 0) > 1 or not l1.coeff(1):
        raise ClassificationFailure(f"L(1).1 = {l1} is not of the form lambda*t + c", (str(L(1)), "1"))
    lam = l1.coeff(1)
    alpha = [l1.coeff(0) / lam]
    for i in range(1, p):
        v = act(I(i, 0), one)
        if (v.degree or 0) > 0:
            raise ClassificationFailure(f"I({i},0).1 = {v} is not constant", (str(I(i, 0)), "1"))
        alpha.append(v.coeff(0))
    model = OmegaModule(p, lam, alpha)
    for s in basis_symbols(p, n_check):
        for k in range(d_check + 1):
            f = UniPoly.t(k)
            got, want = act(s, f), model.act(s, f)
            if got != want:
                raise ClassificationFailure(
                    f"oracle disagrees with Ω({lam}, {tuple(map(str, alpha))}) at {s} on t^{k}: {got} vs {want}",
                    (str(s), str(f)))
    return lam, tuple(alpha)


def t_submodule_check(M, nmax=5, dmax=6):
    """Check that t C[t] is stable under every basis symbol with |n| <= nmax."""
    if not M.alpha_is_zero:
        raise PreconditionError("t C[t] is a submodule only when alpha is zero")
    checked = 0
    for s in basis_symbols(M.p, nmax):
        for k in range(dmax + 1):
            out = M.act(s, UniPoly.t(k + 1))
            if out.coeff(0):
                raise InvariantViolation(f"{s}.t^{k + 1} = {out} leaves t C[t]")
            checked += 1
    return {"generators": f"|n| <= {nmax}", "degrees": f"<= {dmax}", "checked": checked, "ok": True}
