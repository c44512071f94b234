"""Free-field Whittaker modules on P_I = C[t_{n,i} : n >= 1, i in I].

The Heisenberg part acts by creation (multiplication by t_{n,i}) and
annihilation (a scaled derivative shifted by phi); L_n acts through the
normal-ordered quadratic expression in the I's plus a vacuum constant.
"""

from gmpy2 import mpq

from .algebra import C, I, L, Sym, check_p, half
from .errors import ParseError, PreconditionError
from .module import Module
from .parsing import format_term, join_terms, parse_terms
from .scalar import ONE, ZERO, Scalar
from .vectors import SparseVector, add_into
from .verdict import Verdict
from .whitfun import HeisenbergWhittakerData, WhittakerFunction

# A monomial is a sorted tuple of ((n, i), exponent) pairs.


def _mono_mul(mono, var):
    d = dict(mono)
    d[var] = d.get(var, 0) + 1
    return tuple(sorted(d.items()))


def _mono_diff(mono, var):
    """(exponent, monomial / var), or None when var does not occur."""
    d = dict(mono)
    e = d.get(var)
    if not e:
        return None
    if e == 1:
        del d[var]
    else:
        d[var] = e - 1
    return e, tuple(sorted(d.items()))


def mono_degree(mono):
    return sum(e for _, e in mono)


def mono_weight(mono):
    return sum(n * e for (n, _), e in mono)


class FockPoly(SparseVector):
    __slots__ = ()

    @staticmethod
    def sort_key(mono):
        return (-mono_degree(mono), mono)

    @classmethod
    def one(cls):
        return cls._wrap({(): ONE})

    @classmethod
    def var(cls, n, i):
        return cls._wrap({(((n, i), 1),): ONE})

    @classmethod
    def monomial(cls, exps, coeff=1):
        """From a {(n, i): exponent} map."""
        return cls({tuple(sorted((k, e) for k, e in exps.items() if e)): coeff})

    @property
    def nmax(self):
        """Largest first index of a variable present (0 for constants)."""
        return max((n for mono in self.terms for (n, _), _e in mono), default=0)

    def __str__(self):
        parts = []
        for mono, c in self.items():
            body = "*".join(f"t[{n},{i}]" + (f"^{e}" if e > 1 else "") for (n, i), e in mono)
            parts.append(format_term(c, body))
        return join_terms(parts)

    @classmethod
    def parse(cls, text):
        def atom(name, args, bracket, pos):
            if name != "t" or bracket != "[" or args is None or len(args) != 2:
                raise ParseError(f"unexpected symbol {name!r}", pos, "t[n,i]")
            n, i = args
            if n.denominator != 1 or i.denominator != 1 or n < 1:
                raise ParseError("variables are t[n,i] with integers n >= 1", pos)
            return (int(n), int(i))

        acc = {}
        for c, atoms in parse_terms(text, atom):
            exps = {}
            for v, k in atoms:
                exps[v] = exps.get(v, 0) + k
            add_into(acc, {tuple(sorted(exps.items())): c})
        return cls._wrap(acc)

    def to_json(self):
        return [{"monomial": [[n, i, e] for (n, i), e in mono], "coeff": str(c)} for mono, c in self.items()]

    @classmethod
    def from_json(cls, data):
        acc = {}
        for t in data:
            mono = tuple(sorted(((n, i), e) for n, i, e in t["monomial"] if e))
            add_into(acc, {mono: Scalar.parse(t["coeff"])})
        return cls._wrap(acc)


def vacuum_constant(p, I):
    """sum_{j in I} j(p-j)/(4p^2)."""
    return Scalar(sum((mpq(j * (p - j), 4 * p * p) for j in I), mpq(0)))


class FockModule(Module):
    """P_I as a g-module of central charge |I| with C_i acting as l_i."""

    vector_type = FockPoly

    def __init__(self, data, extra_window=0):
        super().__init__()
        if not isinstance(data, HeisenbergWhittakerData):
            raise TypeError("FockModule expects HeisenbergWhittakerData")
        data.require_generic()
        self.data = data
        self.p = data.p
        self.I = data.I
        self.m = data.m
        self.constant = vacuum_constant(self.p, self.I)
        self.extra_window = extra_window

    # -- Heisenberg part ------------------------------------------------------
    def _h_basis(self, s, mono):
        p = self.p
        if s.kind == "C":
            if s.sup == 0:
                return {mono: Scalar(len(self.I))}
            if s.sup in self.I:
                return {mono: self.data.level[s.sup]}
            return {}
        j, k = s.sup, s.n
        if j not in self.I:
            return {}
        if k <= -1:
            return {_mono_mul(mono, (-k, j)): ONE}
        # I_{n-1}^(p-i) with n = k+1, i = p-j
        n, i = k + 1, p - j
        out = {}
        phi = self.data.phi(j, k)
        if phi:
            out[mono] = phi
        d = _mono_diff(mono, (n, i))
        if d is not None:
            e, rest = d
            add_into(out, {rest: self.data.level[i] * (mpq(n) - mpq(i, p)) * e})
        return out

    def _h_terms(self, s, terms):
        acc = {}
        for mono, c in terms.items():
            add_into(acc, self.act_basis(s, mono), c)
        return acc

    # -- Virasoro part ----------------------------------------------------------
    def window(self, n, mono):
        nmax = max((v for (v, _), _e in mono), default=0)
        b = nmax + abs(n) + self.m + 2 + self.extra_window
        return -b, b

    def normal_ordered_term(self, n, j, k, mono):
        """:I_k^(j) I_{n-k-1}^(p-j): applied to one monomial (no prefactor)."""
        l = n - k - 1
        a, b = I(j, k), I(self.p - j, l)
        first, second = (a, b) if k >= l else (b, a)
        return self._h_terms(second, self.act_basis(first, mono))

    def _L_basis(self, n, mono):
        lo, hi = self.window(n, mono)
        acc = {}
        for j in sorted(self.I):
            pref = Scalar(mpq(1, 2)) / self.data.level[j]
            for k in range(lo, hi + 1):
                add_into(acc, self.normal_ordered_term(n, j, k, mono), pref)
            # certificate: the first omitted terms on either side vanish
            for k in (lo - 1, hi + 1):
                if self.normal_ordered_term(n, j, k, mono):
                    raise AssertionError(f"truncation window misses k={k} for L({n}) on {mono}")
        if n == 0 and self.constant:
            add_into(acc, {mono: self.constant})
        return acc

    def _act_basis(self, s, mono):
        if s.kind == "L":
            return self._L_basis(s.n, mono)
        return self._h_basis(s, mono)

    # -- Whittaker data ---------------------------------------------------------
    def restriction_bound(self, v):
        return max(v.nmax, self.m) + 1 if v else 0

    def whittaker_function(self):
        return phi_extension(self.data)


def fock_h_act(F, x, f):
    if isinstance(x, Sym) and x.kind == "L" or not isinstance(x, Sym) and any(s.kind == "L" for s in _terms(x, F.p)):
        raise PreconditionError("fock_h_act takes Heisenberg or central symbols only")
    return F.act(x, f)


def _terms(x, p):
    from .algebra import as_element

    return as_element(x, p).terms


def fock_L_act(F, n, f):
    return F.act(L(n), f)


def truncation_bound(F, n, f):
    """The k-window of the normal-ordered sum used for L_n on f."""
    nmax = f.nmax if isinstance(f, FockPoly) else 0
    b = nmax + abs(n) + F.m + 2
    return -b, b


def phi_extension(D):
    """The Whittaker function phi^e on g^(m) induced by the free-field L's."""
    if not isinstance(D, HeisenbergWhittakerData):
        raise TypeError("phi_extension expects HeisenbergWhittakerData")
    D.require_generic()
    p, m = D.p, D.m
    lv = {}
    for n in range(m, 2 * m + 1):
        acc = ZERO
        for j in sorted(D.I):
            s = ZERO
            for k in range(m):
                s = s + D.phi(j, k) * D.phi(p - j, n - k - 1)
            acc = acc + s / (2 * D.level[j])
        lv[n] = acc
    iv = {(i, n): D.phi(i, n) for i in D.I for n in range(m)}
    cv = {0: len(D.I)}
    cv.update({j: D.level[j] for j in half(p, D.I)})
    return WhittakerFunction(p, m, lv, iv, cv)


def heisenberg_verdict(D):
    zero = sorted(i for i in half(D.p, D.I) if not D.level[i])
    if zero:
        return Verdict.Reducible(", ".join(f"C({i})" for i in zero), "some level vanishes", vanishing=zero)
    return Verdict.Irreducible("every level is nonzero")
