"""The twisted vertex Lie algebra presentation and the identification theta.

Twisted generators are ``Nbar_i(r)`` with ``r in Z + i/p`` (``i = 0..p-1``)
and central ``Kbar_j(-1)``.  Their brackets are read off, coefficient by
coefficient, from the generating-function relations

    [N0(z), N0(w)] = (d/dw N0(w)) D + 2 N0(w) d/dw D + 1/12 K0(w) (d/dw)^3 D
    [N0(z), Ni(w)] = (d/dw Ni(w)) D + Ni(w) d/dw D
    [Ni(z), Nj(w)] = delta_{i+j,p} Ki(w) d/dw (w/z)^{i/p} D

with ``D = z^{-1} delta(w/z)``.  Nothing here consults the bracket table of
:mod:`gapvir.algebra`, so ``theta`` can be checked against it.
"""

from fractions import Fraction
from typing import NamedTuple

from .algebra import C, I, L, check_p
from .errors import ParseError
from .parsing import format_term, join_terms, parse_terms
from .scalar import Scalar


class TwistedSym(NamedTuple):
    kind: str  # "N" or "K"
    index: int
    mode: Fraction  # Nbar_index(mode); always -1 for K

    def __str__(self):
        if self.kind == "K":
            return f"K({self.index})"
        return f"N({self.index},{_fmt_mode(self.mode)})"


def _fmt_mode(r):
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def Nbar(i, mode, p):
    check_p(p)
    mode = Fraction(mode)
    if not 0 <= i <= p - 1:
        raise ParseError(f"twisted index {i} outside 0..{p - 1}")
    if (mode - Fraction(i, p)).denominator != 1:
        raise ParseError(f"mode {mode} of Nbar_{i} must lie in Z + {i}/{p}")
    return TwistedSym("N", i, mode)


def Kbar(j, p):
    check_p(p)
    if not 0 <= j <= p - 1:
        raise ParseError(f"central index {j} outside 0..{p - 1}")
    if j > p // 2:
        j = p - j
    return TwistedSym("K", j, Fraction(-1))


def theta(t, p):
    """Nbar_0(m) -> L(m-1), Nbar_i(m+i/p) -> I(i,m), Kbar_j(-1) -> C(j)."""
    if t.kind == "K":
        return C(t.index, p)
    if t.kind != "N":
        raise ParseError(f"malformed twisted generator {t!r}")
    Nbar(t.index, t.mode, p)  # validates the lattice
    if t.index == 0:
        return L(int(t.mode) - 1)
    return I(t.index, int(t.mode - Fraction(t.index, p)))


def theta_inv(s, p):
    if s.kind == "L":
        return Nbar(0, s.n + 1, p)
    if s.kind == "I":
        return Nbar(s.sup, s.n + Fraction(s.sup, p), p)
    return Kbar(s.sup, p)


def _falling(x, r):
    out = Fraction(1)
    for k in range(r):
        out *= x - k
    return out


# Each relation term: (field index or "K0"/"Ki", derivative order on the
# field, derivative order on the delta distribution, twist exponent, weight).
def _relation(p, a, b):
    i, j = a.index, b.index
    if i == 0 and j == 0:
        return [(("N", 0), 1, 0, Fraction(0), Fraction(1)),
                (("N", 0), 0, 1, Fraction(0), Fraction(2)),
                (("K", 0), 0, 3, Fraction(0), Fraction(1, 12))]
    if i == 0:
        return [(("N", j), 1, 0, Fraction(0), Fraction(1)),
                (("N", j), 0, 1, Fraction(0), Fraction(1))]
    if i + j == p:
        return [(("K", i), 0, 1, Fraction(i, p), Fraction(1))]
    return []


def _coefficient(p, a, b):
    """[Nbar(a), Nbar(b)] as {TwistedSym: Fraction}, from the local relations.

    A field F(w) = sum_c F(c) w^{-c-1}, differentiated d times, times
    (d/dw)^r sum_k w^{k+s} z^{-k-s-1}: its z^{-a-1} w^{-b-1} coefficient is
    falling(-c-1, d) * falling(a, r) * F(c) with c = a + b - d - r.
    """
    out = {}
    for (fkind, fidx), d, r, s, weight in _relation(p, a, b):
        if (a.mode - s).denominator != 1:
            continue
        c = a.mode + b.mode - d - r
        if fkind == "K":
            if c != -1:
                continue
            key = Kbar(fidx, p)
        else:
            if (c - Fraction(fidx, p)).denominator != 1:
                continue
            key = Nbar(fidx, c, p)
        coeff = weight * _falling(-c - 1, d) * _falling(a.mode, r)
        if coeff:
            out[key] = out.get(key, 0) + coeff
    return {k: v for k, v in out.items() if v}


def twisted_bracket(p, a, b):
    """Bracket of two twisted generators, extracted from generating functions."""
    check_p(p)
    if a.kind == "K" or b.kind == "K":
        return {}
    if a.index != 0 and b.index == 0:
        return {k: -v for k, v in _coefficient(p, b, a).items()}
    return _coefficient(p, a, b)


def theta_element(terms, p):
    """Image under theta of {TwistedSym: coeff}, as {Sym: Scalar}."""
    out = {}
    for t, c in terms.items():
        s = theta(t, p)
        out[s] = out.get(s, Scalar(0)) + Scalar.coerce(c)
    return {s: c for s, c in out.items() if c}


def twisted_generators(p, bound):
    """All Nbar_i(r) with |floor part| <= bound, plus the Kbar's."""
    out = []
    for m in range(-bound, bound + 1):
        out.append(Nbar(0, m, p))
        for i in range(1, p):
            out.append(Nbar(i, m + Fraction(i, p), p))
    out += [Kbar(j, p) for j in range(p // 2 + 1)]
    return out


def parse_twisted(text, p):
    """Parse ``N(i,r)`` / ``K(j)``; r may be written ``m+i/p`` or as a fraction."""
    found = []

    def atom(name, args, bracket_kind, pos):
        if name == "N" and args is not None and len(args) == 2:
            if args[0].denominator != 1:
                raise ParseError("twisted index must be an integer", pos)
            return Nbar(int(args[0]), args[1], p)
        if name == "K" and args is not None and len(args) == 1:
            return Kbar(int(args[0]), p)
        raise ParseError(f"malformed twisted generator {name!r}", pos, "N(i,r) or K(j)")

    terms = parse_terms(text, atom)
    if len(terms) != 1 or terms[0][0] != 1 or len(terms[0][1]) != 1 or terms[0][1][0][1] != 1:
        raise ParseError(f"expected a single twisted generator: {text!r}")
    found.append(terms[0][1][0][0])
    return found[0]


def format_twisted(terms):
    return join_terms([format_term(Scalar.coerce(c), str(t)) for t, c in sorted(terms.items(), key=lambda kv: (kv[0].kind, kv[0].index, kv[0].mode))])
