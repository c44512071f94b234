"""The gap-p Virasoro algebra: basis symbols, exact brackets, gradings,
subalgebra membership and the inner automorphisms exp(ad a) for a in h.

A basis symbol is one of ``L(n)``, ``I(i,n)`` (1 <= i <= p-1) or ``C(j)``
(0 <= j <= p//2).  Central indices above p//2 are folded via C_i = C_{p-i}
when a symbol is built for a given ``p``.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from gmpy2 import mpq

from .errors import (
    DegenerateInputError,
    InvariantViolation,
    ParameterError,
    ParseError,
    UnsupportedError,
    ValidationError,
)
from .parsing import format_term, join_terms, parse_terms
from .scalar import Scalar


def check_p(p):
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        raise ParameterError(f"gap parameter must be an integer > 1, got {p!r}")
    return p


_KIND_ORDER = {"L": 0, "I": 1, "C": 2}


class Sym(NamedTuple):
    kind: str
    sup: int
    n: int

    def __str__(self):
        if self.kind == "L":
            return f"L({self.n})"
        if self.kind == "I":
            return f"I({self.sup},{self.n})"
        return f"C({self.sup})"

    @property
    def degree(self):
        return 0 if self.kind == "C" else self.n

    @property
    def is_central(self):
        return self.kind == "C"


def sym_key(s):
    return (_KIND_ORDER[s.kind], s.sup, s.n)


def L(n):
    return Sym("L", 0, n)


def I(i, n):
    return Sym("I", i, n)


def C(j, p=None):
    if p is not None:
        check_p(p)
        if not 0 <= j <= p - 1:
            raise ParameterError(f"central index {j} out of range for p={p}")
        if j > p // 2:
            j = p - j
    return Sym("C", j, 0)


def validate_symbol(s, p):
    if s.kind == "L":
        return s
    if s.kind == "I":
        if not 1 <= s.sup <= p - 1:
            raise ParameterError(f"superscript of {s} must lie in 1..{p - 1}")
        return s
    if s.kind == "C":
        if not 0 <= s.sup <= p // 2:
            raise ParameterError(f"central index of {s} must lie in 0..{p // 2}")
        return s
    raise ParameterError(f"unknown symbol kind {s.kind!r}")


def normalize_symbol(s, p):
    if s.kind == "C":
        return C(s.sup, p)
    return validate_symbol(s, p)


@lru_cache(maxsize=None)
def bracket_basis(p, a, b):
    """[a, b] for basis symbols, as a tuple of (Sym, Scalar) pairs."""
    ka, kb = a.kind, b.kind
    if ka == "C" or kb == "C":
        return ()
    if ka == "L" and kb == "L":
        m, n = a.n, b.n
        out = []
        if m != n:
            out.append((L(m + n), Scalar(m - n)))
        if m + n == 0 and m * m * m - m:
            out.append((C(0), Scalar(mpq(m * m * m - m, 12))))
        return tuple(out)
    if ka == "I" and kb == "I":
        i, j, m, n = a.sup, b.sup, a.n, b.n
        if i + j == p and m + n + 1 == 0:
            coeff = mpq(m) + mpq(i, p)
            return ((C(i, p), Scalar(coeff)),)
        return ()
    if ka == "L":
        # [L_m, I_n^(i)] = -(n + i/p) I_{m+n}^(i)
        i, n = b.sup, b.n
        return ((I(i, a.n + n), Scalar(-(mpq(n) + mpq(i, p)))),)
    # [I_m^(i), L_n] = (m + i/p) I_{m+n}^(i)
    i, m = a.sup, a.n
    return ((I(i, m + b.n), Scalar(mpq(m) + mpq(i, p))),)


class LieElement:
    """A finite combination of basis symbols at a fixed gap parameter."""

    __slots__ = ("p", "terms", "_hash")

    def __init__(self, p, terms=None):
        check_p(p)
        self.p = p
        t = {}
        for s, c in (terms or {}).items():
            s = normalize_symbol(s, p)
            c = Scalar.coerce(c)
            prev = t.get(s)
            c = c if prev is None else prev + c
            if c:
                t[s] = c
            elif prev is not None:
                del t[s]
        self.terms = t
        self._hash = None

    @classmethod
    def _wrap(cls, p, terms):
        obj = object.__new__(cls)
        obj.p = p
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def of(cls, p, s, coeff=1):
        return cls(p, {s: coeff})

    @classmethod
    def zero(cls, p):
        return cls(p)

    def _same_p(self, other):
        if not isinstance(other, LieElement):
            raise TypeError(f"expected LieElement, got {type(other).__name__}")
        if other.p != self.p:
            raise ParameterError(f"gap parameters differ: {self.p} vs {other.p}")

    def __add__(self, other):
        self._same_p(other)
        t = dict(self.terms)
        for s, c in other.terms.items():
            v = t.get(s)
            v = c if v is None else v + c
            if v:
                t[s] = v
            else:
                t.pop(s, None)
        return LieElement._wrap(self.p, t)

    def __neg__(self):
        return LieElement._wrap(self.p, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        c = Scalar.coerce(scalar)
        if not c:
            return LieElement._wrap(self.p, {})
        return LieElement._wrap(self.p, {s: v * c for s, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, LieElement):
            return self.p == other.p and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.p, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        return [(s, self.terms[s]) for s in sorted(self.terms, key=sym_key)]

    def __iter__(self):
        return iter(self.items())

    def coeff(self, s):
        return self.terms.get(normalize_symbol(s, self.p), Scalar(0))

    def symbols(self):
        return [s for s, _ in self.items()]

    def __str__(self):
        return join_terms([format_term(c, str(s)) for s, c in self.items()])

    def __repr__(self):
        return f"LieElement(p={self.p}, {str(self)!r})"

    def to_json(self):
        return {"p": self.p, "terms": [{"sym": str(s), "coeff": str(c)} for s, c in self.items()]}

    @classmethod
    def from_json(cls, data):
        p = data["p"]
        terms = {}
        for t in data["terms"]:
            e = parse_element(t["sym"], p)
            if len(e.terms) != 1:
                raise ParseError(f"not a single symbol: {t['sym']!r}")
            (s, c), = e.terms.items()
            terms[s] = terms.get(s, Scalar(0)) + c * Scalar.parse(t["coeff"])
        return cls(p, terms)


def as_element(x, p):
    if isinstance(x, LieElement):
        if x.p != p:
            raise ParameterError(f"gap parameters differ: {x.p} vs {p}")
        return x
    if isinstance(x, Sym):
        return LieElement.of(p, x)
    if isinstance(x, str):
        return parse_element(x, p)
    raise TypeError(f"cannot interpret {x!r} as a Lie element")


def bracket(x, y):
    """Bilinear extension of the defining relations; the result is canonical."""
    if not isinstance(x, LieElement) or not isinstance(y, LieElement):
        raise TypeError("bracket expects two LieElement operands")
    if x.p != y.p:
        raise ParameterError(f"gap parameters differ: {x.p} vs {y.p}")
    p = x.p
    acc = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            pairs = bracket_basis(p, a, b)
            if not pairs:
                continue
            cab = ca * cb
            for s, c in pairs:
                v = acc.get(s)
                v = c * cab if v is None else v + c * cab
                if v:
                    acc[s] = v
                else:
                    del acc[s]
    return LieElement._wrap(p, acc)


def twisted_degree(s, p):
    """n + i/p for I_n^(i), n for L_n, 0 for C_j: a grading that every bracket respects."""
    if s.kind == "I":
        return mpq(s.n) + mpq(s.sup, p)
    return mpq(s.degree)


def graded_degree(x):
    """The Z-degree of a homogeneous element, or the string ``"mixed"``."""
    if not x:
        raise DegenerateInputError("the zero element has no degree")
    degrees = {s.degree for s in x.terms}
    if len(degrees) == 1:
        return degrees.pop()
    return "mixed"


# -- index sets and subalgebras ---------------------------------------------

def index_set(p, I):
    """Validate a symmetrical subset of {1..p-1} and return it as a frozenset."""
    check_p(p)
    s = frozenset(int(i) for i in I)
    for i in s:
        if not 1 <= i <= p - 1:
            raise ValidationError(f"index {i} outside 1..{p - 1}")
        if p - i not in s:
            raise ValidationError(f"index set {sorted(s)} is not symmetrical: {i} in I but {p - i} is not")
    return s


def full_index_set(p):
    return frozenset(range(1, p))


def complement(p, I):
    return full_index_set(p) - frozenset(I)


def half(p, I):
    """I_0 = I ∩ {1..p//2}: one representative per Heisenberg pair."""
    return frozenset(i for i in I if i <= p // 2)


@dataclass(frozen=True)
class SubalgebraSpec:
    """Names one of the graded subalgebras spanned by a subset of the basis.

    kinds: ``full``, ``g_I``, ``h_I``, ``gm`` (g^(m)), ``g_I_m`` (g_I ∩ g^(m)),
    ``g_I0`` (non-negative part of g_I), ``h_I_plus``, ``vir``.
    """

    kind: str
    I: frozenset = frozenset()
    m: int = 0

    def validate(self, p):
        if self.kind not in _SPEC_KINDS:
            raise ValidationError(f"unknown subalgebra kind {self.kind!r}")
        index_set(p, self.I)
        if self.kind in ("gm", "g_I_m") and self.m < 1:
            raise ValidationError("g^(m) needs m >= 1")
        return self

    def contains(self, s, p):
        k = self.kind
        if k == "full":
            return True
        if k == "vir":
            return s.kind == "L" or s == C(0)
        if k == "gm":
            if s.kind == "L":
                return s.n >= self.m
            if s.kind == "I":
                return s.n >= 0
            return True
        inI = (s.kind == "I" and s.sup in self.I) or (s.kind == "C" and s.sup in self.I)
        if k == "h_I":
            return inI
        if k == "h_I_plus":
            return inI and (s.kind == "C" or s.n >= 0)
        in_gI = s.kind == "L" or s == C(0) or inI
        if k == "g_I":
            return in_gI
        if k == "g_I0":
            return in_gI and (s.kind == "C" or s.n >= 0)
        if k == "g_I_m":
            if not in_gI:
                return False
            if s.kind == "L":
                return s.n >= self.m
            return s.kind == "C" or s.n >= 0
        raise ValidationError(f"unknown subalgebra kind {k!r}")

    def __str__(self):
        if self.kind in ("full", "vir"):
            return self.kind
        if self.kind == "gm":
            return f"g^({self.m})"
        return f"{self.kind}({sorted(self.I)}{', m=%d' % self.m if self.m else ''})"


_SPEC_KINDS = {"full", "g_I", "h_I", "gm", "g_I_m", "g_I0", "h_I_plus", "vir"}


def Full():
    return SubalgebraSpec("full")


def Vir():
    return SubalgebraSpec("vir")


def G_I(I):
    return SubalgebraSpec("g_I", frozenset(I))


def H_I(I):
    return SubalgebraSpec("h_I", frozenset(I))


def Gm(m):
    return SubalgebraSpec("gm", frozenset(), m)


def GIm(I, m):
    return SubalgebraSpec("g_I_m", frozenset(I), m)


def GI0(I):
    return SubalgebraSpec("g_I0", frozenset(I))


def HIplus(I):
    return SubalgebraSpec("h_I_plus", frozenset(I))


def is_member(x, spec):
    spec.validate(x.p)
    return all(spec.contains(s, x.p) for s in x.terms)


# -- inner automorphisms -------------------------------------------------------

def exp_ad(alpha, x):
    """exp(ad alpha)(x) for alpha supported on I- and C-symbols.

    For such alpha, ad(alpha) maps g -> h -> center -> 0, so the series stops
    after the quadratic term; the cubic term is computed and checked to vanish.
    """
    if alpha.p != x.p:
        raise ParameterError(f"gap parameters differ: {alpha.p} vs {x.p}")
    if any(s.kind == "L" for s in alpha.terms):
        raise UnsupportedError("exp(ad alpha) is only supported for alpha in the Heisenberg ideal plus center")
    first = bracket(alpha, x)
    second = bracket(alpha, first)
    if bracket(alpha, second):
        raise InvariantViolation("ad(alpha)^3 did not vanish")
    return x + first + second * Scalar(mpq(1, 2))


# -- enumeration helpers -------------------------------------------------------

def basis_symbols(p, nmax, nmin=None, kinds="LIC"):
    """All basis symbols with index in [nmin, nmax] (nmin defaults to -nmax)."""
    if nmin is None:
        nmin = -nmax
    out = []
    if "L" in kinds:
        out += [L(n) for n in range(nmin, nmax + 1)]
    if "I" in kinds:
        out += [I(i, n) for i in range(1, p) for n in range(nmin, nmax + 1)]
    if "C" in kinds:
        out += [C(j) for j in range(0, p // 2 + 1)]
    return out


# -- text ----------------------------------------------------------------------

def _lie_atom(p):
    def atom(name, args, bracket_kind, pos):
        if bracket_kind != "(" or args is None:
            raise ParseError(f"unknown symbol {name!r}", pos, "L(n), I(i,n) or C(j)")
        if any(a.denominator != 1 for a in args):
            raise ParseError(f"indices of {name} must be integers", pos)
        a = [int(x) for x in args]
        if name == "L" and len(a) == 1:
            return L(a[0])
        if name == "I" and len(a) == 2:
            if not 1 <= a[0] <= p - 1:
                raise ParseError(f"superscript {a[0]} out of range; must satisfy 1 <= i <= {p - 1}", pos)
            return I(a[0], a[1])
        if name == "C" and len(a) == 1:
            if not 0 <= a[0] <= p - 1:
                raise ParseError(f"central index {a[0]} out of range for p={p}", pos)
            return C(a[0], p)
        raise ParseError(f"bad symbol {name}{tuple(a)}", pos, "L(n), I(i,n) or C(j)")

    return atom


def parse_element(text, p):
    """Parse ``coeff*sym + ...`` into a canonical LieElement."""
    check_p(p)
    terms = {}
    for coeff, atoms in parse_terms(text, _lie_atom(p)):
        if not atoms and not coeff:
            continue
        if len(atoms) != 1 or atoms[0][1] != 1:
            raise ParseError(f"each term needs exactly one basis symbol: {text!r}")
        s = atoms[0][0]
        terms[s] = terms.get(s, Scalar(0)) + coeff
    return LieElement(p, terms)
