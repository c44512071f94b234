"""Universal Whittaker modules in PBW normal form.

A basis vector is a word y_1 y_2 ... y_k v_phi in the generators of a
complement of the Whittaker subalgebra, sorted by ``letter_key``: I-letters
before L-letters, each family by decreasing index, then by superscript.
Left multiplication by a basis symbol x is computed recursively:

    x . (y w) = y . (x . w) + [x, y] . w          (x out of order with y)
    x . v_phi = phi(x) v_phi                        (x in the subalgebra)
"""

import sys

from .algebra import C, I, L, Sym, bracket_basis, half
from .errors import ParameterError, ParseError
from .module import Module
from .parsing import format_term, join_terms, parse_terms
from .scalar import ONE, ZERO, Scalar
from .vectors import SparseVector, add_into
from .whitfun import HeisenbergWhittakerData, WhittakerFunction

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


def letter_key(s):
    if s.kind == "I":
        return (0, -s.n, s.sup)
    return (1, -s.n, 0)


def _render_word(word):
    out = []
    k = 0
    while k < len(word):
        j = k
        while j < len(word) and word[j] == word[k]:
            j += 1
        e = j - k
        out.append(str(word[k]) + (f"^{e}" if e > 1 else ""))
        k = j
    return "*".join(out + ["v"])


class PBWVector(SparseVector):
    __slots__ = ()

    @staticmethod
    def sort_key(word):
        return (len(word), tuple(letter_key(s) for s in word))

    @classmethod
    def vac(cls):
        return cls._wrap({(): ONE})

    def __str__(self):
        return join_terms([format_term(c, _render_word(w)) for w, c in self.items()])

    def to_json(self):
        return [{"word": [str(s) for s in w], "coeff": str(c)} for w, c in self.items()]


class HeisenbergPhi:
    """Adapter presenting phi on h_I^+ with the WhittakerFunction interface."""

    has_L = False

    def __init__(self, data):
        self.data = data
        self.p, self.m, self.I = data.p, data.m, data.I

    def contains(self, s):
        if s.kind == "I":
            return s.sup in self.I and s.n >= 0
        return s.kind == "C" and s.sup != 0 and s.sup in self.I

    def in_ambient(self, s):
        return (s.kind == "I" and s.sup in self.I) or self.contains(s)

    def __call__(self, s):
        if s.kind == "I":
            return self.data.phi(s.sup, s.n)
        return self.data.level[s.sup]

    def generators(self, nmax):
        return [I(i, n) for i in sorted(self.I) for n in range(nmax + 1)] + [C(j) for j in sorted(half(self.p, self.I))]


def _in_ambient(phi, s):
    if isinstance(phi, HeisenbergPhi):
        return phi.in_ambient(s)
    if s.kind == "L":
        return True
    if s.kind == "I":
        return s.sup in phi.I
    return s.sup == 0 or s.sup in phi.I


class PBWModule(Module):
    """U(ambient) (x)_{U(subalgebra)} C v_phi."""

    vector_type = PBWVector

    def __init__(self, phi):
        super().__init__()
        if isinstance(phi, HeisenbergWhittakerData):
            phi = HeisenbergPhi(phi)
        if not isinstance(phi, (WhittakerFunction, HeisenbergPhi)):
            raise TypeError("PBWModule expects a WhittakerFunction or HeisenbergWhittakerData")
        self.phi = phi
        self.p, self.m, self.I = phi.p, phi.m, phi.I
        self._mul = {}

    @property
    def vacuum(self):
        return PBWVector.vac()

    def vector(self, word, coeff=1):
        return self.act_word(list(word), self.vacuum) * coeff

    def is_complement(self, s):
        if not _in_ambient(self.phi, s):
            raise ParameterError(f"{s} is outside the ambient algebra of this module")
        return not self.phi.contains(s)

    def _act_basis(self, s, word):
        return self.mul(s, word)

    def mul(self, x, word):
        key = (x, word)
        hit = self._mul.get(key)
        if hit is not None:
            return hit
        out = self._mul_uncached(x, word)
        self._mul[key] = out
        return out

    def _mul_uncached(self, x, word):
        comp = self.is_complement(x)
        if not comp and x.kind == "C":
            c = self.phi(x)
            return {word: c} if c else {}
        if not word:
            if comp:
                return {(x,): ONE}
            c = self.phi(x)
            return {(): c} if c else {}
        y = word[0]
        if comp and letter_key(x) <= letter_key(y):
            return {(x,) + word: ONE}
        rest = word[1:]
        acc = {}
        for w, c in self.mul(x, rest).items():
            add_into(acc, self.mul(y, w), c)
        for s, c in bracket_basis(self.p, x, y):
            add_into(acc, self.mul(s, rest), c)
        return acc

    def weight(self, word):
        m = self.m
        return sum((m - s.n) if s.kind == "L" else -s.n for s in word)

    def restriction_bound(self, v):
        """Every L_n, I_n^(i) with n >= N kills v."""
        if not v:
            return 0
        worst = max((sum(-s.n for s in w if s.n < 0) for w in v.terms), default=0)
        return 2 * self.m + 1 + worst

    def parse(self, text):
        """Parse ``coeff*X*Y*...*v + ...``; each product acts on v_phi right to left."""
        p = self.p

        def atom(name, args, bracket, pos):
            if name == "v" and args is None:
                return "v"
            from .algebra import _lie_atom

            return _lie_atom(p)(name, args, bracket, pos)

        acc = {}
        for c, atoms in parse_terms(text, atom):
            if not atoms and not c:
                continue  # the zero vector prints as "0"
            word = []
            for a, k in atoms:
                word += [a] * k
            if word.count("v") != 1 or word[-1] != "v":
                raise ParseError(f"each term must end in exactly one 'v': {text!r}")
            add_into(acc, self.vector(word[:-1]).terms, c)
        return PBWVector._wrap(acc)

    def words_up_to_weight(self, wmax, kinds="LI"):
        """All PBW words of weight <= wmax (complement letters only)."""
        letters = []
        for wt in range(1, wmax + 1):
            if "L" in kinds and (self.phi.has_L if isinstance(self.phi, HeisenbergPhi) else True):
                letters.append(L(self.m - wt))
            if "I" in kinds:
                letters += [I(i, -wt) for i in sorted(self.I)]
        letters.sort(key=letter_key)
        out = []

        def rec(start, word, wt):
            out.append(tuple(word))
            for k in range(start, len(letters)):
                s = letters[k]
                w = self.weight((s,))
                if wt + w <= wmax:
                    word.append(s)
                    rec(k, word, wt + w)
                    word.pop()

        rec(0, [], 0)
        return out
