"""Common surface of the concrete module engines.

An engine knows how a basis symbol acts on a basis key of its vectors
(``_act_basis``); linear extension, caching and symbol routing live here.
"""

from .algebra import LieElement, Sym, as_element, normalize_symbol
from .errors import ParameterError
from .vectors import add_into


class Module:
    p = None
    vector_type = None

    def __init__(self):
        self._cache = {}

    def _act_basis(self, s, key):
        raise NotImplementedError

    def act_basis(self, s, key):
        """Action of one basis symbol on one basis key; do not mutate the result."""
        ck = (s, key)
        hit = self._cache.get(ck)
        if hit is None:
            hit = self._act_basis(s, key)
            self._cache[ck] = hit
        return hit

    def act_terms(self, x, terms):
        acc = {}
        for s, cx in _symbols(x, self.p):
            for key, cv in terms.items():
                add_into(acc, self.act_basis(s, key), cx * cv)
        return acc

    def act(self, x, v):
        """x . v for a LieElement, basis symbol or element text ``x``."""
        if not isinstance(v, self.vector_type):
            raise TypeError(f"{type(self).__name__} acts on {self.vector_type.__name__}, got {type(v).__name__}")
        return self.vector_type._wrap(self.act_terms(x, v.terms))

    def act_word(self, word, v):
        """Apply symbols right-to-left: ``act_word([a, b], v) = a.(b.v)``."""
        for s in reversed(word):
            v = self.act(s, v)
        return v

    def restriction_bound(self, v):
        """N such that every L_n and I_n^(i) with n >= N kills ``v``."""
        raise NotImplementedError(f"{type(self).__name__} is not a restricted module")


def _symbols(x, p):
    if isinstance(x, Sym):
        return [(normalize_symbol(x, p), 1)]
    if isinstance(x, LieElement):
        if x.p != p:
            raise ParameterError(f"gap parameters differ: {x.p} vs {p}")
        return list(x.terms.items())
    return list(as_element(x, p).terms.items())
