"""Sparse vectors over exact scalars: a finite map basis-key -> nonzero Scalar."""

from .scalar import Scalar


def add_into(acc, terms, scale=None):
    """``acc += scale * terms`` for plain dicts, dropping cancelled keys."""
    for k, c in terms.items():
        if scale is not None:
            c = c * scale
        v = acc.get(k)
        if v is None:
            if c:
                acc[k] = c
        else:
            v = v + c
            if v:
                acc[k] = v
            else:
                del acc[k]
    return acc


def clean(terms):
    return {k: c for k, c in terms.items() if c}


class SparseVector:
    """Immutable linear combination of hashable basis keys.

    Subclasses fix the key format and the text rendering; arithmetic is
    shared.  Two vectors compare equal iff their classes and term maps agree.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for k, c in terms.items():
                c = Scalar.coerce(c)
                if c:
                    t[k] = c
        self.terms = t
        self._hash = None

    @classmethod
    def _wrap(cls, terms):
        obj = object.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def basis(cls, key, coeff=1):
        return cls({key: coeff})

    @classmethod
    def zero(cls):
        return cls._wrap({})

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def __add__(self, other):
        self._check(other)
        return self._wrap(add_into(dict(self.terms), other.terms))

    def __sub__(self, other):
        self._check(other)
        return self._wrap(add_into(dict(self.terms), other.terms, Scalar(-1)))

    def __neg__(self):
        return self._wrap({k: -c for k, c in self.terms.items()})

    def __mul__(self, scalar):
        s = Scalar.coerce(scalar)
        if not s:
            return self._wrap({})
        return self._wrap({k: c * s for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if type(other) is not type(self):
            if other == 0 and not isinstance(other, SparseVector):
                return not self.terms
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.items())

    def coeff(self, key):
        return self.terms.get(key, Scalar(0))

    def keys(self):
        return sorted(self.terms, key=self.sort_key)

    def items(self):
        return [(k, self.terms[k]) for k in self.keys()]

    # subclasses override
    @staticmethod
    def sort_key(key):
        return key

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"
