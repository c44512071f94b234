"""Whittaker functions: the finite data of a homomorphism g^(m) -> scalars.

A Whittaker function on g^(m) (or on g_I^(m), or on the Virasoro part) is
fixed by phi(L_n) for m <= n <= 2m, phi(I_n^(i)) for 0 <= n <= m-1 and the
central values; every other generator of g^(m) is a bracket and maps to 0.
"""

import json
from dataclasses import dataclass
from types import MappingProxyType

from .algebra import C, G_I, I, L, Full, Sym, Vir, check_p, full_index_set, half, index_set
from .errors import ParameterError, PreconditionError, ValidationError
from .scalar import ZERO, Scalar


def _freeze(d):
    return MappingProxyType(dict(d))


class WhittakerFunction:
    """phi on g^(m) cap (ambient).  ``ambient`` is Full(), G_I(I) or Vir()."""

    def __init__(self, p, m, lvals=None, ivals=None, cvals=None, ambient=None, strict=True):
        self.p = check_p(p)
        if not isinstance(m, int) or m < 1:
            raise ValidationError(f"m must be a positive integer, got {m!r}")
        self.m = m
        ambient = Full() if ambient is None else ambient
        if ambient.kind not in ("full", "g_I", "vir"):
            raise ValidationError(f"unsupported ambient {ambient}")
        ambient.validate(p)
        self.ambient = ambient
        if ambient.kind == "full":
            self.I = full_index_set(p)
        elif ambient.kind == "g_I":
            self.I = index_set(p, ambient.I)
        else:
            self.I = frozenset()
        lv, iv, cv = {}, {}, {}
        for n, v in (lvals or {}).items():
            v = Scalar.coerce(v)
            if n < m:
                raise ValidationError(f"L({n}) is not in g^({m})")
            if v:
                lv[int(n)] = v
        for (i, n), v in (ivals or {}).items():
            v = Scalar.coerce(v)
            if i not in self.I:
                raise ValidationError(f"superscript {i} is outside the ambient index set {sorted(self.I)}")
            if n < 0:
                raise ValidationError(f"I({i},{n}) is not in g^({m})")
            if v:
                iv[(int(i), int(n))] = v
        for j, v in (cvals or {}).items():
            v = Scalar.coerce(v)
            j = C(int(j), p).sup
            if j != 0 and j not in self.I:
                if v:
                    raise ValidationError(f"C({j}) is outside the ambient")
                continue
            if j in cv and cv[j] != v:
                raise ValidationError(f"conflicting values for C({j}) = C({p - j})")
            if v:
                cv[j] = v
        self.lvals, self.ivals, self.cvals = _freeze(lv), _freeze(iv), _freeze(cv)
        if strict:
            bad = self.window_violations()
            if bad:
                raise ValidationError("values outside the Whittaker windows: " + ", ".join(bad))

    def window_violations(self):
        m = self.m
        out = [f"L({n})" for n in sorted(self.lvals) if n > 2 * m]
        out += [f"I({i},{n})" for (i, n) in sorted(self.ivals) if n >= m]
        return out

    @classmethod
    def candidate(cls, *args, **kw):
        """Build without enforcing the vanishing windows (for validation)."""
        kw["strict"] = False
        return cls(*args, **kw)

    # -- evaluation ---------------------------------------------------------
    def contains(self, s):
        """Is the basis symbol s a generator of the Whittaker subalgebra?"""
        if s.kind == "L":
            return s.n >= self.m
        if s.kind == "I":
            return s.sup in self.I and s.n >= 0
        return s.sup == 0 or s.sup in self.I

    def __call__(self, x):
        if isinstance(x, Sym):
            return self._value(x)
        acc = ZERO
        for s, c in x.terms.items():
            acc = acc + c * self._value(s)
        return acc

    def _value(self, s):
        if not self.contains(s):
            raise ParameterError(f"{s} is not in the domain of phi")
        if s.kind == "L":
            return self.lvals.get(s.n, ZERO)
        if s.kind == "I":
            return self.ivals.get((s.sup, s.n), ZERO)
        return self.cvals.get(s.sup, ZERO)

    def L(self, n):
        return self.lvals.get(n, ZERO)

    def Iv(self, i, n):
        return self.ivals.get((i, n), ZERO)

    def Cv(self, j):
        return self.cvals.get(C(j, self.p).sup, ZERO)

    @property
    def J(self):
        """{i in I : phi(C_i) != 0}."""
        return frozenset(i for i in self.I if self.Cv(i))

    @property
    def zero_level(self):
        return not self.J

    def generators(self, nmax):
        """Generators of the Whittaker subalgebra with index <= nmax."""
        out = [L(n) for n in range(self.m, nmax + 1)]
        out += [I(i, n) for i in sorted(self.I) for n in range(0, nmax + 1)]
        out += [C(0)] + [C(j) for j in sorted(half(self.p, self.I))]
        return out

    def replace(self, lvals=None, ivals=None, cvals=None):
        return WhittakerFunction(self.p, self.m,
                                 dict(self.lvals) if lvals is None else lvals,
                                 dict(self.ivals) if ivals is None else ivals,
                                 dict(self.cvals) if cvals is None else cvals,
                                 self.ambient)

    # -- comparison and text --------------------------------------------------
    def _key(self):
        return (self.p, self.m, self.ambient, tuple(sorted(self.lvals.items())),
                tuple(sorted(self.ivals.items())), tuple(sorted(self.cvals.items())))

    def __eq__(self, other):
        return isinstance(other, WhittakerFunction) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"WhittakerFunction({json.dumps(self.to_json(), sort_keys=True)})"

    def to_json(self):
        m = self.m
        out = {"p": self.p, "m": m, "ambient": {"full": "full", "g_I": "g_I", "vir": "vir"}[self.ambient.kind]}
        if self.ambient.kind == "g_I":
            out["index_set"] = sorted(self.I)
        out["L"] = {str(n): str(self.L(n)) for n in range(m, 2 * m + 1)}
        if self.I:
            out["I"] = {str(i): {str(n): str(self.Iv(i, n)) for n in range(m)} for i in sorted(self.I)}
        cs = [0] + sorted(half(self.p, self.I))
        out["C"] = {str(j): str(self.Cv(j)) for j in cs}
        return out

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        try:
            p, m = data["p"], data["m"]
        except KeyError as e:
            raise ValidationError(f"Whittaker function JSON lacks {e.args[0]!r}") from None
        kind = data.get("ambient", "full")
        if kind == "full":
            ambient = Full()
        elif kind == "vir":
            ambient = Vir()
        elif kind == "g_I":
            if "index_set" not in data:
                raise ValidationError("ambient g_I needs an 'index_set'")
            ambient = G_I(data["index_set"])
        else:
            raise ValidationError(f"unknown ambient {kind!r}")
        lv = {int(n): Scalar.parse(v) for n, v in data.get("L", {}).items()}
        iv = {(int(i), int(n)): Scalar.parse(v)
              for i, row in data.get("I", {}).items() for n, v in row.items()}
        cv = {int(j): Scalar.parse(v) for j, v in data.get("C", {}).items()}
        return cls(p, m, lv, iv, cv, ambient)


@dataclass(frozen=True)
class HeisenbergWhittakerData:
    """phi on h_I^+: levels l_i = phi(C_i) and phi(I_n^(i)) for 0 <= n <= m-1."""

    p: int
    I: frozenset
    m: int
    level: MappingProxyType
    ivals: MappingProxyType

    def __init__(self, p, I, m, level, ivals=None):
        check_p(p)
        I = index_set(p, I)
        if not isinstance(m, int) or m < 1:
            raise ValidationError(f"m must be a positive integer, got {m!r}")
        lv = {}
        for i in I:
            a = Scalar.coerce(level.get(i, level.get(p - i, 0)))
            b = Scalar.coerce(level.get(p - i, a))
            if a != b:
                raise ValidationError(f"level is not symmetrical: l_{i} = {a} but l_{p - i} = {b}")
            lv[i] = a
        extra = set(level) - set(I)
        if extra:
            raise ValidationError(f"levels given for indices {sorted(extra)} outside I")
        iv = {}
        for (i, n), v in (ivals or {}).items():
            if i not in I:
                raise ValidationError(f"superscript {i} outside I = {sorted(I)}")
            if not 0 <= n:
                raise ValidationError(f"I({i},{n}) is not in h_I^+")
            v = Scalar.coerce(v)
            if n >= m and v:
                raise ValidationError(f"phi(I({i},{n})) must vanish for n >= m = {m}")
            if v:
                iv[(i, n)] = v
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "I", I)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "level", _freeze(lv))
        object.__setattr__(self, "ivals", _freeze(iv))

    def phi(self, i, n):
        return self.ivals.get((i, n), ZERO)

    @property
    def generic(self):
        return all(self.level[i] for i in self.I)

    def require_generic(self):
        zero = sorted(i for i in self.I if not self.level[i])
        if zero:
            raise PreconditionError(f"level is not generic: l_i = 0 for i in {zero}")

    @classmethod
    def restrict(cls, W, J=None):
        """phi restricted to h_J^+ (J defaults to the index set of W)."""
        J = W.I if J is None else frozenset(J)
        level = {i: W.Cv(i) for i in J}
        ivals = {(i, n): W.Iv(i, n) for i in J for n in range(W.m)}
        return cls(W.p, J, W.m, level, ivals)

    def to_json(self):
        return {"p": self.p, "I": sorted(self.I), "m": self.m,
                "level": {str(i): str(self.level[i]) for i in sorted(self.I)},
                "phi": {str(i): {str(n): str(self.phi(i, n)) for n in range(self.m)} for i in sorted(self.I)}}
