"""Small dense exact linear algebra over Scalar."""

from .errors import DegenerateInputError
from .scalar import ONE, ZERO, Scalar


def _row_reduce(rows, ncols):
    """In-place reduced row echelon form; returns the pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((k for k in range(r, len(rows)) if rows[k][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c]:
                f = rows[k][c]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def solve(A, b):
    """The unique x with A x = b for square nonsingular A."""
    n = len(A)
    if any(len(row) != n for row in A) or len(b) != n:
        raise ValueError("solve expects a square system")
    rows = [[Scalar.coerce(x) for x in row] + [Scalar.coerce(bi)] for row, bi in zip(A, b)]
    pivots = _row_reduce(rows, n)
    if len(pivots) < n:
        raise DegenerateInputError("singular linear system")
    return [rows[k][n] for k in range(n)]


def rank(A):
    if not A:
        return 0
    rows = [[Scalar.coerce(x) for x in row] for row in A]
    return len(_row_reduce(rows, len(rows[0])))


def vandermonde(nodes, ncols=None):
    """Rows (1, x, x^2, ...) for each node."""
    ncols = len(nodes) if ncols is None else ncols
    out = []
    for x in nodes:
        x = Scalar.coerce(x)
        row, acc = [], ONE
        for _ in range(ncols):
            row.append(acc)
            acc = acc * x
        out.append(row)
    return out


def matvec(A, x):
    out = []
    for row in A:
        acc = ZERO
        for a, b in zip(row, x):
            acc = acc + a * b
        out.append(acc)
    return out


class SpanTracker:
    """Incrementally maintained echelon basis of a span of sparse vectors.

    Vectors are term dicts {key: Scalar}; ``add`` returns True when the vector
    was new (not already in the span).
    """

    def __init__(self):
        self.basis = {}  # pivot key -> reduced vector with coefficient 1 at pivot

    def reduce(self, terms):
        v = dict(terms)
        changed = True
        while changed:
            changed = False
            for pk in [k for k in v if k in self.basis]:
                c = v.get(pk)
                if not c:
                    continue
                for k, bc in self.basis[pk].items():
                    nv = v.get(k, ZERO) - c * bc
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
                changed = True
        return v

    def add(self, terms):
        v = self.reduce(terms)
        if not v:
            return False
        pk = min(v, key=repr)
        inv = v[pk].inverse()
        v = {k: c * inv for k, c in v.items()}
        # keep the basis fully reduced with respect to the new pivot
        for other_pk, w in self.basis.items():
            c = w.get(pk)
            if c:
                for k, vc in v.items():
                    nv = w.get(k, ZERO) - c * vc
                    if nv:
                        w[k] = nv
                    else:
                        w.pop(k, None)
        self.basis[pk] = v
        return True

    def contains(self, terms):
        return not self.reduce(terms)

    def __len__(self):
        return len(self.basis)
