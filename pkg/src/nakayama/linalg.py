"""Small exact linear algebra over the rationals.

Matrices are lists of rows of :class:`fractions.Fraction` (plain ints are
accepted on input).  Everything here is sized for the tiny per-vertex systems
that come up when working with representations of a linear quiver, so the
routines favour clarity over asymptotics.
"""
from fractions import Fraction


def zeros(rows, cols):
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def matmul(a, b, inner=None):
    if inner is None:
        inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [Fraction(0)] * cols
        for k in range(inner):
            x = row[k]
            if x:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        acc[j] += x * bk[j]
        out.append(acc)
    return out


def transpose(a, cols=None):
    if cols is None:
        cols = len(a[0]) if a else 0
    return [[a[i][j] for i in range(len(a))] for j in range(cols)]


def rref(a, cols=None):
    """Reduced row echelon form.  Returns ``(rows, pivot_columns)``.

    Zero rows are dropped from the result.
    """
    m = [[Fraction(x) for x in row] for row in a]
    if cols is None:
        cols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = None
        for i in range(r, len(m)):
            if m[i][c]:
                p = i
                break
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        pr = [x * inv for x in m[r]]
        m[r] = pr
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                mi = m[i]
                for j in range(c, cols):
                    if pr[j]:
                        mi[j] -= f * pr[j]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(a, cols=None):
    if not a:
        return 0
    return len(rref(a, cols)[1])


def nullspace(a, cols):
    """Basis (list of vectors) of ``{x : a x = 0}`` for an ``r x cols`` matrix."""
    if cols == 0:
        return []
    if not a:
        return [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
    rows, pivots = rref(a, cols)
    pivset = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivset:
            continue
        v = [Fraction(0)] * cols
        v[free] = Fraction(1)
        for row, pc in zip(rows, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


def solve(a, b, cols):
    """One solution ``x`` of ``a x = b`` or ``None`` when inconsistent."""
    aug = [list(row) + [Fraction(bi)] for row, bi in zip(a, b)]
    rows, pivots = rref(aug, cols + 1)
    if pivots and pivots[-1] == cols:
        return None
    x = [Fraction(0)] * cols
    for row, pc in zip(rows, pivots):
        x[pc] = row[cols]
    return x


def inverse(a):
    n = len(a)
    aug = [list(a[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    rows, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in rows[:n]]


def determinant(a):
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                for j in range(c, n):
                    m[i][j] -= f * m[c][j]
    return det


class EchelonSpan:
    """Incrementally grown subspace of ``Q^dim`` with membership tests."""

    def __init__(self, dim):
        self.dim = dim
        self._rows = []   # (pivot, normalized row)

    def __len__(self):
        return len(self._rows)

    def _reduce(self, v):
        v = [Fraction(x) for x in v]
        for pc, row in self._rows:
            f = v[pc]
            if f:
                for j in range(self.dim):
                    if row[j]:
                        v[j] -= f * row[j]
        return v

    def add(self, v):
        """Add ``v``; return True when it enlarged the span."""
        v = self._reduce(v)
        pc = next((j for j, x in enumerate(v) if x), None)
        if pc is None:
            return False
        inv = 1 / v[pc]
        v = [x * inv for x in v]
        for k, (qc, row) in enumerate(self._rows):
            f = row[pc]
            if f:
                self._rows[k] = (qc, [row[j] - f * v[j] for j in range(self.dim)])
        self._rows.append((pc, v))
        return True

    def contains(self, v):
        return not any(self._reduce(v))
