"""Bounded complexes of interval modules with scalar differentials.

Every indecomposable module over a linear Nakayama algebra is an interval
module ``M[u, v]`` (top ``S_u``, socle ``S_v``).  Between two intervals there
is at most one canonical map up to scalar, and it exists iff
``u' <= u <= v' <= v``.  Composites of canonical maps are canonical or zero,
and a composite ``M[u,v] -> M[u',v'] -> M[u'',v'']`` is nonzero exactly when
``Hom(M[u,v], M[u'',v''])`` is nonzero.  So a map between direct sums is a
plain scalar matrix, and composition is a matrix product with the entries
that fall outside the Hom support cleared ("masked product").

Degrees are cohomological (differentials raise degree) and shifts follow
``X[k]^d = X^(d+k)``.  Inside a degree, terms are ordered by descending
index.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from . import linalg
from .algebra import NakayamaAlgebra
from .errors import NotAChainMap, NotAComplex, VertexOutOfRange

Matrix = tuple[tuple[Fraction, ...], ...]

ONE = Fraction(1)
ZERO = Fraction(0)


class IntervalModule(NamedTuple):
    top: int
    socle: int

    def __str__(self):
        return f"M[{self.top},{self.socle}]"

    def contains(self, j):
        return self.top <= j <= self.socle


def interval_hom(src: Sequence[int], tgt: Sequence[int]) -> bool:
    """Whether the canonical map ``M[src] -> M[tgt]`` exists."""
    return tgt[0] <= src[0] <= tgt[1] <= src[1]


def interval_module(algebra: NakayamaAlgebra, u: int, v: int) -> IntervalModule:
    if not (1 <= u <= v <= algebra.ends[u]):
        raise VertexOutOfRange(f"M[{u},{v}] is not a module over {algebra}")
    return IntervalModule(u, v)


def projective_module(algebra: NakayamaAlgebra, i: int) -> IntervalModule:
    return IntervalModule(i, algebra.ends[i])


def simple_module(algebra: NakayamaAlgebra, i: int) -> IntervalModule:
    return interval_module(algebra, i, i)


def injective_module(algebra: NakayamaAlgebra, v: int) -> IntervalModule:
    return IntervalModule(algebra.injective_tops[v], v)


# -- matrices -------------------------------------------------------------------

def _freeze(m, rows, cols) -> Matrix:
    if rows == 0 or cols == 0:
        return tuple(() for _ in range(rows))
    return tuple(tuple(Fraction(x) for x in row) for row in m)


def zero_matrix(rows, cols) -> Matrix:
    return tuple(tuple(ZERO for _ in range(cols)) for _ in range(rows))


def masked_product(left, right, src, tgt, mid_len) -> list[list[Fraction]]:
    """``left @ right`` keeping only entries supported by ``Hom(src[x], tgt[y])``.

    ``right`` maps ``src -> mid`` and ``left`` maps ``mid -> tgt``; ``src`` and
    ``tgt`` are interval lists.
    """
    out = [[ZERO] * len(src) for _ in range(len(tgt))]
    for y, ty in enumerate(tgt):
        row = left[y]
        for x, sx in enumerate(src):
            if not interval_hom(sx, ty):
                continue
            acc = ZERO
            for m in range(mid_len):
                a = row[m]
                if a:
                    b = right[m][x]
                    if b:
                        acc += a * b
            out[y][x] = acc
    return out


def vertex_block(mat, src, tgt, j):
    """The linear map at vertex ``j`` induced by a scalar matrix between interval sums."""
    cols = [x for x, s in enumerate(src) if s[0] <= j <= s[1]]
    rows = [y for y, t in enumerate(tgt) if t[0] <= j <= t[1]]
    return [[mat[y][x] for x in cols] for y in rows], rows, cols


# -- complexes --------------------------------------------------------------------

class _IntervalComplex:
    """Shared behaviour of complexes whose terms are sums of interval modules."""

    algebra: NakayamaAlgebra
    lo: int
    terms: tuple
    diffs: tuple

    @property
    def hi(self) -> int:
        return self.lo + len(self.terms) - 1

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self):
        return range(self.lo, self.hi + 1)

    def term(self, d):
        k = d - self.lo
        if 0 <= k < len(self.terms):
            return self.terms[k]
        return ()

    def diff(self, d) -> Matrix:
        """Differential from degree ``d`` to ``d + 1``."""
        k = d - self.lo
        if 0 <= k < len(self.diffs):
            return self.diffs[k]
        return zero_matrix(len(self.term(d + 1)), len(self.term(d)))

    def intervals(self, d):
        raise NotImplementedError

    def _check(self):
        for k, d in enumerate(self.diffs):
            src = self.intervals(self.lo + k)
            tgt = self.intervals(self.lo + k + 1)
            if len(d) != len(tgt) or any(len(row) != len(src) for row in d):
                raise NotAComplex(f"differential {self.lo + k} has the wrong shape")
            for y, row in enumerate(d):
                for x, a in enumerate(row):
                    if a and not interval_hom(src[x], tgt[y]):
                        raise NotAComplex(
                            f"degree {self.lo + k}: no map {src[x]} -> {tgt[y]} to carry {a}")
        for k in range(len(self.diffs) - 1):
            d0, d1 = self.diffs[k], self.diffs[k + 1]
            src = self.intervals(self.lo + k)
            tgt = self.intervals(self.lo + k + 2)
            sq = masked_product(d1, d0, src, tgt, len(self.terms[k + 1]))
            if any(any(row) for row in sq):
                raise NotAComplex(f"d^2 != 0 at degree {self.lo + k}")

    def term_multiset(self):
        """Hashable summary: sorted ``(degree, term)`` pairs."""
        return tuple(sorted((d, t) for d in self.degrees() for t in self.term(d)))

    def __str__(self):
        return render(self)


def _normalise(lo, terms, diffs, key):
    """Trim empty boundary degrees and sort each degree by descending key."""
    terms = [list(t) for t in terms]
    diffs = [[list(r) for r in m] for m in diffs]
    # sort within degrees, permuting rows/cols
    perms = []
    for t in terms:
        order = sorted(range(len(t)), key=lambda p: key(t[p]), reverse=True)
        perms.append(order)
    terms = [[t[p] for p in order] for t, order in zip(terms, perms)]
    diffs = [[[m[r][c] for c in perms[k]] for r in perms[k + 1]] for k, m in enumerate(diffs)]
    while terms and not terms[0]:
        terms.pop(0)
        if diffs:
            diffs.pop(0)
        lo += 1
    while terms and not terms[-1]:
        terms.pop()
        if diffs:
            diffs.pop()
    if not terms:
        return 0, (), ()
    diffs = diffs[:len(terms) - 1]
    return (lo, tuple(tuple(t) for t in terms),
            tuple(_freeze(m, len(terms[k + 1]), len(terms[k])) for k, m in enumerate(diffs)))


@dataclass(frozen=True, eq=True)
class PerfectComplex(_IntervalComplex):
    """Bounded complex of indecomposable projectives ``P_a`` (stored as ``a``).

    ``diffs[k][b][a]`` scales the canonical map from the ``a``-th term in
    degree ``lo + k`` to the ``b``-th term in degree ``lo + k + 1``.
    """

    algebra: NakayamaAlgebra
    lo: int = 0
    terms: tuple[tuple[int, ...], ...] = ()
    diffs: tuple[Matrix, ...] = ()
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        n = self.algebra.n
        for t in self.terms:
            for a in t:
                if not 1 <= a <= n:
                    raise VertexOutOfRange(f"P_{a} does not exist over {n} vertices")
        if len(self.diffs) not in (max(len(self.terms) - 1, 0),):
            raise NotAComplex("need one differential between each pair of adjacent degrees")
        lo, terms, diffs = _normalise(self.lo, self.terms, self.diffs, key=lambda a: a)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "diffs", diffs)
        if self.check:
            self._check()

    def intervals(self, d):
        ends = self.algebra.ends
        return [(a, ends[a]) for a in self.term(d)]

    def k_class(self) -> tuple[int, ...]:
        """Alternating count of each ``P_a`` over degrees."""
        x = [0] * self.algebra.n
        for d in self.degrees():
            sign = -1 if d % 2 else 1
            for a in self.term(d):
                x[a - 1] += sign
        return tuple(x)

    def is_minimal(self) -> bool:
        for k, m in enumerate(self.diffs):
            src, tgt = self.terms[k], self.terms[k + 1]
            for y, row in enumerate(m):
                for x, a in enumerate(row):
                    if a and src[x] == tgt[y]:
                        return False
        return True


@dataclass(frozen=True, eq=True)
class ModuleComplex(_IntervalComplex):
    """Bounded complex of interval modules with scalar differentials."""

    algebra: NakayamaAlgebra
    lo: int = 0
    terms: tuple[tuple[IntervalModule, ...], ...] = ()
    diffs: tuple[Matrix, ...] = ()
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        terms = tuple(tuple(IntervalModule(*m) for m in t) for t in self.terms)
        for t in terms:
            for m in t:
                interval_module(self.algebra, *m)
        if len(self.diffs) != max(len(terms) - 1, 0):
            raise NotAComplex("need one differential between each pair of adjacent degrees")
        lo, terms, diffs = _normalise(self.lo, terms, self.diffs, key=lambda m: (m.top, m.socle))
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "diffs", diffs)
        if self.check:
            self._check()

    def intervals(self, d):
        return list(self.term(d))


def zero_complex(algebra: NakayamaAlgebra) -> PerfectComplex:
    return PerfectComplex(algebra)


def stalk(algebra: NakayamaAlgebra, i: int, d: int = 0) -> PerfectComplex:
    """``P_i`` concentrated in degree ``d``."""
    if not 1 <= i <= algebra.n:
        raise VertexOutOfRange(f"P_{i} does not exist over {algebra.n} vertices")
    return PerfectComplex(algebra, d, ((i,),), ())


def module_stalk(algebra: NakayamaAlgebra, module, d: int = 0) -> ModuleComplex:
    return ModuleComplex(algebra, d, ((IntervalModule(*module),),), ())


def perfect_from_strands(algebra, lo, degree_terms, edges=None) -> PerfectComplex:
    """Build a complex from term lists, with unit scalars on every allowed entry
    listed in ``edges`` (``{(degree, src_pos, tgt_pos), ...}``); ``None`` puts a
    unit on every entry supported by a nonzero Hom."""
    diffs = []
    for k in range(len(degree_terms) - 1):
        src, tgt = degree_terms[k], degree_terms[k + 1]
        m = [[ZERO] * len(src) for _ in tgt]
        for x, a in enumerate(src):
            for y, b in enumerate(tgt):
                if algebra.hom_nonzero(a, b) and (edges is None or (lo + k, x, y) in edges):
                    m[y][x] = ONE
        diffs.append(m)
    return PerfectComplex(algebra, lo, tuple(tuple(t) for t in degree_terms), tuple(diffs))


def shift(x, k: int):
    """``X[k]``: degree ``d`` moves to ``d - k``; differentials pick up ``(-1)^k``."""
    if k % 2:
        diffs = tuple(tuple(tuple(-a for a in row) for row in m) for m in x.diffs)
    else:
        diffs = x.diffs
    return type(x)(x.algebra, x.lo - k, x.terms, diffs, check=False)


# -- chain maps and cones -----------------------------------------------------------

@dataclass(frozen=True)
class ChainMap:
    """Degreewise scalar matrices ``maps[d]`` from ``source^d`` to ``target^d``."""

    source: PerfectComplex
    target: PerfectComplex
    maps: dict

    def component(self, d):
        m = self.maps.get(d)
        if m is None:
            return zero_matrix(len(self.target.term(d)), len(self.source.term(d)))
        return m

    def check(self):
        x, y = self.source, self.target
        lo = min(x.lo, y.lo) if not (x.is_zero() or y.is_zero()) else (x.lo if y.is_zero() else y.lo)
        hi = max(x.hi, y.hi)
        for d, m in self.maps.items():
            src, tgt = x.intervals(d), y.intervals(d)
            if len(m) != len(tgt) or any(len(r) != len(src) for r in m):
                raise NotAChainMap(f"component {d} has the wrong shape")
            for b, row in enumerate(m):
                for a, s in enumerate(row):
                    if s and not interval_hom(src[a], tgt[b]):
                        raise NotAChainMap(f"component {d}: no map {src[a]} -> {tgt[b]}")
        for d in range(lo - 1, hi + 1):
            src, tgt = x.intervals(d), y.intervals(d + 1)
            left = masked_product(y.diff(d), self.component(d), src, tgt, len(y.term(d)))
            right = masked_product(self.component(d + 1), x.diff(d), src, tgt, len(x.term(d + 1)))
            for r1, r2 in zip(left, right):
                if any(p != q for p, q in zip(r1, r2)):
                    raise NotAChainMap(f"square at degree {d} does not commute")
        return self


def mapping_cone(f: ChainMap) -> PerfectComplex:
    """``cone(f)^d = X^(d+1) + Y^d`` with differential ``[[-d_X, 0], [f, d_Y]]``."""
    f.check()
    x, y = f.source, f.target
    if x.is_zero() and y.is_zero():
        return zero_complex(x.algebra)
    lows = [d for d in (x.lo - 1 if not x.is_zero() else None, y.lo if not y.is_zero() else None)
            if d is not None]
    highs = [d for d in (x.hi - 1 if not x.is_zero() else None, y.hi if not y.is_zero() else None)
             if d is not None]
    lo, hi = min(lows), max(highs)
    terms, diffs = [], []
    for d in range(lo, hi + 1):
        terms.append(tuple(x.term(d + 1)) + tuple(y.term(d)))
    for d in range(lo, hi):
        xs, ys = len(x.term(d + 1)), len(y.term(d))
        xt, yt = len(x.term(d + 2)), len(y.term(d + 1))
        dx, dy, fd = x.diff(d + 1), y.diff(d), f.component(d + 1)
        m = [[ZERO] * (xs + ys) for _ in range(xt + yt)]
        for r in range(xt):
            for c in range(xs):
                m[r][c] = -dx[r][c]
        for r in range(yt):
            for c in range(xs):
                m[xt + r][c] = fd[r][c]
            for c in range(ys):
                m[xt + r][xs + c] = dy[r][c]
        diffs.append(m)
    return PerfectComplex(x.algebra, lo, tuple(terms), tuple(diffs))


def identity_map(x: PerfectComplex) -> ChainMap:
    maps = {}
    for d in x.degrees():
        k = len(x.term(d))
        maps[d] = tuple(tuple(ONE if i == j else ZERO for j in range(k)) for i in range(k))
    return ChainMap(x, x, maps)


# -- minimisation ---------------------------------------------------------------------

def minimize(x: PerfectComplex) -> PerfectComplex:
    """Strip contractible summands ``P_a --(unit)--> P_a`` by Gaussian elimination.

    Scans degrees from the lowest up, and within a degree source position
    then target position, so the output is reproducible.
    """
    alg = x.algebra
    ends = alg.ends
    terms = [list(t) for t in x.terms]
    diffs = [[list(r) for r in m] for m in x.diffs]
    changed = False
    while True:
        hit = None
        for k, m in enumerate(diffs):
            src, tgt = terms[k], terms[k + 1]
            for a in range(len(src)):
                for b in range(len(tgt)):
                    if m[b][a] and src[a] == tgt[b]:
                        hit = (k, a, b)
                        break
                if hit:
                    break
            if hit:
                break
        if hit is None:
            break
        changed = True
        k, a, b = hit
        m = diffs[k]
        src, tgt = terms[k], terms[k + 1]
        inv = 1 / m[b][a]
        new = []
        for y in range(len(tgt)):
            if y == b:
                continue
            row = []
            gamma = m[y][a]
            for xx in range(len(src)):
                if xx == a:
                    continue
                val = m[y][xx]
                if gamma and m[b][xx]:
                    s, t = src[xx], tgt[y]
                    if t <= s <= ends[t]:
                        val = val - gamma * inv * m[b][xx]
                row.append(val)
            new.append(row)
        diffs[k] = new
        if k > 0:
            diffs[k - 1] = [r for i, r in enumerate(diffs[k - 1]) if i != a]
        if k + 1 < len(diffs):
            diffs[k + 1] = [[v for j, v in enumerate(r) if j != b] for r in diffs[k + 1]]
        src.pop(a)
        tgt.pop(b)
    if not changed:
        return x
    return PerfectComplex(alg, x.lo, tuple(tuple(t) for t in terms), tuple(diffs))


# -- homology -------------------------------------------------------------------------

def homology_dims(x) -> dict[int, tuple[int, ...]]:
    """Per degree, the dimension vector of the cohomology (zero degrees omitted)."""
    n = x.algebra.n
    out = {}
    ranks = {}
    for d in range(x.lo - 1, x.hi + 1):
        src, tgt = x.intervals(d), x.intervals(d + 1)
        m = x.diff(d)
        per = []
        for j in range(1, n + 1):
            block, rows, cols = vertex_block(m, src, tgt, j)
            per.append(linalg.rank(block, len(cols)) if rows and cols else 0)
        ranks[d] = per
    for d in x.degrees():
        ints = x.intervals(d)
        vec = []
        for j in range(1, n + 1):
            dim = sum(1 for s in ints if s[0] <= j <= s[1])
            vec.append(dim - ranks[d][j - 1] - ranks[d - 1][j - 1])
        if any(vec):
            out[d] = tuple(vec)
    return out


def euler_class(x) -> tuple[int, ...]:
    """Alternating sum over degrees of homology dimension vectors."""
    n = x.algebra.n
    tot = [0] * n
    for d, vec in homology_dims(x).items():
        sign = -1 if d % 2 else 1
        for j in range(n):
            tot[j] += sign * vec[j]
    return tuple(tot)


# -- projective resolutions of single modules ----------------------------------------

def resolve(algebra: NakayamaAlgebra, module) -> PerfectComplex:
    """Minimal projective resolution of ``M[u, v]`` in degrees ``..., -1, 0``."""
    u, v = interval_module(algebra, *module)
    chain = []
    while True:
        chain.append(u)
        e = algebra.ends[u]
        if v == e:
            break
        u, v = v + 1, e
    chain.reverse()
    terms = tuple((a,) for a in chain)
    diffs = tuple(((ONE,),) for _ in range(len(chain) - 1))
    return PerfectComplex(algebra, -(len(chain) - 1), terms, diffs)


# -- rendering ----------------------------------------------------------------------------

def _term_name(t):
    if isinstance(t, IntervalModule):
        return str(t)
    return f"P{t}"


def render(x) -> str:
    """One-line rendering, e.g. ``deg -3: P11 | deg -2: P7 | deg -1: P6+P5``."""
    if x.is_zero():
        return "0"
    parts = []
    for d in x.degrees():
        t = x.term(d)
        parts.append(f"deg {d}: " + ("+".join(_term_name(a) for a in t) if t else "0"))
    return " | ".join(parts)


def fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def complex_to_json(x) -> dict:
    return {
        "lo": x.lo,
        "terms": [[a if isinstance(a, int) else list(a) for a in x.term(d)] for d in x.degrees()],
        "diffs": [[[fraction_str(q) for q in row] for row in m] for m in x.diffs],
    }


def perfect_from_json(algebra: NakayamaAlgebra, obj) -> PerfectComplex:
    diffs = tuple(tuple(tuple(Fraction(q) for q in row) for row in m) for m in obj.get("diffs", []))
    terms = tuple(tuple(int(a) for a in t) for t in obj["terms"])
    return PerfectComplex(algebra, int(obj["lo"]), terms, diffs)
