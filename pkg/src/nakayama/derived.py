"""The Nakayama functor, resolutions of complexes, Hom spaces and ``tau``.

``tau`` is computed as ``nu`` followed by the shift ``[-1]``, which is the
Auslander-Reiten translate on the bounded derived category of an algebra of
finite global dimension.  Applying ``nu`` turns projectives into injectives,
so the image is re-resolved into a perfect complex before shifting.
"""
from __future__ import annotations

import random
from fractions import Fraction

from . import linalg
from .algebra import NakayamaAlgebra
from .complexes import (
    ModuleComplex,
    PerfectComplex,
    ZERO,
    homology_dims,
    minimize,
    resolve,
    shift,
    vertex_block,
)
from .coxeter import cartan_matrix, coxeter_matrix
from .errors import AuditFailure, InvalidStrand, NotAComplex, ZeroComplex


def nakayama_functor(x: PerfectComplex) -> ModuleComplex:
    """Replace every ``P_a`` by ``I_a``; the scalars carry over unchanged."""
    lam = x.algebra.injective_tops
    terms = tuple(tuple((lam[a], a) for a in t) for t in x.terms)
    return ModuleComplex(x.algebra, x.lo, terms, x.diffs)


# -- resolving a complex of interval modules ------------------------------------

def _arrow(vec, intervals, j):
    """Push a vector living at vertex ``j - 1`` along the arrow into vertex ``j``."""
    return [a if a and intervals[p][0] <= j <= intervals[p][1] else ZERO
            for p, a in enumerate(vec)]


def _vertex_kernel(mat, src, tgt, j):
    """Kernel at vertex ``j`` as full-length coordinate vectors on ``src``."""
    block, rows, cols = vertex_block(mat, src, tgt, j)
    if not cols:
        return []
    basis = linalg.nullspace(block, len(cols)) if rows else \
        [[Fraction(int(a == b)) for a in range(len(cols))] for b in range(len(cols))]
    out = []
    for v in basis:
        full = [ZERO] * len(src)
        for c, val in zip(cols, v):
            full[c] = val
        out.append(full)
    return out


def _vertex_image(mat, src, tgt, j):
    """Image at vertex ``j`` as full-length coordinate vectors on ``tgt``."""
    block, rows, cols = vertex_block(mat, src, tgt, j)
    out = []
    for c in range(len(cols)):
        full = [ZERO] * len(tgt)
        for r, y in enumerate(rows):
            full[y] = block[r][c]
        if any(full):
            out.append(full)
    return out


def resolve_complex(c: ModuleComplex, audit: bool = True) -> PerfectComplex:
    """A minimal perfect complex quasi-isomorphic to ``c``.

    Works downwards from the top degree, building ``P`` together with a chain
    map ``phi: P -> c`` so that the cone of ``phi`` is exact.  In degree ``d``
    the new term ``P^d`` is a projective cover of the cycles of the partial
    cone modulo what the lower part of ``c`` already hits.
    """
    alg = c.algebra
    n = alg.n
    ends = alg.ends
    if c.is_zero():
        return PerfectComplex(alg)
    if len(c.terms) == 1 and len(c.terms[0]) == 1:
        return shift(resolve(alg, c.terms[0][0]), -c.lo)

    p_terms = {}          # degree -> list of projective indices
    p_diffs = {}          # degree d -> matrix P^d -> P^(d+1)
    phis = {}             # degree d -> matrix P^d -> C^d
    d = c.hi
    floor = c.lo - 2 * n - 4
    while True:
        if d < floor:
            raise AuditFailure("resolution did not terminate")
        above = p_terms.get(d + 1, [])
        p_int = [(a, ends[a]) for a in above]
        c_int = c.intervals(d)
        t_int = p_int + c_int
        # delta_d : P^(d+1) + C^d  ->  P^(d+2) + C^(d+1)
        above2 = p_terms.get(d + 2, [])
        tgt_int = [(a, ends[a]) for a in above2] + c.intervals(d + 1)
        delta = [[ZERO] * len(t_int) for _ in tgt_int]
        if above:
            dp = p_diffs.get(d + 1)
            if dp is not None:
                for r in range(len(above2)):
                    for q in range(len(above)):
                        delta[r][q] = -dp[r][q]
            ph = phis[d + 1]
            for r in range(len(c.intervals(d + 1))):
                for q in range(len(above)):
                    delta[len(above2) + r][q] = ph[r][q]
        dc = c.diff(d)
        for r in range(len(c.intervals(d + 1))):
            for q in range(len(c_int)):
                delta[len(above2) + r][len(above) + q] = dc[r][q]
        # boundaries coming from C^(d-1)
        dc_low = c.diff(d - 1)
        low_int = c.intervals(d - 1)
        gens = []
        prev_cycles = []
        for j in range(1, n + 1):
            cycles = _vertex_kernel(delta, t_int, tgt_int, j)
            span = linalg.EchelonSpan(len(t_int))
            for v in _vertex_image(dc_low, low_int, c_int, j):
                span.add([ZERO] * len(p_int) + v)
            for v in prev_cycles:
                w = _arrow(v, t_int, j)
                if any(w):
                    span.add(w)
            for z in cycles:
                if span.add(z):
                    gens.append((j, z))
            prev_cycles = cycles
        if d < c.lo and not gens:
            break
        p_terms[d] = [j for j, _ in gens]
        if above:
            p_diffs[d] = [[-z[q] for _, z in gens] for q in range(len(above))]
        phis[d] = [[z[len(p_int) + q] for _, z in gens] for q in range(len(c_int))]
        d -= 1

    degs = sorted(p_terms)
    lo = degs[0]
    terms = tuple(tuple(p_terms[k]) for k in degs)
    diffs = []
    for k in degs[:-1]:
        m = p_diffs.get(k)
        if m is None:
            m = [[ZERO] * len(p_terms[k]) for _ in p_terms[k + 1]]
        diffs.append(m)
    out = minimize(PerfectComplex(alg, lo, terms, tuple(diffs)))
    if audit and homology_dims(out) != homology_dims(c):
        raise AuditFailure("resolution changed the homology")
    return out


# -- tau ------------------------------------------------------------------------------

def k_class(x: PerfectComplex) -> tuple[int, ...]:
    """Class in the Grothendieck group, in coordinates of the projectives ``[P_i]``."""
    return x.k_class()


def homology_k_class(x) -> tuple[Fraction, ...]:
    """The same class computed from homology: ``C^{-T}`` times the Euler vector."""
    n = x.algebra.n
    tot = [0] * n
    for d, vec in homology_dims(x).items():
        sign = -1 if d % 2 else 1
        for j in range(n):
            tot[j] += sign * vec[j]
    ct = linalg.transpose(cartan_matrix(x.algebra))
    sol = linalg.solve(ct, tot, n)
    return tuple(sol)


def apply_coxeter(algebra: NakayamaAlgebra, vec):
    phi = coxeter_matrix(algebra)
    return tuple(sum(phi[i][k] * vec[k] for k in range(len(vec))) for i in range(len(vec)))


def tau(x: PerfectComplex, audit: bool = True) -> PerfectComplex:
    """Auslander-Reiten translate ``tau X = nu(X)[-1]`` as a minimal complex."""
    if x.is_zero():
        raise ZeroComplex("tau of the zero complex")
    x = minimize(x)
    out = shift(resolve_complex(nakayama_functor(x), audit=audit), -1)
    out = PerfectComplex(out.algebra, out.lo, out.terms, out.diffs)
    if audit:
        if not out.is_minimal():
            raise AuditFailure("tau produced a non-minimal complex")
        if out.k_class() != apply_coxeter(x.algebra, x.k_class()):
            raise AuditFailure("tau broke the Coxeter law on K-theory")
    return out


def tau_orbit(x: PerfectComplex, steps: int, audit: bool = True) -> list[PerfectComplex]:
    """``[x, tau x, ..., tau^steps x]``."""
    out = [x]
    for _ in range(steps):
        out.append(tau(out[-1], audit=audit))
    return out


# -- Hom spaces ------------------------------------------------------------------------

def _hom_vars(x, y, k):
    ends = x.algebra.ends
    out = []
    for d in x.degrees():
        for b, yb in enumerate(y.term(d + k)):
            for a, xa in enumerate(x.term(d)):
                if yb <= xa <= ends[yb]:
                    out.append((d, b, a))
    return out


def _hom_differential(x, y, k, cols, rows):
    """Matrix of ``D f = d_Y f - (-1)^k f d_X`` from ``Hom^k`` to ``Hom^(k+1)``."""
    index = {v: r for r, v in enumerate(rows)}
    sign = -1 if k % 2 else 1
    mat = [[ZERO] * len(cols) for _ in rows]
    for col, (d, m, a) in enumerate(cols):
        dy = y.diff(d + k)
        for b in range(len(y.term(d + k + 1))):
            s = dy[b][m]
            if s:
                r = index.get((d, b, a))
                if r is not None:
                    mat[r][col] += s
        dx = x.diff(d - 1)
        for a2 in range(len(x.term(d - 1))):
            s = dx[a][a2]
            if s:
                r = index.get((d - 1, m, a2))
                if r is not None:
                    mat[r][col] -= sign * s
    return mat


def chain_map_space(x: PerfectComplex, y: PerfectComplex):
    """Variables and a basis of the degree-zero chain maps ``x -> y``."""
    v0 = _hom_vars(x, y, 0)
    v1 = _hom_vars(x, y, 1)
    if not v0:
        return v0, []
    d0 = _hom_differential(x, y, 0, v0, v1)
    return v0, (linalg.nullspace(d0, len(v0)) if v1 else
                [[Fraction(int(i == j)) for i in range(len(v0))] for j in range(len(v0))])


def hom_dim(x: PerfectComplex, y: PerfectComplex) -> int:
    """``dim Hom(x, y)`` in the derived category: chain maps modulo homotopy."""
    v0, basis = chain_map_space(x, y)
    if not basis:
        return 0
    vm = _hom_vars(x, y, -1)
    if not vm:
        return len(basis)
    dm = _hom_differential(x, y, -1, vm, v0)
    return len(basis) - linalg.rank(dm, len(vm))


def are_isomorphic(x: PerfectComplex, y: PerfectComplex, trials: int = 3, seed: int = 0) -> bool:
    """Decide ``x = y`` for minimal complexes.

    Minimal complexes are isomorphic in the derived category exactly when they
    are isomorphic as complexes, and a chain map is an isomorphism exactly when
    its components between equal projectives are invertible in every degree.
    A random chain map is tested; a generic one is invertible whenever any is,
    so a ``False`` can only be wrong with tiny probability, never a ``True``.
    """
    if x.lo != y.lo or x.terms != y.terms:
        return False
    if x.is_zero():
        return True
    v0, basis = chain_map_space(x, y)
    if not basis:
        return False
    rng = random.Random(seed)
    for _ in range(trials):
        coeffs = [rng.randint(-1000, 1000) for _ in basis]
        f = [sum(c * v[i] for c, v in zip(coeffs, basis)) for i in range(len(v0))]
        comp = {}
        for (d, b, a), val in zip(v0, f):
            comp[(d, b, a)] = val
        if all(_blocks_invertible(x, y, d, comp) for d in x.degrees()):
            return True
    return False


def _blocks_invertible(x, y, d, comp):
    src, tgt = x.term(d), y.term(d)
    for idx in set(src):
        cols = [a for a, s in enumerate(src) if s == idx]
        rows = [b for b, t in enumerate(tgt) if t == idx]
        block = [[comp.get((d, b, a), ZERO) for a in cols] for b in rows]
        if linalg.determinant(block) == 0:
            return False
    return True


def is_stalk_shift(x: PerfectComplex, i: int, m: int) -> bool:
    """Whether ``x`` is ``P_i[m]``, i.e. ``P_i`` alone in degree ``-m``."""
    return x.lo == -m and x.terms == ((i,),)


def stalk_shift_of(x: PerfectComplex):
    """``(i, m)`` when ``x = P_i[m]``, else ``None``."""
    if len(x.terms) == 1 and len(x.terms[0]) == 1:
        return x.terms[0][0], -x.lo
    return None


# -- two-strand complexes ---------------------------------------------------------------

def check_strand(algebra: NakayamaAlgebra, seq) -> None:
    """A strand ``P_{x1} -> P_{x2} -> ...`` needs nonzero maps and zero composites."""
    for k in range(len(seq) - 1):
        a, b = seq[k + 1], seq[k]
        if not 1 <= a <= algebra.n or not 1 <= b <= algebra.n:
            raise InvalidStrand(f"index outside 1..{algebra.n} in {tuple(seq)}")
        if not algebra.hom_nonzero(b, a):
            raise InvalidStrand(f"no nonzero map P_{b} -> P_{a}")
        if k + 2 < len(seq) and algebra.hom_nonzero(b, seq[k + 2]):
            raise InvalidStrand(f"P_{b} -> P_{a} -> P_{seq[k + 2]} does not compose to zero")


def two_strand_indecomposable(algebra: NakayamaAlgebra, c_seq, f_seq) -> bool:
    """Whether two strands with a common head meet the intertwining hypothesis.

    One strand must be smaller in position 2, and at the first later position
    where they differ it must be the larger one.
    """
    c_seq, f_seq = tuple(c_seq), tuple(f_seq)
    check_strand(algebra, c_seq)
    check_strand(algebra, f_seq)
    if not c_seq or not f_seq or c_seq[0] != f_seq[0]:
        raise InvalidStrand("strands must share their first entry")
    if len(c_seq) < 2 or len(f_seq) < 2 or c_seq[1] == f_seq[1]:
        return False
    low, high = (c_seq, f_seq) if c_seq[1] < f_seq[1] else (f_seq, c_seq)
    for i in range(2, min(len(low), len(high))):
        if low[i] != high[i]:
            return low[i] > high[i]
    return False


def two_strand_complex(algebra: NakayamaAlgebra, c_seq, f_seq, lo: int = 0) -> PerfectComplex:
    """The merged complex ``P_{x1} -> P_{x2} + P_{y2} -> ...`` with unit scalars."""
    c_seq, f_seq = tuple(c_seq), tuple(f_seq)
    length = max(len(c_seq), len(f_seq))
    terms, diffs = [], []
    for k in range(length):
        t = []
        if k < len(c_seq):
            t.append(("c", c_seq[k]))
        if k < len(f_seq) and not (k == 0 and f_seq[0] == c_seq[0]):
            t.append(("f", f_seq[k]))
        terms.append(t)
    for k in range(length - 1):
        src, tgt = terms[k], terms[k + 1]
        m = [[ZERO] * len(src) for _ in tgt]
        for x, (sx, a) in enumerate(src):
            for y, (sy, b) in enumerate(tgt):
                if (sx == sy or k == 0) and algebra.hom_nonzero(a, b):
                    m[y][x] = Fraction(1)
        diffs.append(m)
    try:
        return PerfectComplex(algebra, lo - length + 1,
                              tuple(tuple(a for _, a in t) for t in terms), tuple(diffs))
    except NotAComplex as exc:
        raise InvalidStrand(str(exc)) from None
