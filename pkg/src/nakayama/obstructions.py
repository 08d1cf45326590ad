"""Tests that certify an algebra as not piecewise hereditary.

Every test is one-sided: it either returns a certificate, which can be
re-checked independently through :meth:`Certificate.verify`, or reports that
it found nothing.  No test ever claims that an algebra *is* piecewise
hereditary.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .algebra import NakayamaAlgebra, Relation, parse_algebra
from .complexes import stalk
from .coxeter import coxeter_matrix
from .derived import (
    are_isomorphic,
    check_strand,
    stalk_shift_of,
    tau,
    two_strand_indecomposable,
)
from .errors import (
    InvalidStrand,
    MalformedSpec,
    NakayamaError,
    OutOfTable,
    PowerBelowThree,
)
from .moves import apply_chain


# -- certificates -------------------------------------------------------------------

class Certificate:
    kind = ""

    def to_json(self) -> dict:
        raise NotImplementedError

    def verify(self, algebra: NakayamaAlgebra) -> bool:
        raise NotImplementedError

    def __str__(self):
        body = ", ".join(f"{k}={v}" for k, v in self.to_json().items() if k != "kind")
        return f"{self.kind}({body})"


def _rel_json(r):
    return [r[0], r[1]]


@dataclass(frozen=True)
class TauPeriodic(Certificate):
    """``tau^power(P_start) = P_start[shift]`` with ``power, shift >= 1``."""

    start: int
    power: int
    shift: int
    kind = "tau_periodic"

    def to_json(self):
        return {"kind": self.kind, "start": self.start, "power": self.power, "shift": self.shift}

    def verify(self, algebra):
        if self.power < 1 or self.shift < 1 or not 1 <= self.start <= algebra.n:
            return False
        x = stalk(algebra, self.start)
        for _ in range(self.power):
            x = tau(x)
        return stalk_shift_of(x) == (self.start, self.shift)


@dataclass(frozen=True)
class CoarseFineCone(Certificate):
    c: tuple[int, ...]
    f: tuple[int, ...]
    kind = "coarse_fine"

    def to_json(self):
        return {"kind": self.kind, "c": list(self.c), "f": list(self.f)}

    def verify(self, algebra):
        res = coarse_fine_sequences(algebra)
        if res is None or (res.c, res.f) != (self.c, self.f):
            res = coarse_fine_sequences(algebra, literal=True)
        if res is None or (res.c, res.f) != (self.c, self.f):
            return False
        if len(self.f) < len(self.c) + 2:
            return False
        try:
            ok = _intertwined(algebra, self.c, self.f)
        except InvalidStrand:
            return False
        return ok and _quotient_vertex(algebra, self.c, self.f) is not None


@dataclass(frozen=True)
class PatternOverlapSix(Certificate):
    alpha: Relation
    beta: Relation
    kind = "overlap_six"

    def to_json(self):
        return {"kind": self.kind, "alpha": _rel_json(self.alpha), "beta": _rel_json(self.beta)}

    def verify(self, algebra):
        rels = set(algebra.relations)
        return (self.alpha in rels and self.beta in rels
                and _overlap_six_ok(algebra, self.alpha, self.beta))


@dataclass(frozen=True)
class PatternSandwich(Certificate):
    alpha: Relation
    beta: Relation
    left: Relation
    right: Relation
    kind = "sandwich"

    def to_json(self):
        return {"kind": self.kind, "alpha": _rel_json(self.alpha), "beta": _rel_json(self.beta),
                "left": _rel_json(self.left), "right": _rel_json(self.right)}

    def verify(self, algebra):
        rels = set(algebra.relations)
        if not {self.alpha, self.beta, self.left, self.right} <= rels:
            return False
        return (_sandwich_pair_ok(algebra, self.alpha, self.beta)
                and _left_ok(self.left, self.beta) and _right_ok(self.right, self.alpha))


@dataclass(frozen=True)
class ThreeBlocks(Certificate):
    left: tuple[Relation, ...]
    middle: tuple[Relation, Relation]
    right: tuple[Relation, ...]
    kind = "three_blocks"

    def to_json(self):
        return {"kind": self.kind, "left": [_rel_json(r) for r in self.left],
                "middle": [_rel_json(r) for r in self.middle],
                "right": [_rel_json(r) for r in self.right]}

    def verify(self, algebra):
        rels = set(algebra.relations)
        a, b = self.middle
        if not (set(self.left) | set(self.right) | {a, b}) <= rels:
            return False
        return (bool(self.left) and bool(self.right) and a.start < b.start and a.end - b.start >= 2
                and all(_left_ok(r, b) for r in self.left)
                and all(_right_ok(r, a) for r in self.right))


@dataclass(frozen=True)
class Derivation(Certificate):
    """A non-piecewise-hereditary seed and vertex insertions leading to the algebra."""

    seed: str
    moves: tuple[str, ...]
    seed_certificate: TauPeriodic | None = None
    kind = "derivation"

    def to_json(self):
        out = {"kind": self.kind, "seed": self.seed, "moves": list(self.moves)}
        if self.seed_certificate is not None:
            out["seed_certificate"] = self.seed_certificate.to_json()
        return out

    def replay(self) -> NakayamaAlgebra:
        algebra = parse_algebra(self.seed)
        for rec in apply_chain(algebra, list(self.moves)):
            if rec.kind != "ins":
                raise MalformedSpec(f"derivations only insert vertices, got {rec.move!r}")
            algebra = rec.output
        return algebra

    def verify(self, algebra):
        cert = self.seed_certificate
        if cert is None:
            cert = SEED_CERTIFICATES.get(self.seed)
        if cert is None or not cert.verify(parse_algebra(self.seed)):
            return False
        try:
            return self.replay() == algebra
        except NakayamaError:
            return False


def certificate_from_json(obj) -> Certificate:
    try:
        kind = obj["kind"]
        if kind == "tau_periodic":
            return TauPeriodic(int(obj["start"]), int(obj["power"]), int(obj["shift"]))
        if kind == "coarse_fine":
            return CoarseFineCone(tuple(obj["c"]), tuple(obj["f"]))
        if kind == "overlap_six":
            return PatternOverlapSix(Relation(*obj["alpha"]), Relation(*obj["beta"]))
        if kind == "sandwich":
            return PatternSandwich(*(Relation(*obj[k]) for k in ("alpha", "beta", "left", "right")))
        if kind == "three_blocks":
            return ThreeBlocks(tuple(Relation(*r) for r in obj["left"]),
                               tuple(Relation(*r) for r in obj["middle"]),
                               tuple(Relation(*r) for r in obj["right"]))
        if kind == "derivation":
            seed_cert = obj.get("seed_certificate")
            return Derivation(obj["seed"], tuple(obj["moves"]),
                              certificate_from_json(seed_cert) if seed_cert else None)
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedSpec(f"bad certificate {obj!r}: {exc}") from None
    raise MalformedSpec(f"unknown certificate kind in {obj!r}")


# -- coarse and fine sequences ------------------------------------------------------

@dataclass(frozen=True)
class CoarseFineResult:
    c: tuple[int, ...]
    f: tuple[int, ...]
    fires: bool
    intertwine_ok: bool
    diagnostic: str = ""

    @property
    def l_c(self):
        return len(self.c)

    @property
    def l_f(self):
        return len(self.f)

    def certificate(self):
        return CoarseFineCone(self.c, self.f) if self.fires else None


def _last_ending_at_or_before(rels, x):
    best = None
    for r in rels:
        if r.end <= x:
            best = r
    return best


def _select_head(algebra, exclusion):
    ends = {r.end for r in algebra.relations}
    for r in reversed(algebra.relations):
        if r.length < 3:
            continue
        c1 = r.end
        if exclusion and r.start == c1 - 3 and (c1 - 1) in ends and (c1 - 2) not in ends:
            continue
        return r
    return None


def _strands(c, f):
    """Strands of the cone: the coarse one closed by ``P_1``, the fine one cut after ``l_c + 2``."""
    return tuple(c) + (1,), tuple(f[:len(c) + 2])


def coarse_fine_sequences(algebra: NakayamaAlgebra, literal: bool = False) -> CoarseFineResult | None:
    """Coarse and fine sequences, or ``None`` when no relation has length at least 3.

    By default ``c_2`` only considers vertices past the first relation end
    (so the coarse recursion can continue from it) and no relation is
    excluded when choosing ``c_1``; these are the choices under which the
    sequences of ``k A_n / rad^m`` have the closed-form lengths of
    :func:`coarse_fine_radical_lengths` for every ``n > m``.  ``literal=True``
    applies the exclusion clause and the unrestricted ``c_2`` rule instead.

    The fine recursion keeps going while at least one of its two relations
    exists.  The test fires only if ``l_f >= l_c + 2``, both cone strands are
    genuine strands that intertwine, and the last cone term maps onward to
    some ``P_b`` (see :func:`_quotient_vertex`).
    """
    head = _select_head(algebra, exclusion=literal)
    if head is None:
        return None
    rels = algebra.relations
    ends = {r.end for r in rels}
    first_end = rels[0].end
    c1 = head.end
    free = [x for x in range(head.start + 2, c1)
            if x not in ends and (literal or x > first_end)]
    c2 = free[-1] if free else c1 - 1
    f2 = c2 - 1

    c = [c1]
    if c2 > 1:
        c.append(c2)
        while True:
            r = _last_ending_at_or_before(rels, c[-1])
            if r is None or r.start + 1 <= 1:
                break
            c.append(r.start + 1)

    f = [c1]
    if f2 > 1:
        f.append(f2)
        while True:
            r1 = _last_ending_at_or_before(rels, f[-2])
            r2 = _last_ending_at_or_before(rels, f[-1])
            options = ([r1.start] if r1 else []) + ([r2.end - 1] if r2 else [])
            if not options or min(options) <= 1:
                break
            f.append(min(options))

    c, f = tuple(c), tuple(f)
    if len(f) < len(c) + 2:
        return CoarseFineResult(c, f, False, False, f"l_f = {len(f)} < l_c + 2 = {len(c) + 2}")
    try:
        ok = _intertwined(algebra, c, f)
    except InvalidStrand as exc:
        return CoarseFineResult(c, f, False, False, f"invalid strand: {exc}")
    if not ok:
        return CoarseFineResult(c, f, False, False, "strands do not intertwine")
    b = _quotient_vertex(algebra, c, f)
    if b is None:
        lo, hi = f[len(c) + 1], f[len(c)]
        return CoarseFineResult(c, f, False, True,
                                f"no P_b with {lo} <= end(b) < {hi} to receive the last term")
    return CoarseFineResult(c, f, True, True)


def _intertwined(algebra, c, f):
    """Both cone strands are strands and satisfy the two-strand lemma."""
    cs, fs = _strands(c, f)
    check_strand(algebra, cs)
    check_strand(algebra, fs)
    return two_strand_indecomposable(algebra, cs, fs)


def _quotient_vertex(algebra, c, f):
    """Smallest ``b`` such that ``P_{f_{l_c+2}} -> P_b`` is a nonzero chain map out of the cone.

    The map is nonzero when ``f_{l_c+2} <= end(b)`` and kills the incoming
    differential when ``end(b) < f_{l_c+1}``.  Composing with the nonzero maps
    ``P_b -> P_{b-1} -> ... -> P_1`` completes the path ``P_1[1] ~> P_1``.
    """
    hi, lo = f[len(c)], f[len(c) + 1]
    for b in range(1, algebra.n + 1):
        if lo <= algebra.ends[b] < hi:
            return b
    return None


def coarse_fine_radical_lengths(n: int, m: int) -> tuple[int, int]:
    """Closed-form ``(l_c, l_f)`` for ``k A_n / rad^m``."""
    if m < 3:
        raise PowerBelowThree(f"radical power must be at least 3, got {m}")
    if n <= m:
        raise PowerBelowThree(f"need n > m, got n={n}, m={m}")
    l_c = (n - 3) // (m - 1) + 2
    l_f = max(2 * ((n - 4) // m) + 2, 2 * ((n - 2) // m) + 1)
    return l_c, l_f


# -- relation patterns -------------------------------------------------------------------

def _overlap_six_ok(algebra, a, b):
    if not (a.start < b.start and a.end - b.start >= 6
            and b.start - a.start >= 3 and b.end - a.end >= 3):
        return False
    for u, v in algebra.relations:
        if u in (b.start - 2, b.start - 1) and v in (a.end + 1, a.end + 2):
            return False
    return True


def pattern_overlap_six(algebra: NakayamaAlgebra) -> PatternOverlapSix | None:
    """Two relations overlapping by six or more arrows, suitably spread out."""
    rels = algebra.relations
    for i, a in enumerate(rels):
        for b in rels[i + 1:]:
            if _overlap_six_ok(algebra, a, b):
                return PatternOverlapSix(a, b)
    return None


def _sandwich_pair_ok(algebra, a, b):
    if algebra.n < 9 or not (a.start < b.start and a.end - b.start >= 2):
        return False
    for u, v in algebra.relations:
        if u == a.start - 1 and v <= b.start + 1:
            return False
        if v == b.end + 1 and u >= a.end - 1:
            return False
    return True


def _left_ok(r, b):
    return r.length >= 3 and r.end <= b.start


def _right_ok(r, a):
    return r.length >= 3 and r.start >= a.end


def pattern_sandwich(algebra: NakayamaAlgebra) -> PatternSandwich | None:
    """A pair overlapping by two or more arrows with a long relation on each side."""
    if algebra.n < 9:
        return None
    rels = algebra.relations
    for i, a in enumerate(rels):
        for b in rels[i + 1:]:
            if not _sandwich_pair_ok(algebra, a, b):
                continue
            left = next((r for r in rels if _left_ok(r, b)), None)
            right = next((r for r in rels if _right_ok(r, a)), None)
            if left and right:
                return PatternSandwich(a, b, left, right)
    return None


def pattern_three_blocks(algebra: NakayamaAlgebra) -> ThreeBlocks | None:
    """Long relations left of ``beta`` and right of ``alpha`` around an overlapping pair.

    The side conditions of :func:`pattern_sandwich` are not checked, so this is
    a convenience report; :func:`battery` relies on the sandwich predicate.
    """
    rels = algebra.relations
    for i, a in enumerate(rels):
        for b in rels[i + 1:]:
            if a.end - b.start < 2:
                continue
            left = next((r for r in rels if _left_ok(r, b)), None)
            right = next((r for r in rels if _right_ok(r, a)), None)
            if left and right:
                return ThreeBlocks((left,), (a, b), (right,))
    return None


# -- tau periodicity ------------------------------------------------------------------------

@dataclass
class OrbitLog:
    start: int
    steps: int
    reason: str

    def to_json(self):
        return {"start": self.start, "steps": self.steps, "reason": self.reason}


@dataclass
class Inconclusive:
    logs: list = field(default_factory=list)

    def to_json(self):
        return {"kind": "inconclusive", "orbits": [g.to_json() for g in self.logs]}


def coxeter_candidates(algebra: NakayamaAlgebra, i: int, max_steps: int) -> list[int]:
    """Steps ``k`` with ``Phi^k e_i = +-e_i``, a necessary condition for ``tau^k P_i = P_i[m]``."""
    phi = coxeter_matrix(algebra)
    n = algebra.n
    x = [0] * n
    x[i - 1] = 1
    out = []
    for k in range(1, max_steps + 1):
        x = [sum(phi[r][s] * x[s] for s in range(n) if x[s]) for r in range(n)]
        if abs(x[i - 1]) == 1 and sum(1 for v in x if v) == 1:
            out.append(k)
    return out


def _orbit(algebra, i, max_steps, max_rank):
    cands = coxeter_candidates(algebra, i, max_steps)
    if not cands:
        return None, OrbitLog(i, 0, "no step passes the Coxeter filter")
    wanted = set(cands)
    seen = {}
    x = stalk(algebra, i)
    seen[(x.lo, x.terms)] = [x]
    for k in range(1, cands[-1] + 1):
        x = tau(x, audit=False)
        if k in wanted:
            s = stalk_shift_of(x)
            if s is not None and s[0] == i:
                if s[1] >= 1:
                    return TauPeriodic(i, k, s[1]), OrbitLog(i, k, "periodic")
                return None, OrbitLog(i, k, f"returns to P_{i}[{s[1]}] with non-positive shift")
        if sum(len(t) for t in x.terms) > max_rank:
            return None, OrbitLog(i, k, f"complex outgrew {max_rank} summands")
        key = (x.lo, x.terms)
        bucket = seen.setdefault(key, [])
        if any(are_isomorphic(x, y) for y in bucket):
            return None, OrbitLog(i, k, "orbit repeats")
        bucket.append(x)
    return None, OrbitLog(i, cands[-1], "step bound reached")


def tau_orbit_test(algebra: NakayamaAlgebra, starts: Iterable[int] | None = None,
                   max_steps: int = 200, max_rank: int | None = None):
    """First ``TauPeriodic`` certificate over the given starts, else :class:`Inconclusive`.

    An orbit is abandoned once a complex has more than ``max_rank``
    indecomposable summands (default ``4 n``): a periodic orbit stays bounded,
    so giving up early can only lose a certificate, never invent one.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be positive")
    if max_rank is None:
        max_rank = 4 * algebra.n
    starts = range(1, algebra.n + 1) if starts is None else sorted(starts)
    logs = []
    for i in starts:
        cert, log = _orbit(algebra, i, max_steps, max_rank)
        logs.append(log)
        if cert is not None:
            return cert
    return Inconclusive(logs)


# -- the radical power table ------------------------------------------------------------------

SEEDS = {3: (12, 3), 4: (11, 4), 5: (11, 5), 6: (12, 6), 7: (12, 7)}

SEED_CERTIFICATES = {
    "radpow=11,4": TauPeriodic(1, 15, 1),
    "radpow=11,5": TauPeriodic(1, 15, 1),
    "radpow=12,3": TauPeriodic(1, 21, 1),
    "radpow=12,6": TauPeriodic(1, 21, 1),
    "radpow=12,7": TauPeriodic(1, 21, 1),
}


def hs_in_table(n: int, r: int) -> bool:
    if r < 3:
        return False
    if r in SEEDS:
        return n >= SEEDS[r][0]
    return n >= r + 5


def hs_derivation(n: int, r: int) -> Derivation:
    """Insertions taking a certified seed to ``Lambda(n, r)``.

    Diagonal steps ``Lambda(k, s) -> Lambda(k + 1, s + 1)`` insert a vertex
    between ``s - 1`` and ``s``; horizontal steps prepend a vertex carrying a
    new relation of length ``r``.
    """
    if not hs_in_table(n, r):
        raise OutOfTable(f"Lambda({n},{r}) is not covered by the table")
    k, s = SEEDS[min(r, 7)]
    seed = f"radpow={k},{s}"
    moves = []
    while s < r:
        moves.append(f"ins:{s - 1}:none")
        k, s = k + 1, s + 1
    while k < n:
        moves.append(f"ins:0:rel-to={r}")
        k += 1
    return Derivation(seed, tuple(moves), SEED_CERTIFICATES[seed])


# -- battery ---------------------------------------------------------------------------------

@dataclass
class Verdict:
    algebra: NakayamaAlgebra
    certificates: list
    orbit_logs: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return "non_piecewise_hereditary" if self.certificates else "inconclusive"

    @property
    def flagged(self) -> bool:
        return bool(self.certificates)

    def to_json(self):
        return {"verdict": self.status, "certificates": [c.to_json() for c in self.certificates]}


def battery(algebra: NakayamaAlgebra, max_steps: int = 200) -> Verdict:
    """Run every test and collect the certificates."""
    certs, notes = [], []
    for test in (pattern_overlap_six, pattern_sandwich):
        cert = test(algebra)
        if cert is not None:
            certs.append(cert)
    cf = coarse_fine_sequences(algebra)
    if cf is not None:
        if cf.fires:
            certs.append(cf.certificate())
        elif cf.diagnostic:
            notes.append(f"coarse/fine: {cf.diagnostic}")
    res = tau_orbit_test(algebra, max_steps=max_steps)
    logs = []
    if isinstance(res, TauPeriodic):
        certs.append(res)
    else:
        logs = res.logs
    return Verdict(algebra, certs, logs, notes)

