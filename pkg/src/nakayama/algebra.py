"""Linear Nakayama algebras ``k A_n / J`` and their combinatorial encodings.

An algebra is stored as its vertex count together with a minimal set of
monomial relations.  A relation ``(s, t)`` kills the path from vertex ``s`` to
vertex ``t``; vertices are numbered ``1..n`` along the linearly oriented
quiver ``1 -> 2 -> ... -> n``.

Representations are covariant, so the projective ``P_i`` is spanned by the
nonzero paths starting at ``i``: it is the uniserial module with top ``S_i``
and socle ``S_{i + c_i - 1}``, where ``c`` is the Kupisch series.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence

from .errors import (
    InvalidKupischSeries,
    LengthBelowTwo,
    MalformedSpec,
    NestedOrDuplicateRelation,
    PowerBelowTwo,
    RelationOutOfRange,
)


class Relation(NamedTuple):
    start: int
    end: int

    @property
    def length(self) -> int:
        return self.end - self.start

    def contains(self, other: "Relation") -> bool:
        """True when the path of ``other`` lies inside the path of ``self``."""
        return self.start <= other.start and other.end <= self.end

    def __str__(self):
        return f"{self.start}-{self.end}"


@dataclass(frozen=True)
class NakayamaAlgebra:
    n: int
    relations: tuple[Relation, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise RelationOutOfRange(f"vertex count must be positive, got {self.n}")
        rels = []
        for r in self.relations:
            s, t = r
            if not (1 <= s < t <= self.n):
                raise RelationOutOfRange(f"relation {s}-{t} does not fit on {self.n} vertices")
            if t - s < 2:
                raise LengthBelowTwo(f"relation {s}-{t} has length {t - s} < 2")
            rels.append(Relation(s, t))
        rels.sort()
        for a, b in zip(rels, rels[1:]):
            if not (a.start < b.start and a.end < b.end):
                raise NestedOrDuplicateRelation(
                    f"relations {a} and {b} are nested or duplicated")
        object.__setattr__(self, "relations", tuple(rels))

    # -- basic invariants --------------------------------------------------

    @cached_property
    def kupisch(self) -> tuple[int, ...]:
        """Composition lengths ``(c_1, ..., c_n)`` of the projectives."""
        c = []
        rels = self.relations
        k = 0
        for i in range(1, self.n + 1):
            while k < len(rels) and rels[k].start < i:
                k += 1
            # relations are sorted by start and end simultaneously, so the
            # first relation starting at or after i has the smallest end
            c.append(rels[k].end - i if k < len(rels) else self.n - i + 1)
        return tuple(c)

    @cached_property
    def ends(self) -> tuple[int, ...]:
        """``ends[i]`` is the socle vertex of ``P_i`` (index 0 unused)."""
        return (0,) + tuple(i + ci - 1 for i, ci in enumerate(self.kupisch, start=1))

    @cached_property
    def injective_tops(self) -> tuple[int, ...]:
        """``injective_tops[v]`` is the top vertex of the injective ``I_v``."""
        lam = [0]
        w = 1
        for v in range(1, self.n + 1):
            while self.ends[w] < v:
                w += 1
            lam.append(w)
        return tuple(lam)

    def end(self, i: int) -> int:
        return self.ends[i]

    def hom_nonzero(self, a: int, b: int) -> bool:
        """Whether ``Hom(P_a, P_b)`` is nonzero."""
        return b <= a <= self.ends[b]

    def relation_ending_at(self, t: int) -> Relation | None:
        for r in self.relations:
            if r.end == t:
                return r
        return None

    def relation_starting_at(self, s: int) -> Relation | None:
        for r in self.relations:
            if r.start == s:
                return r
        return None

    @property
    def is_hereditary(self) -> bool:
        return not self.relations

    # -- encodings ---------------------------------------------------------

    def encode(self) -> str:
        return f"n={self.n};rels=" + ",".join(str(r) for r in self.relations)

    def to_json(self) -> dict:
        return {"n": self.n, "relations": [list(r) for r in self.relations]}

    def __str__(self):
        return self.encode()

    def pretty(self) -> str:
        rels = ", ".join(f"({s},{t})" for s, t in self.relations)
        return f"<{self.n}; {rels}>"


def from_relations(n: int, rels: Sequence[Sequence[int]]) -> NakayamaAlgebra:
    """Validated algebra from raw ``(start, end)`` pairs."""
    return NakayamaAlgebra(n, tuple(Relation(int(s), int(t)) for s, t in rels))


@dataclass(frozen=True)
class KupischSeries:
    c: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.c)
        object.__setattr__(self, "c", c)
        if not c or c[-1] != 1:
            raise InvalidKupischSeries(f"last entry must be 1: {c}")
        for i in range(len(c) - 1):
            if not (2 <= c[i] <= c[i + 1] + 1):
                raise InvalidKupischSeries(f"entry c_{i + 1} = {c[i]} breaks 2 <= c_i <= c_(i+1) + 1")

    def __len__(self):
        return len(self.c)

    def __str__(self):
        return "kupisch=" + ",".join(map(str, self.c))


def to_kupisch(algebra: NakayamaAlgebra) -> KupischSeries:
    return KupischSeries(algebra.kupisch)


def from_kupisch(series: KupischSeries | Sequence[int]) -> NakayamaAlgebra:
    if not isinstance(series, KupischSeries):
        series = KupischSeries(tuple(series))
    c = series.c
    n = len(c)
    rels = []
    for s in range(1, n):
        if s + c[s - 1] <= n and c[s - 1] <= c[s]:
            rels.append((s, s + c[s - 1]))
    return from_relations(n, rels)


def enumerate_kupisch(n: int) -> Iterator[tuple[int, ...]]:
    """All Kupisch series of length ``n`` in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        yield (1,)
        return
    prefix = []

    def extend(i):
        # choosing c_i for vertex i (1-based); c_i <= n - i + 1 keeps it extendable
        if i == n:
            yield tuple(prefix) + (1,)
            return
        lo = 2 if i == 1 else max(2, prefix[-1] - 1)
        for ci in range(lo, n - i + 2):
            prefix.append(ci)
            yield from extend(i + 1)
            prefix.pop()

    yield from extend(1)


def enumerate_algebras(n: int) -> Iterator[NakayamaAlgebra]:
    """Every algebra on ``n`` vertices, lexicographically by Kupisch series."""
    for c in enumerate_kupisch(n):
        yield from_kupisch(KupischSeries(c))


def rad_power_algebra(n: int, m: int) -> NakayamaAlgebra:
    """``Lambda(n, m) = k A_n / rad^m``."""
    if m < 2:
        raise PowerBelowTwo(f"radical power must be at least 2, got {m}")
    if n < 1:
        raise RelationOutOfRange("n must be positive")
    return from_relations(n, [(i, i + m) for i in range(1, n - m + 1)])


def hereditary(n: int) -> NakayamaAlgebra:
    return NakayamaAlgebra(n, ())


def catalan(k: int) -> int:
    from math import comb
    return comb(2 * k, k) // (k + 1)


# -- text forms ---------------------------------------------------------------

def _ints(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise MalformedSpec(f"expected comma separated integers for {what}: {text!r}") from None


def parse_algebra(spec: str) -> NakayamaAlgebra:
    """Parse any accepted algebra form.

    ``n=9;rels=1-4,3-6``, ``kupisch=3,4,3,...``, ``radpow=11,5``, a JSON
    object ``{"n": .., "relations": [[s, t], ..]}`` or ``@path`` to a JSON file.
    """
    spec = spec.strip()
    if spec.startswith("@"):
        try:
            with open(spec[1:]) as fh:
                return algebra_from_json(json.load(fh))
        except OSError as exc:
            raise MalformedSpec(f"cannot read {spec[1:]}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise MalformedSpec(f"bad JSON in {spec[1:]}: {exc}") from None
    if spec.startswith("{"):
        try:
            return algebra_from_json(json.loads(spec))
        except json.JSONDecodeError as exc:
            raise MalformedSpec(f"bad JSON: {exc}") from None
    if spec.startswith("kupisch="):
        return from_kupisch(KupischSeries(tuple(_ints(spec[len("kupisch="):], "kupisch"))))
    if spec.startswith("radpow="):
        vals = _ints(spec[len("radpow="):], "radpow")
        if len(vals) != 2:
            raise MalformedSpec(f"radpow expects two integers: {spec!r}")
        return rad_power_algebra(*vals)
    if spec.startswith("n="):
        head, sep, tail = spec.partition(";")
        try:
            n = int(head[2:])
        except ValueError:
            raise MalformedSpec(f"bad vertex count in {spec!r}") from None
        rels = []
        if sep:
            if not tail.startswith("rels="):
                raise MalformedSpec(f"expected 'rels=' after ';' in {spec!r}")
            for item in tail[len("rels="):].split(","):
                if not item:
                    continue
                s, dash, t = item.partition("-")
                if not dash:
                    raise MalformedSpec(f"bad relation {item!r}")
                try:
                    rels.append((int(s), int(t)))
                except ValueError:
                    raise MalformedSpec(f"bad relation {item!r}") from None
        return from_relations(n, rels)
    raise MalformedSpec(f"unrecognised algebra spec {spec!r}")


def algebra_from_json(obj) -> NakayamaAlgebra:
    try:
        n = int(obj["n"])
        rels = [(int(s), int(t)) for s, t in obj.get("relations", [])]
    except (KeyError, TypeError, ValueError, AttributeError):
        raise MalformedSpec(f"bad algebra JSON: {obj!r}") from None
    return from_relations(n, rels)
