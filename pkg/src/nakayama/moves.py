"""Combinatorial moves between Nakayama algebras.

Three moves preserve the derived equivalence class: deleting length-two
relations, and the double tilting mutations ``L_t`` / ``R_s``.  Two more,
vertex insertion and vertex removal, transport non-piecewise-heredity in one
direction (insertion forwards, removal backwards).

Moves are written as short strings so chains can be stored and replayed::

    L:8   R:2   strip2   ins:6:none   ins:0:rel-to=5   rm:7
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .algebra import NakayamaAlgebra, Relation, from_relations
from .errors import (
    AlgebraError,
    ArrowVanishes,
    BlockedByRelation,
    ExtensionFallsOffQuiver,
    IllegalExtensionDescriptor,
    MalformedSpec,
    MissingNeighborRelation,
    NoRelationEndingAt,
    NoRelationStartingAt,
    VertexOutOfRange,
)

DERIVED_KINDS = ("strip2", "L", "R")


def antichain_reduce(rels: Iterable[tuple[int, int]]) -> list[Relation]:
    """Drop every relation whose path contains another relation's path."""
    uniq = sorted({Relation(*r) for r in rels})
    return [r for r in uniq if not any(o != r and r.contains(o) for o in uniq)]


def strip_length_two(algebra: NakayamaAlgebra) -> NakayamaAlgebra:
    return NakayamaAlgebra(algebra.n, tuple(r for r in algebra.relations if r.length != 2))


def left_mutation(algebra: NakayamaAlgebra, t: int) -> NakayamaAlgebra:
    """``L_t``: double left mutation at the relation ending in ``t``."""
    r = algebra.relation_ending_at(t)
    if r is None:
        raise NoRelationEndingAt(f"no relation ends at {t}")
    s = r.start
    if s != 1 and algebra.relation_starting_at(s - 1) is None:
        raise MissingNeighborRelation(f"L_{t}: no relation starts at {s - 1}")
    if algebra.relation_starting_at(t - 1) is not None:
        raise BlockedByRelation(f"L_{t}: a relation starts at {t - 1}")
    out = []
    for u, v in algebra.relations:
        if (u, v) == r:
            out.append(r)
            continue
        if s < u < t:
            u += 1
        if s < v < t:
            v += 1
        out.append((u, v))
    if t < algebra.n:
        out.append((s + 1, t + 1))
    return from_relations(algebra.n, antichain_reduce(out))


def right_mutation(algebra: NakayamaAlgebra, s: int) -> NakayamaAlgebra:
    """``R_s``: the dual of :func:`left_mutation`, at the relation starting in ``s``."""
    r = algebra.relation_starting_at(s)
    if r is None:
        raise NoRelationStartingAt(f"no relation starts at {s}")
    t = r.end
    if t != algebra.n and algebra.relation_ending_at(t + 1) is None:
        raise MissingNeighborRelation(f"R_{s}: no relation ends at {t + 1}")
    if algebra.relation_ending_at(s + 1) is not None:
        raise BlockedByRelation(f"R_{s}: a relation ends at {s + 1}")
    out = []
    for u, v in algebra.relations:
        if (u, v) == r:
            out.append(r)
            continue
        if s < v < t:
            v -= 1
        if s < u < t:
            u -= 1
        out.append((u, v))
    if s > 1:
        out.append((s - 1, t - 1))
    return from_relations(algebra.n, antichain_reduce(out))


# -- vertex insertion / removal ---------------------------------------------

INSERT_OPTIONS = ("none", "end-star", "start-star", "rel-from", "rel-to")


def parse_descriptor(text: str) -> tuple[str, int | None]:
    if text in ("none", "end-star", "start-star"):
        return text, None
    key, eq, val = text.partition("=")
    if eq and key in ("rel-from", "rel-to"):
        try:
            return key, int(val)
        except ValueError:
            pass
    raise IllegalExtensionDescriptor(f"unknown extension descriptor {text!r}")


def insert_vertex(algebra: NakayamaAlgebra, i: int, opts: str = "none") -> NakayamaAlgebra:
    """Insert a vertex ``*`` between old vertices ``i`` and ``i + 1``.

    ``opts`` selects one of the licensed relation choices (old vertex labels):

    ``none``        no new relation; relations crossing the gap gain an arrow
    ``end-star``    the relation ending at ``i + 1`` now ends at ``*``
    ``rel-from=x``  keep that relation and add ``x -> *`` with ``x`` before its start
    ``start-star``  the relation starting at ``i`` now starts at ``*``
    ``rel-to=x``    keep that relation and add ``* -> x`` with ``x`` after its end

    At the ends of the quiver (``i = 0`` or ``i = n``) any single relation
    through ``*`` is allowed: ``rel-to=x`` before vertex 1, ``rel-from=x``
    after vertex ``n``.
    """
    n = algebra.n
    if not (0 <= i <= n):
        raise VertexOutOfRange(f"insertion position {i} outside 0..{n}")
    kind, x = parse_descriptor(opts)
    if x is not None and not (1 <= x <= n):
        raise IllegalExtensionDescriptor(f"vertex {x} outside 1..{n}")
    star = i + 1

    def ren(v):
        return v if v <= i else v + 1

    rels = [(ren(u), ren(v)) for u, v in algebra.relations]
    interior = 0 < i < n
    if kind == "none":
        pass
    elif kind == "end-star":
        r = algebra.relation_ending_at(i + 1) if interior else None
        if r is None:
            raise IllegalExtensionDescriptor(f"no relation ends at {i + 1} to retarget")
        rels.remove((r.start, ren(r.end)))
        rels.append((r.start, star))
    elif kind == "start-star":
        r = algebra.relation_starting_at(i) if interior else None
        if r is None:
            raise IllegalExtensionDescriptor(f"no relation starts at {i} to retarget")
        rels.remove((r.start, ren(r.end)))
        rels.append((star, ren(r.end)))
    elif kind == "rel-from":
        if i == 0:
            raise IllegalExtensionDescriptor("nothing precedes a vertex inserted before 1")
        if interior:
            r = algebra.relation_ending_at(i + 1)
            if r is None or not x < r.start:
                raise IllegalExtensionDescriptor(
                    f"rel-from={x} needs a kept relation ending at {i + 1} starting after {x}")
        rels.append((x, star))
    elif kind == "rel-to":
        if i == n:
            raise IllegalExtensionDescriptor(f"nothing follows a vertex inserted after {n}")
        if interior:
            r = algebra.relation_starting_at(i)
            if r is None or not x > r.end:
                raise IllegalExtensionDescriptor(
                    f"rel-to={x} needs a kept relation starting at {i} ending before {x}")
        rels.append((star, ren(x)))
    try:
        return from_relations(n + 1, rels)
    except AlgebraError as exc:
        raise IllegalExtensionDescriptor(f"ins:{i}:{opts} gives no valid algebra: {exc}") from None


def remove_vertex(algebra: NakayamaAlgebra, i: int) -> NakayamaAlgebra:
    """Delete vertex ``i``, splicing its arrows and extending relations through it."""
    n = algebra.n
    if n < 2 or not (1 <= i <= n):
        raise VertexOutOfRange(f"cannot remove vertex {i} from {n} vertices")
    out = []
    for u, v in algebra.relations:
        if v == i:
            if i == n:
                raise ExtensionFallsOffQuiver(f"relation {u}-{v} cannot extend past {n}")
            v = i + 1
        if u == i:
            if i == 1:
                raise ExtensionFallsOffQuiver(f"relation {u}-{v} cannot extend before 1")
            u = i - 1
        u = u - 1 if u > i else u
        v = v - 1 if v > i else v
        if v - u < 2:
            raise ArrowVanishes(f"relation through {i} leaves a zero composite arrow")
        out.append((u, v))
    return from_relations(n - 1, antichain_reduce(out))


# -- move strings ---------------------------------------------------------------

@dataclass(frozen=True)
class MoveRecord:
    kind: str          # strip2 | L | R | ins | rm
    move: str          # the move string as applied
    input: NakayamaAlgebra
    output: NakayamaAlgebra

    @property
    def derived_equivalence(self) -> bool:
        return self.kind in DERIVED_KINDS


def _vertex_arg(move, text):
    try:
        return int(text)
    except ValueError:
        raise MalformedSpec(f"malformed move {move!r}") from None


def apply_move(algebra: NakayamaAlgebra, move: str) -> MoveRecord:
    move = move.strip()
    head, _, rest = move.partition(":")
    if move == "strip2":
        return MoveRecord("strip2", move, algebra, strip_length_two(algebra))
    if head == "L":
        out = left_mutation(algebra, _vertex_arg(move, rest))
    elif head == "R":
        out = right_mutation(algebra, _vertex_arg(move, rest))
    elif head == "rm":
        out = remove_vertex(algebra, _vertex_arg(move, rest))
    elif head == "ins":
        pos, _, desc = rest.partition(":")
        out = insert_vertex(algebra, _vertex_arg(move, pos), desc or "none")
    else:
        raise MalformedSpec(f"unknown move {move!r}")
    return MoveRecord(head, move, algebra, out)


def parse_chain(text: str) -> list[str]:
    return [m.strip() for m in text.split(",") if m.strip()]


def apply_chain(algebra: NakayamaAlgebra, moves) -> list[MoveRecord]:
    if isinstance(moves, str):
        moves = parse_chain(moves)
    records = []
    for m in moves:
        rec = apply_move(algebra, m)
        records.append(rec)
        algebra = rec.output
    return records
