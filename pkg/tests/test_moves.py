import pytest

from nakayama.algebra import enumerate_algebras, from_relations, parse_algebra, rad_power_algebra
from nakayama.coxeter import coxeter
from nakayama.errors import (
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
from nakayama.moves import (
    antichain_reduce,
    apply_chain,
    apply_move,
    insert_vertex,
    left_mutation,
    parse_chain,
    remove_vertex,
    right_mutation,
    strip_length_two,
)

from golden import CHAIN_A13, CHAIN_TO_A11_5


def rels(a):
    return [tuple(r) for r in a.relations]


@pytest.mark.parametrize("chain", [CHAIN_TO_A11_5, CHAIN_A13], ids=["to_rad5", "a13"])
def test_golden_chains(chain):
    start, steps = chain
    records = apply_chain(parse_algebra(start), [m for m, _ in steps])
    assert [rels(r.output) for r in records] == [r for _, r in steps]
    assert all(r.derived_equivalence for r in records)


def test_chain_ends_at_radical_power():
    start, steps = CHAIN_TO_A11_5
    out = apply_chain(parse_algebra(start), [m for m, _ in steps])[-1].output
    assert out == rad_power_algebra(11, 5)


@pytest.mark.parametrize("chain", [CHAIN_TO_A11_5, CHAIN_A13], ids=["to_rad5", "a13"])
def test_coxeter_invariant_along_chains(chain):
    start, steps = chain
    a = parse_algebra(start)
    poly = coxeter(a).coxeter_polynomial
    for rec in apply_chain(a, [m for m, _ in steps]):
        assert coxeter(rec.output).coxeter_polynomial == poly


def test_strip_length_two_preserves_coxeter():
    for a in enumerate_algebras(7):
        b = strip_length_two(a)
        assert all(r.length != 2 for r in b.relations)
        assert coxeter(a).coxeter_polynomial == coxeter(b).coxeter_polynomial


def test_all_legal_mutations_preserve_coxeter():
    seen = 0
    for a in enumerate_algebras(8):
        poly = coxeter(a).coxeter_polynomial
        for r in a.relations:
            for move in (lambda: left_mutation(a, r.end), lambda: right_mutation(a, r.start)):
                try:
                    b = move()
                except (MissingNeighborRelation, BlockedByRelation):
                    continue
                seen += 1
                assert coxeter(b).coxeter_polynomial == poly
    assert seen > 100


def test_mutation_preconditions():
    a = parse_algebra("n=11;rels=1-5,2-8,5-11")
    with pytest.raises(NoRelationEndingAt):
        left_mutation(a, 7)
    with pytest.raises(NoRelationStartingAt):
        right_mutation(a, 3)
    with pytest.raises(MissingNeighborRelation):
        left_mutation(from_relations(9, [(3, 6)]), 6)
    with pytest.raises(BlockedByRelation):
        left_mutation(from_relations(9, [(1, 4), (3, 6)]), 4)


def test_insert_none_lengthens_crossing_relations():
    a = rad_power_algebra(11, 4)
    b = insert_vertex(a, 3, "none")
    assert b.n == 12
    assert (1, 6) in rels(b) and (5, 9) in rels(b) and (4, 8) not in rels(b)


def test_insert_at_front_with_relation():
    b = insert_vertex(rad_power_algebra(11, 5), 0, "rel-to=5")
    assert b == rad_power_algebra(12, 5)


def test_insert_descriptor_errors():
    a = rad_power_algebra(6, 3)
    with pytest.raises(IllegalExtensionDescriptor):
        insert_vertex(a, 2, "bogus")
    with pytest.raises(IllegalExtensionDescriptor):
        insert_vertex(a, 0, "rel-from=2")
    with pytest.raises(IllegalExtensionDescriptor):
        insert_vertex(a, 6, "rel-to=2")
    with pytest.raises(VertexOutOfRange):
        insert_vertex(a, 9)


def test_insert_retargets():
    a = from_relations(8, [(2, 5)])
    assert rels(insert_vertex(a, 4, "end-star")) == [(2, 5)]
    assert rels(insert_vertex(a, 2, "start-star")) == [(3, 6)]


def test_remove_then_insert_round_trip():
    a = rad_power_algebra(9, 4)
    b = insert_vertex(a, 4, "none")
    assert remove_vertex(b, 5) == a


def test_remove_errors():
    with pytest.raises(ExtensionFallsOffQuiver):
        remove_vertex(from_relations(5, [(2, 5)]), 5)
    with pytest.raises(ExtensionFallsOffQuiver):
        remove_vertex(from_relations(5, [(1, 4)]), 1)
    with pytest.raises(ArrowVanishes):
        remove_vertex(from_relations(5, [(2, 4)]), 3)


def test_antichain_reduce_drops_longer_paths():
    assert antichain_reduce([(1, 5), (2, 4), (2, 4)]) == [(2, 4)]


def test_move_strings():
    a = rad_power_algebra(11, 5)
    assert apply_move(a, "strip2").output == a
    assert apply_move(a, "rm:6").kind == "rm"
    assert not apply_move(a, "ins:0:rel-to=5").derived_equivalence
    assert parse_chain(" L:8, R:2 ,") == ["L:8", "R:2"]
    for bad in ("X:1", "L:x", "ins:y:none"):
        with pytest.raises(MalformedSpec):
            apply_move(a, bad)
