import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nakayama.algebra import (
    NakayamaAlgebra,
    catalan,
    enumerate_algebras,
    enumerate_kupisch,
    from_kupisch,
    from_relations,
    hereditary,
    parse_algebra,
    rad_power_algebra,
    to_kupisch,
)
from nakayama.errors import (
    InvalidKupischSeries,
    LengthBelowTwo,
    MalformedSpec,
    NestedOrDuplicateRelation,
    PowerBelowTwo,
    RelationOutOfRange,
)


def brute_kupisch(n):
    """All admissible Kupisch series by exhaustive product search."""
    out = []
    for seq in itertools.product(range(1, n + 1), repeat=n):
        if seq[-1] != 1:
            continue
        if any(seq[i] < 2 for i in range(n - 1)):
            continue
        if any(seq[i] > seq[i + 1] + 1 for i in range(n - 1)):
            continue
        out.append(seq)
    return sorted(out)


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_matches_brute_force(n):
    assert sorted(enumerate_kupisch(n)) == brute_kupisch(n)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 5), (5, 14), (6, 42), (7, 132), (8, 429), (9, 1430)])
def test_catalan_counts(n, count):
    assert sum(1 for _ in enumerate_algebras(n)) == count == catalan(n - 1)


def test_enumeration_is_lexicographic_and_distinct():
    seqs = [a.kupisch for a in enumerate_algebras(7)]
    assert seqs == sorted(seqs)
    assert len(set(seqs)) == len(seqs)


def test_radical_power_kupisch():
    a = rad_power_algebra(5, 3)
    assert a.kupisch == (3, 3, 3, 2, 1)
    assert [tuple(r) for r in a.relations] == [(1, 4), (2, 5)]


def test_relation_errors():
    with pytest.raises(LengthBelowTwo):
        from_relations(5, [(1, 2)])
    with pytest.raises(NestedOrDuplicateRelation):
        from_relations(5, [(1, 4), (2, 4)])
    with pytest.raises(RelationOutOfRange):
        from_relations(5, [(3, 6)])
    with pytest.raises(PowerBelowTwo):
        rad_power_algebra(5, 1)
    with pytest.raises(InvalidKupischSeries):
        from_kupisch((2, 1, 1))


def test_hom_nonzero_follows_interval_rule():
    a = rad_power_algebra(6, 3)
    for x in range(1, 7):
        for y in range(1, 7):
            assert a.hom_nonzero(x, y) == (y <= x <= a.ends[y])


@pytest.mark.parametrize("spec", [
    "n=9;rels=1-4,3-6,4-7,6-9",
    "kupisch=3,4,3,3,3,2,2,1",
    "radpow=11,5",
    '{"n": 6, "relations": [[1, 4], [3, 6]]}',
    "n=3;rels=",
])
def test_spec_forms_round_trip(spec):
    a = parse_algebra(spec)
    assert parse_algebra(a.encode()) == a
    assert parse_algebra(str(to_kupisch(a))) == a
    assert parse_algebra(json.dumps(a.to_json())) == a


def test_spec_from_file(tmp_path):
    p = tmp_path / "a.json"
    p.write_text(json.dumps(rad_power_algebra(7, 3).to_json()))
    assert parse_algebra(f"@{p}") == rad_power_algebra(7, 3)


@pytest.mark.parametrize("bad", ["", "n=x", "radpow=3", "kupisch=a", "n=4;foo=1", "n=5;rels=1+3", "@/nonexistent.json", "{bad"])
def test_malformed_specs(bad):
    with pytest.raises(MalformedSpec):
        parse_algebra(bad)


def test_hereditary_has_no_relations():
    a = hereditary(5)
    assert a.is_hereditary and a.kupisch == (5, 4, 3, 2, 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.data())
def test_kupisch_round_trip(n, data):
    algs = list(enumerate_algebras(n))
    a = data.draw(st.sampled_from(algs))
    assert from_kupisch(a.kupisch) == a
    assert isinstance(a, NakayamaAlgebra)
    # relations form an antichain of paths of length >= 2
    for r in a.relations:
        assert r.length >= 2
        assert not any(o != r and r.contains(o) for o in a.relations)
