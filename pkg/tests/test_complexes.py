from fractions import Fraction

import pytest

from nakayama import linalg
from nakayama.algebra import from_relations, rad_power_algebra
from nakayama.complexes import (
    ChainMap,
    PerfectComplex,
    complex_to_json,
    homology_dims,
    identity_map,
    mapping_cone,
    minimize,
    perfect_from_json,
    perfect_from_strands,
    render,
    resolve,
    shift,
    stalk,
    vertex_block,
)
from nakayama.derived import chain_map_space, resolve_complex, nakayama_functor
from nakayama.errors import NotAChainMap, NotAComplex, VertexOutOfRange


def square_is_zero(x) -> bool:
    """d^2 = 0 checked on the underlying vector spaces, vertex by vertex."""
    n = x.algebra.n
    for d in range(x.lo, x.hi - 1):
        for j in range(1, n + 1):
            b0, rows0, cols0 = vertex_block(x.diff(d), x.intervals(d), x.intervals(d + 1), j)
            b1, rows1, cols1 = vertex_block(x.diff(d + 1), x.intervals(d + 1), x.intervals(d + 2), j)
            if not rows0 or not cols0 or not rows1:
                continue
            prod = linalg.matmul(b1, b0)
            if any(any(v for v in row) for row in prod):
                return False
    return True


def test_engine_outputs_square_to_zero(corpus):
    for a, i, x in corpus:
        assert square_is_zero(x)


def test_non_complex_rejected():
    a = rad_power_algebra(5, 3)
    with pytest.raises(NotAComplex):
        PerfectComplex(a, 0, ((3,), (2,), (1,)), (((Fraction(1),),), ((Fraction(1),),)))
    with pytest.raises(NotAComplex):
        PerfectComplex(a, 0, ((1,), (2,)), (((Fraction(1),),),))
    with pytest.raises(VertexOutOfRange):
        stalk(a, 6)


def test_minimize_removes_contractible_cone():
    a = rad_power_algebra(7, 3)
    x = perfect_from_strands(a, -2, [(7,), (5,), (4,)])
    assert minimize(mapping_cone(identity_map(x))).is_zero()


def test_minimize_preserves_homology(corpus):
    for a, i, x in corpus[:40]:
        v0, basis = chain_map_space(x, x)
        for vec in basis[:2]:
            maps = {}
            for (d, b, c), val in zip(v0, vec):
                m = maps.setdefault(d, [[Fraction(0)] * len(x.term(d)) for _ in x.term(d)])
                m[b][c] = val
            f = ChainMap(x, x, {d: tuple(map(tuple, m)) for d, m in maps.items()})
            cone = mapping_cone(f)
            small = minimize(cone)
            assert small.is_minimal()
            assert homology_dims(small) == homology_dims(cone)


def test_resolve_complex_preserves_homology(corpus):
    for a, i, x in corpus[:60]:
        nx = nakayama_functor(minimize(x))
        px = resolve_complex(nx)
        assert homology_dims(px) == homology_dims(nx)
        assert square_is_zero(px)


def test_resolve_simple_module():
    a = rad_power_algebra(5, 3)
    r = resolve(a, (1, 1))
    assert r.terms == ((3,), (2,), (1,)) or r.term(0) == (1,)
    assert homology_dims(r) == {0: (1, 0, 0, 0, 0)}


def test_shift_and_render():
    a = rad_power_algebra(5, 3)
    x = perfect_from_strands(a, 0, [(2,), (1,)])
    y = shift(x, 1)
    assert y.lo == -1 and y.diffs[0][0][0] == -1
    assert render(x) == "deg 0: P2 | deg 1: P1"
    assert render(PerfectComplex(a)) == "0"


def test_json_round_trip(corpus):
    for a, i, x in corpus[:30]:
        assert perfect_from_json(a, complex_to_json(x)) == x


def test_bad_chain_map():
    a = rad_power_algebra(5, 3)
    x = perfect_from_strands(a, 0, [(2,), (1,)])
    y = stalk(a, 2)
    # projecting onto the first term is a chain map, including it is not
    assert not mapping_cone(ChainMap(x, y, {0: ((Fraction(1),),)})).is_zero()
    with pytest.raises(NotAChainMap):
        mapping_cone(ChainMap(y, x, {0: ((Fraction(1),),)}))


def test_homology_of_projective_stalk():
    a = from_relations(4, [(1, 3)])
    assert homology_dims(stalk(a, 1)) == {0: (1, 1, 0, 0)}
