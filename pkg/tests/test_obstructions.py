import json

import pytest

from nakayama.algebra import enumerate_algebras, from_relations, hereditary, parse_algebra, rad_power_algebra
from nakayama.complexes import stalk
from nakayama.derived import hom_dim, two_strand_complex
from nakayama.errors import OutOfTable, PowerBelowThree
from nakayama.obstructions import (
    SEED_CERTIFICATES,
    CoarseFineCone,
    Derivation,
    Inconclusive,
    PatternOverlapSix,
    PatternSandwich,
    TauPeriodic,
    ThreeBlocks,
    battery,
    certificate_from_json,
    coarse_fine_radical_lengths,
    coarse_fine_sequences,
    coxeter_candidates,
    hs_derivation,
    hs_in_table,
    pattern_overlap_six,
    pattern_sandwich,
    pattern_three_blocks,
    tau_orbit_test,
)

from golden import A9, A10_DOUBLE, A10_DOUBLE_PRIME, A10_SINGLE, A11_TWO, A13_TWO, SIMPLEMINDED

FINAL_EXAMPLE = "n=16;rels=1-5,6-10,8-11,12-15,13-16"


# -- coarse / fine ------------------------------------------------------------------

def test_simpleminded_sequences_fire():
    a = parse_algebra(SIMPLEMINDED)
    res = coarse_fine_sequences(a)
    assert res.c == (10, 9, 6, 3) and res.f == (10, 8, 7, 5, 4, 2)
    assert res.fires and res.intertwine_ok
    cert = res.certificate()
    assert cert.to_json() == {"kind": "coarse_fine", "c": [10, 9, 6, 3], "f": [10, 8, 7, 5, 4, 2]}
    assert cert.verify(a)


def test_simpleminded_path_in_derived_category():
    a = parse_algebra(SIMPLEMINDED)
    x = two_strand_complex(a, (10, 9, 6, 3, 1), (10, 8, 7, 5, 4, 2), lo=0)
    assert hom_dim(x, x) == 1                       # End = k, so indecomposable
    assert hom_dim(stalk(a, 1, -1), x) >= 1         # P_1 sits inside in degree -1
    assert hom_dim(x, stalk(a, 1, 0)) >= 1          # and X maps onto P_1 in degree 0


def test_a9_does_not_fire():
    res = coarse_fine_sequences(parse_algebra(A9))
    assert res.c == (9, 8, 5, 2) and res.f == (9, 7, 6, 4, 3)
    assert not res.fires


def test_inapplicable_without_long_relations():
    assert coarse_fine_sequences(hereditary(5)) is None
    assert coarse_fine_sequences(parse_algebra("n=5;rels=1-3,3-5")) is None


def test_formula_agreement():
    for m in range(3, 8):
        for n in range(m + 1, 25):
            res = coarse_fine_sequences(rad_power_algebra(n, m))
            assert (res.l_c, res.l_f) == coarse_fine_radical_lengths(n, m), (n, m)


def test_closed_form_examples():
    assert coarse_fine_radical_lengths(14, 3) == (7, 9)
    assert coarse_fine_radical_lengths(10, 4) == (4, 5)
    assert coarse_fine_radical_lengths(11, 5) == (4, 4)
    with pytest.raises(PowerBelowThree):
        coarse_fine_radical_lengths(10, 2)
    with pytest.raises(PowerBelowThree):
        coarse_fine_radical_lengths(4, 5)


def test_rad3_at_14_lacks_the_closing_map():
    a = rad_power_algebra(14, 3)
    res = coarse_fine_sequences(a)
    assert (res.l_c, res.l_f) == (7, 9) and res.intertwine_ok and not res.fires
    assert "end(b)" in res.diagnostic
    # the same failure occurs at n = 8, where every algebra is piecewise hereditary
    b = from_relations(8, [(2, 5), (3, 6), (5, 8)])
    res8 = coarse_fine_sequences(b)
    assert res8.intertwine_ok and not res8.fires
    # no projective stalk receives a nonzero map from the last cone term
    x = two_strand_complex(b, res8.c + (1,), res8.f[:res8.l_c + 2], lo=0)
    assert all(hom_dim(x, stalk(b, j, 0)) == 0 for j in range(1, b.n + 1))


@pytest.mark.parametrize("n", [16, 18, 20])
def test_rad3_fires_further_out(n):
    a = rad_power_algebra(n, 3)
    res = coarse_fine_sequences(a)
    assert res.fires and res.certificate().verify(a)


def test_coarse_fine_sound_through_n10():
    fired = [a.pretty() for n in range(3, 11) for a in enumerate_algebras(n)
             if (r := coarse_fine_sequences(a)) is not None and r.fires]
    assert fired == ["<10; (1,4), (2,5), (4,7), (5,8), (7,10)>"]


def test_forged_coarse_fine_certificate_rejected():
    a = parse_algebra(SIMPLEMINDED)
    assert not CoarseFineCone((10, 9, 6, 3), (10, 8, 7, 5, 4)).verify(a)
    assert not CoarseFineCone((10, 9, 6, 3), (10, 8, 7, 5, 4, 2)).verify(rad_power_algebra(10, 3))


# -- patterns -------------------------------------------------------------------------

def test_overlap_six():
    assert pattern_overlap_six(parse_algebra(A13_TWO)) == PatternOverlapSix((1, 10), (4, 13))
    c = pattern_overlap_six(parse_algebra("n=16;rels=1-11,2-13,5-14,9-15,12-16"))
    assert (tuple(c.alpha), tuple(c.beta)) == ((1, 11), (5, 14))
    assert pattern_overlap_six(rad_power_algebra(11, 5)) is None


def test_sandwich():
    c = pattern_sandwich(parse_algebra(A9))
    assert [tuple(r) for r in (c.alpha, c.beta, c.left, c.right)] == [(3, 6), (4, 7), (1, 4), (6, 9)]
    c = pattern_sandwich(parse_algebra(FINAL_EXAMPLE))
    assert [tuple(r) for r in (c.alpha, c.beta, c.left, c.right)] == [(6, 10), (8, 11), (1, 5), (12, 15)]
    for a in enumerate_algebras(8):
        assert pattern_sandwich(a) is None


def test_three_blocks():
    c = pattern_three_blocks(parse_algebra(FINAL_EXAMPLE))
    assert c.to_json() == {"kind": "three_blocks", "left": [[1, 5]],
                           "middle": [[6, 10], [8, 11]], "right": [[12, 15]]}
    c = pattern_three_blocks(parse_algebra(A9))
    assert ([tuple(r) for r in c.left], [tuple(r) for r in c.middle], [tuple(r) for r in c.right]) \
        == ([(1, 4)], [(3, 6), (4, 7)], [(6, 9)])
    assert pattern_three_blocks(hereditary(9)) is None


def test_patterns_silent_through_n8():
    for n in range(2, 9):
        for a in enumerate_algebras(n):
            assert pattern_overlap_six(a) is None
            assert pattern_three_blocks(a) is None


def test_pattern_certificates_verify():
    for spec in (A9, FINAL_EXAMPLE, A13_TWO):
        a = parse_algebra(spec)
        for test in (pattern_overlap_six, pattern_sandwich, pattern_three_blocks):
            c = test(a)
            if c is not None:
                assert c.verify(a)
                assert certificate_from_json(json.loads(json.dumps(c.to_json()))) == c


def test_pattern_certificate_rejects_wrong_algebra():
    c = pattern_sandwich(parse_algebra(A9))
    assert not c.verify(rad_power_algebra(9, 3))


# -- tau orbits -------------------------------------------------------------------------

@pytest.mark.parametrize("spec,start,bound,expected", [
    ("radpow=11,5", 1, 20, TauPeriodic(1, 15, 1)),
    (A9, 2, 10, TauPeriodic(2, 4, 1)),
    (A10_SINGLE, 3, 10, TauPeriodic(3, 7, 2)),
    (A11_TWO, 6, 10, TauPeriodic(6, 4, 1)),
])
def test_tau_orbit_examples(spec, start, bound, expected):
    assert tau_orbit_test(parse_algebra(spec), starts=[start], max_steps=bound) == expected


def test_tau_orbit_bound_too_small():
    res = tau_orbit_test(rad_power_algebra(11, 5), starts=[1], max_steps=14)
    assert isinstance(res, Inconclusive)
    assert res.to_json()["orbits"][0]["start"] == 1


def test_tau_orbit_rejects_bad_bound():
    with pytest.raises(ValueError):
        tau_orbit_test(rad_power_algebra(5, 3), max_steps=0)


def test_coxeter_filter():
    a = rad_power_algebra(11, 5)
    assert 15 in coxeter_candidates(a, 1, 20)
    assert coxeter_candidates(hereditary(4), 1, 3) == []


def test_hereditary_orbits_are_inconclusive():
    res = tau_orbit_test(hereditary(6))
    assert isinstance(res, Inconclusive) and len(res.logs) == 6


def test_tau_certificate_forgeries():
    a = rad_power_algebra(11, 5)
    assert TauPeriodic(1, 15, 1).verify(a)
    assert not TauPeriodic(1, 15, 2).verify(a)
    assert not TauPeriodic(1, 14, 1).verify(a)
    assert not TauPeriodic(1, 0, 1).verify(a)


# -- the radical power table ---------------------------------------------------------

def test_hs_examples():
    d = hs_derivation(13, 8)
    assert d.seed == "radpow=12,7" and d.moves == ("ins:6:none",)
    d = hs_derivation(12, 5)
    assert d.seed == "radpow=11,5" and d.moves == ("ins:0:rel-to=5",)
    with pytest.raises(OutOfTable):
        hs_derivation(10, 4)
    with pytest.raises(OutOfTable):
        hs_derivation(12, 8)


def test_hs_region():
    assert hs_in_table(12, 3) and not hs_in_table(11, 3)
    assert hs_in_table(11, 4) and hs_in_table(11, 5) and not hs_in_table(11, 6)
    assert hs_in_table(13, 8) and hs_in_table(25, 20) and not hs_in_table(24, 20)
    assert not hs_in_table(30, 2)


def test_hs_replays_exactly():
    for r in range(3, 16):
        for n in range(r + 1, 21):
            if hs_in_table(n, r):
                d = hs_derivation(n, r)
                assert d.replay() == rad_power_algebra(n, r)
                assert d.verify(rad_power_algebra(n, r))


def test_derivation_rejects_derived_moves_and_wrong_targets():
    seed = "radpow=11,5"
    assert not Derivation(seed, ("ins:0:rel-to=5",), SEED_CERTIFICATES[seed]).verify(rad_power_algebra(13, 5))
    assert not Derivation(seed, ("L:6",), SEED_CERTIFICATES[seed]).verify(rad_power_algebra(11, 5))
    assert not Derivation(seed, (), TauPeriodic(1, 14, 1)).verify(rad_power_algebra(11, 5))


def test_seed_certificates_hold():
    for spec, cert in SEED_CERTIFICATES.items():
        assert cert.verify(parse_algebra(spec)), spec


# -- battery ----------------------------------------------------------------------------

def test_battery_a9():
    v = battery(parse_algebra(A9))
    kinds = {c.kind for c in v.certificates}
    assert v.status == "non_piecewise_hereditary"
    assert TauPeriodic(2, 4, 1) in v.certificates and "sandwich" in kinds


def test_battery_hereditary():
    v = battery(hereditary(7))
    assert v.status == "inconclusive" and not v.flagged


def test_battery_rad_12_6():
    v = battery(rad_power_algebra(12, 6))
    assert TauPeriodic(1, 21, 1) in v.certificates


@pytest.mark.parametrize("spec", [A10_DOUBLE, A10_DOUBLE_PRIME])
def test_a10_double(spec):
    a = parse_algebra(spec)
    assert tau_orbit_test(a, starts=[2], max_steps=12) == TauPeriodic(2, 9, 1)


def test_verdict_json_replays():
    v = battery(parse_algebra(A9))
    a = parse_algebra(A9)
    for obj in v.to_json()["certificates"]:
        assert certificate_from_json(obj).verify(a)


def test_certificate_json_forms():
    objs = [
        {"kind": "tau_periodic", "start": 1, "power": 15, "shift": 1},
        {"kind": "coarse_fine", "c": [10, 9, 6, 3], "f": [10, 8, 7, 5, 4, 2]},
        hs_derivation(13, 8).to_json(),
    ]
    for obj in objs:
        assert certificate_from_json(obj).to_json() == obj
    assert isinstance(certificate_from_json(objs[2]), Derivation)
