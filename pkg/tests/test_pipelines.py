"""Tests for the parity-pipeline involutions: worked fixtures for the
triple encoding and the full maps, template fixed points, and exhaustive
law sweeps on the small parameter grid."""

import pytest

from qgordon import partitions, pipelines, series
from qgordon.gordon import ConsistencyError, FixedPoint
from qgordon.partitions import ParameterError
from qgordon.pipelines import (
    PartitionTriple,
    canonical_fixed_form,
    canonicalize_fixed,
    check_pipeline,
    enumerate_ground,
    exceptional_condition,
    in_ground,
    inner_params,
    involute_pipeline,
    pipeline_e_factor,
    pipeline_fixed_gf,
    pipeline_fixed_triple,
    redistribute,
    to_triple,
    triple_sign,
    triple_weight,
    un_transform,
)

GRID = [
    ("EE", 2, 2), ("EE", 4, 2), ("EE", 4, 4),
    ("OO", 3, 1), ("OO", 3, 3), ("OO", 5, 3), ("OO", 5, 5),
    ("OE", 3, 2), ("OE", 5, 2), ("OE", 5, 4),
]


def test_check_pipeline():
    check_pipeline("EE", 4, 2)
    check_pipeline("OO", 3, 1)
    check_pipeline("OE", 5, 4)
    for pl, k, a in [("EE", 3, 2), ("EE", 4, 3), ("OO", 4, 3),
                     ("OO", 3, 2), ("OE", 4, 2), ("OE", 3, 3)]:
        with pytest.raises(ParameterError):
            check_pipeline(pl, k, a)
    with pytest.raises(ParameterError):
        check_pipeline("XX", 2, 2)
    with pytest.raises(ParameterError):
        check_pipeline("EE", 2, 4)  # a > k


def test_inner_params():
    assert inner_params("EE", 6, 6) == (3, 3)
    assert inner_params("EE", 2, 2) == (1, 1)
    assert inner_params("OO", 9, 9) == (4, 4)
    assert inner_params("OO", 3, 1) == (1, 0)
    assert inner_params("OE", 7, 6) == (3, 3)


def test_ground_membership():
    assert in_ground(((10, 8, 5), (5, 4, 4, 4, 4)), "EE", 6, 6)
    # odd part in A is fine for EE, not for OO/OE
    assert in_ground(((5,), ()), "EE", 6, 6)
    assert not in_ground(((5,), ()), "OO", 5, 5)
    assert not in_ground(((5,), ()), "OE", 5, 4)
    # B parity: even part with odd multiplicity leaves W
    assert not in_ground(((), (2,)), "EE", 4, 4)
    assert in_ground(((), (2, 2)), "EE", 4, 4)
    # Wbar instead pairs the odd parts
    assert not in_ground(((), (1,)), "OE", 5, 4)
    assert in_ground(((), (1, 1)), "OE", 5, 4)
    # window conditions still apply
    assert not in_ground(((), (1, 1, 1, 1)), "OO", 3, 3)


def test_enumerate_ground_counts():
    # sizes factor: distinct-A count times the B-family count
    for pl, k, a in GRID:
        fam = pipelines._B_FAMILY[pl]
        par = pipelines._A_PARITY[pl]
        for w in range(8):
            got = len(enumerate_ground(pl, k, a, w))
            want = sum(
                len(partitions.enumerate_distinct(wa, par))
                * partitions.count_family(fam, k, a, w - wa)
                for wa in range(w + 1))
            assert got == want
    assert enumerate_ground("EE", 2, 2, 0) == [((), ())]


def test_to_triple_fixtures():
    t = to_triple(((10, 8, 5), (5, 4, 4, 4, 4)), "EE", 6, 6)
    assert t == PartitionTriple((10, 8), (8, 8), (), (10,))
    t = to_triple(((10, 2), (4, 4, 4, 4, 4, 2, 2, 2, 1, 1)), "OE", 7, 6)
    assert t == PartitionTriple((10, 2), (8, 8, 4, 2), (4, 2), ())
    for pl, k, a in GRID:
        assert to_triple(((), ()), pl, k, a) == PartitionTriple((), (), (), ())
    with pytest.raises(ParameterError):
        to_triple(((5,), ()), "OO", 3, 3)


def test_to_triple_merge_level():
    # merge pairs only; redistribution is a separate step
    B = (9,) + (7,) * 8 + (5,) * 8 + (3,) * 8 + (1,) * 8
    t = to_triple(((16, 14, 12, 10), B), "OO", 9, 9)
    assert t.B == (14,) * 4 + (10,) * 4 + (6,) * 4 + (2,) * 4
    assert t.D == (9,)
    assert t.E == ()


def test_round_trip_exhaustive():
    for pl, k, a in GRID:
        for w in range(13):
            for s in enumerate_ground(pl, k, a, w):
                t = to_triple(s, pl, k, a)
                assert un_transform(t, pl) == s
                assert triple_weight(t) == w
                # redistribution never disturbs the decoding
                if pl != "EE":
                    assert un_transform(redistribute(t, pl), pl) == s


def test_redistribute_fixture():
    C = (14,) * 4 + (10,) * 4 + (6,) * 4 + (2,) * 4
    t = PartitionTriple((16, 14, 12, 10), C, (9,), ())
    out = redistribute(t, "OO")
    assert out.B == (14, 14, 14, 10, 10, 10, 6, 6, 6, 2, 2, 2)
    assert out.D == (9, 7, 7, 5, 5, 3, 3, 1, 1)
    assert triple_weight(out) == triple_weight(t)
    # stable when every splittable half is already present
    t = PartitionTriple((10, 2), (8, 8, 4, 2), (4, 2), ())
    assert redistribute(t, "OE") == t
    # nothing of the splitting residue: unchanged
    t = PartitionTriple((), (8, 4), (1,), ())
    assert redistribute(t, "OO") == t
    with pytest.raises(ParameterError):
        redistribute(PartitionTriple((), (), (), ()), "EE")


def test_exceptional_condition_fixtures():
    assert exceptional_condition(
        PartitionTriple((10, 8), (8, 8), (), (10,)), "EE", 6, 6)
    assert exceptional_condition(
        PartitionTriple((10, 2), (8, 8, 4, 2), (4, 2), ()), "OE", 7, 6)
    # dominant middle part: the top-level move goes the other way
    assert not exceptional_condition(
        PartitionTriple((2,), (8,), (1,), ()), "OO", 3, 3)
    assert not exceptional_condition(
        PartitionTriple((), (2,), (), ()), "OO", 3, 3)


def test_exceptional_condition_ignores_merge_level():
    # the test must not depend on whether redistribute ran already
    for pl, k, a in [("OO", 3, 3), ("OO", 5, 3), ("OE", 3, 2), ("OE", 5, 4)]:
        for w in range(12):
            for s in enumerate_ground(pl, k, a, w):
                t = to_triple(s, pl, k, a)
                assert exceptional_condition(t, pl, k, a) == \
                    exceptional_condition(redistribute(t, pl), pl, k, a)


def test_involute_worked_chains():
    x = ((10, 8, 5), (5, 4, 4, 4, 4))
    y = ((10, 5), (5, 5, 5, 4, 4, 3, 3))
    assert involute_pipeline(x, "EE", 6, 6) == y
    assert involute_pipeline(y, "EE", 6, 6) == x
    x = ((10, 2), (4, 4, 4, 4, 4, 2, 2, 2, 1, 1))
    y = ((10,), (5, 5, 4, 4, 4, 2, 2, 2, 1, 1))
    assert involute_pipeline(x, "OE", 7, 6) == y
    assert involute_pipeline(y, "OE", 7, 6) == x
    B = (9,) + (7,) * 8 + (5,) * 8 + (3,) * 8 + (1,) * 8
    assert involute_pipeline(((16, 14, 12, 10), B), "OO", 9, 9) == \
        FixedPoint(1, 4)
    for pl, k, a in GRID:
        assert involute_pipeline(((), ()), pl, k, a) == FixedPoint(0, 0)
    with pytest.raises(ParameterError):
        involute_pipeline(((3,), ()), "OO", 3, 3)


def test_fixed_templates():
    t = pipeline_fixed_triple("EE", 1, 1, 6, 6)
    assert t == PartitionTriple((4,), (2, 2), (), ())
    assert triple_weight(t) == 8
    t = pipeline_fixed_triple("OO", 1, 4, 9, 9)
    assert t.A == (16, 14, 12, 10)
    assert t.B == (14, 14, 14, 10, 10, 10, 6, 6, 6, 2, 2, 2)
    assert t.D == (7, 5, 3, 1)
    assert triple_weight(t) == 164
    for pl, k, a in GRID:
        if pl == "OO" and a == 1:
            with pytest.raises(ParameterError):
                pipeline_fixed_triple(pl, 1, 1, k, a)
            continue
        assert pipeline_fixed_triple(pl, 0, 0, k, a) == ((), (), (), ())
        for n in range(1, 5):
            w1 = triple_weight(pipeline_fixed_triple(pl, 1, n, k, a))
            w2 = triple_weight(pipeline_fixed_triple(pl, 2, n, k, a))
            assert w1 == (k + 1) * n * n + (k + 1 - a) * n
            assert w2 == (k + 1) * n * n - (k + 1 - a) * n
            assert w1 - w2 == 2 * (k + 1 - a) * n
            assert len(pipeline_fixed_triple(pl, 1, n, k, a).A) == n
    with pytest.raises(ParameterError):
        pipeline_fixed_triple("EE", 3, 1, 4, 4)
    with pytest.raises(ParameterError):
        pipeline_fixed_triple("EE", 0, 2, 4, 4)


def test_fixed_templates_are_fixed():
    # each template triple decodes to a ground pair that the full map
    # reports as fixed with the same index
    for pl, k, a in GRID:
        if pl == "OO" and a == 1:
            continue
        for family in (1, 2):
            for n in (1, 2):
                t = pipeline_fixed_triple(pl, family, n, k, a)
                pair = un_transform(t, pl)
                assert in_ground(pair, pl, k, a)
                assert involute_pipeline(pair, pl, k, a) == FixedPoint(family, n)
                assert canonicalize_fixed(t, pl, k, a) == (family, n, ())


def test_canonicalize_fixed_fixture():
    C = (14, 14, 14, 10, 10, 10, 6, 6, 6, 2, 2, 2)
    t = PartitionTriple((16, 14, 12, 10), C, (9, 7, 7, 5, 5, 3, 3, 1, 1), ())
    assert canonicalize_fixed(t, "OO", 9, 9) == (1, 4, (9, 7, 5, 3, 1))
    form = canonical_fixed_form("OO", 1, 4, (9, 7, 5, 3, 1), 9, 9)
    assert form.A == (16, 14, 12, 10)
    assert form.B == (7,) * 7 + (5,) * 7 + (3,) * 7 + (1,) * 7
    assert form.E == (9, 7, 5, 3, 1)
    assert triple_weight(form) == 189
    # EE fixed triples canonicalize in place
    t = PartitionTriple((4,), (2, 2), (), ())
    assert canonicalize_fixed(t, "EE", 6, 6) == (1, 1, ())
    assert canonical_fixed_form("EE", 1, 1, (), 6, 6) == t
    with pytest.raises(ParameterError):
        canonicalize_fixed(PartitionTriple((2,), (), (), ()), "EE", 4, 4)
    with pytest.raises(ParameterError):
        canonical_fixed_form("OO", 1, 1, (2,), 3, 3)
    with pytest.raises(ParameterError):
        canonical_fixed_form("EE", 1, 1, (4,), 2, 2)


def test_canonicalize_extracts_duplicated_steps():
    # a duplicated staircase step contributes one copy to E
    base = pipeline_fixed_triple("OO", 1, 2, 5, 5)
    D = tuple(sorted(base.D + (3, 9), reverse=True))
    t = PartitionTriple(base.A, base.B, D, ())
    family, n, E = canonicalize_fixed(t, "OO", 5, 5)
    assert (family, n) == (1, 2)
    assert E == (9, 3)
    form = canonical_fixed_form("OO", family, n, E, 5, 5)
    assert triple_weight(form) == triple_weight(t)
    assert un_transform(t, "OO")[1] == tuple(sorted(
        [c // 2 for c in t.B for _ in (0, 1)] + list(D), reverse=True))


def test_fixed_gf_matches_products():
    for pl, k, a in GRID:
        want = series.mul(
            pipeline_e_factor(pl, 24),
            series.theta_sum(2 * (k + 1), 2 * (k + 1 - a), 24))
        assert pipeline_fixed_gf(pl, k, a, 24) == want
    # explicit small case: core 1 - q^2 - q^4 at this truncation
    got = pipeline_fixed_gf("EE", 2, 2, 6)
    core = series.TruncatedSeries([1, 0, -1, 0, -1, 0, 0])
    assert got == series.mul(series.poch_inf(2, 4, 6), core)
    assert pipeline_fixed_gf("OO", 3, 3, 0) == series.TruncatedSeries.one(0)


def test_involution_laws_swept():
    # the four laws plus the fixed-point generating function, checked
    # exhaustively on every grid point up to weight 14
    W = 14
    for pl, k, a in GRID:
        fixed = [0] * (W + 1)
        for w in range(W + 1):
            for s in enumerate_ground(pl, k, a, w):
                r = involute_pipeline(s, pl, k, a)
                if isinstance(r, FixedPoint):
                    fixed[w] += -1 if len(s[0]) % 2 else 1
                    continue
                assert sum(r[0]) + sum(r[1]) == w
                assert (len(s[0]) + len(r[0])) % 2 == 1
                assert involute_pipeline(r, pl, k, a) == s
        want = pipeline_fixed_gf(pl, k, a, W)
        assert series.TruncatedSeries(fixed) == want
        # signed ground-set sum collapses to the same series
        par = series.poch_inf(1, 1, W) if pl == "EE" else series.poch_inf(2, 2, W)
        fam = series.family_gf(pipelines._B_FAMILY[pl], k, a, W)
        assert series.mul(par, fam) == want


def test_a1_sector_has_no_templates():
    # fixed configurations exist but carry no (family, n) index
    found = 0
    for w in range(10):
        for s in enumerate_ground("OO", 3, 1, w):
            r = involute_pipeline(s, "OO", 3, 1)
            if isinstance(r, FixedPoint):
                assert r == FixedPoint(0, 0)
                found += 1
    assert found > 1
    # the generating function is still available, in theta form
    assert pipeline_fixed_gf("OO", 3, 1, 12) == series.mul(
        pipeline_e_factor("OO", 12), series.theta_sum(8, 6, 12))
    # canonicalization is refused: there is no template index
    with pytest.raises(ParameterError):
        canonicalize_fixed(PartitionTriple((), (), (), ()), "OO", 3, 1)


def test_triple_sign():
    assert triple_sign(PartitionTriple((10, 8), (8, 8), (), (10,)), "EE") == -1
    assert triple_sign(PartitionTriple((10, 8), (8, 8), (), ()), "EE") == 1
    assert triple_sign(PartitionTriple((16, 14, 12, 10), (), (), (9,)), "OO") == 1
    assert triple_sign(PartitionTriple((2,), (), (), ()), "OE") == -1


def test_un_transform_shape_errors():
    with pytest.raises(ConsistencyError):
        un_transform(PartitionTriple((), (), (1,), ()), "EE")
    with pytest.raises(ConsistencyError):
        un_transform(PartitionTriple((), (), (), (4,)), "EE")
    with pytest.raises(ConsistencyError):
        un_transform(PartitionTriple((), (3,), (), ()), "OO")
    with pytest.raises(ConsistencyError):
        un_transform(PartitionTriple((), (), (), (2,)), "OE")
