from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from snum.errors import DomainError
from snum.params import (
    INF,
    EmbeddingParams,
    RegionTag,
    TargetKind,
    canonical_zone,
    classify_point,
    classify_region,
    compactness_threshold,
    exponent,
    is_compact,
    recip,
    split_threshold,
    zones_containing,
)
from snum.rates import formula_for_region

HALF = F(1, 2)


def test_exponent_parsing():
    assert exponent("inf") == INF
    assert exponent("3/2") == F(3, 2)
    assert exponent("0.25") == F(1, 4)
    assert exponent(2) == F(2)
    assert recip(INF) == 0
    assert recip(F(4, 3)) == F(3, 4)


@pytest.mark.parametrize("bad", ["0", "-1", "abc", "1/0"])
def test_exponent_rejects(bad):
    with pytest.raises((DomainError, ValueError, ZeroDivisionError)):
        exponent(bad)


def test_params_validation():
    with pytest.raises(DomainError):
        EmbeddingParams(1, 2, 1, 2)  # Lp target needs p_tgt > 1
    with pytest.raises(DomainError):
        EmbeddingParams(1, 2, INF, 2)
    with pytest.raises(DomainError):
        EmbeddingParams(1, 2, 2, 0)
    with pytest.raises(DomainError):
        EmbeddingParams.make(1, 2, target="zygmund")  # missing s


def test_make_routes_endpoints():
    assert EmbeddingParams.make(1, 2, "inf").target is TargetKind.LINF
    assert EmbeddingParams.make(1, 2, 1).target is TargetKind.L1
    assert EmbeddingParams.make(1, 2, 3).target is TargetKind.LP


def test_is_compact_examples():
    assert is_compact(EmbeddingParams(HALF, 2, 2, 1))
    assert not is_compact(EmbeddingParams(F(2, 5), 1, 2, 1))
    assert is_compact(EmbeddingParams.make(F(3, 5), 2, target="linf"))
    # gate is strict
    assert not is_compact(EmbeddingParams(HALF, 1, 2, 1))
    assert not is_compact(EmbeddingParams.make(HALF, 2, target="linf"))


def test_compactness_zygmund():
    p = EmbeddingParams.make(F(3, 2), 2, target="zygmund", s=1)
    assert compactness_threshold(p) == F(3, 2)
    assert not is_compact(p)
    assert is_compact(EmbeddingParams.make(F(8, 5), 2, target="zygmund", s=1))


def test_classify_examples():
    assert classify_region(EmbeddingParams(1, 2, 2, 2)).tag is RegionTag.I_STAR
    assert classify_region(EmbeddingParams(F(1, 20), 4, 3, 2)).tag is RegionTag.IV_SUB
    r = classify_region(EmbeddingParams(F(1, 4), 4, 2, 2))
    assert r.tag is RegionTag.BOUNDARY_T
    assert r.threshold == F(1, 4)
    assert set(r.between) == {RegionTag.V_STAR, RegionTag.V_SUB}


def test_classify_non_compact_and_non_lp():
    assert classify_region(EmbeddingParams(F(2, 5), 1, 2, 2)).tag is RegionTag.NON_COMPACT
    with pytest.raises(DomainError):
        classify_region(EmbeddingParams.make(1, 2, target="linf"))


@pytest.mark.parametrize(
    "t, p1, p2, tag",
    [
        (1, 1, F(3, 2), RegionTag.I_STAR),
        (F(2, 3), F(4, 5), F(3, 2), RegionTag.I_SUB),
        (1, 1, 4, RegionTag.II),
        (1, 3, 4, RegionTag.III),
        (1, 4, 3, RegionTag.IV_STAR),
        (1, 4, F(3, 2), RegionTag.V_STAR),
        (F(1, 8), 4, F(3, 2), RegionTag.V_SUB),
    ],
)
def test_classify_interior(t, p1, p2, tag):
    assert classify_region(EmbeddingParams(t, p1, p2, 2)).tag is tag


recips = st.fractions(min_value=F(1, 50), max_value=F(49, 50), max_denominator=60)
ts = st.fractions(min_value=F(1, 60), max_value=3, max_denominator=60)


@given(ts, st.fractions(min_value=F(1, 50), max_value=2, max_denominator=60), recips)
@settings(max_examples=300, deadline=None)
def test_classification_total_and_deterministic(t, r1, r2):
    p = EmbeddingParams(t, 1 / r1, 1 / r2, 2)
    a, b = classify_region(p), classify_region(p)
    assert a == b
    assert a.tag is RegionTag.NON_COMPACT or is_compact(p)


@given(st.fractions(min_value=F(1, 50), max_value=2, max_denominator=60), recips)
@settings(max_examples=300, deadline=None)
def test_threshold_never_subcase(r1, r2):
    p1, p2 = 1 / r1, 1 / r2
    thr = split_threshold(canonical_zone(p1, p2), p1, p2)
    if thr is not None and thr > 0:
        assert classify_point(thr, p1, p2).tag is RegionTag.BOUNDARY_T


@given(st.fractions(min_value=F(1, 50), max_value=F(49, 50), max_denominator=60))
@settings(max_examples=100, deadline=None)
def test_boundary_formula_agreement_p2_is_2(r1):
    # on p_tgt = 2 with t above the I-threshold, I* and II share (alpha, beta)
    p1, p2 = 1 / r1, F(2)
    t = max(r1 - HALF, F(0)) + F(1, 3)
    assert formula_for_region(RegionTag.I_STAR, t, p1, p2) == formula_for_region(RegionTag.II, t, p1, p2)


@given(recips, ts)
@settings(max_examples=100, deadline=None)
def test_boundary_formula_agreement_p1_is_2(r2, t):
    p1, p2 = F(2), 1 / r2
    if p2 >= 2:
        assert formula_for_region(RegionTag.II, t, p1, p2) == formula_for_region(RegionTag.III, t, p1, p2)


@given(st.fractions(min_value=F(1, 50), max_value=F(1, 2), max_denominator=60), ts)
@settings(max_examples=100, deadline=None)
def test_boundary_formula_agreement_diagonal(r, t):
    # p_src = p_tgt >= 2: III and IV* formulas coincide on the diagonal
    p = 1 / r
    assert formula_for_region(RegionTag.III, t, p, p) == formula_for_region(RegionTag.IV_STAR, t, p, p)


def test_zones_cover_plane():
    for r1 in [F(k, 8) for k in range(0, 17)]:
        for r2 in [F(k, 8) for k in range(1, 8)]:
            p1 = INF if r1 == 0 else 1 / r1
            assert zones_containing(p1, 1 / r2)


def test_zones_are_closed():
    assert set(zones_containing(F(2), F(3, 2))) == {"I", "V"}
    assert set(zones_containing(F(3), F(3))) == {"III", "IV"}
    assert set(zones_containing(F(2), F(2))) == {"I", "II", "III", "IV", "V"}
    # every zone's rule is defined at the corner
    for z in zones_containing(F(2), F(2)):
        classify_point(F(1), F(2), F(2), zone=z)
