import random

import pytest

from gf2bundle.bipoly import F_POLY, BiDegree, BiPoly, h0_line, parse
from gf2bundle.enriques import (
    B,
    DEFAULT_SEED,
    F_SINGULAR,
    GENERATOR_DEGREES,
    SUPERSINGULAR,
    ClassificationRefused,
    NotASectionZeroScheme,
    WVector,
    classify,
    classify_by_h,
    curve_degrees,
    generated_in_low_degrees,
    half_fibers,
    ideal_from_section,
    ideal_from_w,
    match_w,
    minimal_zeroscheme,
    nilpotent_candidates,
    random_w,
    reducible_model,
    restrict_to_A,
    sample_surfaces,
    smooth_check,
    surface_report,
    w_coordinates,
    w_degree,
    w_from_vector,
)
from gf2bundle.groebner import Ideal, codim, hilbert_function, ideal_equal, multidegree, sat_irrelevant
from gf2bundle.sheafcoh import hf_ideal_oracle, random_section

EXAMPLE_W = "b+c,b+c,x+z,a+c,z,y,1"
EXAMPLE_D_L = "a^2*b+b^3+a^2*c+a*b*c+b^2*c+a*c^2+c^3"
EXAMPLE_D_H = "y^3+x^2*z+x*y*z+x*z^2+z^3"


@pytest.fixture(scope="module")
def example():
    w = WVector.parse(EXAMPLE_W)
    return w, sat_irrelevant(ideal_from_w(w))


@pytest.fixture(scope="module")
def samples():
    return list(sample_surfaces(50, DEFAULT_SEED))


# ------------------------------------------------------------ matrix B


def test_matrix_audit_passes():
    assert B.audit() == []


def test_matrix_entries_have_forced_bidegrees():
    for i in range(7):
        for j in range(7):
            e = B[i, j]
            if e:
                want = BiDegree(*GENERATOR_DEGREES[j]) - BiDegree(*w_degree(i, 0, 0))
                assert e.bidegree == want


def test_w_degrees():
    assert [w_degree(p, 0, 0) for p in range(7)] == [(1, 0), (1, 0), (0, 1), (1, 0), (0, 1), (0, 1), (0, 0)]
    assert len(w_coordinates(0, 0)) == 19
    assert len(w_coordinates(-1, 0)) == 3


def test_w_vector_validation():
    with pytest.raises(ValueError):
        WVector.parse("x,0,0,0,0,0,0")
    with pytest.raises(ValueError):
        WVector.parse("a,b,c")
    with pytest.raises(ValueError):
        ideal_from_w(WVector.parse("0,0,0,0,0,0,0"))


def test_ideal_from_w_degrees(example):
    w, _ = example
    gens = ideal_from_w(w).gens
    assert sorted(tuple(g.bidegree) for g in gens) == sorted(GENERATOR_DEGREES)


# ------------------------------------------------------- worked example


def test_example_surface(example):
    w, I = example
    assert codim(I) == 2
    assert smooth_check(I)
    assert multidegree(I) == (4, 5, 4)
    assert classify(w) == F_SINGULAR
    assert generated_in_low_degrees(I)


def test_example_restriction(example):
    w, _ = example
    p, q = restrict_to_A(w)
    assert str(p.part((3, 0))) == EXAMPLE_D_L
    assert str(q.part((0, 3))) == EXAMPLE_D_H


def test_example_half_fibers(example):
    _, I = example
    H = half_fibers(I)
    assert str(H.D_L) == EXAMPLE_D_L and str(H.D_h) == EXAMPLE_D_H
    assert H.anomalies == []
    assert curve_degrees(H.C_L) == (3, 6)
    assert curve_degrees(H.C_h) == (6, 3)
    assert H.C_L.contains(I) and H.C_h.contains(I)


def test_example_hilbert_function_matches_oracle(example):
    _, I = example
    for a in range(6):
        for b in range(6):
            assert h0_line(a, b) - hilbert_function(I, a, b) == hf_ideal_oracle(0, 0, a, b)


def test_surface_report(example):
    w, _ = example
    r = surface_report(w).to_json()
    assert r["classification"] == F_SINGULAR
    assert r["cycle_class"] == [4, 5, 4]
    assert r["D_L"] == EXAMPLE_D_L and r["D_h"] == EXAMPLE_D_H
    assert r["half_fibers"]["C_L_degrees"] == [3, 6]
    assert r["notes"] == []


# ------------------------------------------------------ two constructions


@pytest.mark.parametrize("seed", range(3))
def test_minors_route(seed):
    v = random_section(0, 0, random.Random(seed))
    I = sat_irrelevant(ideal_from_section(v))
    assert multidegree(I) == (4, 5, 4)
    assert h0_line(2, 3) - hilbert_function(I, 2, 3) == 3
    w = match_w(I)
    assert ideal_equal(sat_irrelevant(ideal_from_w(w)), I)


def test_match_w_round_trip():
    rng = random.Random(21)
    w0 = random_w(0, 0, rng)
    I = sat_irrelevant(ideal_from_w(w0))
    w = match_w(I)
    assert ideal_equal(sat_irrelevant(ideal_from_w(w)), I)


def test_match_w_rejects_divisors():
    with pytest.raises(NotASectionZeroScheme):
        match_w(Ideal([F_POLY]))


def test_ideal_from_section_rejects_non_sections():
    from gf2bundle.sheafcoh import SectionVec

    v = SectionVec((parse("a^2*x"), BiPoly.zero((2, 1)), BiPoly.zero((2, 1)), BiPoly.zero((3, 0))), (0, 0))
    with pytest.raises(ValueError):
        ideal_from_section(v)


# ------------------------------------------------------ restriction to A


@pytest.mark.parametrize("seed", range(4))
def test_restriction_is_a_complete_intersection_on_A(seed):
    w = random_w(0, 0, random.Random(500 + seed))
    p, q = restrict_to_A(w)
    lhs = sat_irrelevant(ideal_from_w(w) + F_POLY)
    rhs = sat_irrelevant(Ideal([p, q, F_POLY]))
    assert ideal_equal(lhs, rhs)


def test_supersingular_locus_is_the_h_hyperplane():
    coords = w_coordinates(0, 0)
    for i, (pos, _) in enumerate(coords):
        vec = [0] * len(coords)
        vec[i] = 1
        p, q = restrict_to_A(w_from_vector(vec, 0, 0))
        expected = 1 if pos == 6 else 0
        assert p.coefficient("a*b*c") == expected
        assert q.coefficient("x*y*z") == expected


def test_coefficient_reads_agree_on_random_w():
    rng = random.Random(33)
    for _ in range(20):
        w = random_w(0, 0, rng)
        p, q = restrict_to_A(w)
        h = 1 if w.h else 0
        assert p.coefficient("a*b*c") == q.coefficient("x*y*z") == h
        assert classify_by_h(w) == (SUPERSINGULAR if h == 0 else F_SINGULAR)


# ----------------------------------------------------------- sampling


def test_samples_cover_both_strata(samples):
    smooth = [(w, I) for w, I, s in samples if s]
    hs = {bool(w.h) for w, _ in smooth}
    assert hs == {True, False}
    for _, I in smooth:
        assert multidegree(I) == (4, 5, 4)


def test_generation_degrees_detect_supersingularity(samples):
    for w, I, s in samples:
        if s:
            assert generated_in_low_degrees(I) == bool(w.h)


def test_classify_refuses_singular(samples):
    w, I, _ = next(x for x in samples if not x[2] and codim(x[1]) == 2)
    with pytest.raises(ClassificationRefused):
        classify(w, smooth=False)
    assert surface_report(w).classification is None


def test_supersingular_half_fiber(samples):
    w, I = next((w, I) for w, I, s in samples if s and not w.h)
    H = half_fibers(I)
    assert H.D_L.coefficient("a*b*c") == 0
    assert H.D_h.coefficient("x*y*z") == 0
    assert curve_degrees(H.C_L) == (3, 6)


def test_classify_needs_twist_zero():
    w = WVector.parse("1,0,0,0,0,0,0", (-1, 0))
    with pytest.raises(ValueError):
        classify(w)


# ------------------------------------------------------- degenerate cases


def test_singular_double_structure():
    q1, q2 = parse("a*x+b*y"), parse("b*z+c*x")
    I = Ideal([q1 * q1, q2])
    assert codim(I) == 2
    assert not smooth_check(I)


def test_reducible_model():
    r = reducible_model("a", "b", "c")
    assert r.class_Y1 == (1, 2, 4)
    assert r.class_Y2 == (3, 3, 0)
    assert r.f_in_Y2
    assert r.classification == SUPERSINGULAR


def test_minimal_zero_scheme():
    r = minimal_zeroscheme(1, 0, 0)
    assert r.cycle_class == (2, 2, 4)
    assert not r.smooth
    assert r.witness is not None
    assert r.witness not in r.ideal and r.witness * r.witness in r.ideal


def test_minimal_zero_scheme_needs_a_nonzero_section():
    with pytest.raises(ValueError):
        minimal_zeroscheme(0, 0, 0)


def test_nilpotent_candidates():
    cands = nilpotent_candidates()
    assert len(cands) == 63
    assert len(set(cands)) == 63
