"""Graph family generators and the 6-regular 4-colorability classifier."""
import pytest

from torodef import (CirculantSpec, DefectVector, GridSpec, InvalidSpec,
                     are_isomorphic, classify_6regular, gen_circulant, gen_grid,
                     gen_named, solve, yehzhu_exceptions)
from torodef.generators import (SMALL_EXCEPTION_GRIDS, SPORADIC_PAIRS,
                                canonical_offset, grid_as_circulant, unit_image)
from .conftest import all_valid_grids


# --- circulants -------------------------------------------------------------

def test_circulant_counts_and_regularity():
    g = gen_circulant(CirculantSpec(13, frozenset({1, 2, 3})))
    assert (g.n, g.m) == (13, 39)
    assert all(g.degree(v) == 6 for v in range(13))


def test_circulant_half_offset_drops_degree():
    spec = CirculantSpec(10, frozenset({1, 5}))
    assert spec.half_offset
    g = gen_circulant(spec)
    assert all(g.degree(v) == 3 for v in range(10))


def test_circulant_rejects_out_of_range_offsets():
    with pytest.raises(InvalidSpec):
        CirculantSpec(10, frozenset({6}))
    with pytest.raises(InvalidSpec):
        CirculantSpec(10, frozenset({0}))


def test_canonical_offset():
    assert canonical_offset(9, 13) == 4
    assert canonical_offset(-1, 13) == 1
    assert canonical_offset(13, 13 * 2) == 13
    with pytest.raises(InvalidSpec):
        canonical_offset(26, 13)


def test_unit_image_is_group_action():
    offs = frozenset({1, 2, 3})
    n = 13
    assert unit_image(offs, n, 1) == offs
    # composing units composes images
    assert unit_image(unit_image(offs, n, 2), n, 7) == unit_image(offs, n, 14 % n)


# --- shifted grids ----------------------------------------------------------

def test_grid_counts_and_regularity():
    g, rot = gen_grid(GridSpec(5, 5, 1))
    assert (g.n, g.m) == (25, 75)
    assert all(g.degree(v) == 6 for v in range(25))
    assert all(len(rot.rot[v]) == 6 for v in range(25))


def test_grid_spec_range_checks():
    with pytest.raises(InvalidSpec):
        GridSpec(0, 3, 1)
    with pytest.raises(InvalidSpec):
        GridSpec(3, 3, 4)  # shift above row count


def test_two_column_shift_one_collapses():
    """G[m x 2, 1] degenerates (parallel seam edges leave it 5-regular), so
    the generator rejects it; odd m is the exception list's second case."""
    for m in (3, 4, 5, 7):
        spec = GridSpec(m, 2, 1)
        assert not spec.valid
        with pytest.raises(InvalidSpec):
            gen_grid(spec)
    assert GridSpec(4, 2, 4).valid


def test_single_column_grid_equals_circulant_on_same_labels():
    for m, k in ((7, 4), (11, 4), (9, 5), (12, 7)):
        spec = GridSpec(m, 1, k)
        if not spec.valid:
            continue
        g = gen_grid(spec)[0]
        c = gen_circulant(grid_as_circulant(spec))
        assert sorted(g.edges()) == sorted(c.edges())


def test_all_small_grids_are_6_regular_triangulations():
    # gen_grid internally asserts genus 2 and triangular faces; touching a
    # swath of specs exercises that check across seams and shifts.
    for spec in all_valid_grids(20):
        g, _ = gen_grid(spec)
        assert all(g.degree(v) == 6 for v in range(g.n))


# --- named graphs -----------------------------------------------------------

def test_named_counts():
    for name, n, m in (("k6", 6, 15), ("k7", 7, 21), ("h7", 7, 11),
                       ("t11", 11, 33), ("c3vc5", 8, 23), ("k2vh7", 9, 26)):
        g, _ = gen_named(name)
        assert (g.n, g.m) == (n, m), name
    with pytest.raises(ValueError):
        gen_named("frucht")
    with pytest.raises(ValueError):
        gen_named("c2")


def test_k7_and_t11_are_the_expected_circulants():
    assert are_isomorphic(gen_named("k7")[0], gen_named("k7")[0])[0]
    c11 = gen_circulant(CirculantSpec(11, frozenset({1, 2, 3})))
    assert are_isomorphic(gen_named("t11")[0], c11)[0]
    k7 = gen_named("k7")[0]
    assert all(k7.degree(v) == 6 for v in range(7))  # complete on 7 vertices


def test_hajos_h7_chromatic_number_four():
    h7 = gen_named("h7")[0]
    assert solve(h7, DefectVector.of(0, 0, 0)).status == "UNSAT"
    assert solve(h7, DefectVector.of(0, 0, 0, 0)).status == "SAT"


# --- exception list and classifier -----------------------------------------

def test_exception_membership_by_case():
    cases = {c.case_id: c for c in yehzhu_exceptions()}
    assert all(cases[1].contains(s) for s in SMALL_EXCEPTION_GRIDS)
    assert not cases[1].contains(GridSpec(4, 4, 1))
    assert cases[2].contains(GridSpec(5, 2, 1))
    assert not cases[2].contains(GridSpec(4, 2, 1))
    assert cases[3].contains(CirculantSpec(9, frozenset({1, 3, 4})))      # n = 2r+3
    assert cases[3].contains(CirculantSpec(10, frozenset({1, 3, 4})))     # n = 3r+1
    assert not cases[3].contains(CirculantSpec(12, frozenset({1, 4, 5})))  # 4 | n
    assert cases[4].contains(CirculantSpec(13, frozenset({1, 2, 3})))
    assert not cases[4].contains(CirculantSpec(12, frozenset({1, 2, 3})))
    assert cases[5].contains(CirculantSpec(13, frozenset({1, 3, 4})))
    assert not cases[5].contains(CirculantSpec(14, frozenset({1, 3, 4})))


def test_classifier_matches_exact_search_on_grids():
    for spec in all_valid_grids(18):
        cls = classify_6regular(spec, cross_check=True)  # raises on mismatch
        if spec in SMALL_EXCEPTION_GRIDS:
            assert not cls.four_colorable and cls.case == "1"


def test_classifier_matches_exact_search_on_circulant_families():
    for n in range(7, 21):
        for r in range(2, n // 2):
            if r + 1 > n // 2:
                continue
            spec = CirculantSpec(n, frozenset({1, r, r + 1}))
            g = gen_circulant(spec)
            if any(g.degree(v) != 6 for v in range(n)):
                continue
            classify_6regular(spec, cross_check=True)


def test_classifier_known_verdicts():
    assert classify_6regular(CirculantSpec(12, frozenset({1, 2, 3}))).four_colorable
    assert not classify_6regular(CirculantSpec(13, frozenset({1, 2, 3}))).four_colorable
    v = classify_6regular(CirculantSpec(13, frozenset({1, 3, 4})))
    assert not v.four_colorable and v.case == "5"
    # A disguised sporadic member, reached only through a unit image.
    hidden = CirculantSpec(13, unit_image(frozenset({1, 3, 4}), 13, 2))
    w = classify_6regular(hidden, cross_check=True)
    assert not w.four_colorable


def test_classifier_rejects_unplaced_specs():
    with pytest.raises(InvalidSpec):
        classify_6regular(CirculantSpec(13, frozenset({1, 2, 5})))
    with pytest.raises(InvalidSpec):
        classify_6regular(CirculantSpec(10, frozenset({1, 2, 5})))  # 5-regular


def test_sporadic_pairs_are_all_genuinely_not_4_colorable():
    for r, n in SPORADIC_PAIRS:
        if n > 20:
            continue  # larger ones are covered by pattern tests
        spec = CirculantSpec(n, frozenset({1, r, r + 1}))
        classify_6regular(spec, cross_check=True)
