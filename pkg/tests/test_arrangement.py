import pytest
from fractions import Fraction

from gradus.arrangement import (
    Arrangement,
    arrangement_report,
    char_poly,
    conjectural_exponents,
    conjecture_check,
    coxeter_arrangement,
    deleted_arrangement,
    geometric_sign_oracle,
    good_primes,
    height_partition,
    ideal_arrangement,
    ideal_count_formula,
    regions_in_dominant_chamber,
    sub_arrangement_01,
    upper_ideal_partition_check,
    upper_ideals_of_root_poset,
    zaslavsky_regions,
)
from gradus.grading import parse_grading_spec
from gradus.ideals import count_lower_ideals, weight_poset
from gradus.polys import from_int_roots
from gradus.rootsys import build
from gradus.weyl import enumerate_W0, km_order, weyl_elements

# chi of the full reflection arrangement factors over the exponents
COXETER_CHI = {
    "A2": (1, 2),
    "B2": (1, 3),
    "G2": (1, 5),
    "A3": (1, 2, 3),
    "B3": (1, 3, 5),
    "C3": (1, 3, 5),
    "D4": (1, 3, 3, 5),
}


@pytest.mark.parametrize("name", sorted(COXETER_CHI))
def test_coxeter_char_poly_factors_over_exponents(name):
    rs = build(name)
    assert char_poly(coxeter_arrangement(rs)) == from_int_roots(COXETER_CHI[name])


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3", "B3"])
def test_zaslavsky_counts_weyl_chambers(name):
    rs = build(name)
    chi = char_poly(coxeter_arrangement(rs))
    assert zaslavsky_regions(chi) == len(weyl_elements(rs))


def test_deleted_arrangement_drops_highest_root():
    rs = build("B3")
    arr = deleted_arrangement(rs)
    assert len(arr.normals) == len(rs.positive_roots) - 1
    assert rs.theta not in arr.normals
    # exponents (m_1, ..., m_{n-1}, m_n - 1)
    assert char_poly(arr) == from_int_roots((1, 3, 4))
    assert char_poly(deleted_arrangement(build("A2"))) == from_int_roots((1, 1))


def test_sub_arrangement_01_walls():
    g = parse_grading_spec("G2:es")
    arr = sub_arrangement_01(g)
    assert len(arr.normals) == 5
    assert g.rs.theta not in arr.normals
    assert char_poly(arr) == from_int_roots((1, 4))
    # abelian gradings keep every wall
    ga = parse_grading_spec("B2:1,0")
    assert len(sub_arrangement_01(ga).normals) == len(ga.rs.positive_roots)


def test_arrangement_validation():
    rs = build("B2")
    a1 = rs.root((1, 0))
    with pytest.raises(ValueError):
        Arrangement(rs, (a1, a1))
    with pytest.raises(ValueError):
        Arrangement(rs, (rs.root((-1, 0)),))


def test_good_primes_pinned():
    assert good_primes(build("B2"), 3) == [5, 7, 11]
    assert good_primes(build("G2"), 3) == [7, 11, 13]
    assert good_primes(build("F4"), 3) == [13, 17, 19]
    for name in ["B2", "G2", "F4"]:
        rs = build(name)
        assert all(q > rs.coxeter_number for q in good_primes(rs, 3))


def test_char_poly_is_monic_with_unit_chi_one():
    # chi(1) = 0 whenever there is at least one wall
    for name in ["A2", "B3", "G2"]:
        chi = char_poly(coxeter_arrangement(build(name)))
        assert chi[-1] == 1
        assert sum(chi) == 0


@pytest.mark.parametrize("spec", ["B2:0,1", "B3:0,1,0", "G2:es", "A3:0,1,0",
                                  "C3:1,0,0", "A3:1,0,1"])
def test_regions_biject_with_ideals(spec):
    g = parse_grading_spec(spec)
    regions = regions_in_dominant_chamber(g)
    p = weight_poset(g)
    assert len(regions) == count_lower_ideals(p)
    masks = {r.ideal.mask for r in regions}
    assert len(masks) == len(regions)
    total = sum(len(r.chambers) for r in regions)
    assert total == len(enumerate_W0(g).entries)


def test_region_chambers_sorted_by_distance():
    g = parse_grading_spec("G2:es")
    for region in regions_in_dominant_chamber(g):
        lengths = [w.length for w in region.chambers]
        assert lengths == sorted(lengths)


def test_geometric_sign_oracle_matches_inversions():
    g = parse_grading_spec("B2:0,1")
    rs = g.rs
    for w in weyl_elements(rs):
        signs = geometric_sign_oracle(g, w, normals=rs.positive_roots)
        neg = {r for r, s in zip(rs.positive_roots, signs) if s < 0}
        assert neg == {r for r in rs.positive_roots
                       if not w.apply(r).is_positive}


def test_height_partition_and_exponents():
    g = parse_grading_spec("G2:es")
    walls = [r for r in g.rs.positive_roots if g.level(r) in (0, 1)]
    assert height_partition(walls) == (2, 1, 1, 1)
    assert conjectural_exponents(g) == (1, 4)
    assert sum(conjectural_exponents(g)) == len(walls)


def test_ideal_count_formula_values():
    assert ideal_count_formula(parse_grading_spec("G2:es")) == Fraction(5)
    assert ideal_count_formula(parse_grading_spec("A2:1,0")) == Fraction(3)
    assert ideal_count_formula(parse_grading_spec("B3:0,1,0")) == Fraction(10)


def test_conjecture_check_strict_case():
    out = conjecture_check(parse_grading_spec("G2:es"))
    assert out["strict"] is True
    assert out["sum_ok"] and out["ideal_product_ok"]
    assert out["char_ok"] and out["zaslavsky_ok"]
    assert out["exponents"] == [1, 4]


def test_conjecture_check_reporting_case():
    # exceptional types outside G2 are informational, not strict
    out = conjecture_check(parse_grading_spec("F4:1,0,0,0"), with_char=False)
    assert out["strict"] is False
    assert out["sum_ok"]


def test_arrangement_report_shape():
    rep = arrangement_report(parse_grading_spec("B3:0,1,0"))
    assert rep == {
        "grading": "B3:0,1,0",
        "partition": [3, 2, 2, 1],
        "dual_partition": [4, 3, 1],
        "region_count": 10,
        "ideal_count": 10,
        "formula_value": "10",
        "char_poly": [-12, 19, -8, 1],
        "exponents_match": True,
    }


def test_zaslavsky_for_sub_arrangement():
    g = parse_grading_spec("B3:0,1,0")
    chi = char_poly(sub_arrangement_01(g))
    levi_order = km_order(g.rs, [r for r in g.rs.positive_roots
                                 if g.level(r) == 0])
    regions = zaslavsky_regions(chi)
    assert Fraction(regions) == levi_order * count_lower_ideals(weight_poset(g))


def test_upper_ideal_partition_check():
    out = upper_ideal_partition_check(build("A3"))
    assert out == {"type": "A3", "upper_ideals": 14, "violations": [], "ok": True}
    assert upper_ideal_partition_check(build("B3"))["ok"]


def test_upper_ideals_include_extremes():
    rs = build("B3")
    ups = upper_ideals_of_root_poset(rs)
    full = (1 << len(rs.positive_roots)) - 1
    assert 0 in ups and full in ups
    assert len(ups) == len(set(ups))


def test_ideal_arrangement_validates_mask():
    rs = build("A2")
    ups = upper_ideals_of_root_poset(rs)
    theta_bit = 1 << rs.index[rs.theta.coords]
    for mask in ups:
        ideal_arrangement(rs, mask)  # should not raise
    # a lower-but-not-upper set is refused
    low = (1 << rs.index[(1, 0)]) | (1 << rs.index[(0, 1)])
    assert low not in ups
    with pytest.raises(ValueError):
        ideal_arrangement(rs, low)
    assert theta_bit in ups
