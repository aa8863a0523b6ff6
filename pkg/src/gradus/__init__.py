"""Exact combinatorics of Z-graded root systems.

The package computes, over the integers and rationals only, the standard
attached objects of a grading of an irreducible root system: the slices
Delta(i), the weight poset on Delta(1) with its lower ideals, the minimal
coset representatives of the level-zero Weyl subgroup together with their
minimal and maximal members per ideal, and the hyperplane arrangement cut
out by the walls of levels zero and one.  `gradus.checks` bundles the
identities these objects satisfy into named check suites; the `gradus`
command line exposes everything.
"""

from .rootsys import CartanType, Root, RootSystem, build, dual_partition, parse_cartan_type
from .grading import Grading, extra_special, grade, parse_grading_spec
from .ideals import (
    Antichain,
    Ideal,
    WeightPoset,
    count_antichains,
    count_lower_ideals,
    dual_ideal,
    enumerate_lower_ideals,
    iter_lower_ideals,
    lower_ideal_from_antichain,
    lower_ideal_from_roots,
    m_polynomial,
    max_elements,
    min_elements,
    self_dual_count,
    weight_poset,
)
from .weyl import (
    CosetEntry,
    CosetTable,
    W0_max,
    W0_min,
    WeylElement,
    closure_layers,
    closure_mask,
    element_from_inversions,
    enumerate_W0,
    eta,
    fiber,
    from_word,
    in_W0,
    inversion_roots,
    involution,
    is_biconvex,
    km_order,
    km_poly,
    longest_element,
    max_roots,
    min_complement_roots,
    poincare,
    tau,
    w_max,
    w_min,
    weyl_elements,
)
from .arrangement import (
    Arrangement,
    Region,
    arrangement_report,
    char_poly,
    conjectural_exponents,
    conjecture_check,
    coxeter_arrangement,
    deleted_arrangement,
    geometric_sign_oracle,
    good_primes,
    ideal_arrangement,
    ideal_count_formula,
    regions_in_dominant_chamber,
    sub_arrangement_01,
    upper_ideal_partition_check,
    upper_ideals_of_root_poset,
    zaslavsky_regions,
)
from .checks import CheckResult, default_types, run, sweep_gradings, targets_for

__all__ = [
    "Antichain",
    "Arrangement",
    "CartanType",
    "CheckResult",
    "CosetEntry",
    "CosetTable",
    "Grading",
    "Ideal",
    "Region",
    "Root",
    "RootSystem",
    "W0_max",
    "W0_min",
    "WeightPoset",
    "WeylElement",
    "arrangement_report",
    "build",
    "char_poly",
    "closure_layers",
    "closure_mask",
    "conjectural_exponents",
    "conjecture_check",
    "count_antichains",
    "count_lower_ideals",
    "coxeter_arrangement",
    "default_types",
    "deleted_arrangement",
    "dual_ideal",
    "dual_partition",
    "element_from_inversions",
    "enumerate_W0",
    "enumerate_lower_ideals",
    "eta",
    "extra_special",
    "fiber",
    "from_word",
    "geometric_sign_oracle",
    "good_primes",
    "grade",
    "ideal_arrangement",
    "ideal_count_formula",
    "in_W0",
    "inversion_roots",
    "involution",
    "is_biconvex",
    "iter_lower_ideals",
    "km_order",
    "km_poly",
    "longest_element",
    "lower_ideal_from_antichain",
    "lower_ideal_from_roots",
    "m_polynomial",
    "max_elements",
    "max_roots",
    "min_complement_roots",
    "min_elements",
    "parse_cartan_type",
    "parse_grading_spec",
    "poincare",
    "regions_in_dominant_chamber",
    "run",
    "self_dual_count",
    "sub_arrangement_01",
    "sweep_gradings",
    "targets_for",
    "tau",
    "upper_ideal_partition_check",
    "upper_ideals_of_root_poset",
    "w_max",
    "w_min",
    "weight_poset",
    "weyl_elements",
    "zaslavsky_regions",
]

__version__ = "0.1.0"
