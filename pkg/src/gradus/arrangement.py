"""Hyperplane arrangements attached to a graded root system.

The central objects are the arrangement with normals Delta(0)+ union
Delta(1), the full Coxeter arrangement Delta+, and the arrangements that
drop an upper ideal of the root poset.  Regions inside the dominant cone of
the level-0 subsystem are read off from the level-1 signs of the minimal
coset representatives and are in bijection with the lower ideals of the
weight poset.

Characteristic polynomials are computed by exact point counts over small
prime fields: a prime is safe as soon as it divides no minor of the normal
matrix, because then every subset of normals has the same rank over F_q as
over Q and the Whitney-style inclusion-exclusion count agrees with the
characteristic polynomial.  The polynomial is interpolated from rank+1 safe
primes and confirmed on one more.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from . import ideals as ideals_mod
from . import weyl as weyl_mod
from .grading import Grading
from .ideals import Ideal, iter_downclosed, downclosure_masks, upclosure_masks
from .polys import Poly, from_int_roots, interpolate, value
from .rootsys import Root, RootSystem, dual_partition


@dataclass(frozen=True)
class Arrangement:
    """A central arrangement with root normals, in canonical order."""

    rs: RootSystem
    normals: tuple[Root, ...]

    def __post_init__(self) -> None:
        if len(set(self.normals)) != len(self.normals):
            raise ValueError("arrangement normals must be distinct")
        for r in self.normals:
            if not r.is_positive or not self.rs.is_root(r):
                raise ValueError(f"normal {r} is not a positive root")


def sub_arrangement_01(g: Grading) -> Arrangement:
    picked = tuple(
        r
        for r, lv in zip(g.rs.positive_roots, g.levels)
        if lv in (0, 1)
    )
    return Arrangement(g.rs, picked)


def coxeter_arrangement(rs: RootSystem) -> Arrangement:
    return Arrangement(rs, rs.positive_roots)


def root_poset_down_masks(rs: RootSystem) -> tuple[int, ...]:
    """Down-sets in the root poset (Delta+, <=), covers being differences by
    a single simple root."""
    cached = rs.__dict__.get("_root_poset_down")
    if cached is not None:
        return cached
    covers: list[list[int]] = []
    for gamma in rs.positive_roots:
        covered = []
        for i in range(rs.rank):
            down = tuple(c - (1 if t == i else 0) for t, c in enumerate(gamma.coords))
            j = rs.index.get(down)
            if j is not None:
                covered.append(j)
        covers.append(covered)
    down = tuple(downclosure_masks(covers))
    # The cover closure must be the coordinatewise order on positive roots.
    for i, gi in enumerate(rs.positive_roots):
        arith = 0
        for j, gj in enumerate(rs.positive_roots):
            if all(a - b >= 0 for a, b in zip(gi.coords, gj.coords)):
                arith |= 1 << j
        if arith != down[i]:
            raise AssertionError("root poset covers do not generate the order")
    rs.__dict__["_root_poset_down"] = down
    return down


def upper_ideals_of_root_poset(rs: RootSystem) -> list[int]:
    """All upper ideals of (Delta+, <=) as positive-root masks."""
    down = root_poset_down_masks(rs)
    full = (1 << len(rs.positive_roots)) - 1
    return [full & ~mask for mask in iter_downclosed(down)]


def ideal_arrangement(rs: RootSystem, upper_mask: int) -> Arrangement:
    """The arrangement whose normals are the positive roots outside an upper
    ideal of the root poset."""
    down = root_poset_down_masks(rs)
    ups = upclosure_masks(down)
    for j in range(len(rs.positive_roots)):
        if upper_mask >> j & 1 and ups[j] & ~upper_mask:
            raise ValueError("mask is not an upper ideal of the root poset")
    picked = tuple(
        r for j, r in enumerate(rs.positive_roots) if not upper_mask >> j & 1
    )
    return Arrangement(rs, picked)


def deleted_arrangement(rs: RootSystem) -> Arrangement:
    """The Coxeter arrangement minus the highest-root hyperplane."""
    theta_mask = 1 << rs.index[rs.theta.coords]
    return ideal_arrangement(rs, theta_mask)


# -- regions of the level-(0,1) arrangement -----------------------------


@dataclass
class Region:
    """A region inside the level-0 dominant cone, i.e. a fiber of chambers."""

    ideal: Ideal
    chambers: list[weyl_mod.WeylElement]  # sorted by increasing length


def regions_in_dominant_chamber(g: Grading) -> list[Region]:
    """Group the minimal coset representatives by their level-1 signs; each
    group is one region, labelled by a lower ideal."""
    table = weyl_mod.enumerate_W0(g)
    p = ideals_mod.weight_poset(g, 1)
    out = []
    for tau_mask in sorted(table.by_tau):
        mask = 0
        for j, k in enumerate(p.positive_index):
            if tau_mask >> k & 1:
                mask |= 1 << j
        out.append(
            Region(
                ideal=Ideal(p, mask),
                chambers=[table.entries[k].element for k in table.by_tau[tau_mask]],
            )
        )
    return out


def geometric_sign_oracle(
    g: Grading, w: weyl_mod.WeylElement, normals: Optional[Sequence[Root]] = None
) -> tuple[int, ...]:
    """Signs of the chamber w^(-1)(dominant) against each hyperplane, from an
    interior point: the inverse image of the sum of fundamental coweights.

    In coweight coordinates that point is the vector of column sums of the
    matrix of w, so each sign is an exact integer dot product.
    """
    if normals is None:
        normals = sub_arrangement_01(g).normals
    n = g.rs.rank
    m = w.matrix
    point = tuple(sum(m[i][j] for i in range(n)) for j in range(n))
    signs = []
    for gamma in normals:
        val = sum(x * c for x, c in zip(point, gamma.coords))
        if val == 0:
            raise ValueError(f"chamber point lies on the hyperplane of {gamma}")
        signs.append(1 if val > 0 else -1)
    return tuple(signs)


# -- characteristic polynomials by finite-field point counts ------------


def _det(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination (Bareiss)."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _minor_prime_factors(rs: RootSystem) -> frozenset[int]:
    """Primes dividing some minor of the positive-root coordinate matrix.
    Any other prime preserves all subset ranks modulo p."""
    cached = rs.__dict__.get("_minor_primes")
    if cached is not None:
        return cached
    n = rs.rank
    rows = [r.coords for r in rs.positive_roots]
    values: set[int] = set()
    for k in range(1, n + 1):
        for cols in combinations(range(n), k):
            for picked in combinations(rows, k):
                d = abs(_det([[row[c] for c in cols] for row in picked]))
                if d > 1:
                    values.add(d)
    primes: set[int] = set()
    for v in values:
        p = 2
        while p * p <= v:
            if v % p == 0:
                primes.add(p)
                while v % p == 0:
                    v //= p
            p += 1
        if v > 1:
            primes.add(v)
    rs.__dict__["_minor_primes"] = out = frozenset(primes)
    return out


def good_primes(rs: RootSystem, count: int) -> list[int]:
    """Primes above the Coxeter number that divide no minor of the root
    coordinates; point counts at these primes match the rational answer."""
    bad = _minor_prime_factors(rs)
    out: list[int] = []
    candidate = rs.coxeter_number + 1
    while len(out) < count:
        if all(candidate % p for p in range(2, candidate)) and candidate not in bad:
            out.append(candidate)
        candidate += 1
    return out


def _point_count(normals: Sequence[Root], n: int, q: int) -> int:
    """#{x in F_q^n : <x, gamma> != 0 for all normals}, with x written in
    coweight coordinates so each functional has the root's integer coords."""
    total = q**n
    count = 0
    chunk = 1 << 21
    rows = [g.coords for g in normals]
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = []
        rem = idx
        for _ in range(n):
            digits.append(rem % q)
            rem = rem // q
        ok = np.ones(idx.shape, dtype=bool)
        for row in rows:
            acc = np.zeros(idx.shape, dtype=np.int64)
            for c, col in zip(row, digits):
                if c:
                    acc += c * col
            ok &= (acc % q) != 0
        count += int(ok.sum())
    return count


def char_poly(arr: Arrangement, max_rank: int = 5) -> Poly:
    """Characteristic polynomial via point counts over safe primes, with an
    extra prime confirming the interpolation."""
    n = arr.rs.rank
    if n > max_rank:
        raise ValueError(
            f"point counting needs q^n work; rank {n} exceeds the bound {max_rank}"
        )
    cache = arr.rs.__dict__.setdefault("_char_cache", {})
    key = tuple(r.coords for r in arr.normals)
    if key in cache:
        return cache[key]
    primes = good_primes(arr.rs, n + 2)
    points = [(q, _point_count(arr.normals, n, q)) for q in primes[: n + 1]]
    chi = interpolate(points)
    if len(chi) != n + 1 or chi[-1] != 1:
        raise AssertionError("characteristic polynomial must be monic of full degree")
    q_check = primes[n + 1]
    if value(chi, q_check) != _point_count(arr.normals, n, q_check):
        raise AssertionError("interpolated polynomial fails at the verification prime")
    cache[key] = chi
    return chi


def zaslavsky_regions(chi: Sequence[int]) -> int:
    """Total number of regions: (-1)^deg chi(-1)."""
    return (-1) ** (len(chi) - 1) * value(chi, -1)


# -- height partitions and the exponent conjecture ----------------------


def height_partition(roots: Iterable[Root]) -> tuple[int, ...]:
    """Occurrences of each height 1, 2, ..., trailing zeros trimmed."""
    counts: dict[int, int] = {}
    for r in roots:
        counts[r.height] = counts.get(r.height, 0) + 1
    if not counts:
        return ()
    return tuple(counts.get(i, 0) for i in range(1, max(counts) + 1))


def conjectural_exponents(g: Grading) -> tuple[int, ...]:
    """Dual of the height partition of the level-(0,1) normals, ascending;
    conjecturally the exponents of the arrangement."""
    return tuple(sorted(dual_partition(height_partition(sub_arrangement_01(g).normals))))


def ideal_count_formula(g: Grading) -> Fraction:
    """Product over Delta(1) of (height+1)/height; equals the number of
    lower ideals (proved for the classical families and G2)."""
    acc = Fraction(1)
    for r, lv in zip(g.rs.positive_roots, g.levels):
        if lv == 1:
            acc *= Fraction(r.height + 1, r.height)
    return acc


def conjecture_check(g: Grading, with_char: Optional[bool] = None) -> dict:
    """Necessary conditions for the conjectural exponents, plus the exact
    polynomial comparison whenever the characteristic polynomial is in reach.

    strict is set for the families where the factorisation is proved; for the
    exceptional types outside G2 the verdicts are informational.
    """
    rs = g.rs
    arr = sub_arrangement_01(g)
    b = conjectural_exponents(g)
    table = weyl_mod.enumerate_W0(g)
    w0_order = weyl_mod.km_order(rs) / len(table)
    assert w0_order.denominator == 1
    ideal_count = ideals_mod.count_lower_ideals(ideals_mod.weight_poset(g, 1))
    product = 1
    for e in b:
        product *= e + 1
    report = {
        "grading": g.spec_string(),
        "exponents": list(b),
        "sum_ok": sum(b) == len(arr.normals),
        "product_over_levi": str(Fraction(product, int(w0_order))),
        "ideal_product_ok": product == int(w0_order) * ideal_count,
        "strict": rs.cartan_type.family in "ABCD" or str(rs.cartan_type) == "G2",
    }
    want_char = rs.rank <= 5 if with_char is None else with_char
    if want_char:
        chi = char_poly(arr)
        report["char_ok"] = chi == from_int_roots(b)
        report["zaslavsky_ok"] = zaslavsky_regions(chi) == product
    return report


def arrangement_report(g: Grading, with_char: Optional[bool] = None) -> dict:
    """Summary of the level-(0,1) arrangement of a grading.

    with_char=None computes the characteristic polynomial when the rank
    allows it; True forces it; False skips it.
    """
    arr = sub_arrangement_01(g)
    partition = height_partition(arr.normals)
    dual = dual_partition(partition)
    regions = regions_in_dominant_chamber(g)
    p = ideals_mod.weight_poset(g, 1)
    count = ideals_mod.count_lower_ideals(p)
    report = {
        "grading": g.spec_string(),
        "partition": list(partition),
        "dual_partition": list(dual),
        "region_count": len(regions),
        "ideal_count": count,
        "formula_value": str(ideal_count_formula(g)),
    }
    want_char = g.rs.rank <= 5 if with_char is None else with_char
    if want_char:
        chi = char_poly(arr)
        report["char_poly"] = list(chi)
        report["exponents_match"] = chi == from_int_roots(sorted(dual))
    return report


def upper_ideal_partition_check(rs: RootSystem, max_rank: int = 5) -> dict:
    """Check that, for every upper ideal of the root poset, the heights of
    the remaining roots form a partition, with a strict first step unless
    nothing remains."""
    if rs.rank > max_rank:
        raise ValueError(f"upper-ideal sweep is bounded at rank {max_rank}")
    violations = []
    total = 0
    for upper in upper_ideals_of_root_poset(rs):
        total += 1
        rest = [r for j, r in enumerate(rs.positive_roots) if not upper >> j & 1]
        lam = height_partition(rest)
        ok = all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))
        if rest:
            ok = ok and (len(lam) == 1 or lam[0] > lam[1])
        if not ok:
            violations.append(lam)
    return {
        "type": str(rs.cartan_type),
        "upper_ideals": total,
        "violations": violations,
        "ok": not violations,
    }
