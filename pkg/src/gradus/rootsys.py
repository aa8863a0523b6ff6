"""Irreducible crystallographic root systems with exact arithmetic.

Conventions used throughout the package:

- Simple roots are numbered per Bourbaki (1-based in user-facing text,
  0-based in code).
- Roots are integer coordinate vectors over the simple-root basis.
- The invariant inner product is normalised so long roots have squared
  length 2; its Gram matrix on the simple roots is rational and exact.
- The Cartan matrix is a[i][j] = <alpha_j, alpha_i^vee>, so the simple
  reflection acts by s_i(alpha_j) = alpha_j - a[i][j] alpha_i.
- Positive roots are listed in "canonical order": by height, then
  lexicographically by coordinates.  Bitmask positions over the positive
  roots always refer to this order.

Everything is integer or Fraction arithmetic; no floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence

Q = Fraction

Coords = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_FIXED_RANK = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

# Positive-root counts for every family, used as a construction cross-check.
_NUM_POSITIVE = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        fam, n = self.family, self.rank
        if fam in _MIN_RANK:
            if n < _MIN_RANK[fam]:
                raise ValueError(f"type {fam} requires rank >= {_MIN_RANK[fam]}, got {n}")
        elif fam in _FIXED_RANK:
            if n not in _FIXED_RANK[fam]:
                raise ValueError(f"type {fam} admits ranks {_FIXED_RANK[fam]}, got {n}")
        else:
            raise ValueError(f"unknown family {fam!r}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def parse_cartan_type(text: str) -> CartanType:
    m = re.fullmatch(r"([A-Ga-g])([0-9]+)", text.strip())
    if m is None:
        raise ValueError(f"cannot parse Cartan type {text!r}")
    return CartanType(m.group(1).upper(), int(m.group(2)))


@dataclass(frozen=True)
class Root:
    """A root, stored by its simple-root coordinates."""

    coords: Coords

    @property
    def height(self) -> int:
        return sum(self.coords)

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            head = "" if abs(c) == 1 else str(abs(c))
            body = f"{head}a{i + 1}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+{body}" if c > 0 else f"-{body}")
        return "".join(terms) if terms else "0"


def _diagram(ct: CartanType) -> tuple[list[tuple[int, int]], list[Q]]:
    """Dynkin diagram edges (0-based) and half squared lengths d_i."""
    fam, n = ct.family, ct.rank
    chain = [(i, i + 1) for i in range(n - 1)]
    one = Q(1)
    half = Q(1, 2)
    if fam == "A":
        return chain, [one] * n
    if fam == "B":
        return chain, [one] * (n - 1) + [half]
    if fam == "C":
        return chain, [half] * (n - 1) + [one]
    if fam == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)], [one] * n
    if fam == "E":
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        edges += [(i, i + 1) for i in range(5, n - 1)]
        return edges, [one] * n
    if fam == "F":
        return chain, [one, one, half, half]
    if fam == "G":
        return [(0, 1)], [Q(1, 3), one]
    raise AssertionError(fam)


class RootSystem:
    """An irreducible root system, built by closing the simple roots."""

    def __init__(self, cartan_type: CartanType):
        self.cartan_type = cartan_type
        n = cartan_type.rank
        self.rank = n

        edges, d = _diagram(cartan_type)
        gram = [[Q(0)] * n for _ in range(n)]
        for i in range(n):
            gram[i][i] = 2 * d[i]
        for i, j in edges:
            gram[i][j] = gram[j][i] = -max(d[i], d[j])
        self.gram: tuple[tuple[Q, ...], ...] = tuple(tuple(row) for row in gram)

        cartan = [[gram[i][j] / d[i] for j in range(n)] for i in range(n)]
        if any(c.denominator != 1 for row in cartan for c in row):
            raise AssertionError("non-integer Cartan matrix")
        self.cartan_matrix: tuple[tuple[int, ...], ...] = tuple(
            tuple(int(c) for c in row) for row in cartan
        )

        pos = self._close_positive()
        pos.sort(key=lambda c: (sum(c), c))
        if len(pos) != _NUM_POSITIVE[cartan_type.family](n):
            raise AssertionError(f"positive-root count mismatch for {cartan_type}")
        self._root_cache: dict[Coords, Root] = {}
        self.positive_roots: tuple[Root, ...] = tuple(self.root(c) for c in pos)
        self.index: dict[Coords, int] = {c: k for k, c in enumerate(pos)}
        self._all_coords = frozenset(pos) | frozenset(
            tuple(-x for x in c) for c in pos
        )

        top = self.positive_roots[-1]
        if len(pos) > 1 and top.height == self.positive_roots[-2].height:
            raise AssertionError("highest root is not unique")
        self.theta: Root = top
        self.coxeter_number: int = top.height + 1
        self.simple_roots: tuple[Root, ...] = tuple(
            self.root(tuple(1 if j == i else 0 for j in range(n))) for i in range(n)
        )
        max_norm = max(self.norm2(r) for r in self.simple_roots)
        if max_norm != 2:
            raise AssertionError("long roots must have squared length 2")
        self.long_simple: tuple[int, ...] = tuple(
            i for i in range(n) if self.norm2(self.simple_roots[i]) == 2
        )

    # -- construction ---------------------------------------------------

    def _close_positive(self) -> list[Coords]:
        """Close the simple roots under root-string addition.

        gamma + alpha_i is a root iff p - <gamma, alpha_i^vee> > 0 where p
        is the number of times alpha_i can be subtracted from gamma while
        staying a root.  Working up by height keeps every query answerable.
        """
        n = self.rank
        a = self.cartan_matrix
        simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        roots: set[Coords] = set(simple)
        level = list(simple)
        while level:
            nxt: list[Coords] = []
            for gamma in level:
                for i in range(n):
                    if gamma == simple[i]:
                        continue
                    pairing = sum(a[i][j] * gamma[j] for j in range(n) if gamma[j])
                    p = 0
                    cur = tuple(c - s for c, s in zip(gamma, simple[i]))
                    while cur in roots:
                        p += 1
                        cur = tuple(c - s for c, s in zip(cur, simple[i]))
                    if p - pairing > 0:
                        new = tuple(c + s for c, s in zip(gamma, simple[i]))
                        if new not in roots:
                            roots.add(new)
                            nxt.append(new)
            level = nxt
        return list(roots)

    # -- basic queries --------------------------------------------------

    def root(self, coords: Sequence[int]) -> Root:
        key = tuple(coords)
        cached = self._root_cache.get(key)
        if cached is None:
            cached = self._root_cache[key] = Root(key)
        return cached

    def is_root(self, coords: Sequence[int] | Root) -> bool:
        key = coords.coords if isinstance(coords, Root) else tuple(coords)
        return key in self._all_coords

    def roots(self) -> tuple[Root, ...]:
        """All roots, positive then negative, each side in canonical order."""
        return self.positive_roots + tuple(-r for r in self.positive_roots)

    def inner(self, x: Sequence, y: Sequence) -> Q:
        """Invariant form on coordinate vectors (entries int or Fraction)."""
        xs = x.coords if isinstance(x, Root) else tuple(x)
        ys = y.coords if isinstance(y, Root) else tuple(y)
        if len(xs) != self.rank or len(ys) != self.rank:
            raise ValueError("coordinate vector of wrong length")
        acc = Q(0)
        for i, xi in enumerate(xs):
            if xi:
                row = self.gram[i]
                acc += xi * sum(row[j] * yj for j, yj in enumerate(ys) if yj)
        return acc

    def norm2(self, gamma: Root) -> Q:
        return self.inner(gamma, gamma)

    def pairing(self, mu: Root, gamma: Root) -> int:
        """<mu, gamma^vee> = 2(mu,gamma)/(gamma,gamma), always an integer."""
        val = 2 * self.inner(mu, gamma) / self.norm2(gamma)
        if val.denominator != 1:
            raise AssertionError("non-integral Cartan pairing")
        return int(val)

    def reflect(self, gamma: Root, mu: Root) -> Root:
        """Reflection of mu in the hyperplane orthogonal to gamma."""
        k = self.pairing(mu, gamma)
        return self.root(tuple(m - k * g for m, g in zip(mu.coords, gamma.coords)))

    def add_roots(self, gamma: Root, mu: Root) -> Optional[Root]:
        s = tuple(a + b for a, b in zip(gamma.coords, mu.coords))
        return self.root(s) if s in self._all_coords else None

    def is_long(self, gamma: Root) -> bool:
        return self.norm2(gamma) == 2

    def three_root_witness(self, mu: Root, nu1: Root, nu2: Root) -> Root:
        """Given roots with nu1+nu2 and mu+nu1+nu2 roots, return nu_i with
        mu+nu_i a root, preferring nu1.  mu in {-nu1, -nu2} is outside the
        domain: one partial sum would vanish, and a witness need not exist."""
        for r in (mu, nu1, nu2):
            if not self.is_root(r):
                raise ValueError(f"{r} is not a root")
        if mu == -nu1 or mu == -nu2:
            raise ValueError("mu must not cancel nu1 or nu2")
        if not self.is_root(tuple(a + b for a, b in zip(nu1.coords, nu2.coords))):
            raise ValueError("nu1 + nu2 must be a root")
        total = tuple(m + a + b for m, a, b in zip(mu.coords, nu1.coords, nu2.coords))
        if not self.is_root(total):
            raise ValueError("mu + nu1 + nu2 must be a root")
        if self.add_roots(mu, nu1) is not None:
            return nu1
        if self.add_roots(mu, nu2) is not None:
            return nu2
        raise AssertionError("no witness despite valid input")

    # -- derived data ---------------------------------------------------

    @cached_property
    def height_counts(self) -> tuple[int, ...]:
        """Number of positive roots of each height 1..h-1."""
        counts = [0] * (self.coxeter_number - 1)
        for r in self.positive_roots:
            counts[r.height - 1] += 1
        return tuple(counts)

    @cached_property
    def exponents(self) -> tuple[int, ...]:
        """Exponents, extracted as the dual partition of the height counts."""
        m = dual_partition(self.height_counts)
        if len(m) != self.rank:
            raise AssertionError("height distribution is not a partition of the rank")
        return tuple(sorted(m))

    @cached_property
    def fundamental_coweights(self) -> tuple[tuple[Q, ...], ...]:
        """Vectors w_i with (w_i, alpha_j) = delta_ij, in root coordinates."""
        inv = _invert(self.gram)
        return tuple(tuple(row[i] for row in inv) for i in range(self.rank))

    @cached_property
    def sum_table(self) -> dict[tuple[int, int], int]:
        """(i, j) -> k over positive-root indices with root_i+root_j = root_k,
        stored for i <= j."""
        table: dict[tuple[int, int], int] = {}
        pos = self.positive_roots
        for i in range(len(pos)):
            for j in range(i, len(pos)):
                s = tuple(a + b for a, b in zip(pos[i].coords, pos[j].coords))
                k = self.index.get(s)
                if k is not None:
                    table[(i, j)] = k
        return table

    def __repr__(self) -> str:
        return f"RootSystem({self.cartan_type})"


def dual_partition(counts: Sequence[int]) -> tuple[int, ...]:
    """Conjugate of a sequence of column heights: part_i = #{j : counts_j >= i}."""
    if not counts or max(counts) == 0:
        return ()
    return tuple(
        sum(1 for c in counts if c >= i) for i in range(1, max(counts) + 1)
    )


def _invert(matrix: Sequence[Sequence[Q]]) -> list[list[Q]]:
    n = len(matrix)
    aug = [[Q(x) for x in row] + [Q(1) if i == j else Q(0) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def build(cartan_type: CartanType | str) -> RootSystem:
    if isinstance(cartan_type, str):
        cartan_type = parse_cartan_type(cartan_type)
    return RootSystem(cartan_type)
