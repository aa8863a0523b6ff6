"""Weyl group machinery: inversion sets, bi-convexity, minimal coset
representatives of the level-0 parabolic, and the ideal <-> element maps.

Elements act on simple-root coordinates; the matrix columns are the images
of the simple roots.  The inversion set N(w) = {gamma > 0 : w(gamma) < 0}
is stored as a bitmask over the canonical positive-root order.  A subset of
the positive roots is an inversion set iff it and its complement are closed
under root addition (bi-convexity); such masks are converted back to group
elements by repeatedly peeling a simple root, which also produces a reduced
word.

The minimal coset representatives W0 = {w : N(w) avoids the level-0 roots}
are enumerated without touching the rest of W, as the orbit of the sum of
the fundamental coweights outside the level-0 simples; the orbit point
determines the coset and the breadth-first depth equals the length of its
minimal representative.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import ideals as ideals_mod
from .grading import Grading
from .ideals import Antichain, Ideal
from .polys import Poly, divexact, from_exponent_counts, mul
from .rootsys import Root, RootSystem, _invert

Matrix = tuple[tuple[int, ...], ...]


def _identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def simple_reflection_matrix(rs: RootSystem, i: int) -> Matrix:
    """Matrix of s_i: column j is alpha_j - a[i][j] alpha_i."""
    n = rs.rank
    a = rs.cartan_matrix
    rows = []
    for k in range(n):
        if k == i:
            rows.append(tuple((1 if j == i else 0) - a[i][j] for j in range(n)))
        else:
            rows.append(tuple(1 if j == k else 0 for j in range(n)))
    return tuple(rows)


def left_mul_simple(rs: RootSystem, i: int, m: Matrix) -> Matrix:
    """s_i * w: only row i changes."""
    a = rs.cartan_matrix[i]
    n = rs.rank
    new_row = tuple(
        m[i][j] - sum(a[k] * m[k][j] for k in range(n)) for j in range(n)
    )
    return tuple(new_row if k == i else m[k] for k in range(n))


def right_mul_simple(rs: RootSystem, m: Matrix, i: int) -> Matrix:
    """w * s_i: column j picks up -a[i][j] times column i."""
    a = rs.cartan_matrix[i]
    n = rs.rank
    return tuple(
        tuple(m[k][j] - a[j] * m[k][i] for j in range(n)) for k in range(n)
    )


class WeylElement:
    """A Weyl group element as an integer matrix in the simple-root basis."""

    __slots__ = ("rs", "matrix", "_inverse", "_inv_mask", "_word")

    def __init__(
        self,
        rs: RootSystem,
        matrix: Matrix,
        inverse: Optional[Matrix] = None,
        inv_mask: Optional[int] = None,
        word: Optional[tuple[int, ...]] = None,
    ):
        self.rs = rs
        self.matrix = matrix
        self._inverse = inverse
        self._inv_mask = inv_mask
        self._word = word

    @classmethod
    def identity(cls, rs: RootSystem) -> "WeylElement":
        m = _identity(rs.rank)
        return cls(rs, m, inverse=m, inv_mask=0, word=())

    @classmethod
    def simple(cls, rs: RootSystem, i: int) -> "WeylElement":
        m = simple_reflection_matrix(rs, i)
        return cls(rs, m, inverse=m, word=(i,))

    def apply_coords(self, coords: Sequence[int]) -> tuple[int, ...]:
        n = self.rs.rank
        m = self.matrix
        return tuple(
            sum(m[k][j] * coords[j] for j in range(n) if coords[j]) for k in range(n)
        )

    def apply(self, gamma: Root) -> Root:
        image = self.apply_coords(gamma.coords)
        if not self.rs.is_root(image):
            raise AssertionError("Weyl images of roots must be roots")
        return self.rs.root(image)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        n = self.rs.rank
        a, b = self.matrix, other.matrix
        prod = tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )
        return WeylElement(self.rs, prod)

    @property
    def inverse_matrix(self) -> Matrix:
        if self._inverse is None:
            inv = _invert([[Fraction(x) for x in row] for row in self.matrix])
            if any(x.denominator != 1 for row in inv for x in row):
                raise AssertionError("Weyl matrices are invertible over Z")
            self._inverse = tuple(tuple(int(x) for x in row) for row in inv)
        return self._inverse

    def inverse(self) -> "WeylElement":
        return WeylElement(self.rs, self.inverse_matrix, inverse=self.matrix)

    @property
    def inversion_mask(self) -> int:
        if self._inv_mask is None:
            mask = 0
            for k, gamma in enumerate(self.rs.positive_roots):
                if sum(self.apply_coords(gamma.coords)) < 0:
                    mask |= 1 << k
            self._inv_mask = mask
        return self._inv_mask

    @property
    def length(self) -> int:
        return bin(self.inversion_mask).count("1")

    @property
    def word(self) -> tuple[int, ...]:
        if self._word is None:
            word = _peel_word(self.rs, self.inversion_mask)
            if word is None:
                raise AssertionError("inversion sets of group elements always peel")
            self._word = word
        return self._word

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __str__(self) -> str:
        return " ".join(f"s{i + 1}" for i in self.word) if self.word else "e"

    def __repr__(self) -> str:
        return f"<WeylElement {self}>"


def inversion_roots(w: WeylElement) -> tuple[Root, ...]:
    mask = w.inversion_mask
    return tuple(r for k, r in enumerate(w.rs.positive_roots) if mask >> k & 1)


def from_word(rs: RootSystem, word: Sequence[int]) -> WeylElement:
    m = _identity(rs.rank)
    for i in word:
        m = right_mul_simple(rs, m, i)
    return WeylElement(rs, m)


# -- bi-convexity and the Kostant correspondence ------------------------


def biconvex_violation(
    rs: RootSystem, mask: int
) -> Optional[tuple[str, int, int, int]]:
    """A witness (reason, i, j, k) against bi-convexity, or None."""
    full = (1 << len(rs.positive_roots)) - 1
    comp = full & ~mask
    for (i, j), k in rs.sum_table.items():
        if mask >> i & 1 and mask >> j & 1 and not mask >> k & 1:
            return ("sum escapes the set", i, j, k)
        if comp >> i & 1 and comp >> j & 1 and mask >> k & 1:
            return ("complement is not closed", i, j, k)
    return None


def is_biconvex(rs: RootSystem, mask: int) -> bool:
    return biconvex_violation(rs, mask) is None


def _peel_word(rs: RootSystem, mask: int) -> Optional[tuple[int, ...]]:
    """Reduced word for the element with inversion set `mask`, or None if
    peeling gets stuck (the mask is not an inversion set)."""
    simple_positions = [rs.index[a.coords] for a in rs.simple_roots]
    order = sorted(range(rs.rank), key=lambda i: simple_positions[i])
    reflections = [simple_reflection_matrix(rs, i) for i in range(rs.rank)]
    word_rev: list[int] = []
    cur = mask
    while cur:
        pick = next(
            (i for i in order if cur >> simple_positions[i] & 1), None
        )
        if pick is None:
            return None
        word_rev.append(pick)
        cur &= ~(1 << simple_positions[pick])
        refl = reflections[pick]
        nxt = 0
        rest = cur
        while rest:
            k = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            coords = rs.positive_roots[k].coords
            image = tuple(
                sum(refl[r][j] * coords[j] for j in range(rs.rank)) for r in range(rs.rank)
            )
            nxt |= 1 << rs.index[image]
        cur = nxt
    return tuple(reversed(word_rev))


def element_from_inversions(rs: RootSystem, mask: int) -> WeylElement:
    """The unique w with N(w) = mask; raises with a violating pair when the
    mask is not bi-convex."""
    word = _peel_word(rs, mask)
    if word is None:
        witness = biconvex_violation(rs, mask)
        if witness is None:
            raise AssertionError("peeling failed on a bi-convex mask")
        reason, i, j, k = witness
        pos = rs.positive_roots
        raise ValueError(
            f"not an inversion set ({reason}): {pos[i]} + {pos[j]} = {pos[k]}"
        )
    w = from_word(rs, word)
    w._word = word
    if w.inversion_mask != mask:
        raise AssertionError("reconstructed element has the wrong inversions")
    return w


# -- group enumeration --------------------------------------------------


def weyl_elements(
    rs: RootSystem,
    max_rank: int = 7,
    indices: Optional[Iterable[int]] = None,
) -> list[WeylElement]:
    """The Weyl group, or the parabolic subgroup generated by the given
    simple reflections, by breadth-first search in the weak order."""
    gens = tuple(range(rs.rank)) if indices is None else tuple(indices)
    if len(gens) > max_rank:
        raise ValueError(
            f"rank {len(gens)} exceeds the enumeration bound {max_rank}; "
            "raise max_rank or work with minimal coset representatives"
        )
    ident = WeylElement.identity(rs)
    out = [ident]
    seen = {ident.matrix}
    queue: deque[WeylElement] = deque([ident])
    while queue:
        w = queue.popleft()
        for i in gens:
            m = left_mul_simple(rs, i, w.matrix)
            if m in seen:
                continue
            seen.add(m)
            gained = tuple(row[i] for row in w.inverse_matrix)
            inv = right_mul_simple(rs, w.inverse_matrix, i)
            new = WeylElement(
                rs,
                m,
                inverse=inv,
                inv_mask=w.inversion_mask | 1 << rs.index[gained],
                word=(i,) + w.word,
            )
            out.append(new)
            queue.append(new)
    return out


def longest_element(rs: RootSystem, indices: Optional[Iterable[int]] = None) -> WeylElement:
    """Longest element of the (parabolic) subgroup generated by the given
    simple reflections; the whole group when indices is None."""
    idx = tuple(range(rs.rank)) if indices is None else tuple(indices)
    m = _identity(rs.rank)
    word: list[int] = []
    while True:
        for i in idx:
            # ascend while w(alpha_i) is still positive
            if sum(m[k][i] for k in range(rs.rank)) > 0:
                m = right_mul_simple(rs, m, i)
                word.append(i)
                break
        else:
            return WeylElement(rs, m, word=tuple(word))


def poincare(lengths: Iterable[int]) -> Poly:
    """Length generating polynomial of a set of elements."""
    return from_exponent_counts(lengths)


def km_poly(rs: RootSystem, roots: Optional[Iterable[Root]] = None) -> Poly:
    """Product over roots of (1-t^(h+1))/(1-t^h), h the height; for the full
    positive system this is the Poincare polynomial of W."""
    num: Poly = (1,)
    den: Poly = (1,)
    for r in rs.positive_roots if roots is None else roots:
        h = r.height
        num = mul(num, (1,) + (0,) * h + (-1,))
        den = mul(den, (1,) + (0,) * (h - 1) + (-1,))
    return divexact(num, den)


def km_order(rs: RootSystem, roots: Optional[Iterable[Root]] = None) -> Fraction:
    """Product over roots of (h+1)/h; equals the group order for Delta+."""
    acc = Fraction(1)
    for r in rs.positive_roots if roots is None else roots:
        acc *= Fraction(r.height + 1, r.height)
    return acc


# -- minimal coset representatives --------------------------------------


@dataclass
class CosetEntry:
    element: WeylElement
    length: int
    tau_mask: int  # inversions at level 1, as a positive-root mask
    is_min: bool
    is_max: bool


class CosetTable:
    """All minimal-length representatives of W modulo the level-0 parabolic,
    in breadth-first (hence length-sorted) order."""

    def __init__(self, grading: Grading, entries: list[CosetEntry]):
        self.grading = grading
        self.entries = entries
        self.by_tau: dict[int, list[int]] = {}
        for pos, e in enumerate(entries):
            self.by_tau.setdefault(e.tau_mask, []).append(pos)

    def __len__(self) -> int:
        return len(self.entries)

    def elements(self) -> list[WeylElement]:
        return [e.element for e in self.entries]


def enumerate_W0(g: Grading) -> CosetTable:
    cached = g.__dict__.get("_coset_table")
    if cached is not None:
        return cached
    rs = g.rs
    n = rs.rank
    a = rs.cartan_matrix
    marks = g.marks
    pi0 = set(g.pi0)
    start = tuple(0 if i in pi0 else 1 for i in range(n))

    ident = _identity(n)
    entries: list[CosetEntry] = []
    seen = {start}
    queue: deque[tuple[tuple[int, ...], Matrix, Matrix, tuple[int, ...], int]] = deque(
        [(start, ident, ident, (), 0)]
    )
    while queue:
        vec, m, inv, word, inv_mask = queue.popleft()
        levels = [sum(marks[r] * inv[r][j] for r in range(n)) for j in range(n)]
        entries.append(
            CosetEntry(
                element=WeylElement(rs, m, inverse=inv, inv_mask=inv_mask, word=word),
                length=bin(inv_mask).count("1"),
                tau_mask=inv_mask & g.delta1_mask,
                is_min=all(lv >= -1 for lv in levels),
                is_max=all(lv <= 1 for lv in levels),
            )
        )
        for i in range(n):
            if vec[i] <= 0:
                continue  # descent or same coset
            new_vec = tuple(vec[j] - a[i][j] * vec[i] for j in range(n))
            if new_vec in seen:
                continue
            seen.add(new_vec)
            gained = tuple(inv[r][i] for r in range(n))
            queue.append(
                (
                    new_vec,
                    left_mul_simple(rs, i, m),
                    right_mul_simple(rs, inv, i),
                    (i,) + word,
                    inv_mask | 1 << rs.index[gained],
                )
            )
    expected = km_order(rs) / km_order(rs, g.slice(0)[: len(g.slice(0)) // 2])
    if Fraction(len(entries)) != expected:
        raise AssertionError("coset count disagrees with the order formula")
    g.__dict__["_coset_table"] = table = CosetTable(g, entries)
    return table


def in_W0(g: Grading, w: WeylElement) -> bool:
    return w.inversion_mask & g.delta0_mask == 0


def _require_W0(g: Grading, w: WeylElement) -> None:
    if not in_W0(g, w):
        raise ValueError("element is not a minimal coset representative")


def tau(g: Grading, w: WeylElement) -> Ideal:
    """The level-1 part of the inversion set, as a lower ideal."""
    _require_W0(g, w)
    p = ideals_mod.weight_poset(g, 1)
    pos_mask = w.inversion_mask & g.delta1_mask
    mask = 0
    for j, k in enumerate(p.positive_index):
        if pos_mask >> k & 1:
            mask |= 1 << j
    return Ideal(p, mask)


def fiber(g: Grading, ideal: Ideal) -> list[WeylElement]:
    """All minimal coset representatives whose level-1 inversions equal the
    ideal, in increasing length."""
    table = enumerate_W0(g)
    key = ideal.poset.positive_mask(ideal.mask)
    return [table.entries[k].element for k in table.by_tau.get(key, [])]


# -- closures and the minimal/maximal elements of a fiber ----------------


def closure_layers(rs: RootSystem, mask: int) -> list[int]:
    """Layers I^1, I^2, ... with I^k = (I + I^(k-1)) meet the roots."""
    layers = [mask]
    total = mask
    prev = mask
    while True:
        nxt = 0
        rest = mask
        while rest:
            i = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            other = prev
            while other:
                j = (other & -other).bit_length() - 1
                other &= other - 1
                k = rs.sum_table.get((i, j) if i <= j else (j, i))
                if k is not None:
                    nxt |= 1 << k
        nxt &= ~total
        if not nxt:
            return layers
        layers.append(nxt)
        total |= nxt
        prev = nxt


def closure_mask(rs: RootSystem, mask: int) -> int:
    out = 0
    for layer in closure_layers(rs, mask):
        out |= layer
    return out


def w_min(g: Grading, ideal: Ideal) -> WeylElement:
    """The unique shortest representative with level-1 inversions the ideal:
    its inversion set is the additive closure of the ideal."""
    pos = ideal.poset.positive_mask(ideal.mask)
    return element_from_inversions(g.rs, closure_mask(g.rs, pos))


def w_max(g: Grading, ideal: Ideal) -> WeylElement:
    """The unique longest representative: inversions are the positive levels
    minus the additive closure of the complementary upper ideal."""
    comp = ideal.poset.positive_mask(ideal.complement_mask)
    return element_from_inversions(
        g.rs, g.ge1_mask & ~closure_mask(g.rs, comp)
    )


def W0_min(g: Grading) -> list[WeylElement]:
    p = ideals_mod.weight_poset(g, 1)
    return [w_min(g, i) for i in ideals_mod.iter_lower_ideals(p)]


def W0_max(g: Grading) -> list[WeylElement]:
    p = ideals_mod.weight_poset(g, 1)
    return [w_max(g, i) for i in ideals_mod.iter_lower_ideals(p)]


def _w0_full(g: Grading) -> WeylElement:
    if "_w0_full" not in g.__dict__:
        g.__dict__["_w0_full"] = longest_element(g.rs)
    return g.__dict__["_w0_full"]


def _w0_parabolic(g: Grading) -> WeylElement:
    if "_w0_parabolic" not in g.__dict__:
        g.__dict__["_w0_parabolic"] = longest_element(g.rs, g.pi0)
    return g.__dict__["_w0_parabolic"]


def involution(g: Grading, w: WeylElement) -> WeylElement:
    """w -> w0 w w0(parabolic), an involution of the minimal representatives
    intertwining ideal duality."""
    _require_W0(g, w)
    return _w0_full(g) * w * _w0_parabolic(g)


# -- extreme roots and the eta map --------------------------------------


def max_roots(g: Grading, ideal: Ideal) -> Antichain:
    """Maximal roots of the ideal, read off as the roots that w_min sends to
    negatives of simple roots."""
    w = w_min(g, ideal)
    p = ideal.poset
    mask = 0
    simples = {(-a).coords for a in g.rs.simple_roots}
    for j, r in enumerate(p.elements):
        if w.apply_coords(r.coords) in simples:
            mask |= 1 << j
    return Antichain(p, mask)


def min_complement_roots(g: Grading, ideal: Ideal) -> Antichain:
    """Minimal roots of the complementary upper ideal: the roots that w_max
    sends to simple roots."""
    w = w_max(g, ideal)
    p = ideal.poset
    mask = 0
    simples = {a.coords for a in g.rs.simple_roots}
    for j, r in enumerate(p.elements):
        if w.apply_coords(r.coords) in simples:
            mask |= 1 << j
    return Antichain(p, mask)


def eta(g: Grading, w: WeylElement) -> tuple[int, ...]:
    """For a 1-standard grading, the vector of levels of w^(-1)(alpha) over
    the simple roots alpha; injective on the minimal representatives."""
    if not (g.is_standard and g.k_standard == 1):
        raise ValueError("eta is defined for gradings with a single level-1 simple root")
    _require_W0(g, w)
    inv = w.inverse_matrix
    n = g.rs.rank
    return tuple(
        sum(g.marks[r] * inv[r][j] for r in range(n)) for j in range(n)
    )
