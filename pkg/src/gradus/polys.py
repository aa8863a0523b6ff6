"""Dense integer polynomials as coefficient tuples, constant term first."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Poly = tuple[int, ...]


def trimmed(coeffs: Iterable[int]) -> Poly:
    out = list(coeffs)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def mul(a: Sequence[int], b: Sequence[int]) -> Poly:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return trimmed(out)


def divexact(num: Sequence[int], den: Sequence[int]) -> Poly:
    """Quotient num/den; raises ValueError unless it divides exactly over Z."""
    den = trimmed(den)
    if den == (0,):
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in trimmed(num)]
    if len(rem) < len(den):
        if any(rem):
            raise ValueError("inexact polynomial division")
        return (0,)
    quot = [Fraction(0)] * (len(rem) - len(den) + 1)
    lead = Fraction(den[-1])
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + len(den) - 1] / lead
        quot[k] = c
        if c:
            for j, dj in enumerate(den):
                rem[k + j] -= c * dj
    if any(rem):
        raise ValueError("inexact polynomial division")
    if any(c.denominator != 1 for c in quot):
        raise ValueError("quotient is not an integer polynomial")
    return trimmed(int(c) for c in quot)


def value(p: Sequence[int], x):
    """Evaluate at x (int or Fraction) by Horner's rule."""
    acc = x - x  # zero of the right type
    for c in reversed(p):
        acc = acc * x + c
    return acc


def from_exponent_counts(exponents: Iterable[int]) -> Poly:
    """Histogram polynomial sum_k t^e_k, e.g. from a list of lengths."""
    counts: dict[int, int] = {}
    for e in exponents:
        counts[e] = counts.get(e, 0) + 1
    out = [0] * (max(counts) + 1 if counts else 1)
    for e, c in counts.items():
        out[e] = c
    return trimmed(out)


def from_int_roots(roots: Iterable[int]) -> Poly:
    """Expand prod (t - r) over the given integer roots."""
    p: Poly = (1,)
    for r in roots:
        p = mul(p, (-r, 1))
    return p


def interpolate(points: Sequence[tuple[int, int]]) -> Poly:
    """Exact Lagrange interpolation; raises if the result is not integral."""
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    coeffs = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            nxt = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                nxt[k] -= c * xj
                nxt[k + 1] += c
            basis = nxt
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for k, c in enumerate(basis):
            coeffs[k] += scale * c
    if any(c.denominator != 1 for c in coeffs):
        raise ValueError("interpolant is not an integer polynomial")
    return trimmed(int(c) for c in coeffs)


def to_str(p: Sequence[int], var: str = "t") -> str:
    """Render with ascending powers, e.g. '1 + 2t + t^3'."""
    terms = []
    for k, c in enumerate(trimmed(p)):
        if c == 0 and not (k == 0 and len(trimmed(p)) == 1):
            continue
        if k == 0:
            body = str(abs(c))
        else:
            head = "" if abs(c) == 1 else str(abs(c))
            body = f"{head}{var}" if k == 1 else f"{head}{var}^{k}"
        if not terms:
            terms.append(body if c >= 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c >= 0 else f"- {body}")
    return " ".join(terms) if terms else "0"
