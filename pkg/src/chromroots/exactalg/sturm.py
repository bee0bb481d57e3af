"""Exact real-root counting and isolation by Sturm sequences."""

from __future__ import annotations

from fractions import Fraction

from .poly import IntPoly, poly_divrem, poly_gcd


def squarefree_part(p: IntPoly) -> IntPoly:
    """p / gcd(p, p'): same distinct roots, all simple."""
    if p.degree <= 0:
        return p
    g = poly_gcd(p, p.derivative())
    return p if g.degree == 0 else p.exact_div(g)


def sturm_sequence(p: IntPoly) -> list[IntPoly]:
    seq = [p, p.derivative()]
    while seq[-1].degree > 0:
        rem = poly_divrem(seq[-2], seq[-1])[1]
        if not rem:
            break
        seq.append(-rem)
    return seq


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(seq: list[IntPoly], x) -> int:
    signs = [s for s in (_sign(f(x)) for f in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def cauchy_bound(p: IntPoly) -> Fraction:
    """Every real root r of p satisfies |r| < bound."""
    lead = Fraction(p.leading)
    return 1 + max((abs(Fraction(c) / lead) for c in p.coeffs[:-1]), default=Fraction(0))


def sturm_count(p: IntPoly, lo, hi) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval (lo, hi]."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise ValueError(f"empty interval: lo={lo} >= hi={hi}")
    if not p:
        raise ValueError("zero polynomial has infinitely many roots")
    sf = squarefree_part(p)
    if sf.degree <= 0:
        return 0
    seq = sturm_sequence(sf)
    return _variations(seq, lo) - _variations(seq, hi)


def count_real_roots(p: IntPoly) -> int:
    b = cauchy_bound(p)
    return sturm_count(p, -b, b)


def isolate_real_roots(p: IntPoly, width=Fraction(1, 10**12)) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (lo, hi], each holding exactly one real root, narrower than ``width``."""
    width = Fraction(width)
    sf = squarefree_part(p)
    if sf.degree <= 0:
        return []
    seq = sturm_sequence(sf)
    b = cauchy_bound(sf)

    def count(a, c):
        return _variations(seq, a) - _variations(seq, c)

    out = []
    stack = [(-b, b)]
    while stack:
        a, c = stack.pop()
        n = count(a, c)
        if n == 0:
            continue
        if n == 1 and c - a < width:
            out.append((a, c))
            continue
        mid = (a + c) / 2
        stack.append((mid, c))
        stack.append((a, mid))
    return sorted(out)
