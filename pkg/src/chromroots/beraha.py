"""Beraha numbers B_n = 2 + 2cos(2*pi/n): minimal polynomials, root tests, forbidden conjugates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional

from .exactalg import IntPoly, QuadExt, isolate_real_roots, poly_divrem, quad_eval, sturm_count
from .exactalg.sturm import cauchy_bound

FORBIDDEN_TOP = Fraction(32, 27)
DEFAULT_SWEEP = 50


def _check_index(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"Beraha index must be a positive integer, got {n!r}")


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """n-th cyclotomic polynomial: z^n - 1 divided by Phi_d for every proper divisor d."""
    _check_index(n)
    p = IntPoly.monomial(n) - 1
    for d in range(1, n):
        if n % d == 0:
            p = p.exact_div(cyclotomic(d))
    return p


def totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=None)
def beraha_min_poly(n: int) -> IntPoly:
    """Monic integer minimal polynomial of B_n.

    For n >= 3, Phi_n(z) / z^m (m = phi(n)/2) is a polynomial in
    y = z + 1/z via z^k + z^-k = y(z^(k-1) + z^(1-k)) - (z^(k-2) + z^(2-k));
    B_n = y + 2 then gives m(q) = m~(q - 2).
    """
    _check_index(n)
    q = IntPoly.q()
    if n == 1:
        return q - 4
    if n == 2:
        return q
    phi = cyclotomic(n)
    m = phi.degree // 2
    y = IntPoly.q()
    sums = [IntPoly.const(2), y]  # z^k + z^-k as polynomials in y
    for _ in range(2, m + 1):
        sums.append(y * sums[-1] - sums[-2])
    out = IntPoly.const(phi[m])
    for k in range(1, m + 1):
        out = out + sums[k].scale(phi[m + k])
    return out.compose(q - 2)


def is_integer_beraha(n: int) -> bool:
    return beraha_min_poly(n).degree == 1


def is_beraha_root(p: IntPoly, n: int) -> bool:
    """Whether B_n is a root of p (its minimal polynomial divides p)."""
    if not p:
        raise ValueError("every number is a root of the zero polynomial")
    return not poly_divrem(p, beraha_min_poly(n))[1]


def factor_multiplicity(p: IntPoly, f: IntPoly) -> int:
    """Largest m with f^m dividing p."""
    if f.degree < 1:
        raise ValueError("factor must be nonconstant")
    if not p:
        raise ValueError("multiplicity in the zero polynomial is unbounded")
    count = 0
    while True:
        quo, rem = poly_divrem(p, f)
        if rem:
            return count
        p = quo
        count += 1


@dataclass(frozen=True)
class ForbiddenReport:
    n: int
    min_poly: IntPoly
    blocked: bool
    witness_interval: Optional[tuple[Optional[Fraction], Fraction]]
    counts: tuple[int, int, int]

    def to_json_obj(self) -> dict:
        w = None
        if self.witness_interval is not None:
            lo, hi = self.witness_interval
            w = ["-inf" if lo is None else str(lo), str(hi)]
        return {
            "n": self.n,
            "min_poly": self.min_poly.to_json_obj(),
            "min_poly_text": str(self.min_poly),
            "blocked": self.blocked,
            "witness_interval": w,
            "conjugates_in": {
                "(-inf,0)": self.counts[0],
                "(0,1)": self.counts[1],
                "(1,32/27]": self.counts[2],
            },
        }


def _open_count(p: IntPoly, lo: Fraction, hi: Fraction) -> int:
    """Roots in the open interval (lo, hi)."""
    c = sturm_count(p, lo, hi)
    return c - 1 if p(hi) == 0 else c


def forbidden_conjugate(n: int) -> ForbiddenReport:
    """Whether some conjugate of B_n lies where no chromatic root can.

    The forbidden set is (-inf, 0) U (0, 1) U (1, 32/27]; 0 and 1 themselves
    are allowed.
    """
    _check_index(n)
    m = beraha_min_poly(n)
    if m.degree == 1:
        raise ValueError(f"B_{n} is an integer; the conjugate test does not apply")
    far = -cauchy_bound(m) - 1
    neg = _open_count(m, far, Fraction(0))
    unit = _open_count(m, Fraction(0), Fraction(1))
    top_count = sturm_count(m, Fraction(1), FORBIDDEN_TOP)
    witness = None
    if neg:
        witness = (None, Fraction(0))
    elif unit:
        witness = (Fraction(0), Fraction(1))
    elif top_count:
        witness = (Fraction(1), FORBIDDEN_TOP)
    return ForbiddenReport(n, m, witness is not None, witness, (neg, unit, top_count))


def sweep(n_max: int = DEFAULT_SWEEP, n_min: int = 1) -> list[dict]:
    """One row per n: minimal polynomial and (for non-integer B_n) the conjugate test."""
    rows = []
    for n in range(n_min, n_max + 1):
        m = beraha_min_poly(n)
        if m.degree == 1:
            rows.append({
                "n": n,
                "min_poly": m.to_json_obj(),
                "min_poly_text": str(m),
                "integer": True,
                "value": str(-m[0]),
                "blocked": False,
                "witness_interval": None,
            })
        else:
            row = forbidden_conjugate(n).to_json_obj()
            row["integer"] = False
            rows.append(row)
    return rows


def beraha_interval(n: int, width=Fraction(1, 10**12)) -> tuple[Fraction, Fraction]:
    """Rational interval (lo, hi] containing B_n, the largest real root of its minimal polynomial."""
    _check_index(n)
    m = beraha_min_poly(n)
    if m.degree == 1:
        v = Fraction(-m[0])
        return v - Fraction(width) / 2, v
    return isolate_real_roots(m, width)[-1]


# ---------------------------------------------------------------------------
# golden identity
# ---------------------------------------------------------------------------

PHI = QuadExt.golden_ratio()


def verify_golden_identity(p: IntPoly, n_vertices: int) -> bool:
    """Check P(phi+2) == (phi+2) * phi^(3n-10) * P(phi+1)^2 exactly in Q(sqrt 5)."""
    lhs = quad_eval(p, PHI + 2)
    rhs = (PHI + 2) * PHI ** (3 * n_vertices - 10) * quad_eval(p, PHI + 1) ** 2
    return lhs == rhs
