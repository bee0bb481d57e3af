"""Closed forms used as verification targets by the CLI and the tests.

Everything here is typed in by hand from the published formulas; nothing
is computed.  Partition order for vectors and matrices is
{MLR}, {M|LR}, {ML|R}, {MR|L}, {M|L|R}.
"""

from __future__ import annotations

from .exactalg import IntPoly, LaurentPoly, PolyMatrix

q = IntPoly.q()
_lq = LaurentPoly.from_poly(q)
_inv_q = LaurentPoly.monomial(-1)

P_G1 = q * (q - 1) * (q - 2) * (q - 3) ** 2 * (q - 4) * (q**2 - 5 * q + 5) * (q**3 - 4 * q**2 + 8 * q - 7)
P_G2 = (q * (q - 1) * (q - 2) * (q - 3) * (q**2 - 5 * q + 5)
        * (q**5 - 8 * q**4 + 30 * q**3 - 63 * q**2 + 73 * q - 36))

MIN_POLY_B5 = q**2 - 3 * q + 1
MIN_POLY_B10 = q**2 - 5 * q + 5

A = q**5 - 9 * q**4 + 37 * q**3 - 88 * q**2 + 127 * q - 94
B = 6 * q**7 - 81 * q**6 + 497 * q**5 - 1781 * q**4 + 4026 * q**3 - 5780 * q**2 + 4968 * q - 2024
C = ((q - 1) ** 2 * (3 * q**2 - 15 * q + 25)
     * (3 * q**5 - 33 * q**4 + 157 * q**3 - 399 * q**2 + 535 * q - 299))

P1 = q * (q - 1) ** 2 * (q - 2) * (q**3 - 7 * q**2 + 19 * q - 19)
P2 = q * (q - 1) * (q - 2) ** 2 * (
    q**9 - 17 * q**8 + 138 * q**7 - 692 * q**6 + 2353 * q**5
    - 5630 * q**4 + 9525 * q**3 - 11086 * q**2 + 8152 * q - 2913)
P3 = q * (q - 1) * (q - 2) ** 3 * (
    q**14 - 26 * q**13 + 328 * q**12 - 2645 * q**11 + 15181 * q**10
    - 65498 * q**9 + 219032 * q**8 - 577468 * q**7 + 1209533 * q**6 - 2011958 * q**5
    + 2633017 * q**4 - 2650178 * q**3 + 1957169 * q**2 - 957460 * q + 235366)
BASE_CASES = (P1, P2, P3)


def _L(p) -> LaurentPoly:
    return LaurentPoly.coerce(p)


a1 = _L(-6 * q**3 + 39 * q**2 - 89 * q + 69)
a2 = _L(q**6 - 11 * q**5 + 55 * q**4 - 147 * q**3 + 204 * q**2 - 115 * q)
a3 = _L(-3 * q + 21) - 31 * _inv_q
a4 = _L(-3 * q**3 + 21 * q**2 - 55 * q + 50)
a5 = _L(3 * q**2 - 15 * q + 19)
a6 = _L(q**6 - 11 * q**5 + 55 * q**4 - 150 * q**3 + 219 * q**2 - 134 * q)
a7 = _L(-3 * q**3 + 21 * q**2 - 58 * q + 71) - 31 * _inv_q
a8 = _L(q**6 - 11 * q**5 + 55 * q**4 - 153 * q**3 + 243 * q**2 - 204 * q + 69)
ENTRIES = {"a1": a1, "a2": a2, "a3": a3, "a4": a4, "a5": a5, "a6": a6, "a7": a7, "a8": a8}

_0 = LaurentPoly()
T_X = PolyMatrix.from_rows([
    [a1, _0, _0, a2, _0],
    [a3, a4, a4, a5, a6],
    [_0, _0, a1, _0, a2],
    [a7, _0, _0, a8, _0],
    [_0, _0, a7, _0, a8],
])

P_PRIME_1 = (
    3 * q**3 - 21 * q**2 + 31 * q,
    3 * q**5 - 21 * q**4 + 55 * q**3 - 50 * q**2,
    -3 * q**4 + 15 * q**3 - 19 * q**2,
    -3 * q**4 + 15 * q**3 - 19 * q**2,
    q**7 - 10 * q**6 + 42 * q**5 - 84 * q**4 + 65 * q**3,
)

_one_minus = _L(1) - _inv_q
CLOSURE_V = (_0, _0, _one_minus, _one_minus, _one_minus)
