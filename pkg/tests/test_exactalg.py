from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromroots import known
from chromroots.exactalg import (
    IntPoly,
    LaurentPoly,
    NoDependenceError,
    PolyMatrix,
    QuadExt,
    Recurrence,
    count_real_roots,
    isolate_real_roots,
    krylov_min_dependence,
    poly_divrem,
    poly_gcd,
    quad_eval,
    squarefree_part,
    sturm_count,
    vec_mat,
    verify_matrix_identity,
)

q = IntPoly.q()

small_ints = st.integers(min_value=-9, max_value=9)
polys = st.lists(small_ints, max_size=9).map(IntPoly)
nonzero_polys = polys.filter(bool)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
quads = st.builds(QuadExt, rationals, rationals)


# -- IntPoly -----------------------------------------------------------------

def test_canonical_form_strips_trailing_zeros():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]).coeffs == ()
    assert IntPoly().degree == -1
    assert IntPoly([Fraction(4, 2)]).coeffs == (2,)
    assert type(IntPoly([Fraction(4, 2)])[0]) is int


def test_str_and_parse_round_trip():
    p = q**3 - 3 * q**2 + 2 * q
    assert str(p) == "q^3 - 3*q^2 + 2*q"
    assert IntPoly.parse(str(p)) == p
    assert IntPoly.parse("q^2-5q+5") == known.MIN_POLY_B10
    assert IntPoly.parse("(q-1)^2 (q+1)") == (q - 1) ** 2 * (q + 1)


@pytest.mark.parametrize("bad", ["q^-1", "q**q", "x+1", "open('f')", "q +", "1/0"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        IntPoly.parse(bad)


def test_divrem_examples():
    assert poly_divrem(q**2 - 5 * q + 5, q - 1) == (q - 4, IntPoly.const(1))
    assert poly_divrem(q**3 - 1, q - 1) == (q**2 + q + 1, IntPoly())
    assert not poly_divrem(known.P_G1, known.MIN_POLY_B10)[1]


def test_divrem_by_zero():
    with pytest.raises(ZeroDivisionError):
        poly_divrem(q, IntPoly())


def test_rational_coefficients():
    quo, rem = poly_divrem(q**2 + 1, 2 * q + 1)
    assert quo == IntPoly([Fraction(-1, 4), Fraction(1, 2)])
    assert rem == IntPoly.const(Fraction(5, 4))


@given(polys, nonzero_polys, polys)
def test_divrem_recovers_quotient(a, b, r):
    r = poly_divrem(r, b)[1]  # force deg r < deg b
    assert poly_divrem(a * b + r, b) == (a, r)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@given(polys, st.integers(-5, 5))
def test_evaluation_is_homomorphism(a, x):
    assert (a * a + a)(x) == a(x) ** 2 + a(x)


def test_exact_div_and_gcd():
    assert ((q - 2) ** 3 * (q + 1)).exact_div((q - 2) ** 2) == (q - 2) * (q + 1)
    with pytest.raises(ArithmeticError):
        (q**2 + 1).exact_div(q - 1)
    assert poly_gcd((q - 1) ** 2 * (q + 3), (q - 1) * (q + 2)) == q - 1


def test_falling_factorial():
    assert IntPoly.falling_factorial(3) == q * (q - 1) * (q - 2)
    assert IntPoly.falling_factorial(0) == 1


def test_json_round_trip():
    for p in (IntPoly(), q**3 - 3 * q, IntPoly([Fraction(1, 3), 0, -7])):
        assert IntPoly.from_json(p.to_json()) == p
    obj = (q**3 - 3 * q).to_json_obj()
    assert obj == {"min_exp": 1, "coeffs": [["-3", "1"], ["0", "1"], ["1", "1"]]}


def test_big_integers_survive_json():
    p = IntPoly([10**40 + 7, -(3**90)])
    assert IntPoly.from_json(p.to_json()) == p


# -- LaurentPoly -------------------------------------------------------------

def test_laurent_canonical_and_str():
    a3 = known.a3
    assert a3.min_exp == -1
    assert str(a3) == "-3*q + 21 - 31*q^-1"
    assert LaurentPoly([0, 0, 5, 0], -3) == LaurentPoly.monomial(-1, 5)
    assert not LaurentPoly([0, 0])


def test_laurent_to_poly():
    assert (known.a3 * q).to_poly() == -3 * q**2 + 21 * q - 31
    with pytest.raises(ValueError):
        known.a3.to_poly()


@given(polys, polys)
def test_laurent_embedding_commutes(a, b):
    la, lb = LaurentPoly.from_poly(a), LaurentPoly.from_poly(b)
    assert la * lb == LaurentPoly.from_poly(a * b)
    assert la + lb == LaurentPoly.from_poly(a + b)


@given(polys, st.integers(-4, 4), polys, st.integers(-4, 4))
def test_laurent_shift_multiplication(a, i, b, j):
    x = LaurentPoly.from_poly(a).shift(i)
    y = LaurentPoly.from_poly(b).shift(j)
    assert x * y == LaurentPoly.from_poly(a * b).shift(i + j)


def test_laurent_evaluation_and_json():
    assert known.a3(Fraction(1)) == -3 + 21 - 31
    assert LaurentPoly.from_json(known.a7.to_json()) == known.a7


# -- QuadExt -----------------------------------------------------------------

def test_quad_eval_examples():
    phi = QuadExt.golden_ratio()
    assert quad_eval(known.MIN_POLY_B10, phi + 2) == 0
    assert quad_eval(q, phi) == QuadExt(Fraction(1, 2), Fraction(1, 2))
    assert quad_eval(known.MIN_POLY_B5, phi + 1) == 0


@given(quads, quads, quads)
def test_quad_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(quads)
def test_quad_inverse(x):
    if x:
        assert x * x.inverse() == 1
        assert x / x == 1


@given(quads, quads)
def test_conjugation_is_homomorphism(x, y):
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert (x + y).conjugate() == x.conjugate() + y.conjugate()


@given(quads)
def test_quad_sign_matches_float(x):
    f = float(x)
    if abs(f) > 1e-9:
        assert x.sign() == (1 if f > 0 else -1)


def test_quad_rejects_bad_d():
    with pytest.raises(ValueError):
        QuadExt(1, 1, d=4)
    with pytest.raises(ValueError):
        QuadExt(1, 1, d=1)
    with pytest.raises(ValueError):
        QuadExt(1, 1, 5) + QuadExt(1, 1, 2)


def test_quad_powers():
    phi = QuadExt.golden_ratio()
    assert phi**2 == phi + 1
    assert phi**-1 == phi - 1
    assert phi**0 == 1


# -- Sturm -------------------------------------------------------------------

def test_sturm_examples():
    assert sturm_count(q**2 - 3 * q + 1, 0, 1) == 1
    assert sturm_count(q**2 - 5 * q + 5, 0, Fraction(32, 27)) == 0
    assert sturm_count(q**2 - 4, 0, 1) == 0


def test_sturm_half_open():
    p = q * (q - 1)
    assert sturm_count(p, 0, 1) == 1  # 1 counted, 0 not
    assert sturm_count(p, -1, 0) == 1


def test_sturm_errors():
    with pytest.raises(ValueError):
        sturm_count(q - 1, 1, 1)
    with pytest.raises(ValueError):
        sturm_count(q - 1, 2, 1)
    with pytest.raises(ValueError):
        sturm_count(IntPoly(), 0, 1)


def test_squarefree_part():
    assert squarefree_part((q - 1) ** 3 * (q + 2)) == (q - 1) * (q + 2)
    assert sturm_count((q - 2) ** 5 * (q - 3), 0, 10) == 2


@settings(max_examples=60, deadline=None)
@given(nonzero_polys)
def test_sturm_matches_mpmath(p):
    """Distinct real roots agree with a high-precision numeric root finder."""
    if p.degree < 1:
        return
    sf = squarefree_part(p)
    with mpmath.workdps(60):
        roots = mpmath.polyroots([mpmath.mpf(Fraction(c).numerator) / Fraction(c).denominator
                                  for c in reversed(sf.coeffs)], maxsteps=400, extraprec=400)
        real = [r for r in roots if abs(mpmath.im(r)) < mpmath.mpf(10) ** -30]
    assert count_real_roots(p) == len(real)


@given(nonzero_polys, rationals, rationals)
def test_sturm_additive(p, a, b):
    if p.degree < 1 or a == b:
        return
    lo, hi = min(a, b), max(a, b)
    mid = (lo + hi) / 2
    assert sturm_count(p, lo, hi) == sturm_count(p, lo, mid) + sturm_count(p, mid, hi)


def test_isolate_real_roots():
    ivs = isolate_real_roots(q**3 - 5 * q**2 + 6 * q - 1, Fraction(1, 10**10))
    assert len(ivs) == 3
    for lo, hi in ivs:
        assert hi - lo <= Fraction(1, 10**10)
    assert abs(float(ivs[-1][1]) - 3.2469796037174670) < 1e-9


# -- matrices and Krylov -----------------------------------------------------

def test_matrix_basics():
    m = known.T_X
    i5 = PolyMatrix.identity(5)
    assert m @ i5 == m
    assert (m - m).is_zero()
    assert m**2 == m @ m
    assert PolyMatrix.from_json_obj(m.to_json_obj()) == m


def test_krylov_identity():
    u0 = [LaurentPoly.from_poly(q), LaurentPoly.const(3)]
    c = krylov_min_dependence(u0, PolyMatrix.identity(2), 5)
    assert c == [IntPoly.const(-1), IntPoly.const(1)]


def test_krylov_diagonal():
    T = PolyMatrix.from_rows([[q, 0], [0, q - 1]])
    c = krylov_min_dependence([1, 1], T, 3)
    # (t - q)(t - q + 1) = t^2 - (2q - 1) t + q(q - 1)
    assert c == [q**2 - q, 1 - 2 * q, IntPoly.const(1)]


def test_krylov_no_dependence():
    T = PolyMatrix.from_rows([[q, 0, 0], [0, q - 1, 0], [0, 0, q + 1]])
    with pytest.raises(NoDependenceError):
        krylov_min_dependence([1, 1, 1], T, 2)


def test_krylov_on_x_family():
    c = krylov_min_dependence(list(known.P_PRIME_1), known.T_X, 5)
    assert len(c) == 4 and c[3] == 1
    two = q - 2
    assert c[2] == -(known.A * two)
    assert c[1] == -(known.B * two**2)
    assert c[0] == -(known.C * two**3)


def test_verify_matrix_identity():
    two = q - 2
    rec = Recurrence((known.A * two, known.B * two**2, known.C * two**3), known.BASE_CASES)
    assert verify_matrix_identity(known.T_X, rec)
    bad = Recurrence(((known.A + 1) * two, known.B * two**2, known.C * two**3), known.BASE_CASES)
    assert not verify_matrix_identity(known.T_X, bad)
    assert verify_matrix_identity(PolyMatrix.identity(3), Recurrence((IntPoly.const(1),), (q,)))


def test_recurrence_terms_and_json():
    fib = Recurrence((IntPoly.const(1), IntPoly.const(1)), (IntPoly.const(1), IntPoly.const(1)))
    assert [t(0) for t in fib.terms(8)] == [1, 1, 2, 3, 5, 8, 13, 21]
    assert Recurrence.from_json_obj(fib.to_json_obj()) == fib
    with pytest.raises(ValueError):
        Recurrence((), ())
    with pytest.raises(ValueError):
        Recurrence((IntPoly.const(1), IntPoly.const(1)), (IntPoly.const(1),))


def test_vec_mat():
    assert vec_mat([1, 0], PolyMatrix.from_rows([[q, 1], [2, 3]])) == [LaurentPoly.from_poly(q), LaurentPoly.const(1)]
