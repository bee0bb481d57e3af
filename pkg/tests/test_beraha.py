from __future__ import annotations

from fractions import Fraction
from math import gcd

import mpmath
import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chromroots import known
from chromroots.beraha import (
    FORBIDDEN_TOP,
    _open_count,
    beraha_interval,
    beraha_min_poly,
    cyclotomic,
    factor_multiplicity,
    forbidden_conjugate,
    is_beraha_root,
    is_integer_beraha,
    sweep,
    totient,
    verify_golden_identity,
)
from chromroots.chromapoly import chromatic_dc
from chromroots.exactalg import IntPoly, sturm_count
from chromroots.graphcore import (
    MultiGraph,
    complete_graph,
    cycle_graph,
    gen_G1,
    gen_G2,
    gen_H,
    octahedron,
    wheel_graph,
)

q = IntPoly.q()
INTEGER_N = {1, 2, 3, 4, 6}


def test_small_minimal_polynomials():
    assert beraha_min_poly(1) == q - 4
    assert beraha_min_poly(2) == q
    assert beraha_min_poly(3) == q - 1
    assert beraha_min_poly(4) == q - 2
    assert beraha_min_poly(5) == q**2 - 3 * q + 1
    assert beraha_min_poly(6) == q - 3
    assert beraha_min_poly(7) == q**3 - 5 * q**2 + 6 * q - 1
    assert beraha_min_poly(8) == q**2 - 4 * q + 2
    assert beraha_min_poly(10) == q**2 - 5 * q + 5


def test_cyclotomic():
    z = IntPoly.q()
    assert cyclotomic(1) == z - 1
    assert cyclotomic(6) == z**2 - z + 1
    assert cyclotomic(12) == z**4 - z**2 + 1
    for n in range(1, 40):
        assert cyclotomic(n).degree == totient(n)


@pytest.mark.parametrize("n", range(1, 51))
def test_degree_and_integrality(n):
    m = beraha_min_poly(n)
    assert m.leading == 1 and all(isinstance(c, int) for c in m.coeffs)
    assert m.degree == (1 if n <= 2 else totient(n) // 2)
    assert is_integer_beraha(n) == (n in INTEGER_N)


@pytest.mark.parametrize("n", range(1, 51))
def test_numeric_root(n):
    """m(B_n) is tiny at a 60-digit rational approximation of 2 + 2cos(2pi/n)."""
    with mpmath.workdps(60):
        x = Fraction(str(mpmath.mpf(2) + 2 * mpmath.cos(2 * mpmath.pi / n)))
    assert abs(beraha_min_poly(n)(x)) < Fraction(1, 10**20)


@pytest.mark.parametrize("n", [5, 7, 8, 9, 11, 13, 30, 49])
def test_all_roots_are_beraha_conjugates(n):
    """The roots of m are exactly 2 + 2cos(2 pi j / n) with gcd(j, n) = 1."""
    m = beraha_min_poly(n)
    with mpmath.workdps(40):
        want = sorted({mpmath.nstr(2 + 2 * mpmath.cos(2 * mpmath.pi * j / n), 20)
                       for j in range(1, n) if gcd(j, n) == 1})
        roots = mpmath.polyroots([c for c in reversed(m.coeffs)], maxsteps=200, extraprec=200)
        got = sorted({mpmath.nstr(mpmath.re(r), 20) for r in roots})
    assert got == want


def test_published_decimals():
    for n, dec in ((7, "3.2469796"), (9, "3.5320889")):
        lo, hi = beraha_interval(n)
        assert hi - lo <= Fraction(1, 10**12)
        assert f"{float(hi):.7f}" == dec
    assert f"{float(beraha_interval(5)[1]):.8f}" == "2.61803399"


def test_is_beraha_root():
    assert is_beraha_root(known.P_G1, 10)
    assert is_beraha_root(known.P_G2, 10)
    assert not is_beraha_root(known.P_G1, 5)
    assert is_beraha_root(q * (q - 4), 1)
    with pytest.raises(ValueError):
        is_beraha_root(IntPoly(), 10)


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=8).map(IntPoly), st.integers(3, 30))
def test_is_beraha_root_properties(p, n):
    m = beraha_min_poly(n)
    if p:
        assert is_beraha_root(p * m, n)
        if p % m:
            assert not is_beraha_root(p, n)


def test_factor_multiplicity():
    assert factor_multiplicity((q - 2) ** 3 * (q + 1), q - 2) == 3
    assert factor_multiplicity(q + 1, q - 2) == 0
    assert factor_multiplicity(chromatic_dc(gen_H()), q - 2) == 2
    with pytest.raises(ValueError):
        factor_multiplicity(IntPoly(), q - 2)
    with pytest.raises(ValueError):
        factor_multiplicity(q, IntPoly.const(2))


def test_forbidden_examples():
    r5 = forbidden_conjugate(5)
    assert r5.blocked and r5.witness_interval == (Fraction(0), Fraction(1))
    for n in (7, 8, 9):
        assert forbidden_conjugate(n).blocked
    r10 = forbidden_conjugate(10)
    assert not r10.blocked and r10.witness_interval is None
    assert r10.counts == (0, 0, 0)
    for n in INTEGER_N:
        with pytest.raises(ValueError):
            forbidden_conjugate(n)


def test_forbidden_endpoints():
    """0 and 1 never block; 32/27 does."""
    p = q * (q - 1) * (q - 3)
    assert _open_count(p, Fraction(-5), Fraction(0)) == 0
    assert _open_count(p, Fraction(0), Fraction(1)) == 0
    assert sturm_count(27 * q - 32, Fraction(1), FORBIDDEN_TOP) == 1


def test_sweep():
    rows = sweep(50)
    assert [r["n"] for r in rows] == list(range(1, 51))
    unblocked = [r["n"] for r in rows if not r["integer"] and not r["blocked"]]
    assert unblocked == [10]
    assert {r["n"] for r in rows if r["integer"]} == INTEGER_N


def test_golden_identity():
    assert verify_golden_identity(chromatic_dc(complete_graph(4)), 4)
    assert verify_golden_identity(chromatic_dc(octahedron()), 6)
    bipyramid = MultiGraph(5, ((0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (3, 2), (4, 0), (4, 1), (4, 2)))
    assert verify_golden_identity(chromatic_dc(bipyramid), 5)
    ico = nx.icosahedral_graph()
    assert verify_golden_identity(chromatic_dc(MultiGraph(12, tuple(ico.edges))), 12)
    # wheels other than K4 have a non-triangular outer face
    assert not verify_golden_identity(chromatic_dc(wheel_graph(5)), 6)
    assert not verify_golden_identity(chromatic_dc(cycle_graph(5)), 5)
    assert not verify_golden_identity(chromatic_dc(complete_graph(4)), 5)


def test_g1_g2_certificates_from_graphs():
    assert is_beraha_root(chromatic_dc(gen_G1()), 10)
    assert is_beraha_root(chromatic_dc(gen_G2()), 10)
