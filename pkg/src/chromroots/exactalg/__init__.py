"""Exact arithmetic: rationals, polynomials, Laurent polynomials, Q(sqrt d), matrices."""

from fractions import Fraction as Rational

from .krylov import NoDependenceError, Recurrence, krylov_min_dependence, verify_matrix_identity
from .laurent import LaurentPoly
from .matrix import PolyMatrix, dot, vec_mat
from .poly import IntPoly, poly_divrem, poly_gcd
from .quadext import QuadExt, quad_eval
from .sturm import count_real_roots, isolate_real_roots, squarefree_part, sturm_count

__all__ = [
    "IntPoly",
    "LaurentPoly",
    "NoDependenceError",
    "PolyMatrix",
    "QuadExt",
    "Rational",
    "Recurrence",
    "count_real_roots",
    "dot",
    "isolate_real_roots",
    "krylov_min_dependence",
    "poly_divrem",
    "poly_gcd",
    "quad_eval",
    "squarefree_part",
    "sturm_count",
    "vec_mat",
    "verify_matrix_identity",
]
