"""Linear recurrences and their extraction from Krylov sequences u, uT, uT^2, ..."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .laurent import LaurentPoly
from .matrix import PolyMatrix, vec_mat
from .poly import IntPoly, poly_gcd


@dataclass(frozen=True)
class Recurrence:
    """``P[k+p] = sum(coeffs[i-1] * P[k+p-i] for i in 1..p)`` seeded by ``base_cases``."""

    coeffs: tuple[IntPoly, ...]
    base_cases: tuple[IntPoly, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        object.__setattr__(self, "base_cases", tuple(self.base_cases))
        if not self.coeffs:
            raise ValueError("recurrence order must be positive")
        if self.base_cases and len(self.base_cases) != len(self.coeffs):
            raise ValueError("need exactly one base case per recurrence coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def step(self, window: Sequence) -> object:
        """Next term from the last ``order`` terms (oldest first)."""
        p = self.order
        acc = 0
        for i, a in enumerate(self.coeffs, start=1):
            acc = acc + a * window[p - i]
        return acc

    def terms(self, count: int, seed: Sequence | None = None) -> list:
        vals = list(seed if seed is not None else self.base_cases)
        if len(vals) < self.order:
            raise ValueError("not enough initial terms")
        while len(vals) < count:
            vals.append(self.step(vals[-self.order:]))
        return vals[:count]

    def to_json_obj(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [c.to_json_obj() for c in self.coeffs],
            "base_cases": [b.to_json_obj() for b in self.base_cases],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Recurrence":
        return cls(
            tuple(IntPoly.from_json_obj(c) for c in obj["coeffs"]),
            tuple(IntPoly.from_json_obj(b) for b in obj.get("base_cases", ())),
        )


class NoDependenceError(ValueError):
    def __init__(self, max_order: int):
        super().__init__(f"no linear dependence found up to order {max_order}")
        self.max_order = max_order


def _bareiss(mat: list[list[IntPoly]]) -> tuple[int, list[int], IntPoly]:
    """Fraction-free elimination: (rank, original pivot-row indices, last pivot)."""
    a = [list(r) for r in mat]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    perm = list(range(nrows))
    prev = IntPoly.const(1)
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        perm[r], perm[piv] = perm[piv], perm[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]).exact_div(prev)
            a[i][c] = IntPoly()
        prev = a[r][c]
        r += 1
        if r == nrows:
            break
    return r, perm[:r], prev


def _det(mat: list[list[IntPoly]]) -> IntPoly:
    n = len(mat)
    if n == 0:
        return IntPoly.const(1)
    a = [list(r) for r in mat]
    sign = 1
    prev = IntPoly.const(1)
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return IntPoly()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] if sign == 1 else -a[n - 1][n - 1]


def _clear(vectors: list[list[LaurentPoly]]) -> list[list[IntPoly]]:
    low = min((e.min_exp for v in vectors for e in v if e), default=0)
    s = -min(low, 0)
    return [[e.shift(s).to_poly() for e in v] for v in vectors]


def krylov_min_dependence(u0: Sequence, T: PolyMatrix, max_order: int) -> list[IntPoly]:
    """Minimal relation ``sum(c[i] * u0 T^i) = 0`` over Q(q).

    Returns polynomial coefficients ``[c_0, ..., c_d]`` with common factors
    removed and ``c_d`` having positive leading coefficient.
    """
    if T.rows != T.cols:
        raise ValueError("transfer matrix must be square")
    if len(u0) != T.rows:
        raise ValueError("initial vector length does not match the matrix")
    vecs = [[LaurentPoly.coerce(e) for e in u0]]
    if not any(vecs[0]):
        return [IntPoly.const(1)]
    for d in range(1, max_order + 1):
        vecs.append(vec_mat(vecs[-1], T))
        cols = _clear(vecs)
        # rows = vector components, columns = u_0..u_d
        mat = [[cols[j][i] for j in range(d + 1)] for i in range(T.rows)]
        rank, _, _ = _bareiss(mat)
        if rank == d + 1:
            continue
        _, pivrows, _ = _bareiss([row[:d] for row in mat])
        sub = [mat[i] for i in pivrows]
        coeffs = []
        for j in range(d + 1):
            minor = [[row[k] for k in range(d + 1) if k != j] for row in sub]
            coeffs.append(_det(minor) if j % 2 == 0 else -_det(minor))
        for row in mat:
            if sum((c * x for c, x in zip(coeffs, row)), IntPoly()):
                raise ArithmeticError("dependence check failed")
        return _normalize(coeffs)
    raise NoDependenceError(max_order)


def _normalize(coeffs: list[IntPoly]) -> list[IntPoly]:
    g = IntPoly()
    for c in coeffs:
        g = poly_gcd(g, c)
    out = [c.exact_div(g) for c in coeffs]
    content = _common_content(out)
    sign = -1 if out[-1].leading < 0 else 1
    return [c.scale(sign / content) for c in out]


def _common_content(polys: list[IntPoly]) -> Fraction:
    den = 1
    for p in polys:
        for c in p.coeffs:
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
    num = 0
    for p in polys:
        for c in p.coeffs:
            num = gcd(num, int(c * den))
    return Fraction(num, den) if num else Fraction(1)


def verify_matrix_identity(T: PolyMatrix, rec: Recurrence) -> bool:
    """Whether ``T^p - sum(a_i T^(p-i)) == 0`` for the recurrence coefficients a_i."""
    p = rec.order
    powers = [PolyMatrix.identity(T.rows)]
    for _ in range(p):
        powers.append(powers[-1] @ T)
    acc = powers[p]
    for i, a in enumerate(rec.coeffs, start=1):
        acc = acc - powers[p - i].scale(LaurentPoly.from_poly(a))
    return acc.is_zero()
