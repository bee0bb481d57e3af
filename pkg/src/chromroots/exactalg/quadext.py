"""Elements a + b*sqrt(d) of a real quadratic field Q(sqrt d)."""

from __future__ import annotations

from fractions import Fraction
from math import sqrt

from .poly import IntPoly, _norm


def _squarefree(d: int) -> bool:
    if d in (0, 1):
        return False
    m = abs(d)
    f = 2
    while f * f <= m:
        if m % (f * f) == 0:
            return False
        f += 1
    return True


class QuadExt:
    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 5):
        if not _squarefree(d):
            raise ValueError(f"d={d} must be a squarefree integer other than 0, 1")
        self.a = _norm(Fraction(a))
        self.b = _norm(Fraction(b))
        self.d = d

    @classmethod
    def sqrt(cls, d: int) -> "QuadExt":
        return cls(0, 1, d)

    @classmethod
    def golden_ratio(cls) -> "QuadExt":
        return cls(Fraction(1, 2), Fraction(1, 2), 5)

    def _lift(self, other) -> "QuadExt | None":
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ValueError("mixing different quadratic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self.d)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExt(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return Fraction(self.a * self.a - self.d * self.b * self.b)

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt d)")
        return QuadExt(Fraction(self.a) / n, Fraction(-self.b) / n, self.d)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = QuadExt(1, 0, self.d), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except ValueError:
            return False
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def sign(self) -> int:
        """Exact sign of the real number a + b*sqrt(d) (requires d > 0)."""
        if self.d < 0:
            raise ValueError("sign is undefined for imaginary quadratic fields")
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with d*b^2
        lhs, rhs = self.a * self.a, self.d * self.b * self.b
        if lhs == rhs:
            return 0
        return sa if lhs > rhs else sb

    def __float__(self):
        return float(self.a) + float(self.b) * sqrt(self.d)

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, d={self.d})"

    def __str__(self):
        return f"{self.a} + ({self.b})*sqrt({self.d})"


def quad_eval(p: IntPoly, x: QuadExt) -> QuadExt:
    """Exact Horner evaluation of ``p`` at ``x`` in Q(sqrt d)."""
    acc = QuadExt(0, 0, x.d)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc
