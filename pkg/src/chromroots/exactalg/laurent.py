"""Laurent polynomials: q**min_exp times a polynomial with nonzero constant term."""

from __future__ import annotations

import json
from fractions import Fraction

from .poly import IntPoly, _json_obj, _parse_json_obj, format_terms


class LaurentPoly:
    """Exact Laurent polynomial in ``q``.

    Stored canonically as ``(min_exp, coeffs)`` with ``coeffs[0]`` and
    ``coeffs[-1]`` nonzero; the zero element has ``min_exp == 0`` and no
    coefficients.
    """

    __slots__ = ("_e", "_body", "_hash")

    def __init__(self, coeffs=(), min_exp: int = 0):
        body = IntPoly(coeffs)
        self._set(body, min_exp)

    def _set(self, body: IntPoly, min_exp: int) -> None:
        cs = body.coeffs
        if not cs:
            self._e, self._body = 0, body
        else:
            lo = 0
            while not cs[lo]:
                lo += 1
            self._e = min_exp + lo
            self._body = IntPoly._raw(list(cs[lo:])) if lo else body
        self._hash = None

    @classmethod
    def from_poly(cls, p: IntPoly, min_exp: int = 0) -> "LaurentPoly":
        out = object.__new__(cls)
        out._set(p, min_exp)
        return out

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> "LaurentPoly":
        return cls([c], k)

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, IntPoly):
            return cls.from_poly(x)
        if isinstance(x, (int, Fraction)):
            return cls([x])
        raise TypeError(f"cannot treat {x!r} as a Laurent polynomial")

    @property
    def min_exp(self) -> int:
        return self._e

    @property
    def coeffs(self) -> tuple:
        return self._body.coeffs

    @property
    def max_exp(self) -> int:
        return self._e + len(self._body) - 1

    def is_zero(self) -> bool:
        return not self._body

    def __bool__(self) -> bool:
        return bool(self._body)

    def is_poly(self) -> bool:
        return self.is_zero() or self._e >= 0

    def to_poly(self) -> IntPoly:
        if not self.is_poly():
            raise ValueError(f"{self} has negative powers of q")
        return self._body.shift(self._e)

    def coefficient(self, k: int):
        return self._body[k - self._e]

    def terms(self) -> list[tuple[int, object]]:
        return [(self._e + i, c) for i, c in enumerate(self._body.coeffs) if c]

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        try:
            o = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not o:
            return self
        if not self:
            return o
        e = min(self._e, o._e)
        s = self._body.shift(self._e - e) + o._body.shift(o._e - e)
        return LaurentPoly.from_poly(s, e)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly.from_poly(-self._body, self._e)

    def __sub__(self, other):
        try:
            o = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        try:
            o = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return LaurentPoly.from_poly(self._body * o._body, self._e + o._e)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a Laurent polynomial")
        return LaurentPoly.from_poly(self._body ** k, self._e * k)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q**k (any integer k)."""
        return LaurentPoly.from_poly(self._body, self._e + k) if self else self

    def __call__(self, x):
        val = self._body(x)
        return val * x ** self._e if self._e >= 0 else val / x ** (-self._e)

    # -- comparison, display, JSON ----------------------------------------
    def __eq__(self, other):
        try:
            o = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self._e == o._e and self._body == o._body

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("LaurentPoly", self._e, self._body.coeffs))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({list(self.coeffs)!r}, min_exp={self._e})"

    def __str__(self):
        return format_terms(self.terms(), var="q")

    def to_json_obj(self) -> dict:
        return _json_obj(self._e, self.coeffs)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "LaurentPoly":
        min_exp, cs = _parse_json_obj(obj)
        return cls(cs, min_exp)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, s: str) -> "LaurentPoly":
        return cls.from_json_obj(json.loads(s))
