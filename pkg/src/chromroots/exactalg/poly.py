"""Dense univariate polynomials over the rationals.

Coefficients are kept as ``int`` whenever they are integral and as
``fractions.Fraction`` otherwise, so integer-only work (chromatic
polynomials) never pays for rational normalisation.
"""

from __future__ import annotations

import ast
import json
import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

Coeff = "int | Fraction"


def _norm(c) -> int | Fraction:
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        f = Fraction(c.numerator, c.denominator)
        return f.numerator if f.denominator == 1 else f
    raise TypeError(f"not an exact rational: {c!r}")


def _strip(cs: list) -> list:
    while cs and not cs[-1]:
        cs.pop()
    return cs


class IntPoly:
    """Polynomial in ``q`` with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of ``q**i``; the zero polynomial has
    an empty coefficient list.  Instances are immutable.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self._c = tuple(_strip([_norm(c) for c in coeffs]))
        self._hash = None

    @classmethod
    def _raw(cls, cs: list) -> "IntPoly":
        p = object.__new__(cls)
        p._c = tuple(_strip(cs))
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "IntPoly":
        return cls([c])

    @classmethod
    def q(cls) -> "IntPoly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, k: int, c=1) -> "IntPoly":
        if k < 0:
            raise ValueError("negative exponent in IntPoly.monomial")
        return cls([0] * k + [c])

    @classmethod
    def falling_factorial(cls, n: int) -> "IntPoly":
        """(q)_n = q(q-1)...(q-n+1), the chromatic polynomial of K_n."""
        out = cls.const(1)
        for i in range(n):
            out = out * cls([-i, 1])
        return out

    # -- basic accessors --------------------------------------------------
    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    @property
    def leading(self):
        return self._c[-1] if self._c else 0

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, i: int):
        return self._c[i] if 0 <= i < len(self._c) else 0

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._c)

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "IntPoly | None":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return IntPoly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return IntPoly._raw([_norm(c) for c in out])

    __radd__ = __add__

    def __neg__(self):
        return IntPoly._raw([-c for c in self._c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        if not a or not b:
            return IntPoly._raw([])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return IntPoly._raw([_norm(c) for c in out])

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("IntPoly power must be a nonnegative int")
        result, base = IntPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "IntPoly":
        c = _norm(c)
        return IntPoly._raw([_norm(x * c) for x in self._c])

    def shift(self, k: int) -> "IntPoly":
        """Multiply by q**k (k >= 0)."""
        if not self._c:
            return self
        return IntPoly._raw([0] * k + list(self._c))

    def divrem(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        return poly_divrem(self, other)

    def __floordiv__(self, other):
        return poly_divrem(self, _as_poly(other))[0]

    def __mod__(self, other):
        return poly_divrem(self, _as_poly(other))[1]

    def exact_div(self, other) -> "IntPoly":
        """Quotient of an exact division; raises ``ArithmeticError`` otherwise."""
        quo, rem = poly_divrem(self, _as_poly(other))
        if rem:
            raise ArithmeticError(f"{other} does not divide {self}")
        return quo

    def divides(self, other: "IntPoly") -> bool:
        return not poly_divrem(other, self)[1]

    # -- evaluation and calculus -----------------------------------------
    def __call__(self, x):
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly._raw([i * c for i, c in enumerate(self._c)][1:])

    def compose(self, inner: "IntPoly") -> "IntPoly":
        acc = IntPoly._raw([])
        for c in reversed(self._c):
            acc = acc * inner + c
        return acc

    def monic(self) -> "IntPoly":
        if not self._c:
            return self
        return self.scale(Fraction(1) / self.leading) if self.leading != 1 else self

    def content(self) -> Fraction:
        """Positive rational c with self / c primitive and integral."""
        if not self._c:
            return Fraction(0)
        from math import gcd, lcm

        den = 1
        for c in self._c:
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        num = 0
        for c in self._c:
            num = gcd(num, int(c * den))
        return Fraction(num, den)

    def primitive(self) -> "IntPoly":
        """Integral primitive part with positive leading coefficient."""
        if not self._c:
            return self
        c = self.content()
        if self.leading < 0:
            c = -c
        return self.scale(1 / c)

    # -- comparison, hashing, display -------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("IntPoly", self._c))
        return self._hash

    def __repr__(self):
        return f"IntPoly({list(self._c)!r})"

    def __str__(self):
        return format_terms([(i, c) for i, c in enumerate(self._c)], var="q")

    # -- serialization ----------------------------------------------------
    def to_json_obj(self) -> dict:
        lo = 0
        while lo < len(self._c) and not self._c[lo]:
            lo += 1
        return _json_obj(lo if self._c else 0, self._c[lo:])

    @classmethod
    def from_json_obj(cls, obj: dict) -> "IntPoly":
        min_exp, cs = _parse_json_obj(obj)
        if min_exp < 0:
            raise ValueError("negative min_exp for a plain polynomial")
        return cls([0] * min_exp + cs)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, s: str) -> "IntPoly":
        return cls.from_json_obj(json.loads(s))

    @classmethod
    def parse(cls, text: str, var: str = "q") -> "IntPoly":
        """Read things like ``q^2-5q+5`` or ``(q-1)**2 * (3*q - 2)``."""
        src = text.replace("^", "**")
        src = re.sub(r"(\d)\s*(%s|\()" % re.escape(var), r"\1*\2", src)
        src = re.sub(r"\)\s*(\(|%s|\d)" % re.escape(var), r")*\1", src)
        try:
            tree = ast.parse(src, mode="eval")
        except SyntaxError as exc:
            raise ValueError(f"cannot parse polynomial {text!r}") from exc
        return _as_poly(_eval_ast(tree.body, var, text))


def _as_poly(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return IntPoly.const(x)
    raise TypeError(f"cannot treat {x!r} as a polynomial")


_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
}


def _eval_ast(node, var: str, text: str):
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return node.value
    if isinstance(node, ast.Name) and node.id == var:
        return IntPoly.q()
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_ast(node.operand, var, text)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        left = _eval_ast(node.left, var, text)
        if isinstance(node.op, ast.Pow):
            if not (isinstance(node.right, ast.Constant) and type(node.right.value) is int
                    and node.right.value >= 0):
                raise ValueError(f"exponents must be nonnegative integers in {text!r}")
            return _as_poly(left) ** node.right.value
        if isinstance(node.op, ast.Div):
            right = _eval_ast(node.right, var, text)
            if not isinstance(right, int) or right == 0:
                raise ValueError(f"can only divide by nonzero integers in {text!r}")
            return _as_poly(left).scale(Fraction(1, right))
        op = _BINOPS.get(type(node.op))
        if op is not None:
            return op(left, _eval_ast(node.right, var, text))
    raise ValueError(f"unsupported syntax in polynomial {text!r}")


def poly_divrem(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Euclidean division ``a = quo*b + rem`` with ``deg rem < deg b``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return IntPoly._raw([]), a
    rem = list(a.coeffs)
    bc = b.coeffs
    db = len(bc) - 1
    lead = bc[-1]
    unit = lead == 1
    quo = [0] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        c = rem[k + db]
        if not c:
            continue
        if not unit:
            c = _norm(Fraction(c) / lead)
        quo[k] = c
        for j in range(db + 1):
            rem[k + j] -= c * bc[j]
    rem = [_norm(x) for x in rem[:db]]
    return IntPoly._raw(quo), IntPoly._raw(rem)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Monic gcd over Q (zero if both are zero)."""
    while b:
        a, b = b, poly_divrem(a, b)[1].monic()
    return a.monic()


def format_terms(terms: Sequence[tuple[int, object]], var: str = "q") -> str:
    parts = []
    for e, c in sorted(terms, key=lambda t: -t[0]):
        if not c:
            continue
        neg = c < 0
        mag = -c if neg else c
        if e == 0:
            body = str(mag)
        else:
            powpart = var if e == 1 else f"{var}^{e}"
            if mag == 1:
                body = powpart
            elif isinstance(mag, Fraction):
                body = f"({mag})*{powpart}"
            else:
                body = f"{mag}*{powpart}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts) if parts else "0"


def _json_obj(min_exp: int, cs: Sequence) -> dict:
    out = []
    for c in cs:
        f = Fraction(c)
        out.append([str(f.numerator), str(f.denominator)])
    return {"min_exp": min_exp, "coeffs": out}


def _parse_json_obj(obj: dict) -> tuple[int, list]:
    try:
        min_exp = int(obj["min_exp"])
        cs = [Fraction(int(n), int(d)) for n, d in obj["coeffs"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed polynomial JSON: {obj!r}") from exc
    return min_exp, cs
