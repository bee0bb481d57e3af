"""Matrices and row vectors over Laurent polynomials."""

from __future__ import annotations

from typing import Sequence

from .laurent import LaurentPoly


class PolyMatrix:
    """Row-major matrix of :class:`LaurentPoly` entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        if rows <= 0 or cols <= 0:
            raise ValueError("matrix dimensions must be positive")
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(LaurentPoly.coerce(e) for e in entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "PolyMatrix":
        return cls(len(rows), len(rows[0]), [e for r in rows for e in r])

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "PolyMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[LaurentPoly]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list[LaurentPoly]]:
        return [self.row(i) for i in range(self.rows)]

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return PolyMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "PolyMatrix":
        c = LaurentPoly.coerce(c)
        return PolyMatrix(self.rows, self.cols, [c * e for e in self.entries])

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = LaurentPoly()
                for k in range(self.cols):
                    a = self.entries[i * self.cols + k]
                    if a:
                        b = other.entries[k * other.cols + j]
                        if b:
                            acc = acc + a * b
                out.append(acc)
        return PolyMatrix(self.rows, other.cols, out)

    def __pow__(self, k: int) -> "PolyMatrix":
        if self.rows != self.cols or k < 0:
            raise ValueError("power needs a square matrix and k >= 0")
        result, base = PolyMatrix.identity(self.rows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols})"

    def to_json_obj(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [e.to_json_obj() for e in self.entries],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "PolyMatrix":
        return cls(obj["rows"], obj["cols"], [LaurentPoly.from_json_obj(e) for e in obj["entries"]])


def vec_mat(u: Sequence, m: PolyMatrix) -> list[LaurentPoly]:
    """Row vector times matrix."""
    if len(u) != m.rows:
        raise ValueError("vector length does not match matrix rows")
    out = []
    for j in range(m.cols):
        acc = LaurentPoly()
        for i, a in enumerate(u):
            if a:
                b = m.entries[i * m.cols + j]
                if b:
                    acc = acc + a * b
        out.append(acc)
    return out


def dot(u: Sequence, v: Sequence) -> LaurentPoly:
    if len(u) != len(v):
        raise ValueError("length mismatch")
    acc = LaurentPoly()
    for a, b in zip(u, v):
        acc = acc + LaurentPoly.coerce(a) * LaurentPoly.coerce(b)
    return acc
