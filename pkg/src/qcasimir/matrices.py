"""Sparse exact matrices over :class:`~qcasimir.scalars.QScalar`."""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from .scalars import ONE, ZERO, QScalar, as_scalar

Vector = Dict[int, QScalar]


class SparseMatrix:
    """Row-major dict-of-dicts matrix; zero entries are never stored."""

    __slots__ = ("shape", "rows", "space")

    def __init__(self, shape: Tuple[int, int], rows: Optional[Mapping[int, Mapping[int, QScalar]]] = None, space=None):
        self.shape = (int(shape[0]), int(shape[1]))
        self.rows: Dict[int, Dict[int, QScalar]] = {}
        self.space = space
        if rows:
            for r, row in rows.items():
                clean = {c: v for c, v in row.items() if v}
                if clean:
                    self.rows[r] = clean

    @classmethod
    def from_entries(cls, shape, entries: Iterable[Tuple[int, int, QScalar]], space=None) -> "SparseMatrix":
        rows: Dict[int, Dict[int, QScalar]] = {}
        for r, c, v in entries:
            if not (0 <= r < shape[0] and 0 <= c < shape[1]):
                raise IndexError(f"entry ({r}, {c}) outside shape {shape}")
            row = rows.setdefault(r, {})
            row[c] = row[c] + v if c in row else as_scalar(v)
        return cls(shape, rows, space)

    @classmethod
    def identity(cls, n: int, space=None) -> "SparseMatrix":
        return cls((n, n), {i: {i: ONE} for i in range(n)}, space)

    @classmethod
    def diagonal(cls, values: List[QScalar], space=None) -> "SparseMatrix":
        n = len(values)
        return cls((n, n), {i: {i: v} for i, v in enumerate(values) if v}, space)

    @classmethod
    def zeros(cls, n: int, m: Optional[int] = None, space=None) -> "SparseMatrix":
        return cls((n, n if m is None else m), None, space)

    def __getitem__(self, rc: Tuple[int, int]) -> QScalar:
        r, c = rc
        return self.rows.get(r, {}).get(c, ZERO)

    def entries(self) -> Iterator[Tuple[int, int, QScalar]]:
        for r in sorted(self.rows):
            row = self.rows[r]
            for c in sorted(row):
                yield r, c, row[c]

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def is_zero(self) -> bool:
        return not self.rows

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def _combine(self, other: "SparseMatrix", sign: int) -> "SparseMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        rows = {r: dict(row) for r, row in self.rows.items()}
        for r, row in other.rows.items():
            target = rows.setdefault(r, {})
            for c, v in row.items():
                if c in target:
                    w = target[c] + v if sign > 0 else target[c] - v
                else:
                    w = v if sign > 0 else -v
                if w:
                    target[c] = w
                else:
                    target.pop(c, None)
            if not target:
                del rows[r]
        return SparseMatrix(self.shape, rows, self.space)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self._combine(other, 1)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self._combine(other, -1)

    def __neg__(self) -> "SparseMatrix":
        return SparseMatrix(self.shape, {r: {c: -v for c, v in row.items()} for r, row in self.rows.items()}, self.space)

    def scale(self, x) -> "SparseMatrix":
        x = as_scalar(x)
        if not x:
            return SparseMatrix(self.shape, None, self.space)
        return SparseMatrix(self.shape, {r: {c: x * v for c, v in row.items()} for r, row in self.rows.items()}, self.space)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out: Dict[int, Dict[int, QScalar]] = {}
        orows = other.rows
        for r, row in self.rows.items():
            acc: Dict[int, QScalar] = {}
            for k, a in row.items():
                brow = orows.get(k)
                if not brow:
                    continue
                for c, b in brow.items():
                    p = a * b
                    acc[c] = acc[c] + p if c in acc else p
            acc = {c: v for c, v in acc.items() if v}
            if acc:
                out[r] = acc
        return SparseMatrix((self.shape[0], other.shape[1]), out, self.space)

    def apply(self, vec: Mapping[int, QScalar]) -> Vector:
        out: Vector = {}
        for r, row in self.rows.items():
            acc = ZERO
            for c, a in row.items():
                v = vec.get(c)
                if v is not None:
                    acc = acc + a * v
            if acc:
                out[r] = acc
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix.from_entries((self.shape[1], self.shape[0]), ((c, r, v) for r, c, v in self.entries()), self.space)

    def kron(self, other: "SparseMatrix") -> "SparseMatrix":
        n2, m2 = other.shape
        rows: Dict[int, Dict[int, QScalar]] = {}
        for r1, row1 in self.rows.items():
            for r2, row2 in other.rows.items():
                target = rows.setdefault(r1 * n2 + r2, {})
                for c1, a in row1.items():
                    for c2, b in row2.items():
                        target[c1 * m2 + c2] = a * b
        return SparseMatrix((self.shape[0] * n2, self.shape[1] * m2), rows)

    def commutator(self, other: "SparseMatrix") -> "SparseMatrix":
        return self @ other - other @ self

    def trace(self) -> QScalar:
        acc = ZERO
        for r, row in self.rows.items():
            if r in row:
                acc = acc + row[r]
        return acc

    def scalar_value(self) -> Optional[QScalar]:
        """The scalar ``c`` if this matrix equals ``c * Id``, else ``None``."""
        n = self.shape[0]
        if self.shape[1] != n:
            return None
        c = self[0, 0]
        for r in range(n):
            row = self.rows.get(r, {})
            if any(col != r for col in row):
                return None
            if row.get(r, ZERO) != c:
                return None
        return c

    def first_difference(self, other: "SparseMatrix") -> Optional[Tuple[int, int, QScalar, QScalar]]:
        for r, c, v in (self - other).entries():
            return r, c, self[r, c], other[r, c]
        return None

    def to_json(self) -> dict:
        out = {"shape": list(self.shape), "entries": [[r, c, v.to_json()] for r, c, v in self.entries()]}
        if self.space is not None:
            out["space"] = self.space.to_json()
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "SparseMatrix":
        shape = tuple(data["shape"])
        return cls.from_entries(shape, ((r, c, QScalar.from_json(v)) for r, c, v in data["entries"]))

    def __repr__(self) -> str:
        return f"SparseMatrix(shape={self.shape}, nnz={self.nnz()})"


def kron_all(mats: List[SparseMatrix]) -> SparseMatrix:
    out = mats[0]
    for m in mats[1:]:
        out = out.kron(m)
    return out


def matrix_unit(n: int, a: int, b: int) -> SparseMatrix:
    """``e_{ab}``: sends basis vector ``b`` to basis vector ``a``."""
    return SparseMatrix((n, n), {a: {b: ONE}})


def determinant(mat: SparseMatrix) -> QScalar:
    """Exact determinant by Laplace expansion along the sparsest row (small sizes)."""
    n = mat.shape[0]
    if mat.shape != (n, n):
        raise ValueError("determinant of a non-square matrix")

    def det(rows: Tuple[int, ...], cols: Tuple[int, ...]) -> QScalar:
        if not rows:
            return ONE
        r = rows[0]
        acc = ZERO
        row = mat.rows.get(r, {})
        for pos, c in enumerate(cols):
            v = row.get(c)
            if v:
                minor = det(rows[1:], cols[:pos] + cols[pos + 1:])
                acc = acc + v * minor if pos % 2 == 0 else acc - v * minor
        return acc

    return det(tuple(range(n)), tuple(range(n)))
