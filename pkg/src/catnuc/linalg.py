"""Exact dense linear algebra over :mod:`catnuc.fields`.

Matrices are 2-d numpy arrays of ``dtype=object`` holding field elements.
Subspaces are stored by the reduced row-echelon form of a basis, so two
subspaces are equal exactly when their stored bases are equal.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, FieldMismatchError, NotInvertibleError
from .fields import QQ, Field, common_field


def as_matrix(m, field: Field | None = None) -> np.ndarray:
    arr = np.asarray(m, dtype=object)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise DimensionError(f"expected a matrix, got shape {arr.shape}")
    return arr


def matrix_field(m: np.ndarray, field: Field | None = None) -> Field:
    return common_field(np.asarray(m, dtype=object).ravel(), default=field)


def _rref_in_place(a: np.ndarray, field: Field) -> list[int]:
    rows, cols = a.shape
    zero, one = field.zero, field.one
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = None
        for i in range(r, rows):
            if a[i, c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            a[[r, pivot]] = a[[pivot, r]]
        inv = one / a[r, c]
        if inv != one:
            a[r, c:] = [x * inv for x in a[r, c:]]
        for i in range(rows):
            if i != r and a[i, c] != 0:
                f = a[i, c]
                a[i, c:] = [x - f * y for x, y in zip(a[i, c:], a[r, c:])]
        pivots.append(c)
        r += 1
    # numpy may leave bare ints behind in untouched rows
    for idx in np.ndindex(a.shape):
        v = a[idx]
        if not field.contains(v):
            a[idx] = field(v) if v != 0 else zero
    return pivots


def rref_with_pivots(m, field: Field | None = None) -> tuple[np.ndarray, list[int]]:
    a = as_matrix(m).copy()
    fld = matrix_field(a, field)
    pivots = _rref_in_place(a, fld)
    return a, pivots


def rref(m, field: Field | None = None) -> np.ndarray:
    """Reduced row-echelon form (same shape, zero rows kept at the bottom)."""
    return rref_with_pivots(m, field)[0]


def rank(m, field: Field | None = None) -> int:
    return len(rref_with_pivots(m, field)[1])


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``field^ambient_dim`` given by a canonical (rref) basis."""

    field: Field
    ambient_dim: int
    basis: tuple  # tuple of row tuples, rref, no zero rows

    @classmethod
    def span(cls, vectors, ambient_dim: int, field: Field | None = None) -> "Subspace":
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise DimensionError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        if not vecs:
            return cls.zero(ambient_dim, field or QQ)
        mat = as_matrix(vecs)
        fld = matrix_field(mat, field)
        r, piv = rref_with_pivots(mat, fld)
        rows = tuple(tuple(r[i]) for i in range(len(piv)))
        return cls(fld, ambient_dim, rows)

    @classmethod
    def zero(cls, ambient_dim: int, field: Field = QQ) -> "Subspace":
        return cls(field, ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int, field: Field = QQ) -> "Subspace":
        eye = field.eye(ambient_dim)
        return cls(field, ambient_dim, tuple(tuple(eye[i]) for i in range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def matrix(self) -> np.ndarray:
        if not self.basis:
            return self.field.zeros((0, self.ambient_dim))
        return np.array(self.basis, dtype=object).reshape(self.dim, self.ambient_dim)

    def vectors(self) -> list[np.ndarray]:
        return [np.array(row, dtype=object) for row in self.basis]

    def contains(self, v) -> bool:
        v = list(v)
        if len(v) != self.ambient_dim:
            raise DimensionError("vector length does not match ambient dimension")
        if all(x == 0 for x in v):
            return True
        return rank(np.vstack([self.matrix, as_matrix(v)]), self.field) == self.dim

    def is_subspace_of(self, other: "Subspace") -> bool:
        _check_compatible(self, other)
        return all(other.contains(v) for v in self.basis)

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def __repr__(self):
        rows = [[self.field.format(x) for x in row] for row in self.basis]
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, basis={rows})"


def _check_compatible(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError(f"ambient dimensions {a.ambient_dim} and {b.ambient_dim} differ")
    if a.field != b.field:
        raise FieldMismatchError(f"subspaces over {a.field!r} and {b.field!r}")


def kernel(m, field: Field | None = None) -> Subspace:
    """Null space ``{v : m v = 0}`` as a canonical subspace."""
    a = as_matrix(m)
    fld = matrix_field(a, field)
    rows, cols = a.shape
    if rows == 0:
        return Subspace.full(cols, fld)
    r, pivots = rref_with_pivots(a, fld)
    free = [c for c in range(cols) if c not in pivots]
    vecs = []
    for fcol in free:
        v = [fld.zero] * cols
        v[fcol] = fld.one
        for i, pc in enumerate(pivots):
            v[pc] = -r[i, fcol]
        vecs.append(v)
    if not vecs:
        return Subspace.zero(cols, fld)
    return Subspace.span(vecs, cols, fld)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.ambient_dim, a.field)
    # x A = y B  <=>  [A^T | -B^T] (x, y)^T = 0
    A, B = a.matrix, b.matrix
    system = np.hstack([A.T, -B.T])
    ker = kernel(system, a.field)
    vecs = [np.array(k[: a.dim], dtype=object).dot(A) for k in ker.basis]
    return Subspace.span(vecs, a.ambient_dim, a.field)


def solve(m, rhs, field: Field | None = None):
    """One solution x of ``m x = rhs`` (rhs a vector or matrix), or None."""
    a = as_matrix(m)
    b = np.asarray(rhs, dtype=object)
    vector_rhs = b.ndim == 1
    if vector_rhs:
        b = b.reshape(-1, 1)
    if b.shape[0] != a.shape[0]:
        raise DimensionError("right-hand side has the wrong number of rows")
    fld = common_field(list(a.ravel()) + list(b.ravel()), default=field)
    aug = np.hstack([a, b])
    r, pivots = rref_with_pivots(aug, fld)
    n = a.shape[1]
    if any(p >= n for p in pivots):
        return None
    x = fld.zeros((n, b.shape[1]))
    for i, pc in enumerate(pivots):
        x[pc] = r[i, n:]
    return x[:, 0] if vector_rhs else x


def inverse(m, field: Field | None = None) -> np.ndarray:
    a = as_matrix(m)
    n, k = a.shape
    if n != k:
        raise DimensionError("only square matrices can be inverted")
    fld = matrix_field(a, field)
    x = solve(a, fld.eye(n), fld)
    if x is None or rank(a, fld) != n:
        raise NotInvertibleError("matrix is singular")
    return x


def identity(n: int, field: Field = QQ) -> np.ndarray:
    return field.eye(n)


def kron(*mats) -> np.ndarray:
    out = mats[0]
    for m in mats[1:]:
        out = np.kron(out, m)
    return out


def equal(a, b) -> bool:
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    if a.shape != b.shape:
        return False
    return all(x == y for x, y in zip(a.ravel(), b.ravel()))


def is_zero(a) -> bool:
    return all(x == 0 for x in np.asarray(a, dtype=object).ravel())
