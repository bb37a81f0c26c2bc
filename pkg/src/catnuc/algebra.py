"""Finite-dimensional algebras given by structure constants, linear maps
between them, and finite monoids given by Cayley tables."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

import numpy as np

from . import linalg
from .errors import DimensionError, FieldMismatchError, InvalidStructureError
from .fields import Field, common_field
from .linalg import Subspace

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Algebra:
    """``e_i e_j = sum_k c[i, j, k] e_k``.

    The structure constants are validated on construction, as is the unit
    when one is supplied.
    """

    field: Field
    c: np.ndarray
    unit: Optional[np.ndarray] = None
    names: Optional[tuple] = None

    def __post_init__(self):
        c = np.asarray(self.c, dtype=object)
        if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]):
            raise DimensionError(f"structure constants must be n x n x n, got {c.shape}")
        object.__setattr__(self, "c", self.field.array(c) if c.size else c)
        if self.names is not None:
            if len(self.names) != self.dim:
                raise DimensionError("names must have one entry per basis vector")
            object.__setattr__(self, "names", tuple(self.names))
        if self.unit is not None:
            u = self._vec(self.unit)
            object.__setattr__(self, "unit", u)
            for i in range(self.dim):
                e = self.basis_vector(i)
                if not (linalg.equal(multiply(self, u, e), e) and linalg.equal(multiply(self, e, u), e)):
                    raise InvalidStructureError(f"declared unit fails the unit law on basis vector {i}")

    @property
    def dim(self) -> int:
        return self.c.shape[0]

    def _vec(self, x) -> np.ndarray:
        v = np.asarray(x, dtype=object)
        if v.shape != (self.dim,):
            raise DimensionError(f"expected a vector of length {self.dim}, got shape {v.shape}")
        common_field(v, default=self.field)
        return self.field.array(v)

    def basis_vector(self, i: int) -> np.ndarray:
        v = self.field.zeros(self.dim)
        v[i] = self.field.one
        return v

    def zero_vector(self) -> np.ndarray:
        return self.field.zeros(self.dim)

    def name(self, i: int) -> str:
        return self.names[i] if self.names else f"e{i}"

    def with_unit(self) -> "Algebra":
        """Same algebra with its unit attached (computed by :func:`find_unit`)."""
        u = find_unit(self)
        if u is None:
            raise InvalidStructureError("algebra has no unit")
        return Algebra(self.field, self.c, u, self.names)

    def left_mult_matrix(self, x) -> np.ndarray:
        """Matrix of ``y -> x y``."""
        x = self._vec(x)
        return np.tensordot(x, self.c, axes=([0], [0])).T

    def right_mult_matrix(self, y) -> np.ndarray:
        """Matrix of ``x -> x y``."""
        y = self._vec(y)
        return np.tensordot(y, self.c, axes=([0], [1])).T


def multiply(A: Algebra, x, y) -> np.ndarray:
    x, y = A._vec(x), A._vec(y)
    if A.dim == 0:
        return A.zero_vector()
    return np.tensordot(np.outer(x, y), A.c, axes=([0, 1], [0, 1]))


def associator(A: Algebra, x, y, z) -> np.ndarray:
    """``J(x, y, z) = x(yz) - (xy)z``."""
    return multiply(A, x, multiply(A, y, z)) - multiply(A, multiply(A, x, y), z)


def associator_tensor(A: Algebra) -> np.ndarray:
    """All basis associators: ``T[i, j, k] = J(e_i, e_j, e_k)`` (shape n^4)."""
    c = A.c
    if A.dim == 0:
        return A.field.zeros((0, 0, 0, 0))
    x_yz = np.tensordot(c, c, axes=([2], [1])).transpose(2, 0, 1, 3)  # c[j,k,l] c[i,l,m]
    xy_z = np.tensordot(c, c, axes=([2], [0]))  # c[i,j,l] c[l,k,m]
    return x_yz - xy_z


def is_associative(A: Algebra) -> bool:
    return linalg.is_zero(associator_tensor(A))


def is_commutative(A: Algebra) -> bool:
    return linalg.equal(A.c, A.c.transpose(1, 0, 2))


def find_unit(A: Algebra) -> Optional[np.ndarray]:
    """The two-sided unit, or None.

    Solves ``e e_j = e_j`` and ``e_j e = e_j`` for all j as one stacked
    linear system in the coordinates of ``e``.
    """
    n = A.dim
    if n == 0:
        return None
    # row block j (left law): sum_i e_i c[i, j, :] = e_j
    left = A.c.transpose(1, 2, 0).reshape(n * n, n)
    # row block j (right law): sum_i e_i c[j, i, :] = e_j
    right = A.c.transpose(0, 2, 1).reshape(n * n, n)
    eye = A.field.eye(n).reshape(n * n)
    system = np.vstack([left, right])
    rhs = np.concatenate([eye, eye])
    sol = linalg.solve(system, rhs, A.field)
    if sol is None:
        return None
    null = linalg.kernel(system, A.field)
    if null.dim > 0:
        log.warning("unit equations have a %d-dimensional solution space; reporting no unit", null.dim)
        return None
    return sol


def is_subalgebra_closed(A: Algebra, S: Subspace) -> bool:
    if S.ambient_dim != A.dim:
        raise DimensionError("subspace ambient dimension differs from the algebra dimension")
    vecs = S.vectors()
    return all(S.contains(multiply(A, u, v)) for u in vecs for v in vecs)


def restrict(A: Algebra, S: Subspace) -> Algebra:
    """Structure constants of a multiplicatively closed subspace in its stored basis."""
    if not is_subalgebra_closed(A, S):
        raise InvalidStructureError("subspace is not closed under multiplication")
    r = S.dim
    vecs = S.vectors()
    B = S.matrix.T  # ambient x r
    c = A.field.zeros((r, r, r))
    for s, t in itertools.product(range(r), repeat=2):
        coords = linalg.solve(B, multiply(A, vecs[s], vecs[t]), A.field)
        c[s, t] = coords
    return Algebra(A.field, c)


def transform_basis(A: Algebra, P) -> Algebra:
    """Rewrite ``A`` in the basis ``f_i = sum_j P[j, i] e_j`` (columns of P)."""
    P = A.field.array(P)
    Pinv = linalg.inverse(P, A.field)
    # f_a f_b = sum P[i,a] P[j,b] c[i,j,k] e_k ; then back to f-coordinates
    c = np.tensordot(np.tensordot(np.tensordot(A.c, P, axes=([0], [0])), P, axes=([0], [0])), Pinv, axes=([0], [1]))
    unit = None if A.unit is None else Pinv.dot(A.unit)
    return Algebra(A.field, c, unit)


@dataclass(frozen=True, eq=False)
class LinearMap:
    source: Algebra
    target: Algebra
    matrix: np.ndarray  # target.dim x source.dim

    def __post_init__(self):
        if self.source.field != self.target.field:
            raise FieldMismatchError("source and target live over different fields")
        shape = (self.target.dim, self.source.dim)
        m = np.asarray(self.matrix, dtype=object)
        if m.size == 0 and shape[0] * shape[1] == 0:
            m = self.source.field.zeros(shape)
        elif m.shape != shape:
            raise DimensionError(f"matrix must be {shape[0]} x {shape[1]}, got {m.shape}")
        else:
            m = self.source.field.array(m)
        object.__setattr__(self, "matrix", m)

    def __call__(self, x) -> np.ndarray:
        x = self.source._vec(x)
        if self.source.dim == 0:
            return self.target.zero_vector()
        return self.matrix.dot(x)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """``self o other``."""
        return LinearMap(other.source, self.target, self.matrix.dot(other.matrix))

    def is_homomorphism(self) -> bool:
        return linalg.is_zero(defect_tensor(self))


def multiplicative_defect(f: LinearMap, x, y) -> np.ndarray:
    """``m_f(x, y) = f(xy) - f(x) f(y)``."""
    return f(multiply(f.source, x, y)) - multiply(f.target, f(x), f(y))


def defect_tensor(f: LinearMap) -> np.ndarray:
    """``D[i, j] = m_f(e_i, e_j)`` for all basis pairs (shape n x n x m)."""
    A, B, F = f.source, f.target, f.matrix
    if A.dim == 0:
        return A.field.zeros((0, 0, B.dim))
    f_of_prod = np.tensordot(A.c, F, axes=([2], [1]))  # [i, j, k]
    if B.dim == 0:
        return f_of_prod
    prod_of_f = np.tensordot(np.tensordot(F, F, axes=0).transpose(1, 3, 0, 2), B.c, axes=([2, 3], [0, 1]))
    return f_of_prod - prod_of_f


# ---------------------------------------------------------------- monoids


def _table_tuple(table) -> tuple:
    try:
        return tuple(tuple(int(x) for x in row) for row in table)
    except (TypeError, ValueError) as exc:
        raise InvalidStructureError("table entries must be integers") from exc


def is_monoid(table, unit: Optional[int] = None) -> bool:
    """Exhaustive closure, unit and associativity test of a raw Cayley table.

    Accepts a :class:`FiniteMonoid` too (which is then trivially valid).
    """
    if isinstance(table, FiniteMonoid):
        table, unit = table.table, table.unit
    t = _table_tuple(table)
    n = len(t)
    if any(len(row) != n for row in t):
        return False
    if any(not 0 <= x < n for row in t for x in row):
        return False
    units = [e for e in range(n) if all(t[e][x] == x and t[x][e] == x for x in range(n))]
    if unit is None:
        if not units:
            return False
    elif unit not in units:
        return False
    return all(t[t[a][b]][c] == t[a][t[b][c]] for a in range(n) for b in range(n) for c in range(n))


@dataclass(frozen=True)
class FiniteMonoid:
    table: tuple
    unit: int
    names: Optional[tuple] = dc_field(default=None, compare=False)

    def __post_init__(self):
        t = _table_tuple(self.table)
        object.__setattr__(self, "table", t)
        if not is_monoid(t, self.unit):
            raise InvalidStructureError("table is not a monoid with the given unit")

    @property
    def size(self) -> int:
        return len(self.table)

    def __len__(self):
        return self.size

    def multiply(self, a: int, b: int) -> int:
        return monoid_multiply(self, a, b)

    @classmethod
    def from_table(cls, table, names=None) -> "FiniteMonoid":
        t = _table_tuple(table)
        n = len(t)
        units = [e for e in range(n) if all(t[e][x] == x and t[x][e] == x for x in range(n))]
        if not units:
            raise InvalidStructureError("table has no two-sided unit")
        return cls(t, units[0], None if names is None else tuple(names))


def monoid_multiply(M: FiniteMonoid, a: int, b: int) -> int:
    if not (0 <= a < M.size and 0 <= b < M.size):
        raise InvalidStructureError(f"elements ({a}, {b}) out of range for a monoid of size {M.size}")
    return M.table[a][b]


def iter_triples(n: int):
    return itertools.product(range(n), repeat=3)


def basis_pairs(n: int) -> Sequence[tuple]:
    return list(itertools.product(range(n), repeat=2))
