"""Elements of ``End(M) (x) R^{(x)k}`` as arrays of matrices.

A :class:`TensorElement` with ``k`` legs over an algebra of dimension ``n``
and an endomorphism leg of size ``d`` stores one ``d x d`` matrix for every
multi-index in ``range(n)^k``. The product is the matrix product on the
endomorphism leg and the algebra product on each ``R`` leg.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import linalg
from .algebra import Algebra
from .errors import DimensionError, NotInvertibleError


def _product_table(A: Algebra) -> dict:
    """``(i, j) -> [(k, c_ijk), ...]`` over nonzero structure constants."""
    table: dict = {}
    for i, j, k in zip(*np.nonzero(np.vectorize(lambda x: x != 0, otypes=[bool])(A.c))):
        table.setdefault((int(i), int(j)), []).append((int(k), A.c[i, j, k]))
    return table


_TABLES: dict = {}


def product_table(A: Algebra) -> dict:
    key = id(A)
    hit = _TABLES.get(key)
    if hit is None or hit[0] is not A:
        hit = (A, _product_table(A))
        _TABLES[key] = hit
    return hit[1]


def is_delta_basis(A: Algebra) -> bool:
    """True when the basis consists of orthogonal idempotents summing to 1."""
    n = A.dim
    for i, j, k in itertools.product(range(n), repeat=3):
        want = 1 if i == j == k else 0
        if A.c[i, j, k] != want:
            return False
    return True


def _action_matrices(rho) -> list:
    return list(rho.action) if hasattr(rho, "action") else list(rho)


@dataclass(frozen=True, eq=False)
class TensorElement:
    algebra: Algebra
    coeffs: np.ndarray  # shape (n,)*legs + (d, d)

    def __post_init__(self):
        arr = np.asarray(self.coeffs, dtype=object)
        n = self.algebra.dim
        if arr.ndim < 2 or arr.shape[-1] != arr.shape[-2] or any(s != n for s in arr.shape[:-2]):
            raise DimensionError(f"bad coefficient shape {arr.shape} for an algebra of dimension {n}")
        object.__setattr__(self, "coeffs", arr)

    # ---------------------------------------------------------- basics
    @property
    def legs(self) -> int:
        return self.coeffs.ndim - 2

    @property
    def end_dim(self) -> int:
        return self.coeffs.shape[-1]

    @property
    def field(self):
        return self.algebra.field

    def block(self, *index) -> np.ndarray:
        return self.coeffs[tuple(index)]

    def indices(self):
        return np.ndindex(*self.coeffs.shape[:-2])

    @cached_property
    def _nonzero_blocks(self) -> dict:
        return {I: self.coeffs[I] for I in self.indices() if not linalg.is_zero(self.coeffs[I])}

    @classmethod
    def identity(cls, algebra: Algebra, d: int, legs: int) -> "TensorElement":
        if algebra.unit is None:
            raise NotInvertibleError("identity element requires a unital algebra")
        f = algebra.field
        coeffs = f.zeros((algebra.dim,) * legs + (d, d))
        eye = f.eye(d)
        for I in np.ndindex(*(algebra.dim,) * legs):
            s = f.one
            for i in I:
                s = s * algebra.unit[i]
            if s != 0:
                coeffs[I] = eye * s
        return cls(algebra, coeffs)

    @classmethod
    def zero(cls, algebra: Algebra, d: int, legs: int) -> "TensorElement":
        return cls(algebra, algebra.field.zeros((algebra.dim,) * legs + (d, d)))

    @classmethod
    def pure(cls, algebra: Algebra, arr) -> "TensorElement":
        """An element of ``R^{(x)k}`` (trivial endomorphism leg, d = 1)."""
        arr = algebra.field.array(arr)
        return cls(algebra, arr.reshape(arr.shape + (1, 1)))

    @classmethod
    def of_end(cls, algebra: Algebra, matrix, legs: int = 0) -> "TensorElement":
        """``matrix (x) 1 (x) ... (x) 1``."""
        mat = np.asarray(matrix, dtype=object)
        one = cls.identity(algebra, 1, legs)
        coeffs = algebra.field.zeros(one.coeffs.shape[:-2] + mat.shape)
        for I in one.indices():
            s = one.coeffs[I][0, 0]
            if s != 0:
                coeffs[I] = mat * s
        return cls(algebra, coeffs)

    def scalars(self) -> np.ndarray:
        """Coefficients of a d = 1 element as a plain scalar array."""
        if self.end_dim != 1:
            raise DimensionError("element has a nontrivial endomorphism leg")
        return self.coeffs[..., 0, 0]

    # ------------------------------------------------------- arithmetic
    def _check(self, other: "TensorElement"):
        if other.algebra is not self.algebra and not linalg.equal(other.algebra.c, self.algebra.c):
            raise DimensionError("tensor elements over different algebras")
        if other.legs != self.legs or other.end_dim != self.end_dim:
            raise DimensionError(
                f"shape mismatch: {self.legs} legs/d={self.end_dim} vs {other.legs} legs/d={other.end_dim}"
            )

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check(other)
        out = self.field.zeros(self.coeffs.shape)
        table = product_table(self.algebra)
        ynz = other._nonzero_blocks
        for I, x in self._nonzero_blocks.items():
            for J, y in ynz.items():
                per_leg = []
                for i, j in zip(I, J):
                    entries = table.get((i, j))
                    if not entries:
                        break
                    per_leg.append(entries)
                else:
                    xy = x.dot(y)
                    for combo in itertools.product(*per_leg):
                        K = tuple(k for k, _ in combo)
                        s = self.field.one
                        for _, cf in combo:
                            s = s * cf
                        out[K] = out[K] + xy * s
        return TensorElement(self.algebra, out)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        return TensorElement(self.algebra, self.coeffs + other.coeffs)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        return TensorElement(self.algebra, self.coeffs - other.coeffs)

    def scale(self, s) -> "TensorElement":
        s = self.field(s)
        return TensorElement(self.algebra, self.coeffs * s)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.coeffs.shape == other.coeffs.shape and linalg.equal(self.coeffs, other.coeffs)

    __hash__ = None

    def is_zero(self) -> bool:
        return linalg.is_zero(self.coeffs)

    # ------------------------------------------------------- leg surgery
    def pushed(self, leg: int, rho) -> "TensorElement":
        """Evaluate ``leg`` through a representation; the endomorphism leg
        becomes ``End(M) (x) End(N)`` with the new factor on the right."""
        mats = _action_matrices(rho)
        if len(mats) != self.algebra.dim:
            raise DimensionError("representation has the wrong number of action matrices")
        arr = np.moveaxis(self.coeffs, leg, 0)
        rest = arr.shape[1:-2]
        dn = mats[0].shape[0] if mats else 0
        d = self.end_dim
        out = self.field.zeros(rest + (d * dn, d * dn))
        for R in np.ndindex(*rest):
            acc = out[R]
            for i in range(self.algebra.dim):
                blk = arr[(i,) + R]
                if not linalg.is_zero(blk):
                    acc = acc + np.kron(blk, mats[i])
            out[R] = acc
        return TensorElement(self.algebra, out)

    def evaluate(self, *modules) -> np.ndarray:
        """Operator on ``M (x) X_1 (x) ... (x) X_k`` (all legs pushed)."""
        if len(modules) != self.legs:
            raise DimensionError(f"need {self.legs} modules, got {len(modules)}")
        t = self
        for mod in modules:
            t = t.pushed(0, mod)
        return t.coeffs

    def coproduct_on(self, leg: int, delta: np.ndarray) -> "TensorElement":
        """Apply ``delta`` (shape n x n x n) to one leg, giving ``legs + 1`` legs."""
        res = np.tensordot(self.coeffs, delta, axes=([leg], [0]))
        res = np.moveaxis(res, [-2, -1], [leg, leg + 1])
        return TensorElement(self.algebra, res)

    def counit_on(self, leg: int, epsilon: np.ndarray) -> "TensorElement":
        res = np.tensordot(self.coeffs, epsilon, axes=([leg], [0]))
        return TensorElement(self.algebra, res)

    def map_legs(self, matrix: np.ndarray, target: Algebra | None = None) -> "TensorElement":
        """Apply one linear map (target_dim x n matrix) to every leg."""
        res = self.coeffs
        for leg in range(self.legs):
            res = np.moveaxis(np.tensordot(res, matrix, axes=([leg], [1])), -1, leg)
        return TensorElement(target or self.algebra, res)

    def with_unit_leg(self, position: int | None = None) -> "TensorElement":
        if position is None:
            position = self.legs
        res = np.tensordot(self.coeffs, self.algebra.unit, axes=0)
        res = np.moveaxis(res, -1, position)
        return TensorElement(self.algebra, res)

    def end_kron(self, left: int = 1, right: int = 1) -> "TensorElement":
        """``1_left (x) X (x) 1_right`` on the endomorphism leg."""
        f = self.field
        L, Rm = f.eye(left), f.eye(right)
        d = self.end_dim * left * right
        out = f.zeros(self.coeffs.shape[:-2] + (d, d))
        for I in self.indices():
            out[I] = np.kron(np.kron(L, self.coeffs[I]), Rm)
        return TensorElement(self.algebra, out)

    # ------------------------------------------------------- inversion
    def inverse(self) -> "TensorElement":
        if is_delta_basis(self.algebra):
            out = self.field.zeros(self.coeffs.shape)
            for I in self.indices():
                out[I] = linalg.inverse(self.coeffs[I], self.field)
            return TensorElement(self.algebra, out)
        return self._inverse_via_regular()

    def _inverse_via_regular(self) -> "TensorElement":
        A, f = self.algebra, self.field
        if A.unit is None:
            raise NotInvertibleError("inversion requires a unital algebra")
        n, k, d = A.dim, self.legs, self.end_dim
        regular = [A.left_mult_matrix(A.basis_vector(i)) for i in range(n)]
        op = self.evaluate(*([regular] * k))
        ones = A.unit
        for _ in range(k - 1):
            ones = np.kron(ones, A.unit)
        if k == 0:
            ones = f.vector([1])
        rhs = np.kron(f.eye(d), ones.reshape(-1, 1))
        x = linalg.solve(op, rhs, f)
        if x is None:
            raise NotInvertibleError("element is not invertible")
        nk = n ** k
        out = f.zeros(self.coeffs.shape)
        for flat, I in enumerate(np.ndindex(*(n,) * k)):
            for a in range(d):
                out[I][a, :] = x[a * nk + flat, :]
        inv = TensorElement(A, out)
        one = TensorElement.identity(A, d, k)
        if not (self * inv == one and inv * self == one):
            raise NotInvertibleError("element has no two-sided inverse")
        return inv

    def is_invertible(self) -> bool:
        try:
            self.inverse()
        except NotInvertibleError:
            return False
        return True

    def __repr__(self):
        return f"TensorElement(legs={self.legs}, end_dim={self.end_dim}, n={self.algebra.dim})"
