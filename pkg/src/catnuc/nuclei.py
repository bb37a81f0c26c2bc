"""Left, middle and right nuclei of a finite-dimensional algebra."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import linalg
from .algebra import Algebra, associator_tensor, find_unit, is_associative, is_commutative, is_subalgebra_closed, restrict
from .errors import InternalConsistencyError, PreconditionError
from .linalg import Subspace


class Side(str, Enum):
    LEFT = "l"
    MIDDLE = "m"
    RIGHT = "r"

    @classmethod
    def parse(cls, side) -> "Side":
        if isinstance(side, Side):
            return side
        key = str(side).strip().lower()[:1]
        try:
            return cls(key)
        except ValueError as exc:
            raise ValueError(f"unknown side {side!r}; use l, m or r") from exc


# T[i, j, k, :] = J(e_i, e_j, e_k); move the unknown slot to the last axis
# before flattening, so row (x, y, out) and column a of the system read
# J(a, x, y), J(x, a, y) or J(x, y, a).
_SLOT_ORDER = {Side.LEFT: (1, 2, 3, 0), Side.MIDDLE: (0, 2, 3, 1), Side.RIGHT: (0, 1, 3, 2)}


def nucleus_system(A: Algebra, side) -> np.ndarray:
    """Stacked matrix whose kernel is the nucleus (n^3 x n)."""
    side = Side.parse(side)
    n = A.dim
    T = associator_tensor(A)
    return T.transpose(_SLOT_ORDER[side]).reshape(n ** 3, n)


def certify_associative_subalgebra(A: Algebra, S: Subspace) -> None:
    if not is_subalgebra_closed(A, S):
        raise InternalConsistencyError("nucleus is not closed under multiplication")
    if S.dim and not is_associative(restrict(A, S)):
        raise InternalConsistencyError("nucleus is not associative")


def nucleus(A: Algebra, side) -> Subspace:
    """``{a : J(a, x, y) = 0}`` (or the middle/right slot), certified."""
    if A.dim == 0:
        return Subspace.zero(0, A.field)
    S = linalg.kernel(nucleus_system(A, side), A.field)
    certify_associative_subalgebra(A, S)
    return S


def associator_identity_terms(A: Algebra) -> list[np.ndarray]:
    """The five terms of ``xJ(y,z,w) - J(xy,z,w) + J(x,yz,w) - J(x,y,zw) + J(x,y,z)w``
    on basis quadruples, each of shape n^5 (x, y, z, w, out)."""
    c, J = A.c, associator_tensor(A)
    x_J = np.tensordot(J, c, axes=([3], [1])).transpose(3, 0, 1, 2, 4)
    J_xy = np.tensordot(c, J, axes=([2], [0]))
    J_yz = np.tensordot(c, J, axes=([2], [1])).transpose(2, 0, 1, 3, 4)
    J_zw = np.tensordot(c, J, axes=([2], [2])).transpose(2, 3, 0, 1, 4)
    J_w = np.tensordot(J, c, axes=([3], [0]))
    return [x_J, -J_xy, J_yz, -J_zw, J_w]


def verify_associator_identity(A: Algebra) -> bool:
    if A.dim == 0:
        return True
    first, *rest = associator_identity_terms(A)
    return linalg.is_zero(sum(rest, first))


@dataclass(frozen=True)
class CommutativeReport:
    is_commutative: bool
    left_equals_right: bool | None
    left_in_middle: bool | None

    @property
    def ok(self) -> bool:
        return not self.is_commutative or bool(self.left_equals_right and self.left_in_middle)


def commutative_nucleus_relations(A: Algebra) -> CommutativeReport:
    if not is_commutative(A):
        return CommutativeReport(False, None, None)
    left, mid, right = (nucleus(A, s) for s in Side)
    return CommutativeReport(True, left == right, left.is_subspace_of(mid))


def unit_in_nuclei(A: Algebra) -> bool:
    u = A.unit if A.unit is not None else find_unit(A)
    if u is None:
        raise PreconditionError("algebra has no unit")
    return all(nucleus(A, s).contains(u) for s in Side)
