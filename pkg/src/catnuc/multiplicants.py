"""Multiplicants of linear maps between associative algebras and of
set maps between finite monoids."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg
from .algebra import (
    FiniteMonoid,
    LinearMap,
    defect_tensor,
    is_associative,
    is_commutative,
    is_subalgebra_closed,
    multiplicative_defect,
)
from .catalog import monoid_algebra
from .errors import InternalConsistencyError, InvalidStructureError, PreconditionError
from .linalg import Subspace
from .nuclei import Side


def _require_associative(f: LinearMap) -> None:
    if not is_associative(f.source):
        raise PreconditionError("source algebra is not associative")
    if not is_associative(f.target):
        raise PreconditionError("target algebra is not associative")


def _side(side) -> Side:
    s = Side.parse(side)
    if s is Side.MIDDLE:
        raise ValueError("multiplicants have sides l and r only")
    return s


def multiplicant_system(f: LinearMap, side) -> np.ndarray:
    """Rows (x, out), column a: ``m_f(a, e_x)`` (left) or ``m_f(e_x, a)`` (right)."""
    D = defect_tensor(f)  # D[i, j] = m_f(e_i, e_j)
    n, m = f.source.dim, f.target.dim
    if _side(side) is Side.LEFT:
        return D.transpose(1, 2, 0).reshape(n * m, n)
    return D.transpose(0, 2, 1).reshape(n * m, n)


def multiplicant(f: LinearMap, side) -> Subspace:
    """``M_l(f) = {a : m_f(a, x) = 0 for all x}`` (or ``M_r``), certified."""
    _require_associative(f)
    A = f.source
    if A.dim == 0:
        return Subspace.zero(0, A.field)
    if f.target.dim == 0:
        S = Subspace.full(A.dim, A.field)
    else:
        S = linalg.kernel(multiplicant_system(f, side), A.field)
    if not is_subalgebra_closed(A, S):
        raise InternalConsistencyError("multiplicant is not closed under multiplication")
    vecs = S.vectors()
    for u, v in itertools.product(vecs, repeat=2):
        if not linalg.is_zero(multiplicative_defect(f, u, v)):
            raise InternalConsistencyError("f is not multiplicative on its multiplicant")
    return S


def verify_multiplicant_identity(f: LinearMap) -> bool:
    """``f(x)m_f(y,z) - m_f(xy,z) + m_f(x,yz) - m_f(x,y)f(z) = 0`` on basis triples."""
    _require_associative(f)
    A, B = f.source, f.target
    if A.dim == 0 or B.dim == 0:
        return True
    D, c, F, cb = defect_tensor(f), A.c, f.matrix, B.c
    fx = F.T  # fx[x, :] = f(e_x)
    t1 = np.tensordot(np.tensordot(fx, D, axes=0), cb, axes=([1, 4], [0, 1]))  # f(x) m_f(y, z)
    t2 = np.tensordot(c, D, axes=([2], [0]))  # m_f(xy, z)
    t3 = np.tensordot(c, D, axes=([2], [1])).transpose(2, 0, 1, 3)  # m_f(x, yz)
    t4 = np.tensordot(np.tensordot(D, fx, axes=0), cb, axes=([2, 4], [0, 1]))  # m_f(x, y) f(z)
    return linalg.is_zero(t1 - t2 + t3 - t4)


@dataclass(frozen=True)
class MultiplicantEquality:
    left: Subspace
    right: Subspace

    @property
    def equal(self) -> bool:
        return self.left == self.right


def commutative_multiplicant_equality(f: LinearMap) -> MultiplicantEquality:
    if not (is_commutative(f.source) and is_commutative(f.target)):
        raise PreconditionError("both algebras must be commutative")
    return MultiplicantEquality(multiplicant(f, Side.LEFT), multiplicant(f, Side.RIGHT))


# ---------------------------------------------------------------- monoids


@dataclass(frozen=True)
class MonoidMap:
    source: FiniteMonoid
    target: FiniteMonoid
    images: tuple

    def __post_init__(self):
        try:
            imgs = tuple(int(x) for x in self.images)
        except (TypeError, ValueError) as exc:
            raise InvalidStructureError("images must be integers") from exc
        if len(imgs) != self.source.size:
            raise InvalidStructureError(f"need {self.source.size} images, got {len(imgs)}")
        if any(not 0 <= x < self.target.size for x in imgs):
            raise InvalidStructureError("image index out of range")
        object.__setattr__(self, "images", imgs)

    def __call__(self, a: int) -> int:
        return self.images[a]

    def then(self, g: "MonoidMap") -> "MonoidMap":
        """``g o self``."""
        if g.source != self.target:
            raise PreconditionError("maps are not composable")
        return MonoidMap(self.source, g.target, tuple(g(x) for x in self.images))

    def is_homomorphism(self) -> bool:
        S, T = self.source, self.target
        return self(S.unit) == T.unit and all(
            self(S.table[a][b]) == T.table[self(a)][self(b)] for a in range(S.size) for b in range(S.size)
        )


@dataclass(frozen=True)
class MonoidMultiplicant:
    elements: tuple  # sorted indices
    contains_unit: bool
    closed: bool


def monoid_multiplicant(f: MonoidMap, side) -> MonoidMultiplicant:
    S, T = f.source, f.target
    n = S.size
    if _side(side) is Side.LEFT:
        good = [a for a in range(n) if all(f(S.table[a][x]) == T.table[f(a)][f(x)] for x in range(n))]
    else:
        good = [a for a in range(n) if all(f(S.table[x][a]) == T.table[f(x)][f(a)] for x in range(n))]
    members = set(good)
    closed = all(S.table[a][b] in members for a in good for b in good)
    if not closed:
        raise InternalConsistencyError("monoid multiplicant is not closed under the product")
    return MonoidMultiplicant(tuple(good), S.unit in members, closed)


@dataclass(frozen=True)
class Pullback:
    pairs: tuple  # (a, f(a))
    closed: bool
    lands_in_composite: bool
    projection_multiplicative: bool

    @property
    def ok(self) -> bool:
        return self.closed and self.lands_in_composite and self.projection_multiplicative


def multiplicant_pullback(f: MonoidMap, g: MonoidMap) -> Pullback:
    """``M_l(f) x_B M_l(g)`` and its projection to ``M_l(gf)``."""
    gf = f.then(g)
    mf = set(monoid_multiplicant(f, Side.LEFT).elements)
    mg = set(monoid_multiplicant(g, Side.LEFT).elements)
    mgf = set(monoid_multiplicant(gf, Side.LEFT).elements)
    A, B = f.source, f.target
    pairs = tuple((a, f(a)) for a in sorted(mf) if f(a) in mg)
    pair_set = set(pairs)
    closed = all((A.table[a][a2], B.table[b][b2]) in pair_set for a, b in pairs for a2, b2 in pairs)
    lands = all(a in mgf for a, _ in pairs)
    # projected elements multiply as elements of M_l(gf): gf(a a') = gf(a) gf(a')
    C = g.target
    proj_mult = closed and all(
        gf(A.table[a][a2]) == C.table[gf(a)][gf(a2)] for a, _ in pairs for a2, _ in pairs
    )
    return Pullback(pairs, closed, lands, proj_mult)


def linearize(f: MonoidMap, field) -> LinearMap:
    """The linear extension ``k[S] -> k[T]`` of a set map."""
    A, B = monoid_algebra(f.source, field), monoid_algebra(f.target, field)
    mat = field.zeros((B.dim, A.dim))
    for a, b in enumerate(f.images):
        mat[b, a] = field.one
    return LinearMap(A, B, mat)
