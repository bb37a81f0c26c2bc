"""Nuclei and multiplicants of module categories, in element form.

A natural family of operators ``a_{X,Y}: M (x) (X (x) Y) -> (M (x) X) (x) Y``
on ``R``-modules is multiplication by an element ``m`` of
``End(M) (x) R (x) R``. Every construction on pairs ``(M, m)`` (tensor
product, associativity constraint, twists, normalisation) is carried out
here on such elements; :mod:`catnuc.oracles` recomputes the same things
with explicit operators on concrete modules.

Leg conventions: ``End(M) (x) End(N)`` is the Kronecker product with ``M``
first; the comultiplication goes ``R -> R (x) R``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field, InitVar
from typing import Optional

import numpy as np

from . import linalg
from .algebra import Algebra, LinearMap, find_unit, is_associative, multiply
from .errors import (
    DimensionError,
    InvalidStructureError,
    NotInvertibleError,
    PreconditionError,
)
from .tensor import TensorElement


# ------------------------------------------------------------ coalgebras


@dataclass(frozen=True, eq=False)
class CoalgebraStructure:
    """An associative unital algebra with a multiplicative comultiplication.

    ``delta[i, j, k]`` is the coefficient of ``e_j (x) e_k`` in ``Delta(e_i)``.
    Coassociativity is computed, not required.
    """

    algebra: Algebra
    delta: np.ndarray
    epsilon: Optional[np.ndarray] = None
    coassociative: bool = dc_field(init=False, default=False)

    def __post_init__(self):
        A = self.algebra
        if not is_associative(A):
            raise InvalidStructureError("base algebra must be associative")
        if A.unit is None:
            if find_unit(A) is None:
                raise InvalidStructureError("base algebra must be unital")
            object.__setattr__(self, "algebra", A.with_unit())
            A = self.algebra
        n = A.dim
        delta = A.field.array(self.delta)
        if delta.shape != (n, n, n):
            raise DimensionError(f"comultiplication must have shape {(n, n, n)}, got {delta.shape}")
        object.__setattr__(self, "delta", delta)
        if self.epsilon is not None:
            eps = A._vec(self.epsilon)
            object.__setattr__(self, "epsilon", eps)
        self._validate()
        object.__setattr__(self, "coassociative", self._is_coassociative())

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def field(self):
        return self.algebra.field

    def element(self, x) -> TensorElement:
        """``x`` as a one-leg scalar tensor."""
        return TensorElement.pure(self.algebra, self.algebra._vec(x))

    def basis_element(self, i: int) -> TensorElement:
        return self.element(self.algebra.basis_vector(i))

    def coproduct(self, x) -> TensorElement:
        """``Delta(x)`` as a two-leg scalar tensor."""
        return self.element(x).coproduct_on(0, self.delta)

    def delta_map(self) -> np.ndarray:
        """Matrix of Delta: R -> R (x) R (n^2 x n)."""
        n = self.dim
        return self.delta.reshape(n, n * n).T

    def _validate(self):
        A = self.algebra
        n = A.dim
        for i, j in itertools.product(range(n), repeat=2):
            lhs = self.coproduct(multiply(A, A.basis_vector(i), A.basis_vector(j)))
            rhs = self.coproduct(A.basis_vector(i)) * self.coproduct(A.basis_vector(j))
            if lhs != rhs:
                raise InvalidStructureError(f"comultiplication is not multiplicative on ({i}, {j})")
        if self.coproduct(A.unit) != TensorElement.identity(A, 1, 2):
            raise InvalidStructureError("comultiplication does not send 1 to 1 (x) 1")
        if self.epsilon is not None:
            eps = self.epsilon
            for i, j in itertools.product(range(n), repeat=2):
                prod = multiply(A, A.basis_vector(i), A.basis_vector(j))
                if eps.dot(prod) != eps[i] * eps[j]:
                    raise InvalidStructureError("counit is not multiplicative")
            if eps.dot(A.unit) != 1:
                raise InvalidStructureError("counit does not send 1 to 1")
            for i in range(n):
                d = self.coproduct(A.basis_vector(i))
                left = d.counit_on(0, eps).scalars()
                right = d.counit_on(1, eps).scalars()
                e = A.basis_vector(i)
                if not (linalg.equal(left, e) and linalg.equal(right, e)):
                    raise InvalidStructureError(f"counit law fails on basis vector {i}")

    def _is_coassociative(self) -> bool:
        for i in range(self.dim):
            d = self.coproduct(self.algebra.basis_vector(i))
            if d.coproduct_on(0, self.delta) != d.coproduct_on(1, self.delta):
                return False
        return True

    def is_central(self, z) -> bool:
        A = self.algebra
        z = A._vec(z)
        return all(
            linalg.equal(multiply(A, z, A.basis_vector(i)), multiply(A, A.basis_vector(i), z))
            for i in range(A.dim)
        )

    def invert(self, x) -> np.ndarray:
        """Inverse of an element of R, or raise NotInvertibleError."""
        inv = self.element(x).inverse()
        return inv.scalars()


# --------------------------------------------------------------- modules


@dataclass(frozen=True, eq=False)
class RModule:
    """Left module given by the action matrices ``rho(e_i)``."""

    base: CoalgebraStructure
    action: tuple
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        A = self.base.algebra
        mats = tuple(A.field.array(m) for m in self.action)
        if len(mats) != A.dim:
            raise DimensionError(f"need {A.dim} action matrices, got {len(mats)}")
        if A.dim:
            d = mats[0].shape[0]
            if any(m.shape != (d, d) for m in mats):
                raise DimensionError("action matrices must be square of a common size")
        object.__setattr__(self, "action", mats)
        if validate:
            self._validate()

    @property
    def dim(self) -> int:
        return self.action[0].shape[0] if self.action else 0

    def rho(self, x) -> np.ndarray:
        x = self.base.algebra._vec(x)
        out = self.base.field.zeros((self.dim, self.dim))
        for i, xi in enumerate(x):
            if xi != 0:
                out = out + self.action[i] * xi
        return out

    def _validate(self):
        A = self.base.algebra
        for i, j in itertools.product(range(A.dim), repeat=2):
            lhs = self.action[i].dot(self.action[j])
            rhs = self.rho(multiply(A, A.basis_vector(i), A.basis_vector(j)))
            if not linalg.equal(lhs, rhs):
                raise InvalidStructureError(f"action is not multiplicative on ({i}, {j})")
        if not linalg.equal(self.rho(A.unit), self.base.field.eye(self.dim)):
            raise InvalidStructureError("unit does not act as the identity")

    def tensor(self, other: "RModule") -> "RModule":
        """``M (x) N`` with ``rho(r) = (rho_M (x) rho_N)(Delta(r))``."""
        if other.base is not self.base:
            raise PreconditionError("modules over different bases")
        n = self.base.dim
        d = self.dim * other.dim
        acts = []
        for i in range(n):
            acc = self.base.field.zeros((d, d))
            for j, k in itertools.product(range(n), repeat=2):
                coef = self.base.delta[i, j, k]
                if coef != 0:
                    acc = acc + np.kron(self.action[j], other.action[k]) * coef
            acts.append(acc)
        return RModule(self.base, tuple(acts), validate=False)

    @classmethod
    def regular(cls, base: CoalgebraStructure) -> "RModule":
        A = base.algebra
        return cls(base, tuple(A.left_mult_matrix(A.basis_vector(i)) for i in range(A.dim)))

    @classmethod
    def trivial(cls, base: CoalgebraStructure) -> "RModule":
        if base.epsilon is None:
            raise PreconditionError("the trivial module needs a counit")
        return cls(base, tuple(base.field.array([[e]]) for e in base.epsilon))

    def conjugated(self, P) -> "RModule":
        """Same module in a new basis (``rho'(r) = P^-1 rho(r) P``)."""
        Pinv = linalg.inverse(P, self.base.field)
        return RModule(self.base, tuple(Pinv.dot(m).dot(P) for m in self.action))

    def commutant_basis(self) -> list:
        """Basis of the matrices commuting with every ``rho(e_i)``."""
        d, f = self.dim, self.base.field
        rows = []
        for m in self.action:
            # X m - m X = 0, unknown X flattened row-major
            op = np.kron(f.eye(d), m.T) - np.kron(m, f.eye(d))
            rows.append(op)
        ker = linalg.kernel(np.vstack(rows), f)
        return [np.array(v, dtype=object).reshape(d, d) for v in ker.basis]


def embed_first_leg(t: TensorElement, module: RModule) -> TensorElement:
    """``(rho_M (x) I ...)(t)`` for a scalar tensor ``t``."""
    return t.pushed(0, module)


# ---------------------------------------------------------- nucleus pairs


@dataclass(frozen=True, eq=False)
class NucleusPair:
    """An object ``(M, m)`` of the left nucleus of ``R``-Mod."""

    module: RModule
    m: TensorElement
    m_inverse: Optional[TensorElement] = None
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        if self.m.legs != 2 or self.m.end_dim != self.module.dim:
            raise DimensionError("m must lie in End(M) (x) R (x) R")
        inv = self.m_inverse if self.m_inverse is not None else self.m.inverse()
        one = TensorElement.identity(self.base.algebra, self.module.dim, 2)
        if self.m_inverse is not None and not (self.m * inv == one and inv * self.m == one):
            raise NotInvertibleError("supplied inverse is wrong")
        object.__setattr__(self, "m_inverse", inv)
        if validate and not check_inv(self.base, self):
            raise InvalidStructureError("m does not satisfy the invariance condition")

    @property
    def base(self) -> CoalgebraStructure:
        return self.module.base

    @classmethod
    def trivial(cls, module: RModule) -> "NucleusPair":
        """``(M, 1)``; valid when the comultiplication is coassociative."""
        return cls(module, TensorElement.identity(module.base.algebra, module.dim, 2))


def _same_base(*pairs):
    base = pairs[0].base
    for p in pairs[1:]:
        if p.base is not base:
            raise PreconditionError("pairs live over different bases")
    return base


def _iterated_coproducts(R: CoalgebraStructure, i: int):
    d = R.coproduct(R.algebra.basis_vector(i))
    return d.coproduct_on(0, R.delta), d.coproduct_on(1, R.delta)


def check_inv(R: CoalgebraStructure, p: NucleusPair) -> bool:
    """``(Delta (x) I)Delta(r) m = m (I (x) Delta)Delta(r)`` for all basis r."""
    if p.m.legs != 2:
        raise DimensionError("m must have two R legs")
    for i in range(R.dim):
        left3, right3 = _iterated_coproducts(R, i)
        lhs = embed_first_leg(left3, p.module) * p.m
        rhs = p.m * embed_first_leg(right3, p.module)
        if lhs != rhs:
            return False
    return True


def tensor_element(m: TensorElement, n: TensorElement, N: RModule, R: CoalgebraStructure) -> TensorElement:
    """``m|n = (m (x) 1)(I (x) Delta (x) I)(m)(1 (x) n)(I (x) I (x) Delta)(m)^-1``."""
    dM = m.end_dim
    f1 = m.pushed(0, N).with_unit_leg(1)
    f2 = m.coproduct_on(0, R.delta).pushed(0, N)
    f3 = n.end_kron(left=dM)
    f4 = m.coproduct_on(1, R.delta).pushed(0, N).inverse()
    return f1 * f2 * f3 * f4


def tensor_pairs(p: NucleusPair, q: NucleusPair) -> NucleusPair:
    R = _same_base(p, q)
    mn = tensor_element(p.m, q.m, q.module, R)
    return NucleusPair(p.module.tensor(q.module), mn, validate=False)


def associativity_constraint(p: NucleusPair, q: NucleusPair, r: NucleusPair) -> np.ndarray:
    """``(I (x) rho_N (x) rho_L)(m)`` on ``M (x) N (x) L``."""
    _same_base(p, q, r)
    return p.m.evaluate(q.module, r.module)


def verify_pentagon(p: NucleusPair, q: NucleusPair, r: NucleusPair, s: NucleusPair) -> bool:
    """Pentagon identity for the constraint on ``M (x) N (x) L (x) P``."""
    _same_base(p, q, r, s)
    f = p.base.field
    pq = tensor_pairs(p, q)
    qr = tensor_pairs(q, r)
    rs_module = r.module.tensor(s.module)
    lhs = associativity_constraint(pq, r, s).dot(p.m.evaluate(q.module, rs_module))
    rhs = (
        np.kron(associativity_constraint(p, q, r), f.eye(s.module.dim))
        .dot(associativity_constraint(p, qr, s))
        .dot(np.kron(f.eye(p.module.dim), associativity_constraint(q, r, s)))
    )
    return linalg.equal(lhs, rhs)


def phi_is_morphism(p: NucleusPair, q: NucleusPair, r: NucleusPair) -> bool:
    """The constraint intertwines ``m|(n|l)`` and ``(m|n)|l``."""
    left = tensor_pairs(p, tensor_pairs(q, r))
    right = tensor_pairs(tensor_pairs(p, q), r)
    phi = TensorElement.of_end(p.base.algebra, associativity_constraint(p, q, r), legs=2)
    return right.m * phi == phi * left.m


def check_normalization(p: NucleusPair) -> bool:
    """``(I (x) eps (x) I)(m) = 1 = (I (x) I (x) eps)(m)``."""
    R = p.base
    if R.epsilon is None:
        raise PreconditionError("normalisation needs a counit")
    one = TensorElement.identity(R.algebra, p.module.dim, 1)
    return p.m.counit_on(0, R.epsilon) == one and p.m.counit_on(1, R.epsilon) == one


def _check_twist(R: CoalgebraStructure, c: TensorElement):
    if c.legs != 2 or c.end_dim != 1:
        raise DimensionError("a twist must be an element of R (x) R")
    c.inverse()


def twist_element(m: TensorElement, c: TensorElement, M: RModule, R: CoalgebraStructure) -> TensorElement:
    """``m^c = C1 C2 m C3^-1 C4^-1``."""
    c1 = c.pushed(0, M).with_unit_leg(1)
    c2 = c.coproduct_on(0, R.delta).pushed(0, M)
    c3 = c.pushed(0, M).coproduct_on(0, R.delta)
    c4 = c.end_kron(left=M.dim)
    return c1 * c2 * m * c3.inverse() * c4.inverse()


def twist_pair(p: NucleusPair, c: TensorElement) -> NucleusPair:
    _check_twist(p.base, c)
    return NucleusPair(p.module, twist_element(p.m, c, p.module, p.base), validate=False)


def twist_transformation(R: CoalgebraStructure, c: TensorElement, z) -> TensorElement:
    """``c^f = (z (x) z) c Delta(z)^-1`` for a central invertible ``z``."""
    A = R.algebra
    z = A._vec(z)
    if not R.is_central(z):
        raise PreconditionError("z is not central")
    try:
        R.invert(z)
    except NotInvertibleError as exc:
        raise PreconditionError("z is not invertible") from exc
    zz = TensorElement.pure(A, np.multiply.outer(z, z))
    return zz * c * R.coproduct(z).inverse()


# --------------------------------------------------------- multiplicants


@dataclass(frozen=True, eq=False)
class MultiplicantPair:
    """An object ``(M, m)`` of the left multiplicant of ``f^*: H2-Mod -> H1-Mod``."""

    H1: CoalgebraStructure
    H2: CoalgebraStructure
    f: LinearMap
    module: RModule
    m: TensorElement
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        if self.module.base is not self.H2:
            raise PreconditionError("module must be an H2-module")
        if self.m.legs != 1 or self.m.end_dim != self.module.dim:
            raise DimensionError("m must lie in End(M) (x) H2")
        if not self.f.is_homomorphism():
            raise PreconditionError("f is not an algebra homomorphism")
        self.m.inverse()
        if validate and not multiplicant_check(self):
            raise InvalidStructureError("m does not satisfy the multiplicant condition")


def multiplicant_check(mp: MultiplicantPair) -> bool:
    """``m Delta(f(h)) = (f (x) f) Delta(h) m`` for all basis h of H1."""
    H1, H2 = mp.H1, mp.H2
    if not (H1.coassociative and H2.coassociative):
        raise PreconditionError("multiplicants are defined for coassociative bialgebras")
    if not mp.f.is_homomorphism():
        raise PreconditionError("f is not an algebra homomorphism")
    F = mp.f.matrix
    for i in range(H1.dim):
        h = H1.algebra.basis_vector(i)
        lhs_el = embed_first_leg(H2.coproduct(mp.f(h)), mp.module)
        ff = H1.coproduct(h).map_legs(F, H2.algebra)
        rhs_el = embed_first_leg(ff, mp.module)
        if mp.m * lhs_el != rhs_el * mp.m:
            return False
    return True


def multiplicant_tensor_element(m: TensorElement, n: TensorElement, N: RModule, H2: CoalgebraStructure) -> TensorElement:
    """``m|n = (m (x) 1)^-1 (1 (x) n) (I (x) Delta)(m)``."""
    m1 = m.pushed(0, N).with_unit_leg(0)
    n1 = n.end_kron(left=m.end_dim)
    dm = m.coproduct_on(0, H2.delta).pushed(0, N)
    return m1.inverse() * n1 * dm


def multiplicant_tensor(mp1: MultiplicantPair, mp2: MultiplicantPair) -> MultiplicantPair:
    if mp1.H1 is not mp2.H1 or mp1.H2 is not mp2.H2 or not linalg.equal(mp1.f.matrix, mp2.f.matrix):
        raise PreconditionError("pairs use different bialgebras or maps")
    mn = multiplicant_tensor_element(mp1.m, mp2.m, mp2.module, mp1.H2)
    return MultiplicantPair(mp1.H1, mp1.H2, mp1.f, mp1.module.tensor(mp2.module), mn, validate=False)


def semigroupal_structure(mp: MultiplicantPair, other: MultiplicantPair) -> np.ndarray:
    """``f^*_{(M,m),(N,n)} = (I (x) rho_N)(m)``."""
    return mp.m.evaluate(other.module)


def gamma_element(H2: CoalgebraStructure, module: RModule, x) -> TensorElement:
    """``(rho_M (x) I)(Delta(x)^-1 (x (x) x))``."""
    A = H2.algebra
    x = A._vec(x)
    try:
        H2.invert(x)
    except NotInvertibleError as exc:
        raise PreconditionError("x is not invertible") from exc
    xx = TensorElement.pure(A, np.multiply.outer(x, x))
    return embed_first_leg(H2.coproduct(x).inverse() * xx, module)


def multiplicant_gamma_membership(mp: MultiplicantPair, x) -> bool:
    return mp.m == gamma_element(mp.H2, mp.module, x)


# ------------------------------------------------------ free algebra view


@dataclass(frozen=True, eq=False)
class FreeAlgebraAction:
    """The map ``l -> (I (x) l)(v)`` on dual basis functionals, for v and v^-1."""

    images: tuple
    inverse_images: tuple
    relations_hold: bool


def free_algebra_action(R: Algebra, v: TensorElement) -> FreeAlgebraAction:
    if v.legs != 1:
        raise DimensionError("v must lie in End(V) (x) R")
    try:
        w = v.inverse()
    except NotInvertibleError as exc:
        raise PreconditionError("v is not invertible") from exc
    n, d, f = R.dim, v.end_dim, R.field
    images = tuple(v.coeffs[i] for i in range(n))
    inv_images = tuple(w.coeffs[i] for i in range(n))
    ok = True
    for k in range(n):
        # dual of multiplication: delta(e_k^) = sum_ij c[i,j,k] e_i^ (x) e_j^
        want = f.eye(d) * R.unit[k]
        a = f.zeros((d, d))
        b = f.zeros((d, d))
        for i, j in itertools.product(range(n), repeat=2):
            cf = R.c[i, j, k]
            if cf != 0:
                a = a + images[i].dot(inv_images[j]) * cf
                b = b + inv_images[i].dot(images[j]) * cf
        ok = ok and linalg.equal(a, want) and linalg.equal(b, want)
    return FreeAlgebraAction(images, inv_images, ok)


# ------------------------------------------------------ random generators


def _random_combination(basis, field, rng):
    out = None
    for b in basis:
        term = b.scale(field.random_element(rng)) if isinstance(b, TensorElement) else b * field.random_element(rng)
        out = term if out is None else out + term
    return out


def _solution_space(unknowns: list, constraint) -> list:
    """Basis of the span of ``unknowns`` on which the linear map ``constraint`` vanishes."""
    if not unknowns:
        return []
    cols = [np.concatenate([t.coeffs.ravel() for t in constraint(u)]) for u in unknowns]
    mat = np.stack(cols, axis=1)
    field = unknowns[0].field
    ker = linalg.kernel(mat, field)
    out = []
    for vec in ker.basis:
        acc = None
        for coef, u in zip(vec, unknowns):
            if coef != 0:
                term = u.scale(coef)
                acc = term if acc is None else acc + term
        out.append(acc)
    return out


def _unit_tensors(A: Algebra, d: int, legs: int) -> list:
    out = []
    f = A.field
    for I in np.ndindex(*(A.dim,) * legs):
        for a, b in itertools.product(range(d), repeat=2):
            coeffs = f.zeros((A.dim,) * legs + (d, d))
            coeffs[I + (a, b)] = f.one
            out.append(TensorElement(A, coeffs))
    return out


def nucleus_pair_space(R: CoalgebraStructure, module: RModule) -> list:
    """Basis of all ``m`` (not necessarily invertible) satisfying the invariance condition."""
    iters = [_iterated_coproducts(R, i) for i in range(R.dim)]
    embedded = [(embed_first_leg(l3, module), embed_first_leg(r3, module)) for l3, r3 in iters]

    def constraint(m):
        return [l * m - m * r for l, r in embedded]

    return _solution_space(_unit_tensors(R.algebra, module.dim, 2), constraint)


def random_invertible(basis: list, field, rng: random.Random, tries: int = 200) -> TensorElement:
    for _ in range(tries):
        cand = _random_combination(basis, field, rng)
        if cand is not None and cand.is_invertible():
            return cand
    raise NotInvertibleError("no invertible element found in the given space")


def random_nucleus_pair(R: CoalgebraStructure, module: RModule, rng: random.Random,
                        normalized: bool = False) -> NucleusPair:
    space = nucleus_pair_space(R, module)
    if normalized:
        one = TensorElement.identity(R.algebra, module.dim, 1)
        # affine condition: keep the invariant elements whose counit contractions are 1
        def constraint(m):
            return [m.counit_on(0, R.epsilon), m.counit_on(1, R.epsilon)]
        homog = _solution_space(space, constraint)
        base_pt = TensorElement.identity(R.algebra, module.dim, 2)
        for _ in range(200):
            delta = _random_combination(homog, R.field, rng) if homog else None
            cand = base_pt if delta is None else base_pt + delta
            if cand.is_invertible() and check_normalization_element(cand, R, one):
                return NucleusPair(module, cand)
        raise NotInvertibleError("no invertible normalised element found")
    return NucleusPair(module, random_invertible(space, R.field, rng))


def check_normalization_element(m: TensorElement, R: CoalgebraStructure, one: TensorElement) -> bool:
    return m.counit_on(0, R.epsilon) == one and m.counit_on(1, R.epsilon) == one


def tensor_automorphism_space(R: CoalgebraStructure) -> list:
    """Elements of ``R (x) R`` commuting with ``Delta(R)`` (natural endomorphisms of the tensor functor)."""
    deltas = [R.coproduct(R.algebra.basis_vector(i)) for i in range(R.dim)]

    def constraint(c):
        return [c * d - d * c for d in deltas]

    return _solution_space(_unit_tensors(R.algebra, 1, 2), constraint)


def random_twist(R: CoalgebraStructure, rng: random.Random) -> TensorElement:
    return random_invertible(tensor_automorphism_space(R), R.field, rng)


def random_central_unit(R: CoalgebraStructure, rng: random.Random) -> np.ndarray:
    A = R.algebra
    n = A.dim
    rows = []
    for i in range(n):
        e = A.basis_vector(i)
        rows.append(A.right_mult_matrix(e) - A.left_mult_matrix(e))
    center = linalg.kernel(np.vstack(rows), A.field)
    for _ in range(200):
        z = A.field.zeros(n)
        for v in center.vectors():
            z = z + v * A.field.random_element(rng)
        try:
            R.invert(z)
            return z
        except NotInvertibleError:
            continue
    raise NotInvertibleError("no invertible central element found")


def multiplicant_space(H1: CoalgebraStructure, H2: CoalgebraStructure, f: LinearMap, module: RModule) -> list:
    F = f.matrix
    conds = []
    for i in range(H1.dim):
        h = H1.algebra.basis_vector(i)
        lhs = embed_first_leg(H2.coproduct(f(h)), module)
        ff = H1.coproduct(h).map_legs(F, H2.algebra)
        conds.append((lhs, embed_first_leg(ff, module)))

    def constraint(m):
        return [m * l - r * m for l, r in conds]

    return _solution_space(_unit_tensors(H2.algebra, module.dim, 1), constraint)


def random_multiplicant_pair(H1, H2, f, module, rng) -> MultiplicantPair:
    space = multiplicant_space(H1, H2, f, module)
    return MultiplicantPair(H1, H2, f, module, random_invertible(space, H2.field, rng))
