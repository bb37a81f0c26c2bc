"""The bialgebra k(G), 3-cocycles on G and the constraints they define."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from . import linalg
from .catalog import function_algebra
from .errors import InvalidStructureError, PreconditionError
from .fields import GF, QQ, Field
from .groups import FiniteGroup
from .modcat import CoalgebraStructure, NucleusPair, RModule
from .tensor import TensorElement


def function_bialgebra(G: FiniteGroup, field: Field = QQ) -> CoalgebraStructure:
    """k(G) with ``Delta(p_g) = sum_{ab=g} p_a (x) p_b`` and ``eps(p_g) = [g = e]``."""
    A = function_algebra(G, field)
    n = G.size
    delta = field.zeros((n, n, n))
    for a, b in itertools.product(range(n), repeat=2):
        delta[G.mul(a, b), a, b] = field.one
    eps = field.zeros(n)
    eps[G.unit] = field.one
    return CoalgebraStructure(A, delta, eps)


def group_bialgebra(G: FiniteGroup, field: Field = QQ) -> CoalgebraStructure:
    """k[G] with group-like basis, ``Delta(g) = g (x) g``."""
    from .catalog import monoid_algebra

    A = monoid_algebra(G.as_monoid(), field)
    n = G.size
    delta = field.zeros((n, n, n))
    for g in range(n):
        delta[g, g, g] = field.one
    return CoalgebraStructure(A, delta, field.vector([1] * n))


@dataclass(frozen=True, eq=False)
class Cocycle3:
    """A table ``alpha(f, g, h)`` of nonzero scalars; the cocycle condition is not assumed."""

    group: FiniteGroup
    field: Field
    values: np.ndarray  # shape (n, n, n)

    def __post_init__(self):
        n = self.group.size
        vals = self.field.array(self.values)
        if vals.shape != (n, n, n):
            raise InvalidStructureError(f"cocycle table must have shape {(n, n, n)}")
        if any(v == 0 for v in vals.ravel()):
            raise InvalidStructureError("cocycle values must be nonzero")
        object.__setattr__(self, "values", vals)

    def __call__(self, f: int, g: int, h: int):
        return self.values[f, g, h]

    def __eq__(self, other):
        return isinstance(other, Cocycle3) and self.group == other.group and linalg.equal(self.values, other.values)

    def __hash__(self):
        return hash(tuple(self.values.ravel()))

    @classmethod
    def trivial(cls, G: FiniteGroup, field: Field = QQ) -> "Cocycle3":
        n = G.size
        return cls(G, field, field.array(np.full((n, n, n), 1, dtype=object)))

    @classmethod
    def from_function(cls, G: FiniteGroup, field: Field, fn) -> "Cocycle3":
        n = G.size
        vals = field.zeros((n, n, n))
        for f, g, h in itertools.product(range(n), repeat=3):
            vals[f, g, h] = field(fn(f, g, h))
        return cls(G, field, vals)

    def inverse(self) -> "Cocycle3":
        return Cocycle3(self.group, self.field, np.vectorize(lambda x: 1 / x, otypes=[object])(self.values))


def cocycle_failures(alpha: Cocycle3) -> list[tuple]:
    """Quadruples violating the cocycle condition."""
    G, a = alpha.group, alpha
    bad = []
    for g1, g2, g3, g4 in itertools.product(range(G.size), repeat=4):
        lhs = a(g2, g3, g4) * a(g1, G.mul(g2, g3), g4) * a(g1, g2, g3)
        rhs = a(G.mul(g1, g2), g3, g4) * a(g1, g2, G.mul(g3, g4))
        if lhs != rhs:
            bad.append((g1, g2, g3, g4))
    return bad


def cocycle_check(alpha: Cocycle3) -> bool:
    G, a = alpha.group, alpha
    for g1, g2, g3, g4 in itertools.product(range(G.size), repeat=4):
        if a(g2, g3, g4) * a(g1, G.mul(g2, g3), g4) * a(g1, g2, g3) != a(G.mul(g1, g2), g3, g4) * a(g1, g2, G.mul(g3, g4)):
            return False
    return True


def coboundary(G: FiniteGroup, beta, field: Field = QQ) -> Cocycle3:
    """``d beta(f, g, h) = beta(g, h) beta(fg, h)^-1 beta(f, gh) beta(f, g)^-1``."""
    b = field.array(beta)
    n = G.size
    if b.shape != (n, n):
        raise InvalidStructureError(f"2-cochain must have shape {(n, n)}")
    if any(v == 0 for v in b.ravel()):
        raise InvalidStructureError("2-cochain values must be nonzero")
    return Cocycle3.from_function(
        G, field, lambda f, g, h: b[g, h] / b[G.mul(f, g), h] * b[f, G.mul(g, h)] / b[f, g]
    )


def random_cochain(G: FiniteGroup, field: Field, rng: random.Random) -> np.ndarray:
    n = G.size
    return field.array([[field.random_element(rng, nonzero=True) for _ in range(n)] for _ in range(n)])


def cyclic_cocycle(n: int, field: Field, power: int = 1) -> Cocycle3:
    """``alpha(a, b, c) = zeta^(power * a * floor((b + c) / n))`` on Z/n,
    with ``zeta`` a primitive n-th root of unity in ``field``."""
    from .groups import cyclic_group

    zeta = field.root_of_unity(n)
    G = cyclic_group(n)
    return Cocycle3.from_function(G, field, lambda a, b, c: zeta ** (power * a * ((b + c) // n)))


def sign_table(G: FiniteGroup, field: Field, bits) -> Cocycle3:
    """{+-1} table from a flat bit sequence (1 means -1), indexed by (f, g, h) row-major."""
    n = G.size
    vals = field.array(np.array([-1 if b else 1 for b in bits], dtype=object).reshape(n, n, n))
    return Cocycle3(G, field, vals)


MAX_ENUMERATION_ORDER = 4


def enumerate_sign_cocycles(G: FiniteGroup, field: Field = QQ) -> list[Cocycle3]:
    """All {+-1}-valued cocycles on ``G`` (|G| <= 4).

    Writing ``alpha = (-1)^s`` turns the cocycle condition into a linear
    system for ``s`` over GF(2); its solution set is enumerated from a
    kernel basis and every table is re-checked quadruple by quadruple.
    """
    n = G.size
    if n > MAX_ENUMERATION_ORDER:
        raise PreconditionError(f"sign cocycle enumeration supports |G| <= {MAX_ENUMERATION_ORDER}")
    if field(-1) == field(1):
        raise PreconditionError("the field must have -1 != 1")
    F2 = GF(2)
    table = np.array(G.table)
    g1, g2, g3, g4 = (x.ravel() for x in np.indices((n,) * 4))
    # flat positions of the five factors of the condition, per quadruple
    terms = np.stack([
        (g2 * n + g3) * n + g4,
        (g1 * n + table[g2, g3]) * n + g4,
        (g1 * n + g2) * n + g3,
        (table[g1, g2] * n + g3) * n + g4,
        (g1 * n + g2) * n + table[g3, g4],
    ], axis=1)
    incidence = np.zeros((len(g1), n ** 3), dtype=np.int64)
    for col in range(5):
        np.add.at(incidence, (np.arange(len(g1)), terms[:, col]), 1)
    incidence %= 2
    rows = np.unique(incidence[incidence.any(axis=1)], axis=0)
    if len(rows):
        basis = np.array([[int(x) for x in v] for v in linalg.kernel(F2.array(rows.tolist()), F2).basis], dtype=np.int64)
    else:
        basis = np.eye(n ** 3, dtype=np.int64)
    if len(basis) == 0:
        basis = np.zeros((0, n ** 3), dtype=np.int64)
    coeffs = np.array(list(itertools.product((0, 1), repeat=len(basis))), dtype=np.int64).reshape(-1, len(basis))
    tables = coeffs.dot(basis) % 2
    # independent re-check of every table: the parity of each quadruple's five sign bits
    keep = np.ones(len(tables), dtype=bool)
    for start in range(0, len(tables), 2048):
        chunk = tables[start:start + 2048]
        keep[start:start + 2048] = ~(chunk[:, terms].sum(axis=2) % 2).any(axis=1)
    tables = tables[keep]
    order = np.lexsort(tables.T[::-1])
    minus, plus = field(-1), field(1)
    return [
        Cocycle3(G, field, np.where(t.reshape(n, n, n) == 1, minus, plus).astype(object))
        for t in tables[order]
    ]


# ------------------------------------------------------ constraints from alpha


def isotypic_projector(module: RModule, g: int) -> np.ndarray:
    """``rho(p_g)`` for a module over k(G) in the delta basis."""
    return module.action[g]


def constraint_from_cocycle(alpha: Cocycle3, X: RModule, Y: RModule, Z: RModule, enforce: bool = True) -> np.ndarray:
    """Operator on ``X (x) Y (x) Z`` acting by ``alpha(f, g, h)`` on the (f, g, h) isotypic piece."""
    if enforce and not cocycle_check(alpha):
        raise PreconditionError("alpha is not a 3-cocycle")
    n = alpha.group.size
    d = X.dim * Y.dim * Z.dim
    out = alpha.field.zeros((d, d))
    for f, g, h in itertools.product(range(n), repeat=3):
        block = linalg.kron(X.action[f], Y.action[g], Z.action[h])
        if not linalg.is_zero(block):
            out = out + block * alpha(f, g, h)
    return out


def cocycle_pentagon_holds(alpha: Cocycle3, X: RModule, Y: RModule, Z: RModule, W: RModule) -> bool:
    """Pentagon identity for ``constraint_from_cocycle`` (no enforcement)."""
    f = alpha.field

    def phi(a, b, c):
        return constraint_from_cocycle(alpha, a, b, c, enforce=False)

    lhs = phi(X.tensor(Y), Z, W).dot(phi(X, Y, Z.tensor(W)))
    rhs = (
        np.kron(phi(X, Y, Z), f.eye(W.dim))
        .dot(phi(X, Y.tensor(Z), W))
        .dot(np.kron(f.eye(X.dim), phi(Y, Z, W)))
    )
    return linalg.equal(lhs, rhs)


def cocycle_element(alpha: Cocycle3, R: CoalgebraStructure, module: RModule) -> TensorElement:
    """``m = sum_{f,g} m(f, g) (x) p_f (x) p_g`` with ``m(f, g) = sum_h alpha(h, f, g) rho(p_h)``."""
    n = alpha.group.size
    coeffs = R.field.zeros((n, n, module.dim, module.dim))
    for f, g in itertools.product(range(n), repeat=2):
        acc = R.field.zeros((module.dim, module.dim))
        for h in range(n):
            acc = acc + module.action[h] * alpha(h, f, g)
        coeffs[f, g] = acc
    return TensorElement(R.algebra, coeffs)


def cocycle_pair(alpha: Cocycle3, R: CoalgebraStructure, module: RModule) -> NucleusPair:
    return NucleusPair(module, cocycle_element(alpha, R, module))


def isotypic_module(R: CoalgebraStructure, labels, P=None) -> RModule:
    """k(G)-module where basis vector i lies in the ``labels[i]`` component,
    optionally written in the basis given by the columns of ``P``."""
    f = R.field
    acts = []
    for g in range(R.dim):
        acts.append(f.array(np.diag([f.one if lab == g else f.zero for lab in labels]).astype(object)))
    M = RModule(R, tuple(acts))
    return M if P is None else M.conjugated(P)
