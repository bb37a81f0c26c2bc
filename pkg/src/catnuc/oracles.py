"""Independent ground truth used by the tests and ``selftest``.

Nothing here goes through the structure-constant or tensor-element code
paths it is meant to check: octonions come from Cayley-Dickson doubling,
kernels from sympy or from enumerating every vector of a small GF(p)^n,
and module-category constructions from composing explicit operators.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np
import sympy

from .algebra import Algebra
from .errors import NotInvertibleError
from .fields import QQ, Field


# ------------------------------------------------------- Cayley-Dickson


def _cd_conj(x: tuple) -> tuple:
    if len(x) == 1:
        return x
    h = len(x) // 2
    return _cd_conj(x[:h]) + tuple(-v for v in x[h:])


def _cd_add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _cd_sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def cd_multiply(x: tuple, y: tuple) -> tuple:
    """``(a, b)(c, d) = (ac - conj(d) b, da + b conj(c))``."""
    if len(x) == 1:
        return (x[0] * y[0],)
    h = len(x) // 2
    a, b, c, d = x[:h], x[h:], y[:h], y[h:]
    return _cd_sub(cd_multiply(a, c), cd_multiply(_cd_conj(d), b)) + _cd_add(
        cd_multiply(d, a), cd_multiply(b, _cd_conj(c))
    )


def cayley_dickson_table(levels: int) -> list:
    """``table[i][j]`` = coordinates of ``e_i e_j`` in the algebra of dimension 2^levels."""
    n = 2 ** levels
    basis = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    return [[cd_multiply(basis[i], basis[j]) for j in range(n)] for i in range(n)]


def cayley_dickson_algebra(levels: int) -> Algebra:
    """R, C, H, O for levels 0..3 over the rationals (basis e0 = 1, e1, ...)."""
    table = cayley_dickson_table(levels)
    n = len(table)
    c = QQ.zeros((n, n, n))
    for i, j in itertools.product(range(n), repeat=2):
        c[i, j] = QQ.array(list(table[i][j]))
    unit = QQ.zeros(n)
    unit[0] = QQ.one
    return Algebra(QQ, c, unit, tuple(f"e{i}" for i in range(n)))


def octonions() -> Algebra:
    return cayley_dickson_algebra(3)


def quaternions() -> Algebra:
    return cayley_dickson_algebra(2)


def cd_associator(levels: int, i: int, j: int, k: int) -> tuple:
    """``J(e_i, e_j, e_k)`` computed with Cayley-Dickson products."""
    x, y, z = (_basis(levels, t) for t in (i, j, k))
    return _cd_sub(cd_multiply(x, cd_multiply(y, z)), cd_multiply(cd_multiply(x, y), z))


def _basis(levels: int, i: int) -> tuple:
    n = 2 ** levels
    return tuple(Fraction(int(i == j)) for j in range(n))


# ----------------------------------------------------------- kernels


def sympy_kernel_rref(rows) -> list[tuple]:
    """Canonical (rref) basis of the rational null space, via sympy."""
    M = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in rows])
    null = M.nullspace()
    if not null:
        return []
    B = sympy.Matrix.hstack(*null).T.rref()[0]
    out = []
    for r in range(B.rows):
        row = tuple(Fraction(int(v.p), int(v.q)) for v in B.row(r))
        if any(row):
            out.append(row)
    return out


def enumerate_kernel(rows, p: int, n: int) -> set[tuple]:
    """Every vector of GF(p)^n annihilated by ``rows`` (entries as ints mod p)."""
    mat = [[int(x) % p for x in row] for row in rows]
    out = set()
    for v in itertools.product(range(p), repeat=n):
        if all(sum(a * b for a, b in zip(row, v)) % p == 0 for row in mat):
            out.add(v)
    return out


def oracle_nucleus_rows(levels: int, side: str) -> list:
    """Rows of the nucleus equations built from Cayley-Dickson products only."""
    n = 2 ** levels
    e = [_basis(levels, i) for i in range(n)]

    def J(x, y, z):
        return _cd_sub(cd_multiply(x, cd_multiply(y, z)), cd_multiply(cd_multiply(x, y), z))

    rows = []
    for x, y in itertools.product(range(n), repeat=2):
        cols = []
        for a in range(n):
            if side == "l":
                cols.append(J(e[a], e[x], e[y]))
            elif side == "m":
                cols.append(J(e[x], e[a], e[y]))
            else:
                cols.append(J(e[x], e[y], e[a]))
        for out in range(n):
            rows.append([cols[a][out] for a in range(n)])
    return rows


# ------------------------------------------------------------- monoids


def enumerate_monoids(n: int) -> list[tuple]:
    """All raw Cayley tables on {0..n-1} that form a monoid (any unit position).

    Backtracking fills the table with the unit fixed at 0 and prunes on
    associativity of already-filled triples; every other unit position is
    obtained by swapping labels 0 and u.
    """
    if n == 0:
        return []
    free = [(a, b) for a in range(1, n) for b in range(1, n)]
    base = []
    t = [[None] * n for _ in range(n)]
    for x in range(n):
        t[0][x] = x
        t[x][0] = x

    def consistent() -> bool:
        for a, b, c in itertools.product(range(n), repeat=3):
            ab = t[a][b]
            bc = t[b][c]
            if ab is None or bc is None:
                continue
            l, r = t[ab][c], t[a][bc]
            if l is not None and r is not None and l != r:
                return False
        return True

    def fill(k: int):
        if k == len(free):
            base.append(tuple(tuple(row) for row in t))
            return
        a, b = free[k]
        for v in range(n):
            t[a][b] = v
            if consistent():
                fill(k + 1)
        t[a][b] = None

    fill(0)
    out = set(base)
    for u in range(1, n):
        perm = list(range(n))
        perm[0], perm[u] = u, 0
        for tab in base:
            new = [[None] * n for _ in range(n)]
            for a, b in itertools.product(range(n), repeat=2):
                new[perm[a]][perm[b]] = perm[tab[a][b]]
            out.add(tuple(tuple(r) for r in new))
    return sorted(out)


def brute_force_is_monoid(table) -> bool:
    n = len(table)
    if any(len(r) != n or any(not 0 <= x < n for x in r) for r in table):
        return False
    has_unit = any(all(table[e][x] == x and table[x][e] == x for x in range(n)) for e in range(n))
    assoc = all(table[table[a][b]][c] == table[a][table[b][c]] for a, b, c in itertools.product(range(n), repeat=3))
    return has_unit and assoc


def magmas_failing_one_triple(n: int = 3) -> list:
    """All ``n``-element magma tables whose associativity fails on exactly one triple.

    With a unit forced at 0 there are none for n = 3, so every table is searched.
    """
    found = []
    for vals in itertools.product(range(n), repeat=n * n):
        t = [vals[r * n:(r + 1) * n] for r in range(n)]
        bad = [(a, b, c) for a, b, c in itertools.product(range(n), repeat=3) if t[t[a][b]][c] != t[a][t[b][c]]]
        if len(bad) == 1:
            found.append((tuple(tuple(r) for r in t), bad[0]))
    return found


# --------------------------------------------------- categorical oracle


def _gauss_inverse(mat: np.ndarray, field: Field) -> np.ndarray:
    n = mat.shape[0]
    a = [[field(x) for x in row] + [field.one if i == j else field.zero for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise NotInvertibleError("oracle: singular operator")
        a[col], a[piv] = a[piv], a[col]
        inv = field.one / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return np.array([row[n:] for row in a], dtype=object)


def _eye(n, field):
    return np.array([[field.one if i == j else field.zero for j in range(n)] for i in range(n)], dtype=object)


class OperatorOracle:
    """Module-category constructions over ``(R, Delta)`` as explicit operators.

    Modules are lists of action matrices; natural transformations are
    callables ``(X, Y) -> operator``.
    """

    def __init__(self, algebra: Algebra, delta: np.ndarray):
        self.field = algebra.field
        self.n = algebra.dim
        self.delta = delta

    def tensor(self, X: list, Y: list) -> list:
        out = []
        for i in range(self.n):
            acc = None
            for j, k in itertools.product(range(self.n), repeat=2):
                cf = self.delta[i, j, k]
                if cf != 0:
                    term = np.kron(X[j], Y[k]) * cf
                    acc = term if acc is None else acc + term
            if acc is None:
                d = X[0].shape[0] * Y[0].shape[0]
                acc = np.array([[self.field.zero] * d for _ in range(d)], dtype=object)
            out.append(acc)
        return out

    def act2(self, coeffs: np.ndarray, X: list, Y: list) -> np.ndarray:
        """Operator of ``sum c[i, j] (x) rho_X(e_i) (x) rho_Y(e_j)``; coeffs shape (n, n, d, d)."""
        acc = None
        for i, j in itertools.product(range(self.n), repeat=2):
            term = np.kron(np.kron(coeffs[i, j], X[i]), Y[j])
            acc = term if acc is None else acc + term
        return acc

    def nucleus_transformation(self, m_coeffs: np.ndarray):
        """``a_{X,Y}: A (x) X (x) Y`` for a pair with element ``m``."""
        return lambda X, Y: self.act2(m_coeffs, X, Y)

    def tensor_transformation(self, a, b, dA: int, B: list):
        """``(a|b)_{X,Y} = (a_{B,X} (x) Y) a_{B(x)X,Y} (A (x) b_{X,Y}) a_{B,X(x)Y}^-1``."""
        f = self.field

        def ab(X, Y):
            dY = Y[0].shape[0]
            first = np.kron(a(B, X), _eye(dY, f))
            second = a(self.tensor(B, X), Y)
            third = np.kron(_eye(dA, f), b(X, Y))
            fourth = _gauss_inverse(a(B, self.tensor(X, Y)), f)
            return first.dot(second).dot(third).dot(fourth)

        return ab

    def constraint(self, a, N: list, L: list) -> np.ndarray:
        """``phi_{(M,a),(N,b),(L,c)} = a_{N,L}``."""
        return a(N, L)

    def twist_transformation(self, a, c_coeffs: np.ndarray, A: list):
        """``a^c_{X,Y} = (c_{A,X} (x) Y) c_{A(x)X,Y} a_{X,Y} c_{A,X(x)Y}^-1 (A (x) c_{X,Y})^-1``,
        with ``c_{X,Y} = sum c[i, j] rho_X(e_i) (x) rho_Y(e_j)``."""
        f = self.field
        dA = A[0].shape[0]

        def c(X, Y):
            acc = None
            for i, j in itertools.product(range(self.n), repeat=2):
                term = np.kron(X[i], Y[j]) * c_coeffs[i, j]
                acc = term if acc is None else acc + term
            return acc

        def twisted(X, Y):
            dY = Y[0].shape[0]
            first = np.kron(c(A, X), _eye(dY, f))
            second = c(self.tensor(A, X), Y)
            third = a(X, Y)
            fourth = _gauss_inverse(c(A, self.tensor(X, Y)), f)
            fifth = _gauss_inverse(np.kron(_eye(dA, f), c(X, Y)), f)
            return first.dot(second).dot(third).dot(fourth).dot(fifth)

        return twisted
