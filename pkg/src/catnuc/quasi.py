"""The quasi-bialgebra ``N = k(G) (x) k[F(G x G)]``.

Elements of ``N^{(x)k}`` are dictionaries from ``k``-tuples of basis pairs
``(a, word)`` to scalars, where ``a`` indexes the delta function ``p_a`` and
``word`` is a reduced word in the free generators ``u(f, g)``. The delta
functions commute with the words, so ``(p_a w)(p_b w') = [a = b] p_a w w'``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .cocycles import Cocycle3, cocycle_check
from .errors import InvalidStructureError
from .fields import QQ, Field
from .groups import FiniteGroup

Letter = tuple  # ((f, g), +1 | -1)


@dataclass(frozen=True, order=True)
class FreeWord:
    """A reduced word in the generators ``u(f, g)``."""

    letters: tuple = ()

    def __post_init__(self):
        for (gen, e) in self.letters:
            if e not in (1, -1) or len(gen) != 2:
                raise InvalidStructureError(f"bad letter {(gen, e)!r}")
        object.__setattr__(self, "letters", reduce_letters(self.letters))

    @classmethod
    def gen(cls, f: int, g: int, exponent: int = 1) -> "FreeWord":
        return cls((((f, g), exponent),))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((gen, -e) for gen, e in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return "".join(f"u{gen[0]}{gen[1]}" + ("" if e == 1 else "^-1") for gen, e in self.letters)


def reduce_letters(letters: Iterable[Letter]) -> tuple:
    """Free reduction with a stack (unique normal form)."""
    stack: list = []
    for gen, e in letters:
        gen = (int(gen[0]), int(gen[1]))
        if stack and stack[-1][0] == gen and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((gen, e))
    return tuple(stack)


EMPTY = FreeWord()


def _key_order(key):
    return tuple((a, w.letters) for a, w in key)


@dataclass(frozen=True, eq=False)
class NlkGElement:
    """A finite sum ``sum coeff * (p_a1 w1) (x) ... (x) (p_ak wk)``."""

    group: FiniteGroup
    field: Field
    legs: int
    terms: dict

    def __post_init__(self):
        clean = {}
        for key, v in self.terms.items():
            if len(key) != self.legs:
                raise InvalidStructureError("term has the wrong number of legs")
            v = self.field(v)
            if v != 0:
                clean[key] = v
        object.__setattr__(self, "terms", dict(sorted(clean.items(), key=lambda kv: _key_order(kv[0]))))

    # ------------------------------------------------------ constructors
    @classmethod
    def one(cls, G: FiniteGroup, field: Field = QQ, legs: int = 1) -> "NlkGElement":
        terms = {tuple((a, EMPTY) for a in key): field.one for key in itertools.product(range(G.size), repeat=legs)}
        return cls(G, field, legs, terms)

    @classmethod
    def p(cls, G: FiniteGroup, a: int, field: Field = QQ) -> "NlkGElement":
        return cls(G, field, 1, {((a, EMPTY),): field.one})

    @classmethod
    def word(cls, G: FiniteGroup, w: FreeWord, field: Field = QQ) -> "NlkGElement":
        """``1 (x) w = sum_a p_a w``."""
        return cls(G, field, 1, {((a, w),): field.one for a in range(G.size)})

    @classmethod
    def u(cls, G: FiniteGroup, f: int, g: int, exponent: int = 1, field: Field = QQ) -> "NlkGElement":
        return cls.word(G, FreeWord.gen(f, g, exponent), field)

    # ------------------------------------------------------- arithmetic
    def _check(self, other):
        if other.group != self.group or other.legs != self.legs or other.field != self.field:
            raise InvalidStructureError("incompatible elements")

    def __mul__(self, other: "NlkGElement") -> "NlkGElement":
        self._check(other)
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                if any(a != b for (a, _), (b, _) in zip(k1, k2)):
                    continue
                key = tuple((a, w1 * w2) for (a, w1), (_, w2) in zip(k1, k2))
                out[key] = out.get(key, self.field.zero) + v1 * v2
        return NlkGElement(self.group, self.field, self.legs, out)

    def __add__(self, other: "NlkGElement") -> "NlkGElement":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, self.field.zero) + v
        return NlkGElement(self.group, self.field, self.legs, out)

    def scale(self, s) -> "NlkGElement":
        s = self.field(s)
        return NlkGElement(self.group, self.field, self.legs, {k: v * s for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, NlkGElement):
            return NotImplemented
        return self.legs == other.legs and self.group == other.group and self.terms == other.terms

    __hash__ = None

    def tensor(self, other: "NlkGElement") -> "NlkGElement":
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                out[k1 + k2] = v1 * v2
        return NlkGElement(self.group, self.field, self.legs + other.legs, out)

    def is_pure(self) -> bool:
        """True when every word is empty (the element lies in k(G)^{(x)k})."""
        return all(len(w) == 0 for key in self.terms for _, w in key)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        parts = []
        for key, v in self.terms.items():
            legs = " (x) ".join(f"p{a}{'' if not len(w) else '*' + str(w)}" for a, w in key)
            parts.append(f"{self.field.format(v)}*[{legs}]")
        return " + ".join(parts) or "0"


# --------------------------------------------------------------- coproduct


def _generator_coproduct(G: FiniteGroup, field: Field, gen, e: int) -> NlkGElement:
    """``Delta(u(f,g)^e)`` as a 2-leg element."""
    f, g = gen
    terms = {}
    for h in range(G.size):
        W = FreeWord.gen(h, f) * FreeWord.gen(G.mul(h, f), g) * FreeWord.gen(h, G.mul(f, g), -1)
        if e == -1:
            W = W.inverse()
        for a in range(G.size):
            terms[((a, W), (h, FreeWord.gen(f, g, e)))] = field.one
    return NlkGElement(G, field, 2, terms)


def _p_coproduct(G: FiniteGroup, field: Field, a: int) -> NlkGElement:
    terms = {}
    for b, c in itertools.product(range(G.size), repeat=2):
        if G.mul(b, c) == a:
            terms[((b, EMPTY), (c, EMPTY))] = field.one
    return NlkGElement(G, field, 2, terms)


def _basis_coproduct(G: FiniteGroup, field: Field, a: int, w: FreeWord, cache: dict) -> NlkGElement:
    key = (a, w)
    if key not in cache:
        out = _p_coproduct(G, field, a)
        for gen, e in w.letters:
            out = out * _generator_coproduct(G, field, gen, e)
        cache[key] = out
    return cache[key]


def nl_coproduct(x: NlkGElement, leg: int = 0) -> NlkGElement:
    """Apply Delta to one leg (algebra map extended from the generators)."""
    G, field = x.group, x.field
    cache: dict = {}
    out: dict = {}
    for key, v in x.terms.items():
        a, w = key[leg]
        d = _basis_coproduct(G, field, a, w, cache)
        for dkey, dv in d.terms.items():
            new = key[:leg] + dkey + key[leg + 1:]
            out[new] = out.get(new, field.zero) + v * dv
    return NlkGElement(G, field, x.legs + 1, out)


def associator_phi(G: FiniteGroup, field: Field = QQ) -> tuple[NlkGElement, NlkGElement]:
    """``Phi = sum_{f,g} u(f,g) (x) p_f (x) p_g`` and its inverse."""
    phi, inv = {}, {}
    for f, g in itertools.product(range(G.size), repeat=2):
        for a in range(G.size):
            phi[((a, FreeWord.gen(f, g)), (f, EMPTY), (g, EMPTY))] = field.one
            inv[((a, FreeWord.gen(f, g, -1)), (f, EMPTY), (g, EMPTY))] = field.one
    return NlkGElement(G, field, 3, phi), NlkGElement(G, field, 3, inv)


def generators(G: FiniteGroup, field: Field = QQ) -> list[NlkGElement]:
    gens = [NlkGElement.p(G, a, field) for a in range(G.size)]
    for f, g in itertools.product(range(G.size), repeat=2):
        gens.append(NlkGElement.u(G, f, g, 1, field))
        gens.append(NlkGElement.u(G, f, g, -1, field))
    return gens


def quasi_coassoc_sides(x: NlkGElement, phi=None) -> tuple[NlkGElement, NlkGElement]:
    """``(Phi (I (x) Delta)Delta(x) Phi^-1, (Delta (x) I)Delta(x))``."""
    G, field = x.group, x.field
    phi, phi_inv = phi or associator_phi(G, field)
    d = nl_coproduct(x)
    conj = phi * nl_coproduct(d, leg=1) * phi_inv
    return conj, nl_coproduct(d, leg=0)


def quasi_coassoc_check(G: FiniteGroup, field: Field = QQ, elements=None) -> bool:
    """``Phi (I (x) Delta)Delta(x) Phi^-1 = (Delta (x) I)Delta(x)`` on generators
    (or on the given elements)."""
    phi = associator_phi(G, field)
    if not phi[0] * phi[1] == NlkGElement.one(G, field, 3):
        return False
    for x in elements if elements is not None else generators(G, field):
        lhs, rhs = quasi_coassoc_sides(x, phi)
        if lhs != rhs:
            return False
    return True


def random_word_element(G: FiniteGroup, rng: random.Random, length: int = 3, field: Field = QQ) -> NlkGElement:
    letters = []
    for _ in range(length):
        f, g = rng.randrange(G.size), rng.randrange(G.size)
        letters.append(((f, g), rng.choice((1, -1))))
    a = rng.randrange(G.size)
    return NlkGElement(G, field, 1, {((a, FreeWord(tuple(letters))),): field.one})


# --------------------------------------------------------------- splitting


@dataclass(frozen=True)
class SplittingReport:
    splits_inclusion: bool
    delta_compatible: bool
    is_cocycle: bool


def splitting_apply(alpha: Cocycle3, x: NlkGElement) -> np.ndarray:
    """``(pi (x) ... (x) pi)(x)`` with ``pi(u(f,g)) = sum_h alpha(h,f,g) p_h``,
    returned as a k-dimensional array in delta coordinates."""
    G, field = x.group, x.field
    out = field.zeros((G.size,) * x.legs)
    for key, v in x.terms.items():
        s = v
        for a, w in key:
            for (f, g), e in w.letters:
                val = alpha(a, f, g)
                s = s * (val if e == 1 else 1 / val)
        idx = tuple(a for a, _ in key)
        out[idx] = out[idx] + s
    return out


def splitting_hom(alpha: Cocycle3) -> SplittingReport:
    """Verify that ``pi`` splits the inclusion and is compatible with Delta on generators."""
    G, field = alpha.group, alpha.field
    splits = True
    for a in range(G.size):
        img = splitting_apply(alpha, NlkGElement.p(G, a, field))
        want = field.zeros(G.size)
        want[a] = field.one
        splits = splits and all(x == y for x, y in zip(img, want))
    compatible = True
    for x in generators(G, field):
        lhs = splitting_apply(alpha, nl_coproduct(x))
        px = splitting_apply(alpha, x)
        rhs = field.zeros((G.size, G.size))
        for b, c in itertools.product(range(G.size), repeat=2):
            rhs[b, c] = px[G.mul(b, c)]
        if any(p != q for p, q in zip(lhs.ravel(), rhs.ravel())):
            compatible = False
            break
    return SplittingReport(splits, compatible, cocycle_check(alpha))
