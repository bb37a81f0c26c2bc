"""Exact ground fields: the rationals and prime fields GF(p).

Rational scalars are plain :class:`fractions.Fraction` values. Residues mod p
are :class:`Mod` instances, which refuse to mix with residues of another
modulus or with rationals.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable

import numpy as np

from .errors import FieldMismatchError, InvalidStructureError, NotInvertibleError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Mod:
    """Residue class modulo a prime ``p``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        object.__setattr__(self, "value", value % p)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Mod is immutable")

    def _coerce(self, other) -> int:
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return int(other)
        if isinstance(other, Fraction):
            raise FieldMismatchError(f"cannot combine GF({self.p}) with a rational")
        raise FieldMismatchError(f"cannot combine GF({self.p}) with {type(other).__name__}")

    def __add__(self, other):
        return Mod(self.value + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return Mod(self.value - self._coerce(other), self.p)

    def __rsub__(self, other):
        return Mod(self._coerce(other) - self.value, self.p)

    def __mul__(self, other):
        return Mod(self.value * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "Mod":
        if self.value == 0:
            raise NotInvertibleError("division by zero in GF(%d)" % self.p)
        return Mod(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        return self * Mod(self._coerce(other), self.p).inverse()

    def __rtruediv__(self, other):
        return Mod(self._coerce(other), self.p) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Mod(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) vs GF({other.p})")
            return self.value == other.value
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return self.value == int(other) % self.p
        if isinstance(other, Fraction):
            raise FieldMismatchError(f"cannot compare GF({self.p}) with a rational")
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Mod({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class Field:
    """Common interface of :data:`QQ` and :func:`GF` fields."""

    characteristic: int

    def __call__(self, x: Any):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def contains(self, x) -> bool:
        raise NotImplementedError

    def parse(self, text) -> Any:
        raise NotImplementedError

    def format(self, x) -> str:
        return str(self(x))

    def descriptor(self) -> dict:
        raise NotImplementedError

    def random_element(self, rng: random.Random, nonzero: bool = False):
        raise NotImplementedError

    def inv(self, x):
        x = self(x)
        if x == 0:
            raise NotInvertibleError("zero has no inverse")
        return 1 / x if isinstance(x, Fraction) else x.inverse()

    def root_of_unity(self, n: int):
        """A primitive n-th root of unity, or raise if the field has none."""
        raise NotImplementedError

    # array helpers -----------------------------------------------------
    def array(self, data) -> np.ndarray:
        arr = np.array(data, dtype=object)
        out = np.empty(arr.shape, dtype=object)
        for idx in np.ndindex(arr.shape):
            out[idx] = self(arr[idx])
        return out

    def zeros(self, shape) -> np.ndarray:
        out = np.empty(shape, dtype=object)
        z = self.zero
        for idx in np.ndindex(out.shape):
            out[idx] = z
        return out

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    def vector(self, values: Iterable) -> np.ndarray:
        return self.array(list(values))


class Rationals(Field):
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
            return Fraction(int(x))
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Mod):
            raise FieldMismatchError(f"GF({x.p}) residue used where a rational was expected")
        raise FieldMismatchError(f"cannot interpret {x!r} as a rational")

    def contains(self, x) -> bool:
        return isinstance(x, Fraction)

    def parse(self, text):
        if isinstance(text, (int, np.integer)) and not isinstance(text, bool):
            return Fraction(int(text))
        if not isinstance(text, str):
            raise InvalidStructureError(f"rational must be an int or 'a/b' string, got {text!r}")
        s = text.strip()
        try:
            if "/" in s:
                num, den = s.split("/")
                den_i = int(den)
                if den_i <= 0:
                    raise InvalidStructureError(f"denominator must be positive in {text!r}")
                return Fraction(int(num), den_i)
            return Fraction(int(s))
        except ValueError as exc:
            raise InvalidStructureError(f"bad rational {text!r}") from exc

    def format(self, x) -> str:
        x = self(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def descriptor(self) -> dict:
        return {"type": "Q"}

    def random_element(self, rng, nonzero=False):
        while True:
            x = Fraction(rng.randint(-4, 4), rng.choice((1, 1, 1, 2, 3)))
            if not nonzero or x != 0:
                return x

    def root_of_unity(self, n):
        if n == 1:
            return Fraction(1)
        if n == 2:
            return Fraction(-1)
        raise InvalidStructureError(f"Q has no primitive {n}-th root of unity")

    def __repr__(self):
        return "QQ"

    def __reduce__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise InvalidStructureError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def __call__(self, x):
        if isinstance(x, Mod):
            if x.p != self.p:
                raise FieldMismatchError(f"GF({x.p}) residue used in GF({self.p})")
            return x
        if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
            return Mod(int(x), self.p)
        if isinstance(x, Fraction):
            if x.denominator == 1:
                return Mod(x.numerator, self.p)
            raise FieldMismatchError(f"rational {x} used where a GF({self.p}) residue was expected")
        if isinstance(x, str):
            return self.parse(x)
        raise FieldMismatchError(f"cannot interpret {x!r} in GF({self.p})")

    def contains(self, x) -> bool:
        return isinstance(x, Mod) and x.p == self.p

    def parse(self, text):
        try:
            v = int(text)
        except (TypeError, ValueError) as exc:
            raise InvalidStructureError(f"bad GF({self.p}) residue {text!r}") from exc
        if not 0 <= v < self.p:
            raise InvalidStructureError(f"GF({self.p}) residue {v} outside 0..{self.p - 1}")
        return Mod(v, self.p)

    def descriptor(self) -> dict:
        return {"type": "GF", "p": self.p}

    def random_element(self, rng, nonzero=False):
        lo = 1 if nonzero else 0
        return Mod(rng.randint(lo, self.p - 1), self.p)

    def root_of_unity(self, n):
        if (self.p - 1) % n:
            raise InvalidStructureError(f"GF({self.p}) has no primitive {n}-th root of unity")
        for g in range(1, self.p):
            z = Mod(g, self.p)
            if z ** n == 1 and all(z ** k != 1 for k in range(1, n)):
                return z
        raise InvalidStructureError("unreachable")  # pragma: no cover

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def __reduce__(self):
        return (GF, (self.p,))


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_of(x) -> Field | None:
    """The field a scalar belongs to; bare ints are field-neutral (None)."""
    if isinstance(x, Fraction):
        return QQ
    if isinstance(x, Mod):
        return GF(x.p)
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return None
    raise FieldMismatchError(f"{x!r} is not a field element")


def common_field(values: Iterable, default: Field | None = None) -> Field:
    """The single field shared by all values; raises on a mixture."""
    found = None
    for v in values:
        f = field_of(v)
        if f is None:
            continue
        if found is None:
            found = f
        elif f != found:
            raise FieldMismatchError(f"mixed fields {found!r} and {f!r}")
    if found is None:
        if default is None:
            return QQ
        return default
    if default is not None and default != found:
        raise FieldMismatchError(f"expected {default!r}, found {found!r}")
    return found


def field_from_descriptor(desc: dict) -> Field:
    if not isinstance(desc, dict) or "type" not in desc:
        raise InvalidStructureError(f"bad field descriptor {desc!r}")
    kind = desc["type"]
    if kind == "Q":
        return QQ
    if kind == "GF":
        if "p" not in desc:
            raise InvalidStructureError("GF descriptor needs 'p'")
        return GF(int(desc["p"]))
    raise InvalidStructureError(f"unknown field type {kind!r}")
