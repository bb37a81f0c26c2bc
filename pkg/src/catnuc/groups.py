"""Finite groups given by Cayley tables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .algebra import FiniteMonoid, is_monoid
from .errors import InvalidStructureError


@dataclass(frozen=True)
class FiniteGroup:
    table: tuple
    unit: int
    inverse: tuple = ()
    names: Optional[tuple] = dc_field(default=None, compare=False)

    def __post_init__(self):
        try:
            t = tuple(tuple(int(x) for x in row) for row in self.table)
        except (TypeError, ValueError) as exc:
            raise InvalidStructureError("group table entries must be integers") from exc
        object.__setattr__(self, "table", t)
        if not is_monoid(t, self.unit):
            raise InvalidStructureError("group table is not associative with the given unit")
        n = len(t)
        inv = []
        for a in range(n):
            cands = [b for b in range(n) if t[a][b] == self.unit and t[b][a] == self.unit]
            if not cands:
                raise InvalidStructureError(f"element {a} has no inverse")
            inv.append(cands[0])
        if self.inverse and tuple(self.inverse) != tuple(inv):
            raise InvalidStructureError("declared inverse table is wrong")
        object.__setattr__(self, "inverse", tuple(inv))
        if self.names is not None:
            if len(self.names) != n:
                raise InvalidStructureError("one name per element required")
            object.__setattr__(self, "names", tuple(str(x) for x in self.names))

    @property
    def size(self) -> int:
        return len(self.table)

    def __len__(self):
        return self.size

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def name(self, a: int) -> str:
        return self.names[a] if self.names else str(a)

    def index(self, label) -> int:
        """Element index from an index or a name."""
        if isinstance(label, int):
            if not 0 <= label < self.size:
                raise InvalidStructureError(f"element {label} out of range")
            return label
        label = str(label).strip()
        if self.names and label in self.names:
            return self.names.index(label)
        try:
            return self.index(int(label))
        except ValueError as exc:
            raise InvalidStructureError(f"unknown group element {label!r}") from exc

    def as_monoid(self) -> FiniteMonoid:
        return FiniteMonoid(self.table, self.unit, self.names)

    @classmethod
    def from_table(cls, table, names=None) -> "FiniteGroup":
        n = len(table)
        units = [e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))]
        if not units:
            raise InvalidStructureError("group table has no unit")
        return cls(table, units[0], (), None if names is None else tuple(names))


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), 0)


def trivial_group() -> FiniteGroup:
    return cyclic_group(1)


def symmetric_group(n: int) -> FiniteGroup:
    """S_n with ``(s t)(i) = s(t(i))``; element 0 is the identity."""
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(tuple(index[tuple(s[t[i]] for i in range(n))] for t in perms) for s in perms)
    names = tuple("".join(str(x) for x in p) for p in perms)
    return FiniteGroup(table, 0, (), names)


def klein_four_group() -> FiniteGroup:
    return FiniteGroup(tuple(tuple(a ^ b for b in range(4)) for a in range(4)), 0)
