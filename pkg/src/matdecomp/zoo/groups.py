"""Gain groups: finite groups by multiplication table, and the integers under addition."""
from __future__ import annotations

from itertools import permutations

from ..core import DomainError

__all__ = ["Group", "TableGroup", "IntegerGroup", "cyclic", "symmetric3", "trivial"]


class Group:
    finite: bool = True

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    @property
    def identity(self):
        raise NotImplementedError

    def contains(self, a) -> bool:
        raise NotImplementedError

    def product(self, items):
        out = self.identity
        for a in items:
            out = self.mul(out, a)
        return out


class TableGroup(Group):
    """Elements are 0..k-1; table[a][b] is the product ab."""

    def __init__(self, table, identity: int = 0, name: str = ""):
        table = tuple(tuple(int(x) for x in row) for row in table)
        k = len(table)
        if k == 0 or any(len(row) != k for row in table):
            raise DomainError("multiplication table must be square and nonempty")
        if any(not 0 <= x < k for row in table for x in row):
            raise DomainError("table entries must be element indices")
        if not 0 <= identity < k:
            raise DomainError("identity index out of range")
        for a in range(k):
            if table[identity][a] != a or table[a][identity] != a:
                raise DomainError(f"{identity} is not an identity")
        for a in range(k):
            for b in range(k):
                ab = table[a][b]
                for c in range(k):
                    if table[ab][c] != table[a][table[b][c]]:
                        raise DomainError("table is not associative")
        inverse = []
        for a in range(k):
            found = [b for b in range(k) if table[a][b] == identity]
            if len(found) != 1 or table[found[0]][a] != identity:
                raise DomainError(f"element {a} has no inverse")
            inverse.append(found[0])
        self.table = table
        self._identity = identity
        self._inverse = tuple(inverse)
        self.name = name

    def __eq__(self, other):
        return isinstance(other, TableGroup) and self.table == other.table and self._identity == other._identity

    def __hash__(self):
        return hash((self.table, self._identity))

    def __repr__(self):
        return f"TableGroup(order={len(self.table)})"

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self):
        return range(len(self.table))

    @property
    def identity(self):
        return self._identity

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self._inverse[a]

    def contains(self, a) -> bool:
        return isinstance(a, int) and 0 <= a < len(self.table)

    def first_non_identity(self):
        for a in self.elements:
            if a != self._identity:
                return a
        raise DomainError("the trivial group has no non-identity element")


class IntegerGroup(Group):
    finite = False
    name = "integers"

    def __eq__(self, other):
        return isinstance(other, IntegerGroup)

    def __hash__(self):
        return hash("integers")

    def __repr__(self):
        return "IntegerGroup()"

    @property
    def identity(self):
        return 0

    def mul(self, a, b):
        return a + b

    def inv(self, a):
        return -a

    def contains(self, a) -> bool:
        return isinstance(a, int)

    def first_non_identity(self):
        return 1


def cyclic(n: int) -> TableGroup:
    return TableGroup([[(a + b) % n for b in range(n)] for a in range(n)], 0, name=f"Z{n}")


def trivial() -> TableGroup:
    return cyclic(1)


def symmetric3() -> TableGroup:
    perms = list(permutations(range(3)))  # index 0 is the identity
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(3))] for q in perms] for p in perms]
    return TableGroup(table, 0, name="S3")
