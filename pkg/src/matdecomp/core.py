"""Independence oracles over bitmask subsets, and the quantities derived from them."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

import numpy as np

__all__ = [
    "DomainError", "SizeGuardError", "Matroid", "SetSystem", "MinorSpec",
    "rank", "rank_mask", "closure", "connectivity", "is_n_connected",
    "minor", "dual", "verify_axioms", "set_system", "independence_table",
    "rank_table", "same_matroid", "circuits", "bits", "submasks",
    "EXHAUSTIVE_LIMIT",
]

EXHAUSTIVE_LIMIT = 20


class DomainError(ValueError):
    pass


class SizeGuardError(ValueError):
    def __init__(self, size: int, limit: int, what: str = "ground set"):
        super().__init__(f"{what} has {size} elements, limit is {limit}")
        self.size = size
        self.limit = limit


def guard(size: int, limit: int, what: str = "ground set") -> None:
    if size > limit:
        raise SizeGuardError(size, limit, what)


def bits(mask: int) -> Iterator[int]:
    """Positions of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask: int) -> Iterator[int]:
    """All submasks of mask, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class Matroid:
    """An independence oracle on an ordered ground set.

    `indep` receives bitmasks where bit i stands for ground[i]; the
    element-level API (`is_independent`, `rank`, ...) converts for you.
    """

    def __init__(self, ground: Iterable[int], indep: Callable[[int], bool], name: str = ""):
        ground = list(ground)
        if any((not isinstance(e, (int, np.integer))) or e < 0 for e in ground):
            raise DomainError("ground elements must be non-negative integers")
        if len(set(ground)) != len(ground):
            raise DomainError("ground elements must be distinct")
        self.ground = tuple(sorted(int(e) for e in ground))
        self._pos = {e: i for i, e in enumerate(self.ground)}
        self._indep = indep
        self.name = name
        self._table = None

    def __repr__(self):
        label = self.name or "Matroid"
        return f"<{label} on {len(self.ground)} elements>"

    def __len__(self):
        return len(self.ground)

    @property
    def full(self) -> int:
        return (1 << len(self.ground)) - 1

    def mask(self, X: Iterable[int]) -> int:
        m = 0
        for e in X:
            try:
                m |= 1 << self._pos[e]
            except KeyError:
                raise DomainError(f"element {e} is not in the ground set") from None
        return m

    def elements(self, mask: int) -> frozenset:
        return frozenset(self.ground[i] for i in bits(mask))

    def position(self, e: int) -> int:
        try:
            return self._pos[e]
        except KeyError:
            raise DomainError(f"element {e} is not in the ground set") from None

    def indep(self, mask: int) -> bool:
        if self._table is not None:
            return bool(self._table[mask])
        return bool(self._indep(mask))

    def is_independent(self, X: Iterable[int]) -> bool:
        return self.indep(self.mask(X))


@dataclass(frozen=True)
class SetSystem:
    ground: tuple
    family: frozenset  # of frozensets

    def __post_init__(self):
        g = set(self.ground)
        for member in self.family:
            if not set(member) <= g:
                raise DomainError("family member is not a subset of the ground set")


@dataclass(frozen=True)
class MinorSpec:
    contract: frozenset = frozenset()
    delete: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "contract", frozenset(self.contract))
        object.__setattr__(self, "delete", frozenset(self.delete))
        if self.contract & self.delete:
            raise DomainError("contract and delete sets overlap")


def independence_table(M: Matroid, assume_matroid: bool = True) -> np.ndarray:
    """Boolean array over all 2^n masks.

    With assume_matroid, a set is declared dependent as soon as the set
    minus its top element is, which skips most oracle calls; pass False
    when the oracle itself is under test.
    """
    if assume_matroid and M._table is not None:
        return M._table
    n = len(M.ground)
    guard(n, EXHAUSTIVE_LIMIT)
    table = np.zeros(1 << n, dtype=bool)
    oracle = M._indep
    if assume_matroid:
        table[0] = bool(oracle(0))
        for mask in range(1, 1 << n):
            rest = mask & ~(1 << (mask.bit_length() - 1))
            table[mask] = table[rest] and bool(oracle(mask))
        M._table = table
    else:
        for mask in range(1 << n):
            table[mask] = bool(oracle(mask))
    return table


_POPCOUNT_CACHE: dict[int, np.ndarray] = {}


def popcounts(n: int) -> np.ndarray:
    if n not in _POPCOUNT_CACHE:
        pc = np.zeros(1 << n, dtype=np.int64)
        for i in range(n):
            pc[1 << i: 1 << (i + 1)] = pc[: 1 << i] + 1
        _POPCOUNT_CACHE[n] = pc
    return _POPCOUNT_CACHE[n]


def rank_table(M: Matroid) -> np.ndarray:
    """Rank of every mask, from the independence table."""
    n = len(M.ground)
    table = independence_table(M)
    pc = popcounts(n)
    rk = np.where(table, pc, 0)
    # process by size so that every proper subset is already final
    order = np.argsort(pc, kind="stable")
    sizes = pc[order]
    for k in range(1, n + 1):
        level = order[sizes == k]
        dep = level[~table[level]]
        if dep.size == 0:
            continue
        best = np.zeros(dep.size, dtype=np.int64)
        for i in range(n):
            has = (dep >> i) & 1 == 1
            cand = np.where(has, rk[dep ^ (1 << i)], 0)
            np.maximum(best, cand, out=best)
        rk[dep] = best
    return rk


def rank_mask(M: Matroid, mask: int) -> int:
    """Greedy rank in ascending element order."""
    if M._table is not None:
        current = 0
        for i in bits(mask):
            if M._table[current | (1 << i)]:
                current |= 1 << i
        return bin(current).count("1")
    current = 0
    size = 0
    for i in bits(mask):
        if M._indep(current | (1 << i)):
            current |= 1 << i
            size += 1
    return size


def greedy_basis(M: Matroid, mask: int) -> int:
    current = 0
    for i in bits(mask):
        if M.indep(current | (1 << i)):
            current |= 1 << i
    return current


def rank(M: Matroid, X: Iterable[int]) -> int:
    return rank_mask(M, M.mask(X))


def closure(M: Matroid, X: Iterable[int]) -> frozenset:
    mask = M.mask(X)
    basis = greedy_basis(M, mask)
    out = mask
    for i in range(len(M.ground)):
        if not mask >> i & 1 and not M.indep(basis | (1 << i)):
            out |= 1 << i
    return M.elements(out)


def connectivity(M: Matroid, U: Iterable[int]) -> int:
    u = M.mask(U)
    return rank_mask(M, u) + rank_mask(M, M.full ^ u) - rank_mask(M, M.full)


def connectivity_table(M: Matroid) -> np.ndarray:
    rk = rank_table(M)
    full = M.full
    return rk + rk[full ^ np.arange(full + 1)] - rk[full]


def is_n_connected(M: Matroid, n: int, limit: int = EXHAUSTIVE_LIMIT) -> bool:
    size = len(M.ground)
    guard(size, limit)
    lam = connectivity_table(M)
    pc = popcounts(size)
    small = np.minimum(pc, size - pc)
    for k in range(1, n):
        if np.any((small >= k) & (lam < k)):
            return False
    return True


def minor(M: Matroid, spec: MinorSpec) -> Matroid:
    """Oracle for M / contract \\ delete."""
    cmask = M.mask(spec.contract)
    dmask = M.mask(spec.delete)
    basis = greedy_basis(M, cmask)
    keep = [i for i in range(len(M.ground)) if not (cmask | dmask) >> i & 1]
    new_ground = [M.ground[i] for i in keep]

    def indep(mask: int) -> bool:
        old = basis
        for j in bits(mask):
            old |= 1 << keep[j]
        return M.indep(old)

    return Matroid(new_ground, indep, name=f"minor of {M.name}" if M.name else "minor")


def dual(M: Matroid) -> Matroid:
    full = M.full
    r = rank_mask(M, full)

    def indep(mask: int) -> bool:
        return rank_mask(M, full ^ mask) == r

    return Matroid(M.ground, indep, name=f"dual of {M.name}" if M.name else "dual")


def set_system(M: Matroid, limit: int = EXHAUSTIVE_LIMIT) -> SetSystem:
    """Explicit family of independent sets, queried without shortcuts."""
    guard(len(M.ground), limit)
    table = independence_table(M, assume_matroid=False)
    family = frozenset(M.elements(m) for m in np.flatnonzero(table).tolist())
    return SetSystem(M.ground, family)


def verify_axioms(S: SetSystem, limit: int = EXHAUSTIVE_LIMIT) -> bool:
    """Check that S is nonempty, downward closed and has the exchange property.

    Exchange is checked through the equivalent condition that, for every
    independent I, the set spanned by I (I together with every e with I+e
    dependent) has maximum independent subsets of size |I| only.
    """
    ground = tuple(sorted(S.ground))
    n = len(ground)
    guard(n, limit)
    pos = {e: i for i, e in enumerate(ground)}
    table = np.zeros(1 << n, dtype=bool)
    for member in S.family:
        m = 0
        for e in member:
            m |= 1 << pos[e]
        table[m] = True
    if not table[0]:
        return False
    members = np.flatnonzero(table).tolist()
    for m in members:
        for i in bits(m):
            if not table[m ^ (1 << i)]:
                return False
    # largest independent subset size of every mask
    pc = popcounts(n)
    best = np.where(table, pc, -1)
    for mask in range(1, 1 << n):
        if best[mask] < 0:
            b = 0
            for i in bits(mask):
                v = best[mask ^ (1 << i)]
                if v > b:
                    b = v
            best[mask] = b
    full = (1 << n) - 1
    for m in members:
        span = m
        for i in bits(full ^ m):
            if not table[m | (1 << i)]:
                span |= 1 << i
        if best[span] != pc[m]:
            return False
    return True


def same_matroid(M: Matroid, N: Matroid) -> bool:
    if M.ground != N.ground:
        return False
    return bool(np.array_equal(independence_table(M, False), independence_table(N, False)))


def circuits(M: Matroid, max_size: int | None = None) -> list[frozenset]:
    """Minimal dependent sets, smallest first."""
    n = len(M.ground)
    table = independence_table(M)
    pc = popcounts(n)
    out = []
    for mask in np.argsort(pc, kind="stable").tolist():
        if table[mask]:
            continue
        if max_size is not None and pc[mask] > max_size:
            break
        if all(table[mask ^ (1 << i)] for i in bits(mask)):
            out.append(M.elements(mask))
    return out
