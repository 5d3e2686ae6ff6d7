"""Lattice path matroids M[P,Q] on elements 1..m+r."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ..core import DomainError, Matroid

__all__ = ["LatticePathPresentation", "lattice_path_oracle", "greedy_heights"]


@dataclass(frozen=True)
class LatticePathPresentation:
    P: str
    Q: str

    def __post_init__(self):
        for name, s in (("P", self.P), ("Q", self.Q)):
            if set(s) - {"N", "E"}:
                raise DomainError(f"{name} must be a string over N and E")
        if len(self.P) != len(self.Q) or self.P.count("N") != self.Q.count("N"):
            raise DomainError("P and Q must have the same numbers of N and E steps")
        lo, hi = self.low, self.high
        if any(a > b for a, b in zip(lo, hi)):
            raise DomainError("P goes above Q")

    @property
    def size(self) -> int:
        return len(self.P)

    @property
    def r(self) -> int:
        return self.P.count("N")

    @property
    def m(self) -> int:
        return self.P.count("E")

    @cached_property
    def low(self) -> tuple:
        """low[i] = number of N steps among the first i steps of P."""
        return _prefix(self.P)

    @cached_property
    def high(self) -> tuple:
        return _prefix(self.Q)

    def in_region(self, x: int, y: int) -> bool:
        t = x + y
        if x < 0 or y < 0 or t > self.size:
            return False
        return self.low[t] <= y <= self.high[t]


def _prefix(s: str) -> tuple:
    out = [0]
    for c in s:
        out.append(out[-1] + (c == "N"))
    return tuple(out)


def greedy_heights(L: LatticePathPresentation, Y) -> list | None:
    """Heights of the lowest path taking a north step at every element of Y.

    heights[i] is the number of north steps after i steps. Returns None
    when no intermediate path has all of Y among its north steps.
    """
    Y = set(Y)
    h = 0
    out = [0]
    for i in range(1, L.size + 1):
        h = h + 1 if i in Y else max(h, L.low[i])
        if h > L.high[i]:
            return None
        out.append(h)
    return out


def lattice_path_oracle(L: LatticePathPresentation) -> Matroid:
    n = L.size
    low, high = L.low, L.high

    def indep(mask: int) -> bool:
        h = 0
        for i in range(1, n + 1):
            if mask >> (i - 1) & 1:
                h += 1
            elif h < low[i]:
                h = low[i]
            if h > high[i]:
                return False
        return True

    return Matroid(range(1, n + 1), indep, name=f"lattice path matroid {L.P}/{L.Q}")
