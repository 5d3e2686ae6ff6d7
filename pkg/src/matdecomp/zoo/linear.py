"""GF(p)-represented and uniform matroids. Elements are numbered 1..n."""
from __future__ import annotations

from dataclasses import dataclass

from ..core import DomainError, Matroid, bits
from .gfp import is_prime, rank_mod_p

__all__ = ["LinearRep", "linear_oracle", "UniformSpec", "uniform_oracle"]


@dataclass(frozen=True)
class LinearRep:
    p: int
    rows: tuple  # tuple of row tuples; column j is element j+1

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")
        rows = tuple(tuple(int(x) % self.p for x in r) for r in self.rows)
        if len({len(r) for r in rows}) > 1:
            raise DomainError("rows have different lengths")
        object.__setattr__(self, "rows", rows)

    @property
    def width(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def height(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> tuple:
        """Column of element j (1-based)."""
        return tuple(r[j - 1] for r in self.rows)

    def columns(self) -> list:
        return [self.column(j) for j in range(1, self.width + 1)]


def linear_oracle(rep: LinearRep) -> Matroid:
    cols = rep.columns()
    p = rep.p

    def indep(mask: int) -> bool:
        chosen = [cols[i] for i in bits(mask)]
        if len(chosen) > rep.height:
            return False
        return rank_mod_p(chosen, p) == len(chosen)

    return Matroid(range(1, rep.width + 1), indep, name=f"GF({p}) matroid")


@dataclass(frozen=True)
class UniformSpec:
    r: int
    n: int

    def __post_init__(self):
        if not 0 <= self.r <= self.n:
            raise DomainError(f"need 0 <= r <= n, got r={self.r} n={self.n}")


def uniform_oracle(r: int, n: int) -> Matroid:
    UniformSpec(r, n)
    return Matroid(range(1, n + 1), lambda mask: bin(mask).count("1") <= r, name=f"U({r},{n})")
