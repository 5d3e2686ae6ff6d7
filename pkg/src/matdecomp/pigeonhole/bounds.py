"""Class-count bounds as functions of the connectivity value."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

__all__ = ["PowerBound", "uniform_bound", "linear_bound", "ft_signature_bound", "ft_cover_bound",
           "frame_boundary_bound", "frame_class_bound", "BOUNDS", "dw_bound"]


@dataclass(frozen=True)
class PowerBound:
    """The number 2**exponent + offset, compared without materialising it."""

    exponent: int
    offset: int = 1

    def admits(self, count: int) -> bool:
        """count <= 2**exponent + offset."""
        x = count - self.offset
        if x <= 0:
            return True
        if x.bit_length() <= self.exponent:
            return True
        return x.bit_length() == self.exponent + 1 and x == 1 << self.exponent

    def __str__(self):
        return f"2^{self.exponent}+{self.offset}"


def uniform_bound(lam: int) -> int:
    return lam + 2


def linear_bound(q: int, lam: int) -> PowerBound:
    return PowerBound((q ** lam - 1) // (q - 1))


def ft_signature_bound(lam: int) -> PowerBound:
    """Bound for full matching signatures, doubly exponential in λ."""
    return PowerBound(2 ** (2 ** lam))


def ft_cover_bound(cover_size: int) -> PowerBound:
    """Bound for the reduced certificates: at most 2^(4|S|) candidate tuples."""
    return PowerBound(2 ** (4 * cover_size))


def frame_boundary_bound(lam: int) -> int:
    """Maximum size of the shared vertex set in a 3-connected frame matroid.

    The statement is for positive λ, so λ = 0 is read as 1.
    """
    return 14 * max(lam, 1) - 12


def _bell(k: int) -> int:
    row = [1]
    for _ in range(k):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def frame_class_bound(lam: int, group_order: int = 1) -> int:
    """Number of possible frame signatures plus one for the dependent class.

    A signature picks the boundary vertices it meets, partitions them into
    blocks, tags each block and, for balanced blocks, records one group
    element per vertex.
    """
    n = frame_boundary_bound(lam)
    total = 0
    for k in range(n + 1):
        total += comb(n, k) * _bell(k) * 2 ** k * group_order ** k
    return total + 1


BOUNDS = {
    "uniform": uniform_bound,
    "linear": linear_bound,
    "ft": ft_signature_bound,
    "frame": frame_class_bound,
}


def dw_bound(kind: str, bw: int, **params):
    """Decomposition-width bound implied by branch-width bw: π(bw − 1)."""
    lam = max(bw - 1, 0)
    if kind == "linear":
        return linear_bound(params["q"], lam)
    if kind == "frame":
        return frame_class_bound(lam, params.get("group_order", 1))
    return BOUNDS[kind](lam)

