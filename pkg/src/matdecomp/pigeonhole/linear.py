"""Signatures of GF(p)-represented matroids: the span of X met with the span of V."""
from __future__ import annotations

from dataclasses import dataclass

from ..core import DomainError
from ..zoo.gfp import rank_mod_p, rref, span_intersection
from ..zoo.linear import LinearRep

__all__ = ["LinearSignature", "linear_signature", "linear_refinement"]


@dataclass(frozen=True)
class LinearSignature:
    dependent: bool
    basis: tuple = ()  # reduced echelon rows


class _LinearClassifier:
    def __init__(self, rep: LinearRep, U):
        self.rep = rep
        self.U = frozenset(U)
        V = [j for j in range(1, rep.width + 1) if j not in self.U]
        self.cols = {j: rep.column(j) for j in range(1, rep.width + 1)}
        self.v_basis = rref([self.cols[j] for j in V], rep.p, width=rep.height)

    def __call__(self, X) -> LinearSignature:
        xs = [self.cols[j] for j in sorted(X)]
        if rank_mod_p(xs, self.rep.p) < len(xs):
            return LinearSignature(True)
        return LinearSignature(False, span_intersection(xs, self.v_basis, self.rep.p, self.rep.height))


def linear_refinement(rep: LinearRep, U):
    return _LinearClassifier(rep, U)


def linear_signature(rep: LinearRep, U, X) -> LinearSignature:
    X = frozenset(X)
    if not X <= frozenset(U):
        raise DomainError("X must be a subset of U")
    return _LinearClassifier(rep, U)(X)
