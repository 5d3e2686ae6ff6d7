"""Size buckets for uniform matroids."""
from __future__ import annotations

from ..core import DomainError

__all__ = ["DEPENDENT", "uniform_refinement"]

DEPENDENT = ("dependent",)


def uniform_refinement(r: int, n: int, U, lam: int):
    """Classifier of subsets of U ⊆ {1..n} in U(r, n).

    Sets larger than r(U) are dependent; sizes in (r(U) − λ, r(U)] each get
    their own bucket; all smaller sizes share one.
    """
    U = frozenset(U)
    if not U <= set(range(1, n + 1)):
        raise DomainError("U must be a subset of 1..n")
    ru = min(r, len(U))
    actual = ru + min(r, n - len(U)) - min(r, n)
    if lam < actual:
        raise DomainError(f"λ = {lam} is below the connectivity value {actual}")

    def classify(X):
        k = len(X)
        if k > ru:
            return DEPENDENT
        if k > ru - lam:
            return ("size", k)
        return ("small",)

    return classify
