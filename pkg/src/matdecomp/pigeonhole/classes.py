"""Class counting and per-representation dispatch of refinements and bounds."""
from __future__ import annotations

from ..core import DomainError, Matroid, connectivity
from ..decomp import sim_count
from ..zoo import (BicircularGraph, BipartitePresentation, GainGraph, LinearRep, UniformSpec)
from .bounds import PowerBound, frame_class_bound, ft_cover_bound, linear_bound, uniform_bound
from .frame import frame_refinement
from .linear import linear_refinement
from .transversal import ft_boundary_cover, ft_refinement
from .uniform import uniform_refinement

__all__ = ["class_count", "refinement_for", "bound_for", "kind_of"]


def class_count(M: Matroid, U, relation="sim") -> int:
    """Number of classes among subsets of U.

    relation is "sim" for the exact boundary equivalence, or a classifier
    mapping each subset to a hashable key.
    """
    U = frozenset(U)
    if relation == "sim":
        return sim_count(M, U)
    if not callable(relation):
        raise DomainError("relation must be 'sim' or a classifier")
    umask = M.mask(U)
    keys = set()
    sub = umask
    while True:
        keys.add(relation(M.elements(sub)))
        if sub == 0:
            break
        sub = (sub - 1) & umask
    return len(keys)


def kind_of(presentation) -> str:
    if isinstance(presentation, UniformSpec):
        return "uniform"
    if isinstance(presentation, LinearRep):
        return "linear"
    if isinstance(presentation, BipartitePresentation):
        return "ft"
    if isinstance(presentation, (GainGraph, BicircularGraph)):
        return "frame"
    raise DomainError(f"no refinement for {type(presentation).__name__}")


def refinement_for(presentation, M: Matroid, U):
    """The efficient classifier of subsets of U for this representation."""
    kind = kind_of(presentation)
    if kind == "uniform":
        return uniform_refinement(presentation.r, presentation.n, U, connectivity(M, U))
    if kind == "linear":
        return linear_refinement(presentation, U)
    if kind == "ft":
        return ft_refinement(presentation, U, "U")
    return frame_refinement(presentation, U)


def bound_for(presentation, M: Matroid, U):
    """Bound on the refinement's class count at λ = connectivity(M, U)."""
    lam = connectivity(M, U)
    kind = kind_of(presentation)
    if kind == "uniform":
        return uniform_bound(lam)
    if kind == "linear":
        return linear_bound(presentation.p, lam)
    if kind == "ft":
        return ft_cover_bound(len(ft_boundary_cover(presentation, U)))
    order = presentation.group.order if isinstance(presentation, GainGraph) and presentation.group.finite else 1
    return frame_class_bound(lam, order)


def within(bound, count: int) -> bool:
    if isinstance(bound, PowerBound):
        return bound.admits(count)
    return count <= bound
