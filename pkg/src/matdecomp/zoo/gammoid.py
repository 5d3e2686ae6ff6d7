"""Strict gammoids: linkability into a target set by vertex-disjoint paths."""
from __future__ import annotations

from dataclasses import dataclass

from ..core import DomainError, Matroid, bits
from ..matching import vertex_disjoint_paths

__all__ = ["GammoidPresentation", "strict_gammoid_oracle"]


@dataclass(frozen=True)
class GammoidPresentation:
    vertices: tuple
    arcs: tuple  # (u, v) pairs
    targets: frozenset

    def __post_init__(self):
        vertices = tuple(int(v) for v in self.vertices)
        if len(set(vertices)) != len(vertices):
            raise DomainError("repeated vertex")
        vs = set(vertices)
        arcs = tuple((int(u), int(v)) for u, v in self.arcs)
        for u, v in arcs:
            if u not in vs or v not in vs:
                raise DomainError(f"arc ({u}, {v}) leaves the vertex set")
        targets = frozenset(int(t) for t in self.targets)
        if not targets <= vs:
            raise DomainError("targets must be vertices")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "targets", targets)

    def out_arcs(self) -> dict:
        out = {v: [] for v in self.vertices}
        for u, v in self.arcs:
            if v not in out[u]:
                out[u].append(v)
        return out


def strict_gammoid_oracle(P: GammoidPresentation) -> Matroid:
    ground = tuple(sorted(P.vertices))
    arcs = P.out_arcs()

    def indep(mask: int) -> bool:
        X = [ground[i] for i in bits(mask)]
        if len(X) > len(P.targets):
            return False
        return vertex_disjoint_paths(arcs, X, P.targets) == len(X)

    return Matroid(ground, indep, name="strict gammoid")
