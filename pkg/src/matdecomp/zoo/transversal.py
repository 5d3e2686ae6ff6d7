"""Fundamental transversal matroids presented by a bipartite graph with B a basis."""
from __future__ import annotations

from dataclasses import dataclass

from ..core import DomainError, Matroid, bits
from ..matching import max_matching

__all__ = [
    "BipartitePresentation", "fundamental_transversal_oracle",
    "standard_presentation", "transversal_oracle",
]


@dataclass(frozen=True)
class BipartitePresentation:
    A: tuple
    B: tuple
    edges: tuple  # (a, b) pairs, in file order

    def __post_init__(self):
        A = tuple(int(a) for a in self.A)
        B = tuple(int(b) for b in self.B)
        if len(set(A)) != len(A) or len(set(B)) != len(B):
            raise DomainError("repeated vertex in a side")
        if set(A) & set(B):
            raise DomainError("A and B must be disjoint")
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        sa, sb = set(A), set(B)
        for a, b in edges:
            if a not in sa or b not in sb:
                raise DomainError(f"edge ({a}, {b}) does not join A to B")
        if len(set(edges)) != len(edges):
            raise DomainError("repeated edge")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "edges", edges)

    @property
    def ground(self) -> tuple:
        return tuple(sorted(self.A + self.B))

    def adjacency(self) -> dict:
        adj = {a: [] for a in self.A}
        for a, b in self.edges:
            adj[a].append(b)
        for a in adj:
            adj[a].sort()
        return adj


def fundamental_transversal_oracle(G: BipartitePresentation) -> Matroid:
    """X is independent iff X∩A can be matched into B−X."""
    ground = G.ground
    in_a = [e in set(G.A) for e in ground]
    adj = G.adjacency()

    def indep(mask: int) -> bool:
        X = {ground[i] for i in bits(mask)}
        left = [ground[i] for i in bits(mask) if in_a[i]]
        if not left:
            return True
        sub = {a: [b for b in adj[a] if b not in X] for a in left}
        return len(max_matching(left, sub)) == len(left)

    return Matroid(ground, indep, name="fundamental transversal")


def standard_presentation(G: BipartitePresentation) -> dict:
    """Element -> list of positions for the ordinary transversal presentation.

    Every b in B gets a private position; each a in A may use the private
    positions of its neighbours.
    """
    adj = G.adjacency()
    out = {a: list(adj[a]) for a in G.A}
    for b in G.B:
        out[b] = [b]
    return out


def transversal_oracle(positions: dict) -> Matroid:
    """X is independent iff its elements can be matched to distinct positions."""
    ground = tuple(sorted(positions))

    def indep(mask: int) -> bool:
        left = [ground[i] for i in bits(mask)]
        return len(max_matching(left, positions)) == len(left)

    return Matroid(ground, indep, name="transversal")
