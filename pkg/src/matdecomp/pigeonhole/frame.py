"""Boundary signatures for bicircular and gain-graphic frame matroids."""
from __future__ import annotations

from dataclasses import dataclass

from ..zoo.graphs import (GainGraph, Multigraph, balance_and_gain, bicircular_oracle,
                          components, gain_oracle, nu)

__all__ = ["FrameSignature", "frame_boundary", "frame_signature", "frame_refinement", "nu",
           "nu_identity_holds"]


@dataclass(frozen=True)
class FrameSignature:
    """blocks: tuple of (vertices, balanced, gains) with gains a tuple of
    (vertex, element) pairs anchored at the least block vertex, or None."""

    dependent: bool
    blocks: tuple = ()


def frame_boundary(G, U) -> frozenset:
    """Vertices meeting an edge of U and an edge outside U."""
    graph = G if isinstance(G, Multigraph) else G.graph
    U = set(U)
    inside, outside = set(), set()
    for e, u, v in graph.edges:
        (inside if e in U else outside).update((u, v))
    return frozenset(inside & outside)


class _FrameClassifier:
    def __init__(self, G, U):
        self.G = G
        self.U = frozenset(U)
        self.N = frame_boundary(G, self.U)
        if isinstance(G, GainGraph):
            self.oracle = gain_oracle(G)
        else:
            self.oracle = bicircular_oracle(G.graph, G.balanced_loops)
        self.ends = G.graph.ends()

    def _block(self, comp):
        verts = set()
        for e in comp:
            verts.update(self.ends[e])
        block = tuple(sorted(verts & self.N))
        if not block:
            return None
        if isinstance(self.G, GainGraph):
            balanced, gains = balance_and_gain(self.G, comp)
            if not balanced:
                return (block, False, None)
            grp = self.G.group
            back = grp.inv(gains[block[0]])
            return (block, True, tuple((v, grp.mul(back, gains[v])) for v in block))
        # in an independent set of a bicircular matroid a component is balanced iff it is a tree
        return (block, len(comp) < len(verts), None)

    def __call__(self, X) -> FrameSignature:
        X = frozenset(X)
        if not self.oracle.is_independent(X):
            return FrameSignature(True)
        blocks = []
        for comp in components(self.G.graph, X):
            b = self._block(comp)
            if b is not None:
                blocks.append(b)
        blocks.sort(key=lambda b: b[0])
        return FrameSignature(False, tuple(blocks))


def frame_refinement(G, U):
    return _FrameClassifier(G, U)


def frame_signature(G, U, X) -> FrameSignature:
    return _FrameClassifier(G, U)(X)


def nu_identity_holds(G: Multigraph, L, R) -> bool:
    """ν(Γ) = ν(Γ[L]) + ν(Γ[R]) + γ for the subgraph Γ on L ∪ R."""
    ends = G.ends()
    L, R = set(L), set(R)
    vl = {w for e in L for w in ends[e]}
    vr = {w for e in R for w in ends[e]}
    gamma = len(vl & vr)
    return nu(G, L | R) == nu(G, L) + nu(G, R) + gamma
