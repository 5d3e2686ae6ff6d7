"""Matching certificates for fundamental transversal matroids.

For a side P of the partition (U, V) and an independent X ⊆ P, a
certificate is a tuple (S1, Z, S3, S4) drawn from the four corners
B∩P∩S, A∩Q∩S, A∩P∩S, B∩Q∩S of a small vertex cover S of the edges
crossing the partition. X is classified by the set of tuples that some
certifying matching realises.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..core import DomainError
from ..matching import koenig_cover, saturates
from ..zoo.transversal import BipartitePresentation, fundamental_transversal_oracle

__all__ = [
    "FTCertificate", "FTSignatureSet", "ft_boundary_cover", "ft_certificate_test",
    "ft_signature", "ft_compatible", "ft_refinement",
]


@dataclass(frozen=True, order=True)
class FTCertificate:
    side: str
    s1: tuple = ()
    z: tuple = ()
    s3: tuple = ()
    s4: tuple = ()

    def __post_init__(self):
        if self.side not in ("U", "V"):
            raise DomainError("side must be 'U' or 'V'")
        for name in ("s1", "z", "s3", "s4"):
            object.__setattr__(self, name, tuple(sorted(set(getattr(self, name)))))


@dataclass(frozen=True)
class FTSignatureSet:
    dependent: bool
    tuples: tuple = ()


def ft_boundary_cover(G: BipartitePresentation, U) -> frozenset:
    """König cover of the edges joining B∩U to A∩V and B∩V to A∩U."""
    U = frozenset(U)
    adj: dict = {}
    for a, b in G.edges:
        if (a in U) != (b in U):
            adj.setdefault(a, []).append(b)
    for a in adj:
        adj[a].sort()
    return frozenset(koenig_cover(sorted(adj), adj))


class _Context:
    """Everything about (G, S, P) that does not depend on X."""

    def __init__(self, G: BipartitePresentation, S, U, side: str):
        U = frozenset(U)
        ground = frozenset(G.ground)
        if not U <= ground:
            raise DomainError("U is not a subset of the ground set")
        if side not in ("U", "V"):
            raise DomainError("side must be 'U' or 'V'")
        self.G = G
        self.side = side
        self.S = frozenset(S)
        P = U if side == "U" else ground - U
        A, B = frozenset(G.A), frozenset(G.B)
        self.P = P
        self.AP, self.AQ = A & P, A - P
        self.BP, self.BQ = B & P, B - P
        self.BPS = self.BP & self.S
        self.AQS = self.AQ & self.S
        self.APS = self.AP & self.S
        self.BQS = self.BQ & self.S
        self.adj = G.adjacency()

    def check(self, c: FTCertificate):
        if c.side != self.side:
            raise DomainError("certificate is for the other side")
        if not (set(c.s1) <= self.BPS and set(c.z) <= self.AQS
                and set(c.s3) <= self.APS and set(c.s4) <= self.BQS):
            raise DomainError("certificate components lie outside their corners")

    def accepts(self, X: frozenset, s1, z, s3, s4) -> bool:
        if not (X & self.BPS) <= s1 or not s3 <= X:
            return False
        S = self.S
        free_p = self.BP - S - X            # (B∩P) − (S ∪ X)
        s1_free = s1 - X
        free_q = self.BQ - S                # (B∩Q) − S
        reach_x = free_p | s1_free | s4
        adj = {}
        left = []
        for a in sorted(X & self.AP):
            if a in s3:
                adj[a] = [b for b in self.adj[a] if b in free_q]
            else:
                adj[a] = [b for b in self.adj[a] if b in reach_x]
            left.append(a)
        for a in sorted(z):
            adj[a] = [b for b in self.adj[a] if b in free_p]
            left.append(a)
        return saturates(left, s1_free | s4, left, adj)


def ft_certificate_test(G: BipartitePresentation, S, U, side: str, X, c: FTCertificate) -> bool:
    """Does some matching certifying X realise the tuple c?"""
    X = frozenset(X)
    ctx = _Context(G, S, U, side)
    if not X <= ctx.P:
        raise DomainError("X is not contained in the chosen side")
    M = fundamental_transversal_oracle(G)
    if not M.is_independent(X):
        raise DomainError("X is dependent")
    ctx.check(c)
    return ctx.accepts(X, frozenset(c.s1), frozenset(c.z), frozenset(c.s3), frozenset(c.s4))


def _subsets(items):
    items = sorted(items)
    for k in range(len(items) + 1):
        for combo in combinations(items, k):
            yield frozenset(combo)


def _signature(ctx: _Context, X: frozenset) -> FTSignatureSet:
    forced = X & ctx.BPS
    optional = ctx.BPS - forced
    out = []
    for extra in _subsets(optional):
        s1 = forced | extra
        for s3 in _subsets(X & ctx.APS):
            for z in _subsets(ctx.AQS):
                for s4 in _subsets(ctx.BQS):
                    if ctx.accepts(X, s1, z, s3, s4):
                        out.append(FTCertificate(ctx.side, s1, z, s3, s4))
    return FTSignatureSet(False, tuple(sorted(out)))


def ft_signature(G: BipartitePresentation, S, U, side: str, X) -> FTSignatureSet:
    """All accepted tuples for X, or the dependent marker."""
    X = frozenset(X)
    ctx = _Context(G, S, U, side)
    if not X <= ctx.P:
        raise DomainError("X is not contained in the chosen side")
    if not fundamental_transversal_oracle(G).is_independent(X):
        return FTSignatureSet(True)
    return _signature(ctx, X)


def ft_compatible(c: FTCertificate, d: FTCertificate) -> bool:
    if c.side == d.side:
        raise DomainError("compatibility compares tuples from opposite sides")
    return (not set(c.s1) & set(d.s4) and not set(c.s4) & set(d.s1)
            and c.z == d.s3 and d.z == c.s3)


class _FTClassifier:
    def __init__(self, G: BipartitePresentation, U, side: str = "U", S=None):
        self.G = G
        self.S = ft_boundary_cover(G, U) if S is None else frozenset(S)
        self.ctx = _Context(G, self.S, U, side)
        self.oracle = fundamental_transversal_oracle(G)

    def __call__(self, X) -> FTSignatureSet:
        X = frozenset(X)
        if not self.oracle.is_independent(X):
            return FTSignatureSet(True)
        return _signature(self.ctx, X)


def ft_refinement(G: BipartitePresentation, U, side: str = "U", S=None):
    """Classifier of subsets of the chosen side by certificate sets."""
    return _FTClassifier(G, U, side, S)
