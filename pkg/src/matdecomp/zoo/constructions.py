"""Generators for the special families: principal extensions, m(G), the
two-loops-per-vertex gadget, sum-free integer sets and the three-vertex
integer gain graph built from them."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..core import DomainError, Matroid, bits, closure
from .graphs import GainGraph, Multigraph, bicircular_oracle, gain_oracle
from .groups import IntegerGroup

__all__ = [
    "SimpleGraph", "principal_extension", "m_of_graph", "courcelle_gadget",
    "raunch_sets", "object_construction",
]


@dataclass(frozen=True)
class SimpleGraph:
    """Vertices 1..n and a list of distinct non-loop edges."""

    n: int
    edges: tuple

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        seen = set()
        for u, v in edges:
            if u == v:
                raise DomainError("simple graphs have no loops")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise DomainError(f"edge ({u}, {v}) leaves 1..{self.n}")
            key = frozenset((u, v))
            if key in seen:
                raise DomainError("simple graphs have no parallel edges")
            seen.add(key)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(n, tuple(combinations(range(1, n + 1), 2)))


def principal_extension(M: Matroid, F, element: int | None = None) -> Matroid:
    """Add a new element freely on the flat F.

    The new element gets id max(ground)+1 unless one is supplied.
    """
    F = frozenset(F)
    if closure(M, F) != F:
        raise DomainError("F is not a flat")
    if element is None:
        element = (max(M.ground) + 1) if M.ground else 0
    if element in M.ground:
        raise DomainError(f"{element} is already in the ground set")
    ground = sorted(M.ground + (element,))
    pos = ground.index(element)
    low = (1 << pos) - 1
    fmask = M.mask(F)

    def old(mask: int) -> int:
        return (mask & low) | ((mask >> (pos + 1)) << pos)

    def spans_f(xmask: int) -> bool:
        # F ⊆ cl(X) iff adding any f in F to a basis of X keeps it dependent
        basis = 0
        for i in bits(xmask):
            if M.indep(basis | (1 << i)):
                basis |= 1 << i
        return all(basis >> i & 1 or not M.indep(basis | (1 << i)) for i in bits(fmask))

    def indep(mask: int) -> bool:
        x = old(mask)
        if not M.indep(x):
            return False
        if mask >> pos & 1:
            return not spans_f(x)
        return True

    return Matroid(ground, indep, name="principal extension")


def m_of_graph(G: SimpleGraph) -> Matroid:
    """Rank-3 sparse paving matroid on vertices 1..n and edges n+1..n+|E|.

    The only non-spanning circuits are {v_i, e_k, v_j} with e_k = v_i v_j.
    """
    if G.n < 3:
        raise DomainError("m(G) needs at least three vertices")
    n = G.n
    ground = list(range(1, n + len(G.edges) + 1))
    triples = set()
    for k, (u, v) in enumerate(G.edges):
        e = n + k + 1
        triples.add((1 << (u - 1)) | (1 << (v - 1)) | (1 << (e - 1)))

    def indep(mask: int) -> bool:
        size = bin(mask).count("1")
        if size <= 2:
            return True
        if size == 3:
            return mask not in triples
        return False

    return Matroid(ground, indep, name="m(G)")


def courcelle_gadget(G: SimpleGraph):
    """G with two extra loops at every vertex, and its bicircular matroid.

    Edge k of G keeps id k (1-based); the loops at vertex v get ids
    |E|+2v-1 and |E|+2v. Returns (multigraph, oracle, loops by vertex).
    """
    m = len(G.edges)
    edges = [(k + 1, u, v) for k, (u, v) in enumerate(G.edges)]
    loops = {}
    for v in range(1, G.n + 1):
        pair = (m + 2 * v - 1, m + 2 * v)
        loops[v] = pair
        edges.extend((e, v, v) for e in pair)
    graph = Multigraph(tuple(range(1, G.n + 1)), tuple(edges))
    return graph, bicircular_oracle(graph), loops


def raunch_sets(m: int, n: int):
    """A = {1..m}, B = {k(m+1) : 1 <= k <= n}.

    Every sum a+b is distinct and avoids A ∪ B; both facts are checked.
    """
    if m < 1 or n < 1:
        raise DomainError("m and n must be positive")
    A = frozenset(range(1, m + 1))
    B = frozenset(k * (m + 1) for k in range(1, n + 1))
    sums = {a + b for a in A for b in B}
    if len(sums) != m * n or sums & (A | B) or A & B:
        raise DomainError("construction failed its own validation")
    return A, B


def object_construction(q: int):
    """Three-vertex integer gain graph with q edges labelled by A on v1v2,
    q edges labelled by B on v2v3, and the q^2 sums on v1v3.

    Each edge id equals its label, which is possible because A, B and A+B
    are pairwise disjoint. Returns (gain graph, oracle).
    """
    if q < 1:
        raise DomainError("q must be positive")
    A, B = raunch_sets(q, q)
    edges = [(a, 1, 2) for a in sorted(A)]
    edges += [(b, 2, 3) for b in sorted(B)]
    edges += [(a + b, 1, 3) for a in sorted(A) for b in sorted(B)]
    graph = Multigraph((1, 2, 3), tuple(edges))
    G = GainGraph(graph, IntegerGroup(), {e: e for e, _, _ in edges})
    return G, gain_oracle(G)
