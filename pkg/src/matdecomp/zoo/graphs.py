"""Multigraphs, bicircular matroids and gain-graphic frame matroids."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from ..core import DomainError, Matroid, bits
from .groups import Group

__all__ = [
    "Multigraph", "BicircularGraph", "GainGraph", "bicircular_oracle",
    "gain_oracle", "balance_and_gain", "switch", "gain_minor",
    "bicircular_minor", "components", "nu",
]


@dataclass(frozen=True)
class Multigraph:
    vertices: tuple
    edges: tuple  # (id, u, v), u == v for a loop

    def __post_init__(self):
        vertices = tuple(int(v) for v in self.vertices)
        if len(set(vertices)) != len(vertices):
            raise DomainError("repeated vertex")
        edges = tuple((int(e), int(u), int(v)) for e, u, v in self.edges)
        ids = [e for e, _, _ in edges]
        if len(set(ids)) != len(ids):
            raise DomainError("edge ids must be distinct")
        if any(i < 0 for i in ids):
            raise DomainError("edge ids must be non-negative")
        vs = set(vertices)
        for e, u, v in edges:
            if u not in vs or v not in vs:
                raise DomainError(f"edge {e} has an endpoint outside the vertex list")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)

    @property
    def edge_ids(self) -> tuple:
        return tuple(sorted(e for e, _, _ in self.edges))

    def ends(self) -> dict:
        return {e: (u, v) for e, u, v in self.edges}

    def loops(self) -> set:
        return {e for e, u, v in self.edges if u == v}

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = {v: set() for v in self.vertices}
        for _, u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


@dataclass(frozen=True)
class BicircularGraph:
    graph: Multigraph
    balanced_loops: frozenset = frozenset()

    def __post_init__(self):
        loops = self.graph.loops()
        bl = frozenset(int(e) for e in self.balanced_loops)
        if not bl <= loops:
            raise DomainError("balanced loop list contains a non-loop edge")
        object.__setattr__(self, "balanced_loops", bl)


@dataclass(frozen=True, eq=False)
class GainGraph:
    """labels[e] is the gain of e read from its first endpoint to its second."""

    graph: Multigraph
    group: Group
    labels: dict = field(default_factory=dict)

    def __post_init__(self):
        labels = {int(e): g for e, g in self.labels.items()}
        if set(labels) != set(self.graph.edge_ids):
            raise DomainError("every edge needs exactly one label")
        for e, g in labels.items():
            if not self.group.contains(g):
                raise DomainError(f"label of edge {e} is not a group element")
        object.__setattr__(self, "labels", labels)

    def __eq__(self, other):
        return (isinstance(other, GainGraph) and self.graph == other.graph
                and self.group == other.group and self.labels == other.labels)

    @cached_property
    def ends(self) -> dict:
        return self.graph.ends()

    def gain(self, e: int, u: int, v: int):
        """σ(e, u, v)."""
        a, b = self.ends[e]
        g = self.labels[e]
        if (a, b) == (u, v):
            return g
        if (a, b) == (v, u):
            return self.group.inv(g)
        raise DomainError(f"edge {e} does not join {u} and {v}")


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra
        return ra


def components(G: Multigraph, edges: Iterable[int]) -> list:
    """Edge sets of the components of G[edges], ordered by least vertex."""
    ends = G.ends()
    uf = _UnionFind()
    edges = list(edges)
    for e in edges:
        u, v = ends[e]
        uf.union(u, v)
    groups: dict = {}
    for e in edges:
        groups.setdefault(uf.find(ends[e][0]), []).append(e)
    return [sorted(groups[k]) for k in sorted(groups)]


def nu(G: Multigraph, edges: Iterable[int]) -> int:
    """|X| - |V(G[X])| for the subgraph with edge set X."""
    ends = G.ends()
    edges = set(edges)
    verts = set()
    for e in edges:
        verts.update(ends[e])
    return len(edges) - len(verts)


def _component_counts(ends_list):
    """Per component: [edges, vertices] over an edge list of (u, v)."""
    uf = _UnionFind()
    for u, v in ends_list:
        uf.union(u, v)
    counts: dict = {}
    verts = set()
    for u, v in ends_list:
        c = counts.setdefault(uf.find(u), [0, 0])
        c[0] += 1
        for w in (u, v):
            if w not in verts:
                verts.add(w)
                counts[uf.find(w)][1] += 1
    return counts


def bicircular_oracle(G: Multigraph, balanced_loops: Iterable[int] = ()) -> Matroid:
    B = BicircularGraph(G, frozenset(balanced_loops))
    ground = G.edge_ids
    ends = G.ends()
    ends_list = [ends[e] for e in ground]
    bad = 0
    for i, e in enumerate(ground):
        if e in B.balanced_loops:
            bad |= 1 << i

    def indep(mask: int) -> bool:
        if mask & bad:
            return False
        counts = _component_counts([ends_list[i] for i in bits(mask)])
        return all(ne <= nv for ne, nv in counts.values())

    return Matroid(ground, indep, name="bicircular")


def _potentials(G: GainGraph, edges, root):
    """Tree potentials phi(v) = gain of the tree path root -> v, plus consistency."""
    grp = G.group
    ends = G.ends
    adj: dict = {}
    for e in edges:
        u, v = ends[e]
        adj.setdefault(u, []).append((e, u, v))
        if u != v:
            adj.setdefault(v, []).append((e, v, u))
    phi = {root: grp.identity}
    stack = [root]
    while stack:
        x = stack.pop()
        for e, a, b in adj.get(x, ()):
            if a != b and b not in phi:
                phi[b] = grp.mul(phi[a], G.gain(e, a, b))
                stack.append(b)
    balanced = True
    for e in edges:
        u, v = ends[e]
        if u not in phi or v not in phi:
            raise DomainError("edge set does not induce a connected subgraph")
        if u == v:
            if G.labels[e] != grp.identity:
                balanced = False
        elif grp.mul(phi[u], G.gain(e, u, v)) != phi[v]:
            balanced = False
    return balanced, phi


def balance_and_gain(G: GainGraph, D: Iterable[int]):
    """(balanced, anchored gains) for a connected edge set D.

    When balanced, gains[v] is the gain of any D-path from the least vertex
    of G[D] to v; otherwise gains is None.
    """
    D = sorted(set(D))
    if not D:
        raise DomainError("empty edge set")
    ends = G.graph.ends()
    verts = set()
    for e in D:
        verts.update(ends[e])
    if len(components(G.graph, D)) != 1:
        raise DomainError("edge set does not induce a connected subgraph")
    balanced, phi = _potentials(G, D, min(verts))
    return (True, dict(sorted(phi.items()))) if balanced else (False, None)


def gain_oracle(G: GainGraph) -> Matroid:
    ground = G.graph.edge_ids
    ends = G.ends

    def indep(mask: int) -> bool:
        X = [ground[i] for i in bits(mask)]
        counts = _component_counts([ends[e] for e in X])
        if all(ne < nv for ne, nv in counts.values()):
            return True
        if any(ne > nv for ne, nv in counts.values()):
            return False
        for comp in components(G.graph, X):
            verts = set()
            for e in comp:
                verts.update(ends[e])
            if len(comp) == len(verts):
                balanced, _ = _potentials(G, comp, min(verts))
                if balanced:
                    return False
        return True

    return Matroid(ground, indep, name="frame matroid of a gain graph")


def switch(G: GainGraph, u: int, alpha) -> GainGraph:
    """Relabel so that σ(e,u,v) becomes α·σ(e,u,v) at every non-loop e at u."""
    grp = G.group
    if u not in set(G.graph.vertices):
        raise DomainError(f"{u} is not a vertex")
    if not grp.contains(alpha):
        raise DomainError("switching element is not in the group")
    labels = dict(G.labels)
    for e, a, b in G.graph.edges:
        if a == b:
            continue
        if a == u:
            labels[e] = grp.mul(alpha, labels[e])
        elif b == u:
            labels[e] = grp.mul(labels[e], grp.inv(alpha))
    return GainGraph(G.graph, grp, labels)


def _edge(G: Multigraph, e: int):
    for row in G.edges:
        if row[0] == e:
            return row
    raise DomainError(f"{e} is not an edge")


def _loop_contraction(G: Multigraph, e: int, u: int, non_identity, identity):
    """Edges and labels after contracting an unbalanced loop e at u.

    Non-loops at u become loops at their other end carrying non_identity;
    other loops at u stay at u and become balanced. u is dropped when no
    such loop is left.
    """
    edges, labels, kept_loops = [], {}, False
    for f, a, b in G.edges:
        if f == e:
            continue
        if a == u and b == u:
            edges.append((f, u, u))
            labels[f] = identity
            kept_loops = True
        elif a == u or b == u:
            w = b if a == u else a
            edges.append((f, w, w))
            labels[f] = non_identity
        else:
            edges.append((f, a, b))
            labels[f] = None
    vertices = [v for v in G.vertices if v != u or kept_loops]
    return Multigraph(tuple(vertices), tuple(edges)), labels


def gain_minor(G: GainGraph, e: int, kind: str) -> GainGraph:
    grp = G.group
    _, a, b = _edge(G.graph, e)
    if kind == "delete":
        edges = tuple(row for row in G.graph.edges if row[0] != e)
        labels = {f: g for f, g in G.labels.items() if f != e}
        return GainGraph(Multigraph(G.graph.vertices, edges), grp, labels)
    if kind != "contract":
        raise DomainError(f"unknown minor kind {kind!r}")
    if a == b:
        if G.labels[e] == grp.identity:
            return gain_minor(G, e, "delete")
        if grp.finite and grp.order == 1:
            raise DomainError("trivial group has no unbalanced loop")
        graph, labels = _loop_contraction(G.graph, e, a, grp.first_non_identity(), grp.identity)
        labels = {f: (G.labels[f] if g is None else g) for f, g in labels.items()}
        return GainGraph(graph, grp, labels)
    keep, gone = min(a, b), max(a, b)
    # after this switch σ(e, keep, gone) is the identity
    H = switch(G, gone, G.gain(e, keep, gone))
    edges, labels = [], {}
    for f, x, y in H.graph.edges:
        if f == e:
            continue
        edges.append((f, keep if x == gone else x, keep if y == gone else y))
        labels[f] = H.labels[f]
    vertices = tuple(v for v in G.graph.vertices if v != gone)
    return GainGraph(Multigraph(vertices, tuple(edges)), grp, labels)


def bicircular_minor(B: BicircularGraph, e: int, kind: str) -> BicircularGraph:
    G = B.graph
    _, a, b = _edge(G, e)
    if kind == "delete":
        edges = tuple(row for row in G.edges if row[0] != e)
        return BicircularGraph(Multigraph(G.vertices, edges), B.balanced_loops - {e})
    if kind != "contract":
        raise DomainError(f"unknown minor kind {kind!r}")
    if a == b:
        if e in B.balanced_loops:
            return bicircular_minor(B, e, "delete")
        graph, labels = _loop_contraction(G, e, a, "unbalanced", "balanced")
        balanced = {f for f, g in labels.items() if g == "balanced"}
        balanced |= {f for f in B.balanced_loops if f in labels and labels[f] is None}
        return BicircularGraph(graph, frozenset(balanced))
    keep, gone = min(a, b), max(a, b)
    edges = tuple((f, keep if x == gone else x, keep if y == gone else y)
                  for f, x, y in G.edges if f != e)
    vertices = tuple(v for v in G.vertices if v != gone)
    return BicircularGraph(Multigraph(vertices, edges), B.balanced_loops)
