"""Seeded random instances of every supported representation.

Size defaults match the suites: uniform n <= 9, linear up to 12 columns,
fundamental transversal |A ∪ B| <= 10, graphs up to 10 edges and lattice
paths up to 14 steps.
"""
from __future__ import annotations

from ..zoo import (BicircularGraph, BipartitePresentation, GainGraph, GammoidPresentation,
                   LatticePathPresentation, LinearRep, Multigraph, SimpleGraph, UniformSpec,
                   cyclic, symmetric3)
from .rng import Lcg

__all__ = ["random_uniform", "random_linear", "random_ft", "random_multigraph", "random_bicircular",
           "random_gain", "random_lattice", "random_gammoid", "random_simple_graph", "GENERATORS",
           "GROUPS", "generate"]

GROUPS = {"Z2": lambda: cyclic(2), "Z3": lambda: cyclic(3), "S3": symmetric3}


def random_uniform(rng: Lcg, max_elements: int = 9) -> UniformSpec:
    n = rng.randint(1, max_elements)
    return UniformSpec(rng.randint(0, n), n)


def random_linear(rng: Lcg, p: int = 2, max_elements: int = 12, max_rows: int = 5) -> LinearRep:
    width = rng.randint(1, max_elements)
    height = rng.randint(1, max_rows)
    rows = tuple(tuple(rng.randrange(p) for _ in range(width)) for _ in range(height))
    return LinearRep(p, rows)


def random_ft(rng: Lcg, max_elements: int = 10, max_edges: int | None = None) -> BipartitePresentation:
    n = rng.randint(2, max_elements)
    ids = list(range(1, n + 1))
    rng.shuffle(ids)
    k = rng.randint(1, n - 1)
    A, B = sorted(ids[:k]), sorted(ids[k:])
    pairs = [(a, b) for a in A for b in B]
    edges = [e for e in pairs if rng.chance(2, 5)]
    if max_edges is not None and len(edges) > max_edges:
        edges = sorted(rng.sample(edges, max_edges))
    return BipartitePresentation(tuple(A), tuple(B), tuple(edges))


def random_multigraph(rng: Lcg, max_edges: int = 10, max_vertices: int = 6,
                      loops: bool = True) -> Multigraph:
    nv = rng.randint(1, max_vertices)
    m = rng.randint(1, max_edges)
    vertices = tuple(range(1, nv + 1))
    edges = []
    for e in range(1, m + 1):
        u = rng.randint(1, nv)
        v = u if loops and rng.chance(1, 6) else rng.randint(1, nv)
        if not loops and nv > 1:
            while v == u:
                v = rng.randint(1, nv)
        edges.append((e, u, v))
    return Multigraph(vertices, tuple(edges))


def random_bicircular(rng: Lcg, max_edges: int = 10, max_vertices: int = 6) -> BicircularGraph:
    G = random_multigraph(rng, max_edges, max_vertices)
    balanced = [e for e in sorted(G.loops()) if rng.chance(1, 3)]
    return BicircularGraph(G, frozenset(balanced))


def random_gain(rng: Lcg, group: str = "Z2", max_edges: int = 10, max_vertices: int = 6) -> GainGraph:
    grp = GROUPS[group]()
    G = random_multigraph(rng, max_edges, max_vertices)
    labels = {e: rng.choice(grp.elements) for e in G.edge_ids}
    return GainGraph(G, grp, labels)


def _path(heights: list) -> str:
    out = []
    for a, b in zip(heights, heights[1:]):
        out.append("N" if b > a else "E")
    return "".join(out)


def _random_walk(rng: Lcg, m: int, r: int) -> list:
    steps = ["N"] * r + ["E"] * m
    rng.shuffle(steps)
    h = [0]
    for s in steps:
        h.append(h[-1] + (s == "N"))
    return h


def random_lattice(rng: Lcg, max_elements: int = 14, min_elements: int = 1) -> LatticePathPresentation:
    """Boundary paths from the pointwise min and max of two random walks."""
    n = rng.randint(min_elements, max_elements)
    r = rng.randint(0, n)
    a, b = _random_walk(rng, n - r, r), _random_walk(rng, n - r, r)
    low = [min(x, y) for x, y in zip(a, b)]
    high = [max(x, y) for x, y in zip(a, b)]
    return LatticePathPresentation(_path(low), _path(high))


def random_gammoid(rng: Lcg, max_elements: int = 9) -> GammoidPresentation:
    n = rng.randint(1, max_elements)
    vertices = tuple(range(1, n + 1))
    arcs = tuple((u, v) for u in vertices for v in vertices if u != v and rng.chance(1, 4))
    targets = frozenset(v for v in vertices if rng.chance(1, 3)) or frozenset({vertices[-1]})
    return GammoidPresentation(vertices, arcs, targets)


def random_simple_graph(rng: Lcg, max_vertices: int = 5) -> SimpleGraph:
    # m(G) is only defined from three vertices on
    n = rng.randint(3, max(3, max_vertices))
    edges = tuple((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.chance(1, 2))
    return SimpleGraph(n, edges)


GENERATORS = {
    "uniform": lambda rng, k: random_uniform(rng, k or 9),
    "linear2": lambda rng, k: random_linear(rng, 2, k or 12),
    "linear3": lambda rng, k: random_linear(rng, 3, k or 12),
    "ftransversal": lambda rng, k: random_ft(rng, k or 10),
    "bicircular": lambda rng, k: random_bicircular(rng, k or 10),
    "gainZ2": lambda rng, k: random_gain(rng, "Z2", k or 10),
    "gainZ3": lambda rng, k: random_gain(rng, "Z3", k or 10),
    "gainS3": lambda rng, k: random_gain(rng, "S3", k or 10),
    "latticepath": lambda rng, k: random_lattice(rng, k or 14),
    "gammoid": lambda rng, k: random_gammoid(rng, k or 9),
    "sparsepaving": lambda rng, k: random_simple_graph(rng, k or 5),
}


def generate(name: str, seed: int, count: int = 1, max_elements: int | None = None) -> list:
    """count instances from generator `name`, each from its own forked stream."""
    if name not in GENERATORS:
        raise KeyError(f"unknown generator {name!r}")
    rng = Lcg(seed)
    return [GENERATORS[name](rng.fork(i), max_elements) for i in range(count)]
