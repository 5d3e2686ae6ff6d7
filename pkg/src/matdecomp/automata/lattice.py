"""Staircases of a lattice path region and the caterpillar parse tree whose
automaton accepts exactly the independent sets of M[P,Q].

Lattice points are (x, y) with x east steps and y north steps. The edge
leaving a point on diagonal x+y = k-1 has depth k; the staircase of depth
k is the set of such edges, and its vertices are listed from the top-left
(increasing x - y). A run records the end of the greedily built path by
its position in the current staircase.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..core import DomainError
from ..decomp import WIDTH_LIMIT, branch_width
from ..zoo.lattice import LatticePathPresentation, lattice_path_oracle
from .engine import SigmaTree, TreeAutomaton

__all__ = ["Staircase", "StepFunction", "LatticeParse", "staircases", "staircase_bound_check",
           "lattice_parse", "DEP", "BIT"]

DEP = "dep"
BIT = ("bit0", "bit1")
LEAF = "id"


@dataclass(frozen=True)
class Staircase:
    depth: int
    edges: tuple  # ((x, y), (x', y')) pairs
    vertices: tuple  # points ordered from the top-left

    def index(self, point) -> int:
        return self.vertices.index(point) + 1


def _diagonal(L: LatticePathPresentation, t: int) -> list:
    return [(t - y, y) for y in range(L.low[t], L.high[t] + 1)]


def staircases(L: LatticePathPresentation) -> list:
    out = []
    for k in range(1, L.size + 1):
        edges = []
        for x, y in _diagonal(L, k - 1):
            for nxt in ((x + 1, y), (x, y + 1)):
                if L.in_region(*nxt):
                    edges.append(((x, y), nxt))
        verts = {p for e in edges for p in e}
        out.append(Staircase(k, tuple(edges), tuple(sorted(verts, key=lambda p: (p[0] - p[1], p)))))
    return out


def staircase_bound_check(L: LatticePathPresentation, lam: int) -> bool:
    return all(len(s.vertices) <= 3 * lam - 1 for s in staircases(L))


def _step(L: LatticePathPresentation, point, bit: int):
    """North on bit 1; otherwise east when it stays in the region, else north."""
    x, y = point
    if not bit and L.in_region(x + 1, y):
        return (x + 1, y)
    if L.in_region(x, y + 1):
        return (x, y + 1)
    return None


@dataclass(frozen=True)
class StepFunction:
    name: str
    table: tuple  # (((left state, right state) or leaf bit), output) pairs

    def __call__(self, key):
        return dict(self.table)[key]


@dataclass(frozen=True, eq=False)
class LatticeParse:
    tree: SigmaTree
    phi: dict
    automaton: TreeAutomaton
    lam: int


def _min_lambda(L: LatticePathPresentation) -> int:
    biggest = max(len(s.vertices) for s in staircases(L))
    return max(1, -(-(biggest + 1) // 3))


def lattice_parse(L: LatticePathPresentation, lam: int | None = None) -> LatticeParse:
    """Caterpillar tree u_1..u_{n-1} over leaves v_1..v_n plus its automaton.

    u_1 has children (v_1, v_2) and u_k has children (u_{k-1}, v_{k+1}).
    Without lam, small instances use their branch-width and larger ones
    the least value compatible with their staircases.
    """
    n = L.size
    if n == 0:
        raise DomainError("the lattice path matroid has no elements")
    if lam is None:
        lam = branch_width(lattice_path_oracle(L)) if n <= WIDTH_LIMIT else _min_lambda(L)
    stairs = staircases(L)
    for s in stairs:
        if len(s.vertices) > 3 * lam - 1:
            raise DomainError(f"staircase {s.depth} has {len(s.vertices)} vertices, "
                              f"more than 3λ-1 = {3 * lam - 1}")
    positions = list(range(1, 3 * lam))
    states = set(positions) | {DEP} | set(BIT)
    alphabet = {LEAF}
    delta0 = {}
    delta2 = {}
    labels = {}
    children = {}
    phi = {i: ("v", i) for i in range(1, n + 1)}

    def pos(depth, point):
        return DEP if point is None else stairs[depth - 1].index(point)

    if n == 1:
        table = tuple(((b,), pos(1, _step(L, (0, 0), b))) for b in (0, 1))
        f = StepFunction("f0", table)
        alphabet |= {f, (f, 0), (f, 1)}
        for (b,), out in table:
            delta0[(f, b)] = {out}
        labels[("v", 1)] = f
        tree = SigmaTree(("v", 1), {}, labels)
        A = TreeAutomaton(alphabet, states, positions, delta0, delta2)
        return LatticeParse(tree, phi, A, lam)

    for b in (0, 1):
        alphabet.add((LEAF, b))
        delta0[(LEAF, b)] = {BIT[b]}
    for i in range(1, n + 1):
        labels[("v", i)] = LEAF

    # u_1 reads the bits of elements 1 and 2 from the origin
    rows = []
    for b1 in (0, 1):
        for b2 in (0, 1):
            p = _step(L, (0, 0), b1)
            p = None if p is None else _step(L, p, b2)
            rows.append(((BIT[b1], BIT[b2]), pos(2, p)))
    functions = [StepFunction("f1", tuple(rows))]
    for k in range(2, n):
        rows = [((DEP, BIT[b]), DEP) for b in (0, 1)]
        for j, point in enumerate(stairs[k - 1].vertices, start=1):
            for b in (0, 1):
                rows.append(((j, BIT[b]), pos(k + 1, _step(L, point, b))))
        functions.append(StepFunction(f"f{k}", tuple(rows)))
    for k, f in enumerate(functions, start=1):
        alphabet.add(f)
        for (ql, qr), out in f.table:
            delta2[(f, ql, qr)] = {out}
        labels[("u", k)] = f
        children[("u", k)] = (("v", 1) if k == 1 else ("u", k - 1), ("v", k + 1))
    tree = SigmaTree(("u", n - 1), children, labels)
    A = TreeAutomaton(alphabet, states, positions, delta0, delta2)
    return LatticeParse(tree, phi, A, lam)
