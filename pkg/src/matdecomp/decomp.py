"""Decomposition trees, displayed sets, the boundary equivalence and widths."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Iterator

import numpy as np

from .core import DomainError, Matroid, bits, connectivity_table, guard, independence_table, submasks

__all__ = [
    "Decomposition", "BoundaryClasses", "enumerate_decompositions", "displayed_sets",
    "sim_classes", "sim_labels", "sim_count", "dw_of", "bw_of", "decomposition_width",
    "branch_width", "check_refines", "refinement_witness", "random_decomposition",
    "SIM_LIMIT", "WIDTH_LIMIT",
]

SIM_LIMIT = 16
WIDTH_LIMIT = 10


@dataclass(frozen=True)
class Decomposition:
    """Unrooted tree with leaves and degree-3 internal nodes.

    Node i < len(elements) is the leaf of elements[i]; larger ids are
    internal. Edges are stored as sorted pairs.
    """

    elements: tuple
    edges: tuple

    def __post_init__(self):
        n = len(self.elements)
        edges = tuple(sorted(tuple(sorted(e)) for e in self.edges))
        object.__setattr__(self, "edges", edges)
        deg: dict = {}
        for a, b in edges:
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        nodes = set(deg) | set(range(n))
        if n >= 1 and len(edges) != len(nodes) - 1:
            raise DomainError("not a tree")
        for v in nodes:
            d = deg.get(v, 0)
            if v < n and n > 1 and d != 1:
                raise DomainError(f"leaf {v} has degree {d}")
            if v >= n and d != 3:
                raise DomainError(f"internal node {v} has degree {d}")
        if n >= 1 and len(_side(edges, 0, None)) != len(nodes):
            raise DomainError("not connected")

    def leaf(self, element) -> int:
        return self.elements.index(element)


def _side(edges, start, blocked):
    adj: dict = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj.get(x, ()):
            if y not in seen and not (blocked is not None and {x, y} == set(blocked)):
                seen.add(y)
                stack.append(y)
    return seen


def displayed_sets(D: Decomposition, e) -> tuple:
    """(U, V) where U holds the elements on the side of e's first endpoint."""
    e = tuple(e)
    if tuple(sorted(e)) not in D.edges:
        raise DomainError(f"{e} is not a tree edge")
    side = _side(D.edges, e[0], e)
    n = len(D.elements)
    U = frozenset(D.elements[i] for i in range(n) if i in side)
    return U, frozenset(D.elements) - U


def enumerate_decompositions(elements) -> Iterator[Decomposition]:
    """Every leaf-labelled tree with internal degree 3, each exactly once.

    Accepts a ground tuple or a count n (elements 0..n-1). There are
    (2n-5)!! trees for n >= 3.
    """
    if isinstance(elements, int):
        elements = tuple(range(elements))
    elements = tuple(elements)
    n = len(elements)
    guard(n, WIDTH_LIMIT)
    if n == 0:
        raise DomainError("a decomposition needs at least one element")
    if n == 1:
        yield Decomposition(elements, ())
        return
    if n == 2:
        yield Decomposition(elements, ((0, 1),))
        return

    def grow(edges, k, next_internal):
        if k == n:
            yield Decomposition(elements, tuple(edges))
            return
        for idx in range(len(edges)):
            a, b = edges[idx]
            w = next_internal
            rest = edges[:idx] + edges[idx + 1:]
            yield from grow(rest + [(a, w), (w, b), (k, w)], k + 1, next_internal + 1)

    yield from grow([(0, n), (1, n), (2, n)], 3, n + 1)


def random_decomposition(elements, rng) -> Decomposition:
    """Uniformly random tree, drawn by random leaf insertion."""
    elements = tuple(elements)
    n = len(elements)
    if n == 0:
        raise DomainError("a decomposition needs at least one element")
    if n == 1:
        return Decomposition(elements, ())
    if n == 2:
        return Decomposition(elements, ((0, 1),))
    edges = [(0, n), (1, n), (2, n)]
    nxt = n + 1
    for k in range(3, n):
        a, b = edges.pop(rng.randrange(len(edges)))
        edges += [(a, nxt), (nxt, b), (k, nxt)]
        nxt += 1
    return Decomposition(elements, tuple(edges))


def _edge_masks(M: Matroid, D: Decomposition) -> list:
    """Mask of the first-endpoint side of every tree edge."""
    if tuple(sorted(D.elements)) != M.ground:
        raise DomainError("decomposition leaves do not match the ground set")
    out = []
    for e in D.edges:
        U, _ = displayed_sets(D, e)
        out.append(M.mask(U))
    return out


@dataclass(frozen=True)
class BoundaryClasses:
    U: frozenset
    classes: tuple  # tuple of classes, each a tuple of frozensets

    def __len__(self):
        return len(self.classes)

    @property
    def representatives(self) -> tuple:
        return tuple(c[0] for c in self.classes)

    def __eq__(self, other):
        return isinstance(other, BoundaryClasses) and self.U == other.U and \
            self.representatives == other.representatives

    def __hash__(self):
        return hash((self.U, self.representatives))


def _masks_over(positions) -> np.ndarray:
    out = np.zeros(1 << len(positions), dtype=np.int64)
    for j, p in enumerate(positions):
        out[1 << j: 1 << (j + 1)] = out[: 1 << j] | (1 << p)
    return out


def sim_labels(M: Matroid, umask: int, limit: int = SIM_LIMIT):
    """Class label of every subset of U under the boundary equivalence.

    Returns (xmasks, labels, zmasks, matrix) where row i of the boolean
    matrix is the independence vector of xmasks[i] ∪ Z over zmasks.
    """
    n = len(M.ground)
    guard(n, limit)
    table = independence_table(M)
    upos = list(bits(umask))
    vpos = list(bits(M.full ^ umask))
    xm = _masks_over(upos)
    zm = _masks_over(vpos)
    mat = table[xm[:, None] | zm[None, :]]
    packed = np.packbits(mat, axis=1)
    rows = np.ascontiguousarray(packed).view(np.dtype((np.void, packed.shape[1])))[:, 0]
    _, labels = np.unique(rows, return_inverse=True)
    return xm, labels.reshape(-1), zm, mat


def sim_count(M: Matroid, U: Iterable[int], limit: int = SIM_LIMIT) -> int:
    _, labels, _, _ = sim_labels(M, M.mask(U), limit)
    return int(labels.max()) + 1


def _lex(X):
    return tuple(sorted(X))


def sim_classes(M: Matroid, U: Iterable[int], limit: int = SIM_LIMIT) -> BoundaryClasses:
    U = frozenset(U)
    xm, labels, _, _ = sim_labels(M, M.mask(U), limit)
    groups: dict = {}
    for x, lab in zip(xm.tolist(), labels.tolist()):
        groups.setdefault(lab, []).append(M.elements(x))
    classes = [tuple(sorted(g, key=_lex)) for g in groups.values()]
    classes.sort(key=lambda c: _lex(c[0]))
    return BoundaryClasses(U, tuple(classes))


def _sim_count_table(M: Matroid, limit: int) -> np.ndarray:
    n = len(M.ground)
    guard(n, limit)
    out = np.zeros(1 << n, dtype=np.int64)
    for u in range(1 << n):
        _, labels, _, _ = sim_labels(M, u)
        out[u] = labels.max() + 1
    return out


def dw_of(M: Matroid, D: Decomposition, limit: int = SIM_LIMIT) -> int:
    """Largest class count over both sides of every tree edge."""
    n = len(M.ground)
    if n <= 1:
        return _degenerate_dw(M)
    best = 0
    for u in _edge_masks(M, D):
        for side in (u, M.full ^ u):
            _, labels, _, _ = sim_labels(M, side, limit)
            best = max(best, int(labels.max()) + 1)
    return best


def _degenerate_dw(M: Matroid) -> int:
    if len(M.ground) == 0:
        return 1
    _, labels, _, _ = sim_labels(M, 1)
    return int(labels.max()) + 1


def bw_of(M: Matroid, D: Decomposition) -> int:
    n = len(M.ground)
    if n <= 1:
        return _degenerate_bw(M)
    lam = connectivity_table(M)
    return max(int(lam[u]) + 1 for u in _edge_masks(M, D))


def _degenerate_bw(M: Matroid) -> int:
    if len(M.ground) == 0:
        return 0
    return int(connectivity_table(M)[1]) + 1


def _tree_dp(n: int, cost: np.ndarray) -> int:
    """min over trees of the max edge cost, with cost[S] the cost of displaying S.

    cost must be symmetric under complement. Root the tree at the leaf of
    the top element: every other edge then hangs over a set S of the
    remaining elements and splits it into two smaller displayed sets.
    """
    full = (1 << (n - 1)) - 1
    best = np.zeros(full + 1, dtype=np.int64)
    for S in range(1, full + 1):
        c = int(cost[S])
        if S & (S - 1) == 0:
            best[S] = c
            continue
        low = S & -S
        rest = S ^ low
        split = None
        # A always holds the lowest element, so each split is seen once
        for sub in submasks(rest):
            A = low | sub
            if A == S:
                continue
            v = max(best[A], best[S ^ A])
            if split is None or v < split:
                split = v
        best[S] = max(c, split)
    return int(best[full])


def branch_width(M: Matroid, limit: int = WIDTH_LIMIT, method: str = "dp") -> int:
    n = len(M.ground)
    guard(n, limit)
    if n <= 1:
        return _degenerate_bw(M)
    if method == "enumerate":
        return min(bw_of(M, D) for D in enumerate_decompositions(M.ground))
    lam = connectivity_table(M)
    return _tree_dp(n, lam + 1)


def decomposition_width(M: Matroid, limit: int = WIDTH_LIMIT, method: str = "dp") -> int:
    n = len(M.ground)
    guard(n, limit)
    if n <= 1:
        return _degenerate_dw(M)
    if method == "enumerate":
        return min(dw_of(M, D) for D in enumerate_decompositions(M.ground))
    counts = _sim_count_table(M, limit)
    full = M.full
    cost = np.maximum(counts, counts[full ^ np.arange(full + 1)])
    return _tree_dp(n, cost)


def check_refines(M: Matroid, U: Iterable[int], coarse: Callable[[frozenset, frozenset], bool],
                  limit: int = SIM_LIMIT) -> bool:
    """True iff every pair related by `coarse` is boundary-equivalent."""
    xm, labels, _, _ = sim_labels(M, M.mask(U), limit)
    subsets = [M.elements(x) for x in xm.tolist()]
    labels = labels.tolist()
    for i in range(len(subsets)):
        for j in range(i + 1, len(subsets)):
            if labels[i] != labels[j] and coarse(subsets[i], subsets[j]):
                return False
    return True


def refinement_witness(M: Matroid, U: Iterable[int], key: Callable[[frozenset], Hashable],
                       limit: int = SIM_LIMIT):
    """None if equal keys imply equivalence, else a witness (X, X', Z).

    X and X' share a key but exactly one of X∪Z, X'∪Z is independent.
    """
    xm, labels, zm, mat = sim_labels(M, M.mask(U), limit)
    first: dict = {}
    for i, x in enumerate(xm.tolist()):
        k = key(M.elements(x))
        j = first.setdefault(k, i)
        if labels[j] != labels[i]:
            col = int(np.flatnonzero(mat[i] != mat[j])[0])
            return M.elements(int(xm[j])), M.elements(x), M.elements(int(zm[col]))
    return None
