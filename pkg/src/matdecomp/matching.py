"""Small-graph matching and path routing used by the transversal and gammoid code."""
from __future__ import annotations

from collections import deque
from typing import Hashable, Iterable, Mapping

__all__ = ["max_matching", "koenig_cover", "saturates", "vertex_disjoint_paths"]


def max_matching(left: Iterable[Hashable], adj: Mapping[Hashable, Iterable[Hashable]]) -> dict:
    """Maximum bipartite matching by repeated augmenting paths.

    Returns a dict from matched left vertices to right vertices. Left
    vertices are tried in the given order, neighbours in iteration order.
    """
    match_right: dict = {}
    match_left: dict = {}

    def augment(u, seen):
        for v in adj.get(u, ()):
            if v in seen:
                continue
            seen.add(v)
            w = match_right.get(v)
            if w is None or augment(w, seen):
                match_right[v] = u
                match_left[u] = v
                return True
        return False

    for u in left:
        augment(u, set())
    return match_left


def koenig_cover(left: Iterable[Hashable], adj: Mapping[Hashable, Iterable[Hashable]]) -> set:
    """Minimum vertex cover of a bipartite graph from a maximum matching."""
    left = list(left)
    matching = max_matching(left, adj)
    match_right = {v: u for u, v in matching.items()}
    # alternating search from the unmatched left vertices
    reach_left = {u for u in left if u not in matching}
    reach_right = set()
    queue = deque(reach_left)
    while queue:
        u = queue.popleft()
        for v in adj.get(u, ()):
            if v in reach_right:
                continue
            reach_right.add(v)
            w = match_right.get(v)
            if w is not None and w not in reach_left:
                reach_left.add(w)
                queue.append(w)
    return {u for u in left if u not in reach_left} | reach_right


def saturates(left_need: Iterable[Hashable], right_need: Iterable[Hashable],
              left: Iterable[Hashable], adj: Mapping[Hashable, Iterable[Hashable]]) -> bool:
    """Is there one matching covering both left_need and right_need?

    In a bipartite graph this holds exactly when some matching covers
    left_need and some (possibly different) matching covers right_need
    (Mendelsohn-Dulmage), so two plain matching computations suffice.
    """
    left_need = list(left_need)
    right_need = set(right_need)
    if len(max_matching(left_need, adj)) < len(left_need):
        return False
    if not right_need:
        return True
    radj: dict = {}
    for u in left:
        for v in adj.get(u, ()):
            radj.setdefault(v, []).append(u)
    return len(max_matching(sorted(right_need), radj)) == len(right_need)


def vertex_disjoint_paths(arcs: Mapping[Hashable, Iterable[Hashable]], sources: Iterable[Hashable],
                          targets: Iterable[Hashable]) -> int:
    """Maximum number of vertex-disjoint directed paths from sources to targets.

    Every vertex carries capacity one, so a source that is itself a
    target counts as a trivial path.
    """
    sources = list(sources)
    targets = set(targets)
    # residual graph on split vertices: (v, 0) = in-copy, (v, 1) = out-copy
    cap: dict = {}

    def add(a, b):
        cap.setdefault(a, {})
        cap.setdefault(b, {})
        cap[a][b] = cap[a].get(b, 0) + 1
        cap[b].setdefault(a, 0)

    vertices = set(arcs)
    for u, outs in arcs.items():
        for v in outs:
            vertices.add(v)
    vertices |= set(sources) | targets
    for v in vertices:
        add((v, 0), (v, 1))
    for u, outs in arcs.items():
        for v in outs:
            add((u, 1), (v, 0))
    src, snk = ("source",), ("sink",)
    for s in sources:
        add(src, (s, 0))
    for t in targets:
        add((t, 1), snk)
    if src not in cap or snk not in cap:
        return 0
    flow = 0
    while True:
        parent = {src: None}
        queue = deque([src])
        while queue and snk not in parent:
            a = queue.popleft()
            for b, c in cap[a].items():
                if c > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if snk not in parent:
            return flow
        b = snk
        while parent[b] is not None:
            a = parent[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow += 1
