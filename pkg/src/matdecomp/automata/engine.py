"""Bottom-up automata on rooted binary trees with labelled vertices."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Mapping

from ..core import DomainError, SetSystem, SizeGuardError

__all__ = ["SigmaTree", "TreeAutomaton", "run", "accepts", "encode", "accepted_family",
           "FAMILY_LIMIT"]

FAMILY_LIMIT = 16


@dataclass(frozen=True, eq=False)
class SigmaTree:
    """children maps each internal vertex to its (left, right) pair."""

    root: Hashable
    children: Mapping = field(default_factory=dict)
    labels: Mapping = field(default_factory=dict)

    def __post_init__(self):
        children = {v: tuple(c) for v, c in self.children.items()}
        parent = {}
        for v, pair in children.items():
            if len(pair) != 2:
                raise DomainError(f"vertex {v!r} must have exactly two children")
            for c in pair:
                if c in parent or c == self.root:
                    raise DomainError(f"vertex {c!r} has two parents")
                parent[c] = v
        order = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(children.get(v, ()))
        if len(order) != len(parent) + 1:
            raise DomainError("tree is not connected to its root")
        missing = [v for v in order if v not in self.labels]
        if missing:
            raise DomainError(f"unlabelled vertex {missing[0]!r}")
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "labels", dict(self.labels))
        object.__setattr__(self, "_order", tuple(order))

    @property
    def vertices(self) -> tuple:
        return self._order

    @property
    def leaves(self) -> tuple:
        return tuple(v for v in self._order if v not in self.children)

    def with_labels(self, labels) -> "SigmaTree":
        """Same shape, new labels; the shape is already validated."""
        if set(labels) != set(self._order):
            raise DomainError("labels must cover exactly the tree's vertices")
        t = object.__new__(SigmaTree)
        object.__setattr__(t, "root", self.root)
        object.__setattr__(t, "children", self.children)
        object.__setattr__(t, "labels", dict(labels))
        object.__setattr__(t, "_order", self._order)
        return t


@dataclass(frozen=True, eq=False)
class TreeAutomaton:
    alphabet: frozenset
    states: frozenset
    accepting: frozenset
    delta0: Mapping  # symbol -> frozenset of states
    delta2: Mapping  # (symbol, left state, right state) -> frozenset of states

    def __post_init__(self):
        object.__setattr__(self, "alphabet", frozenset(self.alphabet))
        object.__setattr__(self, "states", frozenset(self.states))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        if not self.accepting <= self.states:
            raise DomainError("accepting states must be states")
        d0 = {k: frozenset(v) for k, v in self.delta0.items()}
        d2 = {k: frozenset(v) for k, v in self.delta2.items()}
        for img in list(d0.values()) + list(d2.values()):
            if not img <= self.states:
                raise DomainError("transition image leaves the state set")
        for sym in d0:
            if sym not in self.alphabet:
                raise DomainError(f"symbol {sym!r} is not in the alphabet")
        for sym, ql, qr in d2:
            if sym not in self.alphabet or ql not in self.states or qr not in self.states:
                raise DomainError(f"bad transition key {(sym, ql, qr)!r}")
        object.__setattr__(self, "delta0", d0)
        object.__setattr__(self, "delta2", d2)


def run(A: TreeAutomaton, t: SigmaTree) -> dict:
    """State sets of every vertex, computed from the leaves up.

    A vertex gets the empty set when any transition it needs is undefined.
    """
    out = {}
    for v in reversed(t.vertices):
        sym = t.labels[v]
        if sym not in A.alphabet:
            raise DomainError(f"label {sym!r} is not in the alphabet")
        kids = t.children.get(v)
        if kids is None:
            out[v] = A.delta0.get(sym, frozenset())
            continue
        left, right = out[kids[0]], out[kids[1]]
        acc = set()
        for ql in left:
            for qr in right:
                img = A.delta2.get((sym, ql, qr))
                if img is None:
                    acc = None
                    break
                acc |= img
            if acc is None:
                break
        out[v] = frozenset(acc) if acc is not None else frozenset()
    return out


def accepts(A: TreeAutomaton, t: SigmaTree) -> bool:
    return bool(run(A, t)[t.root] & A.accepting)


def encode(t: SigmaTree, phi: Mapping, Y) -> SigmaTree:
    """Relabel each leaf v by (label, 1 if its element is in Y else 0)."""
    leaves = set(t.leaves)
    if set(phi.values()) != leaves or len(set(phi.values())) != len(phi):
        raise DomainError("element-to-leaf map is not a bijection onto the leaves")
    Y = set(Y)
    if not Y <= set(phi):
        raise DomainError("Y contains elements outside the ground set")
    labels = dict(t.labels)
    for e, leaf in phi.items():
        labels[leaf] = (t.labels[leaf], 1 if e in Y else 0)
    return t.with_labels(labels)


def accepted_family(A: TreeAutomaton, t: SigmaTree, phi: Mapping, limit: int = FAMILY_LIMIT) -> SetSystem:
    """Every Y whose encoding is accepted."""
    ground = tuple(sorted(phi))
    if len(ground) > limit:
        raise SizeGuardError(len(ground), limit)
    family = []
    for mask in range(1 << len(ground)):
        Y = frozenset(e for i, e in enumerate(ground) if mask >> i & 1)
        if accepts(A, encode(t, phi, Y)):
            family.append(Y)
    return SetSystem(ground, frozenset(family))
