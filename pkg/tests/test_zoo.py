import random

import pytest

from matdecomp.core import (DomainError, MinorSpec, closure, minor, same_matroid, set_system,
                            verify_axioms)
from matdecomp.zoo import (BicircularGraph, BipartitePresentation, GainGraph, GammoidPresentation,
                           IntegerGroup, LatticePathPresentation, LinearRep, Multigraph, SimpleGraph,
                           TableGroup, balance_and_gain, bicircular_minor, bicircular_oracle,
                           courcelle_gadget, cyclic, fundamental_transversal_oracle, gain_minor,
                           gain_oracle, greedy_heights, lattice_path_oracle, linear_oracle,
                           m_of_graph, object_construction, oracle_for, principal_extension,
                           raunch_sets, standard_presentation, strict_gammoid_oracle, switch,
                           symmetric3, transversal_oracle, trivial, uniform_oracle)
from matdecomp.zoo.gfp import nullspace, rank_mod_p, rref, span_intersection

from oracles import (bicircular_independent, ft_independent, gain_independent,
                     gammoid_independent, lattice_bases, lattice_independent, linear_independent,
                     subsets)


def table_of(M):
    return {X: M.is_independent(X) for X in subsets(M.ground)}


def random_graph(rng, m, nv, loops=True):
    edges = []
    for e in range(1, m + 1):
        u = rng.randint(1, nv)
        v = u if loops and rng.random() < 0.2 else rng.randint(1, nv)
        edges.append((e, u, v))
    return Multigraph(tuple(range(1, nv + 1)), tuple(edges))


# groups and finite fields

def test_groups():
    S3 = symmetric3()
    assert S3.order == 6
    a, b = 1, 2
    assert S3.mul(a, b) != S3.mul(b, a)
    for g in S3.elements:
        assert S3.mul(g, S3.inv(g)) == S3.identity
    Z = IntegerGroup()
    assert Z.mul(3, -5) == -2 and Z.inv(4) == -4 and not Z.finite
    assert trivial().order == 1
    with pytest.raises(DomainError):
        TableGroup(((0, 1), (0, 1)))


def test_gfp_helpers():
    assert rank_mod_p([(1, 0), (2, 0)], 3) == 1
    assert rref([(0, 1), (1, 1)], 2) == ((1, 0), (0, 1))
    ns = nullspace([(1, 0), (0, 1), (1, 1)], 2)
    assert len(ns) == 1 and tuple(ns[0]) == (1, 1, 1)
    # span(e1) ∩ span(e1+e2, e2) is span(e1) over GF(2)
    assert span_intersection([(1, 0)], [(1, 1), (0, 1)], 2, 2) == ((1, 0),)
    assert span_intersection([(1, 0, 0)], [(0, 1, 0)], 3, 3) == ()


# linear and uniform

def test_linear_examples():
    M = linear_oracle(LinearRep(2, ((1, 0, 0), (0, 1, 0), (0, 0, 1))))
    assert all(table_of(M).values())
    M = linear_oracle(LinearRep(3, ((1, 2), (0, 0))))
    assert not M.is_independent({1, 2})
    M = linear_oracle(LinearRep(2, ((1, 0, 1), (0, 1, 1))))
    assert same_matroid(M, uniform_oracle(2, 3))


def test_linear_against_brute_force():
    rng = random.Random(11)
    for _ in range(40):
        p = rng.choice((2, 3, 5))
        rows = tuple(tuple(rng.randrange(p) for _ in range(5)) for _ in range(rng.randint(1, 3)))
        M = linear_oracle(LinearRep(p, rows))
        for X in subsets(M.ground):
            assert M.is_independent(X) == linear_independent(p, rows, X)


def test_linear_rejects_non_prime():
    with pytest.raises(DomainError):
        LinearRep(4, ((1,),))


def test_uniform():
    M = uniform_oracle(2, 4)
    assert all(v == (len(X) <= 2) for X, v in table_of(M).items())


# fundamental transversal

def test_ft_examples():
    G = BipartitePresentation((1,), (2,), ((1, 2),))
    M = fundamental_transversal_oracle(G)
    assert M.is_independent({1}) and not M.is_independent({1, 2}) and M.is_independent(())


def test_ft_against_brute_and_standard_presentation():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(2, 7)
        k = rng.randint(1, n - 1)
        ids = list(range(1, n + 1))
        rng.shuffle(ids)
        A, B = sorted(ids[:k]), sorted(ids[k:])
        edges = tuple((a, b) for a in A for b in B if rng.random() < 0.5)
        G = BipartitePresentation(tuple(A), tuple(B), edges)
        M = fundamental_transversal_oracle(G)
        T = transversal_oracle(standard_presentation(G))
        assert same_matroid(M, T)
        for X in subsets(M.ground):
            assert M.is_independent(X) == ft_independent(A, B, edges, X)
        assert M.is_independent(B) and len(B) == max(len(X) for X in subsets(M.ground) if M.is_independent(X))


# lattice paths

def test_lattice_examples():
    sq = lattice_path_oracle(LatticePathPresentation("EENN", "NNEE"))
    assert same_matroid(sq, uniform_oracle(2, 4))
    one = lattice_path_oracle(LatticePathPresentation("NE", "NE"))
    assert one.is_independent({1}) and not one.is_independent({2}) and one.is_independent(())
    with pytest.raises(DomainError):
        LatticePathPresentation("NNEE", "EENN")


def all_pairs(n):
    from itertools import combinations
    for r in range(n + 1):
        paths = []
        for pos in combinations(range(n), r):
            s = ["E"] * n
            for i in pos:
                s[i] = "N"
            paths.append("".join(s))
        for P in paths:
            for Q in paths:
                try:
                    yield LatticePathPresentation(P, Q)
                except DomainError:
                    pass


def test_lattice_against_path_enumeration_exhaustive():
    for n in range(1, 7):
        for L in all_pairs(n):
            M = lattice_path_oracle(L)
            bases = lattice_bases(L.P, L.Q)
            for X in subsets(M.ground):
                assert M.is_independent(X) == lattice_independent(L.P, L.Q, X, bases)


def test_greedy_heights():
    L = LatticePathPresentation("EENENN", "NNENEE")
    rng = random.Random(2)
    for _ in range(200):
        Y = {i for i in range(1, 7) if rng.random() < 0.4}
        h = greedy_heights(L, Y)
        M = lattice_path_oracle(L)
        assert (h is not None) == M.is_independent(Y)
        if h is None:
            continue
        for i in range(7):
            # lowest height: the best of every earlier lower-boundary anchor
            expected = max(L.low[j] + len([y for y in Y if j < y <= i]) for j in range(i + 1))
            assert h[i] == expected


# graphs

def test_bicircular_examples():
    tri = Multigraph((1, 2, 3), ((1, 1, 2), (2, 2, 3), (3, 1, 3)))
    assert bicircular_oracle(tri).is_independent({1, 2, 3})
    par = Multigraph((1, 2), ((1, 1, 2), (2, 1, 2), (3, 1, 2)))
    assert not bicircular_oracle(par).is_independent({1, 2, 3})
    loop = Multigraph((1,), ((1, 1, 1),))
    assert not bicircular_oracle(loop, {1}).is_independent({1})
    assert bicircular_oracle(loop).is_independent({1})


def test_bicircular_against_orientation_brute_force():
    rng = random.Random(8)
    for _ in range(60):
        G = random_graph(rng, rng.randint(1, 8), rng.randint(1, 5))
        balanced = {e for e in G.loops() if rng.random() < 0.4}
        M = bicircular_oracle(G, balanced)
        for X in subsets(M.ground):
            assert M.is_independent(X) == bicircular_independent(G.edges, balanced, X)


def test_gain_examples():
    Z3 = cyclic(3)
    tri = Multigraph((1, 2, 3), ((1, 1, 2), (2, 2, 3), (3, 3, 1)))
    bal = gain_oracle(GainGraph(tri, Z3, {1: 0, 2: 0, 3: 0}))
    assert not bal.is_independent({1, 2, 3}) and bal.is_independent({1, 2})
    unb = gain_oracle(GainGraph(tri, Z3, {1: 1, 2: 0, 3: 0}))
    assert unb.is_independent({1, 2, 3}) and unb.is_independent(())


def test_gain_against_cycle_walk_brute_force():
    rng = random.Random(9)
    for group in (cyclic(2), cyclic(3), symmetric3()):
        for _ in range(30):
            G = random_graph(rng, rng.randint(1, 8), rng.randint(1, 4))
            g = GainGraph(G, group, {e: rng.choice(list(group.elements)) for e in G.edge_ids})
            M = gain_oracle(g)
            for X in subsets(M.ground):
                assert M.is_independent(X) == gain_independent(g, X)


def test_balance_and_gain_examples():
    S3 = symmetric3()
    G = Multigraph((1, 2, 3), ((1, 1, 2), (2, 2, 3), (3, 3, 3)))
    g = GainGraph(G, S3, {1: 1, 2: 2, 3: 1})
    assert balance_and_gain(g, {1}) == (True, {1: 0, 2: 1})
    assert balance_and_gain(g, {3}) == (False, None)
    ok, gains = balance_and_gain(g, {1, 2})
    assert ok and gains[3] == S3.mul(1, 2)
    with pytest.raises(DomainError):
        balance_and_gain(g, {1, 3})


def test_switching():
    rng = random.Random(4)
    S3 = symmetric3()
    for _ in range(25):
        G = random_graph(rng, rng.randint(1, 7), rng.randint(1, 4))
        g = GainGraph(G, S3, {e: rng.randrange(6) for e in G.edge_ids})
        assert switch(g, 1, S3.identity) == g
        u, a = rng.randint(1, len(G.vertices)), rng.randrange(6)
        h = switch(g, u, a)
        assert switch(h, u, S3.inv(a)) == g
        assert same_matroid(gain_oracle(h), gain_oracle(g))


def test_bicircular_is_generic_gain_graph():
    rng = random.Random(6)
    Z = IntegerGroup()
    for _ in range(25):
        G = random_graph(rng, rng.randint(1, 7), rng.randint(1, 4))
        labels = {e: 10 ** e for e in G.edge_ids}  # no signed sum of distinct powers vanishes
        assert same_matroid(gain_oracle(GainGraph(G, Z, labels)), bicircular_oracle(G))


def test_gain_minor_examples():
    Z2 = cyclic(2)
    # identity-labelled bridge contracts to a graph contraction
    G = Multigraph((1, 2, 3), ((1, 1, 2), (2, 2, 3), (3, 2, 3)))
    g = GainGraph(G, Z2, {1: 0, 2: 0, 3: 1})
    h = gain_minor(g, 1, "contract")
    assert len(h.graph.vertices) == 2 and set(h.graph.edge_ids) == {2, 3}
    # unbalanced loop on a two-vertex graph: its neighbours become unbalanced loops
    G = Multigraph((1, 2), ((1, 1, 1), (2, 1, 2), (3, 1, 2)))
    g = GainGraph(G, Z2, {1: 1, 2: 0, 3: 0})
    h = gain_minor(g, 1, "contract")
    assert all(u == v for _, u, v in h.graph.edges)
    assert same_matroid(gain_oracle(h), minor(gain_oracle(g), MinorSpec(contract={1})))


def test_graph_minors_match_matroid_minors():
    rng = random.Random(12)
    groups = (cyclic(2), cyclic(3), symmetric3())
    for i in range(40):
        G = random_graph(rng, rng.randint(1, 7), rng.randint(1, 4))
        grp = groups[i % 3]
        g = GainGraph(G, grp, {e: rng.choice(list(grp.elements)) for e in G.edge_ids})
        b = BicircularGraph(G, frozenset(e for e in G.loops() if rng.random() < 0.5))
        for e in G.edge_ids:
            for how, spec in (("delete", MinorSpec(delete={e})), ("contract", MinorSpec(contract={e}))):
                assert same_matroid(gain_oracle(gain_minor(g, e, how)), minor(gain_oracle(g), spec))
                assert same_matroid(oracle_for(bicircular_minor(b, e, how)), minor(oracle_for(b), spec))


# gammoids and constructions

def test_gammoid_examples():
    free = strict_gammoid_oracle(GammoidPresentation((1, 2, 3), (), {1, 2, 3}))
    assert all(table_of(free).values())
    loops = strict_gammoid_oracle(GammoidPresentation((1, 2, 3), ((1, 2),), ()))
    assert not any(v for X, v in table_of(loops).items() if X)
    star = strict_gammoid_oracle(GammoidPresentation((1, 2, 3, 4), ((1, 4), (2, 4), (3, 4)), {4}))
    assert not star.is_independent({1, 2}) and star.is_independent({1})


def test_gammoid_against_path_search():
    rng = random.Random(13)
    for _ in range(40):
        n = rng.randint(1, 6)
        vs = tuple(range(1, n + 1))
        arcs = tuple((u, v) for u in vs for v in vs if u != v and rng.random() < 0.3)
        T = frozenset(v for v in vs if rng.random() < 0.4)
        M = strict_gammoid_oracle(GammoidPresentation(vs, arcs, T))
        for X in subsets(vs):
            assert M.is_independent(X) == gammoid_independent(vs, arcs, T, X)


def test_principal_extension_examples():
    U23 = uniform_oracle(2, 3)
    assert same_matroid(principal_extension(U23, {1, 2, 3}), uniform_oracle(2, 4))
    E = principal_extension(U23, ())
    assert not E.is_independent({4})
    with pytest.raises(DomainError):
        principal_extension(uniform_oracle(2, 4), {1, 2})


def test_principal_extension_of_gammoid_is_arc_addition():
    rng = random.Random(21)
    for _ in range(30):
        n = rng.randint(1, 6)
        vs = tuple(range(1, n + 1))
        arcs = tuple((u, v) for u in vs for v in vs if u != v and rng.random() < 0.3)
        T = frozenset(v for v in vs if rng.random() < 0.5)
        P = GammoidPresentation(vs, arcs, T)
        M = strict_gammoid_oracle(P)
        F = closure(M, {v for v in vs if rng.random() < 0.4})
        e = n + 1
        Q = GammoidPresentation(vs + (e,), arcs + tuple((e, f) for f in sorted(F)), T)
        ext = principal_extension(M, F)
        assert same_matroid(ext, strict_gammoid_oracle(Q))
        assert verify_axioms(set_system(ext))


def test_m_of_graph():
    M = m_of_graph(SimpleGraph.complete(3))
    assert not M.is_independent({1, 4, 2}) and M.is_independent({1, 2, 3})
    assert verify_axioms(set_system(m_of_graph(SimpleGraph.complete(4))))
    with pytest.raises(DomainError):
        m_of_graph(SimpleGraph(2, ((1, 2),)))


def test_courcelle_gadget_examples():
    graph, M, loops = courcelle_gadget(SimpleGraph(1, ()))
    a, b = loops[1]
    assert M.is_independent({a}) and not M.is_independent({a, b})
    graph, M, loops = courcelle_gadget(SimpleGraph(2, ((1, 2),)))
    C = {1, loops[1][0], loops[2][0]}
    assert not M.is_independent(C) and all(M.is_independent(C - {x}) for x in C)
    graph, M, loops = courcelle_gadget(SimpleGraph(0, ()))
    assert M.ground == ()


def test_raunch_sets():
    assert raunch_sets(2, 2) == (frozenset({1, 2}), frozenset({3, 6}))
    A, B = raunch_sets(1, 1)
    assert (A, B) == (frozenset({1}), frozenset({2}))
    for m in range(1, 7):
        for n in range(1, 7):
            A, B = raunch_sets(m, n)
            sums = [a + b for a in A for b in B]
            assert len(set(sums)) == m * n and not set(sums) & (A | B)


def test_object_construction_q2():
    G, M = object_construction(2)
    A, B = raunch_sets(2, 2)
    a1, a2 = sorted(A)
    b1, b2 = sorted(B)
    assert not M.is_independent({a1, b1, a1 + b1})
    assert M.is_independent({a1, b1, a2 + b2})
    assert len(M.ground) == 8
    assert verify_axioms(set_system(M))
