import random

import numpy as np
import pytest

from matdecomp.core import (DomainError, Matroid, MinorSpec, SetSystem, SizeGuardError, bits,
                            circuits, closure, connectivity, dual, independence_table,
                            is_n_connected, minor, rank, rank_table, same_matroid, set_system,
                            submasks, verify_axioms)
from matdecomp.zoo import (BipartitePresentation, SimpleGraph, fundamental_transversal_oracle,
                           m_of_graph, uniform_oracle)

from oracles import connectivity_by_enumeration, rank_by_enumeration, subsets


def K(n):
    return m_of_graph(SimpleGraph.complete(n))


def direct_sum(M, N, shift):
    ground = M.ground + tuple(e + shift for e in N.ground)
    n = len(M.ground)

    def indep(mask):
        return M.indep(mask & ((1 << n) - 1)) and N.indep(mask >> n)

    return Matroid(ground, indep)


def test_bit_helpers():
    assert list(bits(0b10110)) == [1, 2, 4]
    assert sorted(submasks(0b101)) == [0, 1, 4, 5]


def test_ground_and_masks():
    M = uniform_oracle(2, 4)
    assert M.ground == (1, 2, 3, 4)
    assert M.mask({1, 3}) == 0b101
    assert M.elements(0b1010) == frozenset({2, 4})
    with pytest.raises(DomainError):
        M.mask({7})


def test_rank_examples():
    U24 = uniform_oracle(2, 4)
    assert rank(U24, {1, 2, 3}) == 2
    assert rank(U24, ()) == 0
    # m(K3): vertices 1..3, edge 12 is element 4
    assert rank(K(3), {1, 4, 2}) == 2


def test_closure_examples():
    assert closure(uniform_oracle(2, 4), {1, 2}) == frozenset({1, 2, 3, 4})
    assert closure(uniform_oracle(0, 3), ()) == frozenset({1, 2, 3})
    assert closure(uniform_oracle(2, 3), ()) == frozenset()
    assert closure(K(3), {1, 2}) == frozenset({1, 2, 4})


def test_closure_matches_rank_definition():
    M = K(4)
    for X in [{1}, {1, 2}, {5, 6}, {1, 2, 3}]:
        r = rank(M, X)
        expected = {e for e in M.ground if rank(M, set(X) | {e}) == r}
        assert closure(M, X) == frozenset(expected)


def test_connectivity_examples():
    assert connectivity(uniform_oracle(2, 4), {1, 2}) == 2
    assert connectivity(K(3), ()) == 0
    for n in range(1, 5):
        M = uniform_oracle(n, n)
        for U in subsets(M.ground):
            assert connectivity(M, U) == 0


def test_is_n_connected_examples():
    assert is_n_connected(uniform_oracle(2, 4), 3)
    assert not is_n_connected(direct_sum(uniform_oracle(1, 2), uniform_oracle(1, 2), 2), 2)
    assert is_n_connected(uniform_oracle(1, 1), 2)


def test_minor_examples():
    U24 = uniform_oracle(2, 4)
    assert same_matroid(minor(U24, MinorSpec()), U24)
    N = minor(U24, MinorSpec(contract={1}))
    assert N.ground == (2, 3, 4)
    assert all(N.is_independent(X) == (len(X) <= 1) for X in subsets(N.ground))
    M = K(3)
    D = minor(M, MinorSpec(delete={4}))
    for X in subsets(D.ground):
        assert D.is_independent(X) == M.is_independent(X)
    with pytest.raises(DomainError):
        MinorSpec(contract={1}, delete={1})


def test_contraction_matches_rank_definition():
    M = K(4)
    for C in [{1}, {7}, {1, 2}, {1, 5}]:
        N = minor(M, MinorSpec(contract=C))
        rc = rank(M, C)
        for X in subsets(N.ground):
            assert N.is_independent(X) == (rank(M, set(X) | set(C)) == len(X) + rc)


def test_dual_examples():
    D = dual(uniform_oracle(1, 3))
    assert same_matroid(D, uniform_oracle(2, 3))
    M = K(4)
    assert same_matroid(dual(dual(M)), M)
    G = BipartitePresentation((1, 2), (3, 4, 5), ((1, 3), (1, 4), (2, 4), (2, 5)))
    assert verify_axioms(set_system(dual(fundamental_transversal_oracle(G))))


def test_verify_axioms_examples():
    assert verify_axioms(set_system(uniform_oracle(2, 4)))
    assert not verify_axioms(SetSystem((1, 2), frozenset({frozenset({1})})))
    assert verify_axioms(set_system(K(4)))


def test_verify_axioms_rejects_non_matroids():
    # {1,2} and {3} maximal: exchange fails
    fam = frozenset(map(frozenset, [(), (1,), (2,), (3,), (1, 2)]))
    assert not verify_axioms(SetSystem((1, 2, 3), fam))
    # not downward closed
    fam = frozenset(map(frozenset, [(), (1,), (1, 2)]))
    assert not verify_axioms(SetSystem((1, 2), fam))


def test_verify_axioms_agrees_with_brute_exchange():
    rng = random.Random(5)
    ground = (1, 2, 3, 4)
    for _ in range(300):
        fam = {frozenset()}
        for X in subsets(ground):
            if X and rng.random() < 0.5 and all(X - {x} in fam for x in X):
                fam.add(X)
        brute = all(any(I | {x} in fam for x in J - I)
                    for I in fam for J in fam if len(I) < len(J))
        assert verify_axioms(SetSystem(ground, frozenset(fam))) == brute


def test_size_guard():
    M = uniform_oracle(1, 21)
    with pytest.raises(SizeGuardError) as exc:
        independence_table(M)
    assert exc.value.size == 21
    with pytest.raises(SizeGuardError):
        is_n_connected(uniform_oracle(1, 12), 2, limit=10)


def test_rank_table_against_enumeration():
    M = K(4)
    rk = rank_table(M)
    indep = M.is_independent
    for mask in range(0, 1 << len(M.ground), 37):
        assert rk[mask] == rank_by_enumeration(indep, M.elements(mask))


def test_connectivity_against_enumeration():
    G = BipartitePresentation((1, 2, 3), (4, 5, 6), ((1, 4), (1, 5), (2, 5), (3, 6), (3, 4)))
    M = fundamental_transversal_oracle(G)
    for U in subsets(M.ground):
        assert connectivity(M, U) == connectivity_by_enumeration(M.is_independent, M.ground, U)


def test_circuits_of_mk3():
    cs = circuits(K(3))
    small = {C for C in cs if len(C) == 3}
    assert small == {frozenset({1, 2, 4}), frozenset({1, 3, 5}), frozenset({2, 3, 6})}
    assert all(len(C) == 4 for C in set(cs) - small)


def test_table_is_exact_for_pruned_and_unpruned():
    M = K(4)
    assert np.array_equal(independence_table(M), independence_table(M, assume_matroid=False))
