import random

import pytest

from matdecomp.core import DomainError, connectivity, is_n_connected
from matdecomp.decomp import refinement_witness, sim_count
from matdecomp.pigeonhole import (DEPENDENT, FTCertificate, PowerBound, bound_for, class_count,
                                  dw_bound, frame_boundary, frame_boundary_bound, frame_class_bound,
                                  frame_refinement, frame_signature, ft_boundary_cover,
                                  ft_certificate_test, ft_compatible, ft_signature_bound, ft_refinement,
                                  ft_signature, kind_of, linear_bound, linear_refinement,
                                  linear_signature, nu_identity_holds, refinement_for,
                                  uniform_bound, uniform_refinement, within)
from matdecomp.zoo import (BicircularGraph, BipartitePresentation, GainGraph, LinearRep, Multigraph,
                           UniformSpec, cyclic, fundamental_transversal_oracle, gain_oracle,
                           linear_oracle, oracle_for, symmetric3, uniform_oracle)

from oracles import ft_certificates, subsets


def random_ft(rng, n_max=7):
    n = rng.randint(2, n_max)
    ids = list(range(1, n + 1))
    rng.shuffle(ids)
    k = rng.randint(1, n - 1)
    A, B = sorted(ids[:k]), sorted(ids[k:])
    edges = tuple((a, b) for a in A for b in B if rng.random() < 0.45)
    return BipartitePresentation(tuple(A), tuple(B), edges)


def random_graph(rng, m, nv):
    edges = []
    for e in range(1, m + 1):
        u = rng.randint(1, nv)
        v = u if rng.random() < 0.15 else rng.randint(1, nv)
        edges.append((e, u, v))
    return Multigraph(tuple(range(1, nv + 1)), tuple(edges))


# bounds

def test_power_bound():
    b = PowerBound(3)  # 9
    assert b.admits(9) and not b.admits(10) and b.admits(0)
    huge = PowerBound(2 ** 40)
    assert huge.admits(10 ** 100)
    assert str(PowerBound(4, 1)) == "2^4+1"


def test_bound_values():
    assert uniform_bound(3) == 5
    assert linear_bound(2, 1).admits(3) and not linear_bound(2, 1).admits(4)
    assert linear_bound(3, 2) == PowerBound(4)
    assert ft_signature_bound(2) == PowerBound(16)
    assert frame_boundary_bound(1) == 2 and frame_boundary_bound(0) == 2
    assert frame_boundary_bound(3) == 30
    # |N| <= 2: pick the met vertices, partition them, tag each block, plus the dependent class
    assert frame_class_bound(1, 1) == 1 + 2 * 2 + 2 * 4 + 1
    assert frame_class_bound(1, 2) == 1 + 2 * 2 * 2 + 2 * 4 * 4 + 1
    assert dw_bound("uniform", 4) == 5


# uniform

def test_uniform_refinement_examples():
    c = uniform_refinement(2, 4, {1, 2}, 2)
    assert c({1}) == c({2})
    assert c({1, 2}) != c(())
    with pytest.raises(DomainError):
        uniform_refinement(2, 4, {1, 2}, 1)


def test_uniform_refinement_exhaustive():
    for n in range(1, 8):
        for r in range(n + 1):
            M = uniform_oracle(r, n)
            for U in subsets(M.ground):
                lam = connectivity(M, U)
                c = uniform_refinement(r, n, U, lam)
                assert refinement_witness(M, U, c) is None
                assert class_count(M, U, c) <= lam + 2


def test_dependent_class_is_single():
    c = uniform_refinement(1, 4, {1, 2, 3}, 1)
    assert c({1, 2}) == c({1, 2, 3}) == DEPENDENT


# linear

def test_linear_signature_examples():
    rep = LinearRep(2, ((1, 0, 1), (0, 1, 1)))
    assert linear_signature(rep, {1}, ()).basis == ()
    assert linear_signature(rep, {1}, {1}).basis == ((1, 0),)
    assert linear_signature(LinearRep(3, ((1, 2),)), {1, 2}, {1, 2}).dependent


def test_linear_refinement_random():
    rng = random.Random(17)
    for _ in range(40):
        p = rng.choice((2, 3))
        w = rng.randint(1, 8)
        rep = LinearRep(p, tuple(tuple(rng.randrange(p) for _ in range(w)) for _ in range(rng.randint(1, 4))))
        M = linear_oracle(rep)
        for _ in range(4):
            U = {e for e in M.ground if rng.random() < 0.5}
            c = linear_refinement(rep, U)
            assert refinement_witness(M, U, c) is None
            assert within(linear_bound(p, connectivity(M, U)), class_count(M, U, c))


def test_linear_gf2_lambda_one_count():
    rep = LinearRep(2, ((1, 0, 1, 1), (0, 1, 1, 1)))
    M = linear_oracle(rep)
    U = {1}
    assert connectivity(M, U) == 1
    assert class_count(M, U, linear_refinement(rep, U)) <= 3


# fundamental transversal

def test_ft_cover_examples():
    G = BipartitePresentation((1, 2), (3, 4), ((1, 3), (2, 4)))
    assert ft_boundary_cover(G, {1, 3}) == frozenset()
    assert len(ft_boundary_cover(G, {1, 4})) == 2
    assert len(ft_boundary_cover(G, {1})) == 1


def test_ft_cover_at_most_connectivity():
    rng = random.Random(1)
    for _ in range(80):
        G = random_ft(rng, 10)
        M = fundamental_transversal_oracle(G)
        U = {e for e in G.ground if rng.random() < 0.5}
        assert len(ft_boundary_cover(G, U)) <= connectivity(M, U)


def test_ft_certificate_examples():
    G = BipartitePresentation((1, 2), (3, 4), ((1, 3), (2, 4), (1, 4)))
    S = ft_boundary_cover(G, {1, 3})
    assert ft_certificate_test(G, S, {1, 3}, "U", (), FTCertificate("U"))
    G = BipartitePresentation((1,), (2,), ((1, 2),))
    S = {1}
    assert not ft_certificate_test(G, S, {1}, "U", (), FTCertificate("U", s3=(1,)))
    edgeless = BipartitePresentation((1,), (2,), ())
    sig = ft_signature(edgeless, (), {1}, "U", ())
    assert sig.tuples == (FTCertificate("U"),)


def test_ft_signature_against_matching_enumeration():
    rng = random.Random(23)
    for _ in range(60):
        G = random_ft(rng, 7)
        M = fundamental_transversal_oracle(G)
        U = frozenset(e for e in G.ground if rng.random() < 0.5)
        S = ft_boundary_cover(G, U)
        for side in ("U", "V"):
            P = U if side == "U" else frozenset(G.ground) - U
            for X in subsets(P):
                sig = ft_signature(G, S, U, side, X)
                if not M.is_independent(X):
                    assert sig.dependent
                    continue
                got = {(frozenset(c.s1), frozenset(c.z), frozenset(c.s3), frozenset(c.s4)) for c in sig.tuples}
                assert got == ft_certificates(G.A, G.B, G.edges, S, P, X)


def test_ft_compatible_examples():
    e = FTCertificate("U"), FTCertificate("V")
    assert ft_compatible(*e)
    assert not ft_compatible(FTCertificate("U", s1=(3,)), FTCertificate("V", s4=(3,)))
    with pytest.raises(DomainError):
        ft_compatible(FTCertificate("U"), FTCertificate("U"))


def test_ft_refinement_and_bound():
    rng = random.Random(29)
    for _ in range(60):
        G = random_ft(rng, 9)
        M = fundamental_transversal_oracle(G)
        U = {e for e in G.ground if rng.random() < 0.5}
        c = ft_refinement(G, U)
        assert refinement_witness(M, U, c) is None
        assert within(bound_for(G, M, U), class_count(M, U, c))


# frame

def test_frame_boundary_examples():
    tri = Multigraph((1, 2, 3), ((1, 1, 2), (2, 2, 3), (3, 1, 3)))
    assert frame_boundary(tri, {1, 2, 3}) == frozenset()
    assert frame_boundary(tri, {1}) == frozenset({1, 2})


def test_frame_signature_examples():
    G = Multigraph((1, 2, 3), ((1, 1, 1), (2, 1, 2), (3, 2, 3)))
    g = GainGraph(G, cyclic(2), {1: 1, 2: 0, 3: 0})
    assert frame_signature(g, {1, 2}, ()).blocks == ()
    sig = frame_signature(g, {1}, {1})
    assert sig.blocks == (((1,), False, None),)


def random_frame(rng, kind):
    G = random_graph(rng, rng.randint(1, 9), rng.randint(1, 5))
    if kind == "bicircular":
        return BicircularGraph(G, frozenset(e for e in G.loops() if rng.random() < 0.3))
    grp = {"Z2": cyclic(2), "Z3": cyclic(3), "S3": symmetric3()}[kind]
    return GainGraph(G, grp, {e: rng.choice(list(grp.elements)) for e in G.edge_ids})


def test_frame_refinement_random():
    rng = random.Random(31)
    for kind in ("bicircular", "Z2", "Z3", "S3"):
        for _ in range(30):
            p = random_frame(rng, kind)
            M = oracle_for(p)
            U = {e for e in M.ground if rng.random() < 0.5}
            assert refinement_witness(M, U, frame_refinement(p, U)) is None


def test_frame_bound_on_three_connected():
    rng = random.Random(37)
    found = 0
    while found < 10:
        p = random_frame(rng, rng.choice(("bicircular", "Z3")))
        M = oracle_for(p)
        if len(M.ground) < 4 or not is_n_connected(M, 3):
            continue
        found += 1
        for U in subsets(M.ground):
            lam = connectivity(M, U)
            assert len(frame_boundary(p, U)) <= frame_boundary_bound(lam)
            assert within(bound_for(p, M, U), class_count(M, U, frame_refinement(p, U)))


def test_nu_identity():
    rng = random.Random(41)
    for _ in range(300):
        G = random_graph(rng, rng.randint(0, 10), rng.randint(1, 6))
        L = {e for e in G.edge_ids if rng.random() < 0.5}
        assert nu_identity_holds(G, L, set(G.edge_ids) - L)


# dispatch

def test_dispatch_and_counts():
    M = uniform_oracle(2, 4)
    p = UniformSpec(2, 4)
    assert kind_of(p) == "uniform"
    c = refinement_for(p, M, {1, 2})
    assert class_count(M, {1, 2}, c) >= sim_count(M, {1, 2}) == class_count(M, {1, 2})
    assert bound_for(p, M, {1, 2}) == 4
    with pytest.raises(DomainError):
        kind_of(object())
    g = GainGraph(Multigraph((1,), ()), cyclic(2), {})
    assert kind_of(g) == "frame" and gain_oracle(g).ground == ()
