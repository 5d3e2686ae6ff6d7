"""Experiment suites and their reports.

Every suite is deterministic in its seed. A report has one row per
instance (or per named check) and a list of failure lines that name a
concrete witness, so any failure can be replayed with the oracle command.
"""
from __future__ import annotations

import csv
import hashlib
import io
import time
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from ..automata import accepted_family, lattice_parse, staircases
from ..core import (MinorSpec, circuits, connectivity, independence_table, is_n_connected, minor,
                    rank, same_matroid, set_system, verify_axioms, closure)
from ..decomp import branch_width, displayed_sets, random_decomposition, sim_labels
from ..pigeonhole import (bound_for, frame_boundary, frame_boundary_bound, ft_boundary_cover,
                          ft_compatible, ft_refinement, kind_of, nu_identity_holds, refinement_for,
                          within)
from ..zoo import (BipartitePresentation, LatticePathPresentation, SimpleGraph, bicircular_minor,
                   courcelle_gadget, gain_minor, m_of_graph, object_construction, oracle_for, principal_extension,
                   raunch_sets, uniform_oracle)
from .formats import write_instance
from .generators import (random_bicircular, random_ft, random_gain, random_gammoid, random_lattice,
                         random_linear, random_multigraph, random_uniform)
from .rng import Lcg

__all__ = ["Row", "Report", "SUITES", "run_suite", "instance_hash", "lattice_bases_by_paths",
           "PIGEONHOLE_CLASSES", "pigeonhole_rows"]

COLUMNS = ("index", "instance", "kind", "lambda", "sim", "refine", "bound", "status", "detail")


def instance_hash(presentation) -> str:
    return hashlib.sha256(write_instance(presentation).encode()).hexdigest()[:12]


@dataclass
class Row:
    index: int
    instance: str
    kind: str
    lam: object = ""
    sim: object = ""
    refine: object = ""
    bound: object = ""
    ok: bool = True
    detail: str = ""

    def cells(self) -> list:
        return [self.index, self.instance, self.kind, self.lam, self.sim, self.refine,
                self.bound, "pass" if self.ok else "FAIL", self.detail]


@dataclass
class Report:
    experiment: str
    seed: int
    rows: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures and all(r.ok for r in self.rows)

    def summary(self) -> str:
        bad = sum(not r.ok for r in self.rows)
        return (f"experiment={self.experiment} seed={self.seed} rows={len(self.rows)} "
                f"failed={bad} result={'pass' if self.passed else 'FAIL'}")

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(COLUMNS)
        for r in self.rows:
            w.writerow(r.cells())
        for line in self.failures:
            buf.write(f"# failure: {line}\n")
        buf.write(f"# {self.summary()}\n")
        return buf.getvalue()

    def to_text(self) -> str:
        out = []
        for r in self.rows:
            out.append(" ".join(f"{k}={v}" for k, v in zip(COLUMNS, r.cells()) if v != ""))
        out.extend(f"failure: {line}" for line in self.failures)
        out.append(self.summary())
        return "\n".join(out) + "\n"


def _fmt(X) -> str:
    return "{" + ",".join(str(e) for e in sorted(X)) + "}"


def _boundary_sets(M, rng: Lcg, extra: int = 2) -> list:
    """Displayed sets of a random decomposition plus a few random subsets."""
    ground = M.ground
    seen = set()
    out = []

    def add(U):
        U = frozenset(U)
        if U not in seen:
            seen.add(U)
            out.append(U)

    if len(ground) >= 2:
        D = random_decomposition(ground, rng)
        for e in D.edges:
            add(displayed_sets(D, e)[0])
    for _ in range(extra):
        add(rng.subset(ground))
    return out


# --- refinement and bounds -------------------------------------------------

PIGEONHOLE_CLASSES = {
    "uniform": lambda rng: random_uniform(rng, 9),
    "linear-gf2": lambda rng: random_linear(rng, 2, 12),
    "linear-gf3": lambda rng: random_linear(rng, 3, 12),
    "ftransversal": lambda rng: random_ft(rng, 10),
    "bicircular": lambda rng: random_bicircular(rng, 10),
    "gain-z2": lambda rng: random_gain(rng, "Z2", 10),
    "gain-z3": lambda rng: random_gain(rng, "Z3", 10),
    "gain-s3": lambda rng: random_gain(rng, "S3", 10),
}


def _three_connected_frame(rng: Lcg, kind: str, tries: int = 400):
    """Rejection-sample a 3-connected frame instance on few vertices."""
    for _ in range(tries):
        if kind == "bicircular":
            p = random_bicircular(rng, 10, 4)
        else:
            p = random_gain(rng, kind, 10, 4)
        if len(p.graph.edges) < 4:
            continue
        if is_n_connected(oracle_for(p), 3):
            return p
    return None


def _check_boundary(p, M, U, rng_witness=None):
    """(λ, ∼ count, ≈ count, bound, refinement witness, bound ok)."""
    umask = M.mask(U)
    xm, labels, zm, mat = sim_labels(M, umask)
    classify = refinement_for(p, M, U)
    keys = [classify(M.elements(x)) for x in xm.tolist()]
    first = {}
    witness = None
    for i, k in enumerate(keys):
        j = first.setdefault(k, i)
        if witness is None and labels[j] != labels[i]:
            col = int(np.flatnonzero(mat[i] != mat[j])[0])
            witness = (M.elements(int(xm[j])), M.elements(int(xm[i])), M.elements(int(zm[col])))
    lam = connectivity(M, U)
    n_sim = int(labels.max()) + 1 if len(labels) else 0
    n_ref = len(first)
    bound = bound_for(p, M, U)
    return lam, n_sim, n_ref, bound, witness, within(bound, n_ref)


def pigeonhole_rows(seed: int, per_class: int = 200, frame_extra: int = 25,
                    classes=None, max_elements: int | None = None):
    """Rows for the refinement and bound checks, computed in one pass.

    Each row carries two flags: the refinement held on every tested U, and
    the class-count bound held. For frame instances the bound is asserted
    only on 3-connected instances, where it applies.
    """
    rng = Lcg(seed)
    classes = list(classes or PIGEONHOLE_CLASSES)
    jobs = []
    for name in classes:
        stream = rng.fork(len(jobs))
        for i in range(per_class):
            jobs.append((name, stream.fork(i), None))
    frame_kinds = [c for c in classes if c == "bicircular" or c.startswith("gain-")]
    for name in frame_kinds:
        stream = rng.fork(1000 + len(jobs))
        for i in range(frame_extra):
            jobs.append((name + "-3c", stream.fork(i), name))

    out = []
    for index, (name, r, frame_kind) in enumerate(jobs):
        if frame_kind is None:
            p = PIGEONHOLE_CLASSES[name](r)
        else:
            group = {"gain-z2": "Z2", "gain-z3": "Z3", "gain-s3": "S3"}.get(frame_kind, "bicircular")
            p = _three_connected_frame(r, group)
            if p is None:
                continue
        if max_elements is not None and len(oracle_for(p).ground) > max_elements:
            continue
        out.append(_pigeonhole_row(index, name, p, r))
    return out


def _pigeonhole_row(index, name, p, rng):
    M = oracle_for(p)
    kind = kind_of(p)
    frame3 = kind == "frame" and is_n_connected(M, 3)
    h = instance_hash(p)
    row = Row(index, h, name, lam=0, sim=0, refine=0, bound="")
    row.refine_ok = True
    row.bound_ok = True
    notes = []
    worst_bound = None
    for U in _boundary_sets(M, rng):
        lam, n_sim, n_ref, bound, witness, bound_ok = _check_boundary(p, M, U)
        row.lam = max(row.lam, lam)
        row.sim = max(row.sim, n_sim)
        row.refine = max(row.refine, n_ref)
        if witness is not None and row.refine_ok:
            row.refine_ok = False
            X, X2, Z = witness
            notes.append(f"refinement violated: instance={h} U={_fmt(U)} X={_fmt(X)} "
                         f"X'={_fmt(X2)} Z={_fmt(Z)}")
        if kind == "frame":
            if frame3:
                nb = len(frame_boundary(p, U))
                if nb > frame_boundary_bound(lam):
                    row.bound_ok = False
                    notes.append(f"boundary bound violated: instance={h} U={_fmt(U)} |N|={nb} "
                                 f"λ={lam}")
                if not bound_ok:
                    row.bound_ok = False
                    notes.append(f"class bound violated: instance={h} U={_fmt(U)} count={n_ref}")
        elif not bound_ok:
            row.bound_ok = False
            notes.append(f"class bound violated: instance={h} U={_fmt(U)} count={n_ref} bound={bound}")
        if lam == row.lam:
            worst_bound = bound
    row.bound = "n/a" if kind == "frame" and not frame3 else str(worst_bound)
    row.detail = "; ".join(notes) if notes else write_instance(p).replace("\n", "|").rstrip("|")
    return row


def _pigeonhole_report(name: str, flag: str, seed: int, per_class: int | None, max_elements, rows=None):
    report = Report(name, seed)
    if rows is None:
        rows = pigeonhole_rows(seed, per_class or 200, max_elements=max_elements)
    for r in rows:
        ok = getattr(r, flag)
        report.rows.append(Row(r.index, r.instance, r.kind, r.lam, r.sim, r.refine, r.bound, ok,
                               r.detail))
        if not ok:
            report.failures.extend(x for x in r.detail.split("; ") if x.startswith(
                "refinement" if flag == "refine_ok" else ("boundary", "class")))
    return report


def suite_refinement(seed: int, count=None, max_elements=None, rows=None) -> Report:
    return _pigeonhole_report("refinement", "refine_ok", seed, count, max_elements, rows)


def suite_bounds(seed: int, count=None, max_elements=None, rows=None) -> Report:
    return _pigeonhole_report("bounds", "bound_ok", seed, count, max_elements, rows)


# --- lattice path parse trees ----------------------------------------------

def lattice_bases_by_paths(L: LatticePathPresentation) -> set:
    """Bases as the N-step positions of every path between P and Q."""
    out = set()

    def walk(x, y, chosen):
        if x + y == L.size:
            out.add(chosen)
            return
        i = x + y + 1
        if L.in_region(x + 1, y):
            walk(x + 1, y, chosen)
        if L.in_region(x, y + 1):
            walk(x, y + 1, chosen | {i})

    walk(0, 0, frozenset())
    return out


def _down_closure(n: int, masks) -> np.ndarray:
    table = np.zeros(1 << n, dtype=bool)
    table[list(masks)] = True
    for i in range(n):
        view = table.reshape(-1, 2, 1 << i)
        view[:, 0, :] |= view[:, 1, :]
    return table


def suite_parse(seed: int, count=None, max_elements=None) -> Report:
    report = Report("parse", seed)
    rng = Lcg(seed)
    count = count or 20
    top = min(max_elements or 14, 14)
    for i in range(count):
        L = random_lattice(rng.fork(i), top, min(6, top))
        M = oracle_for(L)
        h = instance_hash(L)
        row = Row(i, h, "latticepath", lam="")
        parse = lattice_parse(L)
        row.lam = parse.lam
        fam = accepted_family(parse.automaton, parse.tree, parse.phi)
        table = independence_table(M, assume_matroid=False)
        got = np.zeros_like(table)
        for Y in fam.family:
            got[M.mask(Y)] = True
        if not np.array_equal(got, table):
            bad = int(np.flatnonzero(got != table)[0])
            row.ok = False
            report.failures.append(f"automaton disagrees: instance={h} P={L.P} Q={L.Q} "
                                   f"Y={_fmt(M.elements(bad))}")
        detail = f"P={L.P} Q={L.Q} subsets={1 << L.size}"
        if L.size <= 12:
            masks = [M.mask(B) for B in lattice_bases_by_paths(L)]
            if not np.array_equal(_down_closure(L.size, masks), table):
                row.ok = False
                report.failures.append(f"oracle disagrees with path enumeration: instance={h} "
                                       f"P={L.P} Q={L.Q}")
            detail += " paths=checked"
        row.detail = detail
        report.rows.append(row)
    return report


# --- widths and staircases -------------------------------------------------

def _paths(m: int, r: int):
    for pos in combinations(range(m + r), r):
        s = ["E"] * (m + r)
        for i in pos:
            s[i] = "N"
        yield "".join(s)


def lattice_instances(size: int):
    """Every M[P,Q] with m + r = size."""
    for r in range(size + 1):
        paths = list(_paths(size - r, r))
        for P in paths:
            for Q in paths:
                try:
                    yield LatticePathPresentation(P, Q)
                except Exception:
                    continue


def suite_widths(seed: int, count=None, max_elements=None, exhaustive_upto: int = 8) -> Report:
    report = Report("widths", seed)
    U24 = uniform_oracle(2, 4)
    bw = branch_width(U24)
    report.rows.append(Row(0, "U(2,4)", "uniform", lam=bw, ok=bw == 3, detail="branch-width = 3"))
    K3 = m_of_graph(SimpleGraph.complete(3))
    bw = branch_width(K3)
    report.rows.append(Row(1, "m(K3)", "sparsepaving", lam=bw, ok=bw <= 4, detail="branch-width <= 4"))
    sq = LatticePathPresentation("EENN", "NNEE")
    bw = branch_width(oracle_for(sq))
    report.rows.append(Row(2, "2x2 square", "latticepath", lam=bw, ok=bw == 3,
                           detail="branch-width = 3"))
    top = min(max_elements or 10, 10)
    instances = [L for size in range(1, min(exhaustive_upto, top) + 1) for L in lattice_instances(size)]
    rng = Lcg(seed)
    for size in range(exhaustive_upto + 1, top + 1):
        pool = list(lattice_instances(size))
        instances += rng.sample(pool, min(len(pool), count or 60))
    for L in instances:
        bw = branch_width(oracle_for(L))
        biggest = max(len(s.vertices) for s in staircases(L))
        ok = biggest <= 3 * bw - 1
        report.rows.append(Row(len(report.rows), instance_hash(L), "staircase", lam=bw, refine=biggest,
                               bound=3 * bw - 1, ok=ok, detail=f"P={L.P} Q={L.Q}"))
        if not ok:
            report.failures.append(f"staircase bound violated: P={L.P} Q={L.Q} bw={bw} "
                                   f"staircase={biggest}")
    for r in report.rows[:3]:
        if not r.ok:
            report.failures.append(f"width check failed: {r.instance} {r.detail} got {r.lam}")
    return report


# --- certificate compatibility ---------------------------------------------

def ft_compatibility_failures(G: BipartitePresentation, U) -> list:
    """(X, Y) pairs where independence and certificate compatibility disagree."""
    M = oracle_for(G)
    ground = frozenset(G.ground)
    U = frozenset(U)
    V = ground - U
    S = ft_boundary_cover(G, U)
    left, right = ft_refinement(G, U, "U", S), ft_refinement(G, U, "V", S)
    sig_u = {}
    sig_v = {}
    for k in range(len(U) + 1):
        for X in combinations(sorted(U), k):
            sig_u[frozenset(X)] = left(X)
    for k in range(len(V) + 1):
        for Y in combinations(sorted(V), k):
            sig_v[frozenset(Y)] = right(Y)
    bad = []
    for X, sx in sig_u.items():
        for Y, sy in sig_v.items():
            indep = M.is_independent(X | Y)
            pair = any(ft_compatible(c, d) for c in sx.tuples for d in sy.tuples)
            if indep != pair:
                bad.append((X, Y, indep))
    return bad


def small_bipartite_presentations(n: int):
    """Every presentation on elements 1..n: each split and each edge set."""
    ids = list(range(1, n + 1))
    for k in range(1, n):
        for A in combinations(ids, k):
            B = [e for e in ids if e not in A]
            pairs = [(a, b) for a in A for b in B]
            for mask in range(1 << len(pairs)):
                yield BipartitePresentation(A, tuple(B), tuple(p for i, p in enumerate(pairs) if mask >> i & 1))


def suite_ftcompat(seed: int, count=None, max_elements=None, exhaustive_upto: int = 5,
                   partitions: int = 8) -> Report:
    report = Report("ftcompat", seed)

    def check(G, Us, tag):
        row = Row(len(report.rows), instance_hash(G), tag, lam=len(Us))
        for U in Us:
            for X, Y, indep in ft_compatibility_failures(G, U)[:1]:
                row.ok = False
                report.failures.append(f"compatibility mismatch: instance={row.instance} U={_fmt(U)} "
                                       f"X={_fmt(X)} Y={_fmt(Y)} independent={indep}")
        row.detail = write_instance(G).replace("\n", "|").rstrip("|")
        report.rows.append(row)

    for n in range(2, exhaustive_upto + 1):
        for G in small_bipartite_presentations(n):
            ground = G.ground
            Us = [frozenset(e for i, e in enumerate(ground) if m >> i & 1) for m in range(1 << n)]
            check(G, Us, f"exhaustive-{n}")
    rng = Lcg(seed)
    top = min(max_elements or 8, 8)
    for i in range(count or 150):
        r = rng.fork(i)
        G = random_ft(r, top, max_edges=12)
        Us = [frozenset(r.subset(G.ground)) for _ in range(partitions)]
        check(G, Us, "sampled")
    return report


# --- graph minors ----------------------------------------------------------

def suite_minors(seed: int, count=None, max_elements=None) -> Report:
    report = Report("minors", seed)
    rng = Lcg(seed)
    top = min(max_elements or 9, 9)
    groups = ("Z2", "Z3", "S3")
    for i in range(count or 100):
        for kind in ("gain", "bicircular"):
            r = rng.fork(2 * i + (kind == "gain"))
            if kind == "gain":
                p = random_gain(r, groups[i % 3], top)
                M = oracle_for(p)
            else:
                p = random_bicircular(r, top)
                M = oracle_for(p)
            row = Row(len(report.rows), instance_hash(p), kind)
            checked = 0
            for e in M.ground:
                for how in ("delete", "contract"):
                    if kind == "gain":
                        N = oracle_for(gain_minor(p, e, how))
                    else:
                        N = oracle_for(bicircular_minor(p, e, how))
                    spec = MinorSpec(contract={e}) if how == "contract" else MinorSpec(delete={e})
                    checked += 1
                    if not same_matroid(N, minor(M, spec)):
                        row.ok = False
                        report.failures.append(f"minor mismatch: instance={row.instance} {how} {e}")
            row.lam = checked
            row.detail = write_instance(p).replace("\n", "|").rstrip("|")
            report.rows.append(row)
    return report


# --- constructions ---------------------------------------------------------

def object_circuits_expected(q: int) -> set:
    A, B = raunch_sets(q, q)
    S = {a + b for a in A for b in B}
    out = set()
    for part in (A, B, S):
        out |= {frozenset(c) for c in combinations(sorted(part), 3)}
    out |= {frozenset({a, b, a + b}) for a in A for b in B}
    return out


def raunch_properties(m: int, n: int) -> bool:
    A, B = raunch_sets(m, n)
    sums = [a + b for a in A for b in B]
    return (len(A) == m and len(B) == n and len(set(sums)) == m * n
            and not set(sums) & (A | B) and not A & B)


def suite_constructions(seed: int, count=None, max_elements=None) -> Report:
    report = Report("constructions", seed)

    def add(name, ok, detail=""):
        report.rows.append(Row(len(report.rows), name, "construction", ok=bool(ok), detail=detail))
        if not ok:
            report.failures.append(f"construction failed: {name} {detail}")

    for N in range(3, 6):
        add(f"m(K{N})", verify_axioms(set_system(m_of_graph(SimpleGraph.complete(N)))))
    for q in (2, 3):
        _, M = object_construction(q)
        add(f"object({q}) axioms", verify_axioms(set_system(M)), f"{len(M.ground)} elements")
        r = rank(M, M.ground)
        found = {C for C in circuits(M) if rank(M, C) < r}
        add(f"object({q}) circuits", found == object_circuits_expected(q),
            f"{len(found)} non-spanning circuits")
    U23 = uniform_oracle(2, 3)
    flats = {closure(U23, X) for k in range(4) for X in combinations(U23.ground, k)}
    for F in sorted(flats, key=lambda f: (len(f), sorted(f))):
        add(f"U(2,3)+F{_fmt(F)}", verify_axioms(set_system(principal_extension(U23, F))))
    rng = Lcg(seed)
    for i in range(count or 20):
        r = rng.fork(i)
        g = random_gammoid(r, 9)
        M = oracle_for(g)
        F = closure(M, r.subset(M.ground, 1, 3))
        add(f"gammoid {instance_hash(g)}+F{_fmt(F)}", verify_axioms(set_system(principal_extension(M, F))),
            write_instance(g).replace("\n", "|").rstrip("|"))
    for m in range(1, 7):
        for n in range(1, 7):
            add(f"raunch({m},{n})", raunch_properties(m, n))
    return report


# --- loop gadget -----------------------------------------------------------

def courcelle_failures(G: SimpleGraph) -> list:
    graph, M, loops = courcelle_gadget(G)
    bad = []
    for v, (l1, l2) in loops.items():
        if not (M.is_independent({l1}) and M.is_independent({l2}) and not M.is_independent({l1, l2})):
            bad.append(f"loops at {v} are not a 2-circuit")
    ends = graph.ends()

    def is_circuit(C):
        return not M.is_independent(C) and all(M.is_independent(C - {x}) for x in C)

    for k, (u, w) in enumerate(G.edges, start=1):
        for v in range(1, G.n + 1):
            incident = v in ends[k]
            witnessed = any(is_circuit({k, l, x}) for l in loops[v] for x in M.ground
                            if x not in (k, l))
            if incident != witnessed:
                bad.append(f"edge {k} vertex {v}: incident={incident} circuit={witnessed}")
    return bad


def all_simple_graphs(n: int):
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield SimpleGraph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))


def suite_courcelle(seed: int, count=None, max_elements=None) -> Report:
    report = Report("courcelle", seed)
    for n in range(1, min(max_elements or 5, 5) + 1):
        for G in all_simple_graphs(n):
            bad = courcelle_failures(G)
            row = Row(len(report.rows), instance_hash(G), "sparsepaving", ok=not bad,
                      detail=write_instance(G).replace("\n", "|").rstrip("|"))
            report.rows.append(row)
            report.failures.extend(f"gadget: instance={row.instance} {b}" for b in bad)
    return report


# --- cycle-count identity --------------------------------------------------

def suite_nu(seed: int, count=None, max_elements=None) -> Report:
    report = Report("nu", seed)
    rng = Lcg(seed)
    for i in range(count or 1000):
        r = rng.fork(i)
        G = random_multigraph(r, max_elements or 12, 7)
        L = frozenset(r.subset(G.edge_ids))
        R = frozenset(G.edge_ids) - L
        ok = nu_identity_holds(G, L, R)
        row = Row(i, hashlib.sha256(repr((G, sorted(L))).encode()).hexdigest()[:12], "multigraph",
                  ok=ok, detail=f"L={_fmt(L)}")
        report.rows.append(row)
        if not ok:
            report.failures.append(f"identity fails: edges={G.edges} L={_fmt(L)} R={_fmt(R)}")
    return report


SUITES = {
    "refinement": suite_refinement,
    "bounds": suite_bounds,
    "parse": suite_parse,
    "widths": suite_widths,
    "ftcompat": suite_ftcompat,
    "minors": suite_minors,
    "constructions": suite_constructions,
    "courcelle": suite_courcelle,
    "nu": suite_nu,
}


def run_suite(name: str, seed: int = 1, count=None, max_elements=None) -> Report:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    start = time.perf_counter()
    report = SUITES[name](seed, count, max_elements)
    report.seconds = time.perf_counter() - start
    return report
