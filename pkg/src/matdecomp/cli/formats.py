"""Line-oriented instance files.

The first line names the kind; the rest is kind-specific. Writers emit a
canonical form, and parsing a canonical file then writing it back gives
the same bytes.

    linear          p <prime>, then one row of residues per line
    uniform         r=<r> n=<n>
    ftransversal    A: ids / B: ids / edge a b ...
    latticepath     P=<steps> / Q=<steps>
    bicircular      vertices n / edge id u v ... / balancedloops: ids
    gaingraph       vertices n / group integers | group table k identity i
                    followed by k table rows / edge id u v g ...
    gammoid         vertices: ids / arc u v ... / targets: ids
    sparsepaving    vertices n / edge u v ...   (the matroid m(G))

"vertices n" means 1..n; "vertices: ids" lists arbitrary ids.
"""
from __future__ import annotations

from ..core import DomainError
from ..zoo.gfp import is_prime
from ..zoo import (BicircularGraph, BipartitePresentation, GainGraph, GammoidPresentation,
                   IntegerGroup, LatticePathPresentation, LinearRep, Multigraph, SimpleGraph,
                   TableGroup, UniformSpec)

__all__ = ["InstanceParseError", "parse_instance", "write_instance", "KINDS", "write_parse_tree"]

KINDS = ("linear", "uniform", "ftransversal", "latticepath", "bicircular", "gaingraph",
         "gammoid", "sparsepaving")


class InstanceParseError(DomainError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class _Lines:
    def __init__(self, text: str):
        self.lines = text.split("\n")
        if self.lines and self.lines[-1] == "":
            self.lines.pop()
        self.i = 0

    def done(self) -> bool:
        return self.i >= len(self.lines)

    def peek(self):
        return None if self.done() else self.lines[self.i]

    def take(self, what: str) -> str:
        if self.done():
            raise InstanceParseError(self.i + 1, f"expected {what}, found end of file")
        self.i += 1
        return self.lines[self.i - 1]

    def fail(self, message: str, back: int = 1):
        raise InstanceParseError(self.i + 1 - back, message)


def _ints(lines: _Lines, parts, what: str) -> list:
    try:
        return [int(x) for x in parts]
    except ValueError:
        lines.fail(f"{what} must be integers")


def _labelled_ids(lines: _Lines, prefix: str) -> list:
    line = lines.take(f"'{prefix}'")
    if not line.startswith(prefix):
        lines.fail(f"expected a line starting with '{prefix}'")
    return _ints(lines, line[len(prefix):].split(), "ids")


def _vertices(lines: _Lines) -> list:
    line = lines.take("a vertices line")
    if line.startswith("vertices:"):
        return _ints(lines, line[len("vertices:"):].split(), "vertex ids")
    parts = line.split()
    if len(parts) != 2 or parts[0] != "vertices":
        lines.fail("expected 'vertices n' or 'vertices: ids'")
    n = _ints(lines, parts[1:], "vertex count")[0]
    return list(range(1, n + 1))


def _write_vertices(vertices) -> str:
    vertices = list(vertices)
    if vertices == list(range(1, len(vertices) + 1)):
        return f"vertices {len(vertices)}"
    return "vertices:" + "".join(f" {v}" for v in vertices)


def _ids(items) -> str:
    return "".join(f" {x}" for x in items)


def _wrap(lines: _Lines, build):
    try:
        return build()
    except InstanceParseError:
        raise
    except DomainError as exc:
        raise InstanceParseError(lines.i, str(exc)) from None


def parse_instance(text: str):
    lines = _Lines(text)
    kind = lines.take("a header line").strip()
    if kind not in KINDS:
        lines.fail(f"unknown instance kind {kind!r}")
    out = globals()[f"_parse_{kind}"](lines)
    if not lines.done():
        raise InstanceParseError(lines.i + 1, "unexpected trailing line")
    return out


def _parse_linear(lines):
    parts = lines.take("'p <prime>'").split()
    if len(parts) != 2 or parts[0] != "p":
        lines.fail("expected 'p <prime>'")
    p = _ints(lines, parts[1:], "p")[0]
    if not is_prime(p):
        lines.fail(f"{p} is not a prime")
    rows = []
    while not lines.done():
        rows.append(_ints(lines, lines.take("a row").split(), "residues"))
        if len(rows[-1]) != len(rows[0]):
            lines.fail("rows have different lengths")
        if any(not 0 <= v < p for v in rows[-1]):
            lines.fail(f"residues must lie in 0..{p - 1}")
    return _wrap(lines, lambda: LinearRep(p, tuple(tuple(r) for r in rows)))


def _parse_uniform(lines):
    parts = lines.take("'r=<r> n=<n>'").split()
    vals = {}
    for part in parts:
        key, _, val = part.partition("=")
        if key not in ("r", "n") or not val:
            lines.fail("expected 'r=<r> n=<n>'")
        vals[key] = _ints(lines, [val], key)[0]
    if set(vals) != {"r", "n"}:
        lines.fail("expected 'r=<r> n=<n>'")
    return _wrap(lines, lambda: UniformSpec(vals["r"], vals["n"]))


def _parse_ftransversal(lines):
    A = _labelled_ids(lines, "A:")
    B = _labelled_ids(lines, "B:")
    edges = []
    while not lines.done():
        parts = lines.take("an edge").split()
        if len(parts) != 3 or parts[0] != "edge":
            lines.fail("expected 'edge a b'")
        edges.append(tuple(_ints(lines, parts[1:], "edge ends")))
        if edges[-1][0] not in A or edges[-1][1] not in B:
            lines.fail("edges must go from A to B")
    return _wrap(lines, lambda: BipartitePresentation(tuple(A), tuple(B), tuple(edges)))


def _parse_latticepath(lines):
    out = {}
    for name in ("P", "Q"):
        line = lines.take(f"'{name}=...'")
        if not line.startswith(name + "="):
            lines.fail(f"expected '{name}=...'")
        out[name] = line[2:]
    return _wrap(lines, lambda: LatticePathPresentation(out["P"], out["Q"]))


def _edge_rows(lines, width: int, stop: str | None = None):
    rows = []
    while not lines.done() and not (stop and lines.peek().startswith(stop)):
        parts = lines.take("an edge").split()
        if len(parts) != width + 1 or parts[0] != "edge":
            lines.fail(f"expected 'edge' followed by {width} integers")
        rows.append(tuple(_ints(lines, parts[1:], "edge fields")))
    return rows


def _parse_bicircular(lines):
    vertices = _vertices(lines)
    rows = _edge_rows(lines, 3, stop="balancedloops:")
    loops = _labelled_ids(lines, "balancedloops:")
    return _wrap(lines, lambda: BicircularGraph(Multigraph(tuple(vertices), tuple(rows)), frozenset(loops)))


def _parse_gaingraph(lines):
    vertices = _vertices(lines)
    parts = lines.take("a group line").split()
    if parts == ["group", "integers"]:
        group = IntegerGroup()
    elif len(parts) == 5 and parts[:2] == ["group", "table"] and parts[3] == "identity":
        k, ident = _ints(lines, [parts[2], parts[4]], "group parameters")
        table = [_ints(lines, lines.take("a table row").split(), "table entries") for _ in range(k)]
        group = _wrap(lines, lambda: TableGroup(table, ident))
    else:
        lines.fail("expected 'group integers' or 'group table <k> identity <i>'")
    rows = _edge_rows(lines, 4)
    graph = _wrap(lines, lambda: Multigraph(tuple(vertices), tuple(r[:3] for r in rows)))
    return _wrap(lines, lambda: GainGraph(graph, group, {r[0]: r[3] for r in rows}))


def _parse_gammoid(lines):
    line = lines.take("'vertices: ids'")
    if not line.startswith("vertices:"):
        lines.fail("expected 'vertices: ids'")
    vertices = _ints(lines, line[len("vertices:"):].split(), "vertex ids")
    arcs = []
    while not lines.done() and not lines.peek().startswith("targets:"):
        parts = lines.take("an arc").split()
        if len(parts) != 3 or parts[0] != "arc":
            lines.fail("expected 'arc u v'")
        arcs.append(tuple(_ints(lines, parts[1:], "arc ends")))
    targets = _labelled_ids(lines, "targets:")
    return _wrap(lines, lambda: GammoidPresentation(tuple(vertices), tuple(arcs), frozenset(targets)))


def _parse_sparsepaving(lines):
    vertices = _vertices(lines)
    if vertices != list(range(1, len(vertices) + 1)):
        lines.fail("sparsepaving vertices must be 'vertices n'")
    rows = _edge_rows(lines, 2)
    return _wrap(lines, lambda: SimpleGraph(len(vertices), tuple(rows)))


def write_instance(x) -> str:
    out = []
    if isinstance(x, LinearRep):
        out.append("linear")
        out.append(f"p {x.p}")
        out.extend(" ".join(str(v) for v in row) for row in x.rows)
    elif isinstance(x, UniformSpec):
        out += ["uniform", f"r={x.r} n={x.n}"]
    elif isinstance(x, BipartitePresentation):
        out += ["ftransversal", "A:" + _ids(x.A), "B:" + _ids(x.B)]
        out.extend(f"edge {a} {b}" for a, b in x.edges)
    elif isinstance(x, LatticePathPresentation):
        out += ["latticepath", f"P={x.P}", f"Q={x.Q}"]
    elif isinstance(x, BicircularGraph):
        out += ["bicircular", _write_vertices(x.graph.vertices)]
        out.extend(f"edge {e} {u} {v}" for e, u, v in x.graph.edges)
        out.append("balancedloops:" + _ids(sorted(x.balanced_loops)))
    elif isinstance(x, GainGraph):
        out += ["gaingraph", _write_vertices(x.graph.vertices)]
        if isinstance(x.group, IntegerGroup):
            out.append("group integers")
        else:
            out.append(f"group table {x.group.order} identity {x.group.identity}")
            out.extend(" ".join(str(v) for v in row) for row in x.group.table)
        out.extend(f"edge {e} {u} {v} {x.labels[e]}" for e, u, v in x.graph.edges)
    elif isinstance(x, GammoidPresentation):
        out += ["gammoid", "vertices:" + _ids(x.vertices)]
        out.extend(f"arc {u} {v}" for u, v in x.arcs)
        out.append("targets:" + _ids(sorted(x.targets)))
    elif isinstance(x, SimpleGraph):
        out += ["sparsepaving", f"vertices {x.n}"]
        out.extend(f"edge {u} {v}" for u, v in x.edges)
    else:
        raise DomainError(f"cannot write {type(x).__name__}")
    return "\n".join(out) + "\n"


def _state(q) -> str:
    return str(q)


def write_parse_tree(parse) -> str:
    """Text form of a lattice parse: tree, step functions and transitions."""
    t, A = parse.tree, parse.automaton
    name = {}

    def label(sym):
        if isinstance(sym, tuple):
            return f"{label(sym[0])},{sym[1]}"
        return getattr(sym, "name", str(sym))

    def vertex(v):
        return name.setdefault(v, f"{v[0]}{v[1]}")

    out = ["parsetree", f"lambda {parse.lam}", f"root {vertex(t.root)}"]
    for v in t.vertices[::-1]:
        kids = t.children.get(v)
        if kids is None:
            elem = next(e for e, leaf in parse.phi.items() if leaf == v)
            out.append(f"leaf {vertex(v)} element {elem} label {label(t.labels[v])}")
        else:
            out.append(f"node {vertex(v)} left {vertex(kids[0])} right {vertex(kids[1])} "
                       f"label {label(t.labels[v])}")
    positions = sorted(q for q in A.states if isinstance(q, int))
    others = sorted(q for q in A.states if not isinstance(q, int))
    out.append("states" + _ids(positions + others))
    out.append("accepting" + _ids(sorted(A.accepting, key=lambda q: (not isinstance(q, int), str(q)))))
    for sym in sorted(A.delta0, key=label):
        out.append(f"delta0 {label(sym)} -> " + " ".join(sorted(map(_state, A.delta0[sym]))))
    rows = []
    for (sym, ql, qr), img in A.delta2.items():
        rows.append(((int(sym.name[1:]), str(ql), str(qr)),
                     f"delta2 {label(sym)} {ql} {qr} -> " + " ".join(sorted(map(_state, img)))))
    out.extend(r for _, r in sorted(rows))
    return "\n".join(out) + "\n"
