"""Planar diagrams of knots and knot-with-tunnel spatial graphs.

Crossing slots run counterclockwise from the incoming under-strand, so for
``X a b c d`` the under-strand enters at ``a`` and leaves at ``c``.  On a
positive crossing the over-strand enters at ``d`` and leaves at ``b``; on a
negative one it enters at ``b`` and leaves at ``d``.

Trivalent vertices list their three edges counterclockwise, each flagged as
leaving the vertex (outgoing) or arriving at it (incoming).

An unresolved intersection records two edges that meet transversally with
no over/under information.  ``Intersection(a, b, +1)`` means ``b`` crosses
``a`` from the right of ``a`` to its left; ``-1`` means the reverse.  When an
edge carries several intersections they are listed in order along it.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Crossing:
    sign: int
    slots: tuple[int, int, int, int]

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"crossing sign must be +1 or -1, got {self.sign}")
        if len(self.slots) != 4:
            raise ValueError(f"expected 4 labels, got {len(self.slots)}")

    @property
    def under_in(self):
        return self.slots[0]

    @property
    def under_out(self):
        return self.slots[2]

    @property
    def over_in(self):
        return self.slots[3] if self.sign > 0 else self.slots[1]

    @property
    def over_out(self):
        return self.slots[1] if self.sign > 0 else self.slots[3]

    def ends(self) -> Iterator[tuple[int, bool]]:
        """(label, outgoing) for each slot, seen from the crossing."""
        a, b, c, d = self.slots
        yield a, False
        yield c, True
        if self.sign > 0:
            yield d, False
            yield b, True
        else:
            yield b, False
            yield d, True


@dataclass(frozen=True)
class TrivalentVertex:
    slots: tuple[tuple[int, bool], tuple[int, bool], tuple[int, bool]]

    def __post_init__(self):
        if len(self.slots) != 3:
            raise ValueError(f"expected 3 labels, got {len(self.slots)}")

    @property
    def labels(self):
        return tuple(lab for lab, _ in self.slots)

    def ends(self):
        return iter(self.slots)


@dataclass(frozen=True)
class Intersection:
    a: int
    b: int
    handedness: int = 1

    def __post_init__(self):
        if self.handedness not in (1, -1):
            raise ValueError("handedness must be +1 or -1")
        if self.a == self.b:
            raise ValueError("an edge cannot intersect itself here")


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[Crossing, ...] = ()
    vertices: tuple[TrivalentVertex, ...] = ()
    free_loops: int = 0
    intersections: tuple[Intersection, ...] = ()
    # continued fraction of the 4-plat this diagram was generated from, if any
    plat: tuple[int, ...] | None = field(default=None, compare=True)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "intersections", tuple(self.intersections))
        if self.plat is not None:
            object.__setattr__(self, "plat", tuple(self.plat))

    def labels(self) -> set[int]:
        out = set()
        for x in self.crossings:
            out.update(x.slots)
        for v in self.vertices:
            out.update(v.labels)
        return out

    def ends(self) -> Iterator[tuple[int, bool]]:
        for x in self.crossings:
            yield from x.ends()
        for v in self.vertices:
            yield from v.ends()

    def num_components(self) -> int:
        """Connected components, following strands through crossings."""
        if not validate(self).ok:
            raise ValueError("component count needs a valid diagram")
        uf = _UnionFind(self.labels())
        for x in self.crossings:
            a, b, c, d = x.slots
            uf.union(a, c)
            uf.union(b, d)
        for v in self.vertices:
            l0, l1, l2 = v.labels
            uf.union(l0, l1)
            uf.union(l0, l2)
        return uf.count() + self.free_loops

    def betti_number(self) -> int:
        """First Betti number of the underlying abstract graph.

        Chains of edges through crossings are single graph edges; a chain
        with no vertex on it is a circle.
        """
        graph_edges = _graph_edge_count(self)
        return graph_edges - len(self.vertices) + self.num_components()

    def stats(self) -> dict:
        return {
            "crossings": len(self.crossings),
            "vertices": len(self.vertices),
            "edges": len(self.labels()),
            "free_loops": self.free_loops,
            "unresolved": len(self.intersections),
            "components": self.num_components(),
        }


class _UnionFind:
    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)

    def count(self):
        return len({self.find(x) for x in self.parent})

    def classes(self) -> dict:
        out: dict = {}
        for x in sorted(self.parent):
            out.setdefault(self.find(x), []).append(x)
        return out


def _graph_edge_count(d: PlanarDiagram) -> int:
    uf = _UnionFind(d.labels())
    for x in d.crossings:
        a, b, c, e = x.slots
        uf.union(a, c)
        uf.union(b, e)
    return uf.count() + d.free_loops


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def validate(d: PlanarDiagram) -> ValidationReport:
    """Check every structural invariant of a diagram; report all violations."""
    problems = []
    if d.free_loops < 0:
        problems.append(f"negative free loop count {d.free_loops}")
    outs, ins = Counter(), Counter()
    for lab, outgoing in d.ends():
        if lab <= 0:
            problems.append(f"non-positive edge label {lab}")
        (outs if outgoing else ins)[lab] += 1
    for lab in sorted(set(outs) | set(ins)):
        n = outs[lab] + ins[lab]
        if n == 1:
            problems.append(f"dangling edge {lab}")
        elif n > 2:
            problems.append(f"edge {lab} appears {n} times")
        elif outs[lab] != 1:
            kind = "outgoing" if outs[lab] == 2 else "incoming"
            problems.append(f"edge {lab} has two {kind} ends")
    known = set(outs) | set(ins)
    for it in d.intersections:
        for lab in (it.a, it.b):
            if lab not in known:
                problems.append(f"intersection references unknown edge {lab}")
    return ValidationReport(tuple(problems))


def renormalize(d: PlanarDiagram) -> PlanarDiagram:
    """Relabel edges 1..n in order of first appearance."""
    mapping: dict[int, int] = {}

    def m(lab):
        if lab not in mapping:
            mapping[lab] = len(mapping) + 1
        return mapping[lab]

    crossings = [Crossing(x.sign, tuple(m(s) for s in x.slots)) for x in d.crossings]
    vertices = [TrivalentVertex(tuple((m(lab), o) for lab, o in v.slots))
                for v in d.vertices]
    inters = [Intersection(m(i.a), m(i.b), i.handedness) for i in d.intersections]
    return replace(d, crossings=tuple(crossings), vertices=tuple(vertices),
                   intersections=tuple(inters))


PERTURBATION_CASES = {
    1: (True, True),
    2: (True, False),
    3: (False, True),
    4: (False, False),
}


def case_label(case: int) -> str:
    first, second = PERTURBATION_CASES[case]
    return "(" + ",".join("over" if f else "under" for f in (first, second)) + ")"


def resolve_intersections(d: PlanarDiagram, overs: Iterable[bool]) -> PlanarDiagram:
    """Turn each unresolved intersection into a crossing.

    ``overs[k]`` says whether the first edge of intersection k passes over.
    """
    overs = list(overs)
    if len(overs) != len(d.intersections):
        raise ValueError("need one over/under choice per intersection")
    nxt = max(d.labels(), default=0) + 1
    # pieces[e] lists the labels of e's pieces in order along e
    pieces: dict[int, list[int]] = {}
    position: list[dict[int, int]] = []
    for it in d.intersections:
        where = {}
        for e in (it.a, it.b):
            seq = pieces.setdefault(e, [e])
            where[e] = len(seq) - 1
            seq.append(nxt)
            nxt += 1
        position.append(where)

    def retarget(lab, outgoing):
        # the incoming end of a split edge now belongs to its last piece
        if lab in pieces and not outgoing:
            return pieces[lab][-1]
        return lab

    crossings = []
    for x in d.crossings:
        ends = dict()
        for lab, outgoing in x.ends():
            ends[lab] = outgoing
        crossings.append(Crossing(x.sign, tuple(retarget(s, ends[s]) for s in x.slots)))
    vertices = [TrivalentVertex(tuple((retarget(lab, o), o) for lab, o in v.slots))
                for v in d.vertices]
    for it, where, a_over in zip(d.intersections, position, overs):
        a_in = pieces[it.a][where[it.a]]
        a_out = pieces[it.a][where[it.a] + 1]
        b_in = pieces[it.b][where[it.b]]
        b_out = pieces[it.b][where[it.b] + 1]
        if it.handedness > 0:
            x = (Crossing(1, (b_in, a_out, b_out, a_in)) if a_over
                 else Crossing(-1, (a_in, b_in, a_out, b_out)))
        else:
            x = (Crossing(-1, (b_in, a_in, b_out, a_out)) if a_over
                 else Crossing(1, (a_in, b_out, a_out, b_in)))
        crossings.append(x)
    out = PlanarDiagram(tuple(crossings), tuple(vertices), d.free_loops, (), d.plat)
    return renormalize(out)


def perturb(d: PlanarDiagram, case: int) -> PlanarDiagram:
    """Resolve exactly two unresolved intersections by one of four choices.

    Case k picks (first edge over?) for the two intersections in listed order:
    1 = (over, over), 2 = (over, under), 3 = (under, over), 4 = (under, under).
    """
    if case not in PERTURBATION_CASES:
        raise ValueError(f"perturbation case must be 1..4, got {case}")
    if len(d.intersections) != 2:
        raise ValueError(
            f"perturb needs exactly 2 unresolved intersections, found {len(d.intersections)}")
    return resolve_intersections(d, PERTURBATION_CASES[case])


# --- text format -----------------------------------------------------------

class DiagramParseError(ValueError):
    def __init__(self, lineno: int, column: int, message: str):
        super().__init__(f"line {lineno}, column {column}: {message}")
        self.lineno = lineno
        self.column = column


def _int(tok: str, lineno: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise DiagramParseError(lineno, col, f"expected an integer label, got {tok!r}") from None


def _vertex_token(tok: str, lineno: int, col: int) -> tuple[int, bool]:
    if tok and tok[-1] in "+-" and tok[:-1].lstrip().isdigit():
        return int(tok[:-1]), tok[-1] == "+"
    if tok and tok[0] in "+-" and tok[1:].isdigit():
        return int(tok[1:]), tok[0] == "+"
    raise DiagramParseError(lineno, col, f"expected a flagged label like 3+ or 3-, got {tok!r}")


def parse_diagram(text: str) -> PlanarDiagram:
    crossings, vertices, inters = [], [], []
    loops = 0
    plat = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        toks = line.split()
        if not toks:
            continue
        cols = []
        pos = 0
        for t in toks:
            pos = line.index(t, pos)
            cols.append(pos + 1)
            pos += len(t)
        head, args = toks[0], toks[1:]
        if head in ("Xp", "Xm"):
            if len(args) != 4:
                raise DiagramParseError(lineno, cols[0], f"expected 4 labels after {head}, got {len(args)}")
            labs = tuple(_int(t, lineno, c) for t, c in zip(args, cols[1:]))
            crossings.append(Crossing(1 if head == "Xp" else -1, labs))
        elif head == "V":
            if len(args) != 3:
                raise DiagramParseError(lineno, cols[0], f"expected 3 labels after V, got {len(args)}")
            vertices.append(TrivalentVertex(tuple(
                _vertex_token(t, lineno, c) for t, c in zip(args, cols[1:]))))
        elif head == "U":
            if len(args) != 1:
                raise DiagramParseError(lineno, cols[0], "expected one count after U")
            loops += _int(args[0], lineno, cols[1])
        elif head == "I":
            if len(args) != 2:
                raise DiagramParseError(lineno, cols[0], f"expected 2 labels after I, got {len(args)}")
            a = _int(args[0], lineno, cols[1])
            b = _int(args[1], lineno, cols[2])
            if a <= 0:
                raise DiagramParseError(lineno, cols[1], "first intersection label must be positive")
            inters.append(Intersection(a, abs(b), 1 if b > 0 else -1))
        elif head == "P":
            if not args:
                raise DiagramParseError(lineno, cols[0], "expected continued fraction terms after P")
            plat = tuple(_int(t, lineno, c) for t, c in zip(args, cols[1:]))
        else:
            raise DiagramParseError(lineno, cols[0], f"unknown item {head!r}")
    return PlanarDiagram(tuple(crossings), tuple(vertices), loops, tuple(inters), plat)


def emit_diagram(d: PlanarDiagram) -> str:
    lines = []
    if d.plat is not None:
        lines.append("P " + " ".join(str(a) for a in d.plat))
    for x in d.crossings:
        lines.append(("Xp " if x.sign > 0 else "Xm ") + " ".join(map(str, x.slots)))
    for v in d.vertices:
        lines.append("V " + " ".join(f"{lab}{'+' if o else '-'}" for lab, o in v.slots))
    if d.free_loops:
        lines.append(f"U {d.free_loops}")
    for it in d.intersections:
        lines.append(f"I {it.a} {it.b * it.handedness}")
    return "\n".join(lines) + "\n"
