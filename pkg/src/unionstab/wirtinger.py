"""Wirtinger presentations of knot and spatial-graph exteriors."""
from __future__ import annotations

from .diagram import PlanarDiagram, _UnionFind, validate
from .words import GroupPresentation, letter


class UnresolvedDiagram(ValueError):
    pass


def strands(d: PlanarDiagram) -> list[list[int]]:
    """Edge labels of each over-arc, ordered by their lowest label."""
    uf = _UnionFind(d.labels())
    for x in d.crossings:
        uf.union(x.over_in, x.over_out)
    groups = sorted(uf.classes().values(), key=min)
    return groups


def wirtinger(d: PlanarDiagram) -> GroupPresentation:
    """One generator per strand and free loop; one relator per crossing and vertex.

    At a crossing of sign e the relation is u_out = o^e u_in o^-e.  At a vertex
    the meridians are multiplied counterclockwise, incoming ones with exponent
    +1 and outgoing ones with -1.
    """
    if d.intersections:
        raise UnresolvedDiagram(f"{len(d.intersections)} unresolved intersections remain")
    report = validate(d)
    if not report.ok:
        raise ValueError("invalid diagram: " + "; ".join(report.violations))
    groups = strands(d)
    gen = {}
    for k, g in enumerate(groups):
        for lab in g:
            gen[lab] = k
    rels = []
    for x in d.crossings:
        o = gen[x.over_in]
        e = x.sign
        rels.append((letter(o, e), letter(gen[x.under_in]), letter(o, -e),
                     letter(gen[x.under_out], -1)))
    for v in d.vertices:
        rels.append(tuple(letter(gen[lab], 1 if not outgoing else -1)
                          for lab, outgoing in v.slots))
    names = tuple(f"x{k + 1}" for k in range(len(groups) + d.free_loops))
    return GroupPresentation(len(groups) + d.free_loops, tuple(rels), names)
