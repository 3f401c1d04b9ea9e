"""Turn a spatial graph made of 3D polylines into a planar diagram.

The graph is given as open polylines ("pieces").  Piece ends meeting at a
point of degree two are joined; points of degree three become trivalent
vertices.  A piece whose two ends coincide with nothing else is a closed
curve.

Points project along the direction ``(-tilt, -slope, 1)`` to
``(x + tilt * z, y + slope * z)``, so two points over one another differ only
in ``z``, and larger ``z`` is over.  Both tilts are nonzero so that no
direction in a horizontal or vertical coordinate plane projects to a point.
Two projected segments that cross at equal depth are a genuine intersection
in space and become an unresolved intersection.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .diagram import Crossing, Intersection, PlanarDiagram, TrivalentVertex, renormalize

SLOPE = 0.3183098861837907
TILT = 0.0917517095361369
_EPS = 1e-9


class DegenerateProjection(ArithmeticError):
    pass


@dataclass
class _Curve:
    pts: np.ndarray          # (n, 3)
    tag: int                 # pieces with equal tags belong to one named part
    start: int | None        # vertex index, None for a closed curve
    end: int | None


def _key(p) -> tuple:
    return tuple(np.round(np.asarray(p, dtype=float), 7))


def _assemble(pieces: list[tuple[np.ndarray, int]]):
    """Join pieces at degree-two points; return curves and vertex points."""
    ends: dict[tuple, list[tuple[int, int]]] = {}
    for k, (pts, _) in enumerate(pieces):
        ends.setdefault(_key(pts[0]), []).append((k, 0))
        ends.setdefault(_key(pts[-1]), []).append((k, 1))
    vertex_keys = [key for key, lst in ends.items() if len(lst) == 3]
    for key, lst in ends.items():
        if len(lst) not in (2, 3):
            raise ValueError(f"point {key} has degree {len(lst)}")
    vid = {key: i for i, key in enumerate(vertex_keys)}
    used = [False] * len(pieces)
    curves = []

    def other(key, k, side):
        for kk, ss in ends[key]:
            if (kk, ss) != (k, side):
                return kk, ss
        raise AssertionError

    # open curves start at vertices
    for key in vertex_keys:
        for k, side in ends[key]:
            if used[k]:
                continue
            chain, tag = [], pieces[k][1]
            cur, cs = k, side
            while True:
                used[cur] = True
                pts = pieces[cur][0] if cs == 0 else pieces[cur][0][::-1]
                chain.append(pts if not chain else pts[1:])
                far = _key(pts[-1])
                if far in vid:
                    break
                cur, cs = other(far, cur, 1 - cs)
                if pieces[cur][1] != tag:
                    raise ValueError("a chain mixes pieces of different parts")
            curves.append(_Curve(np.vstack(chain), tag, vid[key], vid[far]))
    # closed curves
    for k in range(len(pieces)):
        if used[k]:
            continue
        chain, tag = [], pieces[k][1]
        cur, cs = k, 0
        start_key = _key(pieces[k][0][0])
        while True:
            used[cur] = True
            pts = pieces[cur][0] if cs == 0 else pieces[cur][0][::-1]
            chain.append(pts if not chain else pts[1:])
            far = _key(pts[-1])
            if far == start_key:
                break
            cur, cs = other(far, cur, 1 - cs)
        curves.append(_Curve(np.vstack(chain), tag, None, None))
    return curves, [np.array(key) for key in vertex_keys]


def _segments(curves):
    segs = []
    for ci, c in enumerate(curves):
        for si in range(len(c.pts) - 1):
            segs.append((ci, si))
    return segs


def _edge_order(items):
    """Order intersections so that on every edge they appear in position order.

    ``items`` are ``(edge a, position on a, edge b, position on b, handedness)``.
    """
    after: dict[int, set[int]] = {k: set() for k in range(len(items))}
    along: dict[int, list[tuple[float, int]]] = {}
    for k, (la, pa, lb, pb, _) in enumerate(items):
        along.setdefault(la, []).append((pa, k))
        along.setdefault(lb, []).append((pb, k))
    for seq in along.values():
        seq.sort()
        for (_, k0), (_, k1) in zip(seq, seq[1:]):
            after[k0].add(k1)
    indeg = {k: 0 for k in after}
    for k in after:
        for m in after[k]:
            indeg[m] += 1
    ready = sorted(k for k, c in indeg.items() if c == 0)
    out = []
    while ready:
        k = ready.pop(0)
        out.append(items[k])
        for m in sorted(after[k]):
            indeg[m] -= 1
            if indeg[m] == 0:
                ready.append(m)
        ready.sort()
    if len(out) != len(items):
        raise DegenerateProjection("intersections on an edge pair are not consistently ordered")
    return out


def project_graph(pieces: list[tuple[np.ndarray, int]], slope: float = SLOPE,
                  tilt: float = TILT):
    """Build a planar diagram from tagged polylines.

    Returns the diagram and, for every edge label, the tag of the part it
    lies on.  Knot pieces should be oriented consistently; a tunnel piece
    may point either way.  Unresolved intersections list the edge of the
    lower tag first.
    """
    curves, vpts = _assemble(pieces)
    segs = _segments(curves)
    P0 = np.array([curves[c].pts[s] for c, s in segs])
    P1 = np.array([curves[c].pts[s + 1] for c, s in segs])

    def proj(P):
        return np.stack([P[:, 0] + tilt * P[:, 2], P[:, 1] + slope * P[:, 2]], axis=1)

    A, B = proj(P0), proj(P1)
    D = B - A
    n = len(segs)
    events = {ci: [] for ci in range(len(curves))}   # ci -> list of (param, event id, role)
    crossings_raw = []
    lo = np.minimum(A, B)
    hi = np.maximum(A, B)
    block = 512
    for i0 in range(0, n, block):
        i1 = min(n, i0 + block)
        # candidate pairs by bounding boxes, i < j
        ov = ((lo[i0:i1, None, 0] <= hi[None, :, 0]) & (lo[None, :, 0] <= hi[i0:i1, None, 0]) &
              (lo[i0:i1, None, 1] <= hi[None, :, 1]) & (lo[None, :, 1] <= hi[i0:i1, None, 1]))
        ii, jj = np.nonzero(ov)
        ii = ii + i0
        keep = jj > ii
        for i, j in zip(ii[keep], jj[keep]):
            ci, si = segs[i]
            cj, sj = segs[j]
            if ci == cj and abs(si - sj) <= 1:
                continue
            if ci == cj and curves[ci].start is None and {si, sj} == {0, len(curves[ci].pts) - 2}:
                continue
            den = D[i, 0] * D[j, 1] - D[i, 1] * D[j, 0]
            r = A[j] - A[i]
            if abs(den) < 1e-14:
                continue
            t = (r[0] * D[j, 1] - r[1] * D[j, 0]) / den
            u = (r[0] * D[i, 1] - r[1] * D[i, 0]) / den
            if t < -_EPS or t > 1 + _EPS or u < -_EPS or u > 1 + _EPS:
                continue
            at_i_end = t < _EPS or t > 1 - _EPS
            at_j_end = u < _EPS or u > 1 - _EPS
            if at_i_end and at_j_end:
                # segments sharing an end point: only legitimate at a vertex
                pi = P0[i] if t < 0.5 else P1[i]
                if any(np.allclose(pi, v, atol=1e-7) for v in vpts):
                    continue
            if at_i_end or at_j_end:
                raise DegenerateProjection("a crossing falls on a polyline sample point")
            Qi = P0[i] + t * (P1[i] - P0[i])
            Qj = P0[j] + u * (P1[j] - P0[j])
            di, dj = Qi[2], Qj[2]
            cross = D[i, 0] * D[j, 1] - D[i, 1] * D[j, 0]
            eid = len(crossings_raw)
            if abs(di - dj) < 1e-9:
                if np.linalg.norm(Qi - Qj) > 1e-6:
                    raise DegenerateProjection("equal depth without a spatial intersection")
                crossings_raw.append(("I", i, j, cross))
            else:
                if abs(di - dj) < 1e-6:
                    raise DegenerateProjection("crossing with nearly equal depths")
                over_i = di > dj
                crossings_raw.append(("X", i, j, cross, over_i))
            events[ci].append((si + t, eid, "a"))
            events[cj].append((sj + u, eid, "b"))
    # every crossing splits both curves; unresolved intersections do not
    edge_tag = {}
    ends_at = {eid: {} for eid in range(len(crossings_raw))}
    vertex_ends = {v: [] for v in range(len(vpts))}
    next_label = 1
    free_loops = 0
    for ci, c in enumerate(curves):
        evs = sorted(events[ci])
        splits = [e for e in evs if crossings_raw[e[1]][0] == "X"]
        if c.start is None and not splits:
            if any(crossings_raw[e[1]][0] == "I" for e in evs):
                raise DegenerateProjection("unresolved intersection on a free loop")
            free_loops += 1
            continue
        npieces = len(splits) + (1 if c.start is not None else 0)
        base = next_label
        next_label += npieces
        for k in range(npieces):
            edge_tag[base + k] = c.tag
        # open curves: piece k ends at split k; closed: piece k starts at split k
        for k, (_, eid, role) in enumerate(splits):
            if c.start is None:
                ends_at[eid][role] = (base + (k - 1) % npieces, base + k)
            else:
                ends_at[eid][role] = (base + k, base + k + 1)
        if c.start is not None:
            vertex_ends[c.start].append((base, True, c.pts[1] - c.pts[0]))
            vertex_ends[c.end].append((base + npieces - 1, False, c.pts[-2] - c.pts[-1]))
        # labels for unresolved intersections
        for param, eid, role in evs:
            if crossings_raw[eid][0] != "I":
                continue
            k = sum(1 for s in splits if s[0] < param)
            lab = base + k if c.start is not None else base + (k - 1) % npieces
            ends_at[eid][role] = (lab, param)
    crossings, inters_by_edge = [], []
    for eid, raw in enumerate(crossings_raw):
        if raw[0] == "X":
            _, i, j, cross, over_i = raw
            a_in, a_out = ends_at[eid]["a"]
            b_in, b_out = ends_at[eid]["b"]
            if over_i:
                u_in, u_out, o_in, o_out = b_in, b_out, a_in, a_out
                du, do = D[j], D[i]
            else:
                u_in, u_out, o_in, o_out = a_in, a_out, b_in, b_out
                du, do = D[i], D[j]
            c = du[0] * do[1] - du[1] * do[0]
            if c < 0:
                crossings.append(Crossing(1, (u_in, o_out, u_out, o_in)))
            else:
                crossings.append(Crossing(-1, (u_in, o_in, u_out, o_out)))
        else:
            _, i, j, cross = raw
            la, pa = ends_at[eid]["a"]
            lb, pb = ends_at[eid]["b"]
            ta, tb = edge_tag[la], edge_tag[lb]
            if ta > tb:
                la, lb, pa, pb, cross = lb, la, pb, pa, -cross
            inters_by_edge.append((la, pa, lb, pb, 1 if cross > 0 else -1))
    # order intersections along their first edge, then check the second
    inters_by_edge.sort(key=lambda r: (r[0], r[1]))
    inters = [Intersection(la, lb, h) for la, pa, lb, pb, h in _edge_order(inters_by_edge)]
    vertices = []
    for v in range(len(vpts)):
        ends = vertex_ends[v]
        if len(ends) != 3:
            raise AssertionError("vertex degree")
        ends.sort(key=lambda e: math.atan2(e[2][1] + slope * e[2][2], e[2][0] + tilt * e[2][2]))
        vertices.append(TrivalentVertex(tuple((lab, out) for lab, out, _ in ends)))
    d = PlanarDiagram(tuple(crossings), tuple(vertices), free_loops, tuple(inters))
    # keep tags through renormalization
    order = {}
    for lab in _first_appearance(d):
        order[lab] = len(order) + 1
    tags = {order[lab]: t for lab, t in edge_tag.items() if lab in order}
    return renormalize(d), tags


def _first_appearance(d: PlanarDiagram):
    seen = []
    for x in d.crossings:
        for s in x.slots:
            if s not in seen:
                seen.append(s)
    for v in d.vertices:
        for s in v.labels:
            if s not in seen:
                seen.append(s)
    return seen
