"""Two-bridge knots as 4-plats, and unknotting tunnels on the bridge sphere.

The continued fraction ``[a1, ..., ak]`` gives the plat closure of the braid
``s2^a1 s1^-a2 s2^a3 ...`` on four strands, where ``s1`` twists positions 0
and 1 and ``s2`` twists positions 1 and 2.  Caps join positions (0, 1) and
(2, 3) at the top.  At the bottom, cups join (0, 1) and (2, 3) when k is odd
and nest as (1, 2) inside (0, 3) when k is even.

The bridge sphere is the horizontal level between the caps and the braid;
the knot meets it in four punctures.  A tunnel is an arc in that level joining
two punctures.  A tunnel may be specified lower down the braid and is then
slid up along the knot into the level, which is an isotopy of the tunnel.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import pillowcase
from .diagram import PlanarDiagram, validate
from .projection import SLOPE, DegenerateProjection, project_graph

ROW_SAMPLES = 16
PHASE = 0.381966


class InvalidContinuedFraction(ValueError):
    pass


@dataclass(frozen=True)
class ContinuedFraction:
    terms: tuple[int, ...]

    def __post_init__(self):
        terms = tuple(int(a) for a in self.terms)
        object.__setattr__(self, "terms", terms)
        if not terms:
            raise InvalidContinuedFraction("continued fraction needs at least one term")
        if any(a == 0 for a in terms):
            raise InvalidContinuedFraction(f"zero term in {list(terms)}")

    @classmethod
    def parse(cls, text: str) -> "ContinuedFraction":
        try:
            return cls(tuple(int(t) for t in text.replace(",", " ").split()))
        except ValueError as e:
            raise InvalidContinuedFraction(str(e)) from None


def _as_cf(cf) -> ContinuedFraction:
    return cf if isinstance(cf, ContinuedFraction) else ContinuedFraction(tuple(cf))


def cf_to_fraction(cf) -> Fraction:
    """Evaluate a1 + 1/(a2 + 1/(... + 1/ak)) exactly.

    Intermediate tails may vanish; the value is computed from the convergent
    matrices so that 1/0 is treated as infinity along the way.
    """
    terms = _as_cf(cf).terms
    p, q, p0, q0 = 1, 0, 0, 1
    for a in terms:
        p, q, p0, q0 = a * p + p0, a * q + q0, p, q
    if q == 0:
        raise InvalidContinuedFraction(f"{list(terms)} evaluates to infinity")
    return Fraction(p, q)


def plat_braid(cf) -> list[tuple[int, int]]:
    """Braid word as (left position, +1 or -1) pairs, top to bottom.

    A +1 letter sends the strand on the left over the one on the right.
    """
    terms = cf.terms if isinstance(cf, ContinuedFraction) else tuple(cf)
    word = []
    for k, a in enumerate(terms):
        pos = 1 if k % 2 == 0 else 0
        sign = 1 if k % 2 == 0 else -1
        e = sign * (1 if a > 0 else -1)
        word.extend([(pos, e)] * abs(a))
    return word


@dataclass(frozen=True)
class TunnelSpec:
    """An unknotting tunnel put on the bridge sphere.

    ``positions`` are two strand positions at braid level ``level``, counted
    in twist regions from the top; ``None`` means the top for an upper
    tunnel and the bottom for a lower one.  The arc joins the two strands
    there and is slid up into the bridge level.  ``side`` says which ball the
    tunnel's ends lean into.
    """
    side: str
    positions: tuple[int, int]
    level: int | None = None
    bend: int = 1   # for non-adjacent positions: pass above (+1) or below (-1)

    def __post_init__(self):
        if self.side not in ("upper", "lower"):
            raise ValueError(f"side must be upper or lower, got {self.side!r}")
        i, j = self.positions
        if i == j or not (0 <= i < 4 and 0 <= j < 4):
            raise ValueError(f"bad tunnel positions {self.positions}")
        if self.bend not in (1, -1):
            raise ValueError(f"bend must be +1 or -1, got {self.bend}")


def default_tunnels(cf) -> list[TunnelSpec]:
    """The standard pair: one tunnel joining the two caps, one joining the two cups.

    The upper tunnel runs from strand 1 to strand 3 just above the top
    crossings and the lower one from strand 0 to strand 2 just below the
    bottom crossings, each passing in front of the strand between its ends.
    For 6_3 = [2, 1, 1, 2] these positions meet in exactly two points of the
    bridge sphere.
    """
    _as_cf(cf)
    return [TunnelSpec("upper", (1, 3)), TunnelSpec("lower", (0, 2))]


def tunnel_arc(cf, spec: TunnelSpec) -> pillowcase.Arc:
    """The tunnel as a straight arc between punctures of the bridge level."""
    terms = _as_cf(cf).terms
    level = spec.level
    if level is None:
        level = 0 if spec.side == "upper" else len(terms)
    if not 0 <= level <= len(terms):
        raise ValueError(f"tunnel level {level} outside 0..{len(terms)}")
    i, j = spec.positions
    arc = pillowcase.straight_arc(i, j, spec.bend)
    above = plat_braid(terms[:level])
    for pos, e in reversed(above):
        # moving up through a crossing undoes its clockwise-downward turn
        arc = pillowcase.half_twist(arc, pos, ccw=(e > 0))
    return arc


# --- 3D model --------------------------------------------------------------

def _vertical(x, y0, y1):
    return np.array([[x, y0, 0.0], [x, y1, 0.0]])


def _semicircle(x0, x1, y, up: bool, n=24):
    c, r = (x0 + x1) / 2, abs(x1 - x0) / 2
    th = (np.arange(n) + PHASE) / n * math.pi
    pts = [[x0, y, 0.0]]
    for t in th:
        pts.append([c - r * math.cos(t) * np.sign(x1 - x0), y + (r if up else -r) * math.sin(t), 0.0])
    pts.append([x1, y, 0.0])
    return np.array(pts)


def _knot_pieces(terms, band: float, eps: float):
    """Polylines of the plat, split at the bridge level attachment heights."""
    pieces = []
    top = band
    for i in range(4):
        pieces.append(_vertical(i, top, eps))
        pieces.append(_vertical(i, eps, -eps))
        pieces.append(_vertical(i, -eps, -band))
    pieces.append(_semicircle(0, 1, top, True))
    pieces.append(_semicircle(2, 3, top, True))
    y = -band
    for pos, e in plat_braid(terms):
        for x in range(4):
            if x not in (pos, pos + 1):
                pieces.append(_vertical(x, y, y - 1))
        c = pos + 0.5
        s = (np.arange(ROW_SAMPLES) + PHASE) / ROW_SAMPLES
        for start in (pos, pos + 1):
            th0 = math.pi if start == pos else 0.0
            # +1 letters turn clockwise going down, -1 letters counterclockwise
            th = th0 - e * math.pi * s
            mid = np.stack([c + 0.5 * np.cos(th), y - s, 0.5 * np.sin(th)], axis=1)
            end = pos + 1 if start == pos else pos
            pieces.append(np.vstack([[start, y, 0.0], mid, [end, y - 1, 0.0]]))
        y -= 1
    if len(terms) % 2 == 1:
        pieces.append(_semicircle(0, 1, y, False))
        pieces.append(_semicircle(2, 3, y, False))
    else:
        pieces.append(_semicircle(1, 2, y, False))
        pieces.append(_semicircle(0, 3, y, False, n=48))
    return pieces


def _tunnel_polyline(xz: np.ndarray, start: int, end: int, height: float) -> np.ndarray:
    mid = np.stack([xz[1:-1, 0], np.zeros(len(xz) - 2), xz[1:-1, 1]], axis=1)
    return np.vstack([[start, height, 0.0], mid, [end, height, 0.0]])


def _layout(polys):
    zmax = max([np.abs(p[:, 1]).max() for p in polys], default=0.5)
    # smallest height at which an arc passes a puncture
    zmin = 1.0
    for p in polys:
        for k in range(1, len(p) - 2):
            x0, x1 = p[k, 0], p[k + 1, 0]
            for j in range(4):
                if (x0 - j) * (x1 - j) < 0:
                    t = (j - x0) / (x1 - x0)
                    zmin = min(zmin, abs(p[k, 1] + t * (p[k + 1, 1] - p[k, 1])))
    band = SLOPE * zmax + 0.75
    eps = 0.3 * SLOPE * zmin
    return band, eps


def _build(terms, arcs_with_side, max_step: float = 0.02, retries: int = 3):
    """Project the plat with tunnels lying in the bridge level.

    Tunnel arcs are drawn as polylines, so the number of tunnel-tunnel
    intersections in the picture is checked against the exact count on the
    pillowcase; on a mismatch the arcs are sampled more finely.
    """
    arcs = [a for a, _ in arcs_with_side]
    expected = {(i, j): pillowcase.intersections(arcs[i], arcs[j])
                for i in range(len(arcs)) for j in range(i + 1, len(arcs))}
    for _ in range(retries + 1):
        polys = [pillowcase.realize(a, max_step=max_step) for a in arcs]
        band, eps = _layout(polys)
        pieces = [(p, 0) for p in _knot_pieces(terms, band, eps)]
        for tag, ((arc, side), xz) in enumerate(zip(arcs_with_side, polys), 1):
            h = eps if side == "upper" else -eps
            pieces.append((_tunnel_polyline(xz, arc.start, arc.end, h), tag))
        d, tags = project_graph(pieces)
        found = {key: 0 for key in expected}
        for it in d.intersections:
            i, j = sorted((tags[it.a] - 1, tags[it.b] - 1))
            found[(i, j)] = found.get((i, j), 0) + 1
        if found == expected:
            return d, tags
        max_step /= 4
    raise DegenerateProjection("tunnel intersections in the picture disagree with the exact count")


def two_bridge_plat(cf) -> PlanarDiagram:
    cf = _as_cf(cf)
    d, _ = _build(cf.terms, [])
    return PlanarDiagram(d.crossings, d.vertices, d.free_loops, d.intersections, cf.terms)


def attach_tunnels(d: PlanarDiagram, specs: Sequence[TunnelSpec] | None = None) -> PlanarDiagram:
    """Add tunnels to a plat diagram.

    Tunnels sharing a side must be disjoint on the bridge sphere.  Where an
    upper and a lower tunnel meet there, the diagram records an unresolved
    intersection, upper tunnel edge first.
    """
    if d.plat is None:
        raise ValueError("attach_tunnels needs a diagram generated from a continued fraction")
    if d.crossings and not validate(d).ok:
        raise ValueError("invalid diagram")
    if specs is None:
        specs = default_tunnels(d.plat)
    specs = sorted(specs, key=lambda s: s.side != "upper")
    seen = set()
    for s in specs:
        for p in s.positions:
            if (s.side, p) in seen:
                raise ValueError(f"two {s.side} tunnels attach at position {p}")
            seen.add((s.side, p))
    arcs = [(tunnel_arc(d.plat, s), s.side) for s in specs]
    g, tags = _build(d.plat, arcs)
    for it in g.intersections:
        if specs[tags[it.a] - 1].side == specs[tags[it.b] - 1].side:
            raise ValueError("tunnels on the same side intersect")
    return PlanarDiagram(g.crossings, g.vertices, g.free_loops, g.intersections, d.plat)
