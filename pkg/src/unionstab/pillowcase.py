"""Arcs on the four-punctured bridge sphere, drawn straight on a flat pillowcase.

The pillowcase is R^2 modulo the group generated by translations by 2 in
each coordinate and the point reflection (x, y) -> (-x, -y).  Integer points
are its four corners, which are the punctures: (0,0), (1,0), (1,1), (0,1) are
punctures 0, 1, 2, 3 of the bridge level, in that order along the axis.

An arc between punctures is a straight segment between integer points with
no integer point inside.  Straight arcs meet one another minimally, so
counting their intersections needs no further tightening.

Braid half-twists act by integer affine maps.  The pillowcase is mapped
onto the plane of the bridge level by a homeomorphism: the front face
[0,1]x[0,1] onto the upper half-plane and the back face [1,2]x[0,1] onto the
lower one, with the four edges going to the axis intervals [0,1], [1,2],
[2,3] and the outside.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

PUNCTURE_POINT = {0: (0, 0), 1: (1, 0), 2: (1, 1), 3: (0, 1)}
# plane coordinates are squeezed radially beyond this distance from the middle
_CENTER = 1.5
_KNEE = 2.5
_LIMIT = 5.0
SEAM_OFFSET = 0.05
# the point of the outside seam sent to infinity; badly approximable by
# rationals so that no short straight arc passes close to it
_AT_INFINITY = (math.sqrt(5) - 1) / 2


def puncture_of(p) -> int:
    x, y = int(p[0]) % 2, int(p[1]) % 2
    return {(0, 0): 0, (1, 0): 1, (1, 1): 2, (0, 1): 3}[(x, y)]


@dataclass(frozen=True)
class Arc:
    """Straight arc from integer point ``p`` to integer point ``q``."""
    p: tuple[int, int]
    q: tuple[int, int]

    def __post_init__(self):
        dx, dy = self.q[0] - self.p[0], self.q[1] - self.p[1]
        if math.gcd(dx, dy) != 1:
            raise ValueError(f"arc {self.p}->{self.q} passes through a puncture")

    @property
    def start(self) -> int:
        return puncture_of(self.p)

    @property
    def end(self) -> int:
        return puncture_of(self.q)

    @property
    def direction(self) -> tuple[int, int]:
        return (self.q[0] - self.p[0], self.q[1] - self.p[1])

    def slope(self) -> str:
        dx, dy = self.direction
        if dx < 0 or (dx == 0 and dy < 0):
            dx, dy = -dx, -dy
        return "inf" if dx == 0 else f"{dy}/{dx}"


def straight_arc(i: int, j: int, side: int = 1) -> Arc:
    """The arc from puncture i to puncture j in the bridge level.

    Adjacent punctures are joined along the axis.  Otherwise the arc runs
    through the upper (side +1) or lower (side -1) half-plane.
    """
    if i == j or not (0 <= i < 4 and 0 <= j < 4):
        raise ValueError(f"bad puncture pair ({i}, {j})")
    lo, hi = min(i, j), max(i, j)
    table = {
        (0, 1): ((0, 0), (1, 0)),
        (1, 2): ((1, 0), (1, 1)),
        (2, 3): ((1, 1), (0, 1)),
        (0, 3): ((0, 0), (0, 1)),
        (0, 2): ((0, 0), (1, 1)) if side > 0 else ((2, 0), (1, 1)),
        (1, 3): ((1, 0), (0, 1)) if side > 0 else ((1, 0), (2, 1)),
    }
    p, q = table[(lo, hi)]
    return Arc(p, q) if i == lo else Arc(q, p)


def _affine(arc: Arc, m, t) -> Arc:
    def f(pt):
        x, y = pt
        return (m[0][0] * x + m[0][1] * y + t[0], m[1][0] * x + m[1][1] * y + t[1])
    return Arc(f(arc.p), f(arc.q))


def half_twist(arc: Arc, pos: int, ccw: bool) -> Arc:
    """Image of ``arc`` under the half-twist exchanging punctures pos, pos+1.

    ``ccw`` turns the pair counterclockwise in the plane of the bridge level.
    """
    s = 1 if ccw else -1
    if pos == 0:
        return _affine(arc, ((1, s), (0, 1)), (1, 0))
    if pos == 1:
        return _affine(arc, ((1, 0), (-s, 1)), (0, 0))
    if pos == 2:
        return _affine(arc, ((1, s), (0, 1)), (0, 0))
    raise ValueError(f"twist position {pos} out of range")


def intersections(a: Arc, b: Arc) -> int:
    """Interior intersection points of two straight arcs on the pillowcase.

    The torus R^2 / 2Z^2 double covers the pillowcase, and each arc lifts to
    two segments there, ``a`` and its point reflection.  Every interior
    intersection on the pillowcase has exactly two preimages, one on each
    lift of ``a``, so counting intersections of one lift of ``b`` with both
    lifts of ``a`` counts each point once.  Exact integer arithmetic.
    """
    (dax, day), (dbx, dby) = a.direction, b.direction
    det = dax * dby - day * dbx
    if det == 0:
        return 0
    count = 0
    for px, py, dx, dy in ((a.p[0], a.p[1], dax, day), (-a.p[0], -a.p[1], -dax, -day)):
        d = dx * dby - dy * dbx
        # pb + u db + 2k = pa + s da; the translations 2k with overlapping boxes
        xs = sorted((px, px + dx))
        ys = sorted((py, py + dy))
        bx = sorted((b.p[0], b.p[0] + dbx))
        by = sorted((b.p[1], b.p[1] + dby))
        for kx in range((xs[0] - bx[1]) // 2 - 1, (xs[1] - bx[0]) // 2 + 2):
            for ky in range((ys[0] - by[1]) // 2 - 1, (ys[1] - by[0]) // 2 + 2):
                rx = b.p[0] + 2 * kx - px
                ry = b.p[1] + 2 * ky - py
                sn = rx * dby - ry * dbx      # s = sn / d
                un = rx * dy - ry * dx        # u = un / d
                if d < 0:
                    sn, un = -sn, -un
                if 0 < sn < abs(d) and 0 < un < abs(d):
                    count += 1
    return count


# --- drawing ----------------------------------------------------------------

def _edge_to_axis(v: np.ndarray) -> np.ndarray:
    """Axis coordinate of the boundary point in direction ``v`` from the centre."""
    vx, vy = v[..., 0], v[..., 1]
    m = np.maximum(np.abs(vx), np.abs(vy))
    bx, by = 0.5 + vx / (2 * m), 0.5 + vy / (2 * m)
    out = np.empty_like(bx)
    bottom = (np.abs(vy) >= np.abs(vx)) & (vy < 0)
    top = (np.abs(vy) >= np.abs(vx)) & (vy > 0)
    right = (np.abs(vx) > np.abs(vy)) & (vx > 0)
    left = ~(bottom | top | right)
    out[bottom] = bx[bottom]
    out[right] = 1 + by[right]
    out[top] = 3 - bx[top]
    u = 1 - by[left]
    with np.errstate(divide="ignore"):
        out[left] = np.where(u < _AT_INFINITY, 3 + u / (_AT_INFINITY - u),
                             -(1 - u) / (u - _AT_INFINITY))
    return out


def _square_to_plane(s: np.ndarray, t: np.ndarray) -> np.ndarray:
    v = np.stack([s - 0.5, t - 0.5], axis=-1)
    r = 2 * np.maximum(np.abs(v[..., 0]), np.abs(v[..., 1]))
    safe = np.where(r[..., None] > 0, v, np.array([1e-9, 0.0]))
    x_b = _edge_to_axis(safe)
    # boundary angle whose Cayley image is x_b; the face centre goes to
    # a point above the middle of the axis, away from the strands
    psi = np.pi + 2 * np.arctan(x_b - _CENTER)
    w = r * np.exp(1j * psi)
    z = _CENTER + 1j * (1 + w) / (1 - w)
    return np.stack([z.real, z.imag], axis=-1)


def _squeeze(pts: np.ndarray) -> np.ndarray:
    d = pts - np.array([_CENTER, 0.0])
    rho = np.hypot(d[:, 0], d[:, 1])
    far = rho > _KNEE
    scale = np.ones_like(rho)
    room = _LIMIT - _KNEE
    scale[far] = (_KNEE + room * np.tanh((rho[far] - _KNEE) / room)) / rho[far]
    return np.array([_CENTER, 0.0]) + d * scale[:, None]


def to_plane(xy: np.ndarray) -> np.ndarray:
    """Map pillowcase points (lifted to R^2) into the bridge-level plane."""
    x = np.mod(xy[:, 0], 2.0)
    y = np.mod(xy[:, 1], 2.0)
    flip = y > 1
    x = np.where(flip, np.mod(2 - x, 2.0), x)
    y = np.where(flip, 2 - y, y)
    back = x > 1
    s = np.where(back, 2 - x, x)
    pts = _square_to_plane(s, y)
    pts[back, 1] *= -1
    return _squeeze(pts)


def _lift(arc: Arc, ts: np.ndarray) -> np.ndarray:
    dx, dy = arc.direction
    xy = np.array(arc.p, float) + ts[:, None] * np.array([dx, dy], float)
    if dx == 0 or dy == 0:
        # the arc lies along a seam; push its interior a little off the seam
        bump = SEAM_OFFSET * np.sin(np.pi * ts)
        xy += bump[:, None] * np.array([-dy, dx], float)
    return to_plane(xy)


def realize(arc: Arc, max_step: float = 0.02, max_points: int = 200_000) -> np.ndarray:
    """Polyline in the (x, z) plane from one puncture to the other.

    Samples are refined until consecutive points are at most ``max_step``
    apart in the plane.
    """
    dx, dy = arc.direction
    n = max(60, int(50 * math.hypot(dx, dy)))
    # offsets keep samples off the grid lines, where the arc meets the axis
    ts = (np.arange(1, n) + 0.1234567) / (n + 0.3)
    while True:
        pts = _lift(arc, ts)
        full = np.vstack([[[float(arc.start), 0.0]], pts, [[float(arc.end), 0.0]]])
        gaps = np.hypot(*np.diff(full, axis=0).T)
        if gaps.max() <= max_step or len(ts) > max_points:
            return full
        # split every long gap between interior samples at its parameter midpoint
        bounds = np.concatenate([[0.0], ts, [1.0]])
        long = np.nonzero(gaps > max_step)[0]
        mids = (bounds[long] + bounds[long + 1]) / 2
        # keep the new samples off grid lines as well
        mids = mids + 1e-7 * (bounds[long + 1] - bounds[long])
        ts = np.sort(np.concatenate([ts, mids]))
