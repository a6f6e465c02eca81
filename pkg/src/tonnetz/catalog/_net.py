"""Glue a doubly periodic planar net into a torus.

Points are integer pairs in some affine picture of the plane with
positive orientation (x to the right, y upwards).  A point is reduced to
the half-open fundamental parallelogram of the period lattice; a directed
edge is remembered as (reduced start, displacement), which keeps parallel
edges and loops apart.  Faces are traced from the cyclic order of edges
around each vertex, so only segments need to be transcribed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from ..complex import SimplicialSurface

Point = tuple


class Lattice:
    def __init__(self, u: Point, v: Point) -> None:
        self.u, self.v = tuple(u), tuple(v)
        self.det = u[0] * v[1] - u[1] * v[0]
        if self.det == 0:
            raise ValueError("period vectors are parallel")

    def coords(self, p: Point):
        (a, b), (c, d) = self.u, self.v
        x, y = p
        s = Fraction(x * d - y * c, self.det)
        t = Fraction(a * y - b * x, self.det)
        return s, t

    def reduce(self, p: Point) -> Point:
        s, t = self.coords(p)
        fs, ft = math.floor(s), math.floor(t)
        return (p[0] - fs * self.u[0] - ft * self.v[0], p[1] - fs * self.u[1] - ft * self.v[1])

    def translate(self, p: Point, a: int, b: int) -> Point:
        return (p[0] + a * self.u[0] + b * self.v[0], p[1] + a * self.u[1] + b * self.v[1])

    def contains(self, d: Point) -> bool:
        s, t = self.coords(d)
        return s.denominator == 1 and t.denominator == 1


def _sub(p, q):
    return (p[0] - q[0], p[1] - q[1])


def _add(p, q):
    return (p[0] + q[0], p[1] + q[1])


def _neg(d):
    return (-d[0], -d[1])


@dataclass
class GluedNet:
    lattice: Lattice
    surface: SimplicialSurface
    points: list  # canonical point of each vertex
    triangles: list  # one planar triangle (corner points in face order) per face
    half_edges: dict  # (canonical start, displacement) -> (edge index, slot of start)
    left_face: dict  # (canonical start, displacement) -> (face index, edge slot)

    def vertex_at(self, p: Point) -> int:
        return self.points.index(self.lattice.reduce(p))

    def edge_at(self, p: Point, q: Point):
        """Edge index of the planar segment p-q and the slot of p on it."""
        return self.half_edges[(self.lattice.reduce(p), _sub(q, p))]

    def face_left_of(self, p: Point, q: Point):
        """Face index and edge slot of the triangle to the left of p -> q."""
        return self.left_face[(self.lattice.reduce(p), _sub(q, p))]


def glue(
    segments,
    lattice: Lattice,
    names: Optional[dict] = None,
    default_name: Optional[Callable[[Point], str]] = None,
    face_prefix: str = "f",
    edge_prefix: str = "e",
) -> GluedNet:
    """Quotient the segments by the lattice and trace the triangles."""
    names = {lattice.reduce(p): n for p, n in (names or {}).items()}
    default_name = default_name or (lambda p: f"v{p[0]}_{p[1]}")

    rot = {}
    for p, q in segments:
        d = _sub(q, p)
        rot.setdefault(lattice.reduce(p), set()).add(d)
        rot.setdefault(lattice.reduce(q), set()).add(_neg(d))
    points = sorted(rot)
    order = {v: sorted(ds, key=lambda d: math.atan2(d[1], d[0])) for v, ds in rot.items()}

    def twin(h):
        v, d = h
        return (lattice.reduce(_add(v, d)), _neg(d))

    # edges: one per pair of twin half-edges
    keys = sorted({min(h, twin(h)) for v in points for h in ((v, d) for d in order[v])})
    half_edges = {}
    edges = []
    for i, h in enumerate(keys):
        t = twin(h)
        a, b = points.index(h[0]), points.index(t[0])
        edges.append((a, b))
        half_edges[h] = (i, 0)
        half_edges[t] = (i, 1) if t != h else (i, 0)

    def next_half(h):
        w, back = twin(h)
        ring = order[w]
        return (w, ring[(ring.index(back) - 1) % len(ring)])

    faces, triangles, left_face = [], [], {}
    seen = set()
    for h0 in sorted(half_edges):
        if h0 in seen:
            continue
        cycle = [h0]
        h = next_half(h0)
        while h != h0:
            cycle.append(h)
            if len(cycle) > 3:
                break
            h = next_half(h)
        if len(cycle) != 3:
            raise ValueError(f"region at {h0} is not a triangle; the net is incomplete")
        j = len(faces)
        faces.append(tuple(half_edges[x][0] for x in cycle))
        pos = [h0[0]]
        for _, d in cycle[:-1]:
            pos.append(_add(pos[-1], d))
        # corner k sits between slots k-1 and k, i.e. at the start of half-edge k
        triangles.append(pos)
        for slot, x in enumerate(cycle):
            seen.add(x)
            left_face[x] = (j, slot)

    surface = SimplicialSurface(
        vertex_names=tuple(names.get(p, default_name(p)) for p in points),
        edges=tuple(edges),
        faces=tuple(faces),
        edge_names=tuple(f"{edge_prefix}{i}" for i in range(len(edges))),
        face_names=tuple(f"{face_prefix}{j}" for j in range(len(faces))),
    )
    return GluedNet(lattice, surface, points, triangles, half_edges, left_face)


def inside(poly, p) -> bool:
    """Even-odd test, exact in rationals; points on the boundary are outside."""
    x, y = p
    hit = False
    n = len(poly)
    for i in range(n):
        (x1, y1), (x2, y2) = poly[i], poly[(i + 1) % n]
        if (y1 > y) != (y2 > y):
            xc = Fraction(x2 - x1) * Fraction(y - y1, y2 - y1) + x1
            if xc > x:
                hit = not hit
    return hit


def place_in_domain(net: GluedNet, domain, reach: int = 4) -> list:
    """Translate each traced triangle so its centroid lies in ``domain``."""
    out = []
    for tri in net.triangles:
        cx = Fraction(sum(p[0] for p in tri), 3)
        cy = Fraction(sum(p[1] for p in tri), 3)
        for a in range(-reach, reach + 1):
            for b in range(-reach, reach + 1):
                shift = net.lattice.translate((0, 0), a, b)
                if inside(domain, (cx + shift[0], cy + shift[1])):
                    out.append([_add(p, shift) for p in tri])
                    break
            else:
                continue
            break
        else:
            raise ValueError(f"no translate of triangle {tri} lies in the domain")
    return out
