"""Turn the figure transcriptions into labelled surfaces plus drawing hints."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..coherence import Tonnetz, assemble_from_bijections, from_edge_map, from_vertex_map
from ..complex import SimplicialSurface, face_corners, tetrahedron
from ..pitch import PitchMultiset, parse_note
from . import figures as F
from ._net import GluedNet, Lattice, glue, place_in_domain

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class Built:
    tonnetz: Tonnetz
    layout: dict  # face name -> three (x, y) points in face-corner order
    quads: tuple = ()  # bauble only: (face, face, diagonal edge, corner)


def _layout(net: GluedNet, domain, scale) -> dict:
    s = net.surface
    out = {}
    for j, tri in enumerate(place_in_domain(net, domain)):
        by_vertex = {net.vertex_at(p): p for p in tri}
        corners = face_corners(s, j)
        out[s.face_names[j]] = tuple(_round(scale(by_vertex[c])) for c in corners)
    return out


def _round(p):
    return (round(float(p[0]), 4), round(float(p[1]), 4))


def _tri(p):
    """Doubled triangular-grid coordinates to an equilateral picture."""
    return (p[0] / 2, p[1] / 2 * SQRT3)


def _tri4(p):
    return (p[0] / 4, p[1] / 4 * SQRT3)


def _square(p):
    return (p[0] / 2, p[1] / 2)


def _edge_values(net: GluedNet, labelled_segments) -> list:
    """Edge notes from (p, q, note) segments, insisting that copies agree."""
    values = [None] * net.surface.count(1)
    for p, q, note in labelled_segments:
        i, _ = net.edge_at(p, q)
        pc = parse_note(note)
        if values[i] is not None and values[i] != pc:
            raise ValueError(f"edge {net.surface.edge_names[i]} drawn as both {values[i]} and {pc} at {p}-{q}")
        values[i] = pc
    missing = [net.surface.edge_names[i] for i, v in enumerate(values) if v is None]
    if missing:
        raise ValueError(f"edges without a note: {missing}")
    return values


# -- Euler ---------------------------------------------------------------

def euler() -> Built:
    points = {}
    for r, row in enumerate(F.EULER_ROWS):
        for c, name in enumerate(row):
            points[(2 * c + 1 - (r % 2), r)] = name
    segments = []
    for (x, y) in points:
        for dx, dy in ((2, 0), (1, 1), (-1, 1)):
            if (x + dx, y + dy) in points:
                segments.append(((x, y), (x + dx, y + dy)))
    lattice = Lattice(*F.EULER_PERIODS)
    by_class = {}
    for p, name in points.items():
        pc = parse_note(name)
        key = lattice.reduce(p)
        if by_class.setdefault(key, pc) != pc:
            raise ValueError(f"vertex {p} drawn as {name}, other copies say {by_class[key]}")
    names = {p: str(by_class[lattice.reduce(p)]) for p in points}
    net = glue(segments, lattice, names=names)
    values = [by_class[p] for p in net.points]
    t = from_vertex_map(net.surface, values)
    return Built(t, _layout(net, F.EULER_DOMAIN, _tri))


# -- B2 / C2 -------------------------------------------------------------

def _grid(rc: str):
    r, c = (int(x) for x in rc.split("-"))
    return (c, -r)


def corrected_arrows(arrows, errata) -> list:
    """Apply the errata table, checking that each entry matches the printed note."""
    out = []
    for note, a, b in arrows:
        fix = errata.get((a, b))
        if fix is not None:
            printed, note_ok = fix
            if printed != note:
                raise ValueError(f"erratum for {a}->{b} expects {printed}, figure has {note}")
            note = note_ok
        out.append((note, a, b))
    return out


def _arrow_net(arrows, periods, domain, names, errata=None) -> Built:
    arrows = corrected_arrows(arrows, errata or {})
    segs = [(_grid(a), _grid(b), note) for note, a, b in arrows]
    net = glue([(p, q) for p, q, _ in segs], Lattice(*periods), names={_grid(k): v for k, v in names.items()})
    t = from_edge_map(net.surface, _edge_values(net, segs))
    return Built(t, _layout(net, [_grid(x) for x in domain], _square))


def b2() -> Built:
    return _arrow_net(F.B2_ARROWS, F.B2_PERIODS, F.B2_DOMAIN, F.B2_NAMES, F.B2_ERRATA)


def c2() -> Built:
    return _arrow_net(F.C2_ARROWS, F.C2_PERIODS, F.C2_DOMAIN, F.C2_NAMES, F.C2_ERRATA)


# -- G2 pair -------------------------------------------------------------

def _hexagon(center, spokes, rim, periods, names) -> Built:
    segs = [(center, p, note) for p, note in spokes] + list(rim)
    net = glue([(p, q) for p, q, _ in segs], Lattice(*periods), names=names)
    t = from_edge_map(net.surface, _edge_values(net, segs))
    domain = [p for p, _ in spokes[::2]]
    return Built(t, _layout(net, domain, _tri4))


def g2() -> Built:
    return _hexagon(F.G2_CENTER, F.G2_SPOKES, F.G2_RIM, F.G2_PERIODS, F.G2_NAMES)


def g2_dual() -> Built:
    return _hexagon(F.G2_DUAL_CENTER, F.G2_DUAL_SPOKES, F.G2_DUAL_RIM, F.G2_PERIODS, F.G2_DUAL_NAMES)


# -- tritone nets --------------------------------------------------------

def _tritone(edges, periods, domain, names) -> Built:
    lattice = Lattice(*periods)
    net = glue([(p, q) for p, q, *_ in edges], lattice, names=names)
    s = net.surface
    face_side, edge_end = {}, {}
    for p, q, near_p, near_q, side in edges:
        i, slot_p = net.edge_at(p, q)
        a, b = s.edges[i]
        if a == b:
            raise ValueError(f"edge {s.edge_names[i]} is a loop; ends are ambiguous")
        left = net.face_left_of(p, q)
        right = net.face_left_of(q, p)
        p_face, q_face = (left, right) if side == "L" else (right, left)
        face_side[p_face] = parse_note(near_p)
        face_side[q_face] = parse_note(near_q)
        edge_end[(i, slot_p)] = parse_note(near_p)
        edge_end[(i, 1 - slot_p)] = parse_note(near_q)
    t = assemble_from_bijections(s, face_side, edge_end)
    return Built(t, _layout(net, domain, _tri))


def tritone1() -> Built:
    return _tritone(F.TRITONE1_EDGES, F.TRITONE1_PERIODS, F.TRITONE1_DOMAIN, F.TRITONE1_NAMES)


def tritone2() -> Built:
    return _tritone(F.TRITONE2_EDGES, F.TRITONE2_PERIODS, F.TRITONE2_DOMAIN, F.TRITONE2_NAMES)


# -- tetrahedra ----------------------------------------------------------

def _corner_class(name: str) -> str:
    name = name.rstrip("*")
    return "W" if name.startswith("W") else name


def bauble() -> Built:
    corners = "WXYZ"
    tet_faces = ["".join(sorted(set(corners) - {x})) for x in "WXYZ"]
    centres = {f: "c" + "".join(sorted(f, key=lambda ch: "XYZW".index(ch))) for f in tet_faces}
    mids = {frozenset(p): "m" + "".join(sorted(p)) for p in
            [(a, b) for i, a in enumerate(corners) for b in corners[i + 1:]]}
    vertices = list(corners) + sorted(centres.values()) + sorted(mids.values())

    edge_names = {}
    edges = []
    for (a, b), _ in sorted(F.BAUBLE_EDGES.items()):
        name = f"{a}-{b}"
        edge_names[frozenset((a, b))] = name
        edges.append((name, (a, b)))

    faces, quads = [], []
    for f in sorted(tet_faces):
        c = centres[f]
        for v in f:
            for u in f:
                if u == v:
                    continue
                m = mids[frozenset((u, v))]
                es = [edge_names[frozenset(x)] for x in ((v, m), (m, c), (c, v))]
                faces.append((f"{v}|{m}|{c}", es))
    surface = SimplicialSurface.from_names(vertices, edges, faces)
    values = {edge_names[frozenset(k)]: v for k, v in F.BAUBLE_EDGES.items()}
    t = from_edge_map(surface, values)

    # drawing: every rhombus of the net is two quadrilaterals
    pos = dict(F.BAUBLE_POINTS)
    layout = {}
    for a, b, c1, c2 in F.BAUBLE_RHOMBI:
        ca, cb = _corner_class(a), _corner_class(b)
        m = mids[frozenset((ca, cb))]
        mp = ((pos[a][0] + pos[b][0]) / 2, (pos[a][1] + pos[b][1]) / 2)
        for end, cend in ((a, ca), (b, cb)):
            pair = []
            for cc in (c1, c2):
                face = f"{cend}|{m}|{_corner_class(cc)}"
                where = {cend: pos[end], m: mp, _corner_class(cc): pos[cc]}
                j = surface.lookup(face).index
                layout[face] = tuple(_round(_tri(where[surface.vertex_names[k]])) for k in face_corners(surface, j))
                pair.append(face)
            quads.append((pair[0], pair[1], edge_names[frozenset((cend, m))], cend))
    return Built(t, layout, tuple(quads))


def tetra_dim() -> Built:
    names = F.TETRA_DIM_VERTICES
    s = tetrahedron(names)
    t = from_vertex_map(s, [parse_note(n) for n in names])
    # net: the first three vertices in the middle, the fourth folded out three times
    a, b, c = (0.0, 0.0), (2.0, 0.0), (1.0, SQRT3)
    outer = {frozenset((0, 1)): (1.0, -SQRT3), frozenset((1, 2)): (3.0, SQRT3), frozenset((0, 2)): (-1.0, SQRT3)}
    base = {0: a, 1: b, 2: c}
    layout = {}
    for j in range(4):
        cs = face_corners(s, j)
        if 3 not in cs:
            layout[s.face_names[j]] = tuple(base[k] for k in cs)
        else:
            others = frozenset(k for k in cs if k != 3)
            layout[s.face_names[j]] = tuple(_round(base[k] if k != 3 else outer[others]) for k in cs)
    return Built(t, layout)


BUILDERS = {
    "euler": euler,
    "b2": b2,
    "c2": c2,
    "g2": g2,
    "g2_dual": g2_dual,
    "tritone1": tritone1,
    "tritone2": tritone2,
    "bauble": bauble,
    "tetra_dim": tetra_dim,
}
