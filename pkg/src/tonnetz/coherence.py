"""Labelled surfaces, the coherence check and the standard constructions.

A :class:`Tonnetz` attaches a multiset of pitch classes to every vertex,
edge and face.  It is coherent when, for every edge and face, its facets
can be matched one-to-one with the elements of its label so that each
facet's label contains the note it is matched with (downward), and
likewise for every vertex and edge with its cofaces (upward).
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .complex import (
    ComplexAutomorphism,
    SimplexId,
    SimplicialSurface,
    face_corners,
    find_automorphisms,
    valency,
)
from .matching import match_slots
from .pitch import ChordQuality, PitchClass, PitchMultiset, Quality, classify

__all__ = [
    "Tonnetz",
    "CoherenceWitness",
    "Infeasibility",
    "VerificationReport",
    "TonnetzKind",
    "VerificationError",
    "verify",
    "verify_simplices",
    "extend_from_faces",
    "assemble_from_bijections",
    "from_vertex_map",
    "from_edge_map",
    "constant_tonnetz",
    "kind",
    "transpose_tonnetz",
    "find_transposition_symmetry",
    "transposition_symmetries",
    "face_chords",
]


def _as_multiset(x) -> PitchMultiset:
    return x if isinstance(x, PitchMultiset) else PitchMultiset(x)


@dataclass(frozen=True)
class Tonnetz:
    """A surface together with a label for every simplex.

    Labels are held as three tuples indexed like the surface's vertex,
    edge and face lists.  Equality compares the surface and the labels
    only; coherence witnesses are never stored.
    """

    surface: SimplicialSurface
    vertex_labels: tuple
    edge_labels: tuple
    face_labels: tuple

    def __post_init__(self) -> None:
        set_ = object.__setattr__
        set_(self, "vertex_labels", tuple(_as_multiset(x) for x in self.vertex_labels))
        set_(self, "edge_labels", tuple(_as_multiset(x) for x in self.edge_labels))
        set_(self, "face_labels", tuple(_as_multiset(x) for x in self.face_labels))
        sizes = (len(self.vertex_labels), len(self.edge_labels), len(self.face_labels))
        if sizes != self.surface.f_vector:
            raise ValueError(f"label counts {sizes} do not match f-vector {self.surface.f_vector}")

    @classmethod
    def from_labels(cls, surface: SimplicialSurface, labels: Mapping) -> "Tonnetz":
        """Build from a map keyed by :class:`SimplexId` or simplex name."""
        table = [[None] * surface.count(d) for d in range(3)]
        for key, value in labels.items():
            sid = surface.lookup(key) if isinstance(key, str) else key
            table[sid.dim][sid.index] = value
        for d in range(3):
            missing = [surface.name(SimplexId(d, i)) for i, x in enumerate(table[d]) if x is None]
            if missing:
                raise ValueError(f"labels missing for {missing}")
        return cls(surface, *table)

    def label(self, sid) -> PitchMultiset:
        if isinstance(sid, str):
            sid = self.surface.lookup(sid)
        return (self.vertex_labels, self.edge_labels, self.face_labels)[sid.dim][sid.index]

    @property
    def labels(self) -> dict:
        return {sid: self.label(sid) for sid in self.surface.simplices()}

    def with_label(self, sid, value) -> "Tonnetz":
        if isinstance(sid, str):
            sid = self.surface.lookup(sid)
        tables = [list(self.vertex_labels), list(self.edge_labels), list(self.face_labels)]
        tables[sid.dim][sid.index] = _as_multiset(value)
        return Tonnetz(self.surface, *tables)


@dataclass(frozen=True)
class CoherenceWitness:
    """One bijection per simplex and direction.

    ``down[sid]`` lists the notes given to the facet slots of ``sid`` in
    slot order; ``up[sid]`` does the same for coface slots.
    """

    down: Mapping = field(default_factory=dict)
    up: Mapping = field(default_factory=dict)


@dataclass(frozen=True)
class Infeasibility:
    simplex: SimplexId
    name: str
    direction: str  # "down" or "up"
    reason: str  # "cardinality" or "hall"
    hall_subset: tuple = ()  # names of the offending facets/cofaces
    hall_notes: tuple = ()  # the label elements those slots can reach

    def __str__(self) -> str:
        side = "facets" if self.direction == "down" else "cofaces"
        msg = f"{self.name}: no {self.direction}ward bijection ({self.reason})"
        if self.hall_subset:
            notes = ",".join(str(PitchClass(n)) for n in self.hall_notes) or "nothing"
            msg += f"; {side} {list(self.hall_subset)} can only use [{notes}]"
        return msg


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    witness: Optional[CoherenceWitness] = None
    failures: tuple = ()

    def __bool__(self) -> bool:
        return self.ok

    def failing_simplices(self) -> set:
        return {f.name for f in self.failures}

    def __str__(self) -> str:
        if self.ok:
            return "coherent"
        return "\n".join(str(f) for f in self.failures)


class VerificationError(ValueError):
    def __init__(self, report: VerificationReport, what: str = "tonnetz") -> None:
        self.report = report
        super().__init__(f"{what} is not coherent:\n{report}")


def _check(t: Tonnetz, sid: SimplexId, direction: str):
    s = t.surface
    slots = s.facets(sid) if direction == "down" else s.cofaces(sid)
    admissible = [t.label(x).support() for x in slots]
    res = match_slots(admissible, t.label(sid).elements)
    if res.ok:
        return tuple(PitchClass(n) for n in res.assignment), None
    return None, Infeasibility(
        simplex=sid,
        name=s.name(sid),
        direction=direction,
        reason=res.reason,
        hall_subset=tuple(s.name(slots[i]) for i in res.hall_slots),
        hall_notes=res.hall_notes,
    )


def verify_simplices(t: Tonnetz, checks) -> VerificationReport:
    """Run the listed ``(simplex, direction)`` checks only."""
    down, up, failures = {}, {}, []
    for sid, direction in checks:
        got, bad = _check(t, sid, direction)
        if bad is not None:
            failures.append(bad)
        elif direction == "down":
            down[sid] = got
        else:
            up[sid] = got
    if failures:
        return VerificationReport(False, None, tuple(failures))
    return VerificationReport(True, CoherenceWitness(down, up))


def _all_checks(surface: SimplicialSurface):
    for sid in surface.simplices(1) + surface.simplices(2):
        yield sid, "down"
    for sid in surface.simplices(0) + surface.simplices(1):
        yield sid, "up"


def verify(t: Tonnetz) -> VerificationReport:
    """Decide coherence, returning either a witness or every failing simplex."""
    return verify_simplices(t, _all_checks(t.surface))


# -- constructions -----------------------------------------------------

def assemble_from_bijections(surface: SimplicialSurface, face_side: Mapping, edge_end: Mapping) -> Tonnetz:
    """Build labels from chosen notes on face sides and edge ends.

    ``face_side[(face, slot)]`` is the note face ``face`` hands to the edge
    in its slot ``slot``; ``edge_end[(edge, slot)]`` is the note edge
    ``edge`` hands to the vertex in its slot ``slot``.  Face labels collect
    their sides, edge labels their ends and vertex labels everything handed
    to them.  The edge ends must use exactly the notes the two adjacent
    faces hand to the edge.
    """
    nv, ne, nf = surface.f_vector
    faces = [PitchMultiset(face_side[(j, k)] for k in range(3)) for j in range(nf)]
    received = [[] for _ in range(ne)]
    for j, f in enumerate(surface.faces):
        for k, e in enumerate(f):
            received[e].append(face_side[(j, k)])
    edges = [PitchMultiset(edge_end[(i, k)] for k in range(2)) for i in range(ne)]
    for i in range(ne):
        if edges[i] != PitchMultiset(received[i]):
            raise ValueError(
                f"edge {surface.edge_names[i]!r}: ends {edges[i]} differ from face sides {PitchMultiset(received[i])}"
            )
    verts = [[] for _ in range(nv)]
    for i, e in enumerate(surface.edges):
        for k, v in enumerate(e):
            verts[v].append(edge_end[(i, k)])
    return Tonnetz(surface, tuple(verts), tuple(edges), tuple(faces))


def extend_from_faces(surface: SimplicialSurface, face_labels, seed=0) -> Tonnetz:
    """Extend order-3 face labels to a coherent tonnetz.

    Each face deals its three notes to its edges in an order drawn from
    ``random.Random(seed)``; each edge then deals its two notes to its
    ends in a random order.  The result is coherent by construction.
    """
    if isinstance(face_labels, Mapping):
        table = [None] * surface.count(2)
        for key, value in face_labels.items():
            if isinstance(key, str):
                key = surface.lookup(key)
            idx = key.index if isinstance(key, SimplexId) else int(key)
            table[idx] = value
        face_labels = table
    face_labels = [_as_multiset(x) if x is not None else None for x in face_labels]
    if len(face_labels) != surface.count(2) or any(x is None for x in face_labels):
        raise ValueError("a label is required for every face")
    for j, lab in enumerate(face_labels):
        if lab.order() != 3:
            raise ValueError(f"face {surface.face_names[j]!r} label {lab} has order {lab.order()}, expected 3")
    rng = random.Random(seed)
    face_side = {}
    for j, lab in enumerate(face_labels):
        notes = list(lab.elements)
        rng.shuffle(notes)
        for k in range(3):
            face_side[(j, k)] = notes[k]
    received = [[] for _ in range(surface.count(1))]
    for j, f in enumerate(surface.faces):
        for k, e in enumerate(f):
            received[e].append(face_side[(j, k)])
    edge_end = {}
    for i, notes in enumerate(received):
        if len(notes) != 2:
            raise ValueError(f"edge {surface.edge_names[i]!r} lies in {len(notes)} faces, expected 2")
        rng.shuffle(notes)
        edge_end[(i, 0)], edge_end[(i, 1)] = notes
    return assemble_from_bijections(surface, face_side, edge_end)


def _vertex_map(surface, values, dim) -> list:
    n = surface.count(dim)
    if isinstance(values, Mapping):
        out = [None] * n
        for key, value in values.items():
            if isinstance(key, str):
                key = surface.lookup(key)
            idx = key.index if isinstance(key, SimplexId) else int(key)
            out[idx] = value
    else:
        out = list(values)
    if len(out) != n or any(x is None for x in out):
        raise ValueError("the map must be total")
    return [PitchClass(x) for x in out]


def from_vertex_map(surface: SimplicialSurface, values) -> Tonnetz:
    """The vertex tonnetz in which vertex ``v`` carries only ``values[v]``."""
    vals = _vertex_map(surface, values, 0)
    edges = [(vals[a], vals[b]) for a, b in surface.edges]
    faces = []
    for j in range(surface.count(2)):
        corners = face_corners(surface, j)
        if corners is None:
            raise ValueError(f"face {surface.face_names[j]!r} has inconsistent corners")
        faces.append(tuple(vals[c] for c in corners))
    verts = [[vals[v]] * valency(surface, SimplexId(0, v)) for v in range(surface.count(0))]
    return Tonnetz(surface, tuple(verts), tuple(edges), tuple(faces))


def from_edge_map(surface: SimplicialSurface, values) -> Tonnetz:
    """The edge tonnetz in which edge ``e`` carries only ``values[e]``."""
    vals = _vertex_map(surface, values, 1)
    edges = [(x, x) for x in vals]
    faces = [tuple(vals[e] for e in f) for f in surface.faces]
    verts = [[] for _ in range(surface.count(0))]
    for i, (a, b) in enumerate(surface.edges):
        verts[a].append(vals[i])
        verts[b].append(vals[i])
    return Tonnetz(surface, tuple(verts), tuple(edges), tuple(faces))


def constant_tonnetz(surface: SimplicialSurface, note=0) -> Tonnetz:
    return from_vertex_map(surface, [note] * surface.count(0))


# -- predicates --------------------------------------------------------

@dataclass(frozen=True)
class TonnetzKind:
    is_vertex_tonnetz: bool
    is_edge_tonnetz: bool
    is_major: bool
    is_minor: bool
    is_major_minor: bool
    is_complete_major_minor: bool
    is_diminished: bool = False
    is_augmented: bool = False

    def describe(self) -> str:
        bits = []
        if self.is_complete_major_minor:
            bits.append("complete major/minor")
        elif self.is_major:
            bits.append("major")
        elif self.is_minor:
            bits.append("minor")
        elif self.is_major_minor:
            bits.append("major/minor")
        elif self.is_diminished:
            bits.append("diminished")
        elif self.is_augmented:
            bits.append("augmented")
        if self.is_vertex_tonnetz:
            bits.append("vertex tonnetz")
        if self.is_edge_tonnetz:
            bits.append("edge tonnetz")
        if not (self.is_vertex_tonnetz or self.is_edge_tonnetz):
            bits.append("tonnetz")
        return " ".join(bits)


def face_chords(t: Tonnetz) -> list:
    return [classify(lab) for lab in t.face_labels]


def kind(t: Tonnetz) -> TonnetzKind:
    chords = face_chords(t)
    quals = {c.quality for c in chords}
    triads = {(c.quality, int(c.root)) for c in chords if c.quality in (Quality.MAJOR, Quality.MINOR)}
    is_mm = bool(chords) and quals <= {Quality.MAJOR, Quality.MINOR}
    return TonnetzKind(
        is_vertex_tonnetz=all(len(x.support()) == 1 for x in t.vertex_labels),
        is_edge_tonnetz=all(len(x.support()) == 1 for x in t.edge_labels),
        is_major=bool(chords) and quals == {Quality.MAJOR},
        is_minor=bool(chords) and quals == {Quality.MINOR},
        is_major_minor=is_mm,
        is_complete_major_minor=is_mm and len(triads) == 24,
        is_diminished=bool(chords) and quals == {Quality.DIMINISHED},
        is_augmented=bool(chords) and quals == {Quality.AUGMENTED},
    )


def transpose_tonnetz(t: Tonnetz, k: int) -> Tonnetz:
    return Tonnetz(
        t.surface,
        tuple(x.transpose(k) for x in t.vertex_labels),
        tuple(x.transpose(k) for x in t.edge_labels),
        tuple(x.transpose(k) for x in t.face_labels),
    )


def transposition_symmetries(t: Tonnetz, k: int, limit: Optional[int] = None) -> list:
    """All automorphisms ``phi`` with ``label(phi(s)) == label(s) + k`` for every simplex."""
    shifted = transpose_tonnetz(t, k)

    def accept(src: SimplexId, dst: SimplexId) -> bool:
        return t.label(dst) == shifted.label(src)

    return find_automorphisms(t.surface, limit=limit, accept=accept)


def find_transposition_symmetry(t: Tonnetz, k: int) -> Optional[ComplexAutomorphism]:
    """A symmetry realising transposition by ``k``, or ``None``.

    When several exist, one of least order is returned (the identity for
    ``k = 0``), ties broken by the search order.
    """
    found = transposition_symmetries(t, k)
    if not found:
        return None
    return min(found, key=lambda a: (a.order(), not a.is_identity()))
