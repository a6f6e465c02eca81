"""The worked examples: eight figure tonnetzes plus transposed variants.

``build(key)`` returns a :class:`CatalogEntry` whose tonnetz has been
verified and checked against its :class:`ExpectedFacts`; a transcription
error therefore fails loudly at construction time.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from ..coherence import Tonnetz, VerificationError, face_chords, find_transposition_symmetry, kind, transpose_tonnetz, verify
from ..complex import euler_characteristic, validate
from ..pitch import ALL_PITCH_CLASSES, ChordQuality, PitchClass, PitchMultiset, Quality, classify, parse_note
from . import builders

__all__ = [
    "KEYS",
    "CatalogEntry",
    "ExpectedFacts",
    "CatalogError",
    "BaubleQuad",
    "build",
    "check_facts",
    "bauble_quadrilaterals",
]

KEYS = (
    "euler",
    "b2",
    "b2_up2",
    "b2_down2",
    "c2",
    "c2_up2",
    "c2_down2",
    "g2",
    "g2_dual",
    "tritone1",
    "tritone2",
    "bauble",
    "tetra_dim",
)


class CatalogError(ValueError):
    pass


def _notes(text: str) -> frozenset:
    return frozenset(parse_note(n) for n in text.split())


def _chords(roots: str, quality: Quality, times: int = 1) -> Counter:
    return Counter({ChordQuality(quality, parse_note(r)): times for r in roots.split()})


@dataclass(frozen=True)
class ExpectedFacts:
    """Claims about an entry that are checked whenever it is built.

    ``vertex_chords`` maps a vertex name to either a frozenset (the expected
    support) or a :class:`PitchMultiset` (the exact label).
    ``symmetries`` holds ``(interval, must_exist, order)`` triples; ``order``
    may be ``None`` when only existence is claimed.
    """

    f_vector: tuple
    face_chords: Optional[Counter]
    vertex_chords: dict = field(default_factory=dict)
    symmetries: tuple = ()
    omitted_notes: Optional[frozenset] = None
    flags: dict = field(default_factory=dict)
    euler_characteristic: Optional[int] = None

    def transpose(self, k: int) -> "ExpectedFacts":
        def shift(v):
            if isinstance(v, PitchMultiset):
                return v.transpose(k)
            return frozenset(p + k for p in v)

        return ExpectedFacts(
            f_vector=self.f_vector,
            face_chords=None
            if self.face_chords is None
            else Counter({c.transpose(k): n for c, n in self.face_chords.items()}),
            vertex_chords={name: shift(v) for name, v in self.vertex_chords.items()},
            symmetries=self.symmetries,
            omitted_notes=None if self.omitted_notes is None else shift(self.omitted_notes),
            flags=dict(self.flags),
            euler_characteristic=self.euler_characteristic,
        )


@dataclass(frozen=True)
class BaubleQuad:
    faces: tuple
    diagonal: str
    corner: str
    chord: PitchMultiset

    @property
    def quality(self) -> ChordQuality:
        return classify(self.chord)


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    tonnetz: Tonnetz
    provenance: str
    expected: ExpectedFacts
    layout: dict = field(default_factory=dict, compare=False)
    quads: tuple = field(default=(), compare=False)

    @property
    def f_vector(self) -> tuple:
        return self.tonnetz.surface.f_vector


def edge_support_union(t: Tonnetz) -> frozenset:
    out = set()
    for lab in t.edge_labels:
        out |= lab.support()
    return frozenset(out)


def check_facts(t: Tonnetz, facts: ExpectedFacts) -> list:
    """Return a description of every fact that does not hold (empty if all do)."""
    s = t.surface
    problems = []
    if s.f_vector != tuple(facts.f_vector):
        problems.append(f"f-vector {s.f_vector} != {tuple(facts.f_vector)}")
    got = Counter(face_chords(t))
    if facts.face_chords is not None and got != facts.face_chords:
        problems.append(f"face chords {sorted(map(str, got.elements()))} != {sorted(map(str, facts.face_chords.elements()))}")
    for name, want in facts.vertex_chords.items():
        lab = t.label(name)
        have = lab if isinstance(want, PitchMultiset) else lab.support()
        if have != want:
            problems.append(f"vertex {name}: {sorted(map(str, have))} != {sorted(map(str, want))}")
    if facts.omitted_notes is not None:
        omitted = frozenset(ALL_PITCH_CLASSES) - edge_support_union(t)
        if omitted != facts.omitted_notes:
            problems.append(f"edges omit {sorted(map(str, omitted))}, expected {sorted(map(str, facts.omitted_notes))}")
    if facts.flags:
        k = kind(t)
        for flag, want in facts.flags.items():
            if getattr(k, flag) != want:
                problems.append(f"{flag} is {getattr(k, flag)}, expected {want}")
    if facts.euler_characteristic is not None and euler_characteristic(s) != facts.euler_characteristic:
        problems.append(f"Euler characteristic {euler_characteristic(s)} != {facts.euler_characteristic}")
    for k, must_exist, order in facts.symmetries:
        phi = find_transposition_symmetry(t, k)
        if (phi is not None) != must_exist:
            problems.append(f"transposition symmetry by {k}: found={phi is not None}, expected {must_exist}")
        elif phi is not None and order is not None and phi.order() != order:
            problems.append(f"transposition symmetry by {k} has order {phi.order()}, expected {order}")
    return problems


_WHOLE_TONE_MAJORS = "A B Db Eb F G"
_DIM7_0, _DIM7_1, _DIM7_2 = _notes("A C Eb Gb"), _notes("Bb Db E G"), _notes("B D F Ab")

FACTS = {
    "euler": ExpectedFacts(
        f_vector=(12, 36, 24),
        face_chords=_chords("A Bb B C Db D Eb E F Gb G Ab", Quality.MAJOR)
        + _chords("A Bb B C Db D Eb E F Gb G Ab", Quality.MINOR),
        flags={"is_vertex_tonnetz": True, "is_complete_major_minor": True},
        euler_characteristic=0,
    ),
    "b2": ExpectedFacts(
        f_vector=(4, 12, 8),
        face_chords=_chords("F Ab B D", Quality.MAJOR, 2),
        vertex_chords={
            "top": _DIM7_0,
            "side": _DIM7_0,
            "center": frozenset(ALL_PITCH_CLASSES) - _notes("A# C# E G"),
            "corner": frozenset(ALL_PITCH_CLASSES) - _notes("A# C# E G"),
        },
        symmetries=((1, False, None),),
        omitted_notes=_notes("A# C# E G"),
        flags={"is_edge_tonnetz": True, "is_major": True, "is_complete_major_minor": False},
        euler_characteristic=0,
    ),
    "c2": ExpectedFacts(
        f_vector=(4, 12, 8),
        face_chords=_chords("D F Ab B", Quality.MINOR, 2),
        vertex_chords={
            "upper": _DIM7_2,
            "lower": _DIM7_2,
            "center": frozenset(ALL_PITCH_CLASSES) - _notes("A# C# E G"),
            "corner": frozenset(ALL_PITCH_CLASSES) - _notes("A# C# E G"),
        },
        omitted_notes=_notes("A# C# E G"),
        flags={"is_edge_tonnetz": True, "is_minor": True},
        euler_characteristic=0,
    ),
    "g2": ExpectedFacts(
        f_vector=(6, 18, 12),
        face_chords=_chords("D E F# Ab Bb C", Quality.MAJOR) + _chords("A B C# Eb F G", Quality.MINOR),
        vertex_chords={
            "center": frozenset(ALL_PITCH_CLASSES),
            "corner_a": _notes("C E G#"),
            "corner_b": _notes("D F# A#"),
            "mid_a": _DIM7_0,
            "mid_b": _DIM7_1,
            "mid_c": _DIM7_2,
        },
        symmetries=((2, True, 6), (4, True, 3), (6, True, 2)),
        omitted_notes=frozenset(),
        flags={"is_edge_tonnetz": True, "is_major_minor": True},
        euler_characteristic=0,
    ),
    "g2_dual": ExpectedFacts(
        f_vector=(6, 18, 12),
        face_chords=_chords("A B Db Eb F G", Quality.MAJOR) + _chords("D E F# G# Bb C", Quality.MINOR),
        vertex_chords={
            "center": frozenset(ALL_PITCH_CLASSES),
            "corner_a": _notes("G B D#"),
            "corner_b": _notes("F A C#"),
            "mid_a": _DIM7_1,
            "mid_b": _DIM7_2,
            "mid_c": _DIM7_0,
        },
        omitted_notes=frozenset(),
        flags={"is_edge_tonnetz": True, "is_major_minor": True},
        euler_characteristic=0,
    ),
    "tritone1": ExpectedFacts(
        f_vector=(3, 9, 6),
        face_chords=_chords(_WHOLE_TONE_MAJORS, Quality.MAJOR),
        vertex_chords={
            "center": _notes("A B Db Eb F G"),
            "ring_a": _notes("A Bb C# D F F#"),
            "ring_b": _notes("G Ab B C D# E"),
        },
        symmetries=((2, True, None), (4, True, None)),
        flags={"is_vertex_tonnetz": False, "is_edge_tonnetz": False, "is_major": True},
        euler_characteristic=0,
    ),
    "tritone2": ExpectedFacts(
        f_vector=(12, 36, 24),
        face_chords=_chords(_WHOLE_TONE_MAJORS, Quality.MAJOR, 4),
        vertex_chords={
            "center": _notes("A C# F"),
            "right_of_center": PitchMultiset("Bb B C Db D D#"),
            "below_right": PitchMultiset("F# G Ab A Bb B"),
            "rim_upper_right": PitchMultiset("G G A A B B"),
            "petal_right": _notes("A C# F Ab C E"),
        },
        symmetries=((4, True, None),),
        flags={"is_vertex_tonnetz": False, "is_edge_tonnetz": False, "is_major": True},
        euler_characteristic=0,
    ),
    "bauble": ExpectedFacts(
        f_vector=(14, 36, 24),
        face_chords=None,  # the claims concern quadrilaterals, checked separately
        symmetries=((4, True, 3),),
        flags={"is_edge_tonnetz": True},
        euler_characteristic=2,
    ),
    "tetra_dim": ExpectedFacts(
        f_vector=(4, 6, 4),
        face_chords=Counter({ChordQuality(Quality.DIMINISHED, parse_note(r)): 1 for r in "C Eb Gb A".split()}),
        flags={"is_vertex_tonnetz": True, "is_diminished": True},
        euler_characteristic=2,
    ),
}

# Corner of the bauble -> roots of the three major ninth chords around it.
BAUBLE_CORNERS = {
    "X": _notes("F F# G"),
    "Y": _notes("A Bb B"),
    "Z": _notes("Db D Eb"),
    "W": _notes("C E Ab"),
}

PROVENANCE = {
    "euler": "Euler tonnetz: note grid of Figure 2 glued along its yellow fundamental domain",
    "b2": "B2 edge tonnetz: arrow labels of Figure 3, glued top-bottom and left-right",
    "c2": "C2 edge tonnetz: arrow labels of Figure 4, glued along the diamond",
    "g2": "G2 edge tonnetz: labelled hexagon of Figure 5, opposite sides glued",
    "g2_dual": "dual G2 edge tonnetz: labelled hexagon of Figure 7, opposite sides glued",
    "tritone1": "tritone edge tonnetz with 6 triangles: Figure 8",
    "tritone2": "tritone edge tonnetz with 24 triangles: Figures 9 and 10",
    "bauble": "tetrahedral edge tonnetz of major ninth chords: Figures 11 and 12",
    "tetra_dim": "diminished vertex tonnetz on the tetrahedron with vertices C, Eb, F#, A",
}

_TRANSPOSED = {
    "b2_up2": ("b2", 2),
    "b2_down2": ("b2", -2),
    "c2_up2": ("c2", 2),
    "c2_down2": ("c2", -2),
}


def _quads(t: Tonnetz, raw) -> tuple:
    out = []
    for f1, f2, diag, corner in raw:
        edges = set()
        for f in (f1, f2):
            edges.update(t.surface.facets(t.surface.lookup(f)))
        chord = PitchMultiset(n for e in sorted(edges) for n in t.label(e).support())
        out.append(BaubleQuad((f1, f2), diag, corner, chord))
    return tuple(out)


def _bauble_problems(quads) -> list:
    problems = []
    if len(quads) != 12:
        problems.append(f"{len(quads)} quadrilaterals, expected 12")
    roots = Counter()
    for q in quads:
        c = q.quality
        if c.quality is not Quality.MAJOR_NINTH:
            problems.append(f"quadrilateral {q.faces} is {c}, not a major ninth")
        else:
            roots[c.root] += 1
    if set(roots) != set(ALL_PITCH_CLASSES) or set(roots.values()) != {1}:
        problems.append(f"major ninth roots {dict(roots)} are not all 12 once each")
    for corner, want in BAUBLE_CORNERS.items():
        have = frozenset(q.quality.root for q in quads if q.corner == corner)
        if have != want:
            problems.append(f"corner {corner} carries roots {sorted(map(str, have))}, expected {sorted(map(str, want))}")
    return problems


@lru_cache(maxsize=None)
def build(key: str) -> CatalogEntry:
    """Construct, verify and fact-check one catalog entry."""
    if key not in KEYS:
        raise KeyError(f"unknown catalog key {key!r}; choose from {', '.join(KEYS)}")
    if key in _TRANSPOSED:
        base_key, k = _TRANSPOSED[key]
        base = build(base_key)
        t = transpose_tonnetz(base.tonnetz, k)
        facts = base.expected.transpose(k)
        direction = "up" if k > 0 else "down"
        entry = CatalogEntry(
            key, t, f"{base.provenance}; every note moved {direction} a whole tone", facts, base.layout
        )
        _assert_sound(entry)
        return entry

    made = builders.BUILDERS[key]()
    t = made.tonnetz
    facts = FACTS[key]
    quads = ()
    if key == "bauble":
        quads = _quads(t, made.quads)
        problems = _bauble_problems(quads)
        if problems:
            raise CatalogError("bauble: " + "; ".join(problems))
    entry = CatalogEntry(key, t, PROVENANCE[key], facts, made.layout, quads)
    _assert_sound(entry)
    return entry


def _assert_sound(entry: CatalogEntry) -> None:
    report = validate(entry.tonnetz.surface)
    if not report.ok:
        raise CatalogError(f"{entry.key}: surface does not validate:\n{report}")
    ver = verify(entry.tonnetz)
    if not ver.ok:
        raise VerificationError(ver, entry.key)
    problems = check_facts(entry.tonnetz, entry.expected)
    if problems:
        raise CatalogError(f"{entry.key}: " + "; ".join(problems))


def bauble_quadrilaterals(entry: CatalogEntry) -> list:
    """The twelve face pairs of the bauble with their five-note chords."""
    if entry.key != "bauble":
        raise KeyError(f"quadrilaterals are only defined for the bauble, not {entry.key!r}")
    return list(entry.quads)
