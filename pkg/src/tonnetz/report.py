"""Chord inventories, coverage across several tonnetzes, and the overview table."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .catalog import build, check_facts, edge_support_union
from .coherence import Tonnetz, face_chords, kind
from .complex import SimplexId, valency
from .pitch import ALL_PITCH_CLASSES, ChordQuality, PitchMultiset, Quality, classify, note_name

__all__ = [
    "SimplexInfo",
    "Inventory",
    "inventory",
    "Coverage",
    "completeness",
    "OverviewTable",
    "section7_table",
    "TABLE_COLUMNS",
    "check_facts",
    "render_note_set",
    "chord_sort_key",
]

_QUALITY_ORDER = {q: i for i, q in enumerate(Quality)}


def chord_sort_key(c: ChordQuality):
    """Root residue first, then quality; rootless chords last."""
    return (99 if c.root is None else int(c.root), _QUALITY_ORDER[c.quality])


def render_note_set(notes, unicode: bool = False, complement_from: int = 7) -> str:
    """``{A,C,Eb}`` style, or ``N \\ {..}`` when most notes are present."""
    notes = sorted(int(n) for n in notes)
    if len(notes) == 12:
        return "N"
    if len(notes) >= complement_from:
        missing = [n for n in range(12) if n not in notes]
        return "N \\ {" + ",".join(note_name(n, unicode) for n in missing) + "}"
    return "{" + ",".join(note_name(n, unicode) for n in notes) + "}"


@dataclass(frozen=True)
class SimplexInfo:
    name: str
    label: PitchMultiset
    chord: ChordQuality

    def to_data(self) -> dict:
        return {"name": self.name, "label": self.label.names(), "chord": self.chord.describe()}


@dataclass(frozen=True)
class Inventory:
    """Everything :func:`inventory` finds, grouped by dimension."""

    f_vector: tuple
    kind: str
    vertices_by_valency: dict  # valency -> tuple of SimplexInfo
    edges: tuple
    faces: tuple
    omitted_notes: frozenset

    @property
    def vertex_count(self) -> int:
        return sum(len(v) for v in self.vertices_by_valency.values())

    def distinct_face_chords(self) -> list:
        return sorted({f.chord for f in self.faces}, key=chord_sort_key)

    def face_chord_counts(self) -> Counter:
        return Counter(f.chord for f in self.faces)

    def distinct_vertex_chords(self, valency_: Optional[int] = None) -> list:
        groups = self.vertices_by_valency.values() if valency_ is None else [self.vertices_by_valency.get(valency_, ())]
        return sorted({v.chord for g in groups for v in g}, key=chord_sort_key)

    def to_data(self) -> dict:
        counts = self.face_chord_counts()
        return {
            "f_vector": list(self.f_vector),
            "kind": self.kind,
            "vertices": {
                str(k): [v.to_data() for v in vs] for k, vs in sorted(self.vertices_by_valency.items())
            },
            "edges": [e.to_data() for e in self.edges],
            "faces": [f.to_data() for f in self.faces],
            "face_chords": [{"chord": c.describe(), "count": counts[c]} for c in self.distinct_face_chords()],
            "omitted_notes": [note_name(n) for n in sorted(self.omitted_notes)],
        }

    def render(self, unicode: bool = False) -> str:
        lines = [f"f-vector {self.f_vector}; {self.kind}"]
        lines.append("faces:")
        counts = self.face_chord_counts()
        for c in self.distinct_face_chords():
            names = [f.name for f in self.faces if f.chord == c]
            lines.append(f"  {c.describe(unicode):<24} x{counts[c]:<3} {' '.join(names)}")
        lines.append("edges:")
        width = max((len(e.name) for e in self.edges), default=0)
        for e in self.edges:
            lines.append(f"  {e.name:<{width}}  {_ms(e.label, unicode)}")
        lines.append("edge supports omit: " + (render_note_set(self.omitted_notes, unicode, 13) if self.omitted_notes else "nothing"))
        for k, vs in sorted(self.vertices_by_valency.items()):
            lines.append(f"valence {k} vertices:")
            width = max(len(v.name) for v in vs)
            for v in vs:
                lines.append(
                    f"  {v.name:<{width}}  {render_note_set(v.label.support(), unicode)}  ({v.chord.describe(unicode)})"
                )
        return "\n".join(lines) + "\n"


def _ms(m: PitchMultiset, unicode: bool) -> str:
    return "{" + ",".join(m.names(unicode)) + "}"


def _info(t: Tonnetz, sid: SimplexId) -> SimplexInfo:
    lab = t.label(sid)
    return SimplexInfo(t.surface.name(sid), lab, classify(lab))


def inventory(t: Tonnetz) -> Inventory:
    """Classify every simplex label and group vertices by valency."""
    s = t.surface
    by_valency: dict = {}
    for sid in s.simplices(0):
        by_valency.setdefault(valency(s, sid), []).append(_info(t, sid))
    return Inventory(
        f_vector=s.f_vector,
        kind=kind(t).describe(),
        vertices_by_valency={k: tuple(v) for k, v in sorted(by_valency.items())},
        edges=tuple(_info(t, sid) for sid in s.simplices(1)),
        faces=tuple(_info(t, sid) for sid in s.simplices(2)),
        omitted_notes=frozenset(ALL_PITCH_CLASSES) - edge_support_union(t),
    )


# -- coverage ------------------------------------------------------------

@dataclass(frozen=True)
class Coverage:
    counts: Counter = field(default_factory=Counter)

    def _roots(self, quality: Quality) -> set:
        return {c.root for c in self.counts if c.quality is quality}

    @property
    def all_majors(self) -> bool:
        return len(self._roots(Quality.MAJOR)) == 12

    @property
    def all_minors(self) -> bool:
        return len(self._roots(Quality.MINOR)) == 12

    @property
    def complete(self) -> bool:
        return self.all_majors and self.all_minors

    @property
    def each_once(self) -> bool:
        """Every chord that occurs occurs exactly once."""
        return all(n == 1 for n in self.counts.values())

    def multiplicity(self, chord: ChordQuality) -> int:
        return self.counts[chord]

    def missing(self, quality: Quality) -> list:
        present = self._roots(quality)
        return [ChordQuality(quality, r) for r in ALL_PITCH_CLASSES if r not in present]

    def to_data(self) -> dict:
        return {
            "all_majors": self.all_majors,
            "all_minors": self.all_minors,
            "complete": self.complete,
            "chords": [
                {"chord": c.describe(), "count": self.counts[c]} for c in sorted(self.counts, key=chord_sort_key)
            ],
        }


def completeness(ts) -> Coverage:
    """Pool the face chords of several tonnetzes."""
    counts: Counter = Counter()
    for t in ts:
        counts.update(face_chords(t))
    return Coverage(counts)


# -- the overview table --------------------------------------------------

TABLE_COLUMNS = (("b2", "B2"), ("c2", "C2"), ("g2", "G2"), ("g2_dual", "G2 dual"))

_SECTION_ORDER = ("major triads", "minor triads", "edges", "augmented triads", "diminished seventh", "anything else")


@dataclass(frozen=True)
class OverviewTable:
    """Rows of ``(section, row label, cells)``.

    A cell is a tuple of items: a :class:`ChordQuality` in the triad rows,
    a frozenset of pitch classes elsewhere.  Items are ordered by root
    residue (chords) or by sorted residues (sets).
    """

    columns: tuple
    rows: tuple

    def cell(self, section: str, row: str, column: str) -> tuple:
        j = [c for c, _ in self.columns].index(column)
        for sec, lab, cells in self.rows:
            if sec == section and lab == row:
                return cells[j]
        raise KeyError((section, row))

    def to_data(self) -> dict:
        def item(x):
            if isinstance(x, ChordQuality):
                return x.describe()
            return [note_name(n) for n in sorted(x)]

        return {
            "columns": [c for c, _ in self.columns],
            "rows": [
                {"section": sec, "row": lab, "cells": {c: [item(x) for x in cell] for (c, _), cell in zip(self.columns, cells)}}
                for sec, lab, cells in self.rows
            ],
        }

    def render(self, unicode: bool = False) -> str:
        def item(x):
            if isinstance(x, ChordQuality):
                return x.describe(unicode)
            return render_note_set(x, unicode)

        header = ["", *(title for _, title in self.columns)]
        body = []
        last_section = None
        for sec, lab, cells in self.rows:
            if sec != last_section:
                body.append(None)
                body.append([sec.upper()] + [""] * len(cells))
                last_section = sec
            texts = [[item(x) for x in cell] for cell in cells]
            height = max(1, *(len(t) for t in texts))
            for i in range(height):
                body.append([lab if i == 0 else ""] + [t[i] if i < len(t) else "" for t in texts])
        widths = [max(len(r[j]) for r in [header] + [b for b in body if b]) for j in range(len(header))]

        def line(r):
            return " | ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip()

        rule = "-+-".join("-" * w for w in widths)
        out = [line(header)]
        for r in body:
            out.append(rule if r is None else line(r))
        out.append(rule)
        return "\n".join(out) + "\n"


def _set_key(s: frozenset):
    return tuple(sorted(int(n) for n in s))


def _rows_for(t: Tonnetz) -> dict:
    inv = inventory(t)
    rows: dict = {}
    chords = inv.distinct_face_chords()
    rows[("major triads", "faces")] = tuple(c for c in chords if c.quality is Quality.MAJOR)
    rows[("minor triads", "faces")] = tuple(c for c in chords if c.quality is Quality.MINOR)
    rows[("edges", "all edges")] = (frozenset(ALL_PITCH_CLASSES) - inv.omitted_notes,)
    for k, vs in inv.vertices_by_valency.items():
        for v in vs:
            q = v.chord.quality
            if q is Quality.AUGMENTED:
                sec = "augmented triads"
            elif q is Quality.DIMINISHED_SEVENTH:
                sec = "diminished seventh"
            else:
                sec = "anything else"
            key = (sec, f"valence {k} vertices")
            rows[key] = tuple(sorted(set(rows.get(key, ())) | {v.label.support()}, key=_set_key))
    return rows


def section7_table(tonnetzes: Optional[dict] = None) -> OverviewTable:
    """Tabulate face chords, edge coverage and vertex chords of the four root-system tori."""
    if tonnetzes is None:
        tonnetzes = {key: build(key).tonnetz for key, _ in TABLE_COLUMNS}
    per_column = [_rows_for(tonnetzes[key]) for key, _ in TABLE_COLUMNS]
    keys = set()
    for r in per_column:
        keys |= set(r)

    def order(k):
        sec, lab = k
        n = int(lab.split()[1]) if lab.startswith("valence") else 0
        return (_SECTION_ORDER.index(sec), n, lab)

    rows = tuple(
        (sec, lab, tuple(r.get((sec, lab), ()) for r in per_column)) for sec, lab in sorted(keys, key=order)
    )
    return OverviewTable(TABLE_COLUMNS, rows)
