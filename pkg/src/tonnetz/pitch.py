"""Pitch classes mod 12, note names, multisets and chord classification.

Residues are counted in semitones above A, so ``A = 0``, ``C = 3`` and
``G = 10``.  Every spelling that the figures use (including double flats
such as ``Ebb``) parses to a residue; printing picks one canonical
spelling per residue, flats preferred.
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union

__all__ = [
    "PitchClass",
    "Interval",
    "PitchMultiset",
    "Quality",
    "ChordQuality",
    "NoteParseError",
    "parse_note",
    "note_name",
    "parse_chord",
    "classify",
    "transpose",
    "ALL_PITCH_CLASSES",
]

_BASE = {"A": 0, "B": 2, "C": 3, "D": 5, "E": 7, "F": 8, "G": 10}
_SHARPS = {"#": 1, "♯": 1, "s": 1}
_FLATS = {"b": -1, "♭": -1, "f": -1}
_TOKEN = re.compile(r"^([A-G])([#♯sb♭f]*)$")

_ASCII_NAMES = ("A", "Bb", "B", "C", "Db", "D", "Eb", "E", "F", "Gb", "G", "Ab")
_UNICODE_NAMES = tuple(n.replace("b", "♭") for n in _ASCII_NAMES)


class NoteParseError(ValueError):
    """A note name could not be read."""

    def __init__(self, token: str, reason: str = "not a note name") -> None:
        self.token = token
        super().__init__(f"{token!r}: {reason}")


class PitchClass(int):
    """A residue class mod 12, 0 being A.

    Behaves like an ``int`` in comparisons and hashing, but addition and
    subtraction wrap around the octave.  The difference of two pitch
    classes is an :class:`Interval`.
    """

    __slots__ = ()

    def __new__(cls, value: Union[int, str]) -> "PitchClass":
        if isinstance(value, str):
            return parse_note(value)
        return super().__new__(cls, int(value) % 12)

    @property
    def value(self) -> int:
        return int(self)

    def __add__(self, other: int) -> "PitchClass":
        return PitchClass(int(self) + int(other))

    __radd__ = __add__

    def __sub__(self, other: int):
        if isinstance(other, PitchClass):
            return Interval(int(self) - int(other))
        return PitchClass(int(self) - int(other))

    def name(self, unicode: bool = False) -> str:
        return note_name(self, unicode=unicode)

    def __repr__(self) -> str:
        return f"PitchClass({self.name()})"

    def __str__(self) -> str:
        return self.name()


class Interval(int):
    """A number of semitones mod 12."""

    __slots__ = ()

    def __new__(cls, semitones: int) -> "Interval":
        return super().__new__(cls, int(semitones) % 12)

    @property
    def semitones(self) -> int:
        return int(self)

    def __add__(self, other: int):
        if isinstance(other, PitchClass):
            return PitchClass(int(self) + int(other))
        return Interval(int(self) + int(other))

    __radd__ = __add__

    def __sub__(self, other: int) -> "Interval":
        return Interval(int(self) - int(other))

    def __neg__(self) -> "Interval":
        return Interval(-int(self))

    def __repr__(self) -> str:
        return f"Interval({int(self)})"


ALL_PITCH_CLASSES = tuple(PitchClass(i) for i in range(12))


def parse_note(name: str) -> PitchClass:
    """Read a note name such as ``"A"``, ``"F#"``, ``"E♭♭"`` or ``"Bf"``."""
    if not isinstance(name, str):
        raise NoteParseError(repr(name), "expected a string")
    token = name.strip()
    m = _TOKEN.match(token)
    if m is None:
        raise NoteParseError(name)
    letter, accidentals = m.groups()
    shift = sum(_SHARPS.get(ch, 0) + _FLATS.get(ch, 0) for ch in accidentals)
    return PitchClass(_BASE[letter] + shift)


def note_name(pc: int, unicode: bool = False) -> str:
    """Canonical (flats-preferred) spelling of a residue."""
    table = _UNICODE_NAMES if unicode else _ASCII_NAMES
    return table[int(pc) % 12]


def _coerce(x) -> PitchClass:
    if isinstance(x, PitchClass):
        return x
    if isinstance(x, str):
        return parse_note(x)
    return PitchClass(x)


@dataclass(frozen=True, init=False)
class PitchMultiset:
    """A finite multiset of pitch classes.

    Stored as a sorted tuple so that equality and hashing are
    multiplicity-sensitive: ``{A, A}`` and ``{A}`` differ.
    """

    elements: tuple

    def __init__(self, notes: Iterable = ()) -> None:
        if isinstance(notes, str):
            notes = notes.replace(",", " ").split()
        elems = tuple(sorted(_coerce(n) for n in notes))
        object.__setattr__(self, "elements", elems)

    @classmethod
    def from_counts(cls, counts) -> "PitchMultiset":
        out = []
        for pc, k in dict(counts).items():
            if k < 0:
                raise ValueError(f"negative multiplicity for {pc!r}")
            out.extend([_coerce(pc)] * k)
        return cls(out)

    @property
    def counts(self) -> dict:
        return dict(Counter(self.elements))

    def order(self) -> int:
        return len(self.elements)

    def support(self) -> frozenset:
        return frozenset(self.elements)

    def multiplicity(self, pc) -> int:
        return self.elements.count(_coerce(pc))

    def transpose(self, k: int) -> "PitchMultiset":
        return PitchMultiset(p + k for p in self.elements)

    def __add__(self, other: "PitchMultiset") -> "PitchMultiset":
        return PitchMultiset(self.elements + tuple(other.elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[PitchClass]:
        return iter(self.elements)

    def __contains__(self, pc) -> bool:
        try:
            return _coerce(pc) in self.elements
        except (NoteParseError, TypeError, ValueError):
            return False

    def names(self, unicode: bool = False) -> list:
        return [note_name(p, unicode) for p in self.elements]

    def __str__(self) -> str:
        return "{" + ",".join(self.names()) + "}"

    def __repr__(self) -> str:
        return f"PitchMultiset({self.names()!r})"


def parse_chord(text) -> PitchMultiset:
    """Build a multiset from ``"C,E,G"``, ``"C E G"`` or a list of names."""
    return PitchMultiset(text)


def transpose(chord: PitchMultiset, k: int) -> PitchMultiset:
    """Shift every element of ``chord`` by ``k`` semitones."""
    return chord.transpose(k)


class Quality(enum.Enum):
    MAJOR = "major"
    MINOR = "minor"
    DIMINISHED = "diminished"
    AUGMENTED = "augmented"
    DIMINISHED_SEVENTH = "diminished seventh"
    MAJOR_NINTH = "major ninth"
    WHOLE_TONE = "whole-tone triple"
    UNISON = "unison"
    OTHER = "other"


# (quality, interval pattern, symmetry period of the pattern)
_PATTERNS = (
    (Quality.MAJOR, (0, 4, 7), 12),
    (Quality.MINOR, (0, 3, 7), 12),
    (Quality.DIMINISHED, (0, 3, 6), 12),
    (Quality.AUGMENTED, (0, 4, 8), 4),
    (Quality.DIMINISHED_SEVENTH, (0, 3, 6, 9), 3),
    (Quality.MAJOR_NINTH, (0, 2, 4, 7, 11), 12),
    (Quality.WHOLE_TONE, (0, 2, 4), 12),
)


@dataclass(frozen=True)
class ChordQuality:
    """Result of :func:`classify`.

    ``root`` is ``None`` only for :attr:`Quality.OTHER`.  Augmented and
    diminished-seventh chords have several equally good roots; the least
    residue is used.
    """

    quality: Quality
    root: Optional[PitchClass] = None

    def transpose(self, k: int) -> "ChordQuality":
        if self.root is None:
            return self
        root = self.root + k
        if self.quality is Quality.AUGMENTED:
            root = PitchClass(int(root) % 4)
        elif self.quality is Quality.DIMINISHED_SEVENTH:
            root = PitchClass(int(root) % 3)
        return ChordQuality(self.quality, root)

    def symbol(self, unicode: bool = False) -> str:
        """Short figure-style name: ``"D"`` for D major, ``"d"`` for D minor."""
        if self.root is None:
            return "?"
        name = note_name(self.root, unicode)
        if self.quality is Quality.MAJOR:
            return name
        if self.quality is Quality.MINOR:
            return name[0].lower() + name[1:]
        return self.describe(unicode)

    def describe(self, unicode: bool = False) -> str:
        if self.root is None:
            return self.quality.value
        return f"{note_name(self.root, unicode)} {self.quality.value}"

    def __str__(self) -> str:
        return self.describe()


def classify(chord) -> ChordQuality:
    """Name the chord formed by the support of ``chord``."""
    if not isinstance(chord, PitchMultiset):
        chord = PitchMultiset(chord)
    support = chord.support()
    if len(support) == 1:
        return ChordQuality(Quality.UNISON, next(iter(support)))
    for quality, pattern, period in _PATTERNS:
        if len(pattern) != len(support):
            continue
        for root in range(period):
            if support == {(root + i) % 12 for i in pattern}:
                return ChordQuality(quality, PitchClass(root))
    return ChordQuality(Quality.OTHER)
