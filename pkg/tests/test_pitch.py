from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from oracles import chord_table
from tonnetz import (
    ChordQuality,
    Interval,
    NoteParseError,
    PitchClass,
    PitchMultiset,
    Quality,
    classify,
    note_name,
    parse_note,
    transpose,
)
from tonnetz.pitch import ALL_PITCH_CLASSES, parse_chord

pcs = st.integers(min_value=0, max_value=11)
multisets = st.lists(pcs, min_size=0, max_size=8).map(PitchMultiset)


@pytest.mark.parametrize(
    "name, value",
    [
        ("A", 0),
        ("C", 3),
        ("G#", 11),
        ("Ab", 11),
        ("E♭♭", 5),
        ("Ebb", 5),
        ("D", 5),
        ("G♭", 9),
        ("F♯", 9),
        ("Fs", 9),
        ("Gf", 9),
        ("B#", 3),
        ("Cb", 2),
        ("E♭", 6),
        ("C♯#", 5),
    ],
)
def test_parse_note(name, value):
    assert parse_note(name) == value


@pytest.mark.parametrize("bad", ["", "H", "c", "Cx", "A#4", "A B", "♭"])
def test_parse_note_rejects(bad):
    with pytest.raises(NoteParseError) as err:
        parse_note(bad)
    assert repr(bad) in str(err.value) or bad in str(err.value)


def test_print_then_parse_round_trips():
    for pc in ALL_PITCH_CLASSES:
        assert parse_note(note_name(pc)) == pc
        assert parse_note(note_name(pc, unicode=True)) == pc


def test_flats_are_preferred_when_printing():
    assert [note_name(i) for i in range(12)] == ["A", "Bb", "B", "C", "Db", "D", "Eb", "E", "F", "Gb", "G", "Ab"]
    assert note_name(1, unicode=True) == "B♭"


def test_pitch_class_arithmetic_wraps():
    assert PitchClass(11) + 3 == 2
    assert PitchClass(1) - 4 == 9
    assert isinstance(PitchClass(1) + 1, PitchClass)
    assert PitchClass(-1) == 11
    assert PitchClass("F#") == 9
    assert str(PitchClass(6)) == "Eb"


def test_difference_of_pitch_classes_is_an_interval():
    d = PitchClass(3) - PitchClass(0)
    assert isinstance(d, Interval) and d == 3
    assert PitchClass(0) - PitchClass(3) == 9


@given(pcs, pcs, pcs)
def test_interval_composition(a, b, c):
    x, y, z = Interval(a), Interval(b), Interval(c)
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert x + Interval(0) == x
    assert x + (-x) == 0


def test_multiset_basics():
    m = PitchMultiset("A, A C")
    assert m.order() == 3 == len(m)
    assert m.support() == {0, 3}
    assert m.multiplicity("A") == 2
    assert m.counts == {0: 2, 3: 1}
    assert PitchMultiset("A A") != PitchMultiset("A")
    assert str(m) == "{A,A,C}"
    assert PitchMultiset.from_counts({"A": 2, 3: 1}) == m
    assert m + PitchMultiset("E") == PitchMultiset("A A C E")
    assert "C" in m and "D" not in m


def test_transpose_examples():
    assert transpose(parse_chord("F A C"), 2) == parse_chord("G B D")
    assert transpose(parse_chord("A"), 0) == parse_chord("A")
    dim7 = parse_chord("A C Eb Gb")
    assert transpose(dim7, 3) == dim7


@given(multisets, pcs)
def test_transpose_keeps_multiplicities(m, k):
    t = transpose(m, k)
    assert t.order() == m.order()
    assert sorted(t.counts.values()) == sorted(m.counts.values())
    assert transpose(t, -k) == m


@pytest.mark.parametrize(
    "chord, quality, root",
    [
        ("C E G", Quality.MAJOR, "C"),
        ("D F A", Quality.MINOR, "D"),
        ("A C Eb Gb", Quality.DIMINISHED_SEVENTH, "A"),
        ("C E G#", Quality.AUGMENTED, "C"),
        ("A A A", Quality.UNISON, "A"),
        ("C E G B D", Quality.MAJOR_NINTH, "C"),
        ("C Eb Gb", Quality.DIMINISHED, "C"),
        ("C D E", Quality.WHOLE_TONE, "C"),
        ("D F# A D D", Quality.MAJOR, "D"),
    ],
)
def test_classify_examples(chord, quality, root):
    assert classify(parse_chord(chord)) == ChordQuality(quality, parse_note(root))


def test_classify_other():
    assert classify(parse_chord("C C# D")).quality is Quality.OTHER
    assert classify(PitchMultiset()).quality is Quality.OTHER


def test_classify_agrees_with_enumeration_on_every_support():
    """All 4096 subsets of the twelve notes."""
    table = chord_table()
    by_name = {q.value: q for q in Quality}
    for r in range(13):
        for support in combinations(range(12), r):
            got = classify(PitchMultiset(support))
            fs = frozenset(support)
            if r == 1:
                assert got == ChordQuality(Quality.UNISON, support[0])
            elif fs in table:
                options = table[fs]
                # the patterns never overlap on a support
                assert len({name for name, _ in options}) == 1
                name = next(iter(options))[0]
                assert got.quality is by_name[name]
                assert got.root == min(root for _, root in options)
            else:
                assert got.quality is Quality.OTHER and got.root is None


@given(multisets, pcs)
def test_classify_commutes_with_transposition(m, k):
    assert classify(transpose(m, k)) == classify(m).transpose(k)


def test_symbols():
    assert classify(parse_chord("D F# A")).symbol() == "D"
    assert classify(parse_chord("D F A")).symbol() == "d"
    assert classify(parse_chord("C# E G#")).symbol() == "db"
    assert classify(parse_chord("Eb Gb Bb")).symbol(unicode=True) == "e♭"
    assert classify(parse_chord("C E G")).describe() == "C major"
