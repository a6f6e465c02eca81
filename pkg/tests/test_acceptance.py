"""Acceptance criteria 1-12, one test each.

Every test records a PASS or FAIL line; the lines are printed as the test
runs and again in the pytest summary (see ``conftest.py``).
"""

import functools
import random
import time
from collections import Counter
from itertools import combinations_with_replacement

import golden_table7
from oracles import oracle_failures
from tonnetz import (
    ChordQuality,
    PitchMultiset,
    Quality,
    classify,
    euler_characteristic,
    extend_from_faces,
    find_transposition_symmetry,
    from_edge_map,
    from_vertex_map,
    kind,
    parse_note,
    tetrahedron,
    valency,
    verify,
)
from tonnetz import io
from tonnetz.catalog import KEYS, bauble_quadrilaterals, build
from tonnetz.report import section7_table

RESULTS = {}

TITLES = {
    1: "verifier agrees with brute force on the catalog and 1000 random 24-face tori",
    2: "extend_from_faces output verifies for 1000 random inputs",
    3: "vertex and edge tonnetzes are unique under single-label perturbation",
    4: "B2 torus: f-vector, major faces, diminished seventh vertices, omitted notes",
    5: "C2 torus: minor faces and the same omitted notes",
    6: "G2 pair: faces, completeness together, centre and valence-6 vertices",
    7: "transposition symmetries and the B2 negative control",
    8: "tritone tonnetzes: sizes and vertex supports",
    9: "bauble: sphere, 12 major ninth quadrilaterals, corner groupings",
    10: "overview table equals the golden transcription",
    11: "Euler torus is a complete major/minor vertex tonnetz",
    12: "save/load round trip on all 13 catalog keys",
}


def criterion(n):
    """Decorator: run the test body and record PASS/FAIL for criterion ``n``."""

    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                fn(*args, **kwargs)
            except BaseException as exc:
                RESULTS[n] = f"criterion {n:>2}: FAIL  {TITLES[n]} ({type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''})"
                print(RESULTS[n])
                raise
            RESULTS[n] = f"criterion {n:>2}: PASS  {TITLES[n]} [{time.perf_counter() - start:.2f}s]"
            print(RESULTS[n])

        return run

    return wrap


def notes(text):
    return frozenset(parse_note(n) for n in text.split())


def chords(roots, quality, times=1):
    return Counter({ChordQuality(quality, parse_note(r)): times for r in roots.split()})


def random_order3(rng):
    return PitchMultiset(rng.randrange(12) for _ in range(3))


def perturb(t, rng):
    """Replace one element of one randomly chosen label by a random note."""
    sids = list(t.surface.simplices())
    sid = rng.choice(sids)
    lab = list(t.label(sid))
    if not lab:
        return t
    lab[rng.randrange(len(lab))] = rng.randrange(12)
    return t.with_label(sid, lab)


def reported(t):
    return {(f.name, f.direction) for f in verify(t).failures}


# -- 1 -------------------------------------------------------------------

@criterion(1)
def test_criterion_01_verifier_matches_oracle():
    for key in KEYS:
        t = build(key).tonnetz
        assert reported(t) == oracle_failures(t) == set(), key

    rng = random.Random(20260101)
    surfaces = [build("euler").tonnetz.surface, build("tritone2").tonnetz.surface]
    assert all(s.count(2) == 24 for s in surfaces)
    disagreements, failing = 0, 0
    for i in range(1000):
        s = surfaces[i % 2]
        t = extend_from_faces(s, [random_order3(rng) for _ in range(24)], seed=i)
        if i % 2:
            t = perturb(t, rng)
        got, want = reported(t), oracle_failures(t)
        failing += bool(want)
        disagreements += got != want
    assert disagreements == 0
    # the perturbed half must actually exercise the failure path
    assert failing > 100


# -- 2 -------------------------------------------------------------------

@criterion(2)
def test_criterion_02_extension_always_verifies():
    pool = sorted({build(k).tonnetz.surface for k in KEYS}, key=lambda s: (s.f_vector, s.vertex_names))
    pool.append(tetrahedron())
    rng = random.Random(7)
    failures = 0
    for _ in range(1000):
        s = rng.choice(pool)
        labels = [random_order3(rng) for _ in range(s.count(2))]
        seed = rng.randrange(2**32)
        if not verify(extend_from_faces(s, labels, seed)).ok:
            failures += 1
    assert failures == 0


# -- 3 -------------------------------------------------------------------

def _alternatives(lab):
    """Every label that differs from ``lab`` in a single element, and for
    short labels every other multiset of the same order."""
    out = set()
    elems = list(lab)
    for pos in range(len(elems)):
        for n in range(12):
            if n != elems[pos]:
                out.add(PitchMultiset(elems[:pos] + [n] + elems[pos + 1:]))
    if len(elems) <= 3:
        out.update(PitchMultiset(c) for c in combinations_with_replacement(range(12), len(elems)))
    out.discard(lab)
    return out


def _keeps_hypotheses(u, dim, values):
    """The conditions under which uniqueness is claimed.

    Vertex case: every vertex label has support {V(v)} and every face label
    is the multiset of its corner values.  Edge case: every edge label has
    support {E(e)}.
    """
    s = u.surface
    if dim == 1:
        return all(lab.support() == {values[i]} for i, lab in enumerate(u.edge_labels))
    if not all(lab.support() == {values[i]} for i, lab in enumerate(u.vertex_labels)):
        return False
    for j, es in enumerate(s.faces):
        corners = set()
        for e in es:
            corners.update(s.edges[e])
        if u.face_labels[j] != PitchMultiset(values[v] for v in corners):
            return False
    return True


def _counterexamples(t, dim, values):
    """Verifying relabellings that still satisfy the uniqueness hypotheses."""
    assert _keeps_hypotheses(t, dim, values)
    found = []
    tried = 0
    for sid in t.surface.simplices():
        for alt in _alternatives(t.label(sid)):
            u = t.with_label(sid, alt)
            tried += 1
            if _keeps_hypotheses(u, dim, values) and verify(u).ok:
                found.append((t.surface.name(sid), alt))
    return found, tried


@criterion(3)
def test_criterion_03_uniqueness_of_vertex_and_edge_tonnetzes():
    tet = tetrahedron(("C", "Eb", "F#", "A"))
    b2s = build("b2").tonnetz.surface
    vmap_tet = [parse_note(n) for n in ("C", "Eb", "F#", "A")]
    emap_tet = [parse_note(n) for n in ("C", "D", "E", "F", "G", "A")]
    vmap_b2 = [parse_note(n) for n in ("C", "E", "G", "Bb")]
    emap_b2 = [lab.elements[0] for lab in build("b2").tonnetz.edge_labels]
    cases = [
        (from_vertex_map(tet, vmap_tet), 0, vmap_tet),
        (from_edge_map(tet, emap_tet), 1, emap_tet),
        (from_vertex_map(b2s, vmap_b2), 0, vmap_b2),
        (from_edge_map(b2s, emap_b2), 1, emap_b2),
    ]
    total = 0
    for t, dim, values in cases:
        assert verify(t).ok
        found, tried = _counterexamples(t, dim, values)
        total += tried
        assert found == [], found[:3]
    assert total > 5000


# -- 4 -------------------------------------------------------------------

@criterion(4)
def test_criterion_04_b2_torus():
    t = build("b2").tonnetz
    s = t.surface
    assert s.f_vector == (4, 12, 8)
    assert Counter(classify(x) for x in t.face_labels) == chords("F Ab B D", Quality.MAJOR, 2)
    four = [v for v in s.simplices(0) if valency(s, v) == 4]
    assert four
    for v in four:
        assert t.label(v).support() == notes("A C Eb Gb")
    covered = frozenset().union(*(x.support() for x in t.edge_labels))
    assert frozenset(range(12)) - covered == notes("A# C# E G")


# -- 5 -------------------------------------------------------------------

@criterion(5)
def test_criterion_05_c2_torus():
    t = build("c2").tonnetz
    assert Counter(classify(x) for x in t.face_labels) == chords("D F Ab B", Quality.MINOR, 2)
    covered = frozenset().union(*(x.support() for x in t.edge_labels))
    assert frozenset(range(12)) - covered == notes("A# C# E G")


# -- 6 -------------------------------------------------------------------

def _valence_supports(t, k):
    s = t.surface
    return {t.label(v).support() for v in s.simplices(0) if valency(s, v) == k}


@criterion(6)
def test_criterion_06_g2_pair():
    g, d = build("g2").tonnetz, build("g2_dual").tonnetz
    g_faces = Counter(classify(x) for x in g.face_labels)
    d_faces = Counter(classify(x) for x in d.face_labels)
    assert g_faces == chords("D E F# Ab Bb C", Quality.MAJOR) + chords("A B C# Eb F G", Quality.MINOR)
    assert d_faces == chords("A B Db Eb F G", Quality.MAJOR) + chords("D E F# G# Bb C", Quality.MINOR)
    union = g_faces + d_faces
    every = chords("A Bb B C Db D Eb E F Gb G Ab", Quality.MAJOR) + chords("A Bb B C Db D Eb E F Gb G Ab", Quality.MINOR)
    assert union == every
    assert g.label("center").support() == frozenset(range(12))
    assert _valence_supports(g, 6) == {notes("C E G#"), notes("D F# A#")}
    assert _valence_supports(d, 6) == {notes("F A C#"), notes("G B D#")}


# -- 7 -------------------------------------------------------------------

@criterion(7)
def test_criterion_07_symmetries():
    g = build("g2").tonnetz
    for k, order in ((2, 6), (4, 3), (6, 2)):
        phi = find_transposition_symmetry(g, k)
        assert phi is not None and phi.order() == order, (k, phi)
    for key, k in (("tritone1", 2), ("tritone1", 4), ("tritone2", 4), ("bauble", 4)):
        t = build(key).tonnetz
        phi = find_transposition_symmetry(t, k)
        assert phi is not None, (key, k)
        # independent check of the defining property
        for sid in t.surface.simplices():
            assert t.label(phi.image(sid)) == t.label(sid).transpose(k)
    assert find_transposition_symmetry(build("b2").tonnetz, 1) is None


# -- 8 -------------------------------------------------------------------

@criterion(8)
def test_criterion_08_tritone_tonnetzes():
    t1 = build("tritone1").tonnetz
    assert t1.surface.count(2) == 6 and t1.surface.count(0) == 3
    assert Counter(x.support() for x in t1.vertex_labels) == Counter(
        [notes("A B Db Eb F G"), notes("A Bb C# D F F#"), notes("G Ab B C D# E")]
    )
    t2 = build("tritone2").tonnetz
    assert t2.surface.count(2) == 24
    supports = [x.support() for x in t2.vertex_labels]
    assert notes("A C# F") in supports
    assert notes("Bb B C Db D D#") in supports
    assert notes("F# G Ab A Bb B") in supports
    assert PitchMultiset("G G A A B B") in t2.vertex_labels


# -- 9 -------------------------------------------------------------------

@criterion(9)
def test_criterion_09_bauble():
    entry = build("bauble")
    t = entry.tonnetz
    s = t.surface
    assert s.f_vector == (14, 36, 24)
    assert euler_characteristic(s) == 2
    quads = bauble_quadrilaterals(entry)
    assert len(quads) == 12
    assert sorted(f for q in quads for f in q.faces) == sorted(s.face_names)
    roots = Counter()
    by_corner = {}
    for q in quads:
        f1, f2 = (s.lookup(f).index for f in q.faces)
        shared = set(s.faces[f1]) & set(s.faces[f2])
        assert {s.edge_names[e] for e in shared} == {q.diagonal}
        # five edges, diagonal counted once
        five = set(s.faces[f1]) | set(s.faces[f2])
        assert len(five) == 5
        chord = frozenset().union(*(t.edge_labels[e].support() for e in five))
        assert chord == q.chord.support()
        c = classify(q.chord)
        assert c.quality is Quality.MAJOR_NINTH
        assert chord == {(int(c.root) + i) % 12 for i in (0, 2, 4, 7, 11)}
        roots[int(c.root)] += 1
        by_corner.setdefault(q.corner, set()).add(c.root)
    assert roots == Counter(range(12))
    assert by_corner == {
        "X": notes("F F# G"),
        "Y": notes("A Bb B"),
        "Z": notes("Db D Eb"),
        "W": notes("C E Ab"),
    }


# -- 10 ------------------------------------------------------------------

def computed_table():
    table = section7_table()
    out = {}
    for sec, lab, cells in table.rows:
        for (col, _), cell in zip(table.columns, cells):
            if isinstance(next(iter(cell), None), ChordQuality):
                out[((sec, lab), col)] = frozenset(int(c.root) for c in cell)
            else:
                out[((sec, lab), col)] = frozenset(frozenset(int(n) for n in x) for x in cell)
    return table, out


@criterion(10)
def test_criterion_10_overview_table():
    table, got = computed_table()
    want = golden_table7.normalised(with_errata=True)
    assert set(got) == set(want)
    wrong = {k: (got[k], want[k]) for k in want if got[k] != want[k]}
    assert wrong == {}
    # printed chord lists are ordered by root residue
    for sec, lab, cells in table.rows:
        for cell in cells:
            items = list(cell)
            if items and isinstance(items[0], ChordQuality):
                assert [int(c.root) for c in items] == sorted(int(c.root) for c in items)
    assert table.render() == section7_table().render()


# -- 11 ------------------------------------------------------------------

@criterion(11)
def test_criterion_11_euler_torus():
    t = build("euler").tonnetz
    assert t.surface.count(2) == 24
    faces = Counter(classify(x) for x in t.face_labels)
    majors = {c.root for c in faces if c.quality is Quality.MAJOR}
    minors = {c.root for c in faces if c.quality is Quality.MINOR}
    assert len(majors) == 12 and len(minors) == 12
    assert set(faces.values()) == {1}
    assert all(len(x.support()) == 1 for x in t.vertex_labels)
    k = kind(t)
    assert k.is_vertex_tonnetz and k.is_complete_major_minor


# -- 12 ------------------------------------------------------------------

@criterion(12)
def test_criterion_12_round_trip(tmp_path):
    for key in KEYS:
        entry = build(key)
        path = tmp_path / f"{key}.json"
        io.save(entry, path)
        loaded = io.load(path)
        assert loaded.tonnetz == entry.tonnetz, key
        assert loaded.layout == entry.layout, key
        assert loaded.report.ok
        again = tmp_path / f"{key}-again.json"
        io.save(loaded, again)
        assert again.read_text(encoding="utf-8") == path.read_text(encoding="utf-8"), key
