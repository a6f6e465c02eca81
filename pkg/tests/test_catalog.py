import math
from collections import Counter, defaultdict
from fractions import Fraction

import pytest

from tonnetz import ChordQuality, PitchMultiset, Quality, parse_note
from tonnetz.catalog import (
    FACTS,
    KEYS,
    CatalogError,
    ExpectedFacts,
    bauble_quadrilaterals,
    build,
    check_facts,
    edge_support_union,
)
from tonnetz.catalog import builders as B
from tonnetz.catalog import figures as F
from tonnetz.catalog._net import Lattice, glue, inside
from tonnetz.coherence import face_chords
from tonnetz.report import completeness

SQRT3 = math.sqrt(3)


def notes(text):
    return frozenset(parse_note(n) for n in text.split())


@pytest.mark.parametrize("key", KEYS)
def test_every_entry_builds_and_meets_its_facts(key):
    entry = build(key)
    assert entry.key == key
    assert check_facts(entry.tonnetz, entry.expected) == []
    assert entry.provenance


def test_unknown_key():
    with pytest.raises(KeyError, match="unknown catalog key"):
        build("a2")


@pytest.mark.parametrize(
    "key, f",
    [
        ("euler", (12, 36, 24)),
        ("b2", (4, 12, 8)),
        ("c2", (4, 12, 8)),
        ("g2", (6, 18, 12)),
        ("g2_dual", (6, 18, 12)),
        ("tritone1", (3, 9, 6)),
        ("tritone2", (12, 36, 24)),
        ("bauble", (14, 36, 24)),
        ("tetra_dim", (4, 6, 4)),
    ],
)
def test_f_vectors(key, f):
    assert build(key).f_vector == f


def test_figure_numbers_appear_only_in_provenance():
    assert "Figure 3" in build("b2").provenance
    assert "Figures 11" in build("bauble").provenance


# -- transcription errata ----------------------------------------------------

def _minority_arrows(arrows, periods):
    """Arrows whose printed note loses to the other copies of the same edge."""
    segs = [(B._grid(a), B._grid(b), parse_note(n), (a, b)) for n, a, b in arrows]
    net = glue([(p, q) for p, q, _, _ in segs], Lattice(*periods))
    by_edge = defaultdict(list)
    for p, q, n, key in segs:
        by_edge[net.edge_at(p, q)[0]].append((n, key))
    out = {}
    for items in by_edge.values():
        votes = Counter(n for n, _ in items)
        if len(votes) == 1:
            continue
        (winner, top), *rest = votes.most_common()
        assert top > sum(c for _, c in rest), "no clear majority"
        out.update({key: (n, winner) for n, key in items if n != winner})
    return out


@pytest.mark.parametrize(
    "arrows, periods, domain, errata",
    [
        (F.B2_ARROWS, F.B2_PERIODS, F.B2_DOMAIN, F.B2_ERRATA),
        (F.C2_ARROWS, F.C2_PERIODS, F.C2_DOMAIN, F.C2_ERRATA),
    ],
)
def test_errata_are_exactly_the_outvoted_arrows(arrows, periods, domain, errata):
    found = _minority_arrows(arrows, periods)
    assert set(found) == set(errata)
    for key, (printed, fixed) in errata.items():
        assert found[key] == (parse_note(printed), parse_note(fixed))
        # every corrected arrow lies outside the fundamental domain
        p, q = (B._grid(x) for x in key)
        mid = (Fraction(p[0] + q[0], 2), Fraction(p[1] + q[1], 2))
        assert not inside([B._grid(x) for x in domain], mid)


def test_corrected_arrows_checks_the_printed_note():
    with pytest.raises(ValueError, match="expects"):
        B.corrected_arrows([("C", "1-1", "1-3")], {("1-1", "1-3"): ("D", "E")})


# -- drawings ------------------------------------------------------------

def _area(tri):
    (ax, ay), (bx, by), (cx, cy) = tri
    return abs((bx - ax) * (cy - ay) - (cx - ax) * (by - ay)) / 2


@pytest.mark.parametrize(
    "key, periods, unit",
    [
        ("euler", F.EULER_PERIODS, SQRT3 / 4),
        ("b2", F.B2_PERIODS, 1 / 4),
        ("c2", F.C2_PERIODS, 1 / 4),
        ("g2", F.G2_PERIODS, SQRT3 / 16),
        ("g2_dual", F.G2_PERIODS, SQRT3 / 16),
        ("tritone1", F.TRITONE1_PERIODS, SQRT3 / 4),
        ("tritone2", F.TRITONE2_PERIODS, SQRT3 / 4),
    ],
)
def test_torus_layout_tiles_one_fundamental_domain(key, periods, unit):
    entry = build(key)
    assert set(entry.layout) == set(entry.tonnetz.surface.face_names)
    (a, b), (c, d) = periods
    total = sum(_area(t) for t in entry.layout.values())
    assert total == pytest.approx(abs(a * d - b * c) * unit, rel=1e-4)
    assert all(_area(t) > 1e-6 for t in entry.layout.values())


def test_sphere_layouts_cover_every_face():
    for key in ("bauble", "tetra_dim"):
        entry = build(key)
        assert set(entry.layout) == set(entry.tonnetz.surface.face_names)


# -- relations between entries -------------------------------------------------

def test_b2_and_c2_are_relative():
    b2, c2 = build("b2").tonnetz, build("c2").tonnetz
    b_roots = {c.root for c in face_chords(b2) if c.quality is Quality.MAJOR}
    c_roots = {c.root for c in face_chords(c2) if c.quality is Quality.MINOR}
    assert b_roots == c_roots == notes("F Ab B D")
    assert edge_support_union(b2) == edge_support_union(c2)


def test_whole_tone_transposes_of_b2_cover_all_majors():
    cov = completeness([build(k).tonnetz for k in ("b2", "b2_up2", "b2_down2")])
    assert cov.all_majors and not cov.all_minors
    cov = completeness([build(k).tonnetz for k in ("c2", "c2_up2", "c2_down2")])
    assert cov.all_minors


def test_g2_pair_is_complete():
    cov = completeness([build("g2").tonnetz, build("g2_dual").tonnetz])
    assert cov.complete and cov.each_once


def test_tritone2_repeats_tritone1_chords_with_new_vertex_profile():
    t1, t2 = build("tritone1").tonnetz, build("tritone2").tonnetz
    c1, c2 = Counter(face_chords(t1)), Counter(face_chords(t2))
    assert c2 == Counter({c: 4 * n for c, n in c1.items()})
    assert Counter(len(x.support()) for x in t1.vertex_labels) != Counter(len(x.support()) for x in t2.vertex_labels)


def test_tetra_dim_faces_are_diminished():
    t = build("tetra_dim").tonnetz
    assert {c.quality for c in face_chords(t)} == {Quality.DIMINISHED}


# -- the bauble ---------------------------------------------------------------

def test_bauble_quadrilaterals():
    quads = bauble_quadrilaterals(build("bauble"))
    assert len(quads) == 12
    by_root = {q.quality.root: q for q in quads}
    c = by_root[parse_note("C")]
    assert c.chord.support() == notes("C E G B D")
    assert c.corner == "W"
    for q in quads:
        assert q.chord.order() == 5


def test_quadrilaterals_only_for_the_bauble():
    with pytest.raises(KeyError):
        bauble_quadrilaterals(build("b2"))


# -- fact checking catches mistakes ---------------------------------------------

def test_check_facts_reports_each_kind_of_mismatch():
    t = build("g2").tonnetz
    good = FACTS["g2"]
    wrong = ExpectedFacts(
        f_vector=(6, 18, 13),
        face_chords=Counter({ChordQuality(Quality.MAJOR, parse_note("C")): 12}),
        vertex_chords={"center": notes("C"), "corner_a": PitchMultiset("C E")},
        symmetries=((2, True, 3), (1, True, None)),
        omitted_notes=notes("C"),
        flags={"is_vertex_tonnetz": True},
        euler_characteristic=2,
    )
    assert check_facts(t, good) == []
    problems = check_facts(t, wrong)
    assert len(problems) == 9
    assert any("f-vector" in p for p in problems)
    assert any("order 6" in p for p in problems)
    assert any("transposition symmetry by 1" in p for p in problems)


def test_transposed_facts_follow_the_tonnetz():
    assert check_facts(build("b2_up2").tonnetz, FACTS["b2"].transpose(2)) == []
    assert check_facts(build("b2_up2").tonnetz, FACTS["b2"]) != []


def test_catalog_error_is_a_value_error():
    assert issubclass(CatalogError, ValueError)
