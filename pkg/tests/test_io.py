import json

import pytest

from tonnetz import VerificationError, constant_tonnetz, tetrahedron
from tonnetz import io
from tonnetz.catalog import KEYS, build


def doc_of(key):
    return io.to_document(build(key))


@pytest.mark.parametrize("key", KEYS)
def test_document_round_trip(key):
    doc = doc_of(key)
    loaded = io.from_document(json.loads(json.dumps(doc)))
    assert loaded.tonnetz == build(key).tonnetz
    assert io.to_document(loaded) == doc


def test_plain_tonnetz_round_trip(tmp_path):
    t = constant_tonnetz(tetrahedron(), "Eb")
    path = tmp_path / "t.json"
    io.save(t, path)
    loaded = io.load(path)
    assert loaded.tonnetz == t
    assert loaded.layout == {} and loaded.quads == ()
    assert "layout" not in json.loads(path.read_text())


def test_labels_are_ascii_note_lists():
    doc = doc_of("g2")
    assert doc["labels"]["center"][:2] == ["A", "Bb"]
    assert all(isinstance(n, str) and n.isascii() for lab in doc["labels"].values() for n in lab)


def test_quads_survive():
    loaded = io.loads(io.dumps(build("bauble")))
    assert len(loaded.quads) == 12
    assert loaded.meta["key"] == "bauble"


# -- schema errors --------------------------------------------------------

def test_face_with_missing_edge_names_the_face():
    doc = doc_of("b2")
    doc["faces"][2]["edges"][1] = "nowhere"
    with pytest.raises(io.SchemaError) as err:
        io.from_document(doc)
    assert "f2" in str(err.value) and "nowhere" in str(err.value)
    assert err.value.where.startswith("faces[2]")


@pytest.mark.parametrize(
    "mutate, fragment",
    [
        (lambda d: d.pop("labels"), "labels"),
        (lambda d: d["vertices"].append(d["vertices"][0]), "duplicate vertex"),
        (lambda d: d["edges"][0]["verts"].append("top"), "2 vertices"),
        (lambda d: d["edges"][0]["verts"].__setitem__(0, "ghost"), "unknown vertex"),
        (lambda d: d["faces"][0]["edges"].pop(), "3 edges"),
        (lambda d: d["labels"].__setitem__("e0", ["H"]), "labels.e0"),
        (lambda d: d["labels"].pop("e0"), "no label for e0"),
        (lambda d: d["labels"].__setitem__("zz", ["A"]), "no simplex"),
        (lambda d: d.__setitem__("edges", {}), "expected list"),
        (lambda d: d["layout"].__setitem__("f0", [[0, 0]]), "3 points"),
    ],
)
def test_schema_errors(mutate, fragment):
    doc = doc_of("b2")
    mutate(doc)
    with pytest.raises(io.SchemaError, match=fragment):
        io.from_document(doc)


def test_bad_json_reports_the_line():
    with pytest.raises(io.SchemaError, match="line 3"):
        io.loads('{\n "vertices": [],\n "edges": [,]\n}')


def test_open_surface_is_a_schema_error_unless_unchecked():
    doc = doc_of("tetra_dim")
    gone = doc["faces"].pop()["name"]
    doc["labels"].pop(gone)
    doc["layout"].pop(gone)
    with pytest.raises(io.SchemaError, match="closed"):
        io.from_document(doc)
    loaded = io.from_document(doc, unchecked=True)
    assert loaded.report is None


def test_hand_edited_bauble_needs_unchecked():
    doc = doc_of("bauble")
    edge = next(n for n in doc["labels"] if "-" in n)
    old = doc["labels"][edge][0]
    new = "C" if old != "C" else "D"
    doc["labels"][edge] = [new, new]
    with pytest.raises(VerificationError) as err:
        io.from_document(doc)
    assert edge in err.value.report.failing_simplices()
    loaded = io.from_document(doc, unchecked=True)
    assert not loaded.report.ok
    assert edge in loaded.report.failing_simplices()


# -- exports ----------------------------------------------------------------

def test_dot_for_b2():
    text = io.export_dot(build("b2"))
    assert text.startswith("graph dual {")
    assert text.count(" -- ") == 12
    assert text.count("[label=") - text.count(" -- ") == 8
    assert "D major" in text


def test_dot_for_constant_tetrahedron():
    text = io.export_dot(constant_tonnetz(tetrahedron(), "A"))
    node_lines = [l for l in text.splitlines() if "[label=" in l and " -- " not in l]
    assert len(node_lines) == 4
    assert all("unison" in l for l in node_lines)


def test_svg_for_bauble():
    text = io.export_svg(build("bauble"))
    assert text.count("<polygon") == 24
    assert text.count('class="edge"') == 36
    assert text.count('class="face"') == 24
    assert text == io.export_svg(build("bauble"))
    assert text.startswith("<?xml")


@pytest.mark.parametrize("key", KEYS)
def test_svg_labels_every_edge_once(key):
    entry = build(key)
    text = io.export_svg(entry)
    assert text.count("<polygon") == entry.tonnetz.surface.count(2)
    assert text.count('class="edge"') == entry.tonnetz.surface.count(1)


def test_svg_needs_a_layout():
    with pytest.raises(ValueError, match="layout"):
        io.export_svg(build("b2").tonnetz)


def test_exports_write_files(tmp_path):
    io.export_dot(build("g2"), tmp_path / "g2.dot")
    io.export_svg(build("g2"), tmp_path / "g2.svg")
    assert (tmp_path / "g2.dot").read_text().startswith("graph")
    assert "<svg" in (tmp_path / "g2.svg").read_text(encoding="utf-8")
