"""JSON documents for labelled surfaces, plus DOT and SVG export.

A document looks like::

    {
      "vertices": ["top", "side", ...],
      "edges": [{"name": "e0", "verts": ["top", "side"]}, ...],
      "faces": [{"name": "f0", "edges": ["e0", "e4", "e7"]}, ...],
      "labels": {"top": ["A", "A", "C", "C"], "e0": ["A", "A"], ...},
      "layout": {"f0": [[0.0, 0.0], [1.0, 0.0], [0.5, 0.866]]},
      "quads": [{"faces": ["f0", "f1"], "diagonal": "e3", "corner": "W"}],
      "meta": {"key": "b2", "provenance": "..."}
    }

``layout``, ``quads`` and ``meta`` are optional.  List order matters: it
fixes simplex indices and, for edges and faces, the slot order.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field
from typing import Optional

from .coherence import Tonnetz, VerificationError, VerificationReport, verify
from .complex import SimplexId, SimplicialSurface, validate
from .pitch import NoteParseError, PitchMultiset, classify, note_name, parse_note

__all__ = [
    "SchemaError",
    "Loaded",
    "to_document",
    "from_document",
    "load",
    "loads",
    "save",
    "dumps",
    "export_dot",
    "export_svg",
]


class SchemaError(ValueError):
    """A document does not follow the schema; ``where`` is a key path."""

    def __init__(self, where: str, message: str) -> None:
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


@dataclass(frozen=True)
class Loaded:
    """A tonnetz read from a document, with whatever came along with it."""

    tonnetz: Tonnetz
    report: Optional[VerificationReport] = None
    layout: dict = field(default_factory=dict, compare=False)
    quads: tuple = field(default=(), compare=False)
    meta: dict = field(default_factory=dict, compare=False)


# -- building documents --------------------------------------------------

def _unpack(obj):
    """(tonnetz, layout, quads, meta) from a Tonnetz, Loaded or CatalogEntry."""
    if isinstance(obj, Tonnetz):
        return obj, {}, (), {}
    if isinstance(obj, Loaded):
        return obj.tonnetz, obj.layout, obj.quads, obj.meta
    if hasattr(obj, "tonnetz") and hasattr(obj, "key"):
        quads = tuple((q.faces[0], q.faces[1], q.diagonal, q.corner) for q in getattr(obj, "quads", ()))
        return obj.tonnetz, obj.layout, quads, {"key": obj.key, "provenance": obj.provenance}
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def to_document(obj) -> dict:
    t, layout, quads, meta = _unpack(obj)
    s = t.surface
    doc = {
        "vertices": list(s.vertex_names),
        "edges": [
            {"name": s.edge_names[i], "verts": [s.vertex_names[a], s.vertex_names[b]]}
            for i, (a, b) in enumerate(s.edges)
        ],
        "faces": [
            {"name": s.face_names[j], "edges": [s.edge_names[e] for e in f]} for j, f in enumerate(s.faces)
        ],
        "labels": {s.name(sid): t.label(sid).names() for sid in s.simplices()},
    }
    if layout:
        doc["layout"] = {name: [list(p) for p in pts] for name, pts in layout.items()}
    if quads:
        doc["quads"] = [{"faces": [a, b], "diagonal": d, "corner": c} for a, b, d, c in quads]
    if meta:
        doc["meta"] = dict(meta)
    return doc


def dumps(obj) -> str:
    return json.dumps(to_document(obj), indent=1, ensure_ascii=False) + "\n"


# -- reading documents ---------------------------------------------------

def _expect(value, kind, where):
    if not isinstance(value, kind):
        want = kind.__name__ if isinstance(kind, type) else "/".join(k.__name__ for k in kind)
        raise SchemaError(where, f"expected {want}, got {type(value).__name__}")
    return value


def _name_list(value, where) -> list:
    _expect(value, list, where)
    for i, x in enumerate(value):
        _expect(x, str, f"{where}[{i}]")
    return value


def _surface(doc: dict) -> SimplicialSurface:
    for key in ("vertices", "edges", "faces", "labels"):
        if key not in doc:
            raise SchemaError("", f"missing required key {key!r}")
    vertices = _name_list(doc["vertices"], "vertices")
    vindex = {}
    for i, v in enumerate(vertices):
        if v in vindex:
            raise SchemaError(f"vertices[{i}]", f"duplicate vertex {v!r}")
        vindex[v] = i

    edges, eindex = [], {}
    for i, e in enumerate(_expect(doc["edges"], list, "edges")):
        where = f"edges[{i}]"
        _expect(e, dict, where)
        name = _expect(e.get("name"), str, f"{where}.name")
        ends = _name_list(e.get("verts"), f"{where} ({name!r}).verts")
        if len(ends) != 2:
            raise SchemaError(f"{where} ({name!r}).verts", f"an edge has 2 vertices, got {len(ends)}")
        for k, v in enumerate(ends):
            if v not in vindex:
                raise SchemaError(f"{where} ({name!r}).verts[{k}]", f"unknown vertex {v!r}")
        if name in eindex:
            raise SchemaError(f"{where}.name", f"duplicate edge {name!r}")
        eindex[name] = i
        edges.append((vindex[ends[0]], vindex[ends[1]]))

    faces, face_names = [], []
    for j, f in enumerate(_expect(doc["faces"], list, "faces")):
        where = f"faces[{j}]"
        _expect(f, dict, where)
        name = _expect(f.get("name"), str, f"{where}.name")
        sides = _name_list(f.get("edges"), f"{where} ({name!r}).edges")
        if len(sides) != 3:
            raise SchemaError(f"{where} ({name!r}).edges", f"a face has 3 edges, got {len(sides)}")
        for k, e in enumerate(sides):
            if e not in eindex:
                raise SchemaError(f"{where} ({name!r}).edges[{k}]", f"face {name!r} refers to missing edge {e!r}")
        faces.append(tuple(eindex[e] for e in sides))
        face_names.append(name)

    try:
        return SimplicialSurface(
            vertex_names=tuple(vertices),
            edges=tuple(edges),
            faces=tuple(faces),
            edge_names=tuple(e["name"] for e in doc["edges"]),
            face_names=tuple(face_names),
        )
    except ValueError as exc:
        raise SchemaError("", str(exc)) from exc


def _labels(doc: dict, s: SimplicialSurface) -> dict:
    raw = _expect(doc["labels"], dict, "labels")
    out = {}
    for name, notes in raw.items():
        where = f"labels.{name}"
        try:
            sid = s.lookup(name)
        except KeyError:
            raise SchemaError(where, f"no simplex called {name!r}") from None
        _name_list(notes, where)
        try:
            out[sid] = PitchMultiset(parse_note(n) for n in notes)
        except NoteParseError as exc:
            raise SchemaError(where, str(exc)) from None
    missing = [s.name(sid) for sid in s.simplices() if sid not in out]
    if missing:
        raise SchemaError("labels", f"no label for {', '.join(missing[:5])}{' ...' if len(missing) > 5 else ''}")
    return out


def _layout(doc: dict, s: SimplicialSurface) -> dict:
    raw = _expect(doc.get("layout", {}), dict, "layout")
    out = {}
    for name, pts in raw.items():
        where = f"layout.{name}"
        if name not in s.face_names:
            raise SchemaError(where, f"no face called {name!r}")
        _expect(pts, list, where)
        if len(pts) != 3:
            raise SchemaError(where, f"expected 3 points, got {len(pts)}")
        pt = []
        for k, p in enumerate(pts):
            _expect(p, list, f"{where}[{k}]")
            if len(p) != 2 or not all(isinstance(c, (int, float)) for c in p):
                raise SchemaError(f"{where}[{k}]", "expected [x, y]")
            pt.append(tuple(p))
        out[name] = tuple(pt)
    return out


def _quads(doc: dict, s: SimplicialSurface) -> tuple:
    raw = _expect(doc.get("quads", []), list, "quads")
    out = []
    for i, q in enumerate(raw):
        where = f"quads[{i}]"
        _expect(q, dict, where)
        faces = _name_list(q.get("faces"), f"{where}.faces")
        diag = _expect(q.get("diagonal"), str, f"{where}.diagonal")
        corner = _expect(q.get("corner"), str, f"{where}.corner")
        if len(faces) != 2 or not all(f in s.face_names for f in faces):
            raise SchemaError(f"{where}.faces", "expected two face names")
        if diag not in s.edge_names:
            raise SchemaError(f"{where}.diagonal", f"no edge called {diag!r}")
        out.append((faces[0], faces[1], diag, corner))
    return tuple(out)


def from_document(doc, unchecked: bool = False) -> Loaded:
    """Parse a decoded document; verify it unless ``unchecked``.

    Raises :class:`SchemaError` for malformed input and
    :class:`VerificationError` when the labels are not coherent (only when
    checking).  With ``unchecked`` the report is still computed and attached.
    """
    _expect(doc, dict, "")
    s = _surface(doc)
    t = Tonnetz.from_labels(s, _labels(doc, s))
    layout = _layout(doc, s)
    quads = _quads(doc, s)
    meta = _expect(doc.get("meta", {}), dict, "meta")
    vrep = validate(s)
    if not vrep.ok:
        if not unchecked:
            raise SchemaError("", f"not a closed triangulated surface:\n{vrep}")
        return Loaded(t, None, layout, quads, meta)
    report = verify(t)
    if not report.ok and not unchecked:
        raise VerificationError(report, meta.get("key", "document"))
    return Loaded(t, report, layout, quads, meta)


def loads(text: str, unchecked: bool = False) -> Loaded:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return from_document(doc, unchecked)


def load(path, unchecked: bool = False) -> Loaded:
    """Read a document from ``path`` (``"-"`` for standard input)."""
    if str(path) == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return loads(text, unchecked)


def _write(text: str, path) -> None:
    if path is None:
        return
    if str(path) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def save(obj, path) -> str:
    """Write ``obj`` (Tonnetz, Loaded or CatalogEntry) as a document."""
    text = dumps(obj)
    _write(text, path)
    return text


# -- DOT -------------------------------------------------------------------

def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def export_dot(obj, path=None, unicode: bool = False) -> str:
    """Dual graph: one node per face labelled by its chord, one link per edge."""
    t, *_ = _unpack(obj)
    s = t.surface
    lines = ["graph dual {", "  node [shape=box];"]
    for j, name in enumerate(s.face_names):
        chord = classify(t.face_labels[j]).describe(unicode)
        label = _quote(name + "\n" + chord)
        lines.append(f"  {_quote(name)} [label={label}];")
    for i, name in enumerate(s.edge_names):
        cof = s.cofaces(SimplexId(1, i))
        a, b = (s.face_names[c.index] for c in cof)
        notes = ",".join(note_name(n, unicode) for n in sorted(t.edge_labels[i].support()))
        lines.append(f"  {_quote(a)} -- {_quote(b)} [label={_quote(notes)}, tooltip={_quote(name)}];")
    lines.append("}")
    text = "\n".join(lines) + "\n"
    _write(text, path)
    return text


# -- SVG -------------------------------------------------------------------

_SCALE = 60.0
_MARGIN = 20.0


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def export_svg(obj, path=None, unicode: bool = True) -> str:
    """Draw the layout of a catalog entry (or a document that carries one).

    Every face is a polygon with its chord written inside; every edge of the
    surface gets one note label, placed on the first drawn side that carries
    it, nudged towards the face's centre.
    """
    t, layout, _, meta = _unpack(obj)
    if not layout:
        raise ValueError("no layout: SVG export needs a catalog entry or a document with a layout")
    s = t.surface
    xs = [p[0] for pts in layout.values() for p in pts]
    ys = [p[1] for pts in layout.values() for p in pts]
    x0, y1 = min(xs), max(ys)
    width = (max(xs) - x0) * _SCALE + 2 * _MARGIN
    height = (y1 - min(ys)) * _SCALE + 2 * _MARGIN

    def at(p):
        return ((p[0] - x0) * _SCALE + _MARGIN, (y1 - p[1]) * _SCALE + _MARGIN)

    title = meta.get("key", "tonnetz")
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f"<title>{_esc(title)}</title>",
        '<g class="faces" fill="#f4f1e8" stroke="#333" stroke-width="1">',
    ]
    labelled = set()
    edge_texts = []
    face_texts = []
    for j, name in enumerate(s.face_names):
        if name not in layout:
            continue
        pts = [at(p) for p in layout[name]]
        cx = sum(p[0] for p in pts) / 3
        cy = sum(p[1] for p in pts) / 3
        out.append(f'<polygon id="{_esc(name)}" points="{" ".join(_fmt(x) + "," + _fmt(y) for x, y in pts)}"/>')
        face_texts.append(
            f'<text class="face" x="{_fmt(cx)}" y="{_fmt(cy)}">{_esc(classify(t.face_labels[j]).symbol(unicode))}</text>'
        )
        for slot, e in enumerate(s.faces[j]):
            if e in labelled:
                continue
            labelled.add(e)
            # layout points are in corner order, and slot k joins corners k and k+1
            p, q = pts[slot], pts[(slot + 1) % 3]
            mx, my = (p[0] + q[0]) / 2, (p[1] + q[1]) / 2
            lx, ly = mx + 0.18 * (cx - mx), my + 0.18 * (cy - my)
            notes = ",".join(note_name(n, unicode) for n in sorted(t.edge_labels[e].support()))
            edge_texts.append(
                f'<text class="edge" x="{_fmt(lx)}" y="{_fmt(ly)}" data-edge="{_esc(s.edge_names[e])}">{_esc(notes)}</text>'
            )
    out.append("</g>")
    out.append('<g font-family="sans-serif" font-size="9" text-anchor="middle" dominant-baseline="middle" fill="#124">')
    out.extend(edge_texts)
    out.append("</g>")
    out.append('<g font-family="serif" font-size="13" text-anchor="middle" dominant-baseline="middle" fill="#822">')
    out.extend(face_texts)
    out.append("</g>")
    out.append("</svg>")
    text = "\n".join(out) + "\n"
    _write(text, path)
    return text


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")
