"""Command line entry point ``tonnetz``.

Exit status: 0 on success, 1 when a tonnetz fails verification (or a
requested symmetry does not exist), 2 for usage and schema errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .catalog import KEYS, PROVENANCE, CatalogError, build
from .coherence import VerificationError, find_transposition_symmetry, verify
from .pitch import classify
from .report import inventory, section7_table

OK, FAILED, USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits with 2 already; keep its wording
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _out(text: str, path=None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load(args, unchecked=None):
    return io.load(args.file, unchecked=args.unchecked if unchecked is None else unchecked)


def cmd_list(args) -> int:
    width = max(len(k) for k in KEYS)
    for key in KEYS:
        base = key.rsplit("_", 1)[0] if key.endswith(("_up2", "_down2")) else key
        note = PROVENANCE[base]
        if base != key:
            note += "; transposed " + ("up" if key.endswith("up2") else "down") + " a whole tone"
        print(f"{key:<{width}}  {note}")
    return OK


def cmd_build(args) -> int:
    entry = build(args.key)
    _out(io.dumps(entry), args.output)
    return OK


def cmd_verify(args) -> int:
    loaded = _load(args, unchecked=True)
    report = loaded.report if loaded.report is not None else verify(loaded.tonnetz)
    if report.ok:
        v, e, f = loaded.tonnetz.surface.f_vector
        print(f"ok: {v} vertices, {e} edges, {f} faces; every simplex is coherent")
        return OK
    _err(str(report))
    return FAILED


def cmd_classify(args) -> int:
    t = _load(args).tonnetz
    s = t.surface
    width = max(len(n) for n in s.face_names)
    for name, lab in zip(s.face_names, t.face_labels):
        print(f"{name:<{width}}  {'{' + ','.join(lab.names(args.unicode)) + '}':<16}  {classify(lab).describe(args.unicode)}")
    return OK


def cmd_report(args) -> int:
    loaded = _load(args)
    inv = inventory(loaded.tonnetz)
    if args.format == "data":
        doc = io.to_document(loaded)
        doc["report"] = inv.to_data()
        print(json.dumps(doc, indent=1, ensure_ascii=False))
    else:
        sys.stdout.write(inv.render(args.unicode))
    return OK


def cmd_table7(args) -> int:
    table = section7_table()
    if args.format == "data":
        print(json.dumps(table.to_data(), indent=1, ensure_ascii=False))
    else:
        sys.stdout.write(table.render(args.unicode))
    return OK


def cmd_symmetry(args) -> int:
    loaded = _load(args)
    t = loaded.tonnetz
    phi = find_transposition_symmetry(t, args.interval)
    if phi is None:
        _err(f"no automorphism realises transposition by {args.interval}")
        return FAILED
    s = t.surface
    print(f"transposition by {args.interval} semitones: automorphism of order {phi.order()}")
    desc = phi.describe(s)
    for part in ("vertices", "edges", "faces"):
        print(f"{part}:")
        print("  " + " ".join(f"{a}->{b}" for a, b in desc[part].items()))
    return OK


def cmd_export(args) -> int:
    loaded = _load(args)
    if args.svg:
        if not loaded.layout:
            _err("this document has no layout; build it from the catalog to export SVG")
            return USAGE
        text = io.export_svg(loaded, unicode=not args.ascii)
    else:
        text = io.export_dot(loaded, unicode=not args.ascii)
    _out(text, args.output)
    return OK


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tonnetz", description="Build, verify and inspect pitch-class labellings of triangulated surfaces.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_file(name, help_, **kw):
        sp = sub.add_parser(name, help=help_, **kw)
        sp.add_argument("file", help="document path, or - for standard input")
        sp.add_argument("--unchecked", action="store_true", help="continue even if the labels are not coherent")
        return sp

    sp = sub.add_parser("list", help="list catalog keys")
    sp.set_defaults(func=cmd_list)

    sp = sub.add_parser("build", help="write a catalog tonnetz as a document")
    sp.add_argument("key", choices=KEYS, metavar="key", help="one of: " + ", ".join(KEYS))
    sp.add_argument("-o", "--output", default="-", help="output path (default: standard output)")
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("verify", help="check the coherence conditions")
    sp.add_argument("file", help="document path, or - for standard input")
    sp.set_defaults(func=cmd_verify, unchecked=True)

    sp = with_file("classify", "name the chord on every face")
    sp.add_argument("--unicode", action="store_true")
    sp.set_defaults(func=cmd_classify)

    sp = with_file("report", "chord inventory")
    sp.add_argument("--format", choices=("text", "data"), default="text")
    sp.add_argument("--unicode", action="store_true")
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("table7", help="overview of chords on the B2, C2 and G2 tori")
    sp.add_argument("--format", choices=("text", "data"), default="text")
    sp.add_argument("--unicode", action="store_true")
    sp.set_defaults(func=cmd_table7)

    sp = with_file("symmetry", "find an automorphism that transposes every label")
    sp.add_argument("--interval", "-k", type=int, required=True, help="semitones")
    sp.set_defaults(func=cmd_symmetry)

    sp = with_file("export", "draw as Graphviz DOT or SVG")
    fmt = sp.add_mutually_exclusive_group(required=True)
    fmt.add_argument("--dot", action="store_true", help="dual graph")
    fmt.add_argument("--svg", action="store_true", help="the net (needs a layout)")
    sp.add_argument("--ascii", action="store_true", help="spell accidentals as b and #")
    sp.add_argument("-o", "--output", default="-")
    sp.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except io.SchemaError as exc:
        _err(f"schema error: {exc}")
        return USAGE
    except VerificationError as exc:
        _err(f"verification failed: {exc}")
        return FAILED
    except CatalogError as exc:
        _err(f"catalog error: {exc}")
        return FAILED
    except OSError as exc:
        _err(f"{exc.filename or ''}: {exc.strerror or exc}")
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
