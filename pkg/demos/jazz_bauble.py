"""The bauble sphere: pairs of triangles that spell ninth chords."""

import sys

from tonnetz import find_transposition_symmetry, io
from tonnetz.catalog import bauble_quadrilaterals, build


def main(svg_path=None):
    entry = build("bauble")
    for quad in bauble_quadrilaterals(entry):
        faces = " + ".join(quad.faces)
        print(f"{faces:>12}  corner {quad.corner}:  {quad.chord}  ({quad.quality})")

    phi = find_transposition_symmetry(entry.tonnetz, 4)
    print("major-third symmetry of order", phi.order())

    if svg_path:
        io.export_svg(entry, svg_path)
        print("wrote", svg_path)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else None)
