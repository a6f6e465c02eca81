"""Transcriptions of the figure nets.

Everything here is raw data in the coordinates of the drawing it came
from; :mod:`tonnetz.catalog.builders` turns it into surfaces.  Note names
keep the spelling used in the drawings, enharmonic variants included.

Coordinate conventions
----------------------
Triangular grids use doubled drawing coordinates ``(2x, 2y)`` so that
every vertex is an integer point (``G2`` nets use ``(4x, 4y)`` because
their edge midpoints are vertices too).  Commutative-diagram grids use
``(column, -row)``.
"""

# Euler's tonnetz: the five note rows of the drawing, bottom row first.
# Row r, column c sits at x = c + 1/2 - (r mod 2)/2, y = r/2.
EULER_ROWS = (
    ("Ebb", "Bbb", "Fb", "Cb", "Gb", "Db", "Ab"),
    ("Cb", "Gb", "Db", "Ab", "Eb", "Bb", "F", "C"),
    ("Eb", "Bb", "F", "C", "G", "D", "A"),
    ("C", "G", "D", "A", "E", "B", "F#", "C#"),
    ("E", "B", "F#", "C#", "G#", "D#", "A#"),
)
EULER_PERIODS = ((3, 3), (7, -1))
EULER_DOMAIN = ((2, 1), (5, 4), (13, 4), (10, 1))

# B2 net: (label, from, to) exactly as the arrows of the diagram, "row-col".
B2_ARROWS = (
    ("Eb", "1-5", "1-7"), ("A", "1-7", "1-9"), ("D#", "5-5", "5-7"),
    ("A", "5-7", "5-9"), ("F#", "5-9", "3-9"), ("C", "3-9", "1-9"),
    ("A", "3-7", "3-9"), ("C", "3-7", "1-7"), ("F#", "3-7", "5-7"),
    ("D", "3-7", "5-9"), ("B", "3-7", "5-5"), ("F", "3-7", "1-9"),
    ("Ab", "3-7", "1-5"), ("Eb", "1-9", "1-11"), ("Eb", "3-9", "3-11"),
    ("C", "1-11", "3-11"), ("Eb", "3-5", "3-7"), ("C", "1-5", "3-5"),
    ("F#", "5-5", "3-5"), ("A", "3-11", "3-13"), ("A", "1-11", "1-13"),
    ("C", "1-13", "3-13"), ("F#", "3-13", "5-13"), ("A", "5-9", "5-11"),
    ("F#", "3-11", "5-11"), ("D#", "5-11", "5-13"), ("A", "3-5", "3-3"),
    ("C", "3-3", "1-3"), ("A", "1-3", "1-5"), ("F", "3-11", "1-13"),
    ("Ab", "1-9", "3-11"), ("D", "3-11", "5-13"), ("B", "5-9", "3-11"),
    ("F#", "3-3", "5-3"), ("A", "5-3", "5-5"), ("D", "3-3", "5-5"),
    ("F", "3-3", "1-5"), ("Eb", "1-3", "1-1"), ("C", "1-1", "3-1"),
    ("D#", "5-1", "5-3"), ("Eb", "3-1", "3-3"), ("B", "3-3", "5-1"),
    ("Ab", "1-1", "3-3"), ("F#", "3-1", "5-1"),
)
B2_PERIODS = ((4, 0), (0, 4))
# Arrows whose printed note disagrees with every translate of the same edge.
# They lie outside the fundamental square; the correction is the note the
# periodic pattern forces: (from, to) -> (printed, corrected).
B2_ERRATA = {("5-9", "5-11"): ("A", "D#"), ("5-11", "5-13"): ("D#", "A")}
B2_DOMAIN = ("1-5", "5-5", "5-9", "1-9")
B2_NAMES = {"3-7": "center", "1-5": "corner", "1-7": "top", "3-5": "side"}

# C2 net, same conventions.
C2_ARROWS = (
    ("A", "3-7", "3-9"), ("F#", "3-7", "5-7"), ("Eb", "3-7", "3-5"),
    ("B", "3-5", "2-6"), ("F", "2-6", "1-7"), ("C", "3-7", "1-7"),
    ("Ab", "3-7", "2-6"), ("Ab", "2-8", "1-7"), ("D", "2-8", "3-9"),
    ("F", "3-7", "2-8"), ("B", "5-7", "4-8"), ("F", "4-8", "3-9"),
    ("D", "3-7", "4-8"), ("Ab", "3-5", "4-6"), ("D", "4-6", "5-7"),
    ("B", "3-7", "4-6"), ("B", "2-8", "1-9"), ("Ab", "4-8", "5-9"),
    ("Eb", "5-9", "5-7"), ("Eb", "1-7", "1-9"), ("F#", "1-9", "3-9"),
    ("A", "1-9", "1-11"), ("D", "1-9", "2-10"), ("B", "3-9", "2-10"),
    ("F", "2-10", "1-11"), ("Ab", "2-10", "3-11"), ("C", "1-11", "3-11"),
    ("Eb", "3-9", "3-11"), ("C", "3-9", "5-9"), ("F", "5-9", "4-10"),
    ("Ab", "3-9", "4-10"), ("B", "4-10", "3-11"), ("D", "4-10", "5-11"),
    ("A", "5-9", "5-11"), ("F#", "5-11", "3-11"), ("Ab", "1-11", "2-12"),
    ("F", "3-11", "2-12"), ("D", "2-12", "3-13"), ("Eb", "3-11", "3-13"),
    ("D", "3-11", "4-12"), ("B", "5-11", "4-12"), ("F", "4-12", "3-13"),
    ("D", "2-6", "1-5"), ("A", "1-5", "1-7"), ("B", "1-5", "2-4"),
    ("D", "2-4", "3-5"), ("F", "2-4", "3-3"), ("D", "3-3", "4-4"),
    ("F", "4-4", "3-5"), ("Ab", "4-4", "5-5"), ("F", "5-5", "4-6"),
    ("A", "5-7", "5-5"), ("B", "4-4", "5-3"), ("Eb", "5-3", "5-5"),
    ("D", "5-3", "4-2"), ("B", "4-2", "3-3"), ("Eb", "1-5", "1-3"),
    ("Ab", "1-3", "2-4"), ("F", "1-3", "2-2"), ("Ab", "2-2", "3-3"),
    ("B", "2-2", "3-1"), ("Ab", "3-1", "4-2"), ("C", "1-3", "3-3"),
    ("F#", "1-5", "3-5"), ("F#", "3-3", "5-3"), ("C", "3-5", "5-5"),
    ("A", "3-3", "3-5"), ("Eb", "3-3", "3-1"),
)
C2_PERIODS = ((2, -2), (-2, -2))
C2_ERRATA = {("3-11", "3-13"): ("Eb", "A")}
C2_DOMAIN = ("3-5", "5-7", "3-9", "1-7")
C2_NAMES = {"3-7": "center", "3-5": "corner", "2-6": "upper", "2-8": "lower"}

# G2 hexagons in (4x, 4y): spokes from the centre and the twelve rim
# segments, each with the note written on it.
G2_CENTER = (16, 2)
G2_SPOKES = (
    ((20, 2), "E"), ((19, 3), "A"), ((18, 4), "D"), ((16, 4), "G"),
    ((14, 4), "C"), ((13, 3), "F"), ((12, 2), "Bb"), ((13, 1), "Eb"),
    ((14, 0), "Ab"), ((16, 0), "C#"), ((18, 0), "F#"), ((19, 1), "B"),
)
G2_RIM = (
    ((19, 3), (20, 2), "C"), ((18, 4), (19, 3), "F#"), ((16, 4), (18, 4), "Bb"),
    ((14, 4), (16, 4), "E"), ((13, 3), (14, 4), "Ab"), ((12, 2), (13, 3), "D"),
    ((13, 1), (12, 2), "Gb"), ((14, 0), (13, 1), "C"), ((14, 0), (16, 0), "E"),
    ((16, 0), (18, 0), "A#"), ((18, 0), (19, 1), "D"), ((19, 1), (20, 2), "G#"),
)
G2_PERIODS = ((6, 2), (0, 4))
G2_NAMES = {
    (16, 2): "center", (20, 2): "corner_a", (18, 4): "corner_b",
    (19, 3): "mid_a", (16, 4): "mid_b", (13, 3): "mid_c",
}

G2_DUAL_CENTER = (16, 6)
G2_DUAL_SPOKES = (
    ((20, 6), "B"), ((19, 7), "E"), ((18, 8), "A"), ((16, 8), "D"),
    ((14, 8), "G"), ((13, 7), "C"), ((12, 6), "F"), ((13, 5), "Bb"),
    ((14, 4), "Eb"), ((16, 4), "Ab"), ((18, 4), "C#"), ((19, 5), "F#"),
)
G2_DUAL_RIM = (
    ((19, 7), (20, 6), "G"), ((18, 8), (19, 7), "C#"), ((16, 8), (18, 8), "F"),
    ((14, 8), (16, 8), "B"), ((13, 7), (14, 8), "Eb"), ((12, 6), (13, 7), "A"),
    ((13, 5), (12, 6), "Db"), ((14, 4), (13, 5), "G"), ((14, 4), (16, 4), "B"),
    ((16, 4), (18, 4), "F"), ((18, 4), (19, 5), "A"), ((19, 5), (20, 6), "D#"),
)
G2_DUAL_NAMES = {
    (16, 6): "center", (20, 6): "corner_a", (18, 8): "corner_b",
    (19, 7): "mid_a", (16, 8): "mid_b", (13, 7): "mid_c",
}

# Tritone nets in (2x, 2y).  Each entry is one edge class:
# (p, q, note near p, note near q, side of the p-note relative to p -> q).
# The q-note sits on the opposite side.
TRITONE1_EDGES = (
    ((-2, 1), (0, 1), "Ab", "D", "L"),
    ((-1, 0), (0, 1), "G", "Db", "L"),
    ((-1, 2), (0, 1), "B", "F", "L"),
    ((-1, 2), (1, 2), "A", "Eb", "L"),
    ((0, 1), (1, 0), "Bb", "E", "L"),
    ((0, 1), (1, 2), "Gb", "C", "L"),
    ((0, 1), (2, 1), "A", "Eb", "L"),
    ((1, 0), (2, 1), "G", "Db", "L"),
    ((1, 2), (2, 1), "B", "F", "L"),
)
TRITONE1_PERIODS = ((3, 1), (0, 2))
TRITONE1_DOMAIN = ((7, 2), (6, 3), (4, 3), (3, 2), (4, 1), (6, 1))
TRITONE1_NAMES = {(5, 2): "center", (6, 1): "ring_a", (7, 2): "ring_b"}

TRITONE2_EDGES = (
    ((-2, 1), (0, 1), "Ab", "D", "L"),
    ((-2, 3), (0, 3), "D", "Ab", "R"),
    ((-1, 0), (0, 1), "Db", "G", "R"),
    ((-1, 2), (0, 1), "B", "F", "L"),
    ((-1, 2), (0, 3), "Db", "G", "R"),
    ((-1, 2), (1, 2), "Eb", "A", "R"),
    ((-1, 4), (0, 3), "F", "B", "R"),
    ((-1, 4), (1, 4), "A", "Eb", "L"),
    ((0, 1), (1, 0), "E", "Bb", "R"),
    ((0, 1), (1, 2), "Gb", "C", "L"),
    ((0, 1), (2, 1), "Eb", "A", "R"),
    ((0, 3), (1, 2), "Bb", "E", "L"),
    ((0, 3), (1, 4), "Gb", "C", "L"),
    ((0, 3), (2, 3), "A", "Eb", "L"),
    ((1, 0), (2, 1), "Db", "G", "R"),
    ((1, 2), (2, 1), "F", "B", "R"),
    ((1, 2), (2, 3), "Db", "G", "R"),
    ((1, 2), (3, 2), "Ab", "D", "L"),
    ((1, 4), (2, 3), "B", "F", "L"),
    ((1, 4), (3, 4), "D", "Ab", "R"),
    ((2, 1), (3, 0), "B", "F", "L"),
    ((2, 1), (3, 2), "G", "Db", "L"),
    ((2, 1), (4, 1), "A", "Eb", "L"),
    ((2, 3), (3, 2), "F", "B", "R"),
    ((2, 3), (3, 4), "G", "Db", "L"),
    ((2, 3), (4, 3), "Eb", "A", "R"),
    ((3, 2), (4, 1), "Bb", "E", "L"),
    ((3, 2), (4, 3), "C", "Gb", "R"),
    ((3, 2), (5, 2), "Eb", "A", "R"),
    ((3, 4), (4, 3), "E", "Bb", "R"),
    ((3, 4), (4, 5), "C", "Gb", "R"),
    ((3, 4), (5, 4), "A", "Eb", "L"),
    ((4, 1), (5, 2), "G", "Db", "L"),
    ((4, 3), (5, 2), "B", "F", "L"),
    ((4, 3), (5, 4), "G", "Db", "L"),
    ((4, 5), (5, 4), "F", "B", "R"),
)
TRITONE2_PERIODS = ((6, 2), (0, 4))
TRITONE2_DOMAIN = ((1, 2), (3, 4), (7, 4), (9, 2), (7, 0), (3, 0))
TRITONE2_NAMES = {
    (5, 2): "center",
    (9, 2): "petal_right",
    (7, 2): "right_of_center",
    (6, 1): "below_right",
    (8, 3): "rim_upper_right",
}

# The bauble net.  Corners X, Y, Z and W (W is drawn three times), face
# centres c.. (some drawn twice, starred) and one rhombus per tetrahedron
# edge: (end, end, centre, centre).  Positions are (2x, 2y).
BAUBLE_POINTS = {
    "X": (2, 1), "Y": (5, 0), "Z": (5, 2),
    "W1": (2, 3), "W2": (2, -1), "W3": (8, 1),
    "cXYZ": (4, 1), "cXYW": (3, 0), "cXYW*": (7, 0),
    "cYZW": (6, 1), "cYZW*": (4, 3), "cXZW": (3, 2), "cXZW*": (1, 0),
}
BAUBLE_RHOMBI = (
    ("X", "Y", "cXYZ", "cXYW"),
    ("Y", "Z", "cXYZ", "cYZW"),
    ("X", "Z", "cXYZ", "cXZW"),
    ("W2", "X", "cXYW", "cXZW*"),
    ("Y", "W3", "cYZW", "cXYW*"),
    ("Z", "W1", "cXZW", "cYZW*"),
)
# Edge notes keyed by the glued end points.  Midpoints of tetrahedron
# edges are called m + the two corners.
BAUBLE_EDGES = {
    ("W", "cXYW"): "E", ("W", "cXZW"): "C", ("W", "cYZW"): "Ab",
    ("W", "mWX"): "G", ("W", "mWY"): "B", ("W", "mWZ"): "Eb",
    ("X", "cXYW"): "Gb", ("X", "cXYZ"): "F", ("X", "cXZW"): "G",
    ("X", "mWX"): "A", ("X", "mXY"): "Bb", ("X", "mXZ"): "C",
    ("Y", "cXYW"): "B", ("Y", "cXYZ"): "A", ("Y", "cYZW"): "Bb",
    ("Y", "mWY"): "Db", ("Y", "mXY"): "E", ("Y", "mYZ"): "D",
    ("Z", "cXYZ"): "Db", ("Z", "cXZW"): "D", ("Z", "cYZW"): "Eb",
    ("Z", "mWZ"): "F", ("Z", "mXZ"): "Gb", ("Z", "mYZ"): "Ab",
    ("cXYW", "mWX"): "B", ("cXYW", "mWY"): "Gb", ("cXYW", "mXY"): "Ab",
    ("cXYZ", "mXY"): "Db", ("cXYZ", "mXZ"): "A", ("cXYZ", "mYZ"): "F",
    ("cXZW", "mWX"): "D", ("cXZW", "mWZ"): "G", ("cXZW", "mXZ"): "E",
    ("cYZW", "mWY"): "Eb", ("cYZW", "mWZ"): "Bb", ("cYZW", "mYZ"): "C",
}

# Vertex notes of the diminished tetrahedron.
TETRA_DIM_VERTICES = ("C", "Eb", "F#", "A")
