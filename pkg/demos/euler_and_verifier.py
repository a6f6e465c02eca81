"""Build the classical triangular lattice on a torus, then break it on purpose.

Run with ``python3 demos/euler_and_verifier.py``.
"""

from tonnetz import classify, kind, verify
from tonnetz.catalog import build


def main():
    t = build("euler").tonnetz
    print("euler:", t.surface.count(0), "vertices,", t.surface.count(2), "faces")
    print("kind:", kind(t).describe())

    report = verify(t)
    print("verifies:", report.ok)

    face = t.surface.face_names[0]
    print(f"face {face} holds", t.label(face), "=", classify(t.label(face)))

    # Replace one note of that face and ask the verifier what went wrong.
    broken = t.with_label(face, t.label(face).transpose(1))
    print(f"after shifting {face} up a semitone:")
    for failure in verify(broken).failures:
        print("  ", failure)


if __name__ == "__main__":
    main()
