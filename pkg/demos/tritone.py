"""Two tori whose faces are all major triads a tritone apart."""

from collections import Counter

from tonnetz import transpose_tonnetz
from tonnetz.catalog import build
from tonnetz.coherence import face_chords
from tonnetz.report import completeness


def main():
    small, big = build("tritone1").tonnetz, build("tritone2").tonnetz
    for name, t in (("tritone1", small), ("tritone2", big)):
        counts = Counter(face_chords(t))
        chords = ", ".join(f"{c} x{n}" for c, n in sorted(counts.items(), key=lambda kv: int(kv[0].root)))
        print(f"{name}: {chords}")
        sizes = Counter(len(x.support()) for x in t.vertex_labels)
        print("   distinct notes per vertex:", dict(sorted(sizes.items())))

    cov = completeness([small, transpose_tonnetz(small, 1)])
    print("tritone1 plus its semitone shift covers all majors once:", cov.all_majors and cov.each_once)


if __name__ == "__main__":
    main()
