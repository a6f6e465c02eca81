"""Look for surface automorphisms of the G2 torus that transpose its labels."""

from tonnetz import find_transposition_symmetry
from tonnetz.catalog import build
from tonnetz.report import completeness


def main():
    t = build("g2").tonnetz
    for k in range(12):
        phi = find_transposition_symmetry(t, k)
        if phi is None:
            print(f"transpose by {k:2}: none")
        else:
            print(f"transpose by {k:2}: order {phi.order()}")

    pair = completeness([t, build("g2_dual").tonnetz])
    print("g2 together with its dual holds every triad exactly once:", pair.complete and pair.each_once)


if __name__ == "__main__":
    main()
