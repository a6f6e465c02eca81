"""The two four-vertex tori and their whole-tone transposes."""

from tonnetz import Quality, transpose_tonnetz
from tonnetz.catalog import build
from tonnetz.report import completeness, inventory


def main():
    for key in ("b2", "c2"):
        t = build(key).tonnetz
        print(f"== {key} ==")
        print(inventory(t).render(), end="")
        family = [transpose_tonnetz(t, k) for k in (0, 2, -2)]
        cov = completeness(family)
        print("with its whole-tone transposes:")
        print("  every major triad:", cov.all_majors)
        print("  every minor triad:", cov.all_minors)
        print("  minor triads still missing:", len(cov.missing(Quality.MINOR)))
        print()


if __name__ == "__main__":
    main()
