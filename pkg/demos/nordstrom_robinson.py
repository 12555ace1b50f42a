"""The Nordstrom-Robinson code as a union of Reed-Muller cosets.

The (16, 256, 6) Nordstrom-Robinson code is non-linear but sits between
RM(1, 4) and RM(2, 4) as a union of eight cosets of RM(1, 4) — the
smallest member of both the Preparata and Goethals families.
"""
from __future__ import annotations

from unionstab import classical


def main() -> None:
    nr = classical.nordstrom_robinson()
    print(f"Nordstrom-Robinson: ({nr.n}, {nr.size}, "
          f"{classical.min_distance(nr, 'brute')})")
    print(f"cosets of RM(1,4): {nr.num_cosets}")
    for t in nr.translations:
        print("  ", "".join(str(int(b)) for b in t))

    rm1 = classical.reed_muller(1, 4)
    rm2 = classical.reed_muller(2, 4)
    ok_low, _ = classical.nesting_check(rm1, nr)
    ok_high, _ = classical.nesting_check(nr, rm2)
    print(f"RM(1,4) inside NR: {ok_low}; NR inside RM(2,4): {ok_high}")

    d, dist = classical.distance_enumerator(nr)
    print(f"distance distribution (enumerator route, d={d}):")
    for w, c in enumerate(dist):
        if c:
            print(f"  weight {w:2d}: {c}")


if __name__ == "__main__":
    main()
