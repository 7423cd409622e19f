"""Quaternion algebras (D, mu): ramified places for each populated cell."""

import sys

from refdata import read_table
from rigid4.obstruction import INF, ramified_primes


def main():
    bad = 0
    for row in read_table("table7.csv"):
        want = tuple(INF if p == "inf" else int(p) for p in row["ramified"].split(","))
        got = ramified_primes(int(row["D"]), int(row["mu"]))
        good = got == want
        bad += not good
        print(f"D={row['D']} mu={row['mu']}: {list(got)} {'ok' if good else f'MISMATCH, expected {list(want)}'}")
    print(f"table7.csv: {'all cells match' if not bad else f'{bad} mismatches'}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
