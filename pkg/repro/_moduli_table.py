"""Shared driver for the field-of-moduli-Q tables."""

import sys

from refdata import read_table, row_spectra
from rigid4.search import search_moduli_Q


def main(name, definite):
    indef, defin = search_moduli_Q()
    hits = defin if definite else indef
    rows = read_table(name)
    bad = 0
    if len(hits) != len(rows):
        print(f"row count {len(hits)} != {len(rows)}")
        bad += 1
    for row, hit in zip(rows, hits):
        want = row_spectra(row), int(row["mu"])
        got = hit.spectra, hit.mu
        good = want == got
        bad += not good
        print(f"row {row['row']:>2} {hit.spectra}  mu={hit.mu}  {'ok' if good else f'MISMATCH, expected {want[0]} mu={want[1]}'}")
    print(f"{name}: {'all rows match' if not bad else f'{bad} mismatches'}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2] == "definite"))
