"""Infinite families: instantiate both patterns, check finiteness and recover r."""

import argparse
import csv
import os
import sys
from fractions import Fraction as F

from refdata import GOLDEN, read_table, row_spectra
from rigid4.construct import GIISpectra, is_irreducible
from rigid4.exactnum import exponent, fmt_rat
from rigid4.hermitian import finite_monodromy
from rigid4.search import family_match

SAMPLES = [F(1, 5), F(1, 6), F(2, 7), F(3, 8), F(1, 9), F(3, 10), F(5, 12), F(4, 15)]
HEADER = ["family", "r", "alpha1", "alpha2", "beta1", "beta2",
          "gamma1", "gamma2", "gamma3", "gamma4", "finite"]


def instantiate(family, r):
    if family == 1:
        alpha = (F(1, 2), r)
        gamma = [exponent((k - r) / 4) for k in range(4)]
    else:
        alpha = (F(1, 3), F(2, 3))
        gamma = [r] + [exponent((k - r) / 3) for k in range(3)]
    return GIISpectra(alpha, (F(0), F(1, 2)), tuple(sorted(gamma)))


def rows():
    out = []
    for family in (1, 2):
        for r in SAMPLES:
            s = instantiate(family, r)
            if len(set(s.gamma)) < 4 or not is_irreducible(s).irreducible:
                continue
            fin, _ = finite_monodromy(s)
            out.append([str(family), fmt_rat(r)] + [fmt_rat(x) for x in s.alpha + s.beta + s.gamma]
                       + [str(fin)])
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--write", action="store_true", help="regenerate the golden file")
    args = ap.parse_args(argv)
    got = rows()
    path = os.path.join(GOLDEN, "table8.csv")
    if args.write:
        with open(path, "w", newline="") as f:
            w = csv.writer(f, lineterminator="\n")
            w.writerow(HEADER)
            w.writerows(got)
    bad = 0
    golden = read_table("table8.csv")
    if len(golden) != len(got):
        print(f"row count {len(got)} != {len(golden)}")
        bad += 1
    for want, cells in zip(golden, got):
        s = row_spectra(want)
        fam = family_match(s)
        good = (cells == [want[k] for k in HEADER] and want["finite"] == "True"
                and fam is not None and fam.family == int(want["family"]) and fmt_rat(fam.r) == want["r"])
        bad += not good
        print(f"family {want['family']} r={want['r']}: {s}  finite={cells[-1]}  "
              f"{'ok' if good else 'MISMATCH'}")
    print(f"table8.csv: {'all rows match' if not bad else f'{bad} mismatches'}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
