"""Shared driver for the finite-monodromy tables."""

import argparse
import sys
import time

from refdata import read_table, row_spectra
from rigid4.construct import check_triple, integral_triple
from rigid4.group import enumerate_group
from rigid4.hermitian import finite_monodromy


def main(name, argv=None):
    ap = argparse.ArgumentParser(description=f"Reproduce {name}")
    ap.add_argument("--cap", type=int, default=20000,
                    help="skip group enumeration above this order (default 20000)")
    args = ap.parse_args(argv)
    bad = 0
    for row in read_table(name):
        s = row_spectra(row)
        t0 = time.time()
        ok, _ = finite_monodromy(s)
        triple = integral_triple(s)
        ok = ok and check_triple(triple, s)
        want = (int(row["order"]), int(row["center"]))
        got = None
        if want[0] <= args.cap:
            rep = enumerate_group(triple.gens, cap=args.cap)
            got = (rep.order, rep.center_order)
        good = ok and got in (want, None)
        bad += not good
        shown = f"order {got[0]} center {got[1]}" if got else f"order above cap {args.cap}, not enumerated"
        print(f"row {row['row']:>2} {s}  finite={ok}  {shown}  "
              f"{'ok' if good else 'MISMATCH'}  ({time.time() - t0:.1f}s)")
    print(f"{name}: {'all rows match' if not bad else f'{bad} mismatches'}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))
