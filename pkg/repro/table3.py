"""Finite monodromy cases, Table 3: finiteness and group order per row."""

import sys

from _finite_table import main

if __name__ == "__main__":
    sys.exit(main("table3.csv"))
