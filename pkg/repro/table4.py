"""Finite monodromy cases, Table 4: finiteness and group order per row."""

import sys

from _finite_table import main

if __name__ == "__main__":
    sys.exit(main("table4.csv"))
