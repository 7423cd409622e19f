"""Field of moduli Q, signature (2,2): rows in order with their mu."""

import sys

from _moduli_table import main

if __name__ == "__main__":
    sys.exit(main("table5.csv", definite=False))
