"""Field of moduli Q, signature (4,0): rows in order with their mu."""

import sys

from _moduli_table import main

if __name__ == "__main__":
    sys.exit(main("table6.csv", definite=True))
