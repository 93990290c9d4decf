#!/usr/bin/env python3
"""Run the full check suite over the default family and print the table.

Any extra arguments are passed straight to the `theorems` subcommand, e.g.

    python scripts/run_theorems.py --format json
    python scripts/run_theorems.py --ids TT1 RM1 --family "T2(Z4)" "Id(4,4)"
"""

import sys

from nilclean.cli import main

if __name__ == "__main__":
    sys.exit(main(["theorems", *sys.argv[1:]]))
