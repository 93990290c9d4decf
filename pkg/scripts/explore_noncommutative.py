#!/usr/bin/env python3
"""Probe the boolean-modulo-radical splittings on triangular rings.

The splitting characterizations are only asserted for commutative rings;
this sweep reports whether the two sides happen to agree on noncommutative
upper-triangular instances.  Disagreements are findings, not failures.
"""

import json
import sys

from nilclean import explore_noncommutative


def run(family):
    findings = explore_noncommutative(family=family) if family else explore_noncommutative()
    agree = sum(1 for f in findings if f["agree"])
    for f in findings:
        print(json.dumps(f, sort_keys=True))
    print(f"# {agree}/{len(findings)} instances agree with the commutative splitting")
    return 0


if __name__ == "__main__":
    sys.exit(run(tuple(sys.argv[1:])))
