"""Run every cross-check suite on small grids and show the failures, if any."""

import sys

from gridthresh import verify

side = int(sys.argv[1]) if len(sys.argv) > 1 else 4
report = verify.run_verify(side, side)
for line in report.lines()[-1:]:
    print(line)
for c in report.failures():
    print(c.counterexample)
