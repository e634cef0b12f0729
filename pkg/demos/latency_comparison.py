"""Paired latency suite on a desk-scale data set (1,800 leaf districts).

Both strategies run against the same seeded-random target leaf each trial,
so target choice never favors one side.  Medians are the headline numbers;
the 2016 reference figures are printed for context, never as measurement.

Run from the repository root (takes around a second):

    python3 demos/latency_comparison.py
"""

import io

from georeverse import format_report, run_suite
from georeverse.benchmark import write_csv
from georeverse.synthetic import synthetic_gazetteer

g = synthetic_gazetteer()  # 25 regions x 8 provinces x 9 districts
report = run_suite(g, trials=300, warmup=50, seed=7)

print(format_report(report))

print("\nmachine-readable form:")
buffer = io.StringIO()
write_csv(report, buffer)
print(buffer.getvalue(), end="")
