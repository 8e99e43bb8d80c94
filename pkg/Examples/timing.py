import os
import time

import omtense
from omtense import fixtures

fig1 = omtense.build_lattice(fixtures.FIG1)
le3 = fixtures.le(3)
suites = [omtense.Suite(s) for s in ("thm1", "thm2", "thm3", "demorgan", "thm6", "thm7", "cor1", "ext-pf", "ext-hg")]


def run(workers: int) -> float:
    start = time.perf_counter()
    reports = omtense.run_suites(suites, omtense.Instance(fig1, le3, budget=omtense.Budget(workers=workers)))
    elapsed = time.perf_counter() - start

    for report in reports:
        print(f"  {report.suite}: {report.status()}")

    return elapsed


serial = run(1)
print(f"workers 1: {serial:.1f} s")

workers = os.cpu_count() or 1
parallel = run(workers)
print(f"workers {workers}: {parallel:.1f} s, speedup {serial / parallel:.2f}")
