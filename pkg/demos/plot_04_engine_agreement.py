"""
Three engines, one answer
=========================

The two enumeration engines and the direct BDD construction are checked
against exhaustive enumeration on random formulas.
"""

import random

from dispenser import cross_check, random_cnf

rng = random.Random(0)
for i in range(10):
    f = random_cnf(rng.randint(3, 8), rng.randint(2, 14), rng)
    check = cross_check(f)
    agreed = check.agreed
    timings = ", ".join(f"{name} {r.elapsed * 1000:.1f}ms" for name, r in check.reports.items())
    print(f"n={f.num_vars} m={f.num_clauses} {agreed.status} "
          f"dispensable={sorted(agreed.dispensable)} minimal={agreed.num_minimal_models} | {timings}")
