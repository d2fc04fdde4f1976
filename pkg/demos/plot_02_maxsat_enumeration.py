"""
Enumerating minimal models with MaxSAT
======================================

Make every original clause hard and add a weight-1 soft clause ``-v`` for
each variable. An optimal MaxSAT solution is then a model with as few 1s as
possible, and such a model is always minimal. Blocking it and solving again
walks through all minimal models.
"""

from dispenser import (Assignment, CnfFormula, cardinality_minimum_model, encode_min_ones,
                       export_wcnf, generate_minimal_models, xor_chain)
from dispenser.engines import blocking_clause

###############################################################################
# The weighted instance for ``a or b``, in WDIMACS form.

a_or_b = CnfFormula(2, ((1, 2),))
print(export_wcnf(encode_min_ones(a_or_b)))
print("fewest ones:", cardinality_minimum_model(a_or_b))

###############################################################################
# Each visited model is excluded together with everything above it.

print("blocking 101:", blocking_clause(Assignment.from_bits("101")))

###############################################################################
# A chain of k exclusive ors has 2**k minimal models, so enumeration can take
# exponential time.

for k in range(1, 7):
    summary = generate_minimal_models(xor_chain(k), "maxsat-enum")
    print(f"k={k}: {summary.count} minimal models")
