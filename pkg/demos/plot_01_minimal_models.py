"""
Models, minimal models and dispensable variables
================================================

A minimal model is a model that stops being one if any of its 1s is lowered,
and lowering several at once does not help either. Variables that are 0 in
every minimal model are called dispensable.
"""

from dispenser import CnfFormula, parse_dimacs
from dispenser.oracle import (all_models, dispensable_oracle, flip_minimal_models,
                              subset_minimal_models)

###############################################################################
# Exclusive or and inclusive or share their minimal models.

a_xor_b = parse_dimacs("p cnf 2 2\n1 2 0\n-1 -2 0\n")
a_or_b = parse_dimacs("p cnf 2 1\n1 2 0\n")

for name, f in [("a xor b", a_xor_b), ("a or b", a_or_b)]:
    print(name, "models:", [str(m) for m in all_models(f)],
          "minimal:", [str(m) for m in subset_minimal_models(f)])

###############################################################################
# Neither variable is dispensable in either formula.

print(dispensable_oracle(a_xor_b))

###############################################################################
# A unit clause on v1 leaves v2 and v3 free, and free variables are 0 in
# the only minimal model.

print(dispensable_oracle(CnfFormula(3, ((1,),))))

###############################################################################
# Lowering one bit at a time is a weaker test. For v1 <-> v2, the model 11
# survives every single flip but 00 lies below it.

iff = CnfFormula(2, ((-1, 2), (1, -2)))
print("single-flip minimal:", [str(m) for m in flip_minimal_models(iff)])
print("subset minimal:     ", [str(m) for m in subset_minimal_models(iff)])
