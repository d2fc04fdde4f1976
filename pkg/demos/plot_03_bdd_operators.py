"""
Minimal models straight from a BDD
==================================

``monotone`` adds every assignment sitting above a model. ``minimal`` keeps
only the minimal models. ``extract`` lists the variables that are 1 in some
minimal model, and every other variable is dispensable.
"""

from dispenser import BddManager, Op, random_cnf
from dispenser.bdd import dispensable_via_bdd

m = BddManager(2)
a, b = m.var(1), m.var(2)
a_or_b = m.apply(Op.OR, a, b)
a_xor_b = m.apply(Op.XOR, a, b)

###############################################################################
# On this pair the two operators undo each other.

print("monotone(a xor b) is a or b:", m.monotone(a_xor_b) is a_or_b)
print("minimal(a or b) is a xor b: ", m.minimal(a_or_b) is a_xor_b)

###############################################################################
# Node counts, terminals included. Note that minimal() made the BDD larger.

print("sizes:", m.size(a_xor_b), m.size(a_or_b), m.size(m.minimal(a_or_b)))

###############################################################################
# monotone() usually shrinks a BDD but not always: v1 ? v3 : v2 has 5 nodes
# and its upward closure v1 ? (v2 or v3) : v2 has 6.

m3 = BddManager(3)
f = m3.mk_node(0, m3.var(2), m3.var(3))
print("size f:", m3.size(f), " size monotone(f):", m3.size(m3.monotone(f)))
print(m3.dump(m3.monotone(f)))

###############################################################################
# The whole pipeline on a random formula.

g = random_cnf(8, 10, 3)
print(dispensable_via_bdd(g))
