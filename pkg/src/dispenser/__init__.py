"""Dispensable variables of CNF formulas: variables that are 0 in every
subset-minimal model.

Three engines compute them: MaxSAT-driven enumeration of minimal models,
BDD-driven enumeration, and a direct BDD construction of the minimal-model
set. An exhaustive oracle checks all three on small inputs.
"""

from .bdd import BddManager, Op
from .engines import (ENGINES, DispensableReport, blocking_clause, cross_check, dispensable,
                      generate_minimal_models)
from .formula import (Assignment, CnfFormula, Verdict, evaluate, parse_dimacs, random_cnf,
                      render_dimacs, xor_chain)
from .maxsat import (SoftClause, WeightedInstance, cardinality_minimum_model, encode_min_ones,
                     export_wcnf, parse_wcnf, solve)

__version__ = "0.1.0"

__all__ = [
    "Assignment", "BddManager", "CnfFormula", "DispensableReport", "ENGINES", "Op",
    "SoftClause", "Verdict", "WeightedInstance", "blocking_clause", "cardinality_minimum_model",
    "cross_check", "dispensable", "encode_min_ones", "evaluate", "export_wcnf",
    "generate_minimal_models", "parse_dimacs", "parse_wcnf", "random_cnf", "render_dimacs",
    "solve", "xor_chain",
]
