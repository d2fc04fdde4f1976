"""Exhaustive reference semantics.

Everything here enumerates all 2**n assignments. It is deliberately naive
and serves as ground truth for the real engines. Model lists are returned
in lexicographic order (v1 most significant, 0 before 1).
"""

from __future__ import annotations

from itertools import product

from .formula import Assignment, CnfFormula, Verdict, evaluate

DEFAULT_LIMIT = 24


class TooManyVariables(RuntimeError):
    pass


def _check(num_vars: int, limit: int) -> None:
    if num_vars > limit:
        raise TooManyVariables(
            f"{num_vars} variables exceeds the exhaustive-enumeration limit of {limit}")


def all_assignments(num_vars: int):
    return (Assignment(bits) for bits in product((0, 1), repeat=num_vars))


def all_models(f: CnfFormula, limit: int = DEFAULT_LIMIT) -> list[Assignment]:
    _check(f.num_vars, limit)
    return [a for a in all_assignments(f.num_vars) if evaluate(f, a)]


def _below(nu: Assignment, mu: Assignment) -> bool:
    return all(x <= y for x, y in zip(nu, mu))


def subset_minimal_models(f: CnfFormula, limit: int = DEFAULT_LIMIT) -> list[Assignment]:
    models = all_models(f, limit)
    return [mu for mu in models
            if not any(nu != mu and _below(nu, mu) for nu in models)]


def flip_minimal_models(f: CnfFormula, limit: int = DEFAULT_LIMIT) -> list[Assignment]:
    """Models where lowering any single 1 to 0 gives a non-model.

    Weaker than subset-minimality: for v1 <-> v2 this accepts 11.
    """
    result = []
    for mu in all_models(f, limit):
        stable = True
        for i, bit in enumerate(mu):
            if bit:
                lowered = Assignment(mu[:i] + (0,) + mu[i + 1:])
                if evaluate(f, lowered):
                    stable = False
                    break
        if stable:
            result.append(mu)
    return result


def upward_closure(models, num_vars: int) -> list[Assignment]:
    models = [Assignment(m) for m in models]
    if any(len(m) != num_vars for m in models):
        raise ValueError("all models must cover num_vars variables")
    return [a for a in all_assignments(num_vars)
            if any(_below(m, a) for m in models)]


def dispensable_oracle(f: CnfFormula, limit: int = DEFAULT_LIMIT) -> Verdict:
    minimal = subset_minimal_models(f, limit)
    if not minimal:
        return Verdict(False, frozenset(f.variables))
    used = frozenset().union(*(mu.ones() for mu in minimal))
    return Verdict(True, frozenset(f.variables) - used)


def min_ones_count(f: CnfFormula, limit: int = DEFAULT_LIMIT) -> int | None:
    """Fewest 1s over all models, or ``None`` if ``f`` is unsatisfiable."""
    models = all_models(f, limit)
    if not models:
        return None
    return min(sum(m) for m in models)
