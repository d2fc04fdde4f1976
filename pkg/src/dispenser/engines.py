"""Minimal-model enumeration and dispensable-variable engines.

Enumeration repeatedly asks a provider for one minimal model, visits it, and
adds a blocking clause that rules out the model and everything above it.
Two providers exist: a cardinality-minimum model from the MaxSAT solver and
the lexicographically smallest model of a BDD.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Protocol

from . import oracle
from .bdd import BddManager
from .formula import Assignment, CnfFormula
from .maxsat import SoftClause, WeightedInstance, solve

DEFAULT_MAX_MODELS = 1_000_000

ENGINES = ("maxsat-enum", "bdd-enum", "bdd-direct", "oracle")


class ModelCapExceeded(RuntimeError):
    pass


class EngineDisagreement(AssertionError):
    def __init__(self, message, reports):
        super().__init__(message)
        self.reports = reports


def blocking_clause(model: Assignment) -> tuple[int, ...]:
    return tuple(-v for v in sorted(model.ones()))


class MinimalModelProvider(Protocol):
    def minimal_model(self) -> Assignment | None: ...

    def block(self, clause: tuple[int, ...]) -> None: ...


class MaxSatProvider:
    """Cardinality-minimum models of the formula plus the blocking clauses so far."""

    def __init__(self, formula: CnfFormula):
        self.num_vars = formula.num_vars
        self.clauses = list(formula.clauses)
        self._units = tuple(SoftClause((-v,), 1) for v in formula.variables)
        self.decisions = 0

    def minimal_model(self):
        result = solve(WeightedInstance(self.num_vars, tuple(self.clauses), self._units))
        self.decisions += result.decisions
        return result.model

    def block(self, clause):
        self.clauses.append(tuple(clause))


class BddProvider:
    """Lexicographically smallest models of a BDD that absorbs each blocking clause."""

    def __init__(self, formula: CnfFormula, order=None):
        self.manager = BddManager(formula.num_vars, order)
        self.root = self.manager.compile_cnf(formula)
        self.initial_size = self.manager.size(self.root)

    def minimal_model(self):
        return self.manager.lex_min_model(self.root)

    def block(self, clause):
        self.root = self.manager.conj(self.root, self.manager.from_clause(clause))


def make_provider(engine: str, formula: CnfFormula, order=None):
    if engine == "maxsat-enum":
        return MaxSatProvider(formula)
    if engine == "bdd-enum":
        return BddProvider(formula, order)
    raise ValueError(f"{engine!r} is not an enumeration engine")


@dataclass
class EnumerationSummary:
    count: int
    truncated: bool
    stopped: bool = False  # ended by the stop predicate


def generate_minimal_models(formula: CnfFormula, provider: MinimalModelProvider | str,
                            visit: Callable[[Assignment], object] | None = None,
                            cap: int | None = None, strict: bool = False,
                            stop: Callable[[], bool] | None = None) -> EnumerationSummary:
    """Visit each subset-minimal model of ``formula`` once.

    ``provider`` is a provider object or an enumeration engine name. When
    ``cap`` models have been visited and another one exists, the summary is
    marked truncated, or :class:`ModelCapExceeded` is raised if ``strict``.
    ``stop`` is polled after each visit and ends enumeration early (the
    result is then not marked truncated).
    """
    if isinstance(provider, str):
        provider = make_provider(provider, formula)
    if cap is not None and cap < 1:
        raise ValueError("cap must be at least 1")
    visited = 0
    model = provider.minimal_model()
    while model is not None:
        if cap is not None and visited >= cap:
            if strict:
                raise ModelCapExceeded(f"more than {cap} minimal models")
            return EnumerationSummary(visited, True)
        if visit is not None:
            visit(model)
        visited += 1
        if stop is not None and stop():
            return EnumerationSummary(visited, False, stopped=True)
        provider.block(blocking_clause(model))
        model = provider.minimal_model()
    return EnumerationSummary(visited, False)


@dataclass
class DispensableReport:
    status: str
    dispensable: frozenset[int]
    engine: str
    models_visited: int | None = None
    complete: bool = False  # every minimal model was visited
    truncated: bool = False
    elapsed: float = field(default=0.0, compare=False)
    bdd_size: int | None = None
    solver_decisions: int | None = None

    @property
    def num_minimal_models(self) -> int | None:
        return self.models_visited if self.complete else None

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "engine": self.engine,
            "dispensable": sorted(self.dispensable),
            "num_minimal_models": self.num_minimal_models,
            "truncated": self.truncated,
            "stats": {
                "elapsed_ms": round(self.elapsed * 1000, 3),
                "bdd_size": self.bdd_size,
                "solver_decisions": self.solver_decisions,
            },
        }


def dispensable(formula: CnfFormula, engine: str = "bdd-direct", *, order=None,
                max_models: int | None = DEFAULT_MAX_MODELS, early_stop: bool = True,
                models: list | None = None) -> DispensableReport:
    """Variables that are 0 in every subset-minimal model of ``formula``.

    Enumeration engines collect the union of variables set to 1 in the
    visited models. With ``early_stop`` they quit once that union covers all
    variables. If ``max_models`` cuts enumeration short the report is flagged
    ``truncated`` and the set may contain variables that are not really
    dispensable. Visited models are appended to ``models`` when given.
    """
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; choose from {', '.join(ENGINES)}")
    start = time.perf_counter()
    everything = frozenset(formula.variables)

    if engine == "oracle":
        minimal = oracle.subset_minimal_models(formula)
        if models is not None:
            models.extend(minimal)
        verdict = oracle.dispensable_oracle(formula)
        return DispensableReport(verdict.status, verdict.dispensable, engine,
                                 models_visited=len(minimal), complete=True,
                                 elapsed=time.perf_counter() - start)

    if engine == "bdd-direct":
        m = BddManager(formula.num_vars, order)
        f = m.compile_cnf(formula)
        if f is m.ZERO:
            return DispensableReport("unsat", everything, engine, models_visited=0, complete=True,
                                     elapsed=time.perf_counter() - start, bdd_size=m.size(f))
        mini = m.minimal(f)
        report = DispensableReport("sat", everything - m.extract(mini), engine,
                                   bdd_size=m.size(f))
        if models is not None:
            found = list(m.iter_models(mini))
            models.extend(found)
            report.models_visited, report.complete = len(found), True
        report.elapsed = time.perf_counter() - start
        return report

    provider = make_provider(engine, formula, order)
    used: set[int] = set()

    def visit(mu):
        used.update(mu.ones())
        if models is not None:
            models.append(mu)

    stop = (lambda: len(used) == len(everything)) if early_stop else None
    summary = generate_minimal_models(formula, provider, visit, cap=max_models, stop=stop)
    report = DispensableReport(
        "sat" if summary.count else "unsat",
        everything - used if summary.count else everything,
        engine,
        models_visited=summary.count,
        truncated=summary.truncated,
        elapsed=time.perf_counter() - start,
    )
    report.complete = not (summary.truncated or summary.stopped)
    if isinstance(provider, MaxSatProvider):
        report.solver_decisions = provider.decisions
    else:
        report.bdd_size = provider.initial_size
    return report


@dataclass
class CrossCheck:
    reports: dict[str, DispensableReport]
    models: dict[str, list[Assignment]]

    @property
    def agreed(self) -> DispensableReport:
        return next(iter(self.reports.values()))


def cross_check(formula: CnfFormula, engines: Iterable[str] | None = None, *,
                order=None) -> CrossCheck:
    """Run several engines on ``formula`` and insist they agree.

    Enumeration engines run to completion so that their model sets can be
    compared too. The oracle is skipped when ``formula`` is beyond its
    variable limit. Raises :class:`EngineDisagreement` on any mismatch.
    """
    if engines is None:
        engines = [e for e in ENGINES
                   if e != "oracle" or formula.num_vars <= oracle.DEFAULT_LIMIT]
    reports, models = {}, {}
    for engine in engines:
        found: list[Assignment] = []
        reports[engine] = dispensable(formula, engine, order=order, max_models=None,
                                      early_stop=False, models=found)
        models[engine] = found

    names = list(reports)
    first = reports[names[0]]
    for name in names[1:]:
        other = reports[name]
        if (other.status, other.dispensable) != (first.status, first.dispensable):
            raise EngineDisagreement(
                f"{names[0]} says {first.status} {sorted(first.dispensable)}, "
                f"{name} says {other.status} {sorted(other.dispensable)}", reports)
    model_sets = {name: frozenset(ms) for name, ms in models.items()}
    reference = model_sets[names[0]]
    for name in names[1:]:
        if model_sets[name] != reference:
            raise EngineDisagreement(
                f"{names[0]} found {len(reference)} minimal models, "
                f"{name} found {len(model_sets[name])}", reports)
    return CrossCheck(reports, models)
