"""CNF formulas, assignments, and DIMACS input/output.

Literals are signed integers in DIMACS style: ``3`` is v3, ``-3`` is its
negation. Variables are numbered from 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple


class DimacsError(ValueError):
    """Base class for malformed DIMACS input."""


class MalformedHeader(DimacsError):
    pass


class LiteralOutOfRange(DimacsError):
    pass


class UnterminatedClause(DimacsError):
    pass


class ClauseCountMismatch(DimacsError):
    pass


def negate(literal: int) -> int:
    return -literal


def make_clause(literals: Iterable[int]) -> tuple[int, ...]:
    """Drop duplicate literals, keeping first occurrences in order."""
    clause = tuple(dict.fromkeys(literals))
    if 0 in clause:
        raise ValueError("0 is not a literal")
    return clause


class Assignment(tuple):
    """Total 0/1 assignment; position ``i - 1`` holds the value of v_i.

    Being a tuple, assignments compare lexicographically with v1 most
    significant, and ``str`` renders the bit-string ``"01"``.
    """

    def __new__(cls, values: Iterable[int] = ()):
        values = tuple(int(b) for b in values)
        if any(b not in (0, 1) for b in values):
            raise ValueError(f"assignment values must be 0 or 1: {values}")
        return super().__new__(cls, values)

    @classmethod
    def from_bits(cls, bits: str) -> "Assignment":
        return cls(int(ch) for ch in bits)

    @property
    def num_vars(self) -> int:
        return len(self)

    def value(self, var: int) -> int:
        return self[var - 1]

    def ones(self) -> frozenset[int]:
        return frozenset(i + 1 for i, b in enumerate(self) if b)

    def satisfies(self, literal: int) -> bool:
        return self[abs(literal) - 1] == (literal > 0)

    def __str__(self) -> str:
        return "".join(map(str, self))

    def __repr__(self) -> str:
        return f"Assignment('{self}')"


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.num_vars < 0:
            raise ValueError("num_vars must be non-negative")
        clauses = tuple(make_clause(c) for c in self.clauses)
        for clause in clauses:
            for lit in clause:
                if abs(lit) > self.num_vars:
                    raise LiteralOutOfRange(
                        f"literal {lit} exceeds declared variable count {self.num_vars}")
        object.__setattr__(self, "clauses", clauses)

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    @property
    def variables(self) -> range:
        return range(1, self.num_vars + 1)

    def conjoin(self, *clauses: Iterable[int]) -> "CnfFormula":
        return CnfFormula(self.num_vars, self.clauses + tuple(tuple(c) for c in clauses))


class Verdict(NamedTuple):
    """Outcome of a dispensable-variable computation.

    For an unsatisfiable formula every variable is (vacuously) dispensable.
    """
    satisfiable: bool
    dispensable: frozenset[int]

    @property
    def status(self) -> str:
        return "sat" if self.satisfiable else "unsat"


def evaluate(formula: CnfFormula, assignment: Assignment) -> bool:
    if len(assignment) != formula.num_vars:
        raise ValueError(
            f"assignment covers {len(assignment)} variables, formula has {formula.num_vars}")
    return all(any(assignment.satisfies(lit) for lit in clause)
               for clause in formula.clauses)


def parse_dimacs(text: str) -> CnfFormula:
    header = None
    tokens: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            # SATLIB end marker
            break
        if line.startswith("p"):
            if header is not None:
                raise MalformedHeader(f"line {lineno}: duplicate problem line")
            parts = line.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise MalformedHeader(f"line {lineno}: expected 'p cnf <vars> <clauses>'")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise MalformedHeader(f"line {lineno}: non-integer counts") from None
            if header[0] < 0 or header[1] < 0:
                raise MalformedHeader(f"line {lineno}: negative counts")
            continue
        if header is None:
            raise MalformedHeader(f"line {lineno}: clause data before 'p cnf' line")
        try:
            tokens.extend(int(tok) for tok in line.split())
        except ValueError:
            raise DimacsError(f"line {lineno}: non-integer token") from None
    if header is None:
        raise MalformedHeader("missing 'p cnf' line")

    num_vars, num_clauses = header
    clauses = []
    current: list[int] = []
    for lit in tokens:
        if lit == 0:
            clauses.append(make_clause(current))
            current = []
        elif abs(lit) > num_vars:
            raise LiteralOutOfRange(f"literal {lit} exceeds declared variable count {num_vars}")
        else:
            current.append(lit)
    if current:
        raise UnterminatedClause(f"final clause {current} lacks terminating 0")
    if len(clauses) != num_clauses:
        raise ClauseCountMismatch(f"header declares {num_clauses} clauses, found {len(clauses)}")
    return CnfFormula(num_vars, tuple(clauses))


def render_dimacs(formula: CnfFormula) -> str:
    lines = [f"p cnf {formula.num_vars} {formula.num_clauses}"]
    lines += [" ".join(map(str, clause + (0,))) for clause in formula.clauses]
    return "\n".join(lines) + "\n"


def xor_chain(k: int) -> CnfFormula:
    """(v1 xor v2) and (v3 xor v4) and ... with ``k`` blocks; 2**k minimal models."""
    if k < 1:
        raise ValueError("k must be positive")
    clauses = []
    for j in range(1, k + 1):
        a, b = 2 * j - 1, 2 * j
        clauses += [(a, b), (-a, -b)]
    return CnfFormula(2 * k, tuple(clauses))


def random_cnf(num_vars: int, num_clauses: int, rng: random.Random | int | None = None,
               max_width: int = 3) -> CnfFormula:
    """Uniform random CNF: each clause picks 1..max_width distinct variables
    and random signs."""
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    clauses = []
    if num_vars > 0:
        for _ in range(num_clauses):
            width = rng.randint(1, min(max_width, num_vars))
            chosen = rng.sample(range(1, num_vars + 1), width)
            clauses.append(tuple(v if rng.random() < 0.5 else -v for v in chosen))
    return CnfFormula(num_vars, tuple(clauses))
