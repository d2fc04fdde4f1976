"""Weighted MaxSAT with hard and soft clauses.

The solver is a plain depth-first branch and bound: unit propagation on the
hard clauses, branching on the lowest-numbered free variable with 0 tried
first, and pruning any branch whose falsified soft weight already reaches
the incumbent. Among equally cheap optima the lexicographically smallest
assignment is returned.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .formula import Assignment, CnfFormula, DimacsError, make_clause

# largest weight a 64-bit WDIMACS consumer can hold
MAX_WEIGHT = 2**63 - 1


class WeightOverflow(ArithmeticError):
    pass


@dataclass(frozen=True)
class SoftClause:
    clause: tuple[int, ...]
    weight: int

    def __post_init__(self):
        if not isinstance(self.weight, int) or self.weight < 1:
            raise ValueError(f"soft clause weight must be a positive integer, got {self.weight!r}")
        object.__setattr__(self, "clause", make_clause(self.clause))


@dataclass(frozen=True)
class WeightedInstance:
    num_vars: int
    hard: tuple[tuple[int, ...], ...] = ()
    soft: tuple[SoftClause, ...] = ()

    def __post_init__(self):
        hard = tuple(make_clause(c) for c in self.hard)
        soft = tuple(s if isinstance(s, SoftClause) else SoftClause(*s) for s in self.soft)
        for clause in hard + tuple(s.clause for s in soft):
            for lit in clause:
                if abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} exceeds num_vars={self.num_vars}")
        object.__setattr__(self, "hard", hard)
        object.__setattr__(self, "soft", soft)

    @property
    def soft_weight(self) -> int:
        return sum(s.weight for s in self.soft)

    def top(self) -> int:
        """Weight strictly above every possible soft cost."""
        top = self.soft_weight + 1
        if top > MAX_WEIGHT:
            raise WeightOverflow(f"total soft weight {top - 1} does not fit in 63 bits")
        return top


class Status(str, enum.Enum):
    OPTIMAL = "optimal"
    HARD_UNSAT = "hard-unsat"


@dataclass
class MaxSatResult:
    status: Status
    model: Assignment | None = None
    cost: int | None = None
    decisions: int = field(default=0, compare=False)

    @property
    def optimal(self) -> bool:
        return self.status is Status.OPTIMAL


def solve(inst: WeightedInstance) -> MaxSatResult:
    inst.top()  # weight overflow check
    n = inst.num_vars
    hard = inst.hard
    soft = inst.soft
    # truth value per literal, indexed by n + lit; -1 while unassigned
    lv = [-1] * (2 * n + 1)
    trail: list[int] = []
    # hard clauses to revisit when a literal becomes false
    occurs: dict[int, list[tuple[int, ...]]] = {}
    for clause in hard:
        for lit in clause:
            occurs.setdefault(lit, []).append(clause)
    soft_occurs: dict[int, list[SoftClause]] = {}
    for s in soft:
        for lit in s.clause:
            soft_occurs.setdefault(lit, []).append(s)
    best_cost = None
    best_model = None
    decisions = 0

    def assign(lit):
        lv[n + lit] = 1
        lv[n - lit] = 0
        trail.append(lit)

    def settle(clause):
        """Assign the last free literal of a unit clause; False on conflict."""
        free = None
        for lit in clause:
            val = lv[n + lit]
            if val == 1:
                return True
            if val < 0:
                if free is not None:
                    return True
                free = lit
        if free is None:
            return False
        assign(free)
        return True

    def propagate(head):
        while head < len(trail):
            false_lit = -trail[head]
            head += 1
            for clause in occurs.get(false_lit, ()):
                if not settle(clause):
                    return False
        return True

    def falsified_weight():
        total = 0
        seen = set()
        # a soft clause is falsified only if it contains a false literal
        for lit in trail:
            for s in soft_occurs.get(-lit, ()):
                if id(s) not in seen:
                    seen.add(id(s))
                    if all(lv[n + l] == 0 for l in s.clause):
                        total += s.weight
        return total

    def undo(mark):
        while len(trail) > mark:
            lit = trail.pop()
            lv[n + lit] = lv[n - lit] = -1

    def search(head):
        nonlocal best_cost, best_model, decisions
        if not propagate(head):
            return
        cost = falsified_weight()
        if best_cost is not None and cost >= best_cost:
            return
        var = next((v for v in range(1, n + 1) if lv[n + v] < 0), None)
        if var is None:
            best_cost = cost
            best_model = Assignment(lv[n + 1:])
            return
        for lit in (-var, var):
            decisions += 1
            mark = len(trail)
            assign(lit)
            search(mark)
            undo(mark)

    if all(settle(clause) for clause in hard):
        search(0)
    if best_model is None:
        return MaxSatResult(Status.HARD_UNSAT, decisions=decisions)
    return MaxSatResult(Status.OPTIMAL, best_model, best_cost, decisions)


def encode_min_ones(f: CnfFormula, weighted: bool = False) -> WeightedInstance:
    """MaxSAT instance whose optima are the models of ``f`` with fewest 1s.

    Each variable gets a unit soft clause ``-v`` of weight 1. The original
    clauses become hard, or with ``weighted=True`` soft clauses of weight
    n + 1, which outweighs all the unit clauses together.
    """
    units = tuple(SoftClause((-v,), 1) for v in f.variables)
    if weighted:
        big = f.num_vars + 1
        return WeightedInstance(f.num_vars, (), tuple(SoftClause(c, big) for c in f.clauses) + units)
    return WeightedInstance(f.num_vars, f.clauses, units)


def cardinality_minimum_model(f: CnfFormula) -> Assignment | None:
    result = solve(encode_min_ones(f))
    return result.model


def export_wcnf(inst: WeightedInstance) -> str:
    top = inst.top()
    lines = [f"p wcnf {inst.num_vars} {len(inst.hard) + len(inst.soft)} {top}"]
    for clause in inst.hard:
        lines.append(" ".join(map(str, (top,) + clause + (0,))))
    for s in inst.soft:
        lines.append(" ".join(map(str, (s.weight,) + s.clause + (0,))))
    return "\n".join(lines) + "\n"


def parse_wcnf(text: str) -> WeightedInstance:
    """Read classic WDIMACS; clauses weighing ``top`` or more are hard."""
    header = None
    hard, soft = [], []
    tokens: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 5 or parts[1] != "wcnf":
                raise DimacsError("expected 'p wcnf <vars> <clauses> <top>'")
            header = tuple(int(x) for x in parts[2:])
            continue
        if header is None:
            raise DimacsError("clause data before 'p wcnf' line")
        tokens.extend(int(tok) for tok in line.split())
    if header is None:
        raise DimacsError("missing 'p wcnf' line")
    num_vars, num_clauses, top = header

    clause: list[int] | None = None
    weight = 0
    for tok in tokens:
        if clause is None:
            weight, clause = tok, []
        elif tok == 0:
            if weight >= top:
                hard.append(tuple(clause))
            else:
                soft.append(SoftClause(tuple(clause), weight))
            clause = None
        else:
            clause.append(tok)
    if clause is not None:
        raise DimacsError("final clause lacks terminating 0")
    if len(hard) + len(soft) != num_clauses:
        raise DimacsError(f"header declares {num_clauses} clauses, found {len(hard) + len(soft)}")
    return WeightedInstance(num_vars, tuple(hard), tuple(soft))
