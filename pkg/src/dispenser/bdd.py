"""Reduced ordered BDDs with minimal-model operators.

Nodes are hash-consed Python objects owned by a :class:`BddManager`, so two
handles denote the same function exactly when they are the same object.
Levels run from 0 (top) to ``num_vars - 1``; terminals sit at level
``num_vars``. With the default identity order, level ``k`` tests v_{k+1}.
"""

from __future__ import annotations

import enum
import heapq
from itertools import count

from .formula import Assignment, CnfFormula, Verdict


class BddError(Exception):
    pass


class LevelOutOfRange(BddError, ValueError):
    pass


class ManagerMismatch(BddError):
    pass


class Op(enum.Enum):
    AND = "and"
    OR = "or"
    XOR = "xor"


class Node:
    """A BDD node; terminals have ``low = high = None``."""

    __slots__ = ("manager", "uid", "level", "low", "high")

    def __init__(self, manager, uid, level, low, high):
        self.manager = manager
        self.uid = uid
        self.level = level
        self.low = low
        self.high = high

    @property
    def is_terminal(self) -> bool:
        return self.low is None

    @property
    def var(self) -> int | None:
        if self.is_terminal:
            return None
        return self.manager.var_at(self.level)

    def __repr__(self):
        if self.is_terminal:
            return f"<BDD {self.uid}>"
        return f"<BDD {self.uid}: v{self.var} ? {self.high.uid} : {self.low.uid}>"


class BddManager:
    def __init__(self, num_vars: int, order=None):
        """``order`` lists the variables from the top level down; it must be a
        permutation of 1..num_vars. Defaults to v1, v2, ..."""
        if order is None:
            order = range(1, num_vars + 1)
        order = list(order)
        if sorted(order) != list(range(1, num_vars + 1)):
            raise ValueError(f"order {order} is not a permutation of 1..{num_vars}")
        self.num_vars = num_vars
        self._order = order
        self._level_of = {v: k for k, v in enumerate(order)}
        self._uids = count()
        self.ZERO = Node(self, next(self._uids), num_vars, None, None)
        self.ONE = Node(self, next(self._uids), num_vars, None, None)
        self._unique: dict[tuple, Node] = {}
        self._apply_memo: dict[tuple, Node] = {}
        self._negate_memo: dict[Node, Node] = {}
        self._monotone_memo: dict[Node, Node] = {}
        self._minimal_memo: dict[tuple, Node] = {}
        self._extract_memo: dict[Node, frozenset] = {}

    # -- structure ---------------------------------------------------------

    def var_at(self, level: int) -> int:
        return self._order[level]

    def level_of(self, var: int) -> int:
        try:
            return self._level_of[var]
        except KeyError:
            raise LevelOutOfRange(f"variable {var} not in 1..{self.num_vars}") from None

    def _own(self, *nodes):
        for f in nodes:
            if not isinstance(f, Node) or f.manager is not self:
                raise ManagerMismatch(f"{f!r} does not belong to this manager")

    def mk_node(self, level: int, low: Node, high: Node) -> Node:
        if not 0 <= level < self.num_vars:
            raise LevelOutOfRange(f"level {level} outside 0..{self.num_vars - 1}")
        self._own(low, high)
        if low is high:
            return low
        if low.level <= level or high.level <= level:
            raise LevelOutOfRange(f"children of a level-{level} node must lie below it")
        return self._mk(level, low, high)

    def _mk(self, level, low, high):
        if low is high:
            return low
        key = (level, low, high)
        node = self._unique.get(key)
        if node is None:
            node = Node(self, next(self._uids), level, low, high)
            self._unique[key] = node
        return node

    def var(self, v: int) -> Node:
        return self.mk_node(self.level_of(v), self.ZERO, self.ONE)

    def literal(self, lit: int) -> Node:
        node = self.var(abs(lit))
        return node if lit > 0 else self.negate(node)

    def constant(self, value: bool) -> Node:
        return self.ONE if value else self.ZERO

    # -- boolean operations -----------------------------------------------

    def apply(self, op: Op, f: Node, g: Node) -> Node:
        op = Op(op)
        self._own(f, g)
        return self._apply(op, f, g)

    def _apply(self, op, f, g):
        zero, one = self.ZERO, self.ONE
        if op is Op.AND:
            if f is zero or g is zero:
                return zero
            if f is one:
                return g
            if g is one or f is g:
                return f
        elif op is Op.OR:
            if f is one or g is one:
                return one
            if f is zero:
                return g
            if g is zero or f is g:
                return f
        else:
            if f is g:
                return zero
            if f is zero:
                return g
            if g is zero:
                return f
            if f is one and g is one:
                return zero
        if g.uid < f.uid:
            f, g = g, f
        key = (op, f, g)
        result = self._apply_memo.get(key)
        if result is not None:
            return result
        level = min(f.level, g.level)
        f0, f1 = (f.low, f.high) if f.level == level else (f, f)
        g0, g1 = (g.low, g.high) if g.level == level else (g, g)
        result = self._mk(level, self._apply(op, f0, g0), self._apply(op, f1, g1))
        self._apply_memo[key] = result
        return result

    def conj(self, f: Node, g: Node) -> Node:
        return self.apply(Op.AND, f, g)

    def disj(self, f: Node, g: Node) -> Node:
        return self.apply(Op.OR, f, g)

    def negate(self, f: Node) -> Node:
        self._own(f)
        return self._negate(f)

    def _negate(self, f):
        if f is self.ZERO:
            return self.ONE
        if f is self.ONE:
            return self.ZERO
        result = self._negate_memo.get(f)
        if result is None:
            result = self._mk(f.level, self._negate(f.low), self._negate(f.high))
            self._negate_memo[f] = result
        return result

    # -- construction from CNF -----------------------------------------------

    def from_clause(self, clause) -> Node:
        lits = set(clause)
        if any(-lit in lits for lit in lits):
            return self.ONE
        # build bottom-up so each literal costs one node
        node = self.ZERO
        for lit in sorted(lits, key=lambda l: self.level_of(abs(l)), reverse=True):
            level = self.level_of(abs(lit))
            if lit > 0:
                node = self.mk_node(level, node, self.ONE)
            else:
                node = self.mk_node(level, self.ONE, node)
        return node

    def compile_cnf(self, formula: CnfFormula) -> Node:
        """Conjoin clause BDDs, always merging the two smallest first.

        Ties go to the earlier-queued BDD, so builds are deterministic.
        """
        if formula.num_vars != self.num_vars:
            raise ValueError(f"formula has {formula.num_vars} variables, manager {self.num_vars}")
        tick = count()
        heap = []
        for clause in formula.clauses:
            node = self.from_clause(clause)
            heapq.heappush(heap, (self.size(node), next(tick), node))
        if not heap:
            return self.ONE
        while len(heap) > 1:
            _, _, f = heapq.heappop(heap)
            _, _, g = heapq.heappop(heap)
            h = self._apply(Op.AND, f, g)
            if h is self.ZERO:
                return h
            heapq.heappush(heap, (self.size(h), next(tick), h))
        return heap[0][2]

    # -- inspection ------------------------------------------------------------

    def nodes(self, f: Node) -> list[Node]:
        """Reachable nodes, children before parents."""
        self._own(f)
        seen = set()
        out = []
        stack = [(f, False)]
        while stack:
            node, expanded = stack.pop()
            if expanded:
                out.append(node)
                continue
            if node in seen:
                continue
            seen.add(node)
            stack.append((node, True))
            if not node.is_terminal:
                stack.append((node.high, False))
                stack.append((node.low, False))
        return out

    def size(self, f: Node) -> int:
        """Distinct reachable nodes, terminals included."""
        return len(self.nodes(f))

    def evaluate(self, f: Node, assignment) -> bool:
        self._own(f)
        while not f.is_terminal:
            f = f.high if assignment[f.var - 1] else f.low
        return f is self.ONE

    def iter_models(self, f: Node):
        """Yield all models of ``f`` as assignments, low branches first.

        Under the identity order this is lexicographic order.
        """
        self._own(f)
        values = [0] * self.num_vars

        def walk(node, level):
            if node is self.ZERO:
                return
            if level == self.num_vars:
                yield Assignment(values)
                return
            var = self._order[level]
            if node.level > level:
                branches = ((0, node), (1, node))
            else:
                branches = ((0, node.low), (1, node.high))
            for bit, child in branches:
                values[var - 1] = bit
                yield from walk(child, level + 1)
            values[var - 1] = 0

        yield from walk(f, 0)

    def lex_min_model(self, f: Node) -> Assignment | None:
        """Follow low edges unless they reach ZERO; untested variables get 0.

        Returns ``None`` when ``f`` is ZERO.
        """
        self._own(f)
        if f is self.ZERO:
            return None
        values = [0] * self.num_vars
        while not f.is_terminal:
            if f.low is self.ZERO:
                values[f.var - 1] = 1
                f = f.high
            else:
                f = f.low
        return Assignment(values)

    def dump(self, f: Node) -> str:
        """One ``node <id> <level> <low> <high>`` line per internal node, children first."""
        lines = [f"node {n.uid} {n.level} {n.low.uid} {n.high.uid}"
                 for n in self.nodes(f) if not n.is_terminal]
        return "\n".join(lines) + ("\n" if lines else "")

    # -- minimal models --------------------------------------------------------

    def monotone(self, f: Node) -> Node:
        """Upward closure: add every assignment that raises some 0s of a model to 1."""
        self._own(f)
        return self._monotone(f)

    def _monotone(self, f):
        if f.is_terminal:
            return f
        result = self._monotone_memo.get(f)
        if result is None:
            low = self._monotone(f.low)
            high = self._monotone(f.high)
            # (v and high) or low, written directly as a node
            result = self._mk(f.level, low, self._apply(Op.OR, high, low))
            self._monotone_memo[f] = result
        return result

    def minimal(self, f: Node) -> Node:
        """BDD whose models are exactly the subset-minimal models of ``f``.

        A model setting the top variable to 1 is minimal only if its rest is
        minimal in the high branch and lies outside the upward closure of the
        low branch. Variables that ``f`` does not test are forced to 0.
        """
        self._own(f)
        return self._minimal(f, 0)

    def _minimal(self, f, level):
        if level == self.num_vars:
            return f
        key = (f, level)
        result = self._minimal_memo.get(key)
        if result is not None:
            return result
        if f.level > level:
            result = self._mk(level, self._minimal(f, level + 1), self.ZERO)
        else:
            low = self._minimal(f.low, level + 1)
            blocked = self._negate(self._monotone(f.low))
            high = self._apply(Op.AND, self._minimal(f.high, level + 1), blocked)
            result = self._mk(level, low, high)
        self._minimal_memo[key] = result
        return result

    def extract(self, f: Node) -> frozenset[int]:
        """Variables labelling a node whose high edge does not go to ZERO.

        On a BDD produced by :meth:`minimal` these are the variables set to 1
        in some minimal model.
        """
        self._own(f)
        return self._extract(f)

    def _extract(self, f):
        if f.is_terminal:
            return frozenset()
        result = self._extract_memo.get(f)
        if result is None:
            result = self._extract(f.low)
            if f.high is not self.ZERO:
                result = result | {f.var} | self._extract(f.high)
            self._extract_memo[f] = result
        return result


def dispensable_via_bdd(formula: CnfFormula, order=None, manager: BddManager | None = None) -> Verdict:
    m = manager if manager is not None else BddManager(formula.num_vars, order)
    f = m.compile_cnf(formula)
    everything = frozenset(formula.variables)
    if f is m.ZERO:
        return Verdict(False, everything)
    return Verdict(True, everything - m.extract(m.minimal(f)))
