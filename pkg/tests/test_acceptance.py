"""Exit criteria. Each test is one criterion; a PASS/FAIL line per criterion is
printed in the terminal summary."""

import io
import random
import subprocess
import sys
import time

import pytest

from dispenser.bdd import BddManager, Op
from dispenser.cli import main
from dispenser.engines import dispensable, generate_minimal_models
from dispenser.formula import CnfFormula, evaluate, random_cnf, render_dimacs, xor_chain
from dispenser.maxsat import cardinality_minimum_model, encode_min_ones, solve
from dispenser.oracle import (all_models, dispensable_oracle, flip_minimal_models,
                              min_ones_count, subset_minimal_models)

ALL_ENGINES = ["maxsat-enum", "bdd-enum", "bdd-direct", "oracle"]


class Clock:
    def __init__(self, budget):
        self.budget = budget

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.budget, f"took {self.elapsed:.2f}s, budget {self.budget}s"


def bits(models):
    return sorted(str(m) for m in models)


def test_criterion_1_paper_examples():
    with Clock(1.0):
        xor = xor_chain(1)
        for engine in ALL_ENGINES:
            found = []
            report = dispensable(xor, engine, early_stop=False, models=found)
            assert bits(found) == ["01", "10"], engine
            assert report.status == "sat" and report.dispensable == frozenset(), engine
        a_or_b = CnfFormula(2, ((1, 2),))
        assert bits(all_models(a_or_b)) == ["01", "10", "11"]
        assert bits(subset_minimal_models(a_or_b)) == ["01", "10"]


def test_criterion_2_monotone_minimal_inverse_pair():
    with Clock(1.0):
        m = BddManager(2)
        a, b = m.var(1), m.var(2)
        a_or_b, a_xor_b = m.apply(Op.OR, a, b), m.apply(Op.XOR, a, b)
        assert m.monotone(a_xor_b) is a_or_b
        assert m.minimal(a_or_b) is a_xor_b


def test_criterion_3_sizes():
    with Clock(1.0):
        m = BddManager(2)
        a, b = m.var(1), m.var(2)
        a_or_b, a_xor_b = m.apply(Op.OR, a, b), m.apply(Op.XOR, a, b)
        assert m.size(a_xor_b) == 5
        assert m.size(a_or_b) == 4
        assert m.size(m.minimal(a_or_b)) == 5 > m.size(a_or_b)


def test_criterion_4_exponential_family():
    with Clock(10.0):
        for k in range(1, 9):
            f = xor_chain(k)
            for engine in ("maxsat-enum", "bdd-enum"):
                seen = []
                summary = generate_minimal_models(f, engine, seen.append)
                assert summary.count == len(set(seen)) == 2 ** k, (k, engine)
                assert not summary.truncated
            for engine in ("maxsat-enum", "bdd-enum", "bdd-direct"):
                assert dispensable(f, engine).dispensable == frozenset()


def test_criterion_5_monotone_size_bound():
    rng = random.Random(2026)
    violations = []
    with Clock(60.0):
        for i in range(1000):
            n = rng.randint(1, 10)
            f = random_cnf(n, rng.randint(1, 2 * n), rng)
            m = BddManager(n)
            root = m.compile_cnf(f)
            before, after = m.size(root), m.size(m.monotone(root))
            if after > before:
                violations.append((render_dimacs(f), before, after))
    assert not violations, (
        f"{len(violations)} of 1000 BDDs grew under monotone; first: "
        f"{violations[0][1]} -> {violations[0][2]} nodes for\n{violations[0][0]}")


def sweep_formulas():
    rng = random.Random(1)
    return [random_cnf(rng.randint(1, 8), rng.randint(0, 16), rng) for _ in range(500)]


@pytest.fixture(scope="module")
def sweep():
    formulas = sweep_formulas()
    start = time.perf_counter()
    results = []
    for f in formulas:
        truth = dispensable_oracle(f)
        minimal = set(subset_minimal_models(f))
        row = {"formula": f, "oracle": truth, "minimal": minimal, "engines": {}, "models": {}}
        for engine in ("maxsat-enum", "bdd-enum", "bdd-direct"):
            found = []
            report = dispensable(f, engine, early_stop=False, models=found)
            row["engines"][engine] = (report.status == "sat", report.dispensable)
            row["models"][engine] = found
        results.append(row)
    return results, time.perf_counter() - start


def test_criterion_6_oracle_equivalence_sweep(sweep):
    results, elapsed = sweep
    assert len(results) >= 500
    assert all(r["formula"].num_vars <= 8 and r["formula"].num_clauses <= 16 for r in results)
    disagreements = 0
    for r in results:
        for engine, verdict in r["engines"].items():
            if verdict != tuple(r["oracle"]):
                disagreements += 1
        for engine in ("maxsat-enum", "bdd-enum"):
            found = r["models"][engine]
            if len(found) != len(set(found)) or set(found) != r["minimal"]:
                disagreements += 1
    assert disagreements == 0
    assert elapsed < 120.0


def test_criterion_7_maxsat_contract(sweep):
    results, _ = sweep
    start = time.perf_counter()
    failures = 0
    for r in results:
        f = r["formula"]
        model = cardinality_minimum_model(f)
        smallest = min_ones_count(f)
        if smallest is None:
            failures += model is not None
            continue
        failures += sum(model) != smallest
        failures += model not in r["minimal"]
        weighted = solve(encode_min_ones(f, weighted=True))
        failures += not evaluate(f, weighted.model)
    assert failures == 0
    assert time.perf_counter() - start < 120.0


def test_criterion_8_minimality_definitions_diverge():
    iff = CnfFormula(2, ((-1, 2), (1, -2)))
    assert bits(flip_minimal_models(iff)) == ["00", "11"]
    assert bits(subset_minimal_models(iff)) == ["00"]


def cli(args):
    out = io.StringIO()
    code = main(args, out=out)
    return code, out.getvalue()


def test_criterion_9_cli_determinism(tmp_path):
    files = {}
    for k in range(1, 9):
        files[k] = tmp_path / f"xor{k}.cnf"
        files[k].write_text(render_dimacs(xor_chain(k)))
    a_or_b = tmp_path / "aorb.cnf"
    a_or_b.write_text("p cnf 2 1\n1 2 0\n")

    invocations = [["--engine", e, "--mode", "dispensable", str(files[1])] for e in ALL_ENGINES]
    invocations += [["--engine", e, "--mode", "enumerate", str(files[1])] for e in ALL_ENGINES]
    invocations += [["--engine", "oracle", "--mode", "enumerate", str(a_or_b)],
                    ["--mode", "stats", str(a_or_b)],
                    ["--mode", "check", str(files[1])]]
    invocations += [["--engine", e, "--mode", "enumerate", str(files[k])]
                    for k in range(1, 9) for e in ("maxsat-enum", "bdd-enum")]
    for args in invocations:
        first, second = cli(args), cli(args)
        assert first[0] == 0, args
        assert first == second, args

    assert cli(invocations[2])[1] == "status=sat dispensable={}\n"
    lines = cli(["--engine", "maxsat-enum", "--mode", "enumerate", str(files[3])])[1].splitlines()
    assert len([line for line in lines if not line.startswith("status=")]) == 8

    # separate processes as well
    cmd = [sys.executable, "-m", "dispenser", "--engine", "bdd-direct", "--mode", "dispensable",
           str(files[1])]
    runs = [subprocess.run(cmd, capture_output=True) for _ in range(2)]
    assert runs[0].returncode == 0 and runs[0].stdout == runs[1].stdout == b"status=sat dispensable={}\n"
