"""Acceptance criteria, one test each; a PASS/FAIL line per criterion is
printed in the pytest terminal summary (or directly when run as a script)."""

import math
import random
import time

from pdhyper.engine import is_cohen_macaulay, pd, pd_algorithm, pd_formula
from pdhyper.fixtures import FIXTURES
from pdhyper.hypergraph import parse_pattern
from pdhyper.ideal import canonical_ideal, random_ideal
from pdhyper.oracle import betti_mod_p, betti_numbers, grade_oracle

import lemmas
from conftest import cycle_patterns, string_patterns

RESULTS: list[str] = []


def report(number, title, ok, detail):
    RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} -- {detail}")
    assert ok, detail


def test_1_worked_examples():
    t0 = time.perf_counter()
    bad = [fx.name for fx in FIXTURES if pd(fx.hypergraph()).value != fx.pd]
    elapsed = time.perf_counter() - t0
    report(1, "worked examples exact", not bad and elapsed < 1.0,
           f"{len(FIXTURES) - len(bad)}/{len(FIXTURES)} exact in {elapsed:.3f}s (limit 1s)")


def test_2_formula_equals_algorithm():
    t0 = time.perf_counter()
    n, bad = 0, []
    for p in list(string_patterns(1, 12)) + list(cycle_patterns(3, 12)):
        h = parse_pattern(p)
        n += 1
        if pd_formula(h).value != pd_algorithm(h).value:
            bad.append(p)
    elapsed = time.perf_counter() - t0
    report(2, "formula = algorithm, mu <= 12", not bad and elapsed < 60,
           f"{n} patterns, {len(bad)} mismatches, {elapsed:.1f}s (limit 60s)")


def test_3_oracle_agreement():
    t0 = time.perf_counter()
    n, bad = 0, []
    for p in list(string_patterns(1, 9)) + list(cycle_patterns(3, 9)):
        h = parse_pattern(p)
        n += 1
        if betti_numbers(canonical_ideal(h)).pd != pd_formula(h).value:
            bad.append(p)
    elapsed = time.perf_counter() - t0
    report(3, "formula = Taylor oracle, mu <= 9", not bad and elapsed < 600,
           f"{n} patterns, {len(bad)} mismatches, {elapsed:.1f}s (limit 600s)")


def test_4_cohen_macaulay():
    n, bad = 0, []
    for p in list(string_patterns(1, 8)) + list(cycle_patterns(3, 8)):
        h = parse_pattern(p)
        i = canonical_ideal(h)
        g, d = grade_oracle(i), betti_numbers(i).pd
        n += 1
        if g != math.ceil(h.mu / 2) or is_cohen_macaulay(h).is_cm != (g == d):
            bad.append(p)
    report(4, "CM classification vs oracle grade/pd, mu <= 8", not bad,
           f"{n} patterns, {len(bad)} mismatches")


def test_5_label_independence():
    rng = random.Random(2024)
    n, bad = 0, []
    while n < 100:
        mu = rng.randint(1, 8)
        if rng.random() < 0.5 and mu >= 3:
            p = "cycle:" + "".join(rng.choice("co") for _ in range(mu))
        else:
            p = "c" if mu == 1 else "c" + "".join(rng.choice("co") for _ in range(mu - 2)) + "c"
        h = parse_pattern(p)
        s1, s2 = rng.randrange(1 << 30), rng.randrange(1 << 30)
        n += 1
        if betti_numbers(random_ideal(h, s1)) != betti_numbers(random_ideal(h, s2)):
            bad.append(f"{p} seeds {s1},{s2}")
    report(5, "Betti tables independent of the ideal", not bad,
           f"{n} random hypergraphs, {len(bad)} differing tables")


def test_6_lemma_suite():
    total, failed = 0, []
    for name, check in lemmas.ALL.items():
        checked, bad = check()
        total += checked
        if bad or not checked:
            failed.append(f"{name}: {bad[:3]}")
    report(6, "lemma-level properties", not failed,
           f"{len(lemmas.ALL)} properties, {total} instances" + (f"; failed {failed}" if failed else ""))


def test_7_characteristic_independence():
    n, bad = 0, []
    for p in list(string_patterns(1, 8)) + list(cycle_patterns(3, 8)):
        i = canonical_ideal(parse_pattern(p))
        ref = betti_numbers(i)
        n += 1
        if any(betti_mod_p(i, q) != ref for q in (2, 3, 5)):
            bad.append(p)
    report(7, "Betti tables over Q, GF(2), GF(3), GF(5) agree, mu <= 8", not bad,
           f"{n} patterns, {len(bad)} differing")


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(RESULTS))
