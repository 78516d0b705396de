"""Lemma-level property checks shared by the unit tests and the acceptance run.

Each check returns (instances checked, list of failures). Projective
dimensions come from the Taylor oracle unless the name says otherwise.
"""

import math
import random

from pdhyper.engine import pd_algorithm, pd_formula
from pdhyper.hypergraph import Hypergraph, is_closed, parse_pattern, remove_vertices
from pdhyper.ideal import canonical_ideal, colon_by_generator, restrict_to
from pdhyper.invariants import modularity, modularity_reduced_case, recursion_checks
from pdhyper.errors import PreconditionViolated
from pdhyper.oracle import betti_numbers

import brute
from conftest import cycle_patterns, random_separated, string_patterns


def opd(h: Hypergraph) -> int:
    return betti_numbers(canonical_ideal(h)).pd


def head_removed(h, i):
    return remove_vertices(h, range(1, i + 1))


def max_rule(mu_cap=8, random_count=100, seed=1):
    bad, n = [], 0
    cases = [parse_pattern(p) for p in string_patterns(2, mu_cap)]
    target = len(cases) + random_count
    rng = random.Random(seed)
    while len(cases) < target:
        h = random_separated(rng, rng.randint(2, 7))
        if is_closed(h, 1):
            cases.append(h)
    for h in cases:
        i = canonical_ideal(h)
        lhs = betti_numbers(i).pd
        rhs = max(betti_numbers(restrict_to(i, range(2, h.mu + 1))).pd,
                  betti_numbers(colon_by_generator(i, 1)).pd + 1)
        n += 1
        if lhs != rhs:
            bad.append(str(h))
    return n, bad


def closed_neighbour_rule(mu_cap=9, random_count=100, seed=2):
    bad, n = [], 0
    for p in string_patterns(2, mu_cap):
        if p[1] != "c":
            continue
        h = parse_pattern(p)
        n += 1
        if opd(h) != opd(head_removed(h, 1)) + 1:
            bad.append(p)
    rng = random.Random(seed)
    found = 0
    while found < random_count:
        h = random_separated(rng, rng.randint(2, 7))
        nbrs = {v for f in h.faces if 1 in f for v in f} - {1}
        if not is_closed(h, 1) or not all(is_closed(h, v) for v in nbrs):
            continue
        found += 1
        n += 1
        if opd(h) != opd(head_removed(h, 1)) + 1:
            bad.append(str(h))
    return n, bad


def open_neighbour_rule(mu_cap=9):
    bad, n = [], 0
    for p in string_patterns(3, mu_cap):
        if p[1] != "o":
            continue
        h = parse_pattern(p)
        n += 1
        if opd(h) != opd(head_removed(h, 3)) + 2:
            bad.append(p)
    return n, bad


def sandwich(mu_cap=9):
    bad, n = [], 0
    for p in string_patterns(2, mu_cap):
        h = parse_pattern(p)
        v, v1, v2 = opd(h), opd(head_removed(h, 1)), opd(head_removed(h, 2))
        n += 1
        if not (v1 <= v <= v1 + 1 and v <= v2 + 2):
            bad.append(p)
    return n, bad


def closed_face_insensitivity(count=60, seed=3):
    rng = random.Random(seed)
    bad, n = [], 0
    while n < count:
        h = random_separated(rng, rng.randint(2, 8))
        closed = [v for v in h.vertices if is_closed(h, v)]
        if len(closed) < 2:
            continue
        face = tuple(sorted(rng.sample(closed, rng.randint(2, len(closed)))))
        if face in h.faces:
            continue
        n += 1
        if opd(h) != opd(h.with_face(face)):
            bad.append(f"{h} + {face}")
    return n, bad


def monotonicity(count=100, seed=4):
    """Adding a face (including a closed singleton) never lowers pd."""
    rng = random.Random(seed)
    bad, n = [], 0
    while n < count:
        h = random_separated(rng, rng.randint(1, 8))
        if n % 2 and any(not is_closed(h, v) for v in h.vertices):
            face = (rng.choice([v for v in h.vertices if not is_closed(h, v)]),)
        else:
            face = tuple(sorted(rng.sample(list(h.vertices), rng.randint(1, h.mu))))
        if face in h.faces:
            continue
        n += 1
        if opd(h) > opd(h.with_face(face)):
            bad.append(f"{h} + {face}")
    return n, bad


def open_cycles(lo=3, hi=15, oracle_cap=12):
    bad, n = [], 0
    for mu in range(lo, hi + 1):
        h = parse_pattern("cycle:" + "o" * mu)
        expected = mu // 3 + math.ceil(mu / 3)
        values = {pd_formula(h).value, pd_algorithm(h).value}
        if mu <= oracle_cap:
            values.add(opd(h))
        n += 1
        if values != {expected}:
            bad.append(f"open {mu}-cycle: {sorted(values)} vs {expected}")
    return n, bad


def three_open_reduction(mu_cap=12, oracle_cap=9):
    bad, n = [], 0
    for p in cycle_patterns(6, mu_cap):
        body = p.removeprefix("cycle:")
        k = body.find("ooo")
        if k < 0 or "c" not in body:
            continue
        h, short = parse_pattern(p), parse_pattern("cycle:" + body[:k] + body[k + 3:])
        n += 1
        if pd_formula(h).value != pd_formula(short).value + 2:
            bad.append(p)
        elif len(body) <= oracle_cap and opd(h) != opd(short) + 2:
            bad.append(p + " (oracle)")
    return n, bad


def isolated_open_modularity(mu_cap=14):
    bad, n = [], 0
    for p in list(string_patterns(1, mu_cap)) + list(cycle_patterns(3, mu_cap)):
        h = parse_pattern(p)
        try:
            value = modularity_reduced_case(h)
        except PreconditionViolated:
            continue
        body, cyclic = p.removeprefix("cycle:"), p.startswith("cycle:")
        n += 1
        if not value == modularity(h) == brute.modularity_brute(body, cyclic):
            bad.append(p)
    return n, bad


def recursion_table(mu_cap=12):
    bad, n = [], 0
    for p in string_patterns(3, mu_cap):
        if p[1] != "o":
            continue
        n += 1
        if not recursion_checks(parse_pattern(p)).ok:
            bad.append(p)
    return n, bad


ALL = {
    "max rule for a closed vertex": max_rule,
    "closed neighbours: +1": closed_neighbour_rule,
    "open neighbour: +2": open_neighbour_rule,
    "sandwich bounds on head removal": sandwich,
    "closed-face insensitivity": closed_face_insensitivity,
    "monotonicity under adding faces": monotonicity,
    "open cycle values": open_cycles,
    "three-open reduction: +2": three_open_reduction,
    "M from isolated opens": isolated_open_modularity,
    "M and b recursion table": recursion_table,
}
