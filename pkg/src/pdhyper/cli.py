"""Command-line front end.

Exit codes: 0 success, 1 a check or fixture failed, 2 the input could not be
parsed, 3 the input parsed but has an unsupported shape or size.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import _kernel
from .engine import (
    Method,
    cycle_split,
    is_cohen_macaulay,
    pd,
    pd_cycle_algorithm,
)
from .errors import (
    BadIdeal,
    BadPattern,
    InternalMismatch,
    InvalidHypergraph,
    NonMinimalGenerators,
    NotSeparated,
    PreconditionViolated,
    TooLarge,
    UnsupportedShape,
)
from .fixtures import FIXTURES
from .hypergraph import (
    CycleShape,
    Hypergraph,
    StringShape,
    classify_shape,
    hypergraph_from_json,
    parse_pattern,
    remove_vertices,
    render_pattern,
)
from .ideal import (
    MonomialIdeal,
    canonical_ideal,
    colon_by_generator,
    hypergraph_of_ideal,
    parse_ideal,
    random_ideal,
    restrict_to,
)
from .invariants import enumerate_two_special, modularity, profile
from .oracle import DEFAULT_CAP, betti_mod_p, betti_numbers, grade_oracle

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_SHAPE = 0, 1, 2, 3

PARSE_ERRORS = (BadPattern, BadIdeal, InvalidHypergraph, NotSeparated, NonMinimalGenerators,
                json.JSONDecodeError, OSError)
SHAPE_ERRORS = (UnsupportedShape, TooLarge, PreconditionViolated)


# -- input ------------------------------------------------------------------


def _from_text(text: str) -> tuple[Hypergraph, MonomialIdeal | None]:
    text = text.strip()
    if text.startswith("{"):
        data = json.loads(text)
        if isinstance(data, dict) and "gens" in data:
            ideal = parse_ideal(text)
            return hypergraph_of_ideal(ideal), ideal
        return hypergraph_from_json(data), None
    try:
        return parse_pattern(text), None
    except BadPattern:
        if any(ch not in "co" for ch in text.lower().removeprefix("cycle:")):
            ideal = parse_ideal(text)
            return hypergraph_of_ideal(ideal), ideal
        raise


def read_input(args) -> tuple[Hypergraph, MonomialIdeal | None]:
    if getattr(args, "ideal", None):
        ideal = parse_ideal(args.ideal)
        return hypergraph_of_ideal(ideal), ideal
    if getattr(args, "input_json", None):
        return _from_text(Path(args.input_json).read_text())
    src = getattr(args, "input", None)
    if src is None:
        raise BadPattern("no input given (pattern, JSON, ideal text, or - for stdin)")
    if src == "-":
        src = sys.stdin.read()
    return _from_text(src)


def _describe(h: Hypergraph) -> str:
    try:
        return render_pattern(h)
    except (UnsupportedShape, NotSeparated):
        return json.dumps(h.to_json(), sort_keys=True)


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))


def _jobs(args) -> int:
    return max(1, args.jobs)


def _pmap(fn, items, jobs):
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (jobs * 8))))


# -- pd / invariants / cm / oracle -------------------------------------------


def cmd_pd(args) -> int:
    h, _ = read_input(args)
    res = pd(h, args.method)
    lines = [f"pd = {res.value}"]
    if args.trace:
        lines += [f"  {step}" for step in res.trace]
    payload = {"command": "pd", "input": _describe(h), **res.to_json()}
    if not args.trace:
        payload.pop("trace")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_invariants(args) -> int:
    h, _ = read_input(args)
    p = profile(h)
    M = modularity(p)
    configs = enumerate_two_special(p)
    payload = {
        "command": "invariants",
        "input": _describe(h),
        "shape": "cycle" if p.cyclic else "string",
        "mu": p.mu,
        "runs": list(p.n),
        "gaps": list(p.gaps),
        "s": p.s,
        "b": p.b,
        "isolated_opens": p.is_count,
        "M": M,
        "configurations": [
            {"runs": [r + 1 for r in c.run_indices], "open_vertices": sorted(c.open_vertices)}
            for c in configs
        ],
        "pd_formula": p.mu - p.b + M,
    }
    lines = [
        f"shape     {payload['shape']}",
        f"mu        {p.mu}",
        f"runs      {' '.join(map(str, p.n)) or '-'}",
        f"s         {p.s}",
        f"b         {p.b}",
        f"Is        {p.is_count}",
        f"M         {M}",
        f"configs   {len(configs)}",
        f"mu-b+M    {payload['pd_formula']}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_cm(args) -> int:
    h, _ = read_input(args)
    v = is_cohen_macaulay(h)
    payload = {"command": "cm", "input": _describe(h), "is_cm": v.is_cm, "grade": v.grade,
               "pd": v.pd, "reason": v.reason}
    lines = [
        f"Cohen-Macaulay: {'yes' if v.is_cm else 'no'}",
        f"grade = {v.grade}, pd = {v.pd}",
        f"branch: {v.reason}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_oracle(args) -> int:
    h, ideal = read_input(args)
    if ideal is None:
        ideal = canonical_ideal(h)
    table = betti_numbers(ideal, method=args.oracle_method, cap=args.cap)
    payload = {
        "command": "oracle",
        "input": _describe(h),
        "ideal": ideal.render(),
        "betti": list(table.beta),
        "pd": table.pd,
        "grade": grade_oracle(ideal) if ideal.ngens else 0,
    }
    lines = [f"betti = {table}", f"pd    = {table.pd}", f"grade = {payload['grade']}"]
    status = EXIT_OK
    if args.char:
        mod = betti_mod_p(ideal, args.char, method=args.oracle_method)
        same = mod == table
        payload["char"] = args.char
        payload["betti_mod_p"] = list(mod.beta)
        payload["char_agrees"] = same
        lines.append(f"betti over GF({args.char}) = {mod}  ({'agrees' if same else 'DIFFERS'})")
        status = EXIT_OK if same else EXIT_FAIL
    _emit(args, payload, lines)
    return status


# -- verify -----------------------------------------------------------------


def string_patterns(mu: int) -> list[str]:
    if mu == 1:
        return ["c"]
    return ["c" + "".join(mid) + "c" for mid in itertools.product("co", repeat=mu - 2)]


def cycle_patterns(mu: int) -> list[str]:
    return ["cycle:" + "".join(body) for body in itertools.product("co", repeat=mu)]


def _verify_one(job: tuple[str, bool]) -> str | None:
    pattern, with_oracle = job
    h = parse_pattern(pattern)
    try:
        value = pd(h, Method.BOTH).value
    except InternalMismatch as exc:
        return str(exc)
    if isinstance(classify_shape(h), CycleShape):
        plain = pd_cycle_algorithm(h, shortcut=False).value
        if plain != value:
            return f"cycle algorithm without shortcut gives {plain}, with shortcut {value}"
    if with_oracle:
        got = betti_numbers(canonical_ideal(h)).pd
        if got != value:
            return f"oracle gives {got}, formula gives {value}"
    return None


def cmd_verify(args) -> int:
    report = {}
    first = None
    for kind, gen, lo in (("strings", string_patterns, 1), ("cycles", cycle_patterns, 3)):
        if args.kind not in (kind, "both"):
            continue
        jobs = [(pat, mu <= args.oracle_cap)
                for mu in range(lo, args.mu_cap + 1) for pat in gen(mu)]
        results = _pmap(_verify_one, jobs, _jobs(args))
        bad = [(j[0], r) for j, r in zip(jobs, results) if r is not None]
        report[kind] = {
            "checked": len(jobs),
            "oracle_checked": sum(1 for j in jobs if j[1]),
            "mismatches": len(bad),
        }
        if bad and first is None:
            first = {"input": bad[0][0], "problem": bad[0][1]}
    payload = {"command": "verify", "mu_cap": args.mu_cap, "oracle_cap": args.oracle_cap,
               "kernel": _kernel.BACKEND, **report, "first_counterexample": first}
    lines = [f"{k}: {v['checked']} checked, {v['oracle_checked']} against the oracle, "
             f"{v['mismatches']} mismatches" for k, v in report.items()]
    if first:
        lines.append(f"first counterexample: {first['input']}: {first['problem']}")
    _emit(args, payload, lines)
    return EXIT_FAIL if first else EXIT_OK


# -- examples ---------------------------------------------------------------


def _check_fixture(fx) -> dict:
    h = fx.hypergraph()
    problems = []
    res = pd(h, Method.BOTH)
    if res.value != fx.pd:
        problems.append(f"pd {res.value} != {fx.pd}")
    if oracle_ok := (h.mu <= 11):
        got = betti_numbers(canonical_ideal(h)).pd
        if got != fx.pd:
            problems.append(f"oracle pd {got} != {fx.pd}")
    if fx.b is not None or fx.M is not None:
        p = profile(h)
        if fx.b is not None and p.b != fx.b:
            problems.append(f"b {p.b} != {fx.b}")
        if fx.M is not None and modularity(p) != fx.M:
            problems.append(f"M {modularity(p)} != {fx.M}")
    if fx.trace is not None:
        got = tuple(s.increment for s in res.trace)
        if got != fx.trace:
            problems.append(f"trace {got} != {fx.trace}")
    if fx.cm is not None and is_cohen_macaulay(h).is_cm != fx.cm:
        problems.append("Cohen-Macaulay verdict differs")
    if fx.split is not None:
        shape = classify_shape(h)
        got = cycle_split(h, shape.closed.index(True) + 1)
        if got != fx.split:
            problems.append(f"split {got} != {fx.split}")
    return {"name": fx.name, "input": _describe(h), "expected": fx.pd, "computed": res.value,
            "oracle_checked": oracle_ok, "ok": not problems, "problems": problems}


def cmd_examples(args) -> int:
    rows = [_check_fixture(fx) for fx in FIXTURES]
    failed = sum(not r["ok"] for r in rows)
    width = max(len(r["name"]) for r in rows)
    lines = [f"{'ok  ' if r['ok'] else 'FAIL'} {r['name']:<{width}}  expected {r['expected']:>2}  "
             f"computed {r['computed']:>2}" + (f"  ({'; '.join(r['problems'])})" if r["problems"] else "")
             for r in rows]
    lines.append(f"{len(rows) - failed}/{len(rows)} fixtures pass")
    _emit(args, {"command": "examples", "fixtures": rows, "failed": failed}, lines)
    return EXIT_FAIL if failed else EXIT_OK


# -- fuzz -------------------------------------------------------------------


def fuzz_problem(h: Hypergraph, oracle_cap: int, seeds: tuple[int, int]) -> str | None:
    """First violated property for ``h``, or None."""
    shape = classify_shape(h)
    try:
        value = pd(h, Method.BOTH).value
    except InternalMismatch as exc:
        return str(exc)
    if isinstance(shape, CycleShape):
        if pd_cycle_algorithm(h, shortcut=False).value != value:
            return "three-open shortcut changes the cycle result"
        for v, c in enumerate(shape.closed):
            if c and pd_cycle_algorithm(h, shortcut=False, pivot=v).value != value:
                return f"split at position {v + 1} changes the result"
    if h.mu > oracle_cap or h.mu == 0:
        return None
    ideal = canonical_ideal(h)
    table = betti_numbers(ideal)
    if table.pd != value:
        return f"oracle pd {table.pd} != {value}"
    if betti_numbers(ideal, method="strand") != table:
        return "strand kernel and minimization disagree"
    for s in seeds:
        if betti_numbers(random_ideal(h, s)) != table:
            return f"random ideal with seed {s} has a different Betti table"
    if isinstance(shape, StringShape) and h.mu >= 2:
        # peel the first endpoint, which is closed
        k = shape.order[0]
        rest = restrict_to(ideal, [j for j in h.vertices if j != k])
        colon = colon_by_generator(ideal, k)
        expect = max(betti_numbers(rest).pd, betti_numbers(colon).pd + 1)
        if expect != table.pd:
            return f"max rule gives {expect}, oracle gives {table.pd}"
    return None


def _shrink(h: Hypergraph, oracle_cap: int, seeds) -> Hypergraph:
    improved = True
    while improved and h.mu > 1:
        improved = False
        for v in h.vertices:
            smaller = remove_vertices(h, [v])
            try:
                bad = fuzz_problem(smaller, oracle_cap, seeds)
            except SHAPE_ERRORS + (NotSeparated,):
                continue
            if bad:
                h, improved = smaller, True
                break
    return h


def _fuzz_job(job):
    pattern, oracle_cap, seeds = job
    h = parse_pattern(pattern)
    problem = fuzz_problem(h, oracle_cap, seeds)
    if problem is None:
        return None
    small = _shrink(h, oracle_cap, seeds)
    return {"input": pattern, "problem": problem, "reproduction": _describe(small),
            "reproduction_problem": fuzz_problem(small, oracle_cap, seeds)}


def _random_pattern(rng: random.Random, mu_cap: int) -> str:
    if mu_cap >= 3 and rng.random() < 0.5:
        mu = rng.randint(3, mu_cap)
        return "cycle:" + "".join(rng.choice("co") for _ in range(mu))
    mu = rng.randint(1, mu_cap)
    if mu == 1:
        return "c"
    return "c" + "".join(rng.choice("co") for _ in range(mu - 2)) + "c"


def _pattern_mu(pattern: str) -> int:
    return len(pattern.removeprefix("cycle:"))


def cmd_fuzz(args) -> int:
    rng = random.Random(args.seed)
    jobs = [(_random_pattern(rng, args.mu_cap), args.oracle_cap,
             (rng.randrange(1 << 30), rng.randrange(1 << 30))) for _ in range(args.count)]
    results = _pmap(_fuzz_job, jobs, _jobs(args))
    failures = [r for r in results if r is not None]
    payload = {"command": "fuzz", "seed": args.seed, "count": args.count, "mu_cap": args.mu_cap,
               "oracle_cap": args.oracle_cap,
               "oracle_checked": sum(1 for j in jobs if _pattern_mu(j[0]) <= args.oracle_cap),
               "failures": failures}
    lines = [f"{args.count} instances (seed {args.seed}), {len(failures)} failures"]
    if failures:
        f = failures[0]
        lines += [f"first failure: {f['input']}: {f['problem']}",
                  f"minimised reproduction: {f['reproduction']}: {f['reproduction_problem']}"]
    _emit(args, payload, lines)
    return EXIT_FAIL if failures else EXIT_OK


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pdhyper",
        description="Projective dimension of string and cycle hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--jobs", type=int, default=int(os.environ.get("PDHYPER_JOBS", "1")),
                        help="worker processes (default: $PDHYPER_JOBS or 1)")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("input", nargs="?",
                        help="pattern such as ccoococ or cycle:coco, hypergraph/ideal JSON, "
                             "ideal text such as ab,bc, or - for stdin")
    source.add_argument("--ideal", metavar="TEXT", help="ideal as comma-separated square-free words")
    source.add_argument("--input-json", metavar="FILE", help="read a hypergraph or ideal JSON file")

    p = sub.add_parser("pd", parents=[common, source], help="projective dimension")
    p.add_argument("--method", choices=[m.value for m in Method], default="both")
    p.add_argument("--trace", action="store_true", help="print each reduction step")
    p.set_defaults(func=cmd_pd)

    p = sub.add_parser("invariants", parents=[common, source], help="runs, b, Is, M and configurations")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("cm", parents=[common, source], help="Cohen-Macaulay verdict")
    p.set_defaults(func=cmd_cm)

    p = sub.add_parser("oracle", parents=[common, source], help="Betti numbers from the Taylor complex")
    p.add_argument("--char", type=int, default=0, metavar="P", help="also compute over GF(P)")
    p.add_argument("--oracle-method", choices=["minimize", "strand"], default="minimize")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest number of generators")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", parents=[common], help="exhaustive formula/algorithm/oracle sweep")
    p.add_argument("--mu-cap", type=int, default=10)
    p.add_argument("--oracle-cap", type=int, default=7)
    p.add_argument("--kind", choices=["strings", "cycles", "both"], default="both")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("examples", parents=[common], help="check the worked examples")
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("fuzz", parents=[common], help="random property checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--mu-cap", type=int, default=12)
    p.add_argument("--oracle-cap", type=int, default=8)
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for cap in ("mu_cap", "oracle_cap", "count", "cap"):
        if getattr(args, cap, 1) < 1:
            parser.error(f"--{cap.replace('_', '-')} must be at least 1")
    try:
        return args.func(args)
    except PARSE_ERRORS as exc:
        print(f"pdhyper: cannot parse input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SHAPE_ERRORS as exc:
        print(f"pdhyper: unsupported input: {exc}", file=sys.stderr)
        return EXIT_SHAPE
    except InternalMismatch as exc:
        print(f"pdhyper: internal mismatch: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
