import itertools
import random

import pytest

from pdhyper.hypergraph import Hypergraph, is_separated


def string_patterns(lo, hi):
    for mu in range(lo, hi + 1):
        if mu == 1:
            yield "c"
            continue
        for mid in itertools.product("co", repeat=mu - 2):
            yield "c" + "".join(mid) + "c"


def cycle_patterns(lo, hi):
    for mu in range(max(lo, 3), hi + 1):
        for body in itertools.product("co", repeat=mu):
            yield "cycle:" + "".join(body)


def random_separated(rng: random.Random, mu: int, extra: int = 3) -> Hypergraph:
    """A random separated hypergraph: closed singletons plus a few random faces."""
    while True:
        faces = {(v,) for v in range(1, mu + 1) if rng.random() < 0.6}
        for _ in range(rng.randint(1, mu + extra)):
            size = rng.randint(2, min(mu, 3)) if mu > 1 else 1
            faces.add(tuple(sorted(rng.sample(range(1, mu + 1), size))))
        covered = set().union(*faces) if faces else set()
        if len(covered) != mu:
            continue
        h = Hypergraph(mu, frozenset(faces))
        if is_separated(h):
            return h


@pytest.fixture
def rng():
    return random.Random(20241015)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
