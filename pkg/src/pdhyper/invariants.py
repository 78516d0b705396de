"""Run-based invariants of strings and cycles.

Everything here works off the closed/open flags of a string or cycle in
traversal order. A *run* is a maximal block of consecutive open vertices;
on a string each run is bounded by closed vertices (string endpoints are
always closed), on a cycle the runs are read cyclically.

Cycles with at most one closed vertex use the convention of a single run of
``mu - 1`` opens, which keeps ``mu - b + M`` equal to the known value for
open cycles.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PreconditionViolated, UnsupportedShape
from .hypergraph import (
    CycleShape,
    Hypergraph,
    StringShape,
    classify_shape,
    pattern_hypergraph,
    remove_vertices,
)


@dataclass(frozen=True)
class OpenRun:
    start: int  # first open vertex, original label
    length: int
    left_closed: int | None
    right_closed: int | None
    vertices: tuple[int, ...] = field(repr=False, default=())


@dataclass(frozen=True)
class TwoSpecialConfig:
    run_indices: tuple[int, ...]
    open_vertices: frozenset[int]
    whole_cycle: bool = False


@dataclass(frozen=True)
class StringProfile:
    mu: int
    runs: tuple[OpenRun, ...]
    gaps: tuple[int, ...]  # closed vertices between run i and run i+1 (cyclic on cycles)
    s: int
    b: int
    is_count: int
    shape: StringShape | CycleShape

    @property
    def n(self) -> tuple[int, ...]:
        return tuple(r.length for r in self.runs)

    @property
    def cyclic(self) -> bool:
        return isinstance(self.shape, CycleShape)


def b_value(lengths) -> int:
    return len(lengths) + sum((n - 1) // 3 for n in lengths)


def _shape_of(h) -> StringShape | CycleShape:
    if isinstance(h, (StringShape, CycleShape)):
        return h
    shape = classify_shape(h)
    if not isinstance(shape, (StringShape, CycleShape)):
        raise UnsupportedShape(f"expected a string or a cycle, got {type(shape).__name__}")
    return shape


def _isolated(closed: tuple[bool, ...], cyclic: bool) -> int:
    mu = len(closed)
    count = 0
    for i, c in enumerate(closed):
        if c:
            continue
        if cyclic:
            nbrs = [(i - 1) % mu, (i + 1) % mu]
        else:
            nbrs = [j for j in (i - 1, i + 1) if 0 <= j < mu]
        if nbrs and all(closed[j] for j in nbrs):
            count += 1
    return count


def profile(h: Hypergraph | StringShape | CycleShape) -> StringProfile:
    shape = _shape_of(h)
    closed, order = shape.closed, shape.order
    mu = len(closed)
    cyclic = isinstance(shape, CycleShape)
    is_count = _isolated(closed, cyclic)

    if cyclic and sum(closed) <= 1:
        if any(closed):
            c = closed.index(True)
            verts = tuple(order[(c + k) % mu] for k in range(1, mu))
            run = OpenRun(verts[0], mu - 1, order[c], order[c], verts)
        else:
            run = OpenRun(order[0], mu - 1, None, None, tuple(order))
        return StringProfile(mu, (run,), (), 1, b_value([mu - 1]), is_count, shape)

    # start the scan on a closed vertex so no run straddles the seam
    offset = closed.index(True) if cyclic else 0
    seq = [(order[(offset + k) % mu], closed[(offset + k) % mu]) for k in range(mu)]
    runs: list[OpenRun] = []
    gaps: list[int] = []
    pending = 0  # closed vertices seen since the last run
    lead = None
    cur: list[int] = []
    last_closed = None
    for v, c in seq:
        if c:
            if cur:
                runs.append(OpenRun(cur[0], len(cur), last_closed, v, tuple(cur)))
                cur = []
                pending = 0
            pending += 1
            last_closed = v
        else:
            if not cur:
                if runs:
                    gaps.append(pending)
                elif lead is None:
                    lead = pending
            cur.append(v)
    if cur:  # only possible on a cycle that ends open
        runs.append(OpenRun(cur[0], len(cur), last_closed, seq[0][0], tuple(cur)))
        pending = 0
    if cyclic and runs:
        gaps.append(pending + (lead or 0))
    lengths = [r.length for r in runs]
    return StringProfile(mu, tuple(runs), tuple(gaps), len(runs), b_value(lengths), is_count, shape)


def enumerate_two_special(h) -> list[TwoSpecialConfig]:
    """All 2-special configurations, as intervals of consecutive runs.

    A configuration spans at least two runs, consecutive runs inside it are
    separated by exactly one closed vertex, the end runs have length 1 mod 3
    and the inner runs length 2 mod 3. On a cycle the intervals may wrap;
    when the two bounding closed vertices coincide the configuration is the
    whole cycle, reported once.
    """
    p = h if isinstance(h, StringProfile) else profile(h)
    n, gaps, s = p.n, p.gaps, p.s
    if s < 2:
        return []
    configs: list[TwoSpecialConfig] = []
    seen_whole = False
    if not p.cyclic:
        for i in range(s):
            for j in range(i + 1, s):
                if gaps[j - 1] != 1:
                    break
                idx = tuple(range(i, j + 1))
                if _residues_ok([n[k] for k in idx]):
                    configs.append(_config(p, idx))
        return configs
    for i in range(s):
        for k in range(2, s + 1):
            if gaps[(i + k - 2) % s] != 1:
                break
            idx = tuple((i + t) % s for t in range(k))
            if not _residues_ok([n[t] for t in idx]):
                continue
            whole = k == s and gaps[(i - 1) % s] == 1
            if whole:
                if seen_whole:
                    continue
                seen_whole = True
            configs.append(_config(p, idx, whole))
    return configs


def _residues_ok(lengths) -> bool:
    if lengths[0] % 3 != 1 or lengths[-1] % 3 != 1:
        return False
    return all(x % 3 == 2 for x in lengths[1:-1])


def _config(p: StringProfile, idx, whole=False) -> TwoSpecialConfig:
    verts = frozenset(v for k in idx for v in p.runs[k].vertices)
    return TwoSpecialConfig(idx, verts, whole)


def _max_disjoint_linear(intervals, length) -> int:
    # intervals are (first, last) run positions in 0..length-1
    ends_at: dict[int, list[int]] = {}
    for a, z in intervals:
        ends_at.setdefault(z, []).append(a)
    best = [0] * (length + 1)  # best[t]: using runs 0..t-1 only
    for t in range(1, length + 1):
        best[t] = best[t - 1]
        for a in ends_at.get(t - 1, ()):
            best[t] = max(best[t], best[a] + 1)
    return best[length]


def modularity(h) -> int:
    """Maximum number of 2-special configurations sharing no open vertex."""
    p = h if isinstance(h, StringProfile) else profile(h)
    configs = enumerate_two_special(p)
    if not configs:
        return 0
    s = p.s
    if not p.cyclic:
        return _max_disjoint_linear([(c.run_indices[0], c.run_indices[-1]) for c in configs], s)

    # circular arcs: either no chosen arc covers run 0, or exactly one does
    def unwrapped(c, base):
        a = (c.run_indices[0] - base) % s
        return a, a + len(c.run_indices) - 1

    avoid0 = [unwrapped(c, 1) for c in configs if 0 not in c.run_indices]
    best = _max_disjoint_linear(avoid0, s - 1)
    for c in configs:
        if 0 not in c.run_indices:
            continue
        if len(c.run_indices) == s:
            best = max(best, 1)
            continue
        base = (c.run_indices[-1] + 1) % s
        free = s - len(c.run_indices)
        rest = []
        for d in configs:
            if d.open_vertices & c.open_vertices:
                continue
            a, z = unwrapped(d, base)
            if z < free:
                rest.append((a, z))
        best = max(best, 1 + _max_disjoint_linear(rest, free))
    return best


def _has_inner_adjacent_closed(closed, cyclic) -> bool:
    mu = len(closed)
    if cyclic:
        return any(closed[i] and closed[(i + 1) % mu] for i in range(mu))
    # pairs touching a string endpoint are tolerated
    return any(closed[i] and closed[i + 1] for i in range(1, mu - 2))


def modularity_reduced_case(h) -> int:
    """Modularity via the isolated-open count, valid when runs are short.

    Requires every run to hold at most two opens and no two adjacent closed
    vertices (on a string, adjacent closed pairs touching an endpoint are
    allowed).
    """
    p = h if isinstance(h, StringProfile) else profile(h)
    if any(x > 2 for x in p.n):
        raise PreconditionViolated("a run holds more than two open vertices")
    if _has_inner_adjacent_closed(p.shape.closed, p.cyclic):
        raise PreconditionViolated("two adjacent closed vertices")
    return p.is_count // 2


@dataclass(frozen=True)
class RecursionReport:
    M: int
    M3: int
    b: int
    b3: int
    one_one: bool
    ok: bool

    @property
    def table_row(self) -> str:
        return "isolated open in a 1-1 configuration" if self.one_one else "generic"


def recursion_checks(h) -> RecursionReport:
    """Compare M and b of a string with those of the string minus its first three vertices.

    When vertex 2 is an isolated open lying in a 1-1 configuration both M
    and b must drop (by 1 and 2); otherwise M is unchanged and b drops by 1.
    """
    shape = _shape_of(h)
    if not isinstance(shape, StringShape):
        raise PreconditionViolated("recursion checks apply to strings")
    if shape.mu < 3 or shape.closed[1]:
        raise PreconditionViolated("needs mu >= 3 and vertex 2 open")
    p = profile(shape)
    hg = h if isinstance(h, Hypergraph) else pattern_hypergraph(shape.closed)
    tail = remove_vertices(hg, shape.order[:3])
    if tail.is_empty:
        M3 = b3 = 0
    else:
        p3 = profile(tail)
        M3, b3 = modularity(p3), p3.b
    n = p.n
    one_one = n[0] == 1 and p.s >= 2 and p.gaps[0] == 1 and n[1] % 3 == 1
    M = modularity(p)
    if one_one:
        ok = M3 == M - 1 and b3 == p.b - 2
    else:
        ok = M3 == M and b3 == p.b - 1
    return RecursionReport(M, M3, p.b, b3, one_one, ok)

