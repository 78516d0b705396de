"""Projective dimension of strings, cycles and disjoint unions of strings.

Two independent routes are provided: the closed formula ``mu - b + M`` and
the reduction algorithms, which peel vertices off a string end (or split a
cycle at a closed vertex) until nothing is left. ``pd(h, method="both")``
runs both and refuses to answer if they disagree.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import InternalMismatch, UnsupportedShape
from .hypergraph import (
    CycleShape,
    DisjointStrings,
    StringShape,
    classify_shape,
)
from .invariants import modularity, profile


class Method(str, enum.Enum):
    FORMULA = "formula"
    ALGORITHM = "algorithm"
    BOTH = "both"


@dataclass(frozen=True)
class Step:
    rule: str
    increment: int
    detail: str = ""

    def __str__(self):
        text = f"{self.rule}: +{self.increment}"
        return f"{text}  ({self.detail})" if self.detail else text


@dataclass(frozen=True)
class PdResult:
    value: int
    method: Method
    trace: tuple[Step, ...] = ()

    def to_json(self) -> dict:
        return {
            "pd": self.value,
            "method": self.method.value,
            "trace": [{"rule": s.rule, "increment": s.increment, "detail": s.detail} for s in self.trace],
        }


@dataclass(frozen=True)
class CmVerdict:
    is_cm: bool
    grade: int
    pd: int
    reason: str


# rule names used in traces
CLOSED_NEIGHBOUR = "closed neighbour of endpoint"
OPEN_NEIGHBOUR = "open neighbour of endpoint"
LAST_VERTEX = "single vertex"
ADJACENT_CLOSED = "cut face between adjacent closed vertices"
THREE_OPENS = "drop three consecutive opens"
SPLIT = "split at closed vertex"
OPEN_CYCLE = "open cycle"
SMALL_CYCLE = "small cycle"
FORMULA = "mu - b + M"


def _shape(h) -> StringShape | CycleShape | DisjointStrings:
    shape = h if isinstance(h, (StringShape, CycleShape, DisjointStrings)) else classify_shape(h)
    if not isinstance(shape, (StringShape, CycleShape, DisjointStrings)):
        raise UnsupportedShape(f"pd engine handles strings, cycles and unions of strings: {shape.reason}")
    return shape


# -- closed formula ---------------------------------------------------------


def pd_formula(h) -> PdResult:
    shape = _shape(h)
    if isinstance(shape, DisjointStrings):
        parts = [pd_formula(c) for c in shape.components]
        trace = tuple(Step(FORMULA, r.value, f"component {i + 1}") for i, r in enumerate(parts))
        return PdResult(sum(r.value for r in parts), Method.FORMULA, trace)
    p = profile(shape)
    M = modularity(p)
    value = p.mu - p.b + M
    return PdResult(value, Method.FORMULA, (Step(FORMULA, value, f"mu={p.mu}, b={p.b}, M={M}"),))


# -- string algorithm -------------------------------------------------------


def string_steps(closed: tuple[bool, ...]) -> list[Step]:
    """Reduction steps for the string with these closed flags.

    Dropping the first vertex closes the new endpoint, since the pair face
    joining them shrinks to a singleton.
    """
    steps = []
    while closed:
        mu = len(closed)
        if mu == 1:
            steps.append(Step(LAST_VERTEX, 1))
            closed = ()
        elif closed[1]:
            steps.append(Step(CLOSED_NEIGHBOUR, 1, f"mu {mu} -> {mu - 1}"))
            closed = (True,) + closed[2:]
        else:
            steps.append(Step(OPEN_NEIGHBOUR, 2, f"mu {mu} -> {mu - 3}"))
            closed = (True,) + closed[4:] if mu > 3 else ()
    return steps


def pd_string_algorithm(h) -> PdResult:
    shape = _shape(h)
    if isinstance(shape, CycleShape):
        raise UnsupportedShape("string algorithm got a cycle")
    comps = shape.components if isinstance(shape, DisjointStrings) else (shape,)
    steps = [s for c in comps for s in string_steps(c.closed)]
    return PdResult(sum(s.increment for s in steps), Method.ALGORITHM, tuple(steps))


# -- cycle algorithm --------------------------------------------------------


def split_strings(closed: tuple[bool, ...], v1: int) -> tuple[tuple[bool, ...], tuple[bool, ...]]:
    """Strings left after deleting a closed vertex, and after deleting it with its 2-neighbourhood.

    ``v1`` is a 0-based position on the cycle. The first string runs from
    one neighbour of ``v1`` round to the other; the second keeps what is
    left once the four nearest vertices are also gone. Vertices next to a
    deleted vertex become closed endpoints.
    """
    mu = len(closed)
    if not closed[v1] or mu < 5:
        raise UnsupportedShape("split needs a closed vertex on a cycle with at least 5 vertices")
    ring = [closed[(v1 + k) % mu] for k in range(mu)]
    s1 = ring[1:]
    s1[0] = s1[-1] = True
    s5 = ring[3:mu - 2]
    if s5:
        s5[0] = s5[-1] = True
    return tuple(s1), tuple(s5)


def cycle_split(h, v1: int) -> tuple[int, int]:
    """(pd(S1), pd(S5)) when splitting the cycle at the closed vertex in position ``v1`` (1-based)."""
    shape = _shape(h)
    if not isinstance(shape, CycleShape):
        raise UnsupportedShape("cycle_split needs a cycle")
    s1, s5 = split_strings(shape.closed, v1 - 1)
    return (sum(s.increment for s in string_steps(s1)),
            sum(s.increment for s in string_steps(s5)))


def _drop_three_opens(closed: tuple[bool, ...]) -> tuple[bool, ...] | None:
    mu = len(closed)
    for i in range(mu):
        if not (closed[i] or closed[(i + 1) % mu] or closed[(i + 2) % mu]):
            drop = {i, (i + 1) % mu, (i + 2) % mu}
            return tuple(c for k, c in enumerate(closed) if k not in drop)
    return None


def cycle_steps(closed: tuple[bool, ...], shortcut: bool = True, pivot: int | None = None) -> list[Step]:
    steps: list[Step] = []
    while True:
        mu = len(closed)
        if mu <= 4:
            value = mu if all(closed) else mu - 1
            steps.append(Step(SMALL_CYCLE, value, f"mu={mu}, {'saturated' if all(closed) else 'not saturated'}"))
            return steps
        if not any(closed):
            value = mu - 1 - (mu - 2) // 3
            steps.append(Step(OPEN_CYCLE, value, f"mu={mu}"))
            return steps
        if shortcut and mu >= 6:
            smaller = _drop_three_opens(closed)
            if smaller is not None:
                steps.append(Step(THREE_OPENS, 2, f"mu {mu} -> {mu - 3}"))
                closed = smaller
                continue
        for i in range(mu):
            if closed[i] and closed[(i + 1) % mu]:
                # the cycle minus face {i, i+1} is a string from i+1 round to i
                string = closed[i + 1:] + closed[:i + 1]
                steps.append(Step(ADJACENT_CLOSED, 0, f"positions {i + 1},{(i + 1) % mu + 1}"))
                steps.extend(string_steps(string))
                return steps
        v1 = pivot if pivot is not None else closed.index(True)
        s1, s5 = split_strings(closed, v1)
        a = sum(s.increment for s in string_steps(s1))
        b = sum(s.increment for s in string_steps(s5))
        value = max(a, b + 3)
        steps.append(Step(SPLIT, value, f"max(pd(S1)={a}, pd(S5)+3={b + 3}) at position {v1 + 1}"))
        return steps


def pd_cycle_algorithm(h, shortcut: bool = True, pivot: int | None = None) -> PdResult:
    """Cycle reduction; ``shortcut`` enables the three-open pre-pass.

    ``pivot`` (0-based position in the cycle order) picks the closed vertex
    used for the final split; by default the first closed vertex is used.
    Positions refer to the cycle as it reaches the split, so a pivot is only
    meaningful with ``shortcut=False``.
    """
    shape = _shape(h)
    if not isinstance(shape, CycleShape):
        raise UnsupportedShape("cycle algorithm needs a cycle")
    steps = cycle_steps(shape.closed, shortcut=shortcut, pivot=pivot)
    return PdResult(sum(s.increment for s in steps), Method.ALGORITHM, tuple(steps))


def pd_algorithm(h, shortcut: bool = True) -> PdResult:
    shape = _shape(h)
    if isinstance(shape, CycleShape):
        return pd_cycle_algorithm(shape, shortcut=shortcut)
    return pd_string_algorithm(shape)


def pd(h, method: Method | str = Method.BOTH) -> PdResult:
    method = Method(method)
    shape = _shape(h)
    if method is Method.FORMULA:
        return pd_formula(shape)
    if method is Method.ALGORITHM:
        return pd_algorithm(shape)
    f, a = pd_formula(shape), pd_algorithm(shape)
    if f.value != a.value:
        raise InternalMismatch(f"formula gives {f.value}, algorithm gives {a.value} for {h}")
    return PdResult(a.value, Method.BOTH, a.trace)


# -- grade and Cohen-Macaulayness -------------------------------------------


def grade(h) -> int:
    shape = _shape(h)
    if not isinstance(shape, (StringShape, CycleShape)) or shape.mu < 1:
        raise UnsupportedShape("grade is known for strings and cycles only")
    return math.ceil(shape.mu / 2)


def _cm_rule(shape: StringShape | CycleShape) -> tuple[bool, str]:
    mu = shape.mu
    saturated = all(shape.closed)
    if isinstance(shape, StringShape):
        if mu == 1:
            return True, "string on one vertex"
        if mu == 3 and not saturated:
            return True, "unsaturated string on three vertices"
        if saturated:
            return False, "saturated string"
        return False, "string on at least four vertices"
    if mu == 3:
        return (not saturated), ("unsaturated 3-cycle" if not saturated else "saturated 3-cycle")
    if mu == 5:
        adjacent = any(shape.closed[i] and shape.closed[(i + 1) % 5] for i in range(5))
        if adjacent:
            return False, "5-cycle with adjacent closed vertices"
        return True, "5-cycle without adjacent closed vertices"
    return False, f"{mu}-cycle"


def is_cohen_macaulay(h) -> CmVerdict:
    shape = _shape(h)
    if not isinstance(shape, (StringShape, CycleShape)):
        raise UnsupportedShape("Cohen-Macaulay classification covers strings and cycles")
    is_cm, reason = _cm_rule(shape)
    g, p = grade(shape), pd(shape).value
    if is_cm != (g == p):
        raise InternalMismatch(f"classification says {is_cm} but grade={g}, pd={p}")
    return CmVerdict(is_cm, g, p, reason)
