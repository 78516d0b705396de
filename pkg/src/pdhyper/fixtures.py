"""Worked examples with known projective dimensions, used for regression.

Each fixture is a pattern (or an ideal in text form) plus the expected pd
and, where useful, the expected invariants or reduction trace.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .hypergraph import Hypergraph, parse_pattern
from .ideal import hypergraph_of_ideal, parse_ideal


@dataclass(frozen=True)
class Fixture:
    name: str
    source: str
    pd: int
    ideal: bool = False
    b: int | None = None
    M: int | None = None
    trace: tuple[int, ...] | None = None  # increments of the reduction trace
    cm: bool | None = None
    split: tuple[int, int] | None = None  # (pd(S1), pd(S5)) at the first closed vertex
    notes: dict = field(default_factory=dict, compare=False)

    def hypergraph(self) -> Hypergraph:
        if self.ideal:
            return hypergraph_of_ideal(parse_ideal(self.source))
        return parse_pattern(self.source)


FIXTURES: tuple[Fixture, ...] = (
    # strings
    Fixture("string with a closed and two open neighbour steps", "ccoococ", 5, trace=(1, 2, 2)),
    Fixture("string with two disjoint configurations", "cococococ", 7, M=2),
    Fixture("string with overlapping configurations", "cocococ", 5, M=1),
    Fixture("string with a long run and a double closed", "coooococcoc", 8, b=4, M=1),
    Fixture("ideal ab,bc,cde,ef,fg", "ab,bc,cde,ef,fg", 4, ideal=True, b=2, M=1),
    Fixture("short alternating string", "cococ", 4, trace=(2, 1, 1)),
    Fixture("long-run string, runs 4 5 1", "coooocooooococ", 10),
    Fixture("long-run string, runs 1 5 2 1", "cocooooocoococ", 10),
    Fixture("exchanged runs, no configuration", "cocooococ", 6, M=0),
    Fixture("exchanged runs, one configuration", "cococoooc", 7, M=1),
    Fixture("run switch, first form", "cocooocccoooooc", 11, trace=(2, 2, 1, 1, 2, 2, 1)),
    Fixture("run switch, second form", "cooooococcooocc", 11),
    Fixture("single vertex", "c", 1, cm=True),
    Fixture("three vertices, middle open", "coc", 2, cm=True),
    Fixture("saturated three vertices", "ccc", 3, cm=False),
    Fixture("ideal ab,bcd,de,efg", "ab,bcd,de,efg", 3, ideal=True, b=1, M=0),
    # cycles
    Fixture("16-cycle with two disjoint configurations", "cycle:cocoooocccocooco", 12, b=6, M=2),
    Fixture("8-cycle split at a closed vertex", "cycle:cocoooco", 6, split=(6, 2)),
    Fixture("8-cycle with two closed vertices", "cycle:cooocooo", 6, split=(5, 3)),
    Fixture("10-cycle with two closed vertices", "cycle:cooocooooo", 7),
    Fixture("7-cycle with two closed vertices", "cycle:cooocoo", 5),
    Fixture("4-cycle with adjacent closed vertices", "cycle:ccoo", 3),
    Fixture("alternating 4-cycle", "cycle:coco", 3, b=2, M=1),
    Fixture("14-cycle with one wrapping configuration", "cycle:cocoococoooooc", 10, M=1),
    Fixture("6-cycle with a run of four", "cycle:cooooc", 4),
    Fixture("open triangle", "cycle:ooo", 2),
    Fixture("5-cycle, closed vertices apart", "cycle:cocoo", 3, cm=True),
    Fixture("5-cycle, closed vertices adjacent", "cycle:ccooo", 4, cm=False),
)


def by_name(name: str) -> Fixture:
    for fx in FIXTURES:
        if fx.name == name:
            return fx
    raise KeyError(name)
