"""Hypergraphs on the vertex set 1..mu, their shapes, and vertex/face surgery.

A face is stored as a sorted tuple of vertices and the face set as a
frozenset, so two hypergraphs with the same faces compare and hash equal.
Strings and cycles are written compactly as patterns over ``c`` (closed
vertex) and ``o`` (open vertex), e.g. ``"ccoococ"`` or ``"cycle:coco"``.
"""

from __future__ import annotations

import json
import re
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import (
    BadPattern,
    CoverageBroken,
    InvalidHypergraph,
    NotSeparated,
    UnsupportedShape,
)

Face = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    mu: int
    faces: frozenset[Face]

    def __post_init__(self):
        if self.mu < 0:
            raise InvalidHypergraph(f"negative vertex count {self.mu}")
        covered = set()
        for face in self.faces:
            if not face:
                raise InvalidHypergraph("empty face")
            if tuple(sorted(set(face))) != face:
                raise InvalidHypergraph(f"face {face!r} is not a sorted tuple of distinct vertices")
            if face[0] < 1 or face[-1] > self.mu:
                raise InvalidHypergraph(f"face {face!r} leaves 1..{self.mu}")
            covered.update(face)
        if len(covered) != self.mu:
            missing = sorted(set(range(1, self.mu + 1)) - covered)
            raise InvalidHypergraph(f"vertices {missing} lie in no face")

    @classmethod
    def from_faces(cls, mu: int, faces: Iterable[Iterable[int]]) -> Hypergraph:
        return cls(mu, frozenset(tuple(sorted(set(f))) for f in faces))

    @classmethod
    def empty(cls) -> Hypergraph:
        return cls(0, frozenset())

    @property
    def is_empty(self) -> bool:
        return self.mu == 0

    @property
    def vertices(self) -> range:
        return range(1, self.mu + 1)

    def sorted_faces(self) -> list[Face]:
        return sorted(self.faces, key=lambda f: (len(f), f))

    def closed_vertices(self) -> list[int]:
        return sorted(f[0] for f in self.faces if len(f) == 1)

    def is_saturated(self) -> bool:
        return len(self.closed_vertices()) == self.mu

    def with_face(self, face: Iterable[int]) -> Hypergraph:
        return Hypergraph(self.mu, self.faces | {tuple(sorted(set(face)))})

    def to_json(self) -> dict:
        return {"mu": self.mu, "faces": [list(f) for f in self.sorted_faces()]}

    def __str__(self):
        body = ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.sorted_faces())
        return f"H(mu={self.mu}; {body})"


def hypergraph_from_json(data: dict | str) -> Hypergraph:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        return Hypergraph.from_faces(int(data["mu"]), data["faces"])
    except (KeyError, TypeError) as exc:
        raise InvalidHypergraph(f"malformed hypergraph JSON: {exc}") from None


def memberships(h: Hypergraph) -> dict[int, frozenset[Face]]:
    """Map each vertex to the set of faces containing it."""
    out: dict[int, set] = {v: set() for v in h.vertices}
    for face in h.faces:
        for v in face:
            out[v].add(face)
    return {v: frozenset(s) for v, s in out.items()}


def is_separated(h: Hypergraph) -> bool:
    # every pair needs a face holding one but not the other, in both directions,
    # i.e. the membership sets are pairwise incomparable
    mem = memberships(h)
    verts = list(h.vertices)
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if mem[u] <= mem[v] or mem[v] <= mem[u]:
                return False
    return True


def is_closed(h: Hypergraph, v: int) -> bool:
    return (v,) in h.faces


# -- shapes -----------------------------------------------------------------


@dataclass(frozen=True)
class StringShape:
    """A string, listed from one endpoint to the other."""

    order: tuple[int, ...]
    closed: tuple[bool, ...]

    @property
    def mu(self) -> int:
        return len(self.order)

    @property
    def pattern(self) -> str:
        return "".join("c" if c else "o" for c in self.closed)


@dataclass(frozen=True)
class CycleShape:
    order: tuple[int, ...]
    closed: tuple[bool, ...]

    @property
    def mu(self) -> int:
        return len(self.order)

    @property
    def pattern(self) -> str:
        return "".join("c" if c else "o" for c in self.closed)


@dataclass(frozen=True)
class DisjointStrings:
    components: tuple[StringShape, ...]

    @property
    def mu(self) -> int:
        return sum(c.mu for c in self.components)


@dataclass(frozen=True)
class OtherShape:
    reason: str


Shape = StringShape | CycleShape | DisjointStrings | OtherShape


def classify_shape(h: Hypergraph) -> Shape:
    """Recognise strings, cycles and disjoint unions of strings.

    The empty hypergraph is reported as a union of zero strings. Orderings
    start at the smallest admissible vertex, so a hypergraph built from a
    pattern is recovered with the identity ordering.
    """
    if not is_separated(h):
        raise NotSeparated(f"{h} is not separated")
    if h.is_empty:
        return DisjointStrings(())
    adj: dict[int, list[int]] = {v: [] for v in h.vertices}
    for face in h.faces:
        if len(face) > 2:
            return OtherShape(f"face {face} has more than two vertices")
        if len(face) == 2:
            u, v = face
            adj[u].append(v)
            adj[v].append(u)
    if any(len(nb) > 2 for nb in adj.values()):
        return OtherShape("a vertex lies in more than two pair faces")
    closed = {v for v in h.vertices if (v,) in h.faces}

    seen: set[int] = set()
    strings: list[StringShape] = []
    cycles: list[CycleShape] = []
    for root in h.vertices:
        if root in seen:
            continue
        comp = _component(adj, root)
        seen.update(comp)
        ends = sorted(v for v in comp if len(adj[v]) < 2)
        if ends:
            order = _walk(adj, ends[0], len(comp))
            strings.append(StringShape(order, tuple(v in closed for v in order)))
        else:
            start = min(comp)
            order = _walk(adj, start, len(comp), toward=min(adj[start]))
            cycles.append(CycleShape(order, tuple(v in closed for v in order)))

    if cycles:
        if len(cycles) == 1 and not strings:
            return cycles[0]
        return OtherShape("disjoint union involving a cycle")
    if len(strings) == 1:
        return strings[0]
    return DisjointStrings(tuple(strings))


def _component(adj, root):
    comp, stack = {root}, [root]
    while stack:
        for w in adj[stack.pop()]:
            if w not in comp:
                comp.add(w)
                stack.append(w)
    return comp


def _walk(adj, start, length, toward=None):
    order = [start]
    prev, cur = None, start
    if toward is not None and length > 1:
        prev, cur = start, toward
        order.append(cur)
    while len(order) < length:
        nxt = [w for w in adj[cur] if w != prev]
        prev, cur = cur, nxt[0]
        order.append(cur)
    return tuple(order)


# -- surgery ----------------------------------------------------------------


def remove_vertices(h: Hypergraph, vs: Iterable[int]) -> Hypergraph:
    """Delete ``vs`` from every face, drop empty faces and renumber.

    This is the hypergraph of the ideal generated by the remaining
    generators. Removing every vertex yields the empty hypergraph.
    """
    drop = set(vs)
    if not drop <= set(h.vertices):
        raise InvalidHypergraph(f"vertices {sorted(drop - set(h.vertices))} not in hypergraph")
    keep = [v for v in h.vertices if v not in drop]
    if not keep:
        return Hypergraph.empty()
    relabel = {v: i for i, v in enumerate(keep, start=1)}
    faces = set()
    for face in h.faces:
        rest = tuple(relabel[v] for v in face if v not in drop)
        if rest:
            faces.add(rest)
    return Hypergraph(len(keep), frozenset(faces))


def remove_face(h: Hypergraph, face: Iterable[int]) -> Hypergraph:
    f = tuple(sorted(set(face)))
    if f not in h.faces:
        raise InvalidHypergraph(f"{f} is not a face of {h}")
    rest = h.faces - {f}
    still = set().union(*rest) if rest else set()
    lost = [v for v in f if v not in still]
    if lost:
        raise CoverageBroken(f"removing {f} leaves vertices {lost} uncovered")
    return Hypergraph(h.mu, rest)


# -- pattern text -----------------------------------------------------------

_PATTERN = re.compile(r"^(cycle:)?([co]+)$", re.IGNORECASE)


def pattern_hypergraph(closed: Iterable[bool], cycle: bool = False) -> Hypergraph:
    """Build the string (or cycle) with the given closed/open flags."""
    closed = list(closed)
    mu = len(closed)
    faces = {(i + 1,) for i, c in enumerate(closed) if c}
    faces.update((i, i + 1) for i in range(1, mu))
    if cycle:
        faces.add((1, mu))
    return Hypergraph(mu, frozenset(faces))


def parse_pattern(text: str) -> Hypergraph:
    m = _PATTERN.match(text.strip())
    if not m:
        raise BadPattern(f"not a pattern over c/o: {text!r}")
    cycle = m.group(1) is not None
    body = m.group(2).lower()
    if cycle:
        if len(body) < 3:
            raise BadPattern("a cycle needs at least 3 vertices")
    elif body[0] != "c" or body[-1] != "c":
        raise BadPattern("both endpoints of a string must be closed")
    return pattern_hypergraph((ch == "c" for ch in body), cycle=cycle)


def render_pattern(h: Hypergraph) -> str:
    shape = classify_shape(h)
    if isinstance(shape, StringShape):
        return shape.pattern
    if isinstance(shape, CycleShape):
        return "cycle:" + shape.pattern
    raise UnsupportedShape(f"{h} is neither a string nor a cycle")


def load_hypergraph(text: str) -> Hypergraph:
    """Accept either a c/o pattern or the JSON form."""
    text = text.strip()
    if text.startswith("{"):
        try:
            return hypergraph_from_json(text)
        except json.JSONDecodeError as exc:
            raise InvalidHypergraph(f"bad JSON: {exc}") from None
    return parse_pattern(text)
