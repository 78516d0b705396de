"""Square-free monomial ideals and their hypergraphs.

A monomial is a frozenset of variable ids (small non-negative ints), so gcd
and division are set intersection and difference. Generator ``k`` (1-based)
becomes vertex ``k``; each variable contributes the face of generators it
divides.
"""

from __future__ import annotations

import json
import random
import re
import string
from dataclasses import dataclass

from .errors import BadIdeal, NonMinimalGenerators, NotSeparated, SingleGenerator
from .hypergraph import Hypergraph, is_separated

Monomial = frozenset[int]


def var_name(v: int) -> str:
    return string.ascii_lowercase[v] if v < 26 else f"x{v}"


def var_id(name: str) -> int:
    if len(name) == 1 and name in string.ascii_lowercase:
        return ord(name) - ord("a")
    m = re.fullmatch(r"x(\d+)", name)
    if not m:
        raise BadIdeal(f"unknown variable name {name!r}")
    return int(m.group(1))


@dataclass(frozen=True)
class MonomialIdeal:
    gens: tuple[Monomial, ...]
    alphabet: frozenset[int]
    minimal: bool = False

    def __post_init__(self):
        for g in self.gens:
            if not g:
                raise BadIdeal("the unit monomial is not allowed as a generator")
            if not g <= self.alphabet:
                raise BadIdeal(f"generator {sorted(g)} uses variables outside the alphabet")

    @classmethod
    def of(cls, gens, alphabet=None) -> MonomialIdeal:
        gens = tuple(frozenset(g) for g in gens)
        alpha = frozenset(alphabet) if alphabet is not None else frozenset().union(*gens)
        return cls(gens, alpha, _is_minimal(gens))

    @property
    def ngens(self) -> int:
        return len(self.gens)

    def render(self) -> str:
        return ",".join(_render_monomial(g) for g in self.gens)

    def to_json(self) -> dict:
        return {"gens": [[var_name(v) for v in sorted(g)] for g in self.gens]}

    def __str__(self):
        return f"({self.render()})"


def _render_monomial(g: Monomial) -> str:
    names = [var_name(v) for v in sorted(g)]
    if all(len(n) == 1 for n in names):
        return "".join(names)
    return "*".join(names)


def _is_minimal(gens) -> bool:
    return not any(i != j and a <= b for i, a in enumerate(gens) for j, b in enumerate(gens))


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse ``"ab,bc,cde"`` (or ``"x1*x2,x2*x3"``) or the JSON ``{"gens": [...]}`` form."""
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
            words = data["gens"]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise BadIdeal(f"malformed ideal JSON: {exc}") from None
        if not isinstance(words, list) or not all(isinstance(w, list) for w in words):
            raise BadIdeal('ideal JSON must look like {"gens": [["a", "b"], ...]}')
        if any(len(set(w)) != len(w) for w in words):
            raise BadIdeal("a generator repeats a variable, so it is not square-free")
        gens = [frozenset(var_id(str(n)) for n in w) for w in words]
    else:
        if not text:
            return MonomialIdeal((), frozenset(), True)
        gens = []
        for word in text.split(","):
            word = word.strip()
            if "*" in word:
                names = word.split("*")
            elif re.fullmatch(r"[a-z]+", word):
                names = list(word)
            else:
                raise BadIdeal(f"cannot read monomial {word!r}")
            if len(set(names)) != len(names):
                raise BadIdeal(f"monomial {word!r} is not square-free")
            gens.append(frozenset(var_id(n) for n in names))
    if any(not g for g in gens):
        raise BadIdeal("empty monomial")
    return MonomialIdeal.of(gens)


def minimalize(i: MonomialIdeal) -> MonomialIdeal:
    keep: list[Monomial] = []
    for k, g in enumerate(i.gens):
        if g in keep:
            continue
        if any(h < g or (h == g and j < k) for j, h in enumerate(i.gens) if j != k):
            continue
        keep.append(g)
    return MonomialIdeal(tuple(keep), i.alphabet, True)


def hypergraph_of_ideal(i: MonomialIdeal) -> Hypergraph:
    if not _is_minimal(i.gens):
        raise NonMinimalGenerators(f"{i} has a generator divisible by another")
    faces = set()
    for a in sorted(i.alphabet):
        face = tuple(k + 1 for k, g in enumerate(i.gens) if a in g)
        if face:
            faces.add(face)
    return Hypergraph(len(i.gens), frozenset(faces))


def canonical_ideal(h: Hypergraph) -> MonomialIdeal:
    """One variable per face, faces taken in sorted order."""
    if not is_separated(h):
        raise NotSeparated(f"{h} is not separated")
    faces = h.sorted_faces()
    gens = tuple(frozenset(a for a, f in enumerate(faces) if k in f) for k in h.vertices)
    return MonomialIdeal(gens, frozenset(range(len(faces))), True)


def random_ideal(h: Hypergraph, seed: int, max_bundle: int = 3) -> MonomialIdeal:
    """Give each face 1..max_bundle fresh variables, with shuffled variable ids."""
    if not is_separated(h):
        raise NotSeparated(f"{h} is not separated")
    rng = random.Random(seed)
    faces = h.sorted_faces()
    sizes = [rng.randint(1, max_bundle) for _ in faces]
    ids = list(range(sum(sizes)))
    rng.shuffle(ids)
    gens: list[set[int]] = [set() for _ in h.vertices]
    pos = 0
    for face, size in zip(faces, sizes):
        bundle = ids[pos:pos + size]
        pos += size
        for k in face:
            gens[k - 1].update(bundle)
    return MonomialIdeal(tuple(frozenset(g) for g in gens), frozenset(ids), True)


def colon_by_generator(i: MonomialIdeal, k: int) -> MonomialIdeal:
    """``I' : m_k`` where ``I'`` drops generator ``k`` (1-based); minimalized."""
    if i.ngens < 2:
        raise SingleGenerator("colon needs at least two generators")
    if not 1 <= k <= i.ngens:
        raise IndexError(f"generator index {k} out of 1..{i.ngens}")
    mk = i.gens[k - 1]
    quotients = [g - mk for j, g in enumerate(i.gens, start=1) if j != k]
    if not all(quotients):
        raise NonMinimalGenerators(f"a generator of {i} divides m_{k}; the colon is the unit ideal")
    return minimalize(MonomialIdeal(tuple(quotients), i.alphabet))


def restrict_to(i: MonomialIdeal, keep) -> MonomialIdeal:
    """Ideal generated by the generators with the given 1-based indices, in order."""
    keep = sorted(set(keep))
    gens = tuple(i.gens[k - 1] for k in keep)
    return MonomialIdeal(gens, i.alphabet, _is_minimal(gens))
