"""Betti numbers of R/I from the Taylor complex.

Basis elements of the Taylor complex are subsets F of the generators, held
as bitmasks, with multidegree lcm(m_F). The differential sends e_F to
sum_k (-1)^k (lcm_F / lcm_{F - j_k}) e_{F - j_k}; the monomial factor is
implied by the two multidegrees, so matrices store only the signed scalar.

Two independent routes produce Betti numbers:

* ``minimize`` cancels unit entries (entries whose row and column share a
  multidegree) by exact Gaussian elimination until the complex is minimal;
* ``strand`` takes, for each multidegree, the homology of the scalar
  subcomplex of subsets with exactly that lcm (compiled kernel when built).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import _kernel
from .errors import EmptyIdeal, NonMinimalGenerators, TooLarge
from .ideal import MonomialIdeal

DEFAULT_CAP = 14
SMALL_PRIMES = tuple(q for q in range(2, 98) if all(q % d for d in range(2, q)))


def _masks(i: MonomialIdeal) -> list[int]:
    return [sum(1 << v for v in g) for g in i.gens]


def _lcm_table(masks: list[int]) -> list[int]:
    lcm = [0] * (1 << len(masks))
    for s in range(1, len(lcm)):
        low = s & -s
        lcm[s] = lcm[s ^ low] | masks[low.bit_length() - 1]
    return lcm


@dataclass(frozen=True)
class TaylorComplex:
    masks: tuple[int, ...]
    lcm: tuple[int, ...]

    @property
    def mu(self) -> int:
        return len(self.masks)

    def basis(self, i: int) -> list[int]:
        return [s for s in range(len(self.lcm)) if s.bit_count() == i]

    def rank(self, i: int) -> int:
        return len(self.basis(i))

    def differential(self, i: int) -> dict[int, dict[int, int]]:
        """delta_i as {column F: {row G: sign}}, with F of size i."""
        out = {}
        for f in self.basis(i):
            col, sign, bits = {}, -1, f
            while bits:
                low = bits & -bits
                col[f ^ low] = sign
                sign = -sign
                bits ^= low
            out[f] = col
        return out

    def entry_monomial(self, f: int, g: int) -> int:
        """Variable mask of lcm_F / lcm_G."""
        return self.lcm[f] & ~self.lcm[g]

    def check_dd(self) -> bool:
        # both factors of a composite F -> G -> K carry lcm_F/lcm_K, so the
        # scalars alone must cancel
        for i in range(2, self.mu + 1):
            lower = self.differential(i - 1)
            for f, col in self.differential(i).items():
                acc: dict[int, int] = {}
                for g, a in col.items():
                    for k, b in lower[g].items():
                        acc[k] = acc.get(k, 0) + a * b
                if any(acc.values()):
                    return False
        return True


def build_taylor(i: MonomialIdeal, cap: int = DEFAULT_CAP, check: bool = False) -> TaylorComplex:
    if i.ngens > cap:
        raise TooLarge(f"{i.ngens} generators exceed the oracle cap {cap}")
    if not i.minimal and any(a <= b for x, a in enumerate(i.gens) for y, b in enumerate(i.gens) if x != y):
        raise NonMinimalGenerators(f"{i} is not minimally generated")
    masks = _masks(i)
    tc = TaylorComplex(tuple(masks), tuple(_lcm_table(masks)))
    if check and not tc.check_dd():
        raise AssertionError("Taylor differential does not square to zero")
    return tc


@dataclass(frozen=True)
class BettiTable:
    beta: tuple[int, ...]

    @classmethod
    def of(cls, beta) -> BettiTable:
        beta = list(beta)
        while len(beta) > 1 and beta[-1] == 0:
            beta.pop()
        return cls(tuple(beta))

    @property
    def pd(self) -> int:
        return len(self.beta) - 1

    def __str__(self):
        return " ".join(map(str, self.beta))


def _field(p: int):
    if p == 0:
        def div(a, b):
            q = Fraction(a) / b
            return q.numerator if q.denominator == 1 else q
        return (lambda x: x), div
    return (lambda x: x % p), (lambda a, b: a * pow(b, -1, p) % p)


def minimize(tc: TaylorComplex, p: int = 0, seed: int | None = None) -> BettiTable:
    """Cancel unit entries until none remain; the survivors give the Betti numbers.

    ``seed`` shuffles the pivot order; the result must not depend on it.
    """
    norm, div = _field(p)
    mu, lcm = tc.mu, tc.lcm
    # cols[i][F] = {G: c} for delta_i, rows[i][G] = set of F with a nonzero at G
    cols: list[dict[int, dict[int, object]]] = [{} for _ in range(mu + 2)]
    rows: list[dict[int, set[int]]] = [{} for _ in range(mu + 2)]
    alive: list[set[int]] = [set(tc.basis(i)) for i in range(mu + 1)] + [set()]
    for i in range(1, mu + 1):
        for f, col in tc.differential(i).items():
            col = {g: norm(c) for g, c in col.items()}
            cols[i][f] = col
            for g in col:
                rows[i].setdefault(g, set()).add(f)
    for f in alive[0]:
        cols[0][f] = {}
    rng = random.Random(seed) if seed is not None else None

    def units(i):
        found = []
        for f, col in cols[i].items():
            for g, c in col.items():
                if lcm[f] == lcm[g] and c:
                    found.append((f, g))
                    if rng is None:
                        return found
        return found

    for i in range(mu, 0, -1):
        # cancelling in degree i only touches delta_i's entries and drops a row
        # of delta_{i+1} and a column of delta_{i-1}, so no new units appear above
        while True:
            cand = units(i)
            if not cand:
                break
            f, g = rng.choice(cand) if rng is not None else cand[0]
            _cancel(cols, rows, i, f, g, norm, div)
            alive[i].discard(f)
            alive[i - 1].discard(g)
    return BettiTable.of(len(alive[i]) for i in range(mu + 1))


def _cancel(cols, rows, i, f, g, norm, div):
    d = cols[i]
    c = d[f][g]
    col_f = d[f]
    # columns Z that meet row G: col_Z -= (c_ZG / c_FG) col_F
    for z in list(rows[i].get(g, ())):
        if z == f:
            continue
        col_z = d[z]
        factor = div(col_z[g], c)
        for y, v in col_f.items():
            new = norm(col_z.get(y, 0) - factor * v)
            if new:
                if y not in col_z:
                    rows[i].setdefault(y, set()).add(z)
                col_z[y] = new
            elif y in col_z:
                del col_z[y]
                rows[i][y].discard(z)
    # drop column F and row G of delta_i
    for y in col_f:
        rows[i][y].discard(f)
    del d[f]
    for z in rows[i].pop(g, ()):
        d[z].pop(g, None)
    # drop row F of delta_{i+1} and column G of delta_{i-1}
    if i + 1 < len(cols):
        for z in rows[i + 1].pop(f, ()):
            cols[i + 1][z].pop(f, None)
    if i - 1 >= 1:
        for y in cols[i - 1].pop(g, {}):
            rows[i - 1][y].discard(g)
    elif i - 1 == 0:
        cols[0].pop(g, None)


def betti_numbers(i: MonomialIdeal, p: int = 0, method: str = "minimize",
                  cap: int = DEFAULT_CAP, seed: int | None = None) -> BettiTable:
    """Total Betti numbers of R/I; ``method`` is ``"minimize"`` or ``"strand"``."""
    if p and p not in SMALL_PRIMES:
        raise ValueError(f"characteristic must be 0 or a prime <= 97, got {p}")
    if i.ngens == 0:
        return BettiTable((1,))
    tc = build_taylor(i, cap)
    if method == "minimize":
        return minimize(tc, p, seed)
    if method == "strand":
        return BettiTable.of(_kernel.strand_betti(list(tc.masks), p))
    raise ValueError(f"unknown oracle method {method!r}")


def pd_oracle(i: MonomialIdeal, method: str = "minimize", cap: int = DEFAULT_CAP) -> int:
    return betti_numbers(i, method=method, cap=cap).pd


def betti_mod_p(i: MonomialIdeal, p: int, method: str = "minimize") -> BettiTable:
    if p not in SMALL_PRIMES:
        raise ValueError(f"p must be a prime <= 97, got {p}")
    return betti_numbers(i, p=p, method=method)


def grade_oracle(i: MonomialIdeal) -> int:
    """Height of I: fewest variables meeting every generator (branch and bound)."""
    if i.ngens == 0:
        raise EmptyIdeal("the zero ideal has no grade here")
    gens = [frozenset(g) for g in i.gens]
    best = [len(frozenset().union(*gens))]

    def search(todo: list[frozenset[int]], used: int):
        if used >= best[0]:
            return
        if not todo:
            best[0] = used
            return
        # lower bound: greedily pick pairwise disjoint generators
        disjoint, seen = 0, set()
        for g in todo:
            if not g & seen:
                disjoint += 1
                seen |= g
        if used + disjoint >= best[0]:
            return
        g = min(todo, key=len)
        for v in sorted(g):
            search([h for h in todo if v not in h], used + 1)

    search(gens, 0)
    return best[0]
