"""Pure-Python strand kernel, used when the compiled extension is unavailable.

For each multidegree L the Taylor subsets with lcm exactly L form a complex
with scalar differentials; its homology in degree k is Tor_k(R/I, k)_L. The
total Betti number is the sum over L of ``|C_k| - rank d_k - rank d_{k+1}``.
"""

from __future__ import annotations

from math import gcd


def lcm_table(masks: list[int]) -> list[int]:
    n = len(masks)
    lcm = [0] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        lcm[s] = lcm[s ^ low] | masks[low.bit_length() - 1]
    return lcm


def _rank(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                if p:
                    inv = pow(row[c], -1, p)
                    row = {k: v * inv % p for k, v in row.items()}
                else:
                    g = 0
                    for v in row.values():
                        g = gcd(g, v)
                    if g > 1:
                        row = {k: v // g for k, v in row.items()}
                pivots[c] = row
                break
            a, b = piv[c], row[c]
            out = {}
            if p:
                # pivot rows are normalised to a leading 1
                for k in row.keys() | piv.keys():
                    v = (row.get(k, 0) - b * piv.get(k, 0)) % p
                    if v:
                        out[k] = v
            else:
                for k in row.keys() | piv.keys():
                    v = a * row.get(k, 0) - b * piv.get(k, 0)
                    if v:
                        out[k] = v
            row = out
    return len(pivots)


def strand_betti(masks: list[int], p: int = 0) -> list[int]:
    """Total Betti numbers of R/I, beta_0 first, untrimmed (length len(masks)+1)."""
    n = len(masks)
    lcm = lcm_table(masks)
    strands: dict[int, list[int]] = {}
    for s in range(1 << n):
        strands.setdefault(lcm[s], []).append(s)
    beta = [0] * (n + 1)
    for L, members in strands.items():
        by_k: dict[int, list[int]] = {}
        for s in members:
            by_k.setdefault(s.bit_count(), []).append(s)
        ranks: dict[int, int] = {}
        for k, cells in by_k.items():
            if k == 0 or k - 1 not in by_k:
                ranks[k] = 0
                continue
            rows = []
            for f in cells:
                row = {}
                sign = 1
                bits = f
                while bits:
                    low = bits & -bits
                    g = f ^ low
                    if lcm[g] == L:
                        row[g] = sign if not p else sign % p
                    sign = -sign
                    bits ^= low
                if row:
                    rows.append(row)
            ranks[k] = _rank(rows, p) if rows else 0
        for k, cells in by_k.items():
            beta[k] += len(cells) - ranks.get(k, 0) - ranks.get(k + 1, 0)
    return beta
