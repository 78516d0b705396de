# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled strand kernel: same contract as ``_strand_py.strand_betti``.

Ranks are taken on dense int64 blocks, fraction-free over Q (with gcd row
normalisation) or modulo a small prime. Any intermediate that would not fit
in 64 bits raises OverflowError so the caller can retry in pure Python.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport malloc, calloc, free, qsort

cdef extern from *:
    ctypedef long long int128 "__int128"

cdef int64_t I64_MAX = 9223372036854775807


cdef struct Cell:
    uint64_t lcm
    int k
    uint64_t s


cdef int _cmp_cell(const void* a, const void* b) noexcept nogil:
    cdef const Cell* x = <const Cell*>a
    cdef const Cell* y = <const Cell*>b
    if x.lcm != y.lcm:
        return -1 if x.lcm < y.lcm else 1
    if x.k != y.k:
        return -1 if x.k < y.k else 1
    if x.s != y.s:
        return -1 if x.s < y.s else 1
    return 0


cdef inline int64_t _gcd(int64_t a, int64_t b) noexcept nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef inline int64_t _inv_mod(int64_t a, int64_t p) noexcept nogil:
    cdef int64_t t = 0, nt = 1, r = p, nr = a % p, q
    while nr:
        q = r // nr
        t, nt = nt, t - q * nt
        r, nr = nr, r - q * nr
    return t + p if t < 0 else t


cdef Py_ssize_t _rank(int64_t* m, Py_ssize_t nr, Py_ssize_t nc, int64_t p) except -1:
    cdef Py_ssize_t rank = 0, col, r, j, piv
    cdef int64_t a, b, g, f, tmp
    cdef int128 v
    for col in range(nc):
        if rank == nr:
            break
        piv = -1
        for r in range(rank, nr):
            if m[r * nc + col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(nc):
                tmp = m[piv * nc + j]
                m[piv * nc + j] = m[rank * nc + j]
                m[rank * nc + j] = tmp
        if p:
            f = _inv_mod(m[rank * nc + col], p)
            for j in range(col, nc):
                m[rank * nc + j] = m[rank * nc + j] * f % p
        for r in range(rank + 1, nr):
            b = m[r * nc + col]
            if b == 0:
                continue
            if p:
                for j in range(col, nc):
                    m[r * nc + j] = ((m[r * nc + j] - b * m[rank * nc + j]) % p + p) % p
                continue
            a = m[rank * nc + col]
            g = _gcd(a, b)
            a //= g
            b //= g
            g = 0
            for j in range(col, nc):
                v = <int128>a * m[r * nc + j] - <int128>b * m[rank * nc + j]
                if v > I64_MAX or v < -I64_MAX:
                    raise OverflowError("strand rank exceeds 64-bit range")
                m[r * nc + j] = <int64_t>v
                if v != 0:
                    g = _gcd(g, <int64_t>v)
            if g > 1:
                for j in range(col, nc):
                    m[r * nc + j] //= g
        rank += 1
    return rank


def strand_betti(masks, int p=0):
    """Total Betti numbers of R/I, beta_0 first, untrimmed (length len(masks)+1)."""
    cdef Py_ssize_t n = len(masks)
    if n > 30:
        raise OverflowError("too many generators for the compiled kernel")
    cdef uint64_t* gens = <uint64_t*>malloc(max(n, 1) * sizeof(uint64_t))
    cdef Py_ssize_t N = (<Py_ssize_t>1) << n
    cdef Cell* cells = <Cell*>malloc(N * sizeof(Cell))
    cdef uint64_t* lcm = <uint64_t*>malloc(N * sizeof(uint64_t))
    cdef int* pos = <int*>malloc(N * sizeof(int))
    cdef int64_t* mat = NULL
    cdef Py_ssize_t i, s, low, start, end, a, b, c, bs, rows, cols, j
    cdef uint64_t L, f, bits, lowbit, g
    cdef int sign
    cdef list beta = [0] * (n + 1)
    cdef list block_k, block_start, block_len, ranks
    if not gens or not cells or not lcm or not pos:
        free(gens); free(cells); free(lcm); free(pos)
        raise MemoryError()
    try:
        for i in range(n):
            m = masks[i]
            if m < 0 or m.bit_length() > 63:
                raise OverflowError("generator mask wider than 63 bits")
            gens[i] = <uint64_t>m
        lcm[0] = 0
        for s in range(1, N):
            low = 0
            while not (s >> low) & 1:
                low += 1
            lcm[s] = lcm[s ^ ((<Py_ssize_t>1) << low)] | gens[low]
        for s in range(N):
            cells[s].lcm = lcm[s]
            cells[s].s = <uint64_t>s
            cells[s].k = 0
            bits = <uint64_t>s
            while bits:
                bits &= bits - 1
                cells[s].k += 1
        qsort(cells, N, sizeof(Cell), _cmp_cell)

        start = 0
        while start < N:
            L = cells[start].lcm
            end = start
            while end < N and cells[end].lcm == L:
                end += 1
            # blocks of equal k inside the strand
            block_k, block_start, block_len = [], [], []
            i = start
            while i < end:
                j = i
                while j < end and cells[j].k == cells[i].k:
                    pos[cells[j].s] = <int>(j - i)
                    j += 1
                block_k.append(cells[i].k)
                block_start.append(i)
                block_len.append(j - i)
                i = j
            ranks = [0] * (len(block_k) + 1)
            for c in range(1, len(block_k)):
                if block_k[c - 1] != block_k[c] - 1:
                    continue
                bs = block_start[c]
                rows = block_len[c]
                cols = block_len[c - 1]
                mat = <int64_t*>calloc(rows * cols, sizeof(int64_t))
                if not mat:
                    raise MemoryError()
                for a in range(rows):
                    f = cells[bs + a].s
                    bits = f
                    sign = 1
                    while bits:
                        lowbit = bits & (~bits + 1)
                        g = f ^ lowbit
                        if lcm[g] == L:
                            mat[a * cols + pos[g]] = sign if (p == 0 or sign > 0) else p - 1
                        sign = -sign
                        bits ^= lowbit
                ranks[c] = _rank(mat, rows, cols, p)
                free(mat)
                mat = NULL
            for c in range(len(block_k)):
                beta[block_k[c]] += block_len[c] - ranks[c] - ranks[c + 1]
            start = end
    finally:
        free(mat)
        free(gens)
        free(cells)
        free(lcm)
        free(pos)
    return beta
