# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled complement-scan kernel.

Decision-only counterpart of _kernels_py.scan_chunk for the four
fixed-shape pattern kinds. It answers "does some Berge-pattern run
through the trial edge", never building witnesses; the caller re-checks
any reported violation against the pure matcher before trusting it.

Capability envelope: n <= 128 (vertex sets are two 64-bit words) and at
most 63 existing edges (edge sets are one word, the trial edge takes
the extra bit). Pattern kind codes: 1 path, 2 cycle, 3 star,
4 matching. The rank loop runs without the GIL, so scan windows on a
thread pool genuinely overlap.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

ctypedef unsigned long long u64
ctypedef unsigned char u8
ctypedef long long i64


cdef inline bint vtest(u64 lo, u64 hi, int v) nogil:
    if v < 64:
        return (lo >> v) & 1
    return (hi >> (v - 64)) & 1


cdef inline u64 vlo(u64 lo, int v) nogil:
    if v < 64:
        return lo | (<u64>1 << v)
    return lo


cdef inline u64 vhi(u64 hi, int v) nogil:
    if v >= 64:
        return hi | (<u64>1 << (v - 64))
    return hi


cdef struct Host:
    int n
    int k
    int net          # edge slots, existing plus the trial at index net-1
    u8 *ev           # net*k vertex ids, edge i at ev[i*k .. i*k+k)
    u64 *emlo        # per-edge vertex masks, low word
    u64 *emhi
    u8 *inc          # n*net incidence lists
    u8 *ilen         # current incidence lengths
    short *owner     # n scratch, star matching
    int *seen        # n scratch, star matching visit stamps
    int stamp


# ----------------------------------------------------------------- path

cdef bint path_left(Host *h, int cur, int need, u64 uvlo, u64 uvhi,
                    u64 ue) nogil:
    cdef int ii, i, jj, w
    if need == 0:
        return 1
    for ii in range(h.ilen[cur]):
        i = h.inc[cur * h.net + ii]
        if (ue >> i) & 1:
            continue
        for jj in range(h.k):
            w = h.ev[i * h.k + jj]
            if vtest(uvlo, uvhi, w):
                continue
            # a non-final step must leave w through a second incident edge
            if need > 1 and h.ilen[w] == 1:
                continue
            if path_left(h, w, need - 1, vlo(uvlo, w), vhi(uvhi, w),
                         ue | (<u64>1 << i)):
                return 1
    return 0


cdef bint path_right(Host *h, int x, int cur, int rlen, int total,
                     u64 uvlo, u64 uvhi, u64 ue) nogil:
    cdef int ii, i, jj, w
    if path_left(h, x, total - rlen, uvlo, uvhi, ue):
        return 1
    if rlen < total:
        for ii in range(h.ilen[cur]):
            i = h.inc[cur * h.net + ii]
            if (ue >> i) & 1:
                continue
            for jj in range(h.k):
                w = h.ev[i * h.k + jj]
                if vtest(uvlo, uvhi, w):
                    continue
                if path_right(h, x, w, rlen + 1, total, vlo(uvlo, w),
                              vhi(uvhi, w), ue | (<u64>1 << i)):
                    return 1
    return 0


cdef bint has_path(Host *h, int m, int r) nogil:
    cdef int ai, bi, x, y
    if m == 1:
        return 0
    for ai in range(h.k - 1):
        for bi in range(ai + 1, h.k):
            x = h.ev[r * h.k + ai]
            y = h.ev[r * h.k + bi]
            if path_right(h, x, y, 0, m - 2,
                          vlo(vlo(0, x), y), vhi(vhi(0, x), y),
                          <u64>1 << r):
                return 1
    return 0


# ---------------------------------------------------------------- cycle

cdef bint cyc_rec(Host *h, int cur, int v1, int cnt, int m,
                  u64 uvlo, u64 uvhi, u64 ue) nogil:
    cdef int ii, i, jj, w
    if cnt == m:
        for ii in range(h.ilen[cur]):
            i = h.inc[cur * h.net + ii]
            if not ((ue >> i) & 1) and vtest(h.emlo[i], h.emhi[i], v1):
                return 1
        return 0
    for ii in range(h.ilen[cur]):
        i = h.inc[cur * h.net + ii]
        if (ue >> i) & 1:
            continue
        for jj in range(h.k):
            w = h.ev[i * h.k + jj]
            if vtest(uvlo, uvhi, w):
                continue
            # w must be left again, to extend or to close; a vertex whose
            # single incident edge was just used cannot be
            if h.ilen[w] == 1:
                continue
            if cyc_rec(h, w, v1, cnt + 1, m, vlo(uvlo, w), vhi(uvhi, w),
                       ue | (<u64>1 << i)):
                return 1
    return 0


cdef bint has_cycle(Host *h, int m, int r) nogil:
    cdef int ai, bi, v1, v2
    if h.net < m:
        return 0
    for ai in range(h.k - 1):
        for bi in range(ai + 1, h.k):
            v1 = h.ev[r * h.k + ai]
            v2 = h.ev[r * h.k + bi]
            if cyc_rec(h, v2, v1, 2, m,
                       vlo(vlo(0, v1), v2), vhi(vhi(0, v1), v2),
                       <u64>1 << r):
                return 1
    return 0


# ----------------------------------------------------------------- star

cdef bint star_aug(Host *h, int j, u8 *pool, int c, int u) nogil:
    cdef int jj, w
    for jj in range(h.k):
        w = h.ev[pool[j] * h.k + jj]
        if w == c or w == u or h.seen[w] == h.stamp:
            continue
        h.seen[w] = h.stamp
        if h.owner[w] < 0 or star_aug(h, h.owner[w], pool, c, u):
            h.owner[w] = <short>j
            return 1
    return 0


cdef bint has_star(Host *h, int m, int r) nogil:
    cdef int ci, c, ii, np, ui, u, j, matched, v
    cdef u8 pool[64]
    for ci in range(h.k):
        c = h.ev[r * h.k + ci]
        if h.ilen[c] < m:
            continue
        np = 0
        for ii in range(h.ilen[c]):
            j = h.inc[c * h.net + ii]
            if j != r:
                pool[np] = <u8>j
                np += 1
        if np < m - 1:
            continue
        for ui in range(h.k):
            u = h.ev[r * h.k + ui]
            if u == c:
                continue
            for v in range(h.n):
                h.owner[v] = -1
            matched = 0
            for j in range(np):
                if matched >= m - 1:
                    break
                h.stamp += 1
                if star_aug(h, j, pool, c, u):
                    matched += 1
            if matched >= m - 1:
                return 1
    return 0


# ------------------------------------------------------------- matching

cdef bint match_rec(Host *h, int next_i, int count, int l, int r,
                    u64 uvlo, u64 uvhi) nogil:
    cdef int i, jj, w, nf, fa, fb, a, b
    cdef u8 fr[128]
    if count == l:
        return 1
    for i in range(next_i, h.net):
        if h.net - i < l - count:
            break
        if i == r:
            continue
        nf = 0
        for jj in range(h.k):
            w = h.ev[i * h.k + jj]
            if not vtest(uvlo, uvhi, w):
                fr[nf] = <u8>w
                nf += 1
        if nf < 2:
            continue
        for fa in range(nf - 1):
            for fb in range(fa + 1, nf):
                a = fr[fa]
                b = fr[fb]
                if match_rec(h, i + 1, count + 1, l, r,
                             vlo(vlo(uvlo, a), b), vhi(vhi(uvhi, a), b)):
                    return 1
    return 0


cdef bint has_matching(Host *h, int l, int r) nogil:
    cdef int ai, bi, a, b
    for ai in range(h.k - 1):
        for bi in range(ai + 1, h.k):
            a = h.ev[r * h.k + ai]
            b = h.ev[r * h.k + bi]
            if match_rec(h, 0, 1, l, r,
                         vlo(vlo(0, a), b), vhi(vhi(0, a), b)):
                return 1
    return 0


# ------------------------------------------------------------ rank loop

cdef i64 _scan(Host *h, int kind, int m, i64 lo, i64 hi,
               i64 *er, i64 ner, i64 ptr, u8 *combo) nogil:
    cdef i64 rank = lo
    cdef int r = h.net - 1
    cdef int i, j, v
    cdef bint found
    while rank < hi:
        if ptr < ner and er[ptr] == rank:
            ptr += 1
        else:
            # install the trial edge
            h.emlo[r] = 0
            h.emhi[r] = 0
            for j in range(h.k):
                v = combo[j]
                h.ev[r * h.k + j] = <u8>v
                h.emlo[r] = vlo(h.emlo[r], v)
                h.emhi[r] = vhi(h.emhi[r], v)
                h.inc[v * h.net + h.ilen[v]] = <u8>r
                h.ilen[v] += 1
            if kind == 1:
                found = has_path(h, m, r)
            elif kind == 2:
                found = has_cycle(h, m, r)
            elif kind == 3:
                found = has_star(h, m, r)
            else:
                found = has_matching(h, m, r)
            for j in range(h.k):
                h.ilen[combo[j]] -= 1
            if not found:
                return rank
        rank += 1
        # lex successor of combo
        i = h.k - 1
        while i >= 0 and combo[i] == h.n - h.k + i:
            i -= 1
        if i < 0:
            break
        combo[i] += 1
        for j in range(i + 1, h.k):
            combo[j] = combo[j - 1] + 1
    return -1


def scan_chunk(int n, int k, base_edges, int kind, int m,
               i64 lo, i64 hi, edge_ranks):
    """Same contract as _kernels_py.scan_chunk, with the pattern given as
    (kind code, size)."""
    import bisect as _bisect

    from ._kernels_py import comb_unrank

    cdef int ne = len(base_edges)
    cdef int net = ne + 1
    if n > 128 or net > 64 or k > 128 or kind < 1 or kind > 4:
        raise ValueError("scan outside the compiled kernel's envelope")
    if lo >= hi:
        return -1

    cdef Host h
    cdef i64 ner = len(edge_ranks)
    cdef i64 *er = NULL
    cdef u8 combo[128]
    cdef i64 result, ptr
    cdef int i, j, v

    h.n = n
    h.k = k
    h.net = net
    h.ev = <u8 *>malloc(net * k)
    h.emlo = <u64 *>malloc(net * sizeof(u64))
    h.emhi = <u64 *>malloc(net * sizeof(u64))
    h.inc = <u8 *>malloc(n * net if n * net else 1)
    h.ilen = <u8 *>malloc(n if n else 1)
    h.owner = <short *>malloc(n * sizeof(short) if n else 2)
    h.seen = <int *>malloc(n * sizeof(int) if n else 4)
    er = <i64 *>malloc(ner * sizeof(i64) if ner else 8)
    if (h.ev == NULL or h.emlo == NULL or h.emhi == NULL or h.inc == NULL
            or h.ilen == NULL or h.owner == NULL or h.seen == NULL
            or er == NULL):
        free(h.ev); free(h.emlo); free(h.emhi); free(h.inc)
        free(h.ilen); free(h.owner); free(h.seen); free(er)
        raise MemoryError
    try:
        memset(h.ilen, 0, n)
        memset(h.seen, 0, n * sizeof(int))
        h.stamp = 0
        for i, e in enumerate(base_edges):
            h.emlo[i] = 0
            h.emhi[i] = 0
            for j in range(k):
                v = e[j]
                h.ev[i * k + j] = <u8>v
                h.emlo[i] = vlo(h.emlo[i], v)
                h.emhi[i] = vhi(h.emhi[i], v)
                h.inc[v * net + h.ilen[v]] = <u8>i
                h.ilen[v] += 1
        for i in range(<int>ner):
            er[i] = edge_ranks[i]
        ptr = _bisect.bisect_left(edge_ranks, lo)
        start = comb_unrank(lo, n, k)
        for j in range(k):
            combo[j] = <u8>start[j]
        with nogil:
            result = _scan(&h, kind, m, lo, hi, er, ner, ptr, combo)
        return result
    finally:
        free(h.ev); free(h.emlo); free(h.emhi); free(h.inc)
        free(h.ilen); free(h.owner); free(h.seen); free(er)
