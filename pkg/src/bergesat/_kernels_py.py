"""Pure-Python search kernels.

Everything here works on plain data (edge tuples, incidence lists) rather
than Hypergraph objects so the saturation scan can push a trial edge into a
mutable copy cheaply. The finders return raw witnesses; the public wrappers
turn them into embeddings.

Vertex and edge sets are tracked as int bitmasks, which Python handles at
any size. `required` is always an edge index, or None.
"""

from __future__ import annotations

import bisect
from itertools import combinations
from math import comb


# ---------------------------------------------------------------- combinadics

def comb_rank(combo, n: int, k: int) -> int:
    """Rank of a sorted k-tuple in the lex order of all k-subsets of range(n)."""
    rank = 0
    prev = -1
    for i, c in enumerate(combo):
        for x in range(prev + 1, c):
            rank += comb(n - 1 - x, k - 1 - i)
        prev = c
    return rank


def comb_unrank(rank: int, n: int, k: int) -> tuple:
    combo = []
    x = 0
    for i in range(k):
        while True:
            cnt = comb(n - 1 - x, k - 1 - i)
            if rank < cnt:
                combo.append(x)
                x += 1
                break
            rank -= cnt
            x += 1
    return tuple(combo)


def next_combination(combo, n: int):
    """Lex successor of a sorted k-subset of range(n), or None at the end."""
    c = list(combo)
    k = len(c)
    i = k - 1
    while i >= 0 and c[i] == n - k + i:
        i -= 1
    if i < 0:
        return None
    c[i] += 1
    for j in range(i + 1, k):
        c[j] = c[j - 1] + 1
    return tuple(c)


# ------------------------------------------------------------------- matching

def _augment(j, cand_lists, owner, visited, banned):
    for r in cand_lists[j]:
        if r in banned or r in visited:
            continue
        visited.add(r)
        if r not in owner or _augment(owner[r], cand_lists, owner, visited, banned):
            owner[r] = j
            return True
    return False


def _max_matching(cand_lists, owner=None, banned=frozenset(), stop_at=None):
    """Kuhn's augmenting-path matching. owner maps right label -> left index
    and may come preseeded (those count toward the result). Returns owner."""
    if owner is None:
        owner = {}
    matched = len(owner)
    taken = set(owner.values())
    for j in range(len(cand_lists)):
        if j in taken:
            continue
        if stop_at is not None and matched >= stop_at:
            break
        if _augment(j, cand_lists, owner, set(), banned):
            matched += 1
    return owner


# ---------------------------------------------------------------------- paths

def find_path(n, edges, incidence, m, required=None):
    """Witness (vs, es) of a Berge path on m vertices, or None.

    vs is the vertex sequence, es[i] is the index of the edge covering
    (vs[i], vs[i+1]). With `required`, the witness must use that edge.
    """
    if m == 1:
        if required is not None:
            return None
        return ([0], []) if n > 0 else None
    if required is not None:
        return _path_through(edges, incidence, m, required)

    vs, es = [], []

    def ext(cur, used_v, used_e):
        if len(vs) == m:
            return True
        for i in incidence[cur]:
            if used_e >> i & 1:
                continue
            for w in edges[i]:
                if used_v >> w & 1:
                    continue
                vs.append(w)
                es.append(i)
                if ext(w, used_v | 1 << w, used_e | 1 << i):
                    return True
                vs.pop()
                es.pop()
        return False

    for v in range(n):
        vs.clear()
        es.clear()
        vs.append(v)
        if ext(v, 1 << v, 0):
            return (vs[:], es[:])
    return None


def _path_through(edges, incidence, m, r):
    """Path witness forced through edge r, grown from both endpoints.

    The required edge covers some consecutive pair (x, y); the remaining
    m-2 vertices are split between a left extension from x and a right
    extension from y, and every split is tried. Reversal symmetry lets us
    fix x < y.
    """
    re = edges[r]
    need_total = m - 2
    left_v, left_e, right_v, right_e = [], [], [], []

    def left(cur, need, used_v, used_e):
        if need == 0:
            return True
        for i in incidence[cur]:
            if used_e >> i & 1:
                continue
            for w in edges[i]:
                if used_v >> w & 1:
                    continue
                left_v.append(w)
                left_e.append(i)
                if left(w, need - 1, used_v | 1 << w, used_e | 1 << i):
                    return True
                left_v.pop()
                left_e.pop()
        return False

    def right(x, cur, used_v, used_e):
        if left(x, need_total - len(right_v), used_v, used_e):
            return True
        if len(right_v) < need_total:
            for i in incidence[cur]:
                if used_e >> i & 1:
                    continue
                for w in edges[i]:
                    if used_v >> w & 1:
                        continue
                    right_v.append(w)
                    right_e.append(i)
                    if right(x, w, used_v | 1 << w, used_e | 1 << i):
                        return True
                    right_v.pop()
                    right_e.pop()
        return False

    for x, y in combinations(re, 2):
        left_v.clear()
        left_e.clear()
        right_v.clear()
        right_e.clear()
        if right(x, y, 1 << x | 1 << y, 1 << r):
            vs = left_v[::-1] + [x, y] + right_v
            es = left_e[::-1] + [r] + right_e
            return (vs, es)
    return None


def longest_path(n, edges, incidence, required=None, start=None):
    """(t, witness) where t is the edge count of a longest Berge path,
    optionally through `required` and/or starting at `start`. witness is
    (vs, es) or None when no qualifying path exists at all."""
    ne = len(edges)
    best_t = -1
    best = None
    vs, es = [], []

    def rec(cur, used_v, used_e, has_req):
        nonlocal best_t, best
        if has_req and len(es) > best_t:
            best_t = len(es)
            best = (vs[:], es[:])
        if best_t == ne:
            return
        for i in incidence[cur]:
            if used_e >> i & 1:
                continue
            for w in edges[i]:
                if used_v >> w & 1:
                    continue
                vs.append(w)
                es.append(i)
                rec(w, used_v | 1 << w, used_e | 1 << i, has_req or i == required)
                vs.pop()
                es.pop()

    starts = range(n) if start is None else [start]
    for v in starts:
        vs.clear()
        es.clear()
        vs.append(v)
        rec(v, 1 << v, 0, required is None)
        if best_t == ne:
            break
    if best is None:
        return (0, None)
    return (best_t, best)


# --------------------------------------------------------------------- cycles

def find_cycle(n, edges, incidence, m, required=None):
    """Witness (vs, es) of a Berge cycle on m vertices, or None.

    es[i] covers (vs[i], vs[(i+1) % m]). Rotation symmetry is killed by
    anchoring one edge (the required one, else the minimum index over the
    cycle); reflection by ordering that edge's covered pair.
    """
    ne = len(edges)
    if ne < m:
        return None
    edge_sets = [set(e) for e in edges]
    vs, es = [], []

    def rec(cur, v1, used_v, used_e, lo):
        if len(vs) == m:
            for i in incidence[cur]:
                if i > lo and not (used_e >> i & 1) and v1 in edge_sets[i]:
                    es.append(i)
                    return True
            return False
        for i in incidence[cur]:
            if i <= lo or used_e >> i & 1:
                continue
            for w in edges[i]:
                if used_v >> w & 1:
                    continue
                vs.append(w)
                es.append(i)
                if rec(w, v1, used_v | 1 << w, used_e | 1 << i, lo):
                    return True
                vs.pop()
                es.pop()
        return False

    if required is not None:
        bases = [(required, -1)]
    else:
        bases = [(b, b) for b in range(ne)]
    for base, lo in bases:
        for v1, v2 in combinations(edges[base], 2):
            vs.clear()
            es.clear()
            vs.append(v1)
            vs.append(v2)
            es.append(base)
            if rec(v2, v1, 1 << v1 | 1 << v2, 1 << base, lo):
                return (vs[:], es[:])
    return None


# ---------------------------------------------------------------------- stars

def find_star(n, edges, incidence, m, required=None):
    """Witness (center, leaves, es) of a Berge star with m leaves, or None."""
    centers = range(n) if required is None else edges[required]
    for c in centers:
        inc_c = incidence[c]
        if len(inc_c) < m:
            continue
        if required is None:
            cand = [[w for w in edges[i] if w != c] for i in inc_c]
            owner = _max_matching(cand, stop_at=m)
            if len(owner) >= m:
                pairs = sorted((j, leaf) for leaf, j in owner.items())[:m]
                leaves = [leaf for _, leaf in pairs]
                return (c, leaves, [inc_c[j] for j, _ in pairs])
        else:
            pool = [i for i in inc_c if i != required]
            if len(pool) < m - 1:
                continue
            for u in edges[required]:
                if u == c:
                    continue
                cand = [[w for w in edges[i] if w != c and w != u] for i in pool]
                owner = _max_matching(cand, stop_at=m - 1)
                if len(owner) >= m - 1:
                    pairs = sorted((j, leaf) for leaf, j in owner.items())[: m - 1]
                    leaves = [u] + [leaf for _, leaf in pairs]
                    return (c, leaves, [required] + [pool[j] for j, _ in pairs])
    return None


# ------------------------------------------------------------------ matchings

def find_matching(n, edges, incidence, l, required=None):
    """Witness (pairs, es) of a Berge matching with l pairs, or None.

    Each chosen edge donates two private vertices; edges are scanned in
    ascending index order, which is lossless because the pattern is
    symmetric under reordering its pairs.
    """
    ne = len(edges)
    pairs, es = [], []

    def rec(next_i, used_v, count):
        if count == l:
            return True
        for i in range(next_i, ne):
            if ne - i < l - count:
                break
            if i == required:
                continue
            free = [w for w in edges[i] if not used_v >> w & 1]
            if len(free) < 2:
                continue
            for a, b in combinations(free, 2):
                pairs.append((a, b))
                es.append(i)
                if rec(i + 1, used_v | 1 << a | 1 << b, count + 1):
                    return True
                pairs.pop()
                es.pop()
        return False

    if required is None:
        if rec(0, 0, 0):
            return (pairs[:], es[:])
        return None
    for a, b in combinations(edges[required], 2):
        pairs.clear()
        es.clear()
        pairs.append((a, b))
        es.append(required)
        if rec(0, 1 << a | 1 << b, 1):
            return (pairs[:], es[:])
    return None


# -------------------------------------------------------------------- general

def find_general(n, edges, incidence, pat_nv, pat_edges, required=None):
    """Witness (vmap, emap) embedding an arbitrary simple graph, or None.

    Backtracks over vertex images in decreasing pattern-degree order. At
    each node a bipartite matching between the fully-assigned pattern edges
    and their candidate hyperedges prunes dead branches; the required-edge
    condition is only enforced on complete assignments (ignoring it earlier
    is a relaxation, so no witness is lost).
    """
    np_ = pat_nv
    deg = [0] * np_
    for a, b in pat_edges:
        deg[a] += 1
        deg[b] += 1
    order = sorted(range(np_), key=lambda v: (-deg[v], v))
    host_deg = [len(incidence[v]) for v in range(n)]
    edge_sets = [set(e) for e in edges]
    vmap = [-1] * np_

    def cand_hyperedges(a, b):
        # hyperedges containing both endpoint images, smaller incidence first
        u, v = vmap[a], vmap[b]
        if host_deg[u] > host_deg[v]:
            u, v = v, u
        return [i for i in incidence[u] if v in edge_sets[i]]

    def feasible(full):
        ready = [j for j, (a, b) in enumerate(pat_edges)
                 if vmap[a] >= 0 and vmap[b] >= 0]
        cand = []
        for j in ready:
            lst = cand_hyperedges(*pat_edges[j])
            if not lst:
                return None
            cand.append(lst)
        owner = _max_matching(cand)
        if len(owner) < len(cand):
            return None
        if not full:
            return {}
        if required is not None:
            return _force_required(cand)
        return {e: ready[j] for e, j in owner.items()}

    def _force_required(cand):
        for j in range(len(cand)):
            if required not in cand[j]:
                continue
            owner = {required: j}
            ok = True
            for j2 in range(len(cand)):
                if j2 == j:
                    continue
                if not _augment(j2, cand, owner, {required}, frozenset()):
                    ok = False
                    break
            if ok:
                return {e: jj for e, jj in owner.items()}
        return None

    def rec(pos, used_v):
        if pos == np_:
            got = feasible(True)
            if got is None:
                return None
            emap = [-1] * len(pat_edges)
            for e, j in got.items():
                emap[j] = e
            return emap
        p = order[pos]
        for v in range(n):
            if used_v >> v & 1 or host_deg[v] < deg[p]:
                continue
            vmap[p] = v
            if feasible(False) is not None:
                got = rec(pos + 1, used_v | 1 << v)
                if got is not None:
                    return got
            vmap[p] = -1
        return None

    if required is not None and not pat_edges:
        return None
    emap = rec(0, 0)
    if emap is None:
        return None
    return (tuple(vmap), list(emap))


# ----------------------------------------------------------------------- scan

def _make_checker(n, edges, incidence, pattern, trial):
    kind = pattern.kind
    if kind == "path":
        return lambda: find_path(n, edges, incidence, pattern.size, trial)
    if kind == "cycle":
        return lambda: find_cycle(n, edges, incidence, pattern.size, trial)
    if kind == "star":
        return lambda: find_star(n, edges, incidence, pattern.size, trial)
    if kind == "matching":
        return lambda: find_matching(n, edges, incidence, pattern.size, trial)
    return lambda: find_general(n, edges, incidence, pattern.nv, pattern.edges, trial)


def scan_chunk(n, k, base_edges, pattern, lo, hi, edge_ranks):
    """Scan complement ranks in [lo, hi): return the least rank whose k-set,
    added as a trial edge, creates no Berge-`pattern` through itself; -1 if
    every candidate in the window does. Ranks listed in edge_ranks (the
    existing edges) are skipped."""
    ne = len(base_edges)
    edges = list(base_edges)
    edges.append(None)
    incidence = [[] for _ in range(n)]
    for i, e in enumerate(base_edges):
        for v in e:
            incidence[v].append(i)
    check = _make_checker(n, edges, incidence, pattern, ne)

    ptr = bisect.bisect_left(edge_ranks, lo)
    rank = lo
    combo = comb_unrank(lo, n, k) if lo < hi else None
    while rank < hi:
        if ptr < len(edge_ranks) and edge_ranks[ptr] == rank:
            ptr += 1
        else:
            edges[ne] = combo
            for v in combo:
                incidence[v].append(ne)
            found = check()
            for v in combo:
                incidence[v].pop()
            if found is None:
                return rank
        rank += 1
        combo = next_combination(combo, n)
    return -1
