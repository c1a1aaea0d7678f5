"""Generators for the saturated hypergraph constructions.

The path-saturated trees are grown from a per-level schedule: each branch
is a list of operations, one per level, applied to the previous level's
edges of that branch. Operations:

    ("attach", v)  one new edge meeting the tree exactly in vertex v
    ("ext",)       one pendant edge at the lowest fresh vertex of each
                   previous-level edge
    ("b2each",)    pendant edges at the two lowest fresh vertices of each
                   previous-level edge
    ("bsame",)     two pendant edges at the lowest fresh vertex of each
                   previous-level edge

"Fresh" vertices of an edge are the k-1 vertices created with it. Levels
run globally (all branches advance together) and new vertices are numbered
sequentially, so the numbering is breadth-first from the center.
"""

from __future__ import annotations

from itertools import combinations

from .errors import (
    OrderTooSmallError,
    ParameterRegimeError,
    TooFewVerticesError,
    UnderspecifiedConstructionError,
    UnsupportedUniformityError,
)
from .formulas import a_km, cycle_clique_order, h_edge_count
from .hypergraph import Hypergraph, is_linear_tree, leaf_edges, make


# ------------------------------------------------------------ path trees

def _grow(k, n0, first_edges, schedules):
    edges = list(first_edges)
    fresh = {}
    nxt = n0
    prev = [[] for _ in schedules]
    depth = max(len(s) for s in schedules)
    for level in range(depth):
        new_prev = [[] for _ in schedules]
        for bi, sched in enumerate(schedules):
            if level >= len(sched):
                continue
            op = sched[level]
            if op[0] == "attach":
                attach_at = [op[1]]
            elif op[0] == "ext":
                attach_at = [fresh[e][0] for e in prev[bi]]
            elif op[0] == "b2each":
                attach_at = [v for e in prev[bi] for v in fresh[e][:2]]
            else:  # bsame
                attach_at = [v for e in prev[bi] for v in (fresh[e][0],) * 2]
            for v in attach_at:
                newv = list(range(nxt, nxt + k - 1))
                nxt += k - 1
                eid = len(edges)
                edges.append(tuple(sorted([v] + newv)))
                fresh[eid] = newv
                new_prev[bi].append(eid)
        prev = new_prev
    return nxt, edges


def _side_ops(root, tail_pattern, total):
    """[attach(root)] followed by total-1 ops cycling through tail_pattern."""
    ops = [("attach", root)]
    for i in range(total - 1):
        ops.append((tail_pattern[i % len(tail_pattern)],))
    return ops


def _tree_schedules(k, m):
    if k == 3:
        base = (m - 3) // 2 if m % 2 else (m - 4) // 2
        left = _side_ops(1, ("b2each", "ext"), base)
        right = _side_ops(2, ("b2each", "ext"), base)
        if m % 2 == 0:
            nxt = ("b2each", "ext")[(base - 1) % 2]
            left.append((nxt,))
        return 3, [(0, 1, 2)], [left, right]
    if k == 4:
        base = 3 * (m // 6) - 1
        left = _side_ops(0, ("ext", "b2each", "ext"), base)
        right = _side_ops(0, ("ext", "b2each", "ext"), base)
        r = m % 6
        if r == 1:
            left.append(("b2each",))
        elif r == 2:
            left.append(("b2each",))
            right.append(("b2each",))
        elif r == 3:
            left.extend([("b2each",), ("ext",)])
            right.append(("b2each",))
        elif r == 4:
            left.extend([("b2each",), ("ext",)])
            right.extend([("b2each",), ("ext",)])
        elif r == 5:
            left.extend([("b2each",), ("ext",), ("ext",)])
            right.extend([("b2each",), ("ext",)])
        return 1, [], [left, right]
    # k >= 6
    if m % 4 == 0:
        total = (m - 4) // 2
        branches = [_side_ops(0, ("ext", "bsame"), total) for _ in range(3)]
        for b in branches:
            b.append(("ext",))
        return 1, [], branches
    if m % 4 == 1:
        base = (m - 5) // 2 + 1
    elif m % 4 == 2:
        base = (m - 6) // 2 + 1
    else:
        base = (m - 7) // 2 + 1
    left = _side_ops(0, ("bsame", "ext"), base)
    right = _side_ops(0, ("bsame", "ext"), base)
    if m % 4 == 1:
        left.append(("ext",))
    elif m % 4 == 2:
        left.append(("ext",))
        right.append(("ext",))
    else:
        left.extend([("bsame",), ("ext",)])
        right.append(("ext",))
    return 1, [], [left, right]


def _check_path_params(k, m):
    if k == 5 or k < 3:
        raise UnsupportedUniformityError(
            f"path constructions cover k in {{3,4}} and k >= 6, not k={k}")
    floor_m = 10 if k == 4 else 8
    if m < floor_m:
        raise OrderTooSmallError(f"k={k} construction needs m >= {floor_m}, got m={m}")


def build_path_tree(k: int, m: int) -> Hypergraph:
    """The minimum saturated linear tree for the Berge path on m vertices."""
    _check_path_params(k, m)
    n0, first, schedules = _tree_schedules(k, m)
    n, edges = _grow(k, n0, first, schedules)
    h = make(n, k, edges)
    assert len(h.edges) == a_km(k, m, construction_range=True)
    assert is_linear_tree(h)
    return h


def _attachment_vertex(h, ei):
    e = h.edges[ei]
    deg = h.degrees
    for v in e:
        if deg[v] >= 2:
            return v
    return e[0]


def build_path_saturated(k: int, m: int, n: int) -> Hypergraph:
    """Disjoint copies of the saturated tree, remainder vertices absorbed
    as extra leaves at a designated degree-2 vertex plus, when the
    remainder does not divide out, one final mixed edge."""
    tree = build_path_tree(k, m)
    a = len(tree.edges)
    b = (k - 1) * a + 1
    if n < b:
        raise TooFewVerticesError(f"need n >= {b}, got n={n}")
    q, r = divmod(n, b)
    r1 = r % (k - 1)
    if r1 > 0 and k >= 6 and m % 4 == 0:
        raise UnderspecifiedConstructionError(
            "three-branch trees (k >= 6, m divisible by 4) have no stated "
            "rule for the final mixed edge; choose n with n mod "
            f"{b} divisible by {k - 1}")
    edges = []
    for c in range(q):
        off = c * b
        edges.extend(tuple(v + off for v in e) for e in tree.edges)
    isolated = list(range(q * b, n))
    nleaves = r // (k - 1)
    if nleaves:
        vprime = min(_attachment_vertex(tree, ei) for ei in leaf_edges(tree))
        for j in range(nleaves):
            chunk = isolated[j * (k - 1):(j + 1) * (k - 1)]
            edges.append(tuple(sorted([vprime] + chunk)))
    if r1 > 0:
        rest = isolated[nleaves * (k - 1):]
        if k == 3:
            extra = rest + [1, 2]
        elif k == 4:
            extra = rest + [1] + [5, 6][: 3 - r1]
        else:
            extra = rest + [1] + list(range(k + 1, k + 1 + (k - r1 - 1)))
        edges.append(tuple(sorted(extra)))
    h = make(n, k, edges)
    assert len(h.edges) == h_edge_count(k, m, n)
    return h


# ------------------------------------------------------------- triangles

def build_triangle_star(k: int, n: int) -> Hypergraph:
    """Edges pairwise meeting in one vertex, plus an absorbing edge when
    k-1 does not divide n-1."""
    if k < 3:
        raise ParameterRegimeError(f"needs k >= 3, got k={k}")
    if n < k + 1:
        raise TooFewVerticesError(f"need n >= {k + 1}, got n={n}")
    q, r = divmod(n - 1, k - 1)
    edges = [(0,) + tuple(range(1 + i * (k - 1), 1 + (i + 1) * (k - 1)))
             for i in range(q)]
    if r:
        edges.append((0,) + tuple(range(1, k - r)) + tuple(range(n - r, n)))
    return make(n, k, edges)


# ---------------------------------------------------------------- cycles

def build_cycle_book(k: int, m: int, n: int) -> Hypergraph:
    """Edges pairwise intersecting in a fixed (m-2)-set I."""
    if m < 4:
        raise ParameterRegimeError(f"needs m >= 4, got m={m}")
    if k < m - 1:
        raise ParameterRegimeError(f"needs k >= m - 1, got k={k}, m={m}")
    if n < k:
        raise TooFewVerticesError(f"need n >= {k}, got n={n}")
    core = tuple(range(m - 2))
    p = k - m + 2
    q, r = divmod(n - m + 2, p)
    edges = [core + tuple(range(m - 2 + i * p, m - 2 + (i + 1) * p))
             for i in range(q)]
    if r:
        fill = tuple(range(m - 2, m - 2 + p - r))
        edges.append(core + fill + tuple(range(n - r, n)))
    return make(n, k, edges)


def build_cycle_cliques_keq(m: int, n: int) -> Hypergraph:
    """Cliques of m-1 vertices glued at one vertex, for uniformity m-2,
    with remainder vertices absorbed through a fixed clique vertex."""
    k = m - 2
    if k < 3:
        raise ParameterRegimeError(f"needs m - 2 >= 3, got m={m}")
    if n < m * m:
        raise TooFewVerticesError(f"need n >= {m * m}, got n={n}")
    q, r = divmod(n - 1, m - 2)
    edges = []
    for i in range(q):
        block = (0,) + tuple(range(1 + i * (m - 2), 1 + (i + 1) * (m - 2)))
        edges.extend(combinations(block, k))
    leftover = list(range(1 + q * (m - 2), n))
    pad_pool = list(range(2, m - 1))  # first clique, minus the glue and x=1
    for j in range(0, r, k - 2):
        chunk = leftover[j:j + k - 2]
        pad = pad_pool[: k - 2 - len(chunk)]
        edges.append(tuple(sorted([0, 1] + chunk + pad)))
    return make(n, k, edges)


def build_cycle_cliques(k: int, m: int, n: int) -> Hypergraph:
    """Cliques glued at one vertex for small uniformity; the remainder
    enlarges the first few cliques by one vertex each."""
    if k < 3 or k > m - 3:
        raise ParameterRegimeError(f"needs 3 <= k <= m - 3, got k={k}, m={m}")
    order = cycle_clique_order(k, m)
    if n < order:
        raise TooFewVerticesError(f"need n >= {order}, got n={n}")
    q, r = divmod(n - 1, order - 1)
    if r > q:
        raise TooFewVerticesError(
            f"n={n} leaves {r} spare vertices for only {q} cliques")
    extra_base = 1 + q * (order - 1)
    edges = []
    for i in range(q):
        block = (0,) + tuple(range(1 + i * (order - 1), 1 + (i + 1) * (order - 1)))
        if i < r:
            block = block + (extra_base + i,)
        edges.extend(combinations(block, k))
    return make(n, k, edges)


# ----------------------------------------------------------------- stars

def build_star_tightcycle(k: int, n: int) -> Hypergraph:
    """A tight cycle on n-k+1 vertices plus k-1 isolated vertices."""
    if k < 3:
        raise ParameterRegimeError(f"needs k >= 3, got k={k}")
    if n < k * k:
        raise TooFewVerticesError(f"need n >= {k * k}, got n={n}")
    nc = n - k + 1
    edges = [tuple(sorted((i + j) % nc for j in range(k))) for i in range(nc)]
    return make(n, k, edges)


def build_star_cliques(k: int, m: int, n: int) -> Hypergraph:
    """Disjoint cliques on m vertices; a shorter final clique only when the
    remainder still has room for an edge."""
    if k < 3 or k > m - 1:
        raise ParameterRegimeError(f"needs 3 <= k <= m - 1, got k={k}, m={m}")
    q, rem = divmod(n, m)
    edges = []
    for i in range(q):
        edges.extend(combinations(range(i * m, (i + 1) * m), k))
    if rem >= k:
        edges.extend(combinations(range(q * m, n), k))
    return make(n, k, edges)


# ------------------------------------------------------------- matchings

def build_matching(k: int, l: int, n: int) -> Hypergraph:
    """l-1 pairwise disjoint edges, everything else isolated."""
    if k < 3:
        raise ParameterRegimeError(f"needs k >= 3, got k={k}")
    if l < 1:
        raise ParameterRegimeError(f"matching size must be >= 1, got {l}")
    if n < k * (l - 1):
        raise TooFewVerticesError(f"need n >= {k * (l - 1)}, got n={n}")
    edges = [tuple(range(i * k, (i + 1) * k)) for i in range(l - 1)]
    return make(n, k, edges)
