"""Brute-force reference implementations used only by the test suite.

Nothing in here imports the package under test. The containment check
enumerates every injective vertex map and every assignment of pattern
edges to distinct hyperedges, so it is slow and obviously correct.
"""

import itertools


def naive_contains(n, edges, pat_nv, pat_edges, required_index=None):
    """Decide Berge containment by full enumeration.

    n, edges:     host hypergraph (edges = sequence of vertex tuples)
    pat_nv:       number of pattern vertices
    pat_edges:    pattern edges as (a, b) pairs over range(pat_nv)
    required_index: if given, the assignment must use this hyperedge index
    """
    edge_sets = [set(e) for e in edges]
    if pat_nv > n:
        return False
    for images in itertools.permutations(range(n), pat_nv):
        if _assign_edges(images, pat_edges, edge_sets, 0, set(), required_index):
            return True
    return False


def _assign_edges(images, pat_edges, edge_sets, j, used, required_index):
    if j == len(pat_edges):
        return required_index is None or required_index in used
    a, b = pat_edges[j]
    need = {images[a], images[b]}
    for i, es in enumerate(edge_sets):
        if i in used or not need <= es:
            continue
        used.add(i)
        if _assign_edges(images, pat_edges, edge_sets, j + 1, used, required_index):
            used.discard(i)
            return True
        used.discard(i)
    return False


def naive_isomorphic(n1, edges1, n2, edges2):
    """Hypergraph isomorphism by trying every vertex permutation."""
    if n1 != n2 or len(edges1) != len(edges2):
        return False
    target = sorted(tuple(sorted(e)) for e in edges2)
    sizes1 = sorted(len(e) for e in edges1)
    sizes2 = sorted(len(e) for e in edges2)
    if sizes1 != sizes2:
        return False
    for perm in itertools.permutations(range(n1)):
        relabeled = sorted(tuple(sorted(perm[v] for v in e)) for e in edges1)
        if relabeled == target:
            return True
    return False


def all_labeled_linear_trees(k, t):
    """Every labeled k-uniform linear tree with t edges on (k-1)*t+1 vertices.

    Returned as a set of frozensets of sorted edge tuples.
    """
    n = (k - 1) * t + 1
    labeled = set()

    def grow(edges, used):
        if len(edges) == t:
            if len(used) == n:
                labeled.add(frozenset(edges))
            return
        unused = [v for v in range(n) if v not in used]
        for v in sorted(used):
            for fresh in itertools.combinations(unused, k - 1):
                e = tuple(sorted((v,) + fresh))
                # pairwise intersections stay <= 1: all other vertices of the
                # new edge are fresh, v is the single shared vertex
                grow(edges + [e], used | set(fresh))

    for first in itertools.combinations(range(n), k):
        grow([tuple(first)], set(first))
    return labeled


def naive_linear_tree_classes(k, t):
    """Count isomorphism classes of k-uniform linear trees with t edges.

    Generates every labeled linear tree, then counts orbits under the full
    symmetric group. Orbits are expanded by BFS over adjacent transpositions
    (which generate S_n), so no isomorphism heuristics are involved.
    As a side effect this also checks the labeled set is permutation-closed.
    """
    n = (k - 1) * t + 1
    labeled = all_labeled_linear_trees(k, t)
    remaining = set(labeled)
    classes = 0
    while remaining:
        seed = next(iter(remaining))
        classes += 1
        seen = {seed}
        frontier = [seed]
        while frontier:
            cur = frontier.pop()
            for i in range(n - 1):
                swapped = frozenset(
                    tuple(sorted(_swap(v, i) for v in e)) for e in cur
                )
                if swapped not in seen:
                    if swapped not in labeled:
                        raise AssertionError(
                            "labeled linear-tree set is not permutation-closed"
                        )
                    seen.add(swapped)
                    frontier.append(swapped)
        remaining -= seen
    return classes


def _swap(v, i):
    if v == i:
        return i + 1
    if v == i + 1:
        return i
    return v
