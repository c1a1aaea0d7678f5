"""Canonical codes for hypergraph isomorphism classes.

Two disjoint encoding schemes, selected by a property that is itself
isomorphism-invariant:

  scheme 0x01  linear trees. The vertex/edge incidence graph of a linear
               tree is an ordinary tree, so the classic rooted-tree code
               (sorted child codes, minimized over the 1 or 2 centers)
               canonicalizes it in polynomial time. This matters because
               the tree enumerator feeds highly symmetric inputs, e.g.
               sunflowers, where label search would blow up factorially.

  scheme 0x02  everything else. Lexicographically least edge-list encoding
               over all relabelings of the non-isolated vertices. Factorial
               in their number; fine for the tiny instances the exhaustive
               search visits, and guarded by the same n <= 64 cap.

The leading scheme byte keeps the two code spaces from colliding.
"""

from __future__ import annotations

import itertools

from .errors import TooLargeError
from .hypergraph import Hypergraph, is_linear_tree

_GUARD_N = 64


def canonical_code(h: Hypergraph) -> bytes:
    """A byte string equal for exactly the hypergraphs isomorphic to h."""
    if h.n > _GUARD_N:
        raise TooLargeError(
            f"canonical_code supports n <= {_GUARD_N}, got n={h.n}"
        )
    head = (
        h.n.to_bytes(1, "big")
        + h.k.to_bytes(1, "big")
        + len(h.edges).to_bytes(4, "big")
    )
    if is_linear_tree(h):
        return head + b"\x01" + _tree_code(h)
    return head + b"\x02" + _least_edge_code(h)


def _tree_code(h: Hypergraph) -> bytes:
    t = len(h.edges)
    if t == 0:
        return b""  # single vertex, fully described by the header
    n = h.n
    size = n + t
    adj = [[] for _ in range(size)]
    for j, e in enumerate(h.edges):
        ej = n + j
        for v in e:
            adj[v].append(ej)
            adj[ej].append(v)
    return min(_rooted_code(adj, root, -1, n) for root in _tree_centers(adj))


def _tree_centers(adj) -> list:
    size = len(adj)
    if size == 1:
        return [0]
    deg = [len(a) for a in adj]
    layer = [u for u in range(size) if deg[u] == 1]
    alive = size
    while alive > 2:
        nxt = []
        for u in layer:
            alive -= 1
            for w in adj[u]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def _rooted_code(adj, u, parent, n) -> bytes:
    kids = sorted(_rooted_code(adj, w, u, n) for w in adj[u] if w != parent)
    tag = b"\x10" if u < n else b"\x20"  # vertex node vs edge node
    return tag + b"(" + b"".join(kids) + b")"


def _least_edge_code(h: Hypergraph) -> bytes:
    if not h.edges:
        return b""
    deg = h.degrees
    active = [v for v in range(h.n) if deg[v] > 0]
    best = None
    for perm in itertools.permutations(range(len(active))):
        lab = dict(zip(active, perm))
        enc = sorted(tuple(sorted(lab[v] for v in e)) for e in h.edges)
        if best is None or enc < best:
            best = enc
    return bytes(v for e in best for v in e)
