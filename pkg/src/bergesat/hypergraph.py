"""Core k-uniform hypergraph value type and basic structure predicates."""

from __future__ import annotations

import itertools
from math import comb
from typing import Iterator

from .errors import (
    DuplicateEdgeError,
    EdgeWrongSizeError,
    VertexOutOfRangeError,
)


class Hypergraph:
    """Immutable k-uniform hypergraph on vertex set {0, ..., n-1}.

    Edges are sorted vertex tuples kept in lexicographic order, so two equal
    hypergraphs compare equal structurally. Isolated vertices are implicit:
    n may exceed the number of vertices that appear in any edge. Derived
    views (degrees, incidence lists) are computed lazily and cached; the
    caches are private and idempotent, so sharing instances across threads
    is safe.

    Construct through make(); the constructor itself trusts its arguments.
    """

    __slots__ = ("n", "k", "edges", "_edge_set", "_degrees", "_incidence")

    def __init__(self, n: int, k: int, edges: tuple):
        self.n = n
        self.k = k
        self.edges = edges
        self._edge_set = None
        self._degrees = None
        self._incidence = None

    @property
    def edge_set(self) -> frozenset:
        if self._edge_set is None:
            self._edge_set = frozenset(self.edges)
        return self._edge_set

    @property
    def degrees(self) -> tuple:
        if self._degrees is None:
            deg = [0] * self.n
            for e in self.edges:
                for v in e:
                    deg[v] += 1
            self._degrees = tuple(deg)
        return self._degrees

    @property
    def incidence(self) -> tuple:
        """incidence[v] = tuple of indices of edges containing vertex v."""
        if self._incidence is None:
            inc = [[] for _ in range(self.n)]
            for i, e in enumerate(self.edges):
                for v in e:
                    inc[v].append(i)
            self._incidence = tuple(tuple(x) for x in inc)
        return self._incidence

    def with_edge(self, e) -> "Hypergraph":
        """A new hypergraph with one additional edge (re-validated)."""
        return make(self.n, self.k, self.edges + (tuple(e),))

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.n, self.k, self.edges) == (other.n, other.k, other.edges)

    def __hash__(self):
        return hash((self.n, self.k, self.edges))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, k={self.k}, edges={len(self.edges)})"


def make(n: int, k: int, edges) -> Hypergraph:
    """Validate and canonicalize the description of a k-uniform hypergraph.

    Rejects malformed input rather than repairing it: an edge with the wrong
    number of distinct vertices raises EdgeWrongSizeError, a vertex id
    outside range(n) raises VertexOutOfRangeError, and a repeated vertex set
    raises DuplicateEdgeError.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"vertex count must be a nonnegative integer, got {n!r}")
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise ValueError(f"uniformity must be an integer >= 2, got {k!r}")

    canon = []
    for e in edges:
        t = tuple(sorted(e))
        if len(t) != k or len(set(t)) != k:
            raise EdgeWrongSizeError(
                f"edge {t} does not have exactly {k} distinct vertices"
            )
        if t[0] < 0 or t[-1] >= n:
            raise VertexOutOfRangeError(
                f"edge {t} mentions a vertex outside range({n})"
            )
        canon.append(t)
    canon.sort()
    for a, b in zip(canon, canon[1:]):
        if a == b:
            raise DuplicateEdgeError(f"edge {a} appears more than once")
    return Hypergraph(n, k, tuple(canon))


def complement_edges(h: Hypergraph) -> Iterator[tuple]:
    """Yield every k-subset of range(n) that is not an edge, in lex order."""
    present = h.edge_set
    for c in itertools.combinations(range(h.n), h.k):
        if c not in present:
            yield c


def complement_count(h: Hypergraph) -> int:
    return comb(h.n, h.k) - len(h.edges)


def is_linear_tree(h: Hypergraph) -> bool:
    """True iff h is connected, pairwise edge intersections have size <= 1,
    and n = (k-1)|E| + 1.

    The edgeless hypergraph qualifies only for n = 1 (a single vertex is a
    trivial tree; anything larger is disconnected or has the wrong count).
    """
    t = len(h.edges)
    if t == 0:
        return h.n == 1
    if h.n != (h.k - 1) * t + 1:
        return False

    seen_pairs = set()
    for e in h.edges:
        for p in itertools.combinations(e, 2):
            if p in seen_pairs:
                return False
            seen_pairs.add(p)

    # connectivity over the full vertex set via union-find
    parent = list(range(h.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in h.edges:
        r = find(e[0])
        for v in e[1:]:
            rv = find(v)
            if rv != r:
                parent[rv] = r
    roots = {find(v) for v in range(h.n)}
    return len(roots) == 1


def leaf_edges(h: Hypergraph) -> tuple:
    """Indices of edges with at least k-1 vertices of degree 1."""
    deg = h.degrees
    out = []
    for i, e in enumerate(h.edges):
        ones = sum(1 for v in e if deg[v] == 1)
        if ones >= h.k - 1:
            out.append(i)
    return tuple(out)
