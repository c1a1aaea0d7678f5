"""Berge containment deciders with checkable embeddings.

A Berge copy of a simple graph F in a hypergraph H is an injective map of
V(F) into V(H) together with a bijection from E(F) onto distinct hyperedges,
each hyperedge containing the images of its graph edge's endpoints. Every
positive answer here carries such an embedding, and verify_embedding
re-checks one from scratch.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from . import _kernels_py as K
from .hypergraph import Hypergraph
from .patterns import PatternGraph, cycle, matching, star


@dataclass(frozen=True)
class BergeEmbedding:
    """vertex_map[i] is the host vertex for pattern vertex i; edge_map[j] is
    the host edge index for pattern edge j."""

    vertex_map: tuple
    edge_map: tuple


def _required_index(h: Hypergraph, required_edge):
    if required_edge is None:
        return None
    key = tuple(sorted(required_edge))
    if key not in h.edge_set:
        raise ValueError(f"required edge {key} is not an edge of the hypergraph")
    return bisect.bisect_left(h.edges, key)


def contains_berge(h: Hypergraph, f: PatternGraph, required_edge=None):
    """Embedding of a Berge-f in h, or None. With required_edge (which must
    be an edge of h) the embedding is forced to use that hyperedge."""
    req = _required_index(h, required_edge)
    return _contains_by_index(h, f, req)


def _contains_by_index(h: Hypergraph, f: PatternGraph, req):
    n, edges, inc = h.n, h.edges, h.incidence
    if f.kind == "path":
        got = K.find_path(n, edges, inc, f.size, req)
        if got is None:
            return None
        vs, es = got
        return BergeEmbedding(tuple(vs), tuple(es))
    if f.kind == "cycle":
        got = K.find_cycle(n, edges, inc, f.size, req)
        if got is None:
            return None
        vs, es = got
        return BergeEmbedding(tuple(vs), tuple(es))
    if f.kind == "star":
        got = K.find_star(n, edges, inc, f.size, req)
        if got is None:
            return None
        c, leaves, es = got
        return BergeEmbedding((c, *leaves), tuple(es))
    if f.kind == "matching":
        got = K.find_matching(n, edges, inc, f.size, req)
        if got is None:
            return None
        pairs, es = got
        flat = tuple(v for pair in pairs for v in pair)
        return BergeEmbedding(flat, tuple(es))
    got = K.find_general(n, edges, inc, f.nv, f.edges, req)
    if got is None:
        return None
    vmap, emap = got
    return BergeEmbedding(tuple(vmap), tuple(emap))


def verify_embedding(h: Hypergraph, f: PatternGraph, emb: BergeEmbedding) -> bool:
    """True iff emb is a valid Berge-f embedding in h. Never raises; any
    malformed field just yields False."""
    vm, em = emb.vertex_map, emb.edge_map
    if len(vm) != f.nv or len(em) != len(f.edges):
        return False
    if len(set(vm)) != len(vm) or len(set(em)) != len(em):
        return False
    if any(not (0 <= v < h.n) for v in vm):
        return False
    ne = len(h.edges)
    if any(not (0 <= i < ne) for i in em):
        return False
    for j, (a, b) in enumerate(f.edges):
        host = h.edges[em[j]]
        if vm[a] not in host or vm[b] not in host:
            return False
    return True


def longest_berge_path(h: Hypergraph, required_edge=None, start_vertex=None):
    """(t, embedding) where t is the edge count of a longest Berge path in h,
    restricted to paths through required_edge and/or starting at start_vertex
    when given. Returns (0, None) when no qualifying path exists (n = 0, or
    the restrictions are unsatisfiable)."""
    req = _required_index(h, required_edge)
    if start_vertex is not None and not (0 <= start_vertex < h.n):
        raise ValueError(f"start vertex {start_vertex} out of range({h.n})")
    t, witness = K.longest_path(h.n, h.edges, h.incidence, req, start_vertex)
    if witness is None:
        return (0, None)
    vs, es = witness
    return (t, BergeEmbedding(tuple(vs), tuple(es)))


def contains_berge_cycle(h: Hypergraph, m: int):
    return contains_berge(h, cycle(m))


def contains_berge_star(h: Hypergraph, m: int):
    return contains_berge(h, star(m))


def contains_berge_matching(h: Hypergraph, l: int):
    return contains_berge(h, matching(l))
