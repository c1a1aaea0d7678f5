"""Brute-force ground truth on tiny instances.

Everything here recomputes quantities the rest of the package produces
by construction or closed form, using nothing but exhaustive search, so
the two sides can be compared in tests. Guards are hard errors; a
result that comes back always covers its whole search space.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional

from .canon import canonical_code
from .errors import ParameterRegimeError, TooLargeError
from .hypergraph import Hypergraph, make
from .patterns import PatternGraph, path
from .satcheck import is_berge_saturated

_MAX_TREE_EDGES = 8
_MAX_COMPLEMENT = 20


@dataclass(frozen=True)
class SearchResult:
    """minimum is None when the searched space holds no saturated object.
    examined counts isomorphism classes actually run through the
    saturation check. exhausted is always True; partial searches are
    impossible by design (guards raise instead)."""

    minimum: Optional[int]
    witness: Optional[Hypergraph]
    examined: int
    exhausted: bool


def enumerate_linear_trees(k: int, t: int) -> list:
    """All linear trees with t edges, one representative per isomorphism
    class, sorted by canonical code. Grown one pendant edge at a time;
    a pendant edge meets the existing tree in exactly one vertex."""
    if k < 3:
        raise ParameterRegimeError(f"needs k >= 3, got k={k}")
    if t < 1:
        raise ParameterRegimeError(f"needs t >= 1, got t={t}")
    if t > _MAX_TREE_EDGES:
        raise TooLargeError(
            f"tree enumeration is capped at {_MAX_TREE_EDGES} edges, got t={t}")
    level = {canonical_code(make(k, k, [tuple(range(k))])):
             make(k, k, [tuple(range(k))])}
    for _ in range(t - 1):
        grown = {}
        for h in level.values():
            fresh = tuple(range(h.n, h.n + k - 1))
            for v in range(h.n):
                h2 = make(h.n + k - 1, k, h.edges + ((v,) + fresh,))
                code = canonical_code(h2)
                if code not in grown:
                    grown[code] = h2
        level = grown
    return [level[c] for c in sorted(level)]


def min_saturated_tree(k: int, m: int, max_edges: int) -> SearchResult:
    """Least edge count of a linear tree on more than k vertices that is
    saturated for the Berge path on m vertices, by checking every class
    with up to max_edges edges."""
    examined = 0
    for t in range(1, max_edges + 1):
        for h in enumerate_linear_trees(k, t):
            if h.n < k + 1:
                continue
            examined += 1
            if is_berge_saturated(h, path(m)).saturated:
                return SearchResult(t, h, examined, True)
    return SearchResult(None, None, examined, True)


def sat_exhaustive(k: int, n: int, f: PatternGraph) -> SearchResult:
    """Exact saturation number on n vertices by scanning all hypergraphs
    in increasing edge count; the first saturated hit is minimal. One
    saturation check per isomorphism class."""
    slots = comb(n, k)
    if slots > _MAX_COMPLEMENT:
        raise TooLargeError(
            f"full scan needs C(n,k) <= {_MAX_COMPLEMENT}, got {slots}")
    allsets = list(combinations(range(n), k))
    examined = 0
    for count in range(slots + 1):
        seen = set()
        for pick in combinations(allsets, count):
            h = make(n, k, pick)
            code = canonical_code(h)
            if code in seen:
                continue
            seen.add(code)
            examined += 1
            if is_berge_saturated(h, f).saturated:
                return SearchResult(count, h, examined, True)
    return SearchResult(None, None, examined, True)
