"""Closed-form edge counts and bounds, evaluated in exact integer arithmetic.

a_km(k, m) is the minimum edge count of a k-uniform linear tree (on more
than k vertices) saturated for the Berge path on m vertices. The remaining
functions evaluate the saturation-number formulas and bounds for paths,
matchings, triangles, stars, and cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import (
    OrderTooSmallError,
    ParameterRegimeError,
    TooFewVerticesError,
    UnsupportedUniformityError,
)

_KINDS = ("Exact", "LowerAndUpper", "UpperOnly")


@dataclass(frozen=True)
class Bound:
    kind: str
    lower: int | None
    upper: int | None
    source: str

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"bad bound kind {self.kind!r}")
        if self.kind == "Exact" and self.lower != self.upper:
            raise ValueError("exact bound must have lower == upper")
        if self.kind == "LowerAndUpper" and (self.lower is None or self.upper is None):
            raise ValueError("two-sided bound needs both values")
        if self.kind == "UpperOnly" and (self.lower is not None or self.upper is None):
            raise ValueError("upper-only bound carries only an upper value")
        for v in (self.lower, self.upper):
            if v is not None and v < 0:
                raise ValueError("bounds are edge counts, must be nonnegative")
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")

    @property
    def value(self):
        """The exact value; only meaningful for kind == 'Exact'."""
        if self.kind != "Exact":
            raise ValueError(f"bound of kind {self.kind} has no single value")
        return self.upper


# saturation-number families with a closed form
@dataclass(frozen=True)
class MatchingFamily:
    l: int


@dataclass(frozen=True)
class TriangleFamily:
    pass


@dataclass(frozen=True)
class StarExactFamily:
    """K_{1,k+1}, the star regime with an exact saturation number."""


@dataclass(frozen=True)
class StarUpperFamily:
    m: int


@dataclass(frozen=True)
class CycleUpperFamily:
    m: int


def _check_uniformity(k):
    if k == 5 or k < 3:
        raise UnsupportedUniformityError(
            f"path results cover k in {{3,4}} and k >= 6, not k={k}")


def a_km(k: int, m: int, construction_range: bool = False) -> int:
    """Minimum edges of a saturated linear tree for the m-vertex Berge path.

    Proven for m >= 10. With construction_range=True the m ∈ {8, 9} tree
    edge counts (k != 4) are exposed as well; they come from the same
    construction but carry no minimality claim.
    """
    _check_uniformity(k)
    if k == 4:
        if m < 10:
            raise OrderTooSmallError(f"k=4 needs m >= 10, got m={m}")
        s, r = divmod(m, 6)
        return (6 + r) * 2**s - 8
    floor_m = 8 if construction_range else 10
    if m < floor_m:
        raise OrderTooSmallError(f"k={k} needs m >= {floor_m}, got m={m}")
    if k == 3:
        s, r = divmod(m - 1, 4)
        r += 1
        return (3 + r) * 2**s - 5
    s, r = divmod(m, 4)
    if r == 0:
        return 2 ** (s + 1) + 2**s + 2 ** (s - 1) + 2 ** (s - 2) - 6
    if r == 1:
        return 2 ** (s + 2) + 2 ** (s - 1) - 6
    if r == 2:
        return 2 ** (s + 2) + 2**s - 6
    return 2 ** (s + 2) + 2 ** (s + 1) + 2 ** (s - 1) - 6


def block_size(k: int, m: int) -> int:
    """(k-1) * a_km + 1: the vertex count of one saturated tree component."""
    return (k - 1) * a_km(k, m, construction_range=True) + 1


def h_edge_count(k: int, m: int, n: int) -> int:
    """Edge count of the disjoint-copies path-saturated hypergraph on n
    vertices: ceil((n - floor(n/b)) / (k-1)) with b = block_size(k, m)."""
    b = block_size(k, m)
    if n < b:
        raise TooFewVerticesError(f"need n >= {b}, got n={n}")
    q = n // b
    return (n - q + k - 2) // (k - 1)


def sat_path_bounds(k: int, m: int, n: int, construction_range: bool = False) -> Bound:
    """Two-sided bound on the path saturation number; the gap is at most 3
    once n is clear of the first block boundary.

    construction_range has the same meaning as in a_km: it admits the
    m ∈ {8, 9} orders (k != 4), where the bounds use the construction's
    block size and the lower bound carries no proof of minimality.
    """
    a = a_km(k, m, construction_range=construction_range)
    b = (k - 1) * a + 1
    if n < b:
        raise TooFewVerticesError(f"need n >= {b}, got n={n}")
    low_num = n - (n - k + 2) // b - k + 2
    lower = (low_num + k - 2) // (k - 1)
    upper = (n - n // b + k - 2) // (k - 1)
    return Bound("LowerAndUpper", lower, upper, "path-bounds")


def cycle_clique_order(k: int, m: int) -> int:
    """Clique order for the small-k cycle construction: the least integer
    with 2*order - 1 > m, but never below k+1."""
    return max((m + 3) // 2, k + 1)


def cycle_upper_keq_exact(m: int, n: int) -> Fraction:
    """Raw rational value of the k = m-2 cycle upper bound, with the
    remainder term r/(k-2) left unrounded (audit companion to closed_form,
    which uses the ceiling the construction realizes)."""
    k = m - 2
    if k < 3:
        raise ParameterRegimeError(f"regime needs m - 2 >= 3, got m={m}")
    if n < m * m:
        raise TooFewVerticesError(f"need n >= {m * m}, got n={n}")
    q, r = divmod(n - 1, m - 2)
    return q * comb(m - 1, k) + Fraction(r, k - 2)


def closed_form(family, k: int, n: int) -> Bound:
    """Saturation-number bound for one of the closed-form families."""
    if k < 3:
        raise ParameterRegimeError(f"results need k >= 3, got k={k}")
    if isinstance(family, MatchingFamily):
        l = family.l
        if l < 1:
            raise ParameterRegimeError(f"matching size must be >= 1, got {l}")
        if n < k * (l - 1):
            raise TooFewVerticesError(f"need n >= {k * (l - 1)}, got n={n}")
        v = l - 1
        return Bound("Exact", v, v, "matching-exact")
    if isinstance(family, TriangleFamily):
        if n < k + 1:
            raise TooFewVerticesError(f"need n >= {k + 1}, got n={n}")
        v = (n - 1 + k - 2) // (k - 1)
        return Bound("Exact", v, v, "triangle-exact")
    if isinstance(family, StarExactFamily):
        if n < k * k:
            raise TooFewVerticesError(f"need n >= {k * k}, got n={n}")
        v = n - k + 1
        return Bound("Exact", v, v, "star-exact")
    if isinstance(family, StarUpperFamily):
        m = family.m
        if k > m - 1:
            raise ParameterRegimeError(f"needs k <= m - 1, got k={k}, m={m}")
        v = -(-n // m) * comb(m, k)
        return Bound("UpperOnly", None, v, "star-clique-upper")
    if isinstance(family, CycleUpperFamily):
        return _cycle_upper(family.m, k, n)
    raise TypeError(f"unknown family {family!r}")


def _cycle_upper(m, k, n):
    if m < 4:
        raise ParameterRegimeError(f"cycle results need m >= 4, got m={m}")
    if k >= m - 1:
        if n <= m * (k - m + 2) + (m - 2):
            raise TooFewVerticesError(
                f"need n > {m * (k - m + 2) + (m - 2)}, got n={n}")
        v = -(-(n - m + 2) // (k - m + 2))
        return Bound("UpperOnly", None, v, "cycle-book-upper")
    if k == m - 2:
        if n < m * m:
            raise TooFewVerticesError(f"need n >= {m * m}, got n={n}")
        q, r = divmod(n - 1, m - 2)
        v = q * comb(m - 1, k) + -(-r // (k - 2))
        return Bound("UpperOnly", None, v, "cycle-clique-upper-keq")
    # k <= m - 3
    order = cycle_clique_order(k, m)
    if n < order * order:
        raise TooFewVerticesError(f"need n >= {order * order}, got n={n}")
    q, r = divmod(n - 1, order - 1)
    v = q * comb(order, k) + r * comb(order, k - 1)
    return Bound("UpperOnly", None, v, "cycle-clique-upper")
