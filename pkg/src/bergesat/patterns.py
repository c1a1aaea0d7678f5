"""Simple-graph patterns for Berge containment queries.

A PatternGraph is the ordinary graph F whose Berge copies we look for.
The named families carry a kind tag so deciders can dispatch to their
specialized search; arbitrary graphs use kind "general".
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FormatError


@dataclass(frozen=True)
class PatternGraph:
    kind: str  # "path" | "cycle" | "star" | "matching" | "general"
    size: int  # m for path/cycle/star, pair count for matching, 0 for general
    nv: int
    edges: tuple
    label: str

    def __str__(self):
        return self.label


def path(m: int) -> PatternGraph:
    """P_m, the path on m vertices (m - 1 edges)."""
    if m < 1:
        raise ValueError(f"path needs m >= 1, got {m}")
    edges = tuple((i, i + 1) for i in range(m - 1))
    return PatternGraph("path", m, m, edges, f"path:{m}")


def cycle(m: int) -> PatternGraph:
    """C_m, the cycle on m vertices."""
    if m < 3:
        raise ValueError(f"cycle needs m >= 3, got {m}")
    edges = tuple((i, (i + 1) % m) for i in range(m))
    return PatternGraph("cycle", m, m, edges, f"cycle:{m}")


def star(m: int) -> PatternGraph:
    """K_{1,m}, the star with m leaves. Vertex 0 is the center."""
    if m < 1:
        raise ValueError(f"star needs m >= 1, got {m}")
    edges = tuple((0, i) for i in range(1, m + 1))
    return PatternGraph("star", m, m + 1, edges, f"star:{m}")


def matching(l: int) -> PatternGraph:
    """lK_2, the matching with l independent edges."""
    if l < 1:
        raise ValueError(f"matching needs l >= 1, got {l}")
    edges = tuple((2 * i, 2 * i + 1) for i in range(l))
    return PatternGraph("matching", l, 2 * l, edges, f"matching:{l}")


def triangle() -> PatternGraph:
    """K_3. Identical to cycle(3) up to the display label."""
    c = cycle(3)
    return PatternGraph(c.kind, c.size, c.nv, c.edges, "triangle")


def general(nv: int, edges, label: str = "general") -> PatternGraph:
    """An arbitrary simple loopless graph given by an explicit edge list."""
    if nv < 0:
        raise ValueError("vertex count must be nonnegative")
    seen = set()
    canon = []
    for e in edges:
        a, b = e
        if a == b:
            raise ValueError(f"loop edge {e} not allowed in a pattern")
        if not (0 <= a < nv and 0 <= b < nv):
            raise ValueError(f"pattern edge {e} outside range({nv})")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ValueError(f"pattern edge {e} repeated")
        seen.add(key)
        canon.append(key)
    canon.sort()
    return PatternGraph("general", 0, nv, tuple(canon), label)


def parse(spec: str) -> PatternGraph:
    """Parse a pattern spec string: path:m, cycle:m, star:m, matching:l,
    or triangle. The general:FILE form needs file access and is handled by
    the command-line layer.
    """
    if spec == "triangle":
        return triangle()
    name, sep, arg = spec.partition(":")
    if not sep:
        raise FormatError(f"bad pattern spec {spec!r}")
    if name == "general":
        raise FormatError("general:FILE patterns are resolved by the CLI")
    try:
        value = int(arg)
    except ValueError:
        raise FormatError(f"bad pattern parameter in {spec!r}") from None
    builders = {"path": path, "cycle": cycle, "star": star, "matching": matching}
    if name not in builders:
        raise FormatError(f"unknown pattern family {name!r}")
    try:
        return builders[name](value)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
