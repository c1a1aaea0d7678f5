"""Scan backend selection.

The complement scan exists twice: the pure-Python reference in
_kernels_py and an optional compiled module (_kernels_cy) built at
install time. The compiled scan covers the fixed-shape pattern kinds
(path, cycle, star, matching) on hosts with at most 128 vertices and at
most 63 edges; anything outside that envelope routes to the pure scan.

Set BERGESAT_KERNELS=py to force the pure scan everywhere, or
BERGESAT_KERNELS=c to insist on the compiled one (an error if the
extension is not built). Single containment queries never go through
here; only the bulk scan is worth compiling.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    from . import _kernels_cy
except ImportError:
    _kernels_cy = None

_COMPILED_KINDS = {"path": 1, "cycle": 2, "star": 3, "matching": 4}

MAX_C_VERTICES = 128
MAX_C_EDGES = 63  # existing edges; the trial edge needs one more mask bit


def has_compiled() -> bool:
    return _kernels_cy is not None


def default_backend() -> str:
    """'c' when the extension is importable, unless BERGESAT_KERNELS says
    otherwise."""
    forced = os.environ.get("BERGESAT_KERNELS", "")
    if forced == "py":
        return "py"
    if forced == "c":
        if _kernels_cy is None:
            raise ImportError(
                "BERGESAT_KERNELS=c but the compiled scan is not built")
        return "c"
    if forced:
        raise ValueError(
            f"BERGESAT_KERNELS must be 'c' or 'py', got {forced!r}")
    return "c" if _kernels_cy is not None else "py"


def resolve_backend(n, n_edges, pattern, backend=None) -> str:
    """The backend a scan over this host and pattern will actually use."""
    if backend is None:
        backend = default_backend()
    if backend == "c" and (
        pattern.kind not in _COMPILED_KINDS
        or n > MAX_C_VERTICES
        or n_edges > MAX_C_EDGES
    ):
        return "py"
    return backend


def scan_chunk(n, k, base_edges, pattern, lo, hi, edge_ranks, backend=None):
    """Route one scan window to the resolved backend. Same contract as
    _kernels_py.scan_chunk."""
    b = resolve_backend(n, len(base_edges), pattern, backend)
    if b == "c":
        return _kernels_cy.scan_chunk(
            n, k, base_edges, _COMPILED_KINDS[pattern.kind], pattern.size,
            lo, hi, edge_ranks)
    return _kernels_py.scan_chunk(n, k, base_edges, pattern, lo, hi, edge_ranks)
