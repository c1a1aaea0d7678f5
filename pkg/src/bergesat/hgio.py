"""Text formats: hypergraph files and structured report documents.

The hypergraph file is line-oriented so fixtures diff cleanly: a header
line "n k", then one line per edge holding k ascending vertex ids
joined by single spaces, edge lines in increasing lexicographic order,
full-line '#' comments allowed anywhere, trailing newline required.
Parsing is strict; anything off-grammar is a FormatError, and anything
the in-memory validator rejects stays rejected here.

Report documents are JSON with sorted keys. They deliberately omit
wall time and worker counts, so two runs that compute the same answer
produce identical bytes.
"""

from __future__ import annotations

import json
import re

from . import __version__
from .berge import BergeEmbedding
from .errors import FormatError
from .hypergraph import Hypergraph, make

_ID = re.compile(r"^(0|[1-9][0-9]*)$")


def _ids(line, expect, what):
    parts = line.split(" ")
    if len(parts) != expect:
        raise FormatError(f"{what}: expected {expect} fields, got {len(parts)}")
    for p in parts:
        if not _ID.match(p):
            raise FormatError(f"{what}: bad integer {p!r}")
    return tuple(int(p) for p in parts)


def parse_hypergraph(text: str) -> Hypergraph:
    if not text.endswith("\n"):
        raise FormatError("missing trailing newline")
    lines = [ln for ln in text.split("\n")[:-1] if not ln.startswith("#")]
    if not lines:
        raise FormatError("missing header line")
    n, k = _ids(lines[0], 2, "header")
    edges = []
    prev = None
    for ln in lines[1:]:
        e = _ids(ln, k, "edge line")
        if any(e[i] >= e[i + 1] for i in range(len(e) - 1)):
            raise FormatError(f"edge line {ln!r}: vertex ids must be ascending")
        if prev is not None and e <= prev:
            raise FormatError(
                f"edge line {ln!r}: lines must be in increasing lexicographic order")
        prev = e
        edges.append(e)
    return make(n, k, edges)


def serialize_hypergraph(h: Hypergraph) -> str:
    out = [f"{h.n} {h.k}"]
    out.extend(" ".join(map(str, e)) for e in h.edges)
    return "\n".join(out) + "\n"


def load_hypergraph(path) -> Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse_hypergraph(fh.read())


def save_hypergraph(h: Hypergraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_hypergraph(h))


# ------------------------------------------------------------- reports

def hypergraph_payload(h: Hypergraph) -> dict:
    return {"n": h.n, "k": h.k, "edges": [list(e) for e in h.edges]}


def saturation_payload(rep) -> dict:
    """JSON-ready view of a SaturationReport. Wall time is dropped on
    purpose; everything else re-verifies offline."""
    if rep.violation is None:
        violation = None
    elif isinstance(rep.violation, BergeEmbedding):
        violation = {
            "type": "embedding",
            "vertex_map": list(rep.violation.vertex_map),
            "edge_map": list(rep.violation.edge_map),
        }
    else:
        violation = {"type": "non-edge", "vertices": list(rep.violation)}
    return {
        "free": rep.free,
        "saturated": rep.saturated,
        "scanned": rep.scanned,
        "violation": violation,
    }


def search_payload(res) -> dict:
    return {
        "minimum": res.minimum,
        "examined": res.examined,
        "exhausted": res.exhausted,
        "witness": None if res.witness is None else hypergraph_payload(res.witness),
    }


def bound_payload(b) -> dict:
    return {"kind": b.kind, "lower": b.lower, "upper": b.upper, "source": b.source}


def report_document(kind: str, params: dict, payload: dict) -> str:
    doc = {
        "schema": "bergesat-report/1",
        "tool": {"name": "bergesat", "version": __version__},
        "kind": kind,
        "params": params,
        "result": payload,
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
