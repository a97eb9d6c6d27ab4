"""graph6 and JSON-lines graph documents.

A document is one JSON object per line::

    {"n": 4, "edges": [[0, 1], ...], "scheme": [[[e, side], ...], ...],
     "faces": [[[e, side], ...], ...], "labels": [...], "name": "..."}

Only ``n`` and ``edges`` are required.  :func:`dumps_document` writes keys in
sorted order with no whitespace, so equal inputs give byte-identical lines.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

from .errors import GraphError
from .graph import Arc, MultiGraph, is_simple
from .maps import CombMap, map_from_walks
from .schemes import DihedralScheme

__all__ = [
    "ParseError",
    "GraphDocument",
    "to_graph6",
    "from_graph6",
    "dumps_document",
    "loads_document",
    "parse_line",
    "read_documents",
    "write_documents",
]

_HEADER = ">>graph6<<"


class ParseError(ValueError):
    """Malformed graph6 or document input."""


@dataclass(frozen=True, eq=False)
class GraphDocument:
    graph: MultiGraph
    scheme: DihedralScheme | None = None
    map: CombMap | None = None
    name: str | None = None

    @classmethod
    def of(cls, obj, name: str | None = None) -> "GraphDocument":
        if isinstance(obj, GraphDocument):
            return obj
        if isinstance(obj, CombMap):
            return cls(obj.graph, obj.scheme, obj, name)
        return cls(obj, None, None, name)


# graph6 ----------------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: MultiGraph) -> str:
    """graph6 encoding of a simple graph (no header, no newline)."""
    if not is_simple(g):
        raise GraphError("graph6 holds simple graphs only; use the document format")
    nbrs = [set(a) for a in g.adjacency()]
    bits = [1 if i in nbrs[j] else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6))
    return _encode_n(g.n) + body


def from_graph6(line: str) -> MultiGraph:
    s = line.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise ParseError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(x < 0 or x > 63 for x in data):
        raise ParseError("graph6 string has characters outside the printable range")
    if data[0] != 63:
        n, rest = data[0], data[1:]
    elif len(data) > 1 and data[1] == 63:
        if len(data) < 8:
            raise ParseError("truncated graph6 size header")
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        rest = data[8:]
    else:
        if len(data) < 4:
            raise ParseError("truncated graph6 size header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    need = n * (n - 1) // 2
    if len(rest) != (need + 5) // 6:
        raise ParseError(f"graph6 body has {len(rest)} bytes, expected {(need + 5) // 6}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (rest[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return MultiGraph(n, edges)


# documents ---------------------------------------------------------------------


def _label_json(x):
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    return str(x)


def dumps_document(doc) -> str:
    doc = GraphDocument.of(doc)
    g = doc.graph
    obj: dict = {"n": g.n, "edges": [list(e) for e in g.ends]}
    if doc.scheme is not None:
        obj["scheme"] = [[[a.edge, a.side] for a in doc.scheme.rotation(u)] for u in range(g.n)]
    if doc.map is not None:
        obj["faces"] = [[[a.edge, a.side] for a in f] for f in doc.map.faces]
    if g.labels is not None:
        obj["labels"] = [_label_json(x) for x in g.labels]
    if doc.name:
        obj["name"] = doc.name
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _arcs(raw, what) -> list[Arc]:
    try:
        return [Arc(int(e), int(s)) for e, s in raw]
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{what}: arcs must be [edge, side] pairs") from exc


def loads_document(text: str) -> GraphDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ParseError("a document needs 'n' and 'edges'")
    try:
        n = int(obj["n"])
        edges = [(int(u), int(v)) for u, v in obj["edges"]]
    except (TypeError, ValueError) as exc:
        raise ParseError("'n' must be an integer and 'edges' a list of pairs") from exc
    labels = obj.get("labels")
    try:
        g = MultiGraph(n, edges, labels)
        scheme = None
        cmap = None
        if obj.get("faces") is not None:
            cmap = map_from_walks(g, [_arcs(f, "faces") for f in obj["faces"]])
            scheme = cmap.scheme
        if obj.get("scheme") is not None:
            scheme = DihedralScheme(g, [_arcs(r, "scheme") for r in obj["scheme"]])
    except (GraphError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc
    return GraphDocument(g, scheme, cmap, obj.get("name"))


def parse_line(line: str) -> GraphDocument:
    s = line.strip()
    if s.startswith("{"):
        return loads_document(s)
    try:
        return GraphDocument(from_graph6(s))
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def read_documents(stream: TextIO) -> Iterator[GraphDocument]:
    """Documents or graph6 lines from a text stream; blank and ``#`` lines skip."""
    for lineno, line in enumerate(stream, 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            yield parse_line(s)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc


def write_documents(docs: Iterable, stream: TextIO, fmt: str = "doc") -> None:
    for d in docs:
        d = GraphDocument.of(d)
        stream.write((to_graph6(d.graph) if fmt == "graph6" else dumps_document(d)) + "\n")
