"""Multigraphs with first-class arcs.

Vertices are the integers ``0..n-1``.  Edges are stored as an ordered list of
endpoint pairs; the position in that list is the edge id.  A pair with equal
entries is a loop, and repeated pairs are parallel edges.  Every edge carries
two mutually inverse arcs, ``Arc(e, 0)`` leaving ``ends[e][0]`` and
``Arc(e, 1)`` leaving ``ends[e][1]``, so a loop contributes two arcs (and 2 to
the valence) at its vertex.

Graphs are immutable once built.
"""

from __future__ import annotations

from collections import Counter, deque
from typing import Iterable, NamedTuple, Sequence

from .errors import GraphError

__all__ = [
    "Arc",
    "MultiGraph",
    "build_graph",
    "simple_graph",
    "out_arcs",
    "reverse_arc",
    "tail",
    "head",
    "predicates",
    "disjoint_union",
]


class Arc(NamedTuple):
    """One orientation of an edge; ``side`` selects the tail endpoint."""

    edge: int
    side: int

    @property
    def index(self) -> int:
        return 2 * self.edge + self.side

    @classmethod
    def from_index(cls, i: int) -> "Arc":
        return cls(i >> 1, i & 1)


class MultiGraph:
    """Immutable multigraph on vertices ``0..n-1``."""

    __slots__ = ("n", "ends", "_out", "_labels", "_hash")

    def __init__(self, n: int, ends: Sequence[tuple[int, int]], labels=None):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        cleaned = []
        for i, pair in enumerate(ends):
            u, v = (int(x) for x in pair)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {i} has an endpoint outside 0..{n - 1}: {pair!r}")
            cleaned.append((u, v))
        self.n = n
        self.ends = tuple(cleaned)
        out: list[list[Arc]] = [[] for _ in range(n)]
        for e, (u, v) in enumerate(self.ends):
            out[u].append(Arc(e, 0))
            out[v].append(Arc(e, 1))
        self._out = tuple(tuple(a) for a in out)
        if labels is not None and len(labels) != n:
            raise GraphError("label list length differs from vertex count")
        self._labels = tuple(labels) if labels is not None else None
        self._hash = None

    # basic accessors -----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.ends)

    @property
    def labels(self):
        """Optional per-vertex labels (e.g. group elements); never structural."""
        return self._labels

    def arcs(self) -> list[Arc]:
        return [Arc(e, s) for e in range(self.m) for s in (0, 1)]

    def out(self, u: int) -> tuple[Arc, ...]:
        return self._out[u]

    def degree(self, u: int) -> int:
        return len(self._out[u])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._out]

    def tail(self, a: Arc) -> int:
        return self.ends[a.edge][a.side]

    def head(self, a: Arc) -> int:
        return self.ends[a.edge][1 - a.side]

    def neighbors(self, u: int) -> list[int]:
        """Heads of the arcs leaving ``u``, with multiplicity."""
        return [self.head(a) for a in self._out[u]]

    def adjacency(self) -> list[list[int]]:
        return [self.neighbors(u) for u in range(self.n)]

    def edge_between(self, u: int, v: int) -> int:
        """Id of some edge joining ``u`` and ``v``; raises KeyError if none."""
        for a in self._out[u]:
            if self.head(a) == v:
                return a.edge
        raise KeyError((u, v))

    def edge_set(self) -> Counter:
        """Multiset of endpoint pairs, each pair sorted."""
        return Counter(tuple(sorted(p)) for p in self.ends)

    def relabel(self, perm: Sequence[int]) -> "MultiGraph":
        """Graph with vertex ``v`` renamed ``perm[v]``; edge order is kept."""
        return MultiGraph(self.n, [(perm[u], perm[v]) for u, v in self.ends])

    def without_labels(self) -> "MultiGraph":
        return MultiGraph(self.n, self.ends)

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.n == other.n and self.ends == other.ends

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.ends))
        return self._hash

    def __repr__(self):
        return f"MultiGraph(n={self.n}, m={self.m})"


def build_graph(n: int, endpoints: Iterable[tuple[int, int]], labels=None) -> MultiGraph:
    """Build a multigraph; edge ids follow the order of ``endpoints``."""
    return MultiGraph(n, list(endpoints), labels)


def simple_graph(n: int, pairs: Iterable[tuple[int, int]], labels=None) -> MultiGraph:
    """Build a graph from pairs, dropping duplicates in either orientation."""
    seen = set()
    ends = []
    for u, v in pairs:
        key = (min(u, v), max(u, v))
        if key not in seen:
            seen.add(key)
            ends.append(key)
    return MultiGraph(n, ends, labels)


def out_arcs(g: MultiGraph, u: int) -> list[Arc]:
    if not 0 <= u < g.n:
        raise GraphError(f"vertex {u} out of range")
    return list(g.out(u))


def reverse_arc(s: Arc) -> Arc:
    return Arc(s.edge, 1 - s.side)


def tail(g: MultiGraph, s: Arc) -> int:
    return g.tail(s)


def head(g: MultiGraph, s: Arc) -> int:
    return g.head(s)


def is_simple(g: MultiGraph) -> bool:
    seen = set()
    for u, v in g.ends:
        if u == v:
            return False
        key = (u, v) if u < v else (v, u)
        if key in seen:
            return False
        seen.add(key)
    return True


def is_connected(g: MultiGraph) -> bool:
    if g.n == 0:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.n


def components(g: MultiGraph) -> list[list[int]]:
    comp = [-1] * g.n
    out = []
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        comp[s] = len(out)
        part = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if comp[w] < 0:
                    comp[w] = comp[s]
                    part.append(w)
                    queue.append(w)
        out.append(sorted(part))
    return out


def regular_degree(g: MultiGraph):
    """The common valence, or ``None`` when the graph is not regular."""
    degs = set(g.degrees())
    if len(degs) == 1:
        return degs.pop()
    if not degs:
        return 0
    return None


def is_regular(g: MultiGraph, k: int) -> bool:
    return all(d == k for d in g.degrees())


def predicates(g: MultiGraph) -> dict:
    return {
        "is_simple": is_simple(g),
        "is_connected": is_connected(g),
        "degree": regular_degree(g),
    }


def disjoint_union(*graphs: MultiGraph) -> MultiGraph:
    ends = []
    offset = 0
    for h in graphs:
        ends.extend((u + offset, v + offset) for u, v in h.ends)
        offset += h.n
    return MultiGraph(offset, ends)
