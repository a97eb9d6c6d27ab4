"""Dihedral schemes, truncation and its inverse.

A dihedral scheme arranges the arcs leaving each vertex into a non-oriented
cycle.  It is stored as one cyclic arc sequence per vertex; reversing or
rotating a sequence gives the same scheme.
"""

from __future__ import annotations

import random
from typing import NamedTuple, Sequence

from .errors import GraphError, PreconditionError
from .girth import edge_girth_counts, girth, girth_cycles, graph_signature
from .graph import Arc, MultiGraph, regular_degree, simple_graph

__all__ = [
    "DihedralScheme",
    "scheme_from_rotations",
    "arbitrary_scheme",
    "random_scheme",
    "truncate",
    "Contraction",
    "contract_girth_cycles",
]


def _canonical_cycle(seq: Sequence[int]) -> tuple:
    """Least rotation of ``seq`` or of its reverse."""
    k = len(seq)
    if k == 0:
        return ()
    best = None
    for s in (list(seq), list(reversed(seq))):
        for i in range(k):
            r = tuple(s[i:] + s[:i])
            if best is None or r < best:
                best = r
    return best


class DihedralScheme:
    """Cyclic arrangement of ``out(u)`` for every vertex ``u``."""

    __slots__ = ("graph", "_rot", "_pos")

    def __init__(self, graph: MultiGraph, rotations: Sequence[Sequence[Arc]]):
        if len(rotations) != graph.n:
            raise GraphError("one arc sequence per vertex is required")
        rot = []
        for u, seq in enumerate(rotations):
            seq = tuple(Arc(*a) for a in seq)
            if len(seq) < 3:
                raise GraphError(f"vertex {u} has valence {len(seq)}; a dihedral scheme needs at least 3")
            if sorted(seq) != sorted(graph.out(u)):
                raise GraphError(f"sequence at vertex {u} is not a permutation of its out-arcs")
            rot.append(seq)
        self.graph = graph
        self._rot = tuple(rot)
        pos = {}
        for seq in rot:
            for i, a in enumerate(seq):
                pos[a] = i
        self._pos = pos

    def rotation(self, u: int) -> tuple[Arc, ...]:
        return self._rot[u]

    @property
    def rotations(self) -> tuple:
        return self._rot

    def neighbours(self, a: Arc) -> tuple[Arc, Arc]:
        """The two arcs related to ``a`` by the scheme."""
        seq = self._rot[self.graph.tail(a)]
        i = self._pos[a]
        return seq[i - 1], seq[(i + 1) % len(seq)]

    def related(self, a: Arc, b: Arc) -> bool:
        return b in self.neighbours(a)

    def distance(self, a: Arc, b: Arc) -> int:
        """Steps between two arcs with a common tail along the cyclic order."""
        seq = self._rot[self.graph.tail(a)]
        if self.graph.tail(b) != self.graph.tail(a):
            raise ValueError("arcs have different tails")
        d = abs(self._pos[a] - self._pos[b])
        return min(d, len(seq) - d)

    def relation(self) -> set:
        """The scheme as a set of unordered arc pairs."""
        rel = set()
        for seq in self._rot:
            k = len(seq)
            for i in range(k):
                a, b = seq[i], seq[(i + 1) % k]
                rel.add((min(a, b), max(a, b)))
        return rel

    def key(self) -> tuple:
        return tuple(_canonical_cycle([a.index for a in seq]) for seq in self._rot)

    def __eq__(self, other):
        if not isinstance(other, DihedralScheme):
            return NotImplemented
        return self.graph == other.graph and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"DihedralScheme({self.graph!r})"


def scheme_from_rotations(g: MultiGraph, orders: Sequence[Sequence]) -> DihedralScheme:
    return DihedralScheme(g, orders)


def arbitrary_scheme(g: MultiGraph) -> DihedralScheme:
    """The scheme listing each ``out(u)`` in arc order."""
    return DihedralScheme(g, [g.out(u) for u in range(g.n)])


def random_scheme(g: MultiGraph, rng: random.Random) -> DihedralScheme:
    rots = []
    for u in range(g.n):
        seq = list(g.out(u))
        rng.shuffle(seq)
        rots.append(seq)
    return DihedralScheme(g, rots)


def truncate(g: MultiGraph, scheme: DihedralScheme) -> MultiGraph:
    """Tr(g, scheme): vertices are the arcs of ``g`` (arc ``Arc(e, s)`` is
    vertex ``2e + s``), adjacent when scheme-related or mutually inverse.

    Edges are listed inverse pairs first (edge ``e`` joins ``2e`` and
    ``2e + 1``), then the cycle replacing each vertex of ``g``.  A loop whose
    two arcs are scheme neighbours would merge two adjacencies and leave a
    vertex of valence 2, so that is rejected.
    """
    if scheme.graph != g:
        raise GraphError("scheme belongs to a different graph")
    for e, (u, v) in enumerate(g.ends):
        if u == v and scheme.distance(Arc(e, 0), Arc(e, 1)) == 1:
            raise GraphError(f"the arcs of loop {e} are neighbours in the scheme")
    pairs = [(2 * e, 2 * e + 1) for e in range(g.m)]
    for u in range(g.n):
        seq = scheme.rotation(u)
        k = len(seq)
        for i in range(k):
            pairs.append((seq[i].index, seq[(i + 1) % k].index))
    labels = [Arc.from_index(i) for i in range(2 * g.m)]
    return simple_graph(2 * g.m, pairs, labels=labels)


class Contraction(NamedTuple):
    """Base graph and scheme recovered from a (0,1,1) graph.

    ``arc_vertex[a.index]`` is the vertex of the input graph that plays the
    role of base arc ``a`` in the truncation.
    """

    base: MultiGraph
    scheme: DihedralScheme
    arc_vertex: tuple


def contract_girth_cycles(g: MultiGraph) -> Contraction:
    """Invert truncation for a cubic graph with signature (0, 1, 1).

    Each girth cycle becomes a vertex, each edge on no girth cycle becomes an
    edge (loops and parallel edges kept), and the order of a girth cycle gives
    the scheme at its vertex.  Then ``truncate(base, scheme)`` is isomorphic
    to ``g`` via ``arc_vertex``.
    """
    if regular_degree(g) != 3:
        raise PreconditionError("contraction needs a cubic graph")
    gg = girth(g)
    if gg in (1, 2) or gg == float("inf"):
        raise PreconditionError(f"contraction needs a simple graph with cycles (girth {gg})")
    cycles = girth_cycles(g)
    eps = edge_girth_counts(g, cycles)
    sig = graph_signature(g, eps)
    if sig.signature != (0, 1, 1):
        raise PreconditionError(f"contraction needs signature (0, 1, 1), got {sig}")
    owner = [-1] * g.n
    position = [0] * g.n
    for ci, cyc in enumerate(cycles):
        for pos, v in enumerate(cyc):
            if owner[v] >= 0:
                raise PreconditionError("girth cycles are not vertex-disjoint")
            owner[v] = ci
            position[v] = pos
    if min(owner, default=0) < 0:
        raise PreconditionError("girth cycles do not cover every vertex")
    base_ends = []
    arc_vertex = []
    at: list[list[tuple[int, Arc]]] = [[] for _ in cycles]
    for e, (u, v) in enumerate(g.ends):
        if eps[e] != 0:
            continue
        j = len(base_ends)
        base_ends.append((owner[u], owner[v]))
        arc_vertex += [u, v]
        at[owner[u]].append((position[u], Arc(j, 0)))
        at[owner[v]].append((position[v], Arc(j, 1)))
    base = MultiGraph(len(cycles), base_ends)
    rots = [[a for _, a in sorted(lst)] for lst in at]
    return Contraction(base, DihedralScheme(base, rots), tuple(arc_vertex))
