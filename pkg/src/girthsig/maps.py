"""Polyhedral maps given by face walks, and the constructions that move
between cubic graphs and maps: map truncation, the map formed by girth cycles
of a (2,2,2) graph, and recovery of a triangle map from a (1,1,2) graph.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import GraphError, PreconditionError
from .girth import edge_girth_counts, girth, girth_cycles, graph_signature
from .graph import Arc, MultiGraph, is_connected, regular_degree, reverse_arc
from .schemes import DihedralScheme, _canonical_cycle, truncate

__all__ = [
    "CombMap",
    "map_from_walks",
    "euler_characteristic",
    "map_truncation",
    "faces_from_girth_cycles",
    "reconstruct_triangulation",
    "walk_from_vertices",
]


def _scheme_from_walks(g: MultiGraph, walks) -> DihedralScheme:
    nbrs: dict = {a: [] for a in g.arcs()}
    for w in walks:
        k = len(w)
        for i in range(k):
            a = reverse_arc(w[i])
            b = w[(i + 1) % k]
            nbrs[a].append(b)
            nbrs[b].append(a)
    rots = []
    for u in range(g.n):
        out = g.out(u)
        for a in out:
            if len(nbrs[a]) != 2 or nbrs[a][0] == nbrs[a][1]:
                raise GraphError(f"face walks do not induce a dihedral scheme at vertex {u}")
        start = out[0]
        seq = [start]
        prev, cur = None, start
        while True:
            x, y = nbrs[cur]
            nxt = y if x == prev else x
            if nxt == start:
                break
            seq.append(nxt)
            prev, cur = cur, nxt
            if len(seq) > len(out):
                break
        if len(seq) != len(out):
            raise GraphError(f"face walks split the arcs at vertex {u} into several cycles")
        rots.append(seq)
    return DihedralScheme(g, rots)


@dataclass(frozen=True, eq=False)
class CombMap:
    """A graph together with closed face walks (tuples of arcs)."""

    graph: MultiGraph
    faces: tuple
    scheme: DihedralScheme

    @property
    def F(self) -> int:
        return len(self.faces)

    @property
    def euler_characteristic(self) -> int:
        return self.graph.n - self.graph.m + len(self.faces)

    @property
    def face_lengths(self) -> Counter:
        return Counter(len(f) for f in self.faces)

    @property
    def map_type(self):
        """``(l, k)`` for a map with l-gonal faces and k-regular skeleton, else None."""
        lens = set(len(f) for f in self.faces)
        k = regular_degree(self.graph)
        if len(lens) == 1 and k is not None:
            return (lens.pop(), k)
        return None

    def face_key(self) -> Counter:
        """Faces as a multiset of arc-index cycles up to rotation and reversal."""
        out = Counter()
        for f in self.faces:
            fwd = [a.index for a in f]
            rev = [reverse_arc(a).index for a in reversed(f)]
            out[min(_canonical_rot(fwd), _canonical_rot(rev))] += 1
        return out

    def same_faces(self, other: "CombMap") -> bool:
        return self.graph == other.graph and self.face_key() == other.face_key()

    def face_vertex_cycles(self) -> list[tuple[int, ...]]:
        return [tuple(self.graph.tail(a) for a in f) for f in self.faces]

    def is_orientable(self) -> bool:
        """Whether the faces can be oriented so each edge is used both ways."""
        uses: dict = {}
        for fi, f in enumerate(self.faces):
            for a in f:
                uses.setdefault(a.edge, []).append((fi, a.side))
        sign = [0] * len(self.faces)
        for start in range(len(self.faces)):
            if sign[start]:
                continue
            sign[start] = 1
            queue = deque([start])
            while queue:
                fi = queue.popleft()
                for a in self.faces[fi]:
                    for fj, side in uses[a.edge]:
                        if fj == fi:
                            continue
                        # the two faces must traverse the edge in opposite directions
                        want = -sign[fi] if side == a.side else sign[fi]
                        if sign[fj] == 0:
                            sign[fj] = want
                            queue.append(fj)
                        elif sign[fj] != want:
                            return False
        return True

    def __repr__(self):
        return f"CombMap(V={self.graph.n}, E={self.graph.m}, F={self.F}, type={self.map_type})"


def _canonical_rot(seq):
    k = len(seq)
    return min(tuple(seq[i:] + seq[:i]) for i in range(k))


def map_from_walks(g: MultiGraph, walks: Sequence[Sequence]) -> CombMap:
    """Validate face walks and build the map.

    Every walk must be closed, no walk may use an edge twice, every edge must
    lie on exactly two walks, the graph must be connected, and consecutive
    edges along the walks must arrange each ``out(u)`` into a single cycle.
    """
    ws = [tuple(Arc(*a) for a in w) for w in walks]
    if not is_connected(g):
        raise GraphError("a map needs a connected skeleton")
    cover = Counter()
    for i, w in enumerate(ws):
        if not w:
            raise GraphError(f"walk {i} is empty")
        k = len(w)
        for j in range(k):
            if g.head(w[j]) != g.tail(w[(j + 1) % k]):
                raise GraphError(f"walk {i} is not a closed walk at position {j}")
        edges = [a.edge for a in w]
        if len(set(edges)) != len(edges):
            raise GraphError(f"walk {i} traverses an edge more than once")
        cover.update(edges)
    for e in range(g.m):
        if cover[e] != 2:
            raise GraphError(f"edge {e} lies on {cover[e]} walks instead of 2")
    scheme = _scheme_from_walks(g, ws)
    return CombMap(g, tuple(ws), scheme)


def euler_characteristic(m: CombMap) -> int:
    return m.euler_characteristic


def walk_from_vertices(g: MultiGraph, cycle: Sequence[int]) -> tuple:
    """Arcs along a vertex cycle of a simple graph."""
    k = len(cycle)
    arcs = []
    for i in range(k):
        u, v = cycle[i], cycle[(i + 1) % k]
        e = g.edge_between(u, v)
        arcs.append(Arc(e, 0 if g.ends[e][0] == u else 1))
    return tuple(arcs)


def map_truncation(m: CombMap) -> CombMap:
    """Truncate a map: each vertex becomes a face, each k-gon a 2k-gon.

    The skeleton is ``truncate(m.graph, m.scheme)``.
    """
    if min(m.graph.degrees(), default=0) < 3:
        raise PreconditionError("map truncation needs minimum valence 3")
    g = m.graph
    t = truncate(g, m.scheme)
    faces = []
    for u in range(g.n):
        faces.append(walk_from_vertices(t, [a.index for a in m.scheme.rotation(u)]))
    for f in m.faces:
        verts = []
        for a in f:
            verts += [a.index, reverse_arc(a).index]
        faces.append(walk_from_vertices(t, verts))
    return map_from_walks(t, faces)


def faces_from_girth_cycles(g: MultiGraph) -> CombMap:
    """The map of a cubic (2,2,2) graph whose faces are its girth cycles.

    The Euler characteristic V - E + F is checked against n (3/g - 1/2).
    """
    if regular_degree(g) != 3:
        raise PreconditionError("needs a cubic graph")
    gg = girth(g)
    if gg in (1, 2) or gg == float("inf"):
        raise PreconditionError(f"needs a simple graph with cycles (girth {gg})")
    cycles = girth_cycles(g)
    sig = graph_signature(g, edge_girth_counts(g, cycles))
    if sig.signature != (2, 2, 2):
        raise PreconditionError(f"needs signature (2, 2, 2), got {sig}")
    m = map_from_walks(g, [walk_from_vertices(g, c) for c in cycles])
    expected = g.n * (Fraction(3, gg) - Fraction(1, 2))
    if m.euler_characteristic != expected:
        raise GraphError(f"Euler characteristic {m.euler_characteristic} differs from {expected}")
    return m


def reconstruct_triangulation(g: MultiGraph, verify: bool = True) -> CombMap:
    """Recover the map M with Tr(M) = g from a cubic (1,1,2) graph.

    Cycles formed by the edges on exactly one girth cycle become the vertices
    of M, edges on two girth cycles become its edges, and each girth cycle
    becomes a face of length girth/2.  The valence of M is ``map_type[1]``.
    With ``verify`` the truncation of M is checked to be isomorphic to ``g``.
    """
    if regular_degree(g) != 3:
        raise PreconditionError("needs a cubic graph")
    gg = girth(g)
    if gg in (1, 2) or gg == float("inf"):
        raise PreconditionError(f"needs a simple graph with cycles (girth {gg})")
    cycles = girth_cycles(g)
    eps = edge_girth_counts(g, cycles)
    sig = graph_signature(g, eps)
    if sig.signature != (1, 1, 2):
        raise PreconditionError(f"needs signature (1, 1, 2), got {sig}")
    if gg % 2:
        raise PreconditionError("a (1, 1, 2) graph of odd girth cannot be a truncation")
    # components of the eps = 1 subgraph
    one_adj = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(g.ends):
        if eps[e] == 1:
            one_adj[u].append(v)
            one_adj[v].append(u)
    owner = [-1] * g.n
    nverts = 0
    for s in range(g.n):
        if owner[s] >= 0:
            continue
        if len(one_adj[s]) != 2:
            raise GraphError("edges on one girth cycle do not form disjoint cycles")
        owner[s] = nverts
        stack = [s]
        while stack:
            x = stack.pop()
            for y in one_adj[x]:
                if owner[y] < 0:
                    owner[y] = nverts
                    stack.append(y)
        nverts += 1
    m_index = {}
    m_ends = []
    for e, (u, v) in enumerate(g.ends):
        if eps[e] == 2:
            m_index[e] = len(m_ends)
            m_ends.append((owner[u], owner[v]))
    M = MultiGraph(nverts, m_ends)
    faces = []
    for c in cycles:
        walk = []
        k = len(c)
        for i in range(k):
            x, y = c[i], c[(i + 1) % k]
            e = g.edge_between(x, y)
            if eps[e] == 2:
                walk.append(Arc(m_index[e], 0 if g.ends[e][0] == x else 1))
        faces.append(walk)
    mp = map_from_walks(M, faces)
    if verify:
        from .automorphisms import are_isomorphic

        if not are_isomorphic(map_truncation(mp).graph.without_labels(), g.without_labels()):
            raise GraphError("truncation of the recovered map is not isomorphic to the input")
    return mp
