"""Girth, girth cycles, per-edge girth-cycle counts and signatures.

For an edge ``e`` the count ``eps[e]`` is the number of girth cycles through
``e``; the signature of a vertex is the ascending tuple of ``eps`` over its
incident edges.  Acyclic graphs have girth ``math.inf`` and no girth cycles.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Sequence

from .errors import PreconditionError
from .graph import Arc, MultiGraph, is_simple, regular_degree

__all__ = [
    "girth",
    "girth_cycles",
    "cycle_edges",
    "edge_girth_counts",
    "GirthReport",
    "girth_report",
    "SignatureReport",
    "graph_signature",
    "vertex_signatures",
    "ArcType",
    "arc_type",
    "LawReport",
    "check_signature_laws",
    "cayley_signature",
]


def _simple_adjacency(g: MultiGraph) -> list[list[int]]:
    return [sorted(g.neighbors(u)) for u in range(g.n)]


def girth(g: MultiGraph):
    """Length of a shortest cycle; ``math.inf`` for forests.

    A loop is a cycle of length 1 and a pair of parallel edges one of length 2.
    """
    if any(u == v for u, v in g.ends):
        return 1
    if not is_simple(g):
        return 2
    adj = _simple_adjacency(g)
    best = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if 2 * du + 1 >= best:
                break
            for w in adj[u]:
                if w == parent[u]:
                    continue
                if w in dist:
                    best = min(best, du + dist[w] + 1)
                else:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
        if best == 3:
            break
    return best


def _bounded_distances(adj, s: int, floor: int, depth: int) -> dict:
    """BFS distances from ``s`` up to ``depth`` inside the vertices ``>= floor``."""
    dist = {s: 0}
    frontier = [s]
    for d in range(1, depth + 1):
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w >= floor and w not in dist:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def girth_cycles(g: MultiGraph, length: int | None = None) -> list[tuple[int, ...]]:
    """All girth cycles, each once, as vertex tuples in canonical rotation.

    A cycle starts at its least vertex and proceeds towards the smaller of that
    vertex's two cycle neighbours.  For girth 1 each loop is reported as
    ``(v,)``; for girth 2 each pair of parallel edges as ``(u, v)`` (repeated
    per pair).  ``length`` overrides the girth (cycles of that exact length,
    simple graphs only).
    """
    gg = girth(g) if length is None else length
    if gg == math.inf:
        return []
    if gg == 1:
        return [(u,) for u, v in g.ends if u == v]
    if gg == 2:
        out = []
        groups: dict = {}
        for e, (u, v) in enumerate(g.ends):
            if u != v:
                groups.setdefault((min(u, v), max(u, v)), []).append(e)
        for key, es in sorted(groups.items()):
            k = len(es)
            out.extend([key] * (k * (k - 1) // 2))
        return out
    adj = _simple_adjacency(g)
    L = gg
    cycles = []
    for s in range(g.n):
        dist = _bounded_distances(adj, s, s, L // 2)
        path = [s]
        onpath = {s}

        def extend(u, remaining):
            # remaining = edges still to add, including the closing edge
            if remaining == 1:
                if s in adj[u] and path[1] < path[-1]:
                    cycles.append(tuple(path))
                return
            for w in adj[u]:
                if w <= s or w in onpath:
                    continue
                dw = dist.get(w)
                if dw is None or dw > remaining - 1:
                    continue
                path.append(w)
                onpath.add(w)
                extend(w, remaining - 1)
                path.pop()
                onpath.discard(w)

        for w in adj[s]:
            if w > s:
                path.append(w)
                onpath.add(w)
                extend(w, L - 1)
                path.pop()
                onpath.discard(w)
    return cycles


def cycle_edges(g: MultiGraph, cycle: Sequence[int]) -> list[int]:
    """Edge ids along a cycle of a simple graph (length >= 3)."""
    k = len(cycle)
    return [g.edge_between(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


def _edge_index(g: MultiGraph) -> dict:
    return {(min(u, v), max(u, v)): e for e, (u, v) in enumerate(g.ends)}


def edge_girth_counts(g: MultiGraph, cycles=None) -> list[int]:
    """``eps[e]``: number of girth cycles containing edge ``e``."""
    gg = girth(g)
    eps = [0] * g.m
    if gg == math.inf:
        return eps
    if gg == 1:
        for e, (u, v) in enumerate(g.ends):
            if u == v:
                eps[e] = 1
        return eps
    if gg == 2:
        mult = g.edge_set()
        for e, (u, v) in enumerate(g.ends):
            if u != v:
                eps[e] = mult[(min(u, v), max(u, v))] - 1
        return eps
    if cycles is None:
        cycles = girth_cycles(g)
    index = _edge_index(g)
    for c in cycles:
        k = len(c)
        for i in range(k):
            a, b = c[i], c[(i + 1) % k]
            eps[index[(a, b) if a < b else (b, a)]] += 1
    return eps


def vertex_signatures(g: MultiGraph, eps: Sequence[int]) -> list[tuple[int, ...]]:
    sigs = []
    for u in range(g.n):
        sigs.append(tuple(sorted(eps[a.edge] for a in g.out(u))))
    return sigs


@dataclass(frozen=True)
class SignatureReport:
    """Common signature of a girth-regular graph, or the spread of signatures."""

    signature: tuple | None
    girth_regular: bool
    girth_edge_regular: bool
    distribution: dict = field(default_factory=dict)

    def __str__(self):
        if self.girth_regular:
            return str(self.signature)
        parts = ", ".join(f"{s} x{c}" for s, c in sorted(self.distribution.items()))
        return f"not girth-regular: {parts}"


def graph_signature(g: MultiGraph, eps: Sequence[int] | None = None) -> SignatureReport:
    if eps is None:
        eps = edge_girth_counts(g)
    dist = Counter(vertex_signatures(g, eps))
    if len(dist) == 1:
        (sig,) = dist
        return SignatureReport(sig, True, len(set(sig)) <= 1, dict(dist))
    return SignatureReport(None, False, False, dict(dist))


@dataclass(frozen=True)
class GirthReport:
    girth: float | int
    eps: tuple
    cycle_count: int
    signature: SignatureReport

    @property
    def acyclic(self) -> bool:
        return self.girth == math.inf


def girth_report(g: MultiGraph) -> GirthReport:
    gg = girth(g)
    cycles = girth_cycles(g) if gg != math.inf else []
    eps = edge_girth_counts(g, cycles if gg not in (1, 2) else None)
    return GirthReport(gg, tuple(eps), len(cycles), graph_signature(g, eps))


# arc types -----------------------------------------------------------------


@dataclass(frozen=True)
class ArcType:
    """Distance-2 structure around an arc ``uv`` of a cubic girth-6 graph.

    ``partition`` holds the two pairs of vertices at distance 2 from ``u``
    (away from ``v``), grouped by their common neighbour with ``u``;
    ``counts`` gives, per pair, how many neighbours each vertex has in the
    corresponding set on the ``v`` side.  ``type_uv`` and ``type_vu`` are the
    count multisets as sorted tuples of sorted tuples.
    """

    arc: Arc
    partition: tuple
    reverse_partition: tuple
    type_uv: tuple
    type_vu: tuple

    @property
    def symmetric(self) -> bool:
        return self.type_uv == self.type_vu

    @property
    def cycles(self) -> int:
        return sum(sum(p) for p in self.type_uv)


def _half_type(adj, u, v):
    groups = []
    for x in adj[u]:
        if x == v:
            continue
        groups.append(tuple(sorted(w for w in adj[x] if w != u)))
    return tuple(groups)


def arc_type(g: MultiGraph, arc: Arc, eps: Sequence[int] | None = None) -> ArcType:
    if regular_degree(g) != 3 or not is_simple(g):
        raise PreconditionError("arc types need a simple cubic graph")
    if girth(g) != 6:
        raise PreconditionError("arc types are defined for girth-6 graphs only")
    adj = _simple_adjacency(g)
    u, v = g.tail(arc), g.head(arc)
    p_uv = _half_type(adj, u, v)
    p_vu = _half_type(adj, v, u)
    far_v = set(p_vu[0]) | set(p_vu[1])
    far_u = set(p_uv[0]) | set(p_uv[1])

    def counts(part, other):
        return tuple(sorted(tuple(sorted(sum(1 for w in adj[x] if w in other) for x in pair)) for pair in part))

    t_uv = counts(p_uv, far_v)
    t_vu = counts(p_vu, far_u)
    result = ArcType(arc, p_uv, p_vu, t_uv, t_vu)
    if eps is not None and result.cycles != eps[arc.edge]:
        raise AssertionError(f"arc type sum {result.cycles} disagrees with eps {eps[arc.edge]}")
    return result


# signature laws -----------------------------------------------------------


@dataclass(frozen=True)
class LawReport:
    signature: tuple
    girth: int
    results: dict

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    @property
    def violated(self) -> list[str]:
        return [k for k, v in self.results.items() if not v]


def check_signature_laws(sig: Sequence[int], g: int) -> LawReport:
    """Necessary conditions on the signature (a, b, c) of a cubic girth-regular graph.

    Laws checked: ``parity`` (a+b+c even), ``triangle`` (a+b >= c),
    ``odd_girth`` (a >= 1 and c = a+b force even girth), ``zero_first``
    (a = 0 forces b = c = 1), ``lower_a`` (a >= c - m) and ``upper_b``
    (b <= a - c + 2m) with m = 2^(floor(g/2) - 1), and ``max_c``
    (c <= 2^floor(g/2), equality only when a = b = c).
    """
    a, b, c = sorted(sig)
    half = g // 2
    m = 2 ** (half - 1)
    cmax = 2**half
    results = {
        "parity": (a + b + c) % 2 == 0,
        "triangle": a + b >= c,
        "odd_girth": not (a >= 1 and c == a + b) or g % 2 == 0,
        "zero_first": a != 0 or (b == 1 and c == 1),
        "lower_a": a >= c - m,
        "upper_b": b <= a - c + 2 * m,
        "max_c": c < cmax or (c == cmax and a == b == c),
    }
    return LawReport((a, b, c), g, results)


def cayley_signature(group, connection, max_length: int = 16):
    """Girth and per-generator cycle counts of Cay(G, S) from reduced words.

    Finds the least ``L`` admitting a word ``s_1 ... s_L`` over ``S`` with no
    cancelling neighbours ``s_i s_{i+1} = 1`` and product 1, then counts such
    words by first letter.  Returns ``(L, {s: count})``; the count for ``s``
    equals eps of the edges labelled ``s``.
    """
    S = [group.index(s) for s in connection]
    mul, e = group.mul, group.identity
    # reduced words grouped by (product, last letter), with counts per first letter
    states = {(s, s): Counter({s: 1}) for s in S}
    for L in range(2, max_length + 1):
        new: dict = {}
        for (prod, last), ctr in states.items():
            for s in S:
                if mul[last][s] == e:
                    continue
                new.setdefault((mul[prod][s], s), Counter()).update(ctr)
        states = new
        closing = Counter()
        for (prod, last), ctr in states.items():
            if prod == e:
                closing.update(ctr)
        if closing:
            return L, {group.elements[s]: closing.get(s, 0) for s in S}
    return math.inf, {}
