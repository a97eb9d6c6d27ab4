"""Partition refinement and backtracking search.

This is the engine behind :mod:`girthsig.automorphisms`.  It works on a
vertex-coloured graph with integer edge labels and edge multiplicities, which
covers plain multigraphs as well as the auxiliary vertex/arc graphs used for
scheme-preserving automorphisms.

Colourings are lists of dense integers.  Refinement replaces every colour by
the rank of (old colour, sorted multiset of (neighbour colour, edge label))
until stable, so colour numbers never depend on vertex names and two
refinements can be compared through their traces.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import ResourceLimitError

DEFAULT_NODE_CAP = 2_000_000


class ColoredGraph:
    """Vertex-coloured multigraph with edge labels.

    ``adj[v]`` lists ``(w, label)`` once per edge end at ``v`` (a loop at
    ``v`` therefore appears twice with ``w == v``).
    """

    def __init__(self, n: int, adj: Sequence[Sequence[tuple[int, int]]], colors: Sequence | None = None):
        self.n = n
        self.adj = [list(a) for a in adj]
        nlab = 1 + max((lab for a in self.adj for _, lab in a), default=0)
        self.nlabels = nlab
        raw = list(colors) if colors is not None else [0] * n
        ranks = {c: i for i, c in enumerate(sorted(set(raw)))}
        self.colors = [ranks[c] for c in raw]
        # (neighbour, label) pairs encoded as single ints for fast sorting
        self.enc = [[w * nlab + lab for w, lab in a] for a in self.adj]
        self._sorted = [tuple(sorted(e)) for e in self.enc]

    @classmethod
    def from_multigraph(cls, g, vertex_colors=None) -> "ColoredGraph":
        adj = [[] for _ in range(g.n)]
        for u, v in g.ends:
            adj[u].append((v, 0))
            adj[v].append((u, 0))
        base = vertex_colors if vertex_colors is not None else [0] * g.n
        return cls(g.n, adj, base)

    def is_automorphism(self, perm: Sequence[int]) -> bool:
        nlab = self.nlabels
        for v in range(self.n):
            if self.colors[perm[v]] != self.colors[v]:
                return False
            img = sorted(perm[x // nlab] * nlab + x % nlab for x in self.enc[v])
            if tuple(img) != self._sorted[perm[v]]:
                return False
        return True

    def maps_onto(self, other: "ColoredGraph", perm: Sequence[int]) -> bool:
        if self.n != other.n or self.nlabels != other.nlabels:
            return False
        nlab = self.nlabels
        for v in range(self.n):
            if other.colors[perm[v]] != self.colors[v]:
                return False
            img = sorted(perm[x // nlab] * nlab + x % nlab for x in self.enc[v])
            if tuple(img) != other._sorted[perm[v]]:
                return False
        return True


def refine(cg: ColoredGraph, colors: Sequence[int]):
    """Equitable refinement; returns ``(colors, trace)``."""
    nlab = cg.nlabels
    enc = cg.enc
    cols = list(colors)
    ncol = len(set(cols))
    trace = []
    n = cg.n
    while True:
        keys = [
            (cols[v], tuple(sorted(cols[x // nlab] * nlab + x % nlab for x in enc[v])))
            for v in range(n)
        ]
        counts = Counter(keys)
        distinct = sorted(counts)
        rank = {k: i for i, k in enumerate(distinct)}
        cols = [rank[k] for k in keys]
        trace.append(hash(tuple((k, counts[k]) for k in distinct)))
        if len(distinct) == ncol:
            return cols, tuple(trace)
        ncol = len(distinct)


def individualize(colors: Sequence[int], v: int) -> list[int]:
    out = [2 * c + 1 for c in colors]
    out[v] -= 1
    return out


def target_cell(colors: Sequence[int]) -> list[int] | None:
    """Vertices of the first smallest non-singleton cell, or None if discrete."""
    cells: dict = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    best = None
    for c in sorted(cells):
        cell = cells[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


class _Budget:
    __slots__ = ("left", "cap")

    def __init__(self, cap):
        self.cap = cap
        self.left = cap

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise ResourceLimitError(f"search exceeded {self.cap} nodes")


def _leaf_map(ca, cb):
    n = len(ca)
    inv_b = [0] * n
    for v, c in enumerate(cb):
        inv_b[c] = v
    return [inv_b[ca[v]] for v in range(n)]


def find_isomorphism(A: ColoredGraph, ca, B: ColoredGraph, cb, budget: _Budget):
    """Search for a colour-respecting isomorphism A -> B extending equitable
    colourings ``ca``/``cb`` (which must already have matching traces)."""
    budget.spend()
    cell_a = target_cell(ca)
    if cell_a is None:
        perm = _leaf_map(ca, cb)
        return perm if A.maps_onto(B, perm) else None
    c = ca[cell_a[0]]
    cell_b = [v for v, x in enumerate(cb) if x == c]
    x = cell_a[0]
    ca2, ta = refine(A, individualize(ca, x))
    for y in cell_b:
        cb2, tb = refine(B, individualize(cb, y))
        if ta != tb:
            continue
        perm = find_isomorphism(A, ca2, B, cb2, budget)
        if perm is not None:
            return perm
    return None


def orbit(point: int, gens: Sequence[Sequence[int]]) -> set:
    seen = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def orbits(n: int, gens: Sequence[Sequence[int]]) -> list[list[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


@dataclass
class ChainResult:
    generators: list
    order: int
    base: list
    basic_orbits: list
    root_colors: list


def stabilizer_chain(cg: ColoredGraph, cap: int = DEFAULT_NODE_CAP) -> ChainResult:
    """Exact automorphism group via a search along the first path.

    The first path individualizes ``b_0, b_1, ...`` (first vertex of the
    target cell) until the colouring is discrete.  Going back up the path,
    the orbit of ``b_i`` under the pointwise stabilizer of ``b_0..b_{i-1}``
    is completed by searching, for each unresolved candidate in its cell, for
    an automorphism that fixes the prefix and sends ``b_i`` there.  The group
    order is the product of these orbit lengths and the automorphisms found
    form a strong generating set for the base.
    """
    budget = _Budget(cap)
    root, _ = refine(cg, cg.colors)
    nodes = []  # (coloring before individualizing, base point, cell)
    col = root
    while True:
        cell = target_cell(col)
        if cell is None:
            break
        b = cell[0]
        nodes.append((col, b, cell))
        col, _ = refine(cg, individualize(col, b))
    gens: list = []
    sizes = [0] * len(nodes)
    for i in range(len(nodes) - 1, -1, -1):
        col_i, b, cell = nodes[i]
        ca, ta = refine(cg, individualize(col_i, b))
        orb = orbit(b, gens)
        failed: set = set()
        for w in cell:
            if w in orb or w in failed:
                continue
            budget.spend()
            cb, tb = refine(cg, individualize(col_i, w))
            perm = find_isomorphism(cg, ca, cg, cb, budget) if ta == tb else None
            if perm is not None:
                gens.append(perm)
                orb = orbit(b, gens)
            else:
                failed |= orbit(w, gens)
        sizes[i] = len(orb)
    order = 1
    for s in sizes:
        order *= s
    return ChainResult(gens, order, [b for _, b, _ in nodes], sizes, root)


def find_mapping(cg: ColoredGraph, src: Sequence[int], dst: Sequence[int], cap: int = DEFAULT_NODE_CAP):
    """An automorphism sending ``src[i]`` to ``dst[i]`` for all i, or None."""
    budget = _Budget(cap)
    ca, _ = refine(cg, cg.colors)
    cb = list(ca)
    for x, y in zip(src, dst):
        if ca[x] != cb[y]:
            return None
        ca, ta = refine(cg, individualize(ca, x))
        cb, tb = refine(cg, individualize(cb, y))
        if ta != tb:
            return None
    return find_isomorphism(cg, ca, cg, cb, budget)


def canonical_form(cg: ColoredGraph, chain: ChainResult | None = None, cap: int = DEFAULT_NODE_CAP):
    """Canonical relabelling of ``cg``.

    Returns ``(certificate, labelling)`` where ``labelling[v]`` is the new
    index of ``v``; equal certificates characterise isomorphic inputs.  The
    search keeps, at every node, only the children whose refinement trace is
    least, and skips children that a known automorphism fixing the current
    path maps onto an explored sibling.
    """
    if chain is None:
        chain = stabilizer_chain(cg, cap)
    budget = _Budget(cap)
    gens = chain.generators
    nlab = cg.nlabels
    best = [None, None]  # (key, labelling)

    def certificate(col):
        n = cg.n
        inv = [0] * n
        for v, c in enumerate(col):
            inv[c] = v
        vcols = tuple(cg.colors[inv[i]] for i in range(n))
        rows = tuple(
            tuple(sorted(col[x // nlab] * nlab + x % nlab for x in cg.enc[inv[i]])) for i in range(n)
        )
        return (vcols, rows)

    def visit(col, path, traces):
        budget.spend()
        cell = target_cell(col)
        if cell is None:
            key = (traces, certificate(col))
            if best[0] is None or key < best[0]:
                best[0] = key
                best[1] = list(col)
            return
        fixing = [g for g in gens if all(g[p] == p for p in path)]
        children = []
        explored: set = set()
        for w in cell:
            if w in explored:
                continue
            explored |= orbit(w, fixing)
            c2, t2 = refine(cg, individualize(col, w))
            children.append((t2, w, c2))
        tmin = min(t for t, _, _ in children)
        for t, w, c2 in children:
            if t == tmin:
                visit(c2, path + (w,), traces + (t,))

    root, t0 = refine(cg, cg.colors)
    visit(root, (), (t0,))
    key, lab = best
    return key[1], lab


def multigraph_certificate(g, labelling: Sequence[int]) -> tuple:
    """Sorted relabelled endpoint pairs (with multiplicity)."""
    return tuple(sorted(tuple(sorted((labelling[u], labelling[v]))) for u, v in g.ends))
