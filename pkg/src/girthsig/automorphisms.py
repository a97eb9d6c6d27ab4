"""Automorphism groups, canonical forms and isomorphism of multigraphs.

Automorphisms are vertex permutations (``perm[v]`` is the image of ``v``)
that preserve edge multiplicities and loops; parallel edges are treated as an
unlabelled multiset.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import search
from .graph import Arc, MultiGraph, is_simple
from .search import DEFAULT_NODE_CAP, ColoredGraph

__all__ = [
    "GeneratedGroup",
    "automorphism_group",
    "canonical_label",
    "CanonicalForm",
    "are_isomorphic",
    "find_isomorphism",
    "Transitivity",
    "transitivity",
    "scheme_automorphisms",
    "SchemeGroup",
    "swap_automorphism",
    "compose",
    "invert",
    "is_automorphism",
]


def compose(p: Sequence[int], q: Sequence[int]) -> list[int]:
    """Apply ``p`` first, then ``q``."""
    return [q[x] for x in p]


def invert(p: Sequence[int]) -> list[int]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return inv


def _loop_colors(g: MultiGraph) -> list[int]:
    loops = [0] * g.n
    for u, v in g.ends:
        if u == v:
            loops[u] += 1
    return loops


def _colored(g: MultiGraph) -> ColoredGraph:
    return ColoredGraph.from_multigraph(g, _loop_colors(g))


def is_automorphism(g: MultiGraph, perm: Sequence[int]) -> bool:
    return sorted(perm) == list(range(g.n)) and g.relabel(perm).edge_set() == g.edge_set()


@dataclass(frozen=True)
class GeneratedGroup:
    """A permutation group given by generators, with its exact order."""

    degree: int
    generators: tuple
    order: int
    base: tuple = ()
    basic_orbits: tuple = ()

    @property
    def orbits(self) -> list[list[int]]:
        return search.orbits(self.degree, self.generators)

    def orbit(self, x: int) -> set:
        return search.orbit(x, self.generators)

    def stabilizer_order(self, x: int) -> int:
        return self.order // len(self.orbit(x))


def automorphism_group(g: MultiGraph, cap: int = DEFAULT_NODE_CAP) -> GeneratedGroup:
    cg = _colored(g)
    chain = search.stabilizer_chain(cg, cap)
    return GeneratedGroup(g.n, tuple(tuple(p) for p in chain.generators), chain.order,
                          tuple(chain.base), tuple(chain.basic_orbits))


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical edge list plus the relabelling that produces it."""

    n: int
    edges: tuple
    labelling: tuple

    def graph(self) -> MultiGraph:
        return MultiGraph(self.n, list(self.edges))


def canonical_label(g: MultiGraph, cap: int = DEFAULT_NODE_CAP) -> CanonicalForm:
    cg = _colored(g)
    _, lab = search.canonical_form(cg, cap=cap)
    return CanonicalForm(g.n, search.multigraph_certificate(g, lab), tuple(lab))


def find_isomorphism(a: MultiGraph, b: MultiGraph, cap: int = DEFAULT_NODE_CAP):
    """A vertex map ``a -> b`` preserving edge multiplicities, or None."""
    if a.n != b.n or a.m != b.m or sorted(a.degrees()) != sorted(b.degrees()):
        return None
    ca, cb = canonical_label(a, cap), canonical_label(b, cap)
    if ca.edges != cb.edges:
        return None
    return compose(ca.labelling, invert(cb.labelling))


def are_isomorphic(a: MultiGraph, b: MultiGraph, cap: int = DEFAULT_NODE_CAP) -> bool:
    return find_isomorphism(a, b, cap) is not None


@dataclass(frozen=True)
class Transitivity:
    vertex_orbits: int
    edge_orbits: int
    arc_orbits: int

    @property
    def vertex_transitive(self) -> bool:
        return self.vertex_orbits <= 1

    @property
    def edge_transitive(self) -> bool:
        return self.edge_orbits <= 1

    @property
    def arc_transitive(self) -> bool:
        return self.arc_orbits <= 1


def _pair_orbits(pairs, gens, ordered):
    index = {p: i for i, p in enumerate(pairs)}
    images = []
    for gperm in gens:
        img = []
        for u, v in pairs:
            a, b = gperm[u], gperm[v]
            if not ordered and a > b:
                a, b = b, a
            img.append(index[(a, b)])
        images.append(img)
    return len(search.orbits(len(pairs), images))


def transitivity(g: MultiGraph, grp: GeneratedGroup | None = None) -> Transitivity:
    """Orbit counts on vertices, edges and arcs.

    For multigraphs, parallel edges (and the two arcs of a loop) are
    interchangeable by automorphisms, so orbits are taken on endpoint pairs.
    """
    if grp is None:
        grp = automorphism_group(g)
    gens = grp.generators
    v_orb = len(search.orbits(g.n, gens)) if g.n else 0
    epairs = sorted({(min(u, v), max(u, v)) for u, v in g.ends})
    apairs = sorted({(u, v) for u, v in g.ends} | {(v, u) for u, v in g.ends})
    e_orb = _pair_orbits(epairs, gens, False) if epairs else 0
    a_orb = _pair_orbits(apairs, gens, True) if apairs else 0
    return Transitivity(v_orb, e_orb, a_orb)


def swap_automorphism(g: MultiGraph, u: int, v: int, cap: int = DEFAULT_NODE_CAP):
    """An automorphism exchanging adjacent vertices ``u`` and ``v``, or None."""
    return search.find_mapping(_colored(g), [u, v], [v, u], cap)


# scheme-preserving automorphisms ---------------------------------------------

_TAIL, _INVERSE, _NEXT = 0, 1, 2


@dataclass(frozen=True)
class SchemeGroup:
    """Automorphisms of a graph preserving a dihedral scheme, acting on arcs.

    Arc ``Arc(e, s)`` is point ``2e + s``.
    """

    group: GeneratedGroup
    arc_orbits: tuple

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def arc_transitive(self) -> bool:
        return len(self.arc_orbits) == 1


def scheme_automorphisms(g: MultiGraph, scheme, cap: int = DEFAULT_NODE_CAP) -> SchemeGroup:
    """Aut(g, scheme) via an auxiliary coloured graph on vertices and arcs.

    Points ``0..2m-1`` are arcs, ``2m + v`` is vertex ``v``.  Edges join an
    arc to its tail, to its inverse arc, and to its two scheme neighbours, each
    kind with its own label, so colour-preserving automorphisms of the
    auxiliary graph are exactly the scheme-preserving automorphisms of ``g``
    (faithfully represented on arcs).
    """
    m2 = 2 * g.m
    N = m2 + g.n
    adj: list[list[tuple[int, int]]] = [[] for _ in range(N)]

    def link(a, b, lab):
        adj[a].append((b, lab))
        adj[b].append((a, lab))

    for e in range(g.m):
        link(2 * e, 2 * e + 1, _INVERSE)
        for s in (0, 1):
            link(2 * e + s, m2 + g.ends[e][s], _TAIL)
    for u in range(g.n):
        cyc = [a.index for a in scheme.rotation(u)]
        d = len(cyc)
        for i in range(d):
            link(cyc[i], cyc[(i + 1) % d], _NEXT)
    colors = [0] * m2 + [1] * g.n
    cg = ColoredGraph(N, adj, colors)
    chain = search.stabilizer_chain(cg, cap)
    gens = tuple(tuple(p[:m2]) for p in chain.generators)
    grp = GeneratedGroup(m2, gens, chain.order)
    orbs = tuple(tuple(o) for o in search.orbits(m2, gens)) if m2 else ()
    return SchemeGroup(grp, orbs)
