"""Generators for test and survey corpora.

* Cayley schemes: a 6-valent Cayley multigraph Cay(G, [s, a(s), ..., a^5(s)])
  with the scheme listing the arcs at every vertex in that order, where ``a``
  is a group automorphism.  G x| <a> acts transitively on arcs and preserves
  the scheme, so the truncation is vertex-transitive.
* Random 6-regular multigraphs with random schemes whose truncations have
  girth 6 and signature (0, 1, 1).
* Generic hexagonal tori with signature (2, 2, 2).
* Truncations of orientably-regular triangle maps of valence at least 7.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import GraphError, PreconditionError
from .girth import girth, girth_report
from .graph import Arc, MultiGraph, is_connected
from .groups import GroupTable, closure, cyclic_group, dihedral_group, matrix_group
from .schemes import DihedralScheme, truncate

__all__ = [
    "cayley_scheme",
    "group_automorphisms",
    "small_groups",
    "TruncationInstance",
    "arc_transitive_six_valent",
    "random_six_regular",
    "random_truncation_instances",
    "generic_hex_tori",
    "truncated_triangle_maps",
]


def cayley_scheme(group: GroupTable, labels: Sequence[int], shift: int) -> tuple[MultiGraph, DihedralScheme]:
    """Cayley multigraph with a scheme from a cyclic list of connection elements.

    ``labels`` are element indices ``s_0..s_{d-1}``; arc ``(g, i)`` runs from
    ``g`` to ``s_i^-1 g`` and its inverse is arc ``(s_i^-1 g, i + shift)``,
    which requires ``s_{i+shift} = s_i^-1``.  The scheme at ``g`` lists its
    arcs by ``i``.
    """
    d = len(labels)
    mul, inv = group.mul, group.inverse
    for i, s in enumerate(labels):
        if s == group.identity:
            raise PreconditionError("connection contains the identity")
        if labels[(i + shift) % d] != inv[s]:
            raise PreconditionError("shift does not pair each label with its inverse")
    N = group.order
    arc_of: dict = {}
    ends = []
    for g in range(N):
        for i, s in enumerate(labels):
            if (g, i) in arc_of:
                continue
            h = mul[inv[s]][g]
            j = (i + shift) % d
            e = len(ends)
            ends.append((g, h))
            arc_of[(g, i)] = Arc(e, 0)
            arc_of[(h, j)] = Arc(e, 1)
    graph = MultiGraph(N, ends)
    scheme = DihedralScheme(graph, [[arc_of[(g, i)] for i in range(d)] for g in range(N)])
    return graph, scheme


def _generating_pair(group: GroupTable) -> list[int]:
    gens: list[int] = []
    span = {group.identity}
    for x in sorted(range(group.order), key=lambda i: -group.element_order(i)):
        if x in span:
            continue
        gens.append(x)
        span = set(_span(group, gens))
        if len(span) == group.order:
            break
    return gens


def _span(group, gens):
    seen = {group.identity}
    stack = [group.identity]
    while stack:
        x = stack.pop()
        for s in gens:
            y = group.mul[x][s]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def group_automorphisms(group: GroupTable) -> list[list[int]]:
    """All automorphisms of a small group as index maps (brute force over
    images of a generating set)."""
    gens = _generating_pair(group)
    N = group.order
    mul = group.mul
    orders = [group.element_order(i) for i in range(N)]
    cands = [[y for y in range(N) if orders[y] == orders[x]] for x in gens]
    out = []
    for imgs in itertools.product(*cands):
        phi = {group.identity: group.identity}
        stack = [group.identity]
        ok = True
        while stack and ok:
            x = stack.pop()
            for s, t in zip(gens, imgs):
                y = mul[x][s]
                val = mul[phi[x]][t]
                if y in phi:
                    if phi[y] != val:
                        ok = False
                        break
                else:
                    phi[y] = val
                    stack.append(y)
        if not ok or len(phi) != N or len(set(phi.values())) != N:
            continue
        if all(phi[mul[a][b]] == mul[phi[a]][phi[b]] for a in range(N) for b in range(N)):
            out.append([phi[i] for i in range(N)])
    return out


def _direct_product(*orders: int) -> GroupTable:
    gens = []
    for i, m in enumerate(orders):
        gens.append(tuple(1 if j == i else 0 for j in range(len(orders))))
    ident = tuple(0 for _ in orders)
    return closure(gens, lambda x, y: tuple((a + b) % m for a, b, m in zip(x, y, orders)), identity=ident)


def small_groups(max_order: int = 12) -> dict:
    """A selection of groups of order at most ``max_order`` by name."""
    groups = {}
    for m in range(2, max_order + 1):
        groups[f"Z{m}"] = cyclic_group(m)
    for dims in [(2, 2), (2, 4), (2, 6), (3, 3), (2, 2, 2)]:
        order = 1
        for d in dims:
            order *= d
        if order <= max_order:
            groups["Z" + "xZ".join(map(str, dims))] = _direct_product(*dims)
    for n in range(3, max_order // 2 + 1):
        groups[f"D{n}"] = dihedral_group(n)
    if max_order >= 8:
        groups["Q8"] = matrix_group([((0, 1), (2, 0)), ((1, 1), (1, 2))], 3)
    if max_order >= 12:
        def pmul(p, q):
            return tuple(q[i] for i in p)

        groups["A4"] = closure([(1, 2, 0, 3), (1, 0, 3, 2)], pmul, identity=(0, 1, 2, 3))
    return groups


@dataclass(frozen=True, eq=False)
class TruncationInstance:
    name: str
    base: MultiGraph
    scheme: DihedralScheme
    arc_transitive_construction: bool

    def truncation(self) -> MultiGraph:
        return truncate(self.base, self.scheme)


def _good_truncation(base, scheme) -> bool:
    t = truncate(base, scheme)
    if t.m != 3 * t.n // 2 or not is_connected(t):
        return False
    if girth(t) != 6:
        return False
    return girth_report(t).signature.signature == (0, 1, 1)


def arc_transitive_six_valent(max_order: int = 12) -> Iterator[TruncationInstance]:
    """Cayley schemes G x| <a> that truncate to connected (0,1,1) girth-6 graphs.

    Instances are reduced up to isomorphism of the truncations.
    """
    from .automorphisms import canonical_label

    certificates = set()
    for name, G in small_groups(max_order).items():
        autos = group_automorphisms(G)
        seen = set()
        for alpha in autos:
            for s in range(G.order):
                if s == G.identity:
                    continue
                labels = [s]
                for _ in range(5):
                    labels.append(alpha[labels[-1]])
                if alpha[labels[-1]] != s:
                    continue
                for shift in (0, 3):
                    if any(labels[(i + shift) % 6] != G.inverse[labels[i]] for i in range(6)):
                        continue
                    key = (tuple(labels), shift)
                    rots = {(tuple(labels[i:] + labels[:i]), shift) for i in range(6)}
                    rots |= {(tuple(reversed(r)), sh) for r, sh in rots}
                    if rots & seen:
                        continue
                    seen.add(key)
                    if len(_span(G, set(labels))) != G.order:
                        continue
                    base, scheme = cayley_scheme(G, labels, shift)
                    if not _good_truncation(base, scheme):
                        continue
                    cert = canonical_label(truncate(base, scheme)).edges
                    if cert in certificates:
                        continue
                    certificates.add(cert)
                    yield TruncationInstance(f"{name}:{labels}:{shift}", base, scheme, True)


def random_six_regular(n: int, rng: random.Random, tries: int = 1000) -> MultiGraph:
    """Connected loopless 6-regular multigraph with edge multiplicity at most 2,
    sampled from the configuration model."""
    for _ in range(tries):
        stubs = [v for v in range(n) for _ in range(6)]
        rng.shuffle(stubs)
        pairs = [(stubs[2 * i], stubs[2 * i + 1]) for i in range(3 * n)]
        if any(u == v for u, v in pairs):
            continue
        g = MultiGraph(n, pairs)
        if max(g.edge_set().values()) > 2 or not is_connected(g):
            continue
        return g
    raise GraphError("could not sample a 6-regular multigraph")


def _short_cycle_constraints(g: MultiGraph) -> list:
    """Corner lists for the base cycles that could give truncation cycles of
    length at most 6: parallel pairs need corner distances summing to 5 and
    triangles need 4."""
    cons = []
    by_pair: dict = {}
    for e, (u, v) in enumerate(g.ends):
        by_pair.setdefault((min(u, v), max(u, v)), []).append(e)
    for (u, v), es in by_pair.items():
        for e, f in itertools.combinations(es, 2):
            cons.append((5, [(_arc_from(g, e, u), _arc_from(g, f, u)), (_arc_from(g, e, v), _arc_from(g, f, v))]))
    for (a, b), eab in by_pair.items():
        for c in range(b + 1, g.n):
            eac = by_pair.get((a, c), [])
            ebc = by_pair.get((b, c), [])
            for x, y, z in itertools.product(eab, eac, ebc):
                cons.append((4, [
                    (_arc_from(g, x, a), _arc_from(g, y, a)),
                    (_arc_from(g, x, b), _arc_from(g, z, b)),
                    (_arc_from(g, y, c), _arc_from(g, z, c)),
                ]))
    return cons


def _arc_from(g, e, u):
    return Arc(e, 0) if g.ends[e][0] == u else Arc(e, 1)


def _repair_scheme(g: MultiGraph, rng: random.Random, steps: int = 3000):
    """Local search for a scheme meeting every short-cycle constraint."""
    cons = _short_cycle_constraints(g)
    rots = []
    for u in range(g.n):
        seq = list(g.out(u))
        rng.shuffle(seq)
        rots.append(seq)
    pos = {}
    for seq in rots:
        for i, a in enumerate(seq):
            pos[a] = i

    def dist(a, b):
        d = abs(pos[a] - pos[b])
        return min(d, 6 - d)

    def bad():
        return [c for c in cons if sum(dist(a, b) for a, b in c[1]) < c[0]]

    current = bad()
    for _ in range(steps):
        if not current:
            return DihedralScheme(g, rots)
        need, corners = current[rng.randrange(len(current))]
        u = g.tail(corners[rng.randrange(len(corners))][0])
        old = list(rots[u])
        new = list(old)
        rng.shuffle(new)
        for i, a in enumerate(new):
            pos[a] = i
        trial = bad()
        if len(trial) <= len(current):
            rots[u] = new
            current = trial
        else:
            for i, a in enumerate(old):
                pos[a] = i
    return None


def random_truncation_instances(count: int, seed: int = 0, max_vertices: int = 12,
                                arc_transitive_share: float = 0.5) -> list[TruncationInstance]:
    """Seeded mix of arc-transitive Cayley schemes and random schemes.

    Every instance truncates to a girth-6 graph with signature (0, 1, 1).
    Base vertices are randomly relabelled so the constructions do not share
    vertex orders.
    """
    rng = random.Random(seed)
    want_at = round(count * arc_transitive_share)
    pool = list(arc_transitive_six_valent(max_vertices)) if want_at else []
    if not pool:
        want_at = 0
    out = []
    for k in range(want_at):
        inst = pool[rng.randrange(len(pool))] if k >= len(pool) else pool[k]
        perm = list(range(inst.base.n))
        rng.shuffle(perm)
        base = inst.base.relabel(perm)
        rotations = [None] * base.n
        for v, rot in enumerate(inst.scheme.rotations):
            rotations[perm[v]] = rot
        scheme = DihedralScheme(base, rotations)
        out.append(TruncationInstance(inst.name + f":relabel{k}", base, scheme, True))
    while len(out) < count:
        n = rng.randint(min(7, max_vertices), max_vertices)
        base = random_six_regular(n, rng)
        scheme = _repair_scheme(base, rng)
        if scheme is not None and _good_truncation(base, scheme):
            out.append(TruncationInstance(f"random:n={n}:{len(out)}", base, scheme, False))
    return out


def generic_hex_tori(count: int, seed: int = 0, min_det: int = 13, max_det: int = 60):
    """Seeded hexagonal tori whose skeletons have signature (2, 2, 2)."""
    from .torus import hex_torus

    rng = random.Random(seed)
    out = []
    seen = set()
    while len(out) < count:
        p, q, r, s = (rng.randint(-8, 8) for _ in range(4))
        det = abs(p * s - q * r)
        if not (min_det <= det <= max_det):
            continue
        try:
            m = hex_torus((p, q, r, s))
        except (GraphError, PreconditionError):
            continue
        rep = girth_report(m.graph)
        if rep.girth == 6 and rep.signature.signature == (2, 2, 2):
            from .torus import hermite_basis

            key = hermite_basis((p, q, r, s))
            if key in seen:
                continue
            seen.add(key)
            out.append(((p, q, r, s), m))
    return out


def truncated_triangle_maps(specs=((7, True, 7), (7, False, 8), (13, True, 7)), seed: int = 0):
    """Truncations of orientably-regular maps of type {3, l}.

    ``specs`` lists ``(p, special, l)``: the group is PSL(2, p) when
    ``special`` else PGL(2, p), and l is the vertex valence.
    """
    from .maps import map_truncation
    from .torus import projective_linear_group, regular_map, triangle_generators

    out = []
    for p, special, ell in specs:
        G = projective_linear_group(p, special)
        rf = triangle_generators(G, ell, random.Random(seed))
        if rf is None:
            raise PreconditionError(f"no ({2},{3},{ell}) generation found for p={p}")
        m = regular_map(G, *rf)
        out.append((f"{'PSL' if special else 'PGL'}(2,{p}){{3,{ell}}}", m, map_truncation(m)))
    return out
