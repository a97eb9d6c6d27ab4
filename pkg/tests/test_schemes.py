import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from girthsig import families
from girthsig.automorphisms import are_isomorphic, scheme_automorphisms
from girthsig.corpus import arc_transitive_six_valent, random_truncation_instances, random_six_regular
from girthsig.errors import GraphError, PreconditionError
from girthsig.girth import girth, girth_cycles, girth_report
from girthsig.graph import Arc, MultiGraph, is_simple, regular_degree
from girthsig.schemes import (
    DihedralScheme,
    arbitrary_scheme,
    contract_girth_cycles,
    random_scheme,
    scheme_from_rotations,
    truncate,
)
from girthsig.torus import projective_linear_group, regular_map, triangle_generators


def octahedron_map():
    G = projective_linear_group(3, special=False)
    return regular_map(G, *triangle_generators(G, 4))


def test_path_graph_rejected():
    g = MultiGraph(3, [(0, 1), (1, 2)])
    with pytest.raises(GraphError, match="valence"):
        arbitrary_scheme(g)


def test_scheme_must_permute_out_arcs():
    g = families.complete_graph(4)
    rots = [list(g.out(u)) for u in range(4)]
    rots[0][0] = rots[1][0]
    with pytest.raises(GraphError, match="permutation"):
        scheme_from_rotations(g, rots)


def test_k4_schemes_coincide():
    g = families.complete_graph(4)
    base = arbitrary_scheme(g)
    for perm in itertools.permutations(range(3)):
        rots = [[g.out(u)[i] for i in perm] for u in range(4)]
        assert scheme_from_rotations(g, rots) == base


def test_scheme_relation_is_two_regular():
    m = octahedron_map()
    rel = m.scheme.relation()
    deg = {}
    for a, b in rel:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    assert set(deg.values()) == {2} and len(deg) == 24


def test_octahedron_truncation():
    m = octahedron_map()
    assert (m.graph.n, m.graph.m, m.F, m.map_type) == (6, 12, 8, (3, 4))
    t = truncate(m.graph, m.scheme)
    assert t.n == 24 and regular_degree(t) == 3
    # squares from the vertices, hexagons from the faces
    assert girth(t) == 4 and len(girth_cycles(t)) == 6
    for u in range(6):
        cyc = [a.index for a in m.scheme.rotation(u)]
        for i in range(4):
            assert t.edge_between(cyc[i], cyc[(i + 1) % 4]) is not None


def test_truncated_tetrahedron():
    t = truncate(families.complete_graph(4), arbitrary_scheme(families.complete_graph(4)))
    rep = girth_report(t)
    assert t.n == 12 and rep.girth == 3 and rep.signature.signature == (0, 1, 1)
    con = contract_girth_cycles(t)
    assert are_isomorphic(con.base, families.complete_graph(4))


def test_k7_truncation_order():
    k7 = families.complete_graph(7)
    t = truncate(k7, random_scheme(k7, random.Random(1)))
    assert t.n == 42 and regular_degree(t) == 3


def test_loop_arcs_adjacent_rejected():
    g = MultiGraph(2, [(0, 0), (0, 1), (0, 1), (1, 1)])
    rots = [[Arc(0, 0), Arc(0, 1), Arc(1, 0), Arc(2, 0)], [Arc(1, 1), Arc(3, 0), Arc(2, 1), Arc(3, 1)]]
    with pytest.raises(GraphError, match="loop"):
        truncate(g, scheme_from_rotations(g, rots))
    rots[0] = [Arc(0, 0), Arc(1, 0), Arc(0, 1), Arc(2, 0)]
    rots[1] = [Arc(3, 0), Arc(3, 1), Arc(1, 1), Arc(2, 1)]
    with pytest.raises(GraphError, match="loop 3"):
        truncate(g, scheme_from_rotations(g, rots))
    rots[1] = [Arc(3, 0), Arc(1, 1), Arc(3, 1), Arc(2, 1)]
    t = truncate(g, scheme_from_rotations(g, rots))
    assert t.n == 8 and regular_degree(t) == 3 and is_simple(t)


def test_scheme_distance_and_equality():
    g = families.complete_graph(5)
    s = arbitrary_scheme(g)
    a, b, c, d = g.out(0)
    assert s.distance(a, b) == 1 and s.distance(a, c) == 2 and s.distance(a, d) == 1
    rev = DihedralScheme(g, [list(reversed(s.rotation(u))) for u in range(5)])
    assert rev == s and hash(rev) == hash(s)


def test_contract_rejects_other_signatures():
    with pytest.raises(PreconditionError, match=r"\(0, 1, 1\)"):
        contract_girth_cycles(families.named_graph("Heawood"))
    with pytest.raises(PreconditionError):
        contract_girth_cycles(families.complete_graph(5))


def _loopless_base(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 7)
    ends = []
    for _ in range(rng.randint(n, 3 * n)):
        u, v = rng.sample(range(n), 2)
        ends.append((u, v))
    g = MultiGraph(n, ends)
    # top up to minimum valence 3
    extra = []
    for u in range(n):
        for _ in range(max(0, 3 - g.degree(u))):
            v = rng.choice([x for x in range(n) if x != u])
            extra.append((u, v))
    return MultiGraph(n, ends + extra), rng


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_truncation_invariants(seed):
    g, rng = _loopless_base(seed)
    s = random_scheme(g, rng)
    t = truncate(g, s)
    assert is_simple(t) and regular_degree(t) == 3 and t.n == 2 * g.m
    for u in range(g.n):
        cyc = [a.index for a in s.rotation(u)]
        k = len(cyc)
        assert all(t.edge_between(cyc[i], cyc[(i + 1) % k]) is not None for i in range(k))
    for e in range(g.m):
        assert t.edge_between(2 * e, 2 * e + 1) is not None


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_contract_round_trip(seed):
    (inst,) = random_truncation_instances(1, seed=seed, arc_transitive_share=0)
    t = inst.truncation()
    con = contract_girth_cycles(t)
    assert are_isomorphic(con.base, inst.base)
    assert regular_degree(con.base) == 6
    assert are_isomorphic(truncate(con.base, con.scheme), t)
    # arc_vertex maps base arcs onto the vertices of t
    assert sorted(con.arc_vertex) == list(range(t.n))


def test_scheme_group_of_cayley_schemes_is_arc_transitive():
    for inst in arc_transitive_six_valent(8):
        assert scheme_automorphisms(inst.base, inst.scheme).arc_transitive


def test_random_six_regular():
    g = random_six_regular(9, random.Random(4))
    assert regular_degree(g) == 6 and all(u != v for u, v in g.ends)
