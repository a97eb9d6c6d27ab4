import random
from fractions import Fraction

import pytest

from girthsig import families
from girthsig.automorphisms import are_isomorphic, automorphism_group, transitivity
from girthsig.corpus import generic_hex_tori, truncated_triangle_maps
from girthsig.errors import GraphError, PreconditionError
from girthsig.girth import girth, girth_report
from girthsig.graph import Arc, MultiGraph
from girthsig.maps import (
    euler_characteristic,
    faces_from_girth_cycles,
    map_from_walks,
    map_truncation,
    reconstruct_triangulation,
    walk_from_vertices,
)
from girthsig.torus import (
    delta_map,
    hermite_basis,
    hex_torus,
    projective_linear_group,
    psi_map,
    regular_map,
    sigma_map,
    triangle_generators,
)


def k4():
    return families.complete_graph(4)


def tetrahedron():
    g = k4()
    tris = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    return map_from_walks(g, [walk_from_vertices(g, t) for t in tris])


def platonic(p, special, ell):
    G = projective_linear_group(p, special)
    return regular_map(G, *triangle_generators(G, ell, random.Random(0)))


def test_tetrahedron_map():
    m = tetrahedron()
    assert m.map_type == (3, 3) and m.F == 4
    assert euler_characteristic(m) == 2 and m.is_orientable()


def test_hemicube_is_projective():
    g = k4()
    squares = [(0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2)]
    m = map_from_walks(g, [walk_from_vertices(g, s) for s in squares])
    assert m.map_type == (4, 3) and m.euler_characteristic == 1
    assert not m.is_orientable()


def test_edge_coverage_checked():
    g = k4()
    squares = [(0, 1, 2, 3), (0, 2, 3, 1)]
    with pytest.raises(GraphError, match="instead of 2"):
        map_from_walks(g, [walk_from_vertices(g, s) for s in squares])


def test_walk_must_close():
    g = k4()
    w = list(walk_from_vertices(g, (0, 1, 2)))
    with pytest.raises(GraphError, match="closed"):
        map_from_walks(g, [w[:2]] * 6)


def test_walk_may_not_repeat_edge():
    g = MultiGraph(2, [(0, 1), (0, 1), (0, 1)])
    a, b, c = Arc(0, 0), Arc(1, 0), Arc(2, 0)
    walk = [a, Arc(0, 1), a, Arc(0, 1)]
    with pytest.raises(GraphError, match="more than once"):
        map_from_walks(g, [walk, [b, Arc(2, 1), c, Arc(1, 1)]])


def test_tetrahedron_truncation():
    t = map_truncation(tetrahedron())
    assert (t.graph.n, t.graph.m, t.F, t.euler_characteristic) == (12, 18, 8, 2)


def test_icosahedron_truncation():
    ico = platonic(5, True, 5)
    assert ico.map_type == (3, 5) and ico.euler_characteristic == 2
    t = map_truncation(ico)
    assert t.graph.n == 60 and girth(t.graph) == 5
    with pytest.raises(PreconditionError):
        reconstruct_triangulation(t.graph)


def test_octahedron_and_cube_counts():
    octa = platonic(3, False, 4)
    assert (octa.graph.n, octa.graph.m, octa.F) == (6, 12, 8)


def test_klein_map():
    m = platonic(7, True, 7)
    assert (m.graph.n, m.graph.m, m.F, m.euler_characteristic) == (24, 84, 56, -4)
    assert m.map_type == (3, 7) and m.is_orientable()
    t = map_truncation(m)
    rep = girth_report(t.graph)
    assert rep.girth == 6 and rep.signature.signature == (1, 1, 2)
    assert t.euler_characteristic == m.euler_characteristic


def test_reconstruct_round_trip():
    for name, m, t in truncated_triangle_maps(((7, True, 7), (7, False, 8))):
        r = reconstruct_triangulation(t.graph)
        assert r.map_type == m.map_type
        assert are_isomorphic(r.graph, m.graph)
        assert are_isomorphic(map_truncation(r).graph, t.graph)


def test_reconstruct_rejects_other_signatures():
    with pytest.raises(PreconditionError, match=r"\(1, 1, 2\)"):
        reconstruct_triangulation(families.psi(10))


# tori ---------------------------------------------------------------------------


def test_hermite_basis():
    a, b, c = hermite_basis((2, 1, -1, 3))
    assert a * c == 7 and 0 <= b < c
    # same lattice from a different basis
    assert hermite_basis((2, 1, 1, 4)) == (a, b, c)
    assert hermite_basis((-1, 3, 2, 1)) == (a, b, c)
    with pytest.raises(PreconditionError, match="determinant"):
        hermite_basis((1, 2, 2, 4))
    with pytest.raises(PreconditionError):
        hex_torus((1, 2, 2, 4))


@pytest.mark.parametrize("basis", [(2, 1, -1, 3), (3, 1, -1, 4), (4, 0, 0, 4), (5, 2, 1, 5)])
def test_hex_torus_shape(basis):
    m = hex_torus(basis)
    det = abs(basis[0] * basis[3] - basis[1] * basis[2])
    assert m.graph.n == 2 * det and m.map_type == (6, 3)
    assert m.euler_characteristic == 0 and m.is_orientable()


def test_heawood_on_torus():
    assert are_isomorphic(hex_torus((2, 1, -1, 3)).graph, families.named_graph("Heawood"))


@pytest.mark.parametrize("n", range(7, 16))
def test_psi_on_torus(n):
    assert are_isomorphic(hex_torus((1, 2, 0, n)).graph, families.psi(n))


def test_generic_tori_are_222_and_vertex_transitive():
    for basis, m in generic_hex_tori(10, seed=1):
        rep = girth_report(m.graph)
        assert rep.girth == 6 and rep.signature.signature == (2, 2, 2)
        assert transitivity(m.graph).vertex_transitive
        f = faces_from_girth_cycles(m.graph)
        assert f.same_faces(m)


@pytest.mark.parametrize("make,faces", [(psi_map, 1), (sigma_map, 3), (delta_map, 3)])
def test_family_torus_maps(make, faces):
    for n in (4, 5, 7, 10):
        m = make(n)
        assert m.F == faces * n and m.map_type == (6, 3)
        assert m.euler_characteristic == 0 and m.is_orientable()


def test_faces_from_girth_cycles_examples():
    m = faces_from_girth_cycles(k4())
    assert m.euler_characteristic == 2 and m.same_faces(tetrahedron())
    with pytest.raises(PreconditionError, match=r"\(2, 2, 2\)"):
        faces_from_girth_cycles(families.named_graph("Heawood"))


@pytest.mark.parametrize("g", [families.complete_graph(4), families.gp(4, 1), families.gp(10, 2)])
def test_euler_formula_for_222(g):
    rep = girth_report(g)
    assert rep.signature.signature == (2, 2, 2)
    m = faces_from_girth_cycles(g)
    assert m.euler_characteristic == g.n * (Fraction(3, rep.girth) - Fraction(1, 2))


def test_map_truncation_preserves_euler():
    for m in (tetrahedron(), platonic(3, False, 4), platonic(5, True, 5), psi_map(7), hex_torus((3, 1, -1, 4))):
        assert map_truncation(m).euler_characteristic == m.euler_characteristic
