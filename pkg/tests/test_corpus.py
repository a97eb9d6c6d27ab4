import random
from math import gcd

import pytest

from girthsig.automorphisms import are_isomorphic, scheme_automorphisms, transitivity
from girthsig.corpus import (
    arc_transitive_six_valent,
    cayley_scheme,
    generic_hex_tori,
    group_automorphisms,
    random_six_regular,
    random_truncation_instances,
    small_groups,
    truncated_triangle_maps,
)
from girthsig.girth import girth_report
from girthsig.graph import is_connected
from girthsig.groups import cyclic_group
from girthsig.schemes import contract_girth_cycles
from girthsig.torus import hermite_basis


def phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


# |Aut| from standard formulas: phi(m) for cyclic, n*phi(n) for dihedral, |GL(k, p)| for elementary abelian
KNOWN = {"Z2xZ2": 6, "Z2xZ2xZ2": 168, "Z3xZ3": 48, "Q8": 24, "A4": 24, "Z2xZ4": 8, "Z2xZ6": 12}


def test_small_groups_are_groups():
    for name, G in small_groups(12).items():
        assert G.check_axioms(), name


@pytest.mark.parametrize("name", list(small_groups(12)))
def test_group_automorphism_counts(name):
    G = small_groups(12)[name]
    auts = group_automorphisms(G)
    if name in KNOWN:
        want = KNOWN[name]
    elif name.startswith("Z"):
        want = phi(int(name[1:]))
    else:
        n = int(name[1:])
        want = n * phi(n)
    assert len(auts) == want
    for a in auts[:5]:
        assert all(a[G.mul[x][y]] == G.mul[a[x]][a[y]] for x in range(G.order) for y in range(G.order))


def test_cayley_scheme_shape():
    base, scheme = cayley_scheme(cyclic_group(9), [1, 2, 4, 8, 7, 5], 3)
    assert base.n == 9 and base.degrees() == [6] * 9
    assert scheme_automorphisms(base, scheme).arc_transitive


def test_arc_transitive_pool():
    pool = list(arc_transitive_six_valent())
    assert len(pool) >= 4
    for inst in pool:
        t = inst.truncation()
        assert inst.arc_transitive_construction
        assert transitivity(t).vertex_transitive
        assert girth_report(t).signature.signature == (0, 1, 1)
    for a in range(len(pool)):
        for b in range(a + 1, len(pool)):
            assert not are_isomorphic(pool[a].truncation(), pool[b].truncation())


@pytest.mark.parametrize("n", [7, 9, 12])
def test_random_six_regular(n):
    rng = random.Random(n)
    for _ in range(5):
        g = random_six_regular(n, rng)
        assert g.degrees() == [6] * n and is_connected(g)
        assert all(u != v for u, v in g.ends)
        assert max(g.edge_set().values()) <= 2


def test_random_truncation_instances():
    insts = random_truncation_instances(12, seed=3)
    assert len(insts) == 12
    assert sum(i.arc_transitive_construction for i in insts) == 6
    for inst in insts:
        assert inst.base.n <= 12
        t = inst.truncation()
        rep = girth_report(t)
        assert rep.girth == 6 and rep.signature.signature == (0, 1, 1)
        con = contract_girth_cycles(t)
        assert are_isomorphic(con.base, inst.base)


def test_random_truncation_instances_seeded():
    a = random_truncation_instances(5, seed=8)
    b = random_truncation_instances(5, seed=8)
    assert [i.base for i in a] == [i.base for i in b]
    assert [i.scheme for i in a] == [i.scheme for i in b]


def test_generic_hex_tori_distinct():
    tori = generic_hex_tori(8, seed=0)
    assert len({hermite_basis(b) for b, _ in tori}) == 8
    for b, m in tori:
        assert girth_report(m.graph).signature.signature == (2, 2, 2)


def test_triangle_maps():
    out = truncated_triangle_maps(((7, True, 7), (7, False, 8)))
    assert [m.map_type for _, m, _ in out] == [(3, 7), (3, 8)]
    for _, m, t in out:
        assert t.graph.n == 2 * m.graph.m
