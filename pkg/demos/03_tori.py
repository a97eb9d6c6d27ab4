"""
Hexagonal tori
==============

Quotients of the hexagonal tiling by a lattice are {6,3} maps on the torus.
Their skeletons either belong to one of the dihedral families or have no
6-cycles besides the faces.
"""

from girthsig import are_isomorphic, families, girth_report, verify_corollary
from girthsig.corpus import generic_hex_tori
from girthsig.torus import hex_torus, psi_map

# the Heawood graph is the 7-hexagon torus
heawood = hex_torus((2, 1, -1, 3))
print(heawood, are_isomorphic(heawood.graph, families.named_graph("Heawood")))

# Psi_n from the lattice spanned by (1, 2) and (0, n)
for n in (10, 11, 12):
    print(f"psi({n}) on the torus:", are_isomorphic(hex_torus((1, 2, 0, n)).graph, families.psi(n)))

# Psi_12 has 6-cycles that are not faces
print(verify_corollary(psi_map(12)))

# generic tori: signature (2,2,2) and the faces are exactly the 6-cycles
for basis, m in generic_hex_tori(4, seed=0):
    rep = girth_report(m.graph)
    print(basis, m.graph.n, "vertices", rep.signature, verify_corollary(m).branch)

# small lattices fold the hexagons onto themselves
print("girth of the 4-hexagon torus:", girth_report(hex_torus((2, 0, 0, 2)).graph).girth)
