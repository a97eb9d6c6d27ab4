"""
Truncation and contraction
==========================

A dihedral scheme puts the arcs around each vertex on a cycle.  Truncating
replaces every vertex of valence k with a k-cycle following that order, giving
a cubic graph.  Contracting the girth cycles of a (0,1,1) graph undoes it.
"""

import random

from girthsig import (
    are_isomorphic, automorphism_group, contract_girth_cycles, girth, girth_report,
    random_scheme, scheme_automorphisms, transitivity, truncate,
)
from girthsig.corpus import cayley_scheme, small_groups
from girthsig.torus import projective_linear_group, regular_map, triangle_generators

# the octahedron as a regular map from PGL(2,3)
G = projective_linear_group(3, special=False)
octa = regular_map(G, *triangle_generators(G, 4))
print(octa)

t = truncate(octa.graph, octa.scheme)
print("truncated octahedron:", t.n, "vertices, girth", girth(t), "signature", girth_report(t).signature)
print("map scheme group order", scheme_automorphisms(octa.graph, octa.scheme).order)

# another scheme on the same graph
other = random_scheme(octa.graph, random.Random(5))
print("random scheme group order", scheme_automorphisms(octa.graph, other).order,
      "  same truncation?", are_isomorphic(truncate(octa.graph, other), t))

# a 6-valent Cayley graph on Z_9 whose labels follow a group automorphism
base, scheme = cayley_scheme(small_groups()["Z9"], [1, 2, 4, 8, 7, 5], 3)
t9 = truncate(base, scheme)
print("\nZ9 scheme: truncation has", t9.n, "vertices, signature", girth_report(t9).signature)
print("scheme arc-transitive:", scheme_automorphisms(base, scheme).arc_transitive)
print("truncation vertex-transitive:", transitivity(t9).vertex_transitive)

con = contract_girth_cycles(t9)
print("contracted base is 6-regular:", set(con.base.degrees()) == {6},
      " isomorphic to the original:", are_isomorphic(con.base, base))

# the K7 Cayley ordering with paired inverses gives girth 6 but loses vertex-transitivity
k7, s7 = cayley_scheme(small_groups()["Z7"], [1, 2, 3, 6, 5, 4], 3)
tk7 = truncate(k7, s7)
print("\nK7 ordering:", girth_report(tk7).signature, "vertex-transitive:", transitivity(tk7).vertex_transitive,
      "|Aut| =", automorphism_group(tk7).order)
