"""
Classifying girth-6 vertex-transitive cubic graphs
==================================================

classify() checks the gates (cubic, connected, girth 6, vertex-transitive) and
then dispatches on the signature.
"""

from girthsig import classify, families, survey
from girthsig.corpus import arc_transitive_six_valent, generic_hex_tori, truncated_triangle_maps

graphs = {
    "Heawood": families.named_graph("Heawood"),
    "psi(12)": families.psi(12),
    "sigma(5)": families.sigma(5),
    "delta(7)": families.delta(7),
    "Pappus": families.named_graph("Pappus"),
    "gp(10,3)": families.gp(10, 3),
    "Petersen": families.named_graph("Petersen"),
}
basis, torus = generic_hex_tori(1, seed=3)[0]
graphs[f"torus{basis}"] = torus.graph.without_labels()
name, klein, tr_klein = truncated_triangle_maps(((7, True, 7),))[0]
graphs["Tr(" + name + ")"] = tr_klein.graph
inst = next(iter(arc_transitive_six_valent()))
graphs[inst.name] = inst.truncation()

for name, g in graphs.items():
    print(f"{name:28s} {classify(g).summary()}")

# a small census table
print()
print(survey([families.psi(n) for n in range(7, 16)] + [families.sigma(n) for n in range(3, 8)]
             + [families.named_graph("Coxeter")]).render())
