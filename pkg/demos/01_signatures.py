"""
Girth signatures of the dihedral families
=========================================

Every edge of a cubic graph lies on some number of shortest cycles.  When all
vertices see the same sorted triple of these counts, that triple is the
signature of the graph.
"""

from girthsig import families, girth_report, check_signature_laws

# Psi_n is a Cayley graph on the dihedral group of order 2n
for n in (7, 8, 9, 10, 16):
    rep = girth_report(families.psi(n))
    print(f"psi({n:2d})  girth {rep.girth}  {rep.cycle_count:3d} girth cycles  signature {rep.signature}")

# Sigma_n lives on D_n x Z_3, Delta_n on D_3n; both settle at (2, 3, 3)
for n in (3, 4, 5, 6):
    print(f"sigma({n}) {girth_report(families.sigma(n)).signature}   delta({n}) {girth_report(families.delta(n)).signature}")

# the per-edge counts themselves
rep = girth_report(families.psi(10))
print("psi(10) eps values:", sorted(set(rep.eps)))

# sum of eps over edges counts each cycle once per edge
print("sum eps =", sum(rep.eps), "= girth * cycles =", rep.girth * rep.cycle_count)

# necessary conditions on any signature
print(check_signature_laws((3, 4, 5), 6).ok)           # realised by psi(n), n >= 10
print(check_signature_laws((0, 2, 2), 6).violated)      # a zero forces (0, 1, 1)
print(check_signature_laws((1, 1, 2), 5).violated)      # c = a + b needs even girth

# graphs meeting the upper bound c = 2^floor(g/2)
for name in ("K4", "K33", "Petersen", "Heawood", "TutteCoxeter", "Tutte12Cage"):
    rep = girth_report(families.named_graph(name))
    print(f"{name:12s} girth {rep.girth:2d}  signature {rep.signature}")
