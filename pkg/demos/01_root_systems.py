"""Root systems, parabolic data, and cominuscule flags.

Builds a few root systems, prints their positive roots, and classifies
which single-node parabolics give irreducible (cominuscule) flags.
"""
from __future__ import annotations

from qbgg.cartan import ParabolicData, RootSystem

for name in ("A3", "B3", "G2"):
    rs = RootSystem(name)
    print("== %s: rank %d, %d positive roots" % (name, rs.rank,
                                                 len(rs.positive_roots)))
    print("   Cartan matrix:", rs.cartan)
    print("   symmetrizers: ", rs.d)
    print("   highest root: ", rs.highest_root(),
          "(height %d)" % sum(rs.highest_root()))
    for s in range(1, rs.rank + 1):
        S = set(range(1, rs.rank + 1)) - {s}
        P = ParabolicData(rs, S)
        tag = "cominuscule" if P.irreducible_flag else "not cominuscule"
        print("   node %d: %s" % (s, tag))
    print()

# the quotient g/p for a cominuscule node is abelian: every quotient root
# carries the excluded simple root with coefficient exactly one
rs = RootSystem("A3")
P = ParabolicData(rs, {1, 3})
print("Gr(2,4) quotient roots:", [list(b) for b in P.quotient_roots])
