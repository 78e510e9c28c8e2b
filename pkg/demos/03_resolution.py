"""The resolution complex for the projective plane.

Solves the singular vectors for each arrow, normalizes the standard maps
over the squares, checks that consecutive differentials compose to zero,
and verifies slicewise exactness against the trivial module.
"""
from __future__ import annotations

from qbgg.bgg import BGGComplex
from qbgg.cartan import ParabolicData, RootSystem
from qbgg.weyl import BruhatGraph

G = BruhatGraph(ParabolicData(RootSystem("A2"), {1}))
bgg = BGGComplex(G)

print("levels:", [", ".join(str(w) for w in lvl) for lvl in G.levels])
for a in G.arrows:
    y = bgg.maps.y(a.source, a.target)
    print("map %s -> %s: %d term(s)" % (a.source, a.target, len(y)))

sq = bgg.verify_squared_zero()
print("consecutive composites vanish:", sq["ok"])

ex = bgg.verify_exactness(5)
print("slicewise exactness to height 5:", ex["ok"])
for rec in ex["slices"][:8]:
    print("  offset %s: dims %s ranks %s exact %s"
          % (rec["offset"], rec["dims"], rec["ranks"], rec["exact"]))
