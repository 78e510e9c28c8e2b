"""Minimal coset representatives, Bruhat arrows, and sign assignments.

Draws the coset graph of the Grassmannian Gr(2,4) level by level and shows
a sign assignment whose product around every square is -1.
"""
from __future__ import annotations

from qbgg.cartan import ParabolicData, RootSystem
from qbgg.weyl import BruhatGraph, incomparability_report

G = BruhatGraph(ParabolicData(RootSystem("A3"), {1, 3}))
print("Gr(2,4): %d cosets in %d levels" % (len(G.cosets), len(G.levels)))
for j, lvl in enumerate(G.levels):
    print("  level %d: %s" % (j, ", ".join(str(w) for w in lvl)))
print("arrows (with sign and reflecting root):")
for a in G.arrows:
    print("  %s -> %s  root %s  sign %+d"
          % (a.source, a.target, list(a.root), G.sign(a.source, a.target)))
for (w1, w2, w3, w4) in G.squares:
    prod = (G.sign(w1, w2) * G.sign(w2, w4)
            * G.sign(w1, w3) * G.sign(w3, w4))
    print("square %s -> {%s, %s} -> %s: sign product %+d"
          % (w1, w2, w3, w4, prod))

rep = incomparability_report(G)
print("incomparability of equal-length dot points:", rep["ok"])
