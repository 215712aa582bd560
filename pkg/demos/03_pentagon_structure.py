"""Pentagons through edges, irregular edges, and pentagonal surfaces.

The Triplex graph is a 12-cycle with six chords. Half of its edges lie on
three pentagons (irregular), which is exactly what stops the face-by-face
gluing that works for the dodecahedron and the Petersen graph.
"""
from collections import Counter

from ricci_flat import dodecahedral, edge_profile, pentagon_embedding, petersen, triplex, verify_lemma1
from ricci_flat.pentagon import all_five_cycles, edge_profiles

t = triplex()
print("Triplex pentagons:", len(all_five_cycles(t)))
print("pentagons per edge:", Counter(p.c5_count for p in edge_profiles(t)))

# Edge (1,2) in the 1-indexed drawing is (0,1) here.
prof = edge_profile(t, 0, 1)
print("edge (1,2): x-neighbors", [v + 1 for v in prof.x_nbrs], "y-neighbors", [v + 1 for v in prof.y_nbrs])
for (i, j), cyc in sorted(prof.slots.items()):
    print(f"  slot x_{i} x y y_{j}:", None if cyc is None else [v + 1 for v in cyc])
print("  irregular:", prof.irregular, " opposite pair:", prof.has_opposite_pair)

for name, g in (("petersen", petersen()), ("triplex", t), ("dodecahedral", dodecahedral())):
    print(f"{name}: every flat 3-3 edge has an opposite pair -> {verify_lemma1(g).passed}")

for name, g in (("dodecahedral", dodecahedral()), ("petersen", petersen()), ("triplex", t)):
    r = pentagon_embedding(g)
    if r.closed:
        print(f"{name}: closed surface, {len(r.faces)} pentagons, Euler characteristic {r.euler_characteristic}")
    else:
        w = r.witness
        print(f"{name}: gluing stops at edge {w} ({r.reason}); irregular: {edge_profile(g, *w).irregular}")
