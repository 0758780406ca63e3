#!/usr/bin/env python3
# The external activity lattice of a few small ordered matroids.

from activelat import build_external_lattice, families, uniform
from activelat.activity import ext_set, top

# a 5-cycle: every basis drops one edge, the top drops the smallest
m = families.cycle(5)
lat = build_external_lattice(m)
print("C5 top:", [m.labels[e] for e in sorted(top(m))])
print("C5 rank sequence:", lat.rank_sequence())  # bottom, 4 atoms, top
print("C5 mu:", lat.mobius())

# parallel edges give a chain
lat = build_external_lattice(families.parallel(4))
print("P4 covers:", lat.covers)

# U(4,2): ext sets and the order A <= B iff A in B + Ext(B)
u = uniform(4, 2)
lat = build_external_lattice(u)
for b in u.bases:
    print(sorted(b), "ext", sorted(ext_set(u, b)), "rank", lat.rank[lat.index[b]])
print("{0,1} <= {2,3}:", lat.leq({0, 1}, {2, 3}))
print("{0,3} <= {1,2}:", lat.leq({0, 3}, {1, 2}))

# the JSON form used by the CLI
print(lat.to_json())
