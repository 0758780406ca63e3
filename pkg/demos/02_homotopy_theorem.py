#!/usr/bin/env python3
# Order complex of L(M) versus the independence complex of M*|T,
# the atom-join complex and the nerve of its atom cover.

from activelat import families, uniform, verify_main_theorem
from activelat.complexes import atom_join_cover, dual_top_restriction, independence_complex
from activelat.lattice import build_external_lattice

for name, m in [("U(5,3)", uniform(5, 3)), ("K4", families.complete(4)), ("W4", families.wheel(4))]:
    rep = verify_main_theorem(m)
    print(f"{name:7s} Delta {rep.delta}  IN(M*|T) {rep.independence}  nerve {rep.nerve}  ok={rep.ok}")

# K4 has homology in dimension 1 while Delta has dimension 2
rep = verify_main_theorem(families.complete(4))
print("K4 lattice rank", rep.lattice_rank, "dim Delta", rep.delta_dim, "below top:", rep.homology_below_top)

# the cover F_i = atoms avoiding t_i, and M*|T' it is isomorphic to
m = families.fan(3)
lat = build_external_lattice(m)
tp, cover = atom_join_cover(lat)
print("T' =", [m.labels[t] for t in tp])
for t, f in zip(tp, cover):
    print("  F for", m.labels[t], "->", [sorted(lat.element(a)) for a in sorted(f)])
print("IN(M*|T') facets:", [sorted(f) for f in independence_complex(dual_top_restriction(m, prime=True)).facets])
