#!/usr/bin/env python3
# Lattice of flats, reduced Moebius numbers and the closed forms built on them.

from activelat import families, uniform
from activelat.activity import top
from activelat.complexes import independence_complex
from activelat.corpus import wheel_orders
from activelat.flats import bjorner_homology, delta_homology_closed_form, flat_lattice, mobius_closed_form
from activelat.homology import homology
from activelat.lattice import build_external_lattice
from activelat.matroid import contract

# U(5,3): Boolean lattice truncated at rank 3, mu = (-1)^3 C(4,2)
fl = flat_lattice(uniform(5, 3))
print(len(fl.flats), "flats, mu =", fl.mobius())

# independence complexes are wedges of spheres
for m in (uniform(4, 2), families.complete(4), families.wheel(3)):
    print(homology(independence_complex(m)), "predicted", bjorner_homology(m))

# Delta(L(M)) from the contraction M.T; spokes last makes T the spokes,
# and M.T is then loopless with a Boolean lattice of flats
m = wheel_orders(4, seed=0, count=0)[0].matroid
mt = contract(m, top(m))
print("T =", [m.labels[e] for e in sorted(top(m))], "M.T loops:", sorted(mt.loops))
print("M.T flats:", len(flat_lattice(mt).flats), "mu(L_F(M.T)) =", flat_lattice(mt).mobius())
print("predicted", delta_homology_closed_form(m), mobius_closed_form(m))
print("computed mu(L(M)) =", build_external_lattice(m).mobius())
