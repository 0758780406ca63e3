#!/usr/bin/env python3
# How often mu(L(M)) vanishes, and which criterion explains it.

from collections import Counter

from activelat.corpus import rows_to_csv, run_corpus, small_corpus, uniform_prediction
from activelat.families import complete, fan, triangle
from activelat.lattice import build_external_lattice
from activelat.theorems import check_cone_criterion, complete_graph_prediction

rows = run_corpus(small_corpus(seed=7))
print(rows_to_csv(rows[:5]))
print("mu = 0 in", sum(r["mu_zero"] for r in rows), "of", len(rows))
print(Counter(r["criterion"] for r in rows))

# uniform matroids: zero exactly when k <= n/2
for n in range(2, 8):
    print(n, [uniform_prediction(n, k)[1] for k in range(1, n + 1)])

# fans and triangle graphs are cones
for m in (fan(4), triangle(4)):
    rep = check_cone_criterion(m)
    print([m.labels[e] for e in rep.witness], rep.computed, rep.computed_mobius)

# K_n with the lex order: T is a star at the last vertex
for n in (3, 4):
    m = complete(n)
    print(f"K{n}", complete_graph_prediction(m, n), build_external_lattice(m).mobius())
