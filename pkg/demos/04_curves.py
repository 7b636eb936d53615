"""
Nodal curves and dual graphs
============================

For a curve with only nodes, W0H1 is the first Betti number of the dual
graph.  Here the general pipeline is run on the branch data of a few
graphs and compared with E - V + C.
"""

import random

from w0h1.weights import CurveDualGraph, curve_branch_data, curve_w0_from_graph, full_pipeline

named = {
    "nodal cubic": CurveDualGraph(1, ((0, 0),)),
    "two lines": CurveDualGraph(2, ((0, 1),)),
    "two conics": CurveDualGraph(2, ((0, 1), (0, 1))),
    "triangle of lines": CurveDualGraph(3, ((0, 1), (1, 2), (2, 0))),
}
for name, g in named.items():
    rep = full_pipeline(curve_branch_data(g))
    print(f"{name:<18} {rep.as_tuple()}  betti {curve_w0_from_graph(g)}")

# Random multigraphs: both sides always agree
rng = random.Random(1)
agree = 0
for _ in range(500):
    v = rng.randint(1, 5)
    g = CurveDualGraph(v, tuple((rng.randrange(v), rng.randrange(v))
                                for _ in range(rng.randint(0, 8))))
    agree += full_pipeline(curve_branch_data(g)).dim_w0_h1 == curve_w0_from_graph(g)
print(f"{agree}/500 random curves agree")
