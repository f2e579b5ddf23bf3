"""
Generator families hitting prescribed invariant triples
=======================================================

Each family lands on a stated triple with a stated edge count; the solver
re-derives both from scratch so nothing here is taken on faith.
"""

from math import comb

from eml import f1, g1, g2, g3, g4, g5, g_r, invariant_triple, is_tree

# clique with a pendant on every vertex: triple (1, ceil(r/2), r), C(r+1,2) edges
for r in (2, 5, 8):
    g = g_r(r)
    print(f"g_r({r}):  n={g.n:2} e={g.num_edges():2}", tuple(invariant_triple(g)),
          "edges == C(r+1,2):", g.num_edges() == comb(r + 1, 2))

# least-edge families for p == q
for q in (2, 4):
    a = g1(q)           # (q, q, q+1) with 2q+1 edges
    b = g3(q)           # (q, q, q)   with 2q edges
    print(f"g1({q}):", tuple(invariant_triple(a)), f"{a.num_edges()} edges;",
          f"g3({q}):", tuple(invariant_triple(b)), f"{b.num_edges()} edges")

# g2(q, r) is a tree on 2r vertices realizing (q, q, r) with 2r - 1 edges
g = g2(3, 5)
print("g2(3,5): tree:", is_tree(g), tuple(invariant_triple(g)), g.num_edges(), "edges")

# induced-matching-1 families: g4 for r = q + 1, g5 for q+2 <= r <= 2q-2
g = g4(4)
print("g4(4):", tuple(invariant_triple(g)), g.num_edges(), "edges (q^2 + 2 =", 4 * 4 + 2, ")")
g = g5(4, 6)
print("g5(4,6):", tuple(invariant_triple(g)), g.num_edges(), "edges (f1(4,6) =", f1(4, 6), ")")

# labels record the construction roles, handy when eyeballing adjacency
g = g1(2)
print("g1(2) vertex roles:", [g.label_of(v) for v in range(g.n)])
