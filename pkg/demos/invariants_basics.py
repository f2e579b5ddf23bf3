"""
Three matching invariants on small named graphs
===============================================

Every connected graph with an edge gets an exact triple
(induced matching number, minimum maximal matching number, matching number),
written (p, q, r) here.  The chain 1 <= p <= q <= r <= 2q always holds.
"""

from eml import (
    complete,
    complete_bipartite,
    cycle,
    has_perfect_matching,
    independence_number,
    invariant_triple,
    parse_graph6,
)

zoo = {
    "K_4": complete(4),
    "K_5": complete(5),
    "K_{2,3}": complete_bipartite(2, 3),
    "C_5": cycle(5),
    "C_9": cycle(9),
    "Petersen": parse_graph6("IheA@GUAo"),
}

for name, g in zoo.items():
    p, q, r = invariant_triple(g)
    assert 1 <= p <= q <= r <= 2 * q
    print(
        f"{name:9} n={g.n:2} e={g.num_edges():2}  (p,q,r)=({p},{q},{r})"
        f"  alpha={independence_number(g)}  perfect matching: {has_perfect_matching(g)}"
    )

# the two smallest graphs where p < q: the complete graph K_4 and the 5-cycle
for g in (complete(4), cycle(5)):
    print(invariant_triple(g), "<- (1, 2, 2) on", g.n, "vertices")

# a perfect matching exists exactly when n equals 2r
g = cycle(6)
p, q, r = invariant_triple(g)
print("C_6:", (p, q, r), "n == 2r:", g.n == 2 * r, "==", has_perfect_matching(g))
