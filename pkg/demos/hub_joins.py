"""
Hub joins: predictable invariants from parts
============================================

Take connected parts H_1..H_s, each with induced matching number 1, add one
hub vertex adjacent to a chosen attach vertex per part.  When every part
passes the hypothesis checks, the composite's p equals s and its q equals
the sum of the parts' minimum maximal matching numbers -- no solver needed.
"""

from eml import (
    StarJoinSpec,
    check_thm_ind_hypotheses,
    check_thm_min_hypotheses,
    complete_bipartite,
    emit_graph6,
    extremal_spec,
    g_r,
    invariant_triple,
    predicted_invariants,
    star_join,
)

# two K_{2,2} blocks (tag "b": complete bipartite) and one clique-with-pendants
# block attached at x1 (tag "a": the attach vertex has a degree-1 neighbor)
spec = StarJoinSpec((
    (complete_bipartite(2, 2), 0, "b"),
    (complete_bipartite(2, 2), 3, "b"),
    (g_r(4), 0, "a"),
))

print("induced-matching hypotheses ok:", check_thm_ind_hypotheses(spec).ok)
print("minimum-matching hypotheses ok:", check_thm_min_hypotheses(spec).ok)

predicted = predicted_invariants(spec)
g = star_join(spec)
solved = invariant_triple(g)
print("predicted:", tuple(predicted), " solver:", tuple(solved), " graph6:", emit_graph6(g))

# a part can fail a hypothesis; the report says which clause and why
bad = StarJoinSpec((
    (complete_bipartite(2, 2), 0, "a"),  # no degree-1 neighbor anywhere
    (g_r(2), 0, "a"),
))
report = check_thm_ind_hypotheses(bad)
for part in report.parts:
    print(f"part {part.index}: ok={part.ok}", *part.problems)

# extremal_spec picks the cheapest passing part list for a target (p, q, r)
for target in ((2, 3, 3), (2, 4, 6), (3, 5, 9)):
    g = star_join(extremal_spec(*target))
    print("target", target, "-> solver", tuple(invariant_triple(g)),
          f"with {g.num_edges()} edges on {g.n} vertices")
