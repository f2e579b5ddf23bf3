"""
Census of invariant triples by order
====================================

For one order n, group every connected isomorphism class by its triple.
Counts, least edge counts, and up to four lexicographically least graph6
witnesses come back per row, independent of worker count.
"""

from eml import census

for n in range(2, 8):
    rows = census(n)
    total = sum(row.count for row in rows)
    print(f"n={n}: {total} connected classes across {len(rows)} triples")

print()
print("n=7 breakdown:")
print(f"{'triple':>10} {'count':>6} {'min|E|':>7}  witness")
for row in census(7):
    print(f"{str(row.triple):>10} {row.count:>6} {row.min_edges:>7}  {row.witnesses[0]}")

# the census is how least-order claims get settled: e.g. no (2,2,2) row
# appears at n = 4, so the smallest (2,2,2) graph has 5 vertices
present = {row.triple for row in census(4)}
print()
print("(2,2,2) realizable on 4 vertices:", (2, 2, 2) in present)
print("(2,2,2) realizable on 5 vertices:", (2, 2, 2) in {r.triple for r in census(5)})
