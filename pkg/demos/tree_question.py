"""
Do trees always have equal induced and minimum matching numbers?
================================================================

Open question.  The scan below checks every nonisomorphic tree up to a
given order; a counterexample would come back as a graph6 string with its
two differing invariants.  If the answer is ever "no", the conditional
least-edges value 2p + 3 for triples (p, p+1, p+1) loses its proof.
"""

from eml import (
    conditional_theorem42_check,
    induced_matching_number,
    min_maximal_matching_number,
    tree_conjecture_check,
)

report = tree_conjecture_check(12)
for order, count in report.per_order:
    print(f"order {order:2}: {count:3} trees checked")
print("total:", report.total, " counterexample:", report.counterexample)

# paths are the tight case: both invariants equal ceil((n-1)/3)
from eml import Graph

for n in (4, 7, 10):
    path = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    print(f"P_{n}: ind={induced_matching_number(path)}"
          f" min={min_maximal_matching_number(path)}"
          f" ceil((n-1)/3)={-(-(n - 1) // 3)}")

# the dependent claim: least edges for (p, p+1, p+1) equals 2p + 3 provided
# the tree question keeps its expected answer at the searched scale
check = conditional_theorem42_check(2)
entry = check.entries[0]
print(f"p=2: expected {entry.expected}, search value {entry.report.value}, {entry.status}")
