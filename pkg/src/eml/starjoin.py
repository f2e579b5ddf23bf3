"""Star-join composition: a new hub vertex attached to one vertex per part.

Composing connected parts H_1..H_s this way pins the invariants of the
result: the induced matching number equals s whenever every part has
induced matching number 1 and offers either a pendant-edge vertex or is
complete bipartite, and the minimum maximal matching number is the sum of
the parts' values whenever each attach vertex lies in every minimum
maximal matching of its part.  The extremal edge-count witnesses behind
``bound34_1/2/3`` are all built from these part lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from eml.families import complete_bipartite, divide, g_r
from eml.graphs import Graph, InputError, bits, is_connected
from eml.solvers import (
    InvariantTriple,
    SolverBudget,
    has_perfect_matching,
    induced_matching_number,
    matching_number,
    min_maximal_matching_number,
    satisfies_star1,
    satisfies_star2,
)

PENDANT_TAG = "a"  # attach vertex has a degree-1 neighbor
BIPARTITE_TAG = "b"  # part is complete bipartite, attach vertex arbitrary


@dataclass(frozen=True)
class StarJoinPart:
    graph: Graph
    attach: int
    tag: str


@dataclass(frozen=True)
class StarJoinSpec:
    """An ordered list of >= 2 connected parts with attach vertices and tags."""

    parts: tuple[StarJoinPart, ...]

    def __init__(self, parts):
        normalized = tuple(
            part if isinstance(part, StarJoinPart) else StarJoinPart(*part)
            for part in parts
        )
        if len(normalized) < 2:
            raise InputError(f"star join needs >= 2 parts, got {len(normalized)}")
        for i, part in enumerate(normalized):
            if part.tag not in (PENDANT_TAG, BIPARTITE_TAG):
                raise InputError(f"part {i}: unknown hypothesis tag {part.tag!r}")
            if not 0 <= part.attach < part.graph.n:
                raise InputError(f"part {i}: attach vertex {part.attach} out of range")
            if not is_connected(part.graph):
                raise InputError(f"part {i}: not connected")
        object.__setattr__(self, "parts", normalized)


class PartReport(NamedTuple):
    index: int
    ok: bool
    problems: tuple[str, ...]
    notes: tuple[str, ...] = ()


class HypothesisReport(NamedTuple):
    ok: bool
    parts: tuple[PartReport, ...]


def star_join(spec: StarJoinSpec) -> Graph:
    """Disjoint union of the parts plus a hub (last index) meeting each attach vertex."""
    graphs = [part.graph for part in spec.parts]
    n = sum(g.n for g in graphs) + 1
    adj = [0] * n
    labels = []
    hub = n - 1
    offset = 0
    for i, g in enumerate(graphs):
        for v in range(g.n):
            adj[offset + v] = g.adj[v] << offset
        a = offset + spec.parts[i].attach
        adj[a] |= 1 << hub
        adj[hub] |= 1 << a
        labels.extend(f"{g.label_of(v)}.{i}" for v in range(g.n))
        offset += g.n
    labels.append("v")
    return Graph(n, adj, labels)


def is_complete_bipartite(g: Graph) -> bool:
    """True when g is K_{m,n} for some m, n >= 1 (connected, both sides non-empty)."""
    if g.n < 2 or not is_connected(g):
        return False
    side = [-1] * g.n
    side[0] = 0
    queue = [0]
    count = [1, 0]
    while queue:
        u = queue.pop()
        for w in bits(g.adj[u]):
            if side[w] < 0:
                side[w] = side[u] ^ 1
                count[side[w]] += 1
                queue.append(w)
            elif side[w] == side[u]:
                return False
    return count[0] * count[1] == g.num_edges()


def check_thm_ind_hypotheses(spec: StarJoinSpec) -> HypothesisReport:
    """Per part: induced matching number 1, plus the tagged clause.

    Tag "a" requires the attach vertex to have a degree-1 neighbor; tag "b"
    requires the part to be complete bipartite (attach vertex arbitrary).
    """
    reports = []
    for i, part in enumerate(spec.parts):
        problems = []
        if induced_matching_number(part.graph) != 1:
            problems.append("induced matching number is not 1")
        if part.tag == PENDANT_TAG:
            if not satisfies_star1(part.graph, part.attach):
                problems.append("attach vertex has no degree-1 neighbor")
        elif not is_complete_bipartite(part.graph):
            problems.append("part is not complete bipartite")
        reports.append(PartReport(i, not problems, tuple(problems)))
    return HypothesisReport(all(r.ok for r in reports), tuple(reports))


def check_thm_min_hypotheses(
    spec: StarJoinSpec, budget: SolverBudget | None = None
) -> HypothesisReport:
    """Per part: the attach vertex lies in every minimum maximal matching.

    The induced-matching condition is not required here; a part violating
    it is noted for information only and does not fail the check.
    """
    reports = []
    for i, part in enumerate(spec.parts):
        problems = []
        if not satisfies_star2(part.graph, part.attach, budget):
            problems.append("attach vertex misses some minimum maximal matching")
        notes = []
        if induced_matching_number(part.graph, budget) != 1:
            notes.append("induced matching number is not 1")
        reports.append(PartReport(i, not problems, tuple(problems), tuple(notes)))
    return HypothesisReport(all(r.ok for r in reports), tuple(reports))


def predicted_invariants(
    spec: StarJoinSpec, budget: SolverBudget | None = None
) -> InvariantTriple:
    """The invariant triple the composition theorems pin for star_join(spec).

    p = number of parts and q = sum of the parts' minimum maximal matching
    numbers, provided both hypothesis checks pass.  r = half the total part
    vertex count when every part has a perfect matching; otherwise no
    closed form applies and r falls back to the solver.
    """
    for name, report in (
        ("induced-matching", check_thm_ind_hypotheses(spec)),
        ("minimum-matching", check_thm_min_hypotheses(spec, budget)),
    ):
        if not report.ok:
            bad = [r for r in report.parts if not r.ok]
            detail = "; ".join(f"part {r.index}: {', '.join(r.problems)}" for r in bad)
            raise InputError(f"{name} hypothesis fails: {detail}")
    p = len(spec.parts)
    q = sum(min_maximal_matching_number(part.graph, budget) for part in spec.parts)
    if all(has_perfect_matching(part.graph) for part in spec.parts):
        r = sum(part.graph.n for part in spec.parts) // 2
    else:
        r = matching_number(star_join(spec), budget)
    return InvariantTriple(p, q, r)


def _bipartite_part(a: int) -> StarJoinPart:
    return StarJoinPart(complete_bipartite(a, a), 0, BIPARTITE_TAG)


def _pendant_part(m: int) -> StarJoinPart:
    # x1 of the clique-with-pendants graph has the degree-1 neighbor y1
    return StarJoinPart(g_r(m), 0, PENDANT_TAG)


def extremal_spec_1(p: int, q: int) -> StarJoinSpec:
    """Part list realizing triple (p, q, q) with bound34_1(p, q) edges."""
    if not 2 <= p < q:
        raise InputError(f"extremal_spec_1 needs 2 <= p < q, got ({p}, {q})")
    a, b, _, _ = divide(q, p)
    parts = [_bipartite_part(a) for _ in range(p - b)]
    parts += [_bipartite_part(a + 1) for _ in range(b)]
    return StarJoinSpec(parts)


def extremal_spec_2(p: int, q: int, r: int) -> StarJoinSpec:
    """Part list realizing (p, q, r) for q < r <= 2q-p+1, bound34_2 edges."""
    if not 2 <= p < q:
        raise InputError(f"extremal_spec_2 needs 2 <= p < q, got ({p}, {q})")
    if not q < r <= 2 * q - p + 1:
        raise InputError(f"extremal_spec_2 needs q < r <= 2q-p+1, got ({p}, {q}, {r})")
    a, b, _, _ = divide(2 * q - r, p - 1)
    parts = [_bipartite_part(a) for _ in range(p - b - 1)]
    parts += [_bipartite_part(a + 1) for _ in range(b)]
    parts.append(_pendant_part(2 * (r - q)))
    return StarJoinSpec(parts)


def extremal_spec_3(p: int, q: int, r: int) -> StarJoinSpec:
    """Part list realizing (p, q, r) for 2q-p+1 < r <= 2q, bound34_3 edges."""
    if not 2 <= p < q:
        raise InputError(f"extremal_spec_3 needs 2 <= p < q, got ({p}, {q})")
    if not 2 * q - p + 1 < r <= 2 * q:
        raise InputError(f"extremal_spec_3 needs 2q-p+1 < r <= 2q, got ({p}, {q}, {r})")
    a, b, _, _ = divide(r - q, p - 2 * q + r)
    parts = [_pendant_part(2 * a) for _ in range(p - 2 * q + r - b)]
    parts += [_pendant_part(2 * a + 2) for _ in range(b)]
    parts += [_bipartite_part(1) for _ in range(2 * q - r)]
    return StarJoinSpec(parts)


def extremal_spec(p: int, q: int, r: int) -> StarJoinSpec:
    """Dispatch to the extremal part list whose case covers (p, q, r)."""
    if not 2 <= p < q <= r <= 2 * q:
        raise InputError(f"needs 2 <= p < q <= r <= 2q, got ({p}, {q}, {r})")
    if r == q:
        return extremal_spec_1(p, q)
    if r <= 2 * q - p + 1:
        return extremal_spec_2(p, q, r)
    return extremal_spec_3(p, q, r)
