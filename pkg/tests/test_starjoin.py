"""Star-join composition: hypothesis checks, predictions, extremal part lists."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eml.families import (
    bound34_1,
    bound34_2,
    bound34_3,
    complete,
    complete_bipartite,
    cycle,
    g_r,
    whisker,
)
from eml.graphs import CapacityError, Graph, InputError
from eml.solvers import invariant_triple, min_maximal_matching_number
from eml.starjoin import (
    StarJoinSpec,
    check_thm_ind_hypotheses,
    check_thm_min_hypotheses,
    extremal_spec,
    extremal_spec_1,
    extremal_spec_2,
    extremal_spec_3,
    is_complete_bipartite,
    predicted_invariants,
    star_join,
)

K2 = complete_bipartite(1, 1)
PATH3 = Graph.from_edges(3, [(0, 1), (1, 2)])
PATH5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])


def test_star_join_shape():
    g = star_join(StarJoinSpec([(K2, 0, "b"), (K2, 0, "b")]))
    assert (g.n, g.num_edges()) == (5, 4)
    hub = g.n - 1
    assert g.label_of(hub) == "v"
    assert g.adj[hub] == (1 << 0) | (1 << 2)  # one attach vertex per part
    assert g.label_of(0) == "x1.0" and g.label_of(2) == "x1.1"


def test_spec_validation():
    with pytest.raises(InputError):
        StarJoinSpec([(K2, 0, "b")])
    with pytest.raises(InputError):
        StarJoinSpec([(K2, 0, "b"), (K2, 0, "c")])
    with pytest.raises(InputError):
        StarJoinSpec([(K2, 2, "b"), (K2, 0, "b")])
    two_edges = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(InputError):
        StarJoinSpec([(two_edges, 0, "b"), (K2, 0, "b")])


def test_star_join_capacity():
    parts = [(complete_bipartite(7, 7), 0, "b")] * 5
    with pytest.raises(CapacityError):
        star_join(StarJoinSpec(parts))


def test_is_complete_bipartite():
    assert is_complete_bipartite(complete_bipartite(2, 3))
    assert is_complete_bipartite(cycle(4))
    assert is_complete_bipartite(PATH3)  # K_{1,2}
    assert not is_complete_bipartite(cycle(5))
    assert not is_complete_bipartite(complete(3))
    assert not is_complete_bipartite(PATH5)
    assert not is_complete_bipartite(complete(1))
    assert not is_complete_bipartite(whisker(complete(2)))


def test_check_ind_hypotheses():
    ok = StarJoinSpec([(complete_bipartite(3, 3), 4, "b"), (g_r(3), 0, "a")])
    assert check_thm_ind_hypotheses(ok).ok
    no_pendant = StarJoinSpec([(cycle(5), 0, "a"), (K2, 0, "b")])
    report = check_thm_ind_hypotheses(no_pendant)
    assert not report.ok
    assert report.parts[0].problems == ("attach vertex has no degree-1 neighbor",)
    assert report.parts[1].ok
    # a part whose induced matching number exceeds 1 fails even with a pendant
    big_ind = StarJoinSpec([(PATH5, 1, "a"), (K2, 0, "b")])
    report = check_thm_ind_hypotheses(big_ind)
    assert not report.ok
    assert report.parts[0].problems == ("induced matching number is not 1",)


def test_check_min_hypotheses():
    ok = StarJoinSpec([(complete_bipartite(2, 2), 3, "b"), (g_r(4), 1, "a")])
    assert check_thm_min_hypotheses(ok).ok
    endpoint = StarJoinSpec([(PATH3, 0, "a"), (K2, 0, "b")])
    report = check_thm_min_hypotheses(endpoint)
    assert not report.ok
    assert report.parts[0].problems
    # vertex 3 of the 5-path lies in all three minimum maximal matchings,
    # so the check passes and the induced-matching note is informational
    mid = StarJoinSpec([(PATH5, 3, "a"), (K2, 0, "b")])
    report = check_thm_min_hypotheses(mid)
    assert report.ok
    assert report.parts[0].notes == ("induced matching number is not 1",)


def test_predicted_requires_hypotheses():
    spec = StarJoinSpec([(cycle(5), 0, "a"), (K2, 0, "b")])
    with pytest.raises(InputError, match="part 0"):
        predicted_invariants(spec)


@st.composite
def sound_specs(draw):
    def one_part(i):
        kind = draw(st.sampled_from(["kaa", "gr", "k2"]), label=f"part {i}")
        if kind == "kaa":
            a = draw(st.integers(1, 3))
            g = complete_bipartite(a, a)
            return (g, draw(st.integers(0, g.n - 1)), "b")
        if kind == "gr":
            m = draw(st.integers(2, 4))
            return (g_r(m), draw(st.integers(0, m - 1)), "a")
        return (K2, draw(st.integers(0, 1)), "b")

    count = draw(st.integers(2, 4))
    return StarJoinSpec([one_part(i) for i in range(count)])


@settings(max_examples=60, deadline=None)
@given(sound_specs())
def test_prediction_matches_solver(spec):
    predicted = predicted_invariants(spec)
    g = star_join(spec)
    assert invariant_triple(g) == predicted
    assert predicted.p == len(spec.parts)
    assert predicted.q == sum(
        min_maximal_matching_number(part.graph) for part in spec.parts
    )


def test_extremal_specs_match_bounds():
    for p in range(2, 4):
        for q in range(p + 1, 8):
            for r in range(q, min(2 * q, 7) + 1):
                spec = extremal_spec(p, q, r)
                g = star_join(spec)
                if r == q:
                    want = bound34_1(p, q)
                elif r <= 2 * q - p + 1:
                    want = bound34_2(p, q, r)
                else:
                    want = bound34_3(p, q, r)
                assert g.num_edges() == want
                assert len(spec.parts) == p
                assert invariant_triple(g) == (p, q, r)
                assert predicted_invariants(spec) == (p, q, r)


def test_extremal_spec_2_smallest_instance():
    # p=2, q=3, r=4 forces remainder 0 when dividing 2q-r=2 by p-1=1,
    # so the parts are one K_{2,2} plus the 4-vertex clique-with-pendants
    spec = extremal_spec_2(2, 3, 4)
    sizes = sorted((part.graph.n, part.tag) for part in spec.parts)
    assert sizes == [(4, "a"), (4, "b")]
    assert predicted_invariants(spec) == (2, 3, 4)


def test_extremal_spec_case_errors():
    with pytest.raises(InputError):
        extremal_spec_1(3, 3)
    with pytest.raises(InputError):
        extremal_spec_2(2, 4, 8)
    with pytest.raises(InputError):
        extremal_spec_3(2, 4, 7)
    with pytest.raises(InputError):
        extremal_spec(2, 2, 3)
    with pytest.raises(InputError):
        extremal_spec(2, 3, 7)
