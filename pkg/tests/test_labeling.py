from fractions import Fraction

import pytest

from cbu import (
    ArcLabeling,
    BadCycle,
    Orientation,
    SlotCycle,
    SlotSystem,
    WalkCycle,
    check_labeling,
    classify_short_cycle,
    complete_bipartite_graph,
    cycle_graph,
    expand_certificate,
    find_bad_cycle,
    g1,
    good_c5_labeling,
    has_quasi_cycle,
    iter_orientations,
    solve_labeling,
    synthesize_by_source_merge,
)
from cbu._exceptions import InvalidLabelingError
from cbu._selftest import connected_graphs


SMALL_CONNECTED = list(connected_graphs(5))


@pytest.fixture
def quasi_c4():
    # directed path 0 1 2 3 closed by the chord-like arc 0 -> 3
    return Orientation.from_arcs(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def two_sources_two_sinks():
    return Orientation.from_arcs(4, [(0, 1), (2, 1), (2, 3), (0, 3)])


def test_labeling_accessors():
    labeling = good_c5_labeling()
    assert labeling.kind == "labeling"
    assert labeling.label(1, 2) == 2
    assert labeling.out_label(0) == 1
    assert labeling.in_label(0) is None
    assert labeling.in_label(3) == 3
    assert labeling.out_label(3) is None
    assert (0, 4, 1) in labeling.items()
    assert labeling.is_homogeneous()
    assert labeling == good_c5_labeling()


def test_labeling_must_cover_the_arcs():
    o = good_c5_labeling().orientation
    with pytest.raises(InvalidLabelingError, match="unlabelled"):
        ArcLabeling(o, {(0, 1): 1})
    with pytest.raises(InvalidLabelingError):
        ArcLabeling(o, {(1, 0): 1, (0, 4): 1, (1, 2): 2, (2, 3): 3, (4, 3): 3})


def test_check_labeling_problems():
    o = Orientation.from_arcs(3, [(0, 1), (1, 2)])
    assert check_labeling(ArcLabeling(o, {(0, 1): 1, (1, 2): Fraction(3, 2)})) == []
    problems = check_labeling(ArcLabeling(o, {(0, 1): 2, (1, 2): 2}))
    assert problems == ["vertex 1: in-label 2 is not below out-label 2"]
    star = Orientation.from_arcs(3, [(0, 1), (0, 2)])
    problems = check_labeling(ArcLabeling(star, {(0, 1): 1, (0, 2): 2}))
    assert len(problems) == 1 and "out-arcs" in problems[0]
    problems = check_labeling(ArcLabeling(star, {(0, 1): 1.5, (0, 2): True}))
    assert len(problems) == 2 and "not a rational" in problems[0]


def test_solve_two_sources_two_sinks(two_sources_two_sinks):
    labeling = solve_labeling(two_sources_two_sinks)
    assert isinstance(labeling, ArcLabeling)
    assert {label for _, _, label in labeling.items()} == {1}


def test_solve_directed_path():
    o = Orientation.from_arcs(4, [(0, 1), (1, 2), (2, 3)])
    labeling = solve_labeling(o)
    assert [labeling.label(*a) for a in o.arcs] == [1, 2, 3]


def test_quasi_cycle_is_not_labelable(quasi_c4):
    certificate = solve_labeling(quasi_c4)
    assert isinstance(certificate, SlotCycle)
    assert certificate.kind == "slot-cycle"
    assert set(certificate.vertices) <= {1, 2}
    bad = find_bad_cycle(quasi_c4)
    assert isinstance(bad, BadCycle)
    assert bad.holds_in(quasi_c4)
    assert bad.cycle.vertices[bad.through] in (1, 2)
    assert expand_certificate(quasi_c4, certificate) == bad
    assert has_quasi_cycle(quasi_c4)[0]


def test_directed_triangle():
    o = Orientation.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    assert isinstance(solve_labeling(o), SlotCycle)
    assert find_bad_cycle(o).holds_in(o)


def test_bad_cycle_checks_the_orientation(quasi_c4, two_sources_two_sinks):
    bad = find_bad_cycle(quasi_c4)
    assert not bad.holds_in(two_sources_two_sinks)
    assert not BadCycle(WalkCycle((0, 2, 1, 3)), 0).holds_in(quasi_c4)
    assert find_bad_cycle(two_sources_two_sinks) is None
    assert find_bad_cycle(quasi_c4, max_length=3) is None


@pytest.mark.parametrize(
    "g", [cycle_graph(4), cycle_graph(5), complete_bipartite_graph(2, 3), g1()]
)
def test_oracles_agree(g):
    for o in iter_orientations(g):
        result = solve_labeling(o)
        labelable = isinstance(result, ArcLabeling)
        assert labelable == (find_bad_cycle(o) is None)
        if labelable:
            assert check_labeling(result) == []
        merged = synthesize_by_source_merge(o)
        assert (merged is not None) == labelable
        if merged is not None:
            assert check_labeling(merged) == []


@pytest.mark.parametrize("g", SMALL_CONNECTED, ids=str)
def test_labelable_orientations_have_no_quasi_cycle(g):
    for o in iter_orientations(g):
        if isinstance(solve_labeling(o), ArcLabeling):
            found, witness = has_quasi_cycle(o)
            assert not found, (o, witness)


@pytest.mark.parametrize("g", SMALL_CONNECTED, ids=str)
def test_bad_cycle_alone_is_not_labelable(g):
    for o in iter_orientations(g):
        bad = find_bad_cycle(o)
        if bad is None:
            continue
        alone = o.restrict_to_cycle(bad.cycle)
        assert alone.base == cycle_graph(bad.cycle.length)
        assert BadCycle(WalkCycle(range(bad.cycle.length)), bad.through).holds_in(alone)
        assert isinstance(solve_labeling(alone), SlotCycle), o


@pytest.mark.parametrize("g", SMALL_CONNECTED, ids=str)
def test_source_merge_agrees_with_slot_quotient(g):
    for o in iter_orientations(g):
        merged = synthesize_by_source_merge(o)
        assert (merged is None) == isinstance(solve_labeling(o), SlotCycle), o
        if merged is not None:
            assert check_labeling(merged) == []


@pytest.mark.slow
def test_source_merge_agrees_with_slot_quotient_on_six_vertices():
    for g in connected_graphs(6):
        if g.n < 6:
            continue
        for o in iter_orientations(g):
            merged = synthesize_by_source_merge(o)
            assert (merged is None) == isinstance(solve_labeling(o), SlotCycle), o


def test_slot_system_undo():
    system = SlotSystem(3)
    system.add_arc(0, 1)
    system.add_arc(1, 2)
    assert system.arc_count == 2
    assert system.through_vertices() == [1]
    assert system.is_feasible()
    system.add_arc(2, 0)
    assert system.find_cycle() is not None
    system.undo()
    assert system.is_feasible()
    assert system.labels() == {(0, 1): 1, (1, 2): 2}
    system.undo()
    system.undo()
    assert system.arc_count == 0
    assert system.find(SlotSystem.out_slot(0)) == SlotSystem.out_slot(0)


def test_slot_cycle_on_a_single_vertex():
    # in(1) ~ out(0) ~ in(2) ~ out(1)
    system = SlotSystem(3)
    for arc in [(0, 1), (1, 2), (0, 2)]:
        system.add_arc(*arc)
    assert system.find_cycle() == (1,)


def test_has_quasi_cycle(two_sources_two_sinks):
    assert has_quasi_cycle(two_sources_two_sinks) == (False, None)
    found, witness = has_quasi_cycle(
        Orientation.from_arcs(3, [(0, 1), (1, 2), (0, 2)])
    )
    assert found
    assert witness.length == 3


def test_classify_short_cycle(two_sources_two_sinks):
    c4 = WalkCycle((0, 1, 2, 3))
    assert classify_short_cycle(two_sources_two_sinks, c4) == "two-sources-two-sinks"
    paths = Orientation.from_arcs(4, [(0, 1), (1, 2), (0, 3), (3, 2)])
    assert classify_short_cycle(paths, c4) == "paths-2-2"
    c5 = good_c5_labeling().orientation
    assert classify_short_cycle(c5, WalkCycle(range(5))) == "paths-2-3"
    directed = Orientation.from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert classify_short_cycle(directed, c4) is None
    triangle = Orientation.from_arcs(3, [(0, 1), (1, 2), (0, 2)])
    assert classify_short_cycle(triangle, WalkCycle((0, 1, 2))) is None


@pytest.mark.parametrize("k", [4, 5])
def test_short_cycle_patterns_are_exactly_the_labelable_ones(k):
    cycle = WalkCycle(range(k))
    for o in iter_orientations(cycle_graph(k)):
        pattern = classify_short_cycle(o, cycle)
        labelable = isinstance(solve_labeling(o), ArcLabeling)
        assert labelable == (pattern is not None)
