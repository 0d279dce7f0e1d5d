import dataclasses
import itertools

import pytest
from hypothesis import given, settings

from biramsey.balanced import (
    BalancedWitness,
    TraceReplayError,
    TraceStep,
    UnsupportedColorCount,
    brute_force_balanced,
    find_balanced_component,
    replay_trace,
)
from biramsey.coloring import new_coloring, parse
from biramsey.constructions import BlowUpSpec, blow_up, figure1_k55

from conftest import all_colorings, colorings, nx_components

# colorings reaching the deeper branches of the three-color case
DEEP_CASES = {
    "c1": (
        "2 5 3\n1 1 0 2 2\n2 2 0 1 1\n",
        ("largest[K]", "K1", "largest[K1]", "adequate[K1]", "biclique[C1]", "C1", "B1*", "C1*"),
    ),
    "c1-transposed": (
        "8 7 3\n2 2 2 2 0 0 0\n2 2 2 2 0 0 0\n1 1 1 1 1 1 1\n1 1 1 1 1 1 1\n"
        "0 0 0 0 2 2 2\n0 0 0 0 2 2 2\n0 0 0 0 2 2 2\n0 0 0 0 2 2 2\n",
        ("transpose", "largest[K]", "K1", "largest[K1]", "adequate[K1]",
         "biclique[C1]", "C1", "B1*", "C1*"),
    ),
    "fallback": (
        "13 4 3\n" + "0 2 2 2\n" * 4 + "2 0 0 0\n" * 4 + "2 1 1 1\n" * 4 + "1 2 2 2\n",
        ("largest[K]", "K1", "largest[K1]", "adequate[K1]", "biclique[C1]", "C1",
         "B1*", "C1*", "biclique[A]"),
    ),
    "fallback-transposed": (
        "4 10 3\n1 1 1 1 1 1 0 0 0 0\n" + "2 2 2 0 0 0 1 1 1 1\n" * 3,
        ("transpose", "largest[K]", "K1", "largest[K1]", "adequate[K1]",
         "biclique[C1]", "C1", "B1*", "C1*", "biclique[A]"),
    ),
}


def assert_valid(c, w):
    comps = {(col, xs, ys) for col, xs, ys, _ in nx_components(c)}
    assert (w.color, w.x_set, w.y_set) in comps
    assert c.r * len(w.x_set) >= c.m
    assert c.r * len(w.y_set) >= c.n
    assert replay_trace(c, w) == (w.color, w.x_set, w.y_set)


def test_one_color_is_whole_graph():
    c = new_coloring(2, 3, 1, [[0] * 3] * 2)
    w = find_balanced_component(c)
    assert (w.x_set, w.y_set) == ((0, 1), (0, 1, 2))
    assert_valid(c, w)


@pytest.mark.parametrize("m, n", [(1, 1), (1, 4), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_two_colors_exhaustive(m, n):
    for c in all_colorings(m, n, 2):
        w = find_balanced_component(c)
        assert_valid(c, w)
        assert brute_force_balanced(c).satisfied


@pytest.mark.parametrize("name", sorted(DEEP_CASES))
def test_deep_branches(name):
    text, steps = DEEP_CASES[name]
    c = parse(text)
    w = find_balanced_component(c)
    assert tuple(s.name for s in w.trace[:-1]) == steps
    assert w.trace[-1].name == "result"
    assert_valid(c, w)


@settings(max_examples=300, deadline=None)
@given(colorings(max_side=7, max_colors=3))
def test_random_colorings(c):
    w = find_balanced_component(c)
    assert_valid(c, w)
    best = brute_force_balanced(c)
    assert best.satisfied


def test_rejects_four_colors():
    with pytest.raises(UnsupportedColorCount):
        find_balanced_component(figure1_k55())


@pytest.mark.parametrize("k", [1, 2, 3])
def test_figure1_blowup_has_no_balanced_component(k):
    c = blow_up(BlowUpSpec.uniform(figure1_k55(), k)).coloring
    best = brute_force_balanced(c)
    assert best.min_side == k
    assert not best.satisfied
    assert 4 * best.min_side < c.n


def _tamper(w, index, **changes):
    trace = list(w.trace)
    trace[index] = dataclasses.replace(trace[index], **changes)
    return dataclasses.replace(w, trace=tuple(trace))


def test_replay_rejects_tampered_traces():
    c = parse(DEEP_CASES["fallback"][0])
    w = find_balanced_component(c)
    names = [s.name for s in w.trace]
    bad = [
        _tamper(w, names.index("largest[K]"), x=w.trace[0].x[:-1]),
        _tamper(w, names.index("biclique[C1]"), color=(w.trace[names.index("biclique[C1]")].color + 1) % 3),
        _tamper(w, names.index("biclique[A]"), y=()),
        _tamper(w, names.index("C1"), name="mystery"),
        dataclasses.replace(w, trace=w.trace[:-1]),
        dataclasses.replace(w, x_set=w.x_set[1:]),
        dataclasses.replace(w, trace=tuple(s for s in w.trace if s.name != "biclique[C1]")),
    ]
    for t in bad:
        with pytest.raises((TraceReplayError, KeyError)):
            replay_trace(c, t)


def test_trace_step_round_trip():
    c = parse(DEEP_CASES["c1"][0])
    w = find_balanced_component(c)
    again = tuple(TraceStep.from_dict(s.as_dict()) for s in w.trace)
    assert again == w.trace
    assert str(w.trace[0]).startswith("largest[K] color")
    replay_trace(c, BalancedWitness(w.color, w.x_set, w.y_set, again))


def test_three_by_three_exhaustive_small_sample():
    # full exhaustion lives in the acceptance suite; spot-check a slice here
    for flat in itertools.islice(itertools.product(range(3), repeat=9), 0, 19683, 37):
        c = new_coloring(3, 3, 3, [flat[0:3], flat[3:6], flat[6:9]])
        assert_valid(c, find_balanced_component(c))
