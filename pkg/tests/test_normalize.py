import random

import pytest

from latticework.core import SetFamily, comparability_graph, full_cube
from latticework.normalize import (
    find_skips,
    make_skipless,
    make_skipless_with_trace,
    skip_count,
    skipless_step,
)
from latticework.sampling import random_order_bounded_family


def test_skip_detection_hand_case():
    fam = SetFamily.from_sets(3, [(), (1,), (1, 2, 3)])
    skips = find_skips(fam)
    assert skip_count(fam) == 5
    reported = {s.skip for s in skips}
    assert len(reported) == 5
    for s in skips:
        assert s.witness_below in fam.member_set
        assert s.witness_above in fam.member_set
        assert s.witness_below & s.skip == s.witness_below
        assert s.skip & s.witness_above == s.skip


def test_skipless_families_have_no_skips():
    assert skip_count(full_cube(3)) == 0
    assert skip_count(SetFamily.from_sets(4, [(1,), (2,), (3, 4)])) == 0


def test_single_step_swaps_one_set():
    fam = SetFamily.from_sets(3, [(), (1,), (1, 2, 3)])
    out = skipless_step(fam)
    assert len(out) == len(fam)
    assert skip_count(out) < skip_count(fam)


def test_make_skipless_hand_case():
    fam = SetFamily.from_sets(3, [(), (1,), (1, 2, 3)])
    out = make_skipless(fam, 3)
    assert len(out) == 3
    assert skip_count(out) == 0
    g = comparability_graph(out)
    assert g.n_components == 1 and g.max_component_order() == 3


def test_trace_replays_to_the_result():
    fam = SetFamily.from_sets(4, [(), (1,), (1, 2, 3), (1, 2, 3, 4)])
    out, steps = make_skipless_with_trace(fam, 4)
    current = fam
    for step in steps:
        current = current.add(step.added).remove(step.removed)
    assert current == out
    assert skip_count(out) == 0


def test_skipless_is_idempotent():
    fam = SetFamily.from_sets(4, [(1,), (1, 2), (3,)])
    assert make_skipless(fam, 2) == fam


def test_randomized_size_and_order_preservation():
    rng = random.Random(3)
    for n in range(3, 6):
        for _ in range(60):
            fam, t = random_order_bounded_family(rng, n)
            if len(fam) == 0:
                continue
            out = make_skipless(fam, t)
            assert len(out) == len(fam)
            assert skip_count(out) == 0
            assert comparability_graph(out).max_component_order() <= t
