import pytest

from latticework.core import (
    DomainError,
    PreconditionError,
    SetFamily,
    binomial,
    layer_masks,
    mask_of,
)
from latticework.shadow import (
    boundary_pair,
    boundary_report,
    down_closure,
    excluded_count,
    kk_cascade,
    kk_shadow_bound,
    lower_shadow,
    technical_bound_check,
    up_closure,
)
from latticework.constructions import disconnected_extremal
from latticework.core import comparability_graph


def fam(n, *sets):
    return SetFamily.from_sets(n, sets)


def test_down_closure():
    assert len(down_closure(fam(2, (1, 2)))) == 4
    assert down_closure(fam(2, (1,))).to_sets() == [(), (1,)]
    assert len(down_closure(fam(3, (1, 2), (2, 3)))) == 6
    empty = SetFamily.from_masks(3, ())
    assert down_closure(empty) == empty


def test_up_closure():
    assert len(up_closure(fam(3, ()))) == 8
    assert up_closure(fam(2, (1,))).to_sets() == [(1,), (1, 2)]
    assert len(up_closure(fam(3, (1,), (2,)))) == 6


def test_lower_shadow():
    full2 = SetFamily.from_masks(3, layer_masks(3, 2))
    assert lower_shadow(full2) == SetFamily.from_masks(3, layer_masks(3, 1))
    assert lower_shadow(fam(2, (1, 2))).to_sets() == [(1,), (2,)]
    three = fam(4, (1, 2), (1, 3), (2, 3))
    assert len(lower_shadow(three)) == 3  # meets the cascade bound exactly
    empty = SetFamily.from_masks(3, ())
    assert lower_shadow(empty) == empty
    with pytest.raises(DomainError):
        lower_shadow(fam(3, (1,), (1, 2)))  # mixed layers
    with pytest.raises(DomainError):
        lower_shadow(fam(3, ()))  # layer 0 has no shadow


def test_cascade_representation():
    assert kk_cascade(3, 2).terms == ((3, 2),)
    assert kk_cascade(4, 2).terms == ((3, 2), (1, 1))
    assert kk_cascade(5, 3).terms == ((4, 3), (2, 2))
    for m in range(1, 200):
        rep = kk_cascade(m, 4)
        assert rep.value == m
        tops = [t for t, _ in rep.terms]
        assert tops == sorted(tops, reverse=True) and len(set(tops)) == len(tops)
    with pytest.raises(DomainError):
        kk_cascade(0, 2)


def test_shadow_bound_values():
    assert kk_shadow_bound(3, 2, 1) == 3
    assert kk_shadow_bound(1, 2, 1) == 2
    # m = k+1 sets of size k: add the family and all bound layers, the
    # down-closure floor 2^(k+1) - 1 appears
    k = 2
    m = k + 1
    assert m + sum(kk_shadow_bound(m, k, r) for r in range(1, k + 1)) == 2 ** (k + 1) - 1
    with pytest.raises(DomainError):
        kk_shadow_bound(3, 2, 0)
    with pytest.raises(DomainError):
        kk_shadow_bound(3, 2, 3)


def test_technical_bound_examples():
    assert technical_bound_check(fam(3, (1, 2), (1, 3), (2, 3)), "k_plus_one")
    assert len(down_closure(fam(3, (1, 2), (1, 3), (2, 3)))) == 7
    assert technical_bound_check(fam(4, (1, 2), (3, 4)), "k")
    assert technical_bound_check(fam(3, (1, 2), (1, 3)), "k")
    assert len(down_closure(fam(3, (1, 2), (1, 3)))) == 6  # tight
    # the mode fixes k from the cardinality; members must reach size k
    with pytest.raises(PreconditionError):
        technical_bound_check(fam(3, (1,), (2,), (3,)), "k_plus_one")  # k=2, sizes 1
    with pytest.raises(PreconditionError):
        technical_bound_check(fam(3, (1,), (2,)), "k")  # k=2, sizes 1
    with pytest.raises(DomainError):
        technical_bound_check(fam(3, (1, 2), (1, 3)), "nope")


def test_boundary_pair_minimal_case():
    bp = boundary_pair(fam(2, (1,)), fam(2, (2,)))
    assert bp.fplus.to_sets() == [(1, 2)]
    assert bp.fminus.to_sets() == [()]


def test_boundary_pair_rejects_crossing_chains():
    with pytest.raises(PreconditionError):
        boundary_pair(fam(3, (1,)), fam(3, (1, 2)))
    with pytest.raises(PreconditionError):
        boundary_pair(SetFamily.from_masks(3, ()), fam(3, (1,)))


def test_boundary_nonempty_on_any_valid_split():
    bp = boundary_pair(fam(3, (1, 2)), fam(3, (3,)))
    assert len(bp.fplus) >= 1 and len(bp.fminus) >= 1


def test_excluded_count_values():
    assert excluded_count(fam(2, (1,)), fam(2, (2,))) == 2
    ext4 = disconnected_extremal(4)
    g = comparability_graph(ext4)
    a = g.component_family(0)
    b = g.component_family(1)
    assert excluded_count(a, b) == 6


def test_boundary_report_shape():
    rep = boundary_report(fam(3, (1, 2)), fam(3, (3,)))
    assert rep["bound_holds"]
    assert rep["excluded_count"] == rep["up_closure_of_fplus"] + rep["down_closure_of_fminus"]
    assert rep["family_size"] == 2
