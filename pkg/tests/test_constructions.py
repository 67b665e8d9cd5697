import pytest

from latticework.blym import diamond_blym_sum
from latticework.constructions import (
    Diamond,
    certify,
    diamond_claim,
    diamond_family,
    disconnected_claim,
    disconnected_extremal,
    disconnected_extremal_size,
    full_layer_pair,
    sharp_claim,
    sharp_family,
)
from latticework.core import (
    DomainError,
    SetFamily,
    binomial,
    comparability_graph,
    height,
    mask_of,
)


def test_sharp_family_sizes():
    for n in range(1, 13):
        for k in range(n + 1):
            fam = sharp_family(n, k)
            assert len(fam) == (1 << k) * binomial(n - k, (n - k) // 2)
            assert height(fam) == k


def test_sharp_family_component_structure():
    fam = sharp_family(4, 2)
    g = comparability_graph(fam)
    assert g.n_components == binomial(2, 1)
    assert set(g.component_orders) == {4}
    assert min(fam.sizes()) == 1 and max(fam.sizes()) == 3


def test_sharp_ceil_middle_differs_only_on_odd_gap():
    assert sharp_family(5, 2) != sharp_family(5, 2, ceil_middle=True)
    assert sharp_family(6, 2) == sharp_family(6, 2, ceil_middle=True)


def test_diamond_family_is_the_full_interval():
    d = Diamond(mask_of([1]), mask_of([1, 2, 3]))
    fam = diamond_family(d, 4)
    assert len(fam) == 4  # 2^(height)
    assert all(m & d.bottom == d.bottom and m | d.top == d.top for m in fam)
    with pytest.raises(DomainError):
        diamond_family(Diamond(mask_of([2]), mask_of([1])), 3)


def test_disconnected_extremal_values():
    assert [disconnected_extremal_size(n) for n in range(2, 6)] == [2, 4, 10, 22]
    for n in range(2, 7):
        fam = disconnected_extremal(n)
        assert len(fam) == disconnected_extremal_size(n)
        assert comparability_graph(fam).n_components == 2


def test_full_layer_pair():
    a, b = full_layer_pair(4, 1)
    assert set(a.sizes()) == {1} and set(b.sizes()) == {2}
    assert len(a) == 4 and len(b) == 6


def test_certify_sharp_families():
    for n, k in [(3, 1), (5, 2), (8, 3), (12, 0)]:
        report = certify(sharp_family(n, k), sharp_claim(n, k))
        assert all(c.passed for c in report.checks), report
        assert report.family_size == len(sharp_family(n, k))


def test_certify_large_sharp_family_structured_path():
    # big enough that certification uses the counting certificate
    report = certify(sharp_family(16, 2), sharp_claim(16, 2))
    assert all(c.passed for c in report.checks)


def test_certify_disconnected():
    for n in (2, 3, 4, 6):
        report = certify(disconnected_extremal(n), disconnected_claim(n))
        assert all(c.passed for c in report.checks)


def test_certify_diamond():
    d = Diamond(mask_of([2]), mask_of([1, 2, 4]))
    report = certify(diamond_family(d, 4), diamond_claim(d))
    assert all(c.passed for c in report.checks)


def test_certify_rejects_tampered_family():
    fam = sharp_family(4, 1)
    broken = fam.remove(fam.members[0])
    report = certify(broken, sharp_claim(4, 1))
    assert not all(c.passed for c in report.checks)
    # a foreign member must also be flagged
    stuffed = fam.add(mask_of([1, 2, 3, 4]))
    report = certify(stuffed, sharp_claim(4, 1))
    assert not all(c.passed for c in report.checks)


def test_sharp_families_are_tight_for_the_interval_sum():
    for n in range(2, 9):
        for k in range(n + 1):
            assert diamond_blym_sum(sharp_family(n, k)) == 1
