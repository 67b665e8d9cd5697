import pytest

from latticework.core import (
    DomainError,
    SetFamily,
    binomial,
    bits_to_family,
    comparability_graph,
    count_two_chains,
    cover_graph,
    downset_bits,
    elements_of,
    family_bits,
    full_cube,
    height,
    is_antichain,
    is_comparable,
    layer_masks,
    mask_of,
    upset_bits,
)


def test_mask_round_trip():
    for elems in [(), (1,), (2, 5), (1, 2, 3, 10)]:
        assert elements_of(mask_of(elems)) == elems
    assert mask_of([3, 1]) == mask_of([1, 3])
    with pytest.raises(DomainError):
        mask_of([0])


def test_family_construction_and_validation():
    fam = SetFamily.from_sets(3, [{1, 2}, {1}, {1, 2}])
    # duplicates collapse, members sorted by mask value
    assert fam.members == (1, 3)
    assert len(fam) == 2
    assert 3 in fam and 2 not in fam
    with pytest.raises(DomainError):
        SetFamily.from_masks(2, (4,))
    with pytest.raises(DomainError):
        SetFamily(2, (3, 1))  # unsorted raw tuple rejected


def test_family_json_round_trip():
    fam = SetFamily.from_sets(4, [(), (2,), (1, 3), (1, 2, 3, 4)])
    again = SetFamily.from_jsonable(fam.to_jsonable())
    assert again == fam
    assert SetFamily.from_json(fam.to_json()) == fam
    assert fam.digest() == again.digest()
    assert fam.digest() != fam.add(4).digest()


def test_relabel_is_an_action():
    fam = SetFamily.from_sets(3, [(1,), (1, 2)])
    swapped = fam.relabel((2, 1, 3))
    assert swapped.to_sets() == [(2,), (1, 2)]
    assert swapped.relabel((2, 1, 3)) == fam
    with pytest.raises(DomainError):
        fam.relabel((1, 1, 3))


def test_comparability_vs_cover_graph():
    fam = SetFamily.from_sets(3, [(), (1,), (1, 2), (3,)])
    g = comparability_graph(fam)
    # {} < {1} < {1,2} all pairwise comparable, {3} comparable to {} only
    assert len(g.edges) == 4
    assert g.n_components == 1
    cg = cover_graph(fam)
    # the {} < {1,2} pair is not a cover (size gap 2)
    assert len(cg.edges) == 3
    assert cg.max_component_order() == 4


def test_component_decomposition():
    fam = SetFamily.from_sets(4, [(1,), (1, 2), (3,), (4,)])
    g = comparability_graph(fam)
    assert g.n_components == 3
    assert sorted(g.component_orders) == [1, 1, 2]
    families = [g.component_family(c) for c in range(g.n_components)]
    assert sorted(len(f) for f in families) == [1, 1, 2]


def test_height_and_two_chains():
    assert height(SetFamily.from_sets(3, [(1,), (2, 3)])) == 1
    assert height(full_cube(2)) == 2
    assert count_two_chains(full_cube(2)) == 5
    assert count_two_chains(SetFamily.from_masks(3, layer_masks(3, 1))) == 0
    with pytest.raises(DomainError):
        height(SetFamily.from_masks(3, ()))


def test_is_comparable_and_antichain():
    assert is_comparable(mask_of([1]), mask_of([1, 2]))
    assert not is_comparable(mask_of([1]), mask_of([2]))
    with pytest.raises(DomainError):
        is_comparable(mask_of([1]), mask_of([1]))  # relation on distinct pairs only
    assert is_antichain(SetFamily.from_masks(4, layer_masks(4, 2)))
    assert not is_antichain(full_cube(2))
    assert is_antichain(SetFamily.from_masks(4, ()))


def test_layer_masks_and_binomial():
    assert [m.bit_count() for m in layer_masks(5, 2)] == [2] * binomial(5, 2)
    assert binomial(4, 2) == 6
    assert binomial(4, 5) == 0 and binomial(4, -1) == 0


def test_full_cube():
    cube = full_cube(3)
    assert len(cube) == 8
    assert height(cube) == 3


def test_bitset_round_trip_and_closures():
    fam = SetFamily.from_sets(3, [(1,), (2, 3)])
    bits = family_bits(fam)
    assert bits_to_family(3, bits) == fam
    down = downset_bits(3, bits)
    # downset of {1} and {2,3}: {}, {1}, {2}, {3}, {2,3}
    assert bits_to_family(3, down).to_sets() == [(), (1,), (2,), (3,), (2, 3)]
    up = upset_bits(3, bits)
    assert bits_to_family(3, up).to_sets() == [
        (1,),
        (1, 2),
        (1, 3),
        (2, 3),
        (1, 2, 3),
    ]
