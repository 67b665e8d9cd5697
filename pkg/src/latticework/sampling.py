"""Seeded random generators for the property suites.

Every generator takes a random.Random instance so that suites are
reproducible from a single seed.  Rejection loops are bounded by
attempt counts, never by wall clock.
"""

import random

from .core import SetFamily, comparability_graph, is_comparable, layer_masks
from .constructions import Diamond, diamond_family


def random_family(rng: random.Random, n: int, size: int) -> SetFamily:
    """Uniform family of exactly `size` distinct subsets of [n]."""
    if size > 1 << n:
        raise ValueError(f"only {1 << n} subsets exist")
    return SetFamily.from_masks(n, rng.sample(range(1 << n), size))


def random_antichain(rng: random.Random, n: int, attempts: int) -> SetFamily:
    """Greedy antichain: keep each draw that stays incomparable to the kept ones."""
    kept: list[int] = []
    for _ in range(attempts):
        m = rng.randrange(1 << n)
        if m in kept:
            continue
        if all(not is_comparable(m, other) for other in kept):
            kept.append(m)
    return SetFamily.from_masks(n, kept)


def random_interval(rng: random.Random, n: int, max_height: int) -> Diamond:
    bottom = rng.randrange(1 << n)
    free = [i for i in range(n) if not (bottom >> i) & 1]
    rng.shuffle(free)
    extra = 0
    for i in free[: rng.randint(0, min(max_height, len(free)))]:
        extra |= 1 << i
    return Diamond(bottom, bottom | extra)


def random_all_diamond_family(
    rng: random.Random, n: int, target_components: int, max_height: int = 3
) -> SetFamily:
    """Union of pairwise non-cross-comparable intervals.

    Two intervals admit a comparable cross pair exactly when one bottom
    fits under the other top, so independence is two subset tests.
    """
    accepted: list[Diamond] = []
    for _ in range(6 * target_components):
        if len(accepted) == target_components:
            break
        d = random_interval(rng, n, max_height)
        ok = True
        for e in accepted:
            if (d.bottom & e.top) == d.bottom or (e.bottom & d.top) == e.bottom:
                ok = False
                break
        if ok:
            accepted.append(d)
    masks: list[int] = []
    for d in accepted:
        masks.extend(diamond_family(d, n).members)
    return SetFamily.from_masks(n, masks)


def random_layer_pair(
    rng: random.Random, n: int, k: int, density: float = 0.5
) -> tuple[SetFamily, SetFamily]:
    """Random subfamilies of layers k and k+1."""
    a = [m for m in layer_masks(n, k) if rng.random() < density]
    b = [m for m in layer_masks(n, k + 1) if rng.random() < density]
    return SetFamily.from_masks(n, a), SetFamily.from_masks(n, b)


def random_order_bounded_family(rng: random.Random, n: int) -> tuple[SetFamily, int]:
    """A random family together with its own max component order as the bound.

    Mixes flat uniform draws, unions of intervals (larger, denser
    components) and antichains so the normalization suite sees varied
    component shapes.
    """
    style = rng.randrange(3)
    if style == 0:
        family = random_family(rng, n, rng.randint(0, max(1, (1 << n) // 2)))
    elif style == 1:
        masks: list[int] = []
        for _ in range(rng.randint(1, 4)):
            d = random_interval(rng, n, max_height=min(3, n))
            masks.extend(diamond_family(d, n).members)
        family = SetFamily.from_masks(n, masks)
    else:
        family = random_antichain(rng, n, attempts=2 * n)
    if not family.members:
        return family, 1
    return family, comparability_graph(family).max_component_order()