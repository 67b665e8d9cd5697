"""Skipless normalization at fixed cardinality and component-order bound.

A skip of a family F is a set Y outside F squeezed between two members
(X <= Y <= Z with X, Z in F).  One normalization step adds the chosen skip
and deletes an inclusion-maximal member of the affected component, which
keeps the cardinality, keeps every component order within the bound, and
strictly decreases the number of skips.  Iterating reaches a skipless
family of the same size.  Every step is validated after execution instead
of trusted: the size, the skip-count decrease, the order bound, and the
shape of the rewritten component are all re-checked.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .core import (
    DomainError,
    LatticeError,
    PreconditionError,
    SetFamily,
    comparability_graph,
    downset_bits,
    family_bits,
    iter_bits,
    upset_bits,
)


class NormalizationError(LatticeError):
    """A validated property of the normalization step failed at runtime."""


@dataclass(frozen=True)
class SkipReport:
    """A skip Y together with one witness pair X <= Y <= Z from the family."""

    skip: int
    witness_below: int
    witness_above: int


@dataclass(frozen=True)
class StepRecord:
    """One normalization step: the mask added and the mask removed."""

    added: int
    removed: int


def find_skips(family: SetFamily) -> list[SkipReport]:
    """All skips of the family, sorted by (cardinality, mask value)."""
    bits = family_bits(family)
    down = downset_bits(family.n, bits)
    up = upset_bits(family.n, bits)
    candidates = (down & up) & ~bits
    out = []
    for y in iter_bits(candidates):
        below = min(x for x in family.members if (x & y) == x)
        above = min(z for z in family.members if (y & z) == y)
        out.append(SkipReport(skip=y, witness_below=below, witness_above=above))
    out.sort(key=lambda r: (r.skip.bit_count(), r.skip))
    return out


def skip_count(family: SetFamily) -> int:
    """Number of skips (cheaper than materialising witness reports)."""
    bits = family_bits(family)
    down = downset_bits(family.n, bits)
    up = upset_bits(family.n, bits)
    return ((down & up) & ~bits).bit_count()


def _component_with(members: list[int], seed: int) -> set[int]:
    # Connected component of `seed` in the comparability graph over
    # members + seed; plain BFS, the families here are small.
    universe = list(members)
    if seed not in universe:
        universe.append(seed)
    comp = {seed}
    frontier = [seed]
    while frontier:
        x = frontier.pop()
        for y in universe:
            if y not in comp and ((x & y) == x or (x & y) == y):
                comp.add(y)
                frontier.append(y)
    return comp


def _step_detail(family: SetFamily):
    skips = find_skips(family)
    if not skips:
        raise PreconditionError("family is already skipless")
    y = skips[0].skip

    extended = family.add(y)
    comp = _component_with(list(family.members), y)
    # Inclusion-maximal members of the affected component.  The chosen skip
    # itself always has a strict superset witness in the component, so it is
    # never maximal and never the removal candidate.
    in_comp = [m for m in comp if m != y]
    maximal = [
        m for m in in_comp
        if not any(m != o and (m & o) == m for o in in_comp)
    ]
    x_max = max(maximal, key=lambda m: (m.bit_count(), -m))
    reduced = extended.remove(x_max)

    if len(reduced) != len(family):
        raise NormalizationError("step changed the family cardinality")
    if skip_count(reduced) >= len(skips):
        raise NormalizationError(
            f"skip count failed to decrease: added {y}, removed {x_max}"
        )
    return reduced, y, x_max, comp


def skipless_step(family: SetFamily) -> SetFamily:
    """One fill-and-delete step; the input must have at least one skip.

    The skip chosen is the lexicographically smallest mask among those of
    minimum cardinality; the removed member is an inclusion-maximal member
    of the affected component (largest cardinality, then smallest mask).
    """
    reduced, _, _, _ = _step_detail(family)
    return reduced


def make_skipless_with_trace(family: SetFamily, t: int) -> tuple[SetFamily, list[StepRecord]]:
    """Iterate skipless steps to a fixed point, recording each step.

    Raises NormalizationError if any intermediate family violates the
    component-order bound t; the constructive argument says this cannot
    happen, and the point of the runtime check is to catch it if it did.
    """
    if t < 1:
        raise DomainError("order bound t must be >= 1")
    graph = comparability_graph(family)
    if graph.max_component_order() > t:
        raise PreconditionError(
            f"a component has order {graph.max_component_order()} > t = {t}"
        )
    current = family
    trace: list[StepRecord] = []
    while True:
        if not find_skips(current):
            return current, trace
        reduced, y, x_max, comp = _step_detail(current)
        graph = comparability_graph(reduced)
        if graph.max_component_order() > t:
            raise NormalizationError(
                "order bound violated after step "
                f"{len(trace)}: added {y}, removed {x_max}, "
                f"max order {graph.max_component_order()} > {t}"
            )
        # The rewritten component is claimed to be exactly the old one with
        # the skip swapped in for the removed member.  A failure here does
        # not invalidate the output (size and order bound are re-checked
        # above), so it is surfaced as a warning, not an error.
        expected = (comp | {y}) - {x_max}
        actual = _component_with(list(reduced.members), y)
        if actual != expected:
            warnings.warn(
                f"component shape deviated at step {len(trace)}: "
                f"expected {sorted(expected)}, got {sorted(actual)}",
                stacklevel=2,
            )
        trace.append(StepRecord(added=y, removed=x_max))
        current = reduced


def make_skipless(family: SetFamily, t: int) -> SetFamily:
    """Skipless family of the same size with component orders still <= t."""
    result, _ = make_skipless_with_trace(family, t)
    return result
