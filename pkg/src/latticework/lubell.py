"""Lubell averages and permutation-meeting statistics for set families.

A permutation sigma of [n] corresponds to the maximal chain
{} < {sigma(1)} < {sigma(1),sigma(2)} < ... < [n], which has n+1 prefixes
(sizes 0..n).  For a family F, the meet count T(sigma) is the number of
prefixes lying in F.  The profile s_i counts permutations with T = i; the
Lubell value of F equals both the closed form sum_F 1/C(n,|F|) and the
average of T over all n! permutations.  Keeping both routes independent is
the point: the enumeration is the oracle for the closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb, factorial

from .core import DomainError, ResourceLimitError, SetFamily

ENUMERATION_GROUND_CAP = 10
_CHAIN_CACHE_CAP = 8
_chain_cache: dict[int, list[tuple[int, ...]]] = {}


@dataclass(frozen=True)
class MeetProfile:
    """Counts s_0..s_{n+1}: how many permutations meet the family i times.

    A maximal chain has n+1 prefixes, so a family containing all of 2^[n]
    is met n+1 times; counts therefore has length n+2.
    """

    n: int
    counts: tuple[int, ...]

    @property
    def meeting_count(self) -> int:
        """s(F): permutations meeting the family at least once."""
        return sum(self.counts[1:])

    @property
    def weighted_total(self) -> int:
        """sum_i i * s_i, the total number of (permutation, member) meets."""
        return sum(i * c for i, c in enumerate(self.counts))

    @property
    def total(self) -> int:
        return sum(self.counts)


def lubell(family: SetFamily) -> Fraction:
    """Closed-form Lubell value: sum over members of 1/C(n, |F|)."""
    n = family.n
    total = Fraction(0)
    for m in family.members:
        total += Fraction(1, comb(n, m.bit_count()))
    return total


def _chains(n: int) -> list[tuple[int, ...]]:
    chains = _chain_cache.get(n)
    if chains is None:
        chains = []
        for perm in permutations(range(n)):
            prefix = 0
            ch = [0]
            for b in perm:
                prefix |= 1 << b
                ch.append(prefix)
            chains.append(tuple(ch))
        if n <= _CHAIN_CACHE_CAP:
            _chain_cache[n] = chains
    return chains


def meet_profile(family: SetFamily) -> MeetProfile:
    """Brute-force profile over all n! permutations (the oracle route)."""
    n = family.n
    if n > ENUMERATION_GROUND_CAP:
        raise ResourceLimitError(
            f"meet_profile enumerates n! permutations; capped at n={ENUMERATION_GROUND_CAP}"
        )
    members = family.member_set
    counts = [0] * (n + 2)
    if n <= _CHAIN_CACHE_CAP:
        for ch in _chains(n):
            t = 0
            for p in ch:
                if p in members:
                    t += 1
            counts[t] += 1
    else:
        # Streaming walk: caching 9! or 10! chains would cost real memory.
        for perm in permutations(range(n)):
            prefix = 0
            t = 1 if 0 in members else 0
            for b in perm:
                prefix |= 1 << b
                if prefix in members:
                    t += 1
            counts[t] += 1
    return MeetProfile(n=n, counts=tuple(counts))


def lubell_by_permutations(family: SetFamily) -> Fraction:
    """Lubell value via the permutation oracle: (sum_i i*s_i) / n!."""
    prof = meet_profile(family)
    return Fraction(prof.weighted_total, factorial(family.n))


def average_meet_count(family: SetFamily) -> Fraction:
    """Average of T over the permutations that meet the family at all.

    Always >= lubell(family): the average over a subset of permutations
    that excludes only zero-meet permutations cannot drop.
    """
    if not family.members:
        raise DomainError("average meet count of the empty family is undefined")
    prof = meet_profile(family)
    # Any chain through a member meets it, so s(F) >= 1 for nonempty F.
    return Fraction(prof.weighted_total, prof.meeting_count)


def diamond_meet_count(bottom: int, top: int, n: int) -> int:
    """Permutations whose chain meets the full interval [bottom, top].

    Closed form n! * |A|! * (n-|B|)! / (n - (|B|-|A|))! for A = bottom,
    B = top: a chain meets the interval iff it passes through some set in
    it, and the passes can be counted by fixing the first entry and exit.
    """
    if bottom & ~top:
        raise DomainError("bottom must be a subset of top")
    a = bottom.bit_count()
    b = top.bit_count()
    num = factorial(n) * factorial(a) * factorial(n - b)
    den = factorial(n - (b - a))
    q, r = divmod(num, den)
    if r:
        raise DomainError("interval meet count did not divide evenly")
    return q
