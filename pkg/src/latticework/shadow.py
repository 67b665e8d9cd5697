"""Shadows, closures and the boundary families of a disconnected split.

down_closure / up_closure work on whole-cube bitsets (one bit per mask),
so a closure costs n big-int operations instead of one power-set walk per
member.  The cascade machinery gives the classical lower bound on the
size of an r-fold shadow of an m-member k-uniform family.
"""

from dataclasses import dataclass

from .core import (
    DomainError,
    PreconditionError,
    SetFamily,
    binomial,
    bits_to_family,
    downset_bits,
    family_bits,
    is_comparable,
    upset_bits,
    _columns,
)


@dataclass(frozen=True)
class CascadeRep:
    """Unique representation m = C(n_k,k) + C(n_{k-1},k-1) + ... + C(n_j,j)."""

    k: int
    terms: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return sum(binomial(top, low) for top, low in self.terms)

    def shadow_bound(self, r: int) -> int:
        return sum(binomial(top, low - r) for top, low in self.terms)


@dataclass(frozen=True)
class BoundaryPair:
    """Minimal sets missed by both down-closures / maximal missed by both up-closures."""

    fplus: SetFamily
    fminus: SetFamily


def down_closure(family: SetFamily) -> SetFamily:
    """All subsets of some member, the family itself and (if nonempty) the empty set included."""
    if not family.members:
        return family
    n = family.n
    return bits_to_family(n, downset_bits(n, family_bits(family)))


def up_closure(family: SetFamily) -> SetFamily:
    """All supersets of some member."""
    if not family.members:
        return family
    n = family.n
    return bits_to_family(n, upset_bits(n, family_bits(family)))


def _one_step_down(n: int, bits: int) -> int:
    out = 0
    for i, col in enumerate(_columns(n)):
        out |= (bits & col) >> (1 << i)
    return out


def _one_step_up(n: int, bits: int) -> int:
    full = (1 << (1 << n)) - 1
    out = 0
    for i, col in enumerate(_columns(n)):
        out |= (bits & (full ^ col)) << (1 << i)
    return out


def lower_shadow(family: SetFamily) -> SetFamily:
    """All (k-1)-subsets of the members of a single-layer family."""
    if not family.members:
        return family
    k = family.members[0].bit_count()
    if any(m.bit_count() != k for m in family.members):
        raise DomainError("lower_shadow needs all members on one layer")
    if k < 1:
        raise DomainError("lower_shadow needs layer k >= 1")
    return bits_to_family(family.n, _one_step_down(family.n, family_bits(family)))


def kk_cascade(m: int, k: int) -> CascadeRep:
    """Greedy (hence the unique) cascade of m at level k."""
    if m < 1 or k < 1:
        raise DomainError("cascade needs m >= 1 and k >= 1")
    terms = []
    rest = m
    level = k
    while rest > 0:
        if level < 1:
            raise DomainError(f"no cascade for m={m} at k={k}")
        top = level
        while binomial(top + 1, level) <= rest:
            top += 1
        terms.append((top, level))
        rest -= binomial(top, level)
        level -= 1
    rep = CascadeRep(k, tuple(terms))
    # greedy must reproduce m and strictly decrease the upper indices
    assert rep.value == m
    assert all(a > b for (a, _), (b, _) in zip(terms, terms[1:]))
    return rep


def kk_shadow_bound(m: int, k: int, r: int) -> int:
    """Cascade lower bound on the size of the r-fold shadow."""
    if not 1 <= r <= k:
        raise DomainError("shadow depth r must satisfy 1 <= r <= k")
    return kk_cascade(m, k).shadow_bound(r)


def technical_bound_check(s: SetFamily, mode: str) -> bool:
    """Down-closure size bound for a small family of large-enough sets.

    mode "k_plus_one": |s| = k+1 sets of size >= k give |down_closure| >= 2^(k+1)-1.
    mode "k":          |s| = k   sets of size >= k give |down_closure| >= 2^(k+1)-2.
    """
    if mode == "k_plus_one":
        k = len(s) - 1
        floor = (1 << (k + 1)) - 1
    elif mode == "k":
        k = len(s)
        floor = (1 << (k + 1)) - 2
    else:
        raise DomainError(f"unknown mode {mode!r}")
    if k < 0:
        raise PreconditionError("family too small for the requested mode")
    if any(m.bit_count() < k for m in s.members):
        raise PreconditionError(f"members must have size >= {k}")
    return len(down_closure(s)) >= floor


def _check_split(a: SetFamily, b: SetFamily) -> None:
    if a.n != b.n:
        raise DomainError("split sides live in different cubes")
    if not a.members or not b.members:
        raise PreconditionError("both sides of a split must be nonempty")
    for x in a.members:
        for y in b.members:
            if is_comparable(x, y):
                raise PreconditionError(
                    f"cross-comparable pair {x:#x} vs {y:#x}: not a disconnected split"
                )


def boundary_pair(a: SetFamily, b: SetFamily) -> BoundaryPair:
    """Minimal sets outside both down-closures and maximal sets outside both up-closures."""
    _check_split(a, b)
    n = a.n
    full = (1 << (1 << n)) - 1
    missed_below = full ^ downset_bits(n, family_bits(a) | family_bits(b))
    # complement of a downset is an upset: minimal members have no lower cover inside
    fplus = missed_below & ~_one_step_up(n, missed_below)
    missed_above = full ^ upset_bits(n, family_bits(a) | family_bits(b))
    fminus = missed_above & ~_one_step_down(n, missed_above)
    # the whole set and the empty set are never reachable from a true split
    assert fplus and fminus
    return BoundaryPair(bits_to_family(n, fplus), bits_to_family(n, fminus))


def excluded_count(a: SetFamily, b: SetFamily) -> int:
    """|up_closure(fplus)| + |down_closure(fminus)| for the split's boundary pair."""
    pair = boundary_pair(a, b)
    n = a.n
    up = upset_bits(n, family_bits(pair.fplus))
    down = downset_bits(n, family_bits(pair.fminus))
    return up.bit_count() + down.bit_count()


def boundary_report(a: SetFamily, b: SetFamily) -> dict:
    """Everything the split bound talks about, including whether the closures collide.

    Closure disjointness is a consequence of optimality, not of the split
    preconditions, so it is reported instead of assumed.
    """
    pair = boundary_pair(a, b)
    n = a.n
    up = upset_bits(n, family_bits(pair.fplus))
    down = downset_bits(n, family_bits(pair.fminus))
    family_size = len(a) + len(b)
    excluded = up.bit_count() + down.bit_count()
    return {
        "n": n,
        "family_size": family_size,
        "fplus": pair.fplus.to_jsonable(),
        "fminus": pair.fminus.to_jsonable(),
        "up_closure_of_fplus": up.bit_count(),
        "down_closure_of_fminus": down.bit_count(),
        "closures_disjoint": (up & down) == 0,
        "excluded_count": excluded,
        "size_bound": (1 << n) - excluded,
        "bound_holds": family_size <= (1 << n) - excluded,
    }
