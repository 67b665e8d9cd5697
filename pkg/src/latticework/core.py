"""Bitmask subsets of [n] and families of them in the Boolean lattice 2^[n].

Conventions used across the package:

* The ground set is [n] = {1, ..., n} with 1 <= n <= 63.
* A subset of [n] is encoded as an integer mask: element i corresponds to
  bit i-1, so {1, 3} over any n is the mask 0b101 = 5.  Masks are an
  internal encoding; JSON interchange uses sorted element lists.
* A set family is a duplicate-free collection of masks over one ground set,
  kept sorted by mask value (`SetFamily`).
* The comparability graph of a family has the members as vertices and an
  edge for every 2-chain X < Y (strict containment).  The cover graph keeps
  only the edges with |Y| - |X| = 1.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from functools import cached_property
from math import comb

MAX_GROUND = 63


class LatticeError(Exception):
    """Base class for contract violations raised by this package."""


class DomainError(LatticeError):
    """An argument lies outside the operation's mathematical domain."""


class PreconditionError(LatticeError):
    """Input fails a structural precondition (for example: not an antichain)."""


class ResourceLimitError(LatticeError):
    """The request exceeds a documented size cap for exact computation."""


def mask_of(elements) -> int:
    """Encode an iterable of elements from [n] as a mask.

    >>> mask_of([1, 3])
    5
    """
    m = 0
    for e in elements:
        if e < 1 or e > MAX_GROUND:
            raise DomainError(f"element {e} outside 1..{MAX_GROUND}")
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    """Decode a mask back to a sorted tuple of elements.

    >>> elements_of(5)
    (1, 3)
    """
    if mask < 0:
        raise DomainError("mask must be non-negative")
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def is_comparable(x: int, y: int) -> bool:
    """True iff the distinct subsets x, y satisfy x < y or y < x.

    Raises DomainError when x == y: comparability is a relation on pairs of
    distinct sets here, and silently answering would hide caller bugs.
    """
    if x == y:
        raise DomainError("is_comparable expects distinct sets")
    return (x & y) == x or (x & y) == y


def layer_masks(n: int, k: int) -> list[int]:
    """All masks of cardinality k over [n], sorted by mask value."""
    _check_ground(n)
    if k < 0 or k > n:
        raise DomainError(f"layer {k} outside 0..{n}")
    return sorted(m for m in _layer_iter(n, k))


def _layer_iter(n, k):
    # Gosper-style iteration would be fancier than needed; n <= 63 but layers
    # are only materialised for small n in practice.
    from itertools import combinations

    for tup in combinations(range(n), k):
        m = 0
        for b in tup:
            m |= 1 << b
        yield m


def _check_ground(n: int) -> None:
    if not 1 <= n <= MAX_GROUND:
        raise DomainError(f"ground set size {n} outside 1..{MAX_GROUND}")


@dataclass(frozen=True)
class SetFamily:
    """A duplicate-free family of subsets of [n], sorted by mask value."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        _check_ground(self.n)
        limit = 1 << self.n
        prev = -1
        for m in self.members:
            if not prev < m:
                raise DomainError("members must be strictly increasing masks")
            if m >= limit:
                raise DomainError(f"mask {m} does not fit in ground set [{self.n}]")
            prev = m

    @classmethod
    def from_masks(cls, n: int, masks) -> "SetFamily":
        """Build a family from any iterable of masks (sorted, deduplicated)."""
        return cls(n, tuple(sorted(set(masks))))

    @classmethod
    def from_sets(cls, n: int, sets) -> "SetFamily":
        """Build a family from an iterable of element iterables."""
        return cls.from_masks(n, (mask_of(s) for s in sets))

    @cached_property
    def member_set(self) -> frozenset:
        return frozenset(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in self.member_set

    def to_sets(self) -> list[tuple[int, ...]]:
        return [elements_of(m) for m in self.members]

    def sizes(self) -> list[int]:
        return [m.bit_count() for m in self.members]

    def add(self, mask: int) -> "SetFamily":
        return SetFamily.from_masks(self.n, self.members + (mask,))

    def remove(self, mask: int) -> "SetFamily":
        if mask not in self.member_set:
            raise DomainError(f"mask {mask} not in family")
        return SetFamily(self.n, tuple(m for m in self.members if m != mask))

    def relabel(self, perm: tuple[int, ...]) -> "SetFamily":
        """Apply a permutation of [n] (perm[i-1] is the image of element i)."""
        if sorted(perm) != list(range(1, self.n + 1)):
            raise DomainError("perm must be a permutation of 1..n")
        table = _mask_relabel_table(self.n, perm)
        return SetFamily.from_masks(self.n, (table[m] for m in self.members))

    def to_jsonable(self) -> dict:
        return {"n": self.n, "sets": [list(s) for s in self.to_sets()]}

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), separators=(",", ":"))

    @classmethod
    def from_jsonable(cls, obj: dict) -> "SetFamily":
        if not isinstance(obj, dict) or "n" not in obj or "sets" not in obj:
            raise DomainError('family JSON must be {"n": int, "sets": [[...]]}')
        return cls.from_sets(int(obj["n"]), obj["sets"])

    @classmethod
    def from_json(cls, text: str) -> "SetFamily":
        return cls.from_jsonable(json.loads(text))

    def digest(self) -> str:
        """Stable sha256 of the canonical JSON encoding."""
        return hashlib.sha256(self.to_json().encode()).hexdigest()


def _mask_relabel_table(n: int, perm: tuple[int, ...]) -> list[int]:
    bits = [1 << (perm[i] - 1) for i in range(n)]
    table = [0] * (1 << n)
    for m in range(1, 1 << n):
        low = m & -m
        table[m] = table[m ^ low] | bits[low.bit_length() - 1]
    return table


def full_cube(n: int) -> SetFamily:
    """The whole lattice 2^[n] as a family."""
    _check_ground(n)
    if n > 20:
        raise ResourceLimitError("full cube materialisation capped at n=20")
    return SetFamily(n, tuple(range(1 << n)))


def height(family: SetFamily) -> int:
    """Largest member cardinality minus smallest member cardinality."""
    if not family.members:
        raise DomainError("height of the empty family is undefined")
    sizes = family.sizes()
    return max(sizes) - min(sizes)


def count_two_chains(family: SetFamily) -> int:
    """Number of comparable pairs (2-chains) inside the family."""
    total = 0
    ms = family.members
    for i, x in enumerate(ms):
        for y in ms[i + 1:]:
            if (x & y) == x or (x & y) == y:
                total += 1
    return total


@dataclass(frozen=True)
class ComparabilityGraph:
    """Comparability (or cover) graph of a family, with its components.

    Vertices are member indices into family.members.  component_id maps each
    vertex to a component number in 0..n_components-1; component_orders[c]
    and component_sizes[c] are the vertex and edge counts of component c.
    """

    family: SetFamily
    edges: tuple[tuple[int, int], ...]
    component_id: tuple[int, ...]
    component_orders: tuple[int, ...]
    component_sizes: tuple[int, ...]
    cover_only: bool = field(default=False)

    @property
    def n_components(self) -> int:
        return len(self.component_orders)

    def components(self) -> list[list[int]]:
        out = [[] for _ in range(self.n_components)]
        for v, c in enumerate(self.component_id):
            out[c].append(v)
        return out

    def component_family(self, c: int) -> SetFamily:
        ms = [self.family.members[v] for v, cid in enumerate(self.component_id) if cid == c]
        return SetFamily.from_masks(self.family.n, ms)

    def max_component_order(self) -> int:
        return max(self.component_orders, default=0)


def comparability_graph(family: SetFamily, cover_only: bool = False) -> ComparabilityGraph:
    """Build the comparability graph (all 2-chains) or cover graph of a family."""
    ms = family.members
    s = len(ms)
    parent = list(range(s))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    edges = []
    for i in range(s):
        x = ms[i]
        px = x.bit_count()
        for j in range(i + 1, s):
            y = ms[j]
            if (x & y) == x or (x & y) == y:
                if cover_only and abs(y.bit_count() - px) != 1:
                    continue
                edges.append((i, j))
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj

    roots = {}
    comp_id = []
    for v in range(s):
        r = find(v)
        if r not in roots:
            roots[r] = len(roots)
        comp_id.append(roots[r])
    orders = [0] * len(roots)
    sizes = [0] * len(roots)
    for c in comp_id:
        orders[c] += 1
    for i, j in edges:
        sizes[comp_id[i]] += 1
    return ComparabilityGraph(
        family=family,
        edges=tuple(edges),
        component_id=tuple(comp_id),
        component_orders=tuple(orders),
        component_sizes=tuple(sizes),
        cover_only=cover_only,
    )


def cover_graph(family: SetFamily) -> ComparabilityGraph:
    """Graph of containments that differ by exactly one element."""
    return comparability_graph(family, cover_only=True)


# ---------------------------------------------------------------------------
# Bitset-of-masks helpers.  A subset of 2^[n] is itself encoded as one big
# integer whose bit m says whether mask m belongs.  The closure DPs below
# sweep one ground element at a time, which is exactly frontier expansion
# along cover edges done bit-parallel.

CLOSURE_GROUND_CAP = 20


def family_bits(family: SetFamily) -> int:
    bits = 0
    for m in family.members:
        bits |= 1 << m
    return bits


def bits_to_family(n: int, bits: int) -> SetFamily:
    masks = []
    while bits:
        low = bits & -bits
        masks.append(low.bit_length() - 1)
        bits ^= low
    return SetFamily(n, tuple(masks))


def _check_closure_ground(n):
    _check_ground(n)
    if n > CLOSURE_GROUND_CAP:
        raise ResourceLimitError(
            f"cube-wide closures capped at n={CLOSURE_GROUND_CAP} (2^n bit DP)"
        )


def _bit_column(n: int, i: int) -> int:
    # Positions m (0 <= m < 2^n) whose i-th ground bit is set.
    block = ((1 << (1 << i)) - 1) << (1 << i)
    step = 1 << (i + 1)
    col = 0
    for start in range(0, 1 << n, step):
        col |= block << start
    return col


_COLUMN_CACHE: dict[int, list[int]] = {}


def _columns(n: int) -> list[int]:
    cols = _COLUMN_CACHE.get(n)
    if cols is None:
        cols = [_bit_column(n, i) for i in range(n)]
        _COLUMN_CACHE[n] = cols
    return cols


def downset_bits(n: int, bits: int) -> int:
    """Bitset of all masks below-or-equal some mask in bits."""
    _check_closure_ground(n)
    for i, col in enumerate(_columns(n)):
        bits |= (bits & col) >> (1 << i)
    return bits


def upset_bits(n: int, bits: int) -> int:
    """Bitset of all masks above-or-equal some mask in bits."""
    _check_closure_ground(n)
    full = (1 << (1 << n)) - 1
    for i, col in enumerate(_columns(n)):
        bits |= (bits & (full ^ col)) << (1 << i)
    return bits


def iter_bits(bits: int):
    """Yield the positions of the set bits of a bitset-of-masks."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def is_antichain(family: SetFamily) -> bool:
    """True iff no member strictly contains another."""
    bits = family_bits(family)
    shadow = 0
    for i, col in enumerate(_columns(family.n)):
        shadow |= (bits & col) >> (1 << i)
    strict_down = downset_bits(family.n, shadow) if shadow else 0
    return (bits & strict_down) == 0


def binomial(n: int, k: int) -> int:
    """comb with the convention that out-of-range k gives 0."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)
