"""Named property suites and pinned desk-scale reproductions.

Each suite replays one of the structural facts the package is built around,
over exhaustive or seeded-random inputs, and returns a plain dict with a
"passed" flag plus enough detail to locate a counterexample.  The
reproduction registry pins small search anchors to frozen values so a CLI
run can diff actual against expected.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable

from .blym import diamond_blym_sum, blym_sum
from .colouring import LayerPairGraph, find_rainbow_cycle, is_proper, layer_colouring
from .constructions import disconnected_extremal_size, full_layer_pair, sharp_family
from .core import (
    DomainError,
    PreconditionError,
    SetFamily,
    binomial,
    family_bits,
    is_antichain,
    layer_masks,
)
from .sampling import (
    random_all_diamond_family,
    random_antichain,
    random_layer_pair,
)
from .search import (
    disconnected_splits,
    la_exact,
    lambda_star_exact,
    mad_star_probe,
    max_disconnected,
    min_two_chains,
    xi_star_exact,
)
from .shadow import (
    boundary_pair,
    down_closure,
    kk_shadow_bound,
    lower_shadow,
    technical_bound_check,
    up_closure,
)

MAX_REPORTED_FAILURES = 5


def _push(failures: list, item: dict) -> None:
    if len(failures) < MAX_REPORTED_FAILURES:
        failures.append(item)


def verify_blym(
    n: int = 7,
    samples: int = 250,
    seed: int = 0,
    family: SetFamily | None = None,
) -> dict:
    """Antichain sums stay at most 1; every full layer is tight."""
    if family is not None:
        if not is_antichain(family):
            return {
                "suite": "blym",
                "passed": False,
                "failures": [{"reason": "family contains a 2-chain"}],
            }
        s = blym_sum(family)
        return {
            "suite": "blym",
            "sum": str(s),
            "tight": s == 1,
            "passed": s <= 1,
            "failures": [],
        }
    rng = random.Random(seed)
    failures: list[dict] = []
    checked = 0
    tight = 0
    for k in range(n + 1):
        layer = SetFamily.from_masks(n, layer_masks(n, k))
        s = blym_sum(layer)
        checked += 1
        if s != 1:
            _push(failures, {"case": f"full layer k={k}", "sum": str(s)})
        else:
            tight += 1
    for _ in range(samples):
        fam = random_antichain(rng, n, attempts=rng.randrange(1, 2 * binomial(n, n // 2) + 2))
        s = blym_sum(fam)
        checked += 1
        if s > 1:
            _push(failures, {"family": fam.to_jsonable(), "sum": str(s)})
        if s == 1:
            tight += 1
    return {
        "suite": "blym",
        "params": {"n": n, "samples": samples, "seed": seed},
        "checked": checked,
        "tight_count": tight,
        "passed": not failures,
        "failures": failures,
    }


def verify_diamond_blym(
    n: int = 6,
    samples: int = 400,
    seed: int = 0,
    sharp_n: int = 8,
    family: SetFamily | None = None,
) -> dict:
    """Interval-component sums stay at most 1; sharp constructions are tight."""
    if family is not None:
        try:
            s = diamond_blym_sum(family)
        except PreconditionError as exc:
            return {"suite": "diamond-blym", "passed": False, "failures": [{"reason": str(exc)}]}
        return {
            "suite": "diamond-blym",
            "sum": str(s),
            "tight": s == 1,
            "passed": s <= 1,
            "failures": [],
        }
    rng = random.Random(seed)
    failures: list[dict] = []
    checked = 0
    tight = 0
    for _ in range(samples):
        fam = random_all_diamond_family(rng, n, target_components=rng.randrange(1, 2 * n))
        if len(fam) == 0:
            continue
        s = diamond_blym_sum(fam)
        checked += 1
        if s > 1:
            _push(failures, {"family": fam.to_jsonable(), "sum": str(s)})
        if s == 1:
            tight += 1
    for nn in range(2, sharp_n + 1):
        for k in range(nn + 1):
            s = diamond_blym_sum(sharp_family(nn, k))
            checked += 1
            if s != 1:
                _push(failures, {"case": f"sharp n={nn} k={k}", "sum": str(s)})
            else:
                tight += 1
    return {
        "suite": "diamond-blym",
        "params": {"n": n, "samples": samples, "seed": seed, "sharp_n": sharp_n},
        "checked": checked,
        "tight_count": tight,
        "passed": not failures,
        "failures": failures,
    }


def verify_kk(
    n: int = 4,
    k: int = 2,
    samples: int = 2000,
    seed: int = 0,
    exhaustive_cap: int = 12,
) -> dict:
    """Iterated shadows of single-layer families meet the cascade bound."""
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    layer = layer_masks(n, k)
    width = len(layer)
    failures: list[dict] = []
    checked = 0
    exhaustive = width <= exhaustive_cap

    def check(masks: tuple[int, ...]) -> None:
        nonlocal checked
        checked += 1
        m = len(masks)
        cur = SetFamily.from_masks(n, masks)
        for r in range(1, k + 1):
            cur = lower_shadow(cur)
            bound = kk_shadow_bound(m, k, r)
            if len(cur) < bound:
                _push(
                    failures,
                    {"family_size": m, "r": r, "shadow": len(cur), "bound": bound},
                )

    if exhaustive:
        for pick in range(1, 1 << width):
            check(tuple(layer[i] for i in range(width) if (pick >> i) & 1))
    else:
        rng = random.Random(seed)
        for _ in range(samples):
            m = rng.randrange(1, width + 1)
            check(tuple(sorted(rng.sample(layer, m))))
    return {
        "suite": "kk",
        "params": {"n": n, "k": k, "seed": seed},
        "exhaustive": exhaustive,
        "checked": checked,
        "passed": not failures,
        "failures": failures,
    }


def verify_technical(nmax: int = 6, kmax: int = 3) -> dict:
    """Down-closure floors hold for every qualifying family, exhaustively."""
    failures: list[dict] = []
    checked = 0
    for n in range(2, nmax + 1):
        universe = list(range(1, 1 << n))
        for k in range(1, min(kmax, n) + 1):
            pool = [m for m in universe if m.bit_count() >= k]
            for mode, size in (("k_plus_one", k + 1), ("k", k)):
                if len(pool) < size:
                    continue
                for combo in combinations(pool, size):
                    fam = SetFamily.from_masks(n, combo)
                    checked += 1
                    if not technical_bound_check(fam, mode):
                        _push(
                            failures,
                            {
                                "n": n,
                                "k": k,
                                "mode": mode,
                                "family": fam.to_jsonable(),
                                "closure": len(down_closure(fam)),
                            },
                        )
    return {
        "suite": "technical",
        "params": {"nmax": nmax, "kmax": kmax},
        "checked": checked,
        "passed": not failures,
        "failures": failures,
    }


def verify_colouring(
    n: int = 4,
    k: int | None = None,
    samples: int = 200,
    seed: int = 0,
) -> dict:
    """Element colourings of layer pairs are proper and rainbow-cycle-free."""
    rng = random.Random(seed)
    failures: list[dict] = []
    checked = 0
    ks = [k] if k is not None else list(range(n))

    def check(a: SetFamily, b: SetFamily, label: str) -> None:
        nonlocal checked
        g = LayerPairGraph(a, b)
        eg = layer_colouring(g)
        checked += 1
        if not is_proper(eg):
            _push(failures, {"case": label, "reason": "colouring not proper"})
            return
        cyc = find_rainbow_cycle(eg, max(3, g.order()))
        if cyc is not None:
            _push(failures, {"case": label, "cycle": cyc})

    for kk in ks:
        a, b = full_layer_pair(n, kk)
        check(a, b, f"full layers ({kk},{kk + 1}) of [{n}]")
        for i in range(samples):
            a, b = random_layer_pair(rng, n, kk, density=rng.uniform(0.2, 0.95))
            if len(a) == 0 or len(b) == 0:
                continue
            check(a, b, f"sample {i} at k={kk}")
    return {
        "suite": "colouring",
        "params": {"n": n, "k": k, "samples": samples, "seed": seed},
        "checked": checked,
        "passed": not failures,
        "failures": failures,
    }


def _excluded_floor(n: int) -> int:
    if n % 2 == 0:
        return 2 ** (n // 2 + 1) - 2
    return 3 * 2 ** ((n - 1) // 2) - 2


def verify_fact_ab(n: int = 3, budget_nodes: int | None = None) -> dict:
    """Closure identities and the excluded-count floor over all maximal splits."""
    kwargs = {} if budget_nodes is None else {"budget_nodes": budget_nodes}
    splits = disconnected_splits(n, **kwargs)
    failures: list[dict] = []
    extremal_hits = 0
    best = disconnected_extremal_size(n)
    floor = _excluded_floor(n)
    for a, b in splits:
        ab = family_bits(a) | family_bits(b)
        ua, da = family_bits(up_closure(a)), family_bits(down_closure(a))
        ub, db = family_bits(up_closure(b)), family_bits(down_closure(b))
        label = {"a": a.to_jsonable(), "b": b.to_jsonable()}
        if ua & da != family_bits(a) or ub & db != family_bits(b):
            _push(failures, {**label, "reason": "closure meet is not the side itself"})
            continue
        if ua & db or da & ub:
            _push(failures, {**label, "reason": "cross-side closures intersect"})
            continue
        bp = boundary_pair(a, b)
        up_plus = family_bits(up_closure(bp.fplus))
        down_minus = family_bits(down_closure(bp.fminus))
        if up_plus & ab or down_minus & ab:
            _push(failures, {**label, "reason": "boundary closure touches the family"})
            continue
        if up_plus & down_minus:
            # Guaranteed disjoint only because these splits are maximal.
            _push(failures, {**label, "reason": "boundary closures intersect"})
            continue
        excluded = up_plus.bit_count() + down_minus.bit_count()
        size = len(a) + len(b)
        if excluded < floor:
            _push(failures, {**label, "excluded": excluded, "floor": floor})
            continue
        if size > (1 << n) - excluded:
            _push(failures, {**label, "size": size, "excluded": excluded})
            continue
        if size == best and excluded == floor:
            extremal_hits += 1
    return {
        "suite": "fact-ab",
        "params": {"n": n},
        "splits": len(splits),
        "excluded_floor": floor,
        "extremal_tight_count": extremal_hits,
        "passed": not failures and extremal_hits >= 1,
        "failures": failures,
    }


def verify_key_lemma(n: int = 4, budget_nodes: int | None = None) -> dict:
    """Each minimal missing set above forces many near-size sets below.

    For every maximal split and every F in the upper boundary of size k, the
    lower boundary holds at least k-1 sets of size at least k-2; dually, F of
    size s below forces at least n-s-1 sets of size at most s+2 above.
    """
    kwargs = {} if budget_nodes is None else {"budget_nodes": budget_nodes}
    splits = disconnected_splits(n, **kwargs)
    failures: list[dict] = []
    checked = 0
    for a, b in splits:
        bp = boundary_pair(a, b)
        plus_sizes = sorted(f.bit_count() for f in bp.fplus.members)
        minus_sizes = sorted(f.bit_count() for f in bp.fminus.members)
        for k in plus_sizes:
            checked += 1
            have = sum(1 for s in minus_sizes if s >= k - 2)
            if have < k - 1:
                _push(
                    failures,
                    {"a": a.to_jsonable(), "b": b.to_jsonable(), "above_size": k, "have": have},
                )
        for s in minus_sizes:
            checked += 1
            have = sum(1 for k in plus_sizes if k <= s + 2)
            if have < n - s - 1:
                _push(
                    failures,
                    {"a": a.to_jsonable(), "b": b.to_jsonable(), "below_size": s, "have": have},
                )
    return {
        "suite": "key-lemma",
        "params": {"n": n},
        "splits": len(splits),
        "checked": checked,
        "passed": not failures,
        "failures": failures,
    }


VERIFIERS: dict[str, Callable[..., dict]] = {
    "blym": verify_blym,
    "diamond-blym": verify_diamond_blym,
    "kk": verify_kk,
    "technical": verify_technical,
    "colouring": verify_colouring,
    "fact-ab": verify_fact_ab,
    "key-lemma": verify_key_lemma,
}


def run_verifier(name: str, **params) -> dict:
    """Dispatch a property suite by name, dropping params set to None."""
    if name not in VERIFIERS:
        raise DomainError(f"unknown suite {name!r}; choose from {sorted(VERIFIERS)}")
    kwargs = {k: v for k, v in params.items() if v is not None}
    return VERIFIERS[name](**kwargs)


@dataclass(frozen=True)
class Reproduction:
    """A pinned desk-scale computation with its frozen expected value."""

    name: str
    summary: str
    expected: object
    run: Callable[[], object]


def _result_value(res) -> object:
    return res.value


REPRODUCTIONS: dict[str, Reproduction] = {}


def _register(name: str, summary: str, expected, run: Callable[[], object]) -> None:
    REPRODUCTIONS[name] = Reproduction(name, summary, expected, run)


_register(
    "sperner-n3",
    "largest family of [3] with all comparability components trivial",
    3,
    lambda: _result_value(la_exact(3, 1)),
)
_register(
    "sperner-n4",
    "largest family of [4] with all comparability components trivial",
    6,
    lambda: _result_value(la_exact(4, 1)),
)
_register(
    "katona-tarjan-n4",
    "largest family of [4] with components of order at most 2",
    6,
    lambda: _result_value(la_exact(4, 2)),
)
_register(
    "katona-tarjan-n5",
    "largest family of [5] with components of order at most 2",
    12,
    lambda: _result_value(la_exact(5, 2)),
)
_register(
    "k2-n3",
    "largest family of [3] with components of order at most 2",
    4,
    lambda: _result_value(la_exact(3, 2)),
)
_register(
    "la-n4-t4",
    "largest family of [4] with components of order at most 4",
    8,
    lambda: _result_value(la_exact(4, 4)),
)
_register(
    "disconnected-n3",
    "largest disconnected family of [3] containing no isolated vertex split",
    4,
    lambda: _result_value(max_disconnected(3)),
)
_register(
    "disconnected-n4",
    "largest disconnected family of [4]",
    10,
    lambda: _result_value(max_disconnected(4)),
)
_register(
    "disconnected-n5",
    "largest disconnected family of [5]",
    22,
    lambda: _result_value(max_disconnected(5)),
)
_register(
    "kleitman-n3-q1",
    "fewest 2-chains over families of [3] with one set past the middle layer",
    2,
    lambda: _result_value(min_two_chains(3, 4)),
)
_register(
    "kleitman-n4-q2",
    "fewest 2-chains over families of [4] with two sets past the middle layer",
    6,
    lambda: _result_value(min_two_chains(4, 8)),
)
_register(
    "xi-star-n5-m6",
    "densest 6-vertex subgraph of an adjacent layer pair of [5]",
    Fraction(2),
    lambda: _result_value(xi_star_exact(5, 6)),
)
_register(
    "madstar-t4",
    "max average degree of a 4-vertex graph with a rainbow-cycle-free colouring",
    Fraction(2),
    lambda: _result_value(mad_star_probe(4)),
)
_register(
    "lambda-star-n3-t2",
    "max Lubell value over families of [3] with components of order at most 2",
    Fraction(2),
    lambda: _result_value(lambda_star_exact(3, 2)),
)
_register(
    "sharp-size-n12-k3",
    "member count of the height-3 sharp construction at n=12",
    1008,
    lambda: len(sharp_family(12, 3)),
)


def run_reproduction(name: str) -> dict:
    """Run one pinned computation and diff actual against expected."""
    if name not in REPRODUCTIONS:
        raise DomainError(f"unknown reproduction {name!r}; choose from {sorted(REPRODUCTIONS)}")
    rep = REPRODUCTIONS[name]
    actual = rep.run()
    return {
        "name": rep.name,
        "summary": rep.summary,
        "expected": str(rep.expected),
        "actual": str(actual),
        "passed": actual == rep.expected,
    }
