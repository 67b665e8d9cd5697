"""Exact searches for the small-n extremal thresholds.

The family searches run depth-first over masks in increasing numeric
order, so every family is visited through exactly one (sorted) tuple.
Components are tracked by a union-find with an undo stack, subtrees die
when current size plus the surviving candidate pool cannot beat the
incumbent, and shallow prefixes that are not lexicographically minimal
under ground-element relabelling (plus complementation when the layer
band is symmetric) are discarded.  Min-lex canonicity is inherited by
prefixes, so the canonical copy of every optimal family survives.

Budgets are node counts, never wall clocks; an exceeded budget returns
the incumbent with proven_optimal=False instead of a silent answer.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from .core import (
    DomainError,
    ResourceLimitError,
    SetFamily,
    binomial,
    comparability_graph,
    count_two_chains,
    is_comparable,
    layer_masks,
)
from .constructions import sharp_family, disconnected_extremal
from .colouring import EdgeColouredGraph, LayerPairGraph, avg_degree, is_proper

LA_NODE_BUDGET = 30_000_000
CONCEPT_NODE_BUDGET = 5_000_000
MAD_NODE_BUDGET = 20_000_000


@dataclass(frozen=True)
class SearchResult:
    value: object
    witness: object
    nodes_explored: int
    proven_optimal: bool


class _BudgetExceeded(Exception):
    pass


# ---------------------------------------------------------------------------
# order-bounded family maximisation


_PERM_TABLE_CACHE: dict[tuple[int, bool], list[list[int]]] = {}


def _group_tables(n: int, with_complement: bool) -> list[list[int]]:
    """Mask translation tables for S_n, optionally composed with complementation."""
    key = (n, with_complement)
    tables = _PERM_TABLE_CACHE.get(key)
    if tables is not None:
        return tables
    tables = []
    full = (1 << n) - 1
    for perm in permutations(range(n)):
        table = [0] * (1 << n)
        for m in range(1 << n):
            img = 0
            rest = m
            while rest:
                low = rest & -rest
                img |= 1 << perm[low.bit_length() - 1]
                rest ^= low
            table[m] = img
        tables.append(table)
        if with_complement:
            tables.append([full ^ v for v in table])
    _PERM_TABLE_CACHE[key] = tables
    return tables


def _la_seeds(n: int, t: int, kmin: int, kmax: int) -> SetFamily:
    """Best constructive family obeying the constraints; used as the incumbent."""
    band_mid = max(range(kmin, kmax + 1), key=lambda k: binomial(n, k))
    best = SetFamily.from_masks(n, layer_masks(n, band_mid))
    for k in range(n + 1):
        if (1 << k) > t:
            continue
        s = sharp_family(n, k)
        if s.members and all(kmin <= m.bit_count() <= kmax for m in s.members):
            if len(s) > len(best):
                best = s
    return best


def _la_search(n, t, kmin, kmax, budget_nodes, canon_depth=4):
    if not 0 <= kmin <= kmax <= n:
        raise DomainError("layer band must satisfy 0 <= kmin <= kmax <= n")
    if n > 5:
        raise DomainError("family search is exhaustive only up to n = 5")
    if t < 1:
        raise DomainError("component order bound must be >= 1")
    seed = _la_seeds(n, t, kmin, kmax)
    best_val = len(seed)
    best_masks = list(seed.members)

    universe = [m for k in range(kmin, kmax + 1) for m in layer_masks(n, k)]
    # a mask comparable to every other cannot sit in a family larger than t
    if best_val > t:
        universe = [m for m in universe if m not in (0, (1 << n) - 1)]
    universe.sort()
    size = len(universe)
    order_index = {m: i for i, m in enumerate(universe)}
    cmp_bits = [0] * size
    for i, x in enumerate(universe):
        for j in range(i + 1, size):
            if is_comparable(x, universe[j]):
                cmp_bits[i] |= 1 << j
                cmp_bits[j] |= 1 << i

    # relabelling preserves layers; complementation flips the band, so it is a
    # symmetry of the universe only when the band is centred
    tables = _group_tables(n, with_complement=(kmin + kmax == n))

    parent = list(range(size))
    compsize = [1] * size
    undo: list[tuple[int, int]] = []

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra == rb:
            return
        if compsize[ra] < compsize[rb]:
            ra, rb = rb, ra
        undo.append((rb, ra))
        parent[rb] = ra
        compsize[ra] += compsize[rb]

    def rollback(mark):
        while len(undo) > mark:
            rb, ra = undo.pop()
            parent[rb] = rb
            compsize[ra] -= compsize[rb]

    chosen: list[int] = []
    chosen_bits = 0
    nodes = 0

    def merged_order(i, extra_bits):
        """Order of the component formed if index i joins the current family."""
        total = 1
        seen_roots = []
        nb = cmp_bits[i] & extra_bits
        while nb:
            low = nb & -nb
            r = find(low.bit_length() - 1)
            if r not in seen_roots:
                seen_roots.append(r)
                total += compsize[r]
            nb ^= low
        return total

    def canonical(masks):
        for table in tables:
            image = sorted(table[m] for m in masks)
            if image < masks:
                return False
        return True

    def expand(pool):
        nonlocal nodes, best_val, best_masks, chosen_bits
        while pool:
            if len(chosen) + pool.bit_count() <= best_val:
                return
            low = pool & -pool
            i = low.bit_length() - 1
            pool ^= low
            nodes += 1
            if nodes > budget_nodes:
                raise _BudgetExceeded
            if merged_order(i, chosen_bits) > t:
                continue
            mark = len(undo)
            nb = cmp_bits[i] & chosen_bits
            while nb:
                lo = nb & -nb
                union(i, lo.bit_length() - 1)
                nb ^= lo
            chosen.append(i)
            chosen_bits |= 1 << i
            if len(chosen) > best_val:
                best_val = len(chosen)
                best_masks = [universe[j] for j in chosen]
            if len(chosen) > canon_depth or canonical([universe[j] for j in chosen]):
                child = 0
                rest = pool
                while rest:
                    lo = rest & -rest
                    j = lo.bit_length() - 1
                    if merged_order(j, chosen_bits) <= t:
                        child |= lo
                    rest ^= lo
                expand(child)
            chosen.pop()
            chosen_bits ^= 1 << i
            rollback(mark)

    proven = True
    try:
        expand((1 << size) - 1 if size else 0)
    except _BudgetExceeded:
        proven = False

    witness = SetFamily.from_masks(n, best_masks)
    graph = comparability_graph(witness)
    assert len(witness) == best_val
    assert graph.max_component_order() <= t
    assert all(kmin <= m.bit_count() <= kmax for m in witness.members)
    return SearchResult(best_val, witness, nodes, proven)


def la_exact(n: int, t: int, budget_nodes: int = LA_NODE_BUDGET) -> SearchResult:
    """Largest family of subsets of [n] whose comparability components have order <= t."""
    return _la_search(n, t, 0, n, budget_nodes)


def la_exact_restricted(
    n: int, t: int, kmin: int, kmax: int, budget_nodes: int = LA_NODE_BUDGET
) -> SearchResult:
    """la_exact with member sizes confined to the layer band [kmin, kmax]."""
    return _la_search(n, t, kmin, kmax, budget_nodes)


# ---------------------------------------------------------------------------
# maximum Lubell value over order-bounded families


def lambda_star_exact(n: int, t: int, budget_nodes: int | None = None) -> SearchResult:
    """Exact maximum of the Lubell sum over families with component order <= t.

    Plain exhaustion over all 2^(2^n) families with integer weights
    (n! / C(n,k) per layer-k member), so n is capped at 4.
    """
    if n > 4:
        raise DomainError("Lubell maximisation enumerates all families; n <= 4 only")
    if t < 1:
        raise DomainError("component order bound must be >= 1")
    cube = 1 << n
    factorial_n = 1
    for i in range(2, n + 1):
        factorial_n *= i
    weight = [factorial_n // binomial(n, m.bit_count()) for m in range(cube)]
    cmp_rows = [0] * cube
    for x in range(cube):
        for y in range(x + 1, cube):
            if is_comparable(x, y):
                cmp_rows[x] |= 1 << y
                cmp_rows[y] |= 1 << x

    limit = budget_nodes if budget_nodes is not None else 1 << cube
    best_num = 0
    best_bits = 0
    nodes = 0
    proven = True
    for bits in range(1, 1 << cube):
        nodes += 1
        if nodes > limit:
            proven = False
            break
        total = 0
        rest = bits
        ok = True
        # union-find over members, sizes tracked inline
        parent = {}
        size = {}

        def find(v):
            while parent[v] != v:
                v = parent[v]
            return v

        while rest:
            low = rest & -rest
            m = low.bit_length() - 1
            rest ^= low
            total += weight[m]
            parent[m] = m
            size[m] = 1
            nb = cmp_rows[m] & bits & (low - 1)
            while nb:
                nlow = nb & -nb
                r1, r2 = find(m), find(nlow.bit_length() - 1)
                if r1 != r2:
                    parent[r2] = r1
                    size[r1] += size[r2]
                    if size[r1] > t:
                        ok = False
                        break
                nb ^= nlow
            if not ok:
                break
        if ok and total > best_num:
            best_num = total
            best_bits = bits

    masks = [m for m in range(cube) if (best_bits >> m) & 1]
    witness = SetFamily.from_masks(n, masks)
    value = Fraction(best_num, factorial_n)
    from .lubell import lubell

    assert lubell(witness) == value
    assert (
        not witness.members
        or comparability_graph(witness).max_component_order() <= t
    )
    return SearchResult(value, witness, nodes, proven)


# ---------------------------------------------------------------------------
# disconnected families via closed splits

# A family is disconnected iff it fits inside A u N(A) for some A whose
# incomparability closure is itself (N = common incomparables).  Close-by-one
# enumerates every such closed split exactly once.


def _incomparability_rows(n: int) -> tuple[list[int], list[int]]:
    universe = [m for m in range(1, (1 << n) - 1)]
    rows = []
    for x in universe:
        row = 0
        for j, y in enumerate(universe):
            if x != y and not is_comparable(x, y):
                row |= 1 << j
        rows.append(row)
    return universe, rows


def _closed_splits(n: int, budget_nodes: int):
    """Yield (extent, common incomparables) index-bitmask pairs, plus node count."""
    universe, rows = _incomparability_rows(n)
    size = len(universe)
    full = (1 << size) - 1

    def common(bits):
        out = full
        while bits:
            low = bits & -bits
            out &= rows[low.bit_length() - 1]
            bits ^= low
        return out

    found: list[tuple[int, int]] = []
    nodes = 0
    exhausted = True

    def cbo(extent, intent, start):
        nonlocal nodes, exhausted
        if extent and intent:
            found.append((extent, intent))
        for y in range(start, size):
            if (extent >> y) & 1:
                continue
            shrunk = intent & rows[y]
            if not shrunk:
                continue
            nodes += 1
            if nodes > budget_nodes:
                exhausted = False
                return
            closed = common(shrunk)
            below = (1 << y) - 1
            if (closed & below) != (extent & below):
                continue
            cbo(closed, shrunk, y + 1)
            if not exhausted:
                return

    cbo(0, full, 0)
    return universe, found, nodes, exhausted


def max_disconnected(n: int, budget_nodes: int = CONCEPT_NODE_BUDGET) -> SearchResult:
    """Exact maximum size of a family whose comparability graph is disconnected."""
    if n < 2:
        raise DomainError("no disconnected family exists below n = 2")
    if n > 5:
        raise DomainError("split enumeration is exhaustive only up to n = 5")
    universe, found, nodes, exhausted = _closed_splits(n, budget_nodes)
    best_val = 0
    best_bits = (0, 0)
    for extent, intent in found:
        v = extent.bit_count() + intent.bit_count()
        if v > best_val:
            best_val = v
            best_bits = (extent, intent)
    masks = [universe[i] for i in _bit_indices(best_bits[0] | best_bits[1])]
    witness = SetFamily.from_masks(n, masks)
    if witness.members:
        graph = comparability_graph(witness)
        assert len(witness) == best_val
        assert graph.n_components >= 2
    return SearchResult(best_val, witness, nodes, exhausted)


def _bit_indices(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def disconnected_splits(
    n: int, budget_nodes: int = CONCEPT_NODE_BUDGET
) -> list[tuple[SetFamily, SetFamily]]:
    """All maximal disconnected families at ground size n, as (side, side) splits.

    Closed splits are filtered by the exact maximality test: a
    disconnected family is maximal iff no single absent set keeps it
    disconnected (single additions suffice, because any disconnected
    superset yields one).
    """
    if n > 5:
        raise DomainError("split enumeration is exhaustive only up to n = 5")
    universe, found, nodes, exhausted = _closed_splits(n, budget_nodes)
    if not exhausted:
        raise ResourceLimitError(f"split enumeration stopped after {nodes} nodes")
    out = []
    seen = set()
    for extent, intent in found:
        key = (extent, intent) if extent <= intent else (intent, extent)
        if key in seen:
            continue
        seen.add(key)
        family_masks = [universe[i] for i in _bit_indices(extent | intent)]
        family = SetFamily.from_masks(n, family_masks)
        if not _is_maximal_disconnected(family):
            continue
        a = SetFamily.from_masks(n, [universe[i] for i in _bit_indices(extent)])
        b = SetFamily.from_masks(n, [universe[i] for i in _bit_indices(intent)])
        out.append((a, b))
    return out


def _is_maximal_disconnected(family: SetFamily) -> bool:
    members = family.member_set
    for extra in range(1 << family.n):
        if extra in members:
            continue
        if comparability_graph(family.add(extra)).n_components >= 2:
            return False
    return True


# ---------------------------------------------------------------------------
# densest adjacent-layer pair of a given order


def xi_star_exact(n: int, m: int, budget_nodes: int | None = None) -> SearchResult:
    """Exact maximum average degree over adjacent-layer pairs of total order m.

    The bottom side is exhausted; for a fixed bottom side the best top
    side is exactly the m - |A| tops of largest containment degree.
    """
    if n > 5:
        raise DomainError("layer-pair exhaustion is limited to n <= 5")
    if not 1 <= m <= 2 * binomial(n, n // 2):
        raise DomainError("order m out of range for adjacent layer pairs")
    if m > max(binomial(n, k) + binomial(n, k + 1) for k in range(n)):
        raise DomainError(f"no adjacent layer pair of [{n}] has order {m}")
    best = Fraction(0)
    best_pair = None
    nodes = 0
    limit = budget_nodes if budget_nodes is not None else 1 << 62
    proven = True
    for k in range(n):
        bottoms = layer_masks(n, k)
        tops = layer_masks(n, k + 1)
        sub_rows = []
        for top in tops:
            row = 0
            for i, b in enumerate(bottoms):
                if b & top == b:
                    row |= 1 << i
            sub_rows.append(row)
        max_a = min(len(bottoms), m)
        for a_bits in range(1 << len(bottoms)):
            asize = a_bits.bit_count()
            bsize = m - asize
            if asize > max_a or bsize < 0 or bsize > len(tops):
                continue
            nodes += 1
            if nodes > limit:
                proven = False
                break
            degs = sorted(
                ((sub_rows[j] & a_bits).bit_count(), j) for j in range(len(tops))
            )[::-1]
            edges = sum(d for d, _ in degs[:bsize])
            val = Fraction(2 * edges, m)
            if val > best or best_pair is None:
                best = val
                a_fam = SetFamily.from_masks(n, [bottoms[i] for i in _bit_indices(a_bits)])
                b_fam = SetFamily.from_masks(n, [tops[j] for _, j in degs[:bsize]])
                best_pair = LayerPairGraph(a_fam, b_fam)
        if not proven:
            break
    assert best_pair is not None
    assert best_pair.order() == m
    assert avg_degree(best_pair) == best
    return SearchResult(best, best_pair, nodes, proven)


# ---------------------------------------------------------------------------
# fewest 2-chains at a forced size


def min_two_chains(n: int, m: int, budget_nodes: int | None = None) -> SearchResult:
    """Exact minimum 2-chain count over families of exactly m subsets of [n]."""
    if n > 4:
        raise DomainError("2-chain minimisation exhausts all families; n <= 4 only")
    cube = 1 << n
    if not 0 <= m <= cube:
        raise DomainError(f"no family of size {m} in a cube of {cube} sets")
    subs_row = [0] * cube
    for x in range(cube):
        for y in range(x + 1, cube):
            if x & y == x:
                subs_row[y] |= 1 << x
    best = None
    best_combo = None
    nodes = 0
    limit = budget_nodes if budget_nodes is not None else 1 << 62
    proven = True
    for combo in combinations(range(cube), m):
        nodes += 1
        if nodes > limit:
            proven = False
            break
        bits = 0
        cnt = 0
        for mask in combo:
            cnt += (subs_row[mask] & bits).bit_count()
            bits |= 1 << mask
        if best is None or cnt < best:
            best = cnt
            best_combo = combo
            if best == 0:
                break
    witness = SetFamily.from_masks(n, best_combo)
    assert count_two_chains(witness) == best
    return SearchResult(best, witness, nodes, proven)


# ---------------------------------------------------------------------------
# rainbow-free max average degree at tiny order


_ATLAS_CACHE: dict[int, list] = {}


def _graphs_of_order(t: int):
    """Every graph on exactly t vertices, up to isomorphism (atlas-backed, t <= 7)."""
    got = _ATLAS_CACHE.get(t)
    if got is None:
        import networkx as nx

        got = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == t]
        _ATLAS_CACHE[t] = got
    return got


def _has_triangle(adj: list[int], t: int) -> bool:
    for u in range(t):
        for v in _bit_indices(adj[u]):
            if v > u and adj[u] & adj[v]:
                return True
    return False


def _edge_order(edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Order edges so each one touches the already-ordered prefix when possible."""
    remaining = set(edges)
    ordered = []
    touched = set()
    while remaining:
        pick = None
        for e in sorted(remaining):
            if not ordered or e[0] in touched or e[1] in touched:
                pick = e
                break
        if pick is None:
            pick = sorted(remaining)[0]
        ordered.append(pick)
        remaining.discard(pick)
        touched.update(pick)
    return ordered


def _rainbow_free_colouring(edges, t, node_box, budget_nodes):
    """A proper edge colouring with no rainbow cycle, or None; exhaustive.

    Colours are assigned in restricted-growth order, properness is
    checked against incident earlier edges, and a rainbow cycle can only
    close at the moment its last edge is coloured, so it is searched for
    through that edge among earlier-coloured edges only.
    """
    if not edges:
        return {}
    order = _edge_order(edges)
    m = len(order)
    colour_of: dict[tuple[int, int], int] = {}
    incident: list[list[tuple[int, int]]] = [[] for _ in range(t)]

    def rainbow_through(u, v, colour):
        # path u -> v over already-coloured edges, colours pairwise distinct
        # and different from `colour`; in a simple graph such a path has at
        # least two edges, so it closes a cycle of length >= 3 with (u, v)
        def walk(at, used_colours, used_vertices):
            if at == v:
                return True
            for (x, y), c in colour_of.items():
                if (1 << c) & used_colours:
                    continue
                if x == at or y == at:
                    nxt = y if x == at else x
                    if (used_vertices >> nxt) & 1 or nxt == u:
                        continue
                    if walk(nxt, used_colours | (1 << c), used_vertices | (1 << at)):
                        return True
            return False

        return walk(u, 1 << colour, 0)

    def assign(pos, used):
        node_box[0] += 1
        if node_box[0] > budget_nodes:
            raise _BudgetExceeded
        if pos == m:
            return True
        u, v = order[pos]
        banned = {colour_of[e] for e in incident[u] + incident[v]}
        for colour in range(min(used + 1, m)):
            if colour in banned:
                continue
            if rainbow_through(u, v, colour):
                continue
            colour_of[(u, v)] = colour
            incident[u].append((u, v))
            incident[v].append((u, v))
            if assign(pos + 1, max(used, colour + 1)):
                return True
            del colour_of[(u, v)]
            incident[u].pop()
            incident[v].pop()
        return False

    if assign(0, 0):
        return dict(colour_of)
    return None


def mad_star_probe(t: int, budget_nodes: int = MAD_NODE_BUDGET) -> SearchResult:
    """Largest average degree of an order-t graph with a rainbow-cycle-free
    proper edge colouring; exhaustive over all graphs on t vertices.

    Graphs with a triangle never qualify (a properly coloured triangle is
    always rainbow), the rest are decided by exhaustive colouring search
    in decreasing order of average degree.
    """
    if not 1 <= t <= 7:
        raise DomainError("graph-by-graph exhaustion is limited to t <= 7")
    candidates = []
    for g in _graphs_of_order(t):
        edges = sorted(tuple(sorted(e)) for e in g.edges())
        candidates.append((Fraction(2 * len(edges), t), edges))
    candidates.sort(key=lambda pair: (-pair[0], pair[1]))
    node_box = [0]
    proven = True
    best = Fraction(0)
    best_witness = EdgeColouredGraph(t, ())
    for avg, edges in candidates:
        adj = [0] * t
        for u, v in edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if _has_triangle(adj, t):
            continue
        try:
            colouring = _rainbow_free_colouring(edges, t, node_box, budget_nodes)
        except _BudgetExceeded:
            proven = False
            break
        if colouring is not None:
            best = avg
            best_witness = EdgeColouredGraph(
                t, tuple((u, v, c + 1) for (u, v), c in sorted(colouring.items()))
            )
            break
    from .colouring import find_rainbow_cycle

    assert is_proper(best_witness)
    if best_witness.edges and t >= 3:
        assert find_rainbow_cycle(best_witness, max_len=max(3, t)) is None
    return SearchResult(best, best_witness, node_box[0], proven)
