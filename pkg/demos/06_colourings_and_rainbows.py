"""
Layer-pair graphs, element colourings, and rainbow cycles
=========================================================

The bipartite graph between adjacent layers joins A below to B above
when A is a subset of B.  Colouring each edge by the one added element
is always proper, and no cycle can show all-distinct colours.
The densest order-m layer-pair subgraph and the unrestricted graph
optimum bracket this behaviour from both sides.
"""

import random

from latticework.colouring import (
    EdgeColouredGraph,
    LayerPairGraph,
    avg_degree,
    find_rainbow_cycle,
    is_proper,
    layer_colouring,
    xi,
)
from latticework.constructions import full_layer_pair
from latticework.sampling import random_layer_pair
from latticework.search import mad_star_probe, xi_star_exact

# the full pair between layers 2 and 3 of [6]
a, b = full_layer_pair(6, 2)
g = LayerPairGraph(a, b)
print("full pair layers 2-3 of [6]:", g.order(), "vertices,",
      xi(a, b), "edges, average degree", avg_degree(g))

# colour every edge by its added element: proper, and rainbow-free
eg = layer_colouring(g)
print("proper:", is_proper(eg),
      " rainbow cycle:", find_rainbow_cycle(eg, g.order()))

# random subpairs inherit both properties
rng = random.Random(1)
for _ in range(300):
    a, b = random_layer_pair(rng, 5, rng.randrange(5))
    eg = layer_colouring(LayerPairGraph(a, b))
    assert is_proper(eg)
    assert find_rainbow_cycle(eg, max(3, len(a) + len(b))) is None
print("300 random subpairs: all proper, none rainbow")

# a hand-built colouring CAN be rainbow: a triangle with three colours
tri = EdgeColouredGraph(3, ((0, 1, 1), (1, 2, 2), (0, 2, 3)))
print("planted triangle rainbow cycle:", find_rainbow_cycle(tri, 3))

# the densest layer-pair subgraph on m vertices, exactly
for m in (6, 9, 12):
    res = xi_star_exact(5, m)
    print(f"densest pair subgraph of [5] on {m} vertices: avg degree {res.value}")

# the unrestricted ceiling: densest order-t graph that still admits a
# rainbow-cycle-free proper colouring (exhaustive over all graphs)
for t in (4, 6, 7):
    res = mad_star_probe(t)
    print(f"best rainbow-free average degree on {t} vertices: {res.value}")
