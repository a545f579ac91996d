"""Count cycles in a few multigraphs and cross-check with subset enumeration."""

from cyclecount import (
    complete_bipartite,
    complete_graph,
    count_cycles,
    count_cycles_oracle,
    necklace,
    reduce,
    subdivide,
    theta,
)

graphs = {
    "theta(5)": theta(5),
    "K4": complete_graph(4),
    "K5": complete_graph(5),
    "K3,3": complete_bipartite(3, 3),
    "necklace(4)": necklace(4),
}

for name, g in graphs.items():
    fast, slow = count_cycles(g), count_cycles_oracle(g)
    print(f"{name:12s} n={g.n:2d} m={g.m:2d} cycles={fast:3d} oracle={slow:3d}")

# subdividing edges changes the graph but not its cycles
g = subdivide(subdivide(complete_graph(4), 0, 3), 5)
r = reduce(g)
print(f"\nK4 with 4 extra divalent vertices: n={g.n}, cycles={count_cycles(g)}")
print(f"reduced back: n={r.graph.n}, m={r.graph.m} ({r.provenance})")
