"""Add one ear to K4 in every possible way and list the resulting classes."""

from cyclecount import Anchor, add_ear, complete_graph, count_cycles, count_st_paths, ear_extension_profile

k4 = complete_graph(4)
base = count_cycles(k4)

# an ear between two vertices adds one cycle per path between them
h, ends = add_ear(k4, Anchor.at(0), Anchor.at(1))
print(f"K4 has {base} cycles; {count_st_paths(k4, 0, 1)} paths join vertices 0 and 1")
print(f"after the ear: {count_cycles(h)} cycles")

print("\nclasses reachable with one ear:")
for entry in ear_extension_profile(k4):
    kinds = ", ".join(sorted(entry.kinds))
    print(f"  cycles={entry.count:2d} n={entry.graph.n} m={entry.graph.m}  via {kinds}")
