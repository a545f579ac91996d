"""Cycle counts of cubic multigraphs by number of vertices."""

from cyclecount import search

classes = search.cubic_classes(10)
seen: set[int] = set()
for n, level in classes.items():
    counts = sorted(set(level.values()))
    new = [c for c in counts if c not in seen]
    seen.update(counts)
    print(f"n={n:2d}: {len(level):3d} classes, new counts {new}")

print("\nsmallest planar cubic order with 7 cycles:", search.cubic_planar_minimum_order(7))
print("cubic counts up to 30 not yet seen:", [c for c in range(1, 31) if c not in seen])
