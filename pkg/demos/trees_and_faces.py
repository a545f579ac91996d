"""Turn a tree into an outerplanar graph whose cycles match the tree's subtrees."""

from cyclecount import (
    Tree,
    count_cycles,
    count_subtrees,
    enumerate_subtrees,
    inner_dual,
    reduce,
    subtree_to_cycle,
    tree_to_outerplanar,
    trees_isomorphic,
)

# a spider: centre 0 with legs of length 1, 2 and 2
t = Tree(6, ((0, 1), (0, 2), (2, 3), (0, 4), (4, 5)))
op, faces = tree_to_outerplanar(t)
g = op.to_multigraph()

print(f"tree: {t.n} vertices, {count_subtrees(t)} subtrees")
print(f"outerplanar graph: {g.n} vertices, {len(op.chords)} chords, {count_cycles(g)} cycles")
print(f"reduced: {reduce(g).graph.n} vertices, all of degree 3")
print("inner dual is the tree again:", trees_isomorphic(inner_dual(op), t))

for s in enumerate_subtrees(t)[:5]:
    cycle = subtree_to_cycle(op, faces, s)
    print(f"  subtree {sorted(s)} -> cycle on edges {sorted(cycle)}")
