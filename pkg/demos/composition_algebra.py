"""How (n, W, D) summaries compose, and why that is all a recurrence needs.

A tree's Wiener index cannot be combined across a composition on its own;
carrying the anchored distance sum D alongside the vertex count makes the
triple closed under two operations:

  identify(a, b): glue the anchors into one shared vertex
  join(a, b):     connect the anchors with a brand-new edge

Replaying a family's recursive construction with join yields exact values
in O(k) integer steps: that is the entire trick behind computing W for a
tree of F(k+2) vertices in time logarithmic in the vertex count.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from treewiener import (
    SINGLE,
    TreeFamily,
    TreeSummary,
    distance_sum,
    fibonacci_tree,
    identify,
    join,
    node_count,
    replay_family,
    wiener_bfs,
)

edge = join(SINGLE, SINGLE)
print("single vertex:     ", SINGLE.astuple())
print("join two of them:  ", edge.astuple(), "(a single edge)")
print("join edge + vertex:", join(edge, SINGLE).astuple(), "(path of three)")
print("identify two edges:", identify(edge, edge).astuple(), "(same path, glued at the middle)")
print()

print("Composition rules, spelled out for join(a, b):")
print("  n = a.n + b.n")
print("  w = a.w + b.w + a.n*b.d + b.n*a.d + a.n*b.n   (every cross pair uses the new edge)")
print("  d = a.d + b.d + b.n                           (b sits one edge farther from a's anchor)")
print()

print("Replaying the Fibonacci construction, order by order:")
prev, cur = SINGLE, SINGLE
print(f"{'k':>3} {'summary (n, W, D)':>28}")
print(f"{-1:>3} {str(SINGLE.astuple()):>28}")
print(f"{0:>3} {str(SINGLE.astuple()):>28}")
for k in range(1, 11):
    prev, cur = cur, join(cur, prev)
    print(f"{k:>3} {str(cur.astuple()):>28}")
print()

print("Cross-check the replayed summaries against brute force on real trees:")
for k in (4, 8, 12):
    t = fibonacci_tree(k)
    s = replay_family(TreeFamily.FIBONACCI, k)
    measured = TreeSummary(t.n, wiener_bfs(t), distance_sum(t, t.root))
    flag = "ok" if s == measured else "MISMATCH"
    print(f"  k={k:>2}: replay {s.astuple()}  measured {measured.astuple()}  [{flag}]")
print()

k = 400
s = replay_family(TreeFamily.FIBONACCI, k)
print(f"And it keeps going where trees cannot: order {k} has")
print(f"  {s.n} vertices")
print(f"  W = {s.w}")
print(f"computed from {k} joins ({node_count(TreeFamily.FIBONACCI, k).bit_length()} bits per count).")
