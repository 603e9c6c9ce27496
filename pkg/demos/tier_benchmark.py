"""Three algorithm tiers for the same number, three very different costs.

  formula  O(k) big-integer operations, input is just the order k
  linear   O(n) edge-contribution pass over a materialized tree
  bfs      O(n^2) traversal from every vertex, the definition itself

The quadratic tier stops being practical first, then the linear tier stops
fitting in memory, and the formula tier barely notices.
"""

import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from treewiener import (
    TreeFamily,
    fibonacci_tree,
    node_count,
    wiener_bfs,
    wiener_fib,
    wiener_linear,
)

BFS_CAP = 5_000
LINEAR_CAP = 1_000_000


def timed(fn, *args):
    t0 = time.perf_counter()
    value = fn(*args)
    return value, time.perf_counter() - t0


print(f"{'k':>4} {'nodes':>10} {'formula_s':>10} {'linear_s':>10} {'bfs_s':>10}")
for k in (5, 10, 15, 18, 21, 24, 27, 50, 100, 500):
    n = node_count(TreeFamily.FIBONACCI, k)
    w_formula, t_formula = timed(wiener_fib, k)
    if n <= LINEAR_CAP:
        tree = fibonacci_tree(k)
        w_linear, t_linear = timed(wiener_linear, tree)
        assert w_linear == w_formula
        linear_s = f"{t_linear:10.4f}"
    else:
        linear_s = f"{'(too big)':>10}"
    if n <= BFS_CAP:
        w_bfs, t_bfs = timed(wiener_bfs, tree)
        assert w_bfs == w_formula
        bfs_s = f"{t_bfs:10.4f}"
    else:
        bfs_s = f"{'(too big)':>10}"
    n_str = str(n) if n < 10**10 else f"~10^{len(str(n)) - 1}"
    print(f"{k:>4} {n_str:>10} {t_formula:10.4f} {linear_s} {bfs_s}")

print()
w, t = timed(wiener_fib, 10_000)
print(f"order 10000 (a tree of ~10^{len(str(node_count(TreeFamily.FIBONACCI, 10_000))) - 1} "
      f"vertices): W has {len(str(w))} digits, computed in {t:.3f}s")
