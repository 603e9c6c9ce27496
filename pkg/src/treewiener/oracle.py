"""Ground-truth distance computations on materialized trees.

Two independent routes to the Wiener index:

* wiener_bfs: a breadth-first traversal from every vertex, summing all
  pairwise distances directly from the definition.  O(n^2), the court of
  last resort.
* wiener_linear: one post-order pass; the edge to v's parent separates the
  tree into v's subtree (size s) and the rest (n - s) and contributes
  s * (n - s) shortest paths of weight 1 each.  O(n).

Everything accumulates in Python ints, so results stay exact at any size.
"""

from treewiener.errors import EmptyTreeError, UnknownNodeError
from treewiener.trees import RootedTree


def _bfs_distance_sum(adj: list, src: int, n: int) -> int:
    """Sum of distances from src to every vertex, by level-order frontier."""
    seen = bytearray(n)
    seen[src] = 1
    frontier = [src]
    total = 0
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = 1
                    nxt.append(w)
        total += depth * len(nxt)
        frontier = nxt
    return total


def distance_sum(tree: RootedTree, v: int) -> int:
    """Sum of d(v, x) over every node x of the tree."""
    if tree.n == 0:
        raise EmptyTreeError("distance_sum needs at least one node")
    if not isinstance(v, int) or not 0 <= v < tree.n:
        raise UnknownNodeError(f"node {v!r} not in tree of {tree.n} nodes")
    return _bfs_distance_sum(tree.adjacency(), v, tree.n)


def wiener_bfs(tree: RootedTree) -> int:
    """Wiener index by traversal from every vertex (quadratic oracle)."""
    if tree.n == 0:
        raise EmptyTreeError("wiener_bfs needs at least one node")
    adj = tree.adjacency()
    n = tree.n
    total = sum(_bfs_distance_sum(adj, src, n) for src in range(n))
    assert total % 2 == 0, "sum of all distance sums must be even"
    return total // 2


def wiener_linear(tree: RootedTree) -> int:
    """Wiener index by edge contributions in one post-order pass (linear)."""
    if tree.n == 0:
        raise EmptyTreeError("wiener_linear needs at least one node")
    n = tree.n
    # Iterative preorder; reversed, it is a valid order for size accumulation.
    order = []
    stack = [tree.root]
    while stack:
        u = stack.pop()
        order.append(u)
        stack.extend(tree.children[u])
    sizes = [1] * n
    total = 0
    parent = tree.parent
    for u in reversed(order):
        p = parent[u]
        if p is not None:
            s = sizes[u]
            sizes[p] += s
            total += s * (n - s)
    return total
