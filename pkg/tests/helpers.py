"""Shared tree builders and comparisons for the test suite."""

import random

from treewiener.trees import RootedTree


def random_tree(rng: random.Random, n: int) -> RootedTree:
    """Uniform random attachment: node i picks its parent among 0..i-1."""
    parents = [None] + [rng.randrange(i) for i in range(1, n)]
    return RootedTree.from_parents(parents)


def path_tree(n: int) -> RootedTree:
    return RootedTree.from_parents([None] + list(range(n - 1)))


def star_tree(n: int) -> RootedTree:
    """One center with n - 1 leaves."""
    return RootedTree.from_parents([None] + [0] * (n - 1))


def shape(tree: RootedTree) -> list:
    """Preorder child-count sequence; equal sequences mean the trees are
    isomorphic as ordered rooted trees, whatever the node labels."""
    if tree.n == 0:
        return []
    out = []
    stack = [tree.root]
    while stack:
        u = stack.pop()
        kids = tree.children[u]
        out.append(len(kids))
        stack.extend(reversed(kids))
    return out
