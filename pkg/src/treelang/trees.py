"""Planar rooted trees with depth-first vertex numbering.

Vertex 0 is the root and vertices are numbered in depth-first order,
leftmost child first.  An edge is named by its endpoint farther from the
root, so the edges of a tree with ``n`` vertices are ``1..n-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Sequence

ROOT = None  # parent sentinel for vertex 0


@dataclass(frozen=True)
class PlanarRootedTree:
    parent: tuple
    children: tuple

    @classmethod
    def from_parents(cls, parents: Sequence) -> "PlanarRootedTree":
        """Build a tree from a parent sequence, ordering children by label.

        The result is only a valid planar tree if the labels already form a
        depth-first numbering; use :func:`validate` to check.
        """
        parents = tuple(None if p is None or p == -1 else int(p) for p in parents)
        kids = [[] for _ in parents]
        for v, p in enumerate(parents):
            if p is not None and 0 <= p < len(parents):
                kids[p].append(v)
        return cls(parents, tuple(tuple(k) for k in kids))

    @classmethod
    def from_children(cls, children: Sequence[Sequence[int]]) -> "PlanarRootedTree":
        parents = [None] * len(children)
        for v, kids in enumerate(children):
            for c in kids:
                parents[c] = v
        return cls(tuple(parents), tuple(tuple(k) for k in children))

    @classmethod
    def single_vertex(cls) -> "PlanarRootedTree":
        return cls((None,), ((),))

    @property
    def n_vertices(self) -> int:
        return len(self.parent)

    @property
    def n_edges(self) -> int:
        return len(self.parent) - 1

    @property
    def edges(self) -> range:
        return range(1, self.n_vertices)

    @cached_property
    def neighbors(self) -> tuple:
        out = []
        for v in range(self.n_vertices):
            nb = list(self.children[v])
            if self.parent[v] is not None:
                nb.append(self.parent[v])
            out.append(tuple(sorted(nb)))
        return tuple(out)

    @cached_property
    def depth(self) -> tuple:
        d = [0] * self.n_vertices
        for v in range(1, self.n_vertices):
            d[v] = d[self.parent[v]] + 1
        return tuple(d)

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def __str__(self) -> str:
        return "parent: " + ",".join("-" if p is None else str(p) for p in self.parent)


def parse_parents(text: str) -> PlanarRootedTree:
    """Parse the structured form ``-,0,1,1`` (optionally prefixed by ``parent:``)."""
    text = text.strip()
    if text.startswith("parent:"):
        text = text[len("parent:"):]
    parts = [p.strip() for p in text.split(",") if p.strip()]
    return PlanarRootedTree.from_parents(
        [None if p in ("-", "root", "-1") else int(p) for p in parts]
    )


def _dfs_order(children: Sequence[Sequence[int]]) -> list[int]:
    order, stack = [], [0]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(reversed(children[v]))
    return order


def validate(tree: PlanarRootedTree) -> bool:
    """True iff the stored structure is a tree whose labels are depth-first."""
    n = len(tree.parent)
    if n == 0 or len(tree.children) != n or tree.parent[0] is not None:
        return False
    for v in range(1, n):
        p = tree.parent[v]
        if not isinstance(p, int) or not 0 <= p < n or p == v:
            return False
    seen = set()
    for v, kids in enumerate(tree.children):
        for c in kids:
            if not isinstance(c, int) or not 0 < c < n or c in seen:
                return False
            if tree.parent[c] != v:
                return False
            seen.add(c)
    if len(seen) != n - 1:
        return False
    # a cycle would leave some vertex unreached from the root
    order = _dfs_order(tree.children)
    return order == list(range(n))


def degree_sequence(tree: PlanarRootedTree) -> tuple:
    return tuple(len(nb) for nb in tree.neighbors)


def star_norm(tree: PlanarRootedTree) -> int:
    return sum(comb(d, 2) for d in degree_sequence(tree))


def leaf_count(tree: PlanarRootedTree) -> int:
    """Degree-one vertices of the underlying tree; a lone vertex counts as one."""
    if tree.n_vertices == 1:
        return 1
    return sum(1 for d in degree_sequence(tree) if d == 1)


def subtree_count(tree: PlanarRootedTree) -> int:
    """Number of nonempty connected vertex subsets (single vertices included)."""
    rooted_at = [1] * tree.n_vertices
    for v in reversed(range(tree.n_vertices)):
        for c in tree.children[v]:
            rooted_at[v] *= 1 + rooted_at[c]
    return sum(rooted_at)


def is_path(tree: PlanarRootedTree) -> bool:
    return all(d <= 2 for d in degree_sequence(tree))


# -- canonical forms -------------------------------------------------------

def _rooted_code(adj: Sequence[Sequence[int]], root: int, parent: int | None = None) -> str:
    codes = sorted(_rooted_code(adj, c, root) for c in adj[root] if c != parent)
    return "(" + "".join(codes) + ")"


def canonical_rooted(tree: PlanarRootedTree) -> str:
    """AHU code of the underlying rooted tree (sibling order forgotten)."""
    return _rooted_code(tree.neighbors, 0)


def canonical_unrooted(tree: PlanarRootedTree) -> str:
    """Minimum rooted code over every choice of root."""
    return min(_rooted_code(tree.neighbors, r) for r in range(tree.n_vertices))


def reroot(tree: PlanarRootedTree, new_root: int) -> PlanarRootedTree:
    """Re-root at ``new_root``; children ordered by old label, then relabelled depth-first."""
    adj = tree.neighbors
    relabel = {}
    kids_of: dict[int, list[int]] = {}
    stack = [(new_root, None)]
    while stack:
        v, p = stack.pop()
        relabel[v] = len(relabel)
        kids = [c for c in adj[v] if c != p]
        kids_of[v] = kids
        stack.extend((c, v) for c in reversed(kids))
    children = [()] * tree.n_vertices
    for v, kids in kids_of.items():
        children[relabel[v]] = tuple(relabel[c] for c in kids)
    return PlanarRootedTree.from_children(children)


def permute_siblings(tree: PlanarRootedTree, order_key) -> PlanarRootedTree:
    """Reorder every child list by ``order_key(vertex, children)`` and relabel depth-first."""
    reordered = [list(order_key(v, list(kids))) for v, kids in enumerate(tree.children)]
    relabel = {}
    stack = [0]
    while stack:
        v = stack.pop()
        relabel[v] = len(relabel)
        stack.extend(reversed(reordered[v]))
    children = [()] * tree.n_vertices
    for v, kids in enumerate(reordered):
        children[relabel[v]] = tuple(relabel[c] for c in kids)
    return PlanarRootedTree.from_children(children)
