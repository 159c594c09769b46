"""Cones over trees and the flat counts of their graphic matroids.

Flats of a graphic matroid on a connected graph correspond to partitions
of the vertex set into blocks that each induce a connected subgraph; the
rank of a flat is the number of vertices minus the number of blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .trees import PlanarRootedTree, subtree_count


@dataclass(frozen=True)
class ConeGraph:
    n_vertices: int  # the apex is vertex n_vertices - 1
    edges: tuple  # sorted pairs (a, b), a < b

    @property
    def apex(self) -> int:
        return self.n_vertices - 1

    def adjacency(self) -> list[set]:
        adj = [set() for _ in range(self.n_vertices)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj


def cone(tree: PlanarRootedTree) -> ConeGraph:
    apex = tree.n_vertices
    edges = [(tree.parent[c], c) for c in tree.edges]
    edges += [(v, apex) for v in range(tree.n_vertices)]
    return ConeGraph(apex + 1, tuple(sorted(edges)))


def _induces_connected(adj: list[set], block: set) -> bool:
    start = next(iter(block))
    seen, stack = {start}, [start]
    while stack:
        v = stack.pop()
        for w in adj[v] & block:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(block)


def rank1_flat_count(g: ConeGraph) -> int:
    """Rank-one flats of a simple graph's matroid are its single edges."""
    return len(set(g.edges))


def corank1_flat_count(g: ConeGraph) -> int:
    """Two-block partitions of the vertices with both blocks connected."""
    adj = g.adjacency()
    verts = set(range(g.n_vertices))
    if not _induces_connected(adj, verts):
        raise ValueError("graph is disconnected")
    anchor = 0
    others = sorted(verts - {anchor})
    count = 0
    # the block holding vertex 0 fixes which side is which
    for k in range(len(others)):
        for extra in combinations(others, k):
            block = {anchor, *extra}
            rest = verts - block
            if _induces_connected(adj, block) and _induces_connected(adj, rest):
                count += 1
    return count


def kl1_formula(tree: PlanarRootedTree) -> int:
    g = cone(tree)
    return corank1_flat_count(g) - rank1_flat_count(g)


def kl1_from_subtrees(tree: PlanarRootedTree) -> int:
    return subtree_count(tree) - (2 * tree.n_edges + 1)
