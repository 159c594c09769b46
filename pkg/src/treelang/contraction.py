"""Contractions between trees, stored by their vertex map.

Direction convention: a contraction goes from the bigger tree ``source``
onto ``target``.  The edge map is derived from the vertex map: a source
edge whose endpoints land on one target vertex is collapsed there, and
otherwise goes to the target edge joining the two images.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .trees import PlanarRootedTree

# names of the defining conditions, in the order they are checked
SURJECTIVE = "surjective-on-vertices"
ADJACENCY = "endpoint-compatibility"
UNIQUE_EDGE = "unique-edge-preimage"
CONNECTED = "connected-preimage"
ROOTED = "root-preserving"
PLANAR = "planar-order"


@dataclass(frozen=True)
class Contraction:
    source: PlanarRootedTree
    target: PlanarRootedTree
    vertex_map: tuple

    def edge_map(self) -> dict:
        """Source edge -> ``("edge", e)`` or ``("vertex", v)`` in the target."""
        out = {}
        for c in self.source.edges:
            a = self.vertex_map[self.source.parent[c]]
            b = self.vertex_map[c]
            if a == b:
                out[c] = ("vertex", a)
            else:
                out[c] = ("edge", _edge_between(self.target, a, b))
        return out


def _edge_between(tree: PlanarRootedTree, a: int, b: int) -> int | None:
    if tree.parent[b] == a:
        return b
    if tree.parent[a] == b:
        return a
    return None


def _connected(tree: PlanarRootedTree, verts: set) -> bool:
    if not verts:
        return False
    start = next(iter(verts))
    seen, stack = {start}, [start]
    while stack:
        v = stack.pop()
        for w in tree.neighbors[v]:
            if w in verts and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(verts)


def contraction_violation(vertex_map: Sequence[int], source: PlanarRootedTree,
                          target: PlanarRootedTree) -> str | None:
    """Name of the first violated contraction condition, or None."""
    vm = tuple(vertex_map)
    if len(vm) != source.n_vertices or any(not 0 <= x < target.n_vertices for x in vm):
        return SURJECTIVE
    if set(vm) != set(range(target.n_vertices)):
        return SURJECTIVE
    hits = [0] * target.n_vertices
    for c in source.edges:
        a, b = vm[source.parent[c]], vm[c]
        if a == b:
            continue
        e = _edge_between(target, a, b)
        if e is None:
            return ADJACENCY
        hits[e] += 1
    if any(hits[e] != 1 for e in target.edges):
        return UNIQUE_EDGE
    blocks: list[set] = [set() for _ in range(target.n_vertices)]
    for v, x in enumerate(vm):
        blocks[x].add(v)
    if not all(_connected(source, b) for b in blocks):
        return CONNECTED
    return None


def is_contraction(vertex_map, source, target) -> bool:
    return contraction_violation(vertex_map, source, target) is None


def is_rooted_contraction(c: Contraction) -> bool:
    return c.vertex_map[0] == 0


def _preimage_minima(c: Contraction) -> list[int]:
    mins = [None] * c.target.n_vertices
    for v, x in enumerate(c.vertex_map):
        if mins[x] is None:
            mins[x] = v
    return mins


def is_planar_contraction(c: Contraction) -> bool:
    """Rooted, and preimage minima increase with the target's depth-first order."""
    if not is_rooted_contraction(c):
        return False
    mins = _preimage_minima(c)
    return all(mins[i] < mins[i + 1] for i in range(len(mins) - 1))


def planar_violation(vertex_map, source, target) -> str | None:
    bad = contraction_violation(vertex_map, source, target)
    if bad is not None:
        return bad
    c = Contraction(source, target, tuple(vertex_map))
    if not is_rooted_contraction(c):
        return ROOTED
    if not is_planar_contraction(c):
        return PLANAR
    return None


def enumerate_planar_contractions(source: PlanarRootedTree,
                                  target: PlanarRootedTree) -> list[Contraction]:
    """All planar contractions ``source -> target``, in lexicographic vertex-map order.

    Vertex images are assigned in depth-first order.  A child either stays
    on its parent's image (collapsed edge) or moves to a target neighbour of
    it, which prunes almost every non-contraction early.
    """
    if source.n_edges < target.n_edges:
        return []
    n = source.n_vertices
    vm = [0] * n
    out = []

    def assign(v: int) -> None:
        if v == n:
            if planar_violation(vm, source, target) is None:
                out.append(Contraction(source, target, tuple(vm)))
            return
        img = vm[source.parent[v]]
        for x in sorted((img,) + target.neighbors[img]):
            vm[v] = x
            assign(v + 1)

    assign(1)
    return out


def identity(tree: PlanarRootedTree) -> Contraction:
    return Contraction(tree, tree, tuple(range(tree.n_vertices)))


def compose(f: Contraction, g: Contraction) -> Contraction:
    """The contraction ``A -> C`` obtained from ``f: A -> B`` then ``g: B -> C``."""
    if f.target != g.source:
        raise ValueError("cannot compose: target of first is not source of second")
    return Contraction(f.source, g.target, tuple(g.vertex_map[x] for x in f.vertex_map))
