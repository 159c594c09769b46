"""Dyck words and the bijection with planar rooted trees."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable

from .trees import PlanarRootedTree, canonical_unrooted

UP, DOWN = "u", "d"


class NotDyckError(ValueError):
    pass


def _letters(word: Iterable[str] | str) -> str:
    return "".join(word).replace(" ", "").lower()


def validate_dyck(word) -> bool:
    height = 0
    for ch in _letters(word):
        if ch == UP:
            height += 1
        elif ch == DOWN:
            height -= 1
            if height < 0:
                return False
        else:
            return False
    return height == 0


def enumerate_dyck(n_edges: int) -> list[str]:
    """All Dyck words with ``n_edges`` up-steps, lexicographic with u < d."""
    out = []

    def grow(prefix: list[str], ups: int, downs: int) -> None:
        if downs == n_edges:
            out.append("".join(prefix))
            return
        if ups < n_edges:
            prefix.append(UP)
            grow(prefix, ups + 1, downs)
            prefix.pop()
        if downs < ups:
            prefix.append(DOWN)
            grow(prefix, ups, downs + 1)
            prefix.pop()

    grow([], 0, 0)
    return out


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    return sum(catalan(i) * catalan(n - 1 - i) for i in range(n))


def dyck_to_planar_tree(word) -> PlanarRootedTree:
    letters = _letters(word)
    if not validate_dyck(letters):
        raise NotDyckError(f"not a Dyck word: {letters!r}")
    parents = [None]
    current = 0
    for ch in letters:
        if ch == UP:
            parents.append(current)
            current = len(parents) - 1
        else:
            current = parents[current]
    return PlanarRootedTree.from_parents(parents)


def planar_tree_to_dyck(tree: PlanarRootedTree) -> str:
    out = []

    def walk(v: int) -> None:
        for c in tree.children[v]:
            out.append(UP)
            walk(c)
            out.append(DOWN)

    walk(0)
    return "".join(out)


def p_multiplicity(n_edges: int) -> dict[str, int]:
    """Number of Dyck words per unrooted isomorphism class with ``n_edges`` edges."""
    counts = Counter(canonical_unrooted(dyck_to_planar_tree(w)) for w in enumerate_dyck(n_edges))
    return dict(sorted(counts.items()))
