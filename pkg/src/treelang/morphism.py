"""Morphism words: Dyck words of the source tree with vertex subscripts.

Each edge of the source contributes an up letter when the depth-first
walk climbs it and a down letter when it returns.  Both letters carry
the image of the edge's endpoint farther from the root, so matched
letters always share their subscript.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .contraction import Contraction, enumerate_planar_contractions
from .dyck import DOWN, UP, NotDyckError, dyck_to_planar_tree, enumerate_dyck, validate_dyck
from .trees import PlanarRootedTree

_TOKEN = re.compile(r"([udUD])\s*(\d+)")


@dataclass(frozen=True)
class MorphismWord:
    letters: tuple  # of (direction, label)

    @classmethod
    def parse(cls, text: str) -> "MorphismWord":
        """Accepts ``u0 d0 u1``, ``u0d0u1`` or ``u_0 d_0``."""
        cleaned = text.replace("_", "")
        tokens = _TOKEN.findall(cleaned)
        if _TOKEN.sub("", cleaned).strip(" ,\t\n"):
            raise ValueError(f"malformed morphism word: {text!r}")
        return cls(tuple((d.lower(), int(k)) for d, k in tokens))

    @classmethod
    def from_tokens(cls, tokens: Iterable[str]) -> "MorphismWord":
        return cls(tuple((t[0], int(t[1:])) for t in tokens))

    @property
    def tokens(self) -> tuple:
        return tuple(f"{d}{k}" for d, k in self.letters)

    @property
    def directions(self) -> str:
        return "".join(d for d, _ in self.letters)

    def compact(self) -> str:
        return "".join(self.tokens)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(self.tokens)


def encode(c: Contraction) -> MorphismWord:
    src, vm = c.source, c.vertex_map
    out = []

    def walk(v: int) -> None:
        for ch in src.children[v]:
            out.append((UP, vm[ch]))
            walk(ch)
            out.append((DOWN, vm[ch]))

    walk(0)
    return MorphismWord(tuple(out))


def decode(w: MorphismWord, target: PlanarRootedTree) -> Contraction:
    """Source tree and vertex map of ``w``; the root always maps to the root.

    The result need not be a contraction; check it separately.
    """
    if not validate_dyck(w.directions):
        raise NotDyckError(f"not a Dyck word: {w.directions!r}")
    source = dyck_to_planar_tree(w.directions)
    vm = [0]
    for d, k in w.letters:
        if d == UP:
            vm.append(k)
    for i, j in matching(w):
        if w.letters[i][1] != w.letters[j][1]:
            raise ValueError(f"letters {i} and {j} are paired but carry different labels")
    if any(not 0 <= k < target.n_vertices for k in vm):
        raise ValueError("label outside the target's vertex range")
    return Contraction(source, target, tuple(vm))


def matching(w) -> list[tuple[int, int]]:
    """Nested (parenthesis) matching of up and down positions, sorted by up position."""
    directions = w.directions if isinstance(w, MorphismWord) else "".join(w)
    if not validate_dyck(directions):
        raise NotDyckError(f"not a Dyck word: {directions!r}")
    open_, pairs = [], []
    for i, ch in enumerate(directions):
        if ch == UP:
            open_.append(i)
        else:
            pairs.append((open_.pop(), i))
    return sorted(pairs)


def language_LT(target: PlanarRootedTree, max_edges: int) -> list[MorphismWord]:
    """Words of all planar contractions onto ``target`` from sources with <= max_edges edges."""
    words = []
    for n in range(max_edges + 1):
        for dw in enumerate_dyck(n):
            src = dyck_to_planar_tree(dw)
            words.extend(encode(c) for c in enumerate_planar_contractions(src, target))
    assert len(set(words)) == len(words), "distinct contractions gave equal words"
    return sorted(words, key=lambda w: (len(w), w.tokens))


def restrict(w: MorphismWord, pairs: Iterable[tuple[int, int]]) -> MorphismWord:
    keep = sorted(p for pair in pairs for p in pair)
    return MorphismWord(tuple(w.letters[i] for i in keep))


def strong_embeddings(big: MorphismWord, small: MorphismWord) -> list[tuple]:
    """Every set of matched pairs of ``big`` whose letters spell ``small``."""
    if len(small) > len(big) or len(small) % 2:
        return []
    pairs = matching(big)
    k = len(small) // 2
    return [chosen for chosen in combinations(pairs, k) if restrict(big, chosen) == small]


def strong_contains(big: MorphismWord, small: MorphismWord) -> bool:
    """Brute force: ``small`` is a pair-preserving labelled subword of ``big``."""
    if len(small) > len(big) or len(small) % 2:
        return False
    k = len(small) // 2
    return any(restrict(big, chosen) == small for chosen in combinations(matching(big), k))


def sections(w: MorphismWord, target: PlanarRootedTree) -> list[tuple[str, list[int]]]:
    """Positions of ``w`` grouped by the tree automaton state that consumed them.

    Returns ``[("initial", [...]), ("e1,u", [...]), ("e1,d", [...]), ...]`` with
    one entry per non-final state, in the automaton's state order.
    """
    from .builders import build_tree_pda, section_name
    from .pda import accepting_runs

    pda = build_tree_pda(target)
    runs = accepting_runs(pda, w.tokens)
    if not runs:
        raise ValueError(f"word rejected by the tree automaton: {w}")
    run = runs[0]
    by_state = {s: [] for s in pda.states if s != "qf"}
    for before, after in zip(run, run[1:]):
        if len(after.remaining) < len(before.remaining):
            by_state[before.state].append(len(w) - len(before.remaining))
    return [(section_name(s), pos) for s, pos in by_state.items()]
