"""The concrete automata: Dyck words, tree languages, and pattern ideals.

State names used by :func:`build_tree_pda`:

``q0``        initial section (letters mapped to the root before any branch)
``q_e{c}_u``  inside the image of vertex ``c``, entered from below
``q_e{c}_d``  back at the parent of ``c`` after finishing its branch
``qf``        final

Edges are named by their endpoint farther from the root.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dyck import DOWN, UP, dyck_to_planar_tree
from .morphism import MorphismWord
from .pda import EPS, PushdownAutomaton, accepts, make_pda
from .trees import PlanarRootedTree

Z = "Z"
INITIAL, FINAL = "q0", "qf"


def up(v: int) -> str:
    return f"u{v}"


def down(v: int) -> str:
    return f"d{v}"


def stack_sym(v: int) -> str:
    return f"A{v}"


def q_up(e: int) -> str:
    return f"q_e{e}_u"


def q_down(e: int) -> str:
    return f"q_e{e}_d"


def section_name(state: str) -> str:
    if state == INITIAL:
        return "initial"
    if state.startswith("q_e"):
        edge, phase = state[3:].split("_")
        return f"e{edge},{phase}"
    return state


def build_catalan_pda() -> PushdownAutomaton:
    rows = [
        ("q0", "u", "Z", "q0", ("A", "Z")),
        ("q0", "u", "A", "q0", ("A", "A")),
        ("q0", "d", "A", "q0", ()),
        ("q0", EPS, "Z", "q1", ()),
    ]
    return make_pda(rows, initial_state="q0", initial_stack_symbol="Z", final_states=["q1"],
                    states=["q0", "q1"], alphabet=["u", "d"], stack_symbols=["Z", "A"])


@dataclass(frozen=True)
class EulerTour:
    """Depth-first walk of a tree: each edge once going up, once coming down."""
    steps: tuple  # of (edge, "u" | "d")

    @classmethod
    def of(cls, tree: PlanarRootedTree) -> "EulerTour":
        out = []

        def walk(v):
            for c in tree.children[v]:
                out.append((c, UP))
                walk(c)
                out.append((c, DOWN))

        walk(0)
        return cls(tuple(out))


def _next_sibling(tree: PlanarRootedTree, c: int) -> int | None:
    sibs = tree.children[tree.parent[c]]
    i = sibs.index(c)
    return sibs[i + 1] if i + 1 < len(sibs) else None


def _stay_rows(state: str, v: int) -> list[tuple]:
    """Collapsed edges inside the image of a non-root vertex ``v``."""
    A = stack_sym(v)
    return [(state, up(v), A, state, (A, A)),
            (state, down(v), A, state, ())]


def _root_stay_rows(state: str) -> list[tuple]:
    A0 = stack_sym(0)
    return [(state, up(0), A0, state, (A0, A0)),
            (state, up(0), Z, state, (A0, Z)),
            (state, down(0), A0, state, ())]


def build_tree_pda(tree: PlanarRootedTree) -> PushdownAutomaton:
    """The unambiguous automaton reading the morphism words of planar contractions onto ``tree``.

    The state sequence follows the tree's Euler tour, so "the next
    unvisited child" is a property of the state rather than of the run.
    Two rows beyond the textbook case list are required for completeness:
    the ``Z``-keyed return from a leaf hanging off the root (the root's
    image may be the source root alone), and the ``d0`` pop in the last
    root state.
    """
    rows: list[tuple] = []
    A0 = stack_sym(0)
    rows.append((INITIAL, up(0), EPS, INITIAL, (A0,)))
    rows.append((INITIAL, down(0), A0, INITIAL, ()))
    root_kids = tree.children[0]
    if root_kids:
        c1 = root_kids[0]
        rows.append((INITIAL, up(c1), EPS, q_up(c1), (stack_sym(c1),)))
    else:
        rows.append((INITIAL, EPS, Z, FINAL, ()))

    for c, phase in EulerTour.of(tree).steps:
        p = tree.parent[c]
        if phase == UP:
            state = q_up(c)
            rows += _stay_rows(state, c)
            kids = tree.children[c]
            if kids:
                k = kids[0]
                rows.append((state, up(k), stack_sym(c), q_up(k), (stack_sym(k), stack_sym(c))))
            else:
                rows += _return_rows(tree, state, c)
        else:
            state = q_down(c)
            nxt = _next_sibling(tree, c)
            if p != 0:
                rows += _stay_rows(state, p)
                if nxt is not None:
                    rows.append((state, up(nxt), stack_sym(p), q_up(nxt),
                                 (stack_sym(nxt), stack_sym(p))))
                else:
                    rows += _return_rows(tree, state, p)
            else:
                rows += _root_stay_rows(state)
                if nxt is not None:
                    rows.append((state, up(nxt), EPS, q_up(nxt), (stack_sym(nxt),)))
                else:
                    rows.append((state, EPS, Z, FINAL, ()))

    states = [INITIAL]
    for c, phase in EulerTour.of(tree).steps:
        states.append(q_up(c) if phase == UP else q_down(c))
    states.append(FINAL)
    labels = range(tree.n_vertices)
    return make_pda(
        rows,
        initial_state=INITIAL,
        initial_stack_symbol=Z,
        final_states=[FINAL],
        states=states,
        alphabet=[up(v) for v in labels] + [down(v) for v in labels],
        stack_symbols=[Z] + [stack_sym(v) for v in labels],
    )


def _return_rows(tree: PlanarRootedTree, state: str, v: int) -> list[tuple]:
    """ε-moves from ``state`` down the edge into ``v`` once all ``A_v`` are popped."""
    below = tree.parent[v]
    target = q_down(v)
    rows = [(state, EPS, stack_sym(below), target, (stack_sym(below),))]
    if below == 0:
        rows.append((state, EPS, Z, target, (Z,)))
    return rows


# -- pattern ideals --------------------------------------------------------
#
# A word strongly contains a pattern iff the pattern's labelled planar tree
# is obtained from the word's tree by contracting edges, i.e. by deleting
# non-root nodes and splicing their children into place.  For an ordered
# forest that inclusion can be decided greedily left to right: track, for
# every pattern node y and every starting child index s, the longest prefix
# of y's children (from s on) already embedded in the text forest read so
# far.  Closing a text node x updates its parent's table with
#
#     new = max(child_table[y, old],            # x deleted
#               old + 1 if x hosts child old of y)  # x kept
#
# which only needs the finished table of x's own children.  The table is a
# finite value, so pairing it with the tree automaton's state and stack
# symbols gives a deterministic machine for the ideal.


@dataclass(frozen=True)
class _PatternTree:
    labels: tuple  # per node; root label is None
    children: tuple


def _pattern_tree(w: MorphismWord) -> _PatternTree:
    shape = dyck_to_planar_tree(w.directions)
    labels = [None] + [k for d, k in w.letters if d == UP]
    return _PatternTree(tuple(labels), shape.children)


class _InclusionTables:
    """Greedy forest-inclusion bookkeeping for a list of patterns."""

    def __init__(self, patterns: list[MorphismWord]):
        self.trees = [_pattern_tree(p) for p in patterns]
        self.slots = [(i, y, s)
                      for i, t in enumerate(self.trees)
                      for y, kids in enumerate(t.children)
                      for s in range(len(kids))]
        self.index = {slot: n for n, slot in enumerate(self.slots)}

    def fresh(self) -> tuple:
        return tuple(s for _, _, s in self.slots)

    def value(self, table: tuple, i: int, y: int, s: int) -> int:
        k = len(self.trees[i].children[y])
        return k if s >= k else table[self.index[(i, y, s)]]

    def complete(self, table: tuple, i: int, y: int) -> bool:
        return self.value(table, i, y, 0) == len(self.trees[i].children[y])

    def close(self, parent: tuple, child: tuple, label: int) -> tuple:
        out = []
        for i, y, s in self.slots:
            tree = self.trees[i]
            old = self.value(parent, i, y, s)
            kids = tree.children[y]
            if old >= len(kids):
                out.append(old)
                continue
            best = self.value(child, i, y, old)
            q = kids[old]
            if tree.labels[q] == label and self.complete(child, i, q):
                best = max(best, old + 1)
            out.append(best)
        return tuple(out)

    def found(self, table: tuple) -> bool:
        return any(self.complete(table, i, 0) for i in range(len(self.trees)))


def build_ideal_pda(patterns: list[MorphismWord], tree: PlanarRootedTree) -> PushdownAutomaton:
    """Automaton for the words of ``L_T`` strongly containing at least one pattern."""
    patterns = list(patterns)
    if not patterns:
        raise ValueError("need at least one pattern")
    base = build_tree_pda(tree)
    for p in patterns:
        if not accepts(base, p.tokens):
            raise ValueError(f"pattern is not a morphism word of this tree: {p}")
    tab = _InclusionTables(patterns)

    tables: dict[tuple, int] = {}

    def tid(t: tuple) -> int:
        return tables.setdefault(t, len(tables))

    def pstate(q: str, t: tuple) -> str:
        return q if q == FINAL else f"{q}#{tid(t)}"

    def psym(x: str, t: tuple | None) -> str:
        return x if x == Z else f"{x}#{tid(t)}"

    fresh = tab.fresh()
    start = (INITIAL, fresh)
    states = {start: None}
    symbols: dict[tuple, None] = {}  # (base symbol, saved table)
    rows: dict[tuple, None] = {}
    by_state: dict[str, list] = {}
    for q, a, x, q2, push in base.rows():
        by_state.setdefault(q, []).append((a, x, q2, push))

    def saved_under(x):
        if x == Z:
            return [None]
        return [t for (b, t) in list(symbols) if b == x]

    changed = True
    while changed:
        changed = False
        before = (len(states), len(symbols), len(rows))
        for q, cur in list(states):
            for a, x, q2, push in by_state.get(q, ()):
                for saved in (saved_under(x) if x is not EPS else [None]):
                    top = EPS if x is EPS else psym(x, saved)
                    if a is not EPS and a[0] == UP:
                        new_sym = (push[0], cur)
                        symbols.setdefault(new_sym, None)
                        rest = tuple(psym(s, saved) for s in push[1:])
                        nxt = (q2, fresh)
                        out_push = (psym(*new_sym),) + rest
                    elif a is not EPS:
                        nxt = (q2, tab.close(saved, cur, int(a[1:])))
                        out_push = ()
                    elif q2 == FINAL:
                        if not tab.found(cur):
                            continue
                        nxt = (q2, cur)
                        out_push = ()
                    else:
                        nxt = (q2, cur)
                        out_push = (top,)
                    states.setdefault(nxt, None)
                    rows.setdefault((pstate(q, cur), a, top, pstate(*nxt), out_push), None)
        changed = before != (len(states), len(symbols), len(rows))

    state_names = list(dict.fromkeys(pstate(q, t) for q, t in states))
    if FINAL not in state_names:
        state_names.append(FINAL)
    return make_pda(
        list(rows),
        initial_state=pstate(*start),
        initial_stack_symbol=Z,
        final_states=[FINAL],
        states=state_names,
        alphabet=base.alphabet,
        stack_symbols=[Z] + [psym(*s) for s in symbols],
    )


def build_pattern_pda(pattern: MorphismWord, tree: PlanarRootedTree) -> PushdownAutomaton:
    """Automaton for the principal ideal: words strongly containing ``pattern``."""
    return build_ideal_pda([pattern], tree)
