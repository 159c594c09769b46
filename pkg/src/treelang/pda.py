"""A nondeterministic push-down automaton with epsilon moves.

Acceptance is by final state; whatever is left on the stack is ignored.
A transition keyed on input ``EPS`` consumes nothing, and one keyed on
stack top ``EPS`` pops nothing before pushing.  Stacks are tuples with
the top on the left.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

EPS = None
EPS_TEXT = "ε"

# run searches give up after this many moves
MOVE_BUDGET = 2_000_000


class PDAError(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class PushdownAutomaton:
    states: tuple
    alphabet: tuple
    stack_symbols: tuple
    transitions: dict = field(repr=False)  # (state, input|EPS, top|EPS) -> ((state, push), ...)
    initial_state: object
    initial_stack_symbol: object
    final_states: frozenset

    def __post_init__(self):
        problems = check(self)
        if problems:
            raise ValueError("invalid automaton: " + "; ".join(problems))

    @property
    def n_transitions(self) -> int:
        return sum(len(v) for v in self.transitions.values())

    def rows(self) -> list[tuple]:
        """Flat ``(state, input, top, new_state, push)`` rows in insertion order."""
        return [(q, a, x, q2, push)
                for (q, a, x), outs in self.transitions.items()
                for q2, push in outs]


def make_pda(rows: Iterable[tuple], *, initial_state, initial_stack_symbol, final_states,
             states=None, alphabet=None, stack_symbols=None) -> PushdownAutomaton:
    """Build an automaton from ``(state, input, top, new_state, push)`` rows.

    Undeclared components are collected from the rows in first-seen order.
    Duplicate rows are kept once.
    """
    table: dict = {}
    seen_q, seen_a, seen_g = [initial_state], [], [initial_stack_symbol]

    def note(lst, x):
        if x is not EPS and x not in lst:
            lst.append(x)

    for q, a, x, q2, push in rows:
        push = tuple(push)
        outs = table.setdefault((q, a, x), [])
        if (q2, push) not in outs:
            outs.append((q2, push))
        note(seen_q, q)
        note(seen_q, q2)
        note(seen_a, a)
        note(seen_g, x)
        for s in push:
            note(seen_g, s)
    for f in final_states:
        note(seen_q, f)
    return PushdownAutomaton(
        states=tuple(states) if states is not None else tuple(seen_q),
        alphabet=tuple(alphabet) if alphabet is not None else tuple(seen_a),
        stack_symbols=tuple(stack_symbols) if stack_symbols is not None else tuple(seen_g),
        transitions={k: tuple(v) for k, v in table.items()},
        initial_state=initial_state,
        initial_stack_symbol=initial_stack_symbol,
        final_states=frozenset(final_states),
    )


def check(pda: PushdownAutomaton) -> list[str]:
    problems = []
    Q, S, G = set(pda.states), set(pda.alphabet), set(pda.stack_symbols)
    if pda.initial_state not in Q:
        problems.append("initial state undeclared")
    if pda.initial_stack_symbol not in G:
        problems.append("initial stack symbol undeclared")
    if not set(pda.final_states) <= Q:
        problems.append("final states not a subset of states")
    for (q, a, x), outs in pda.transitions.items():
        if q not in Q or (a is not EPS and a not in S) or (x is not EPS and x not in G):
            problems.append(f"transition key {(q, a, x)!r} uses undeclared names")
        for q2, push in outs:
            if q2 not in Q or not set(push) <= G:
                problems.append(f"transition target {(q2, push)!r} uses undeclared names")
    return problems


@dataclass(frozen=True)
class InstantaneousDescription:
    state: object
    remaining: tuple
    stack: tuple

    def __str__(self) -> str:
        word = " ".join(map(str, self.remaining)) or EPS_TEXT
        stack = " ".join(map(str, self.stack)) or EPS_TEXT
        return f"({self.state}, {word}, {stack})"


ID = InstantaneousDescription


def initial_id(pda: PushdownAutomaton, word: Sequence) -> ID:
    return ID(pda.initial_state, tuple(word), (pda.initial_stack_symbol,))


def _moves(pda, state, nxt, stack):
    """Yield ``(consumes, new_state, new_stack)`` in a fixed order."""
    delta = pda.transitions
    top = stack[0] if stack else EPS
    inputs = (nxt, EPS) if nxt is not EPS else (EPS,)
    for a in inputs:
        if top is not EPS:
            for q2, push in delta.get((state, a, top), ()):
                yield a is not EPS, q2, push + stack[1:]
        for q2, push in delta.get((state, a, EPS), ()):
            yield a is not EPS, q2, push + stack


def step(pda: PushdownAutomaton, id_: ID) -> list[ID]:
    """All one-move successors of a configuration (empty when stuck)."""
    nxt = id_.remaining[0] if id_.remaining else EPS
    out = []
    for consumes, q2, stack in _moves(pda, id_.state, nxt, id_.stack):
        rest = id_.remaining[1:] if consumes else id_.remaining
        succ = ID(q2, rest, stack)
        if succ not in out:
            out.append(succ)
    return out


def _stack_cap(pda: PushdownAutomaton, length: int) -> int:
    return length + 2 * len(pda.states) + 2


def accepting_runs(pda: PushdownAutomaton, word: Sequence) -> list[list[ID]]:
    """Every move sequence that reads all of ``word`` and stops in a final state."""
    word = tuple(word)
    cap = _stack_cap(pda, len(word))
    runs: list[list[ID]] = []
    path: list[ID] = []
    budget = [MOVE_BUDGET]

    def search(state, pos, stack, eps_chain: frozenset):
        budget[0] -= 1
        if budget[0] < 0:
            raise PDAError("move budget exhausted: ε-cycle suspected")
        if len(stack) > cap:
            raise PDAError("stack grew past its cap: ε-cycle suspected")
        path.append(ID(state, word[pos:], stack))
        if pos == len(word) and state in pda.final_states:
            runs.append(list(path))
        nxt = word[pos] if pos < len(word) else EPS
        for consumes, q2, st2 in _moves(pda, state, nxt, stack):
            if consumes:
                search(q2, pos + 1, st2, frozenset())
            else:
                key = (q2, st2)
                if key in eps_chain:
                    continue
                search(q2, pos, st2, eps_chain | {(state, stack), key})
        path.pop()

    search(pda.initial_state, 0, (pda.initial_stack_symbol,), frozenset())
    return runs


def accepts(pda: PushdownAutomaton, word: Sequence) -> bool:
    return bool(accepting_runs(pda, word))


def language_run_counts(pda: PushdownAutomaton, max_len: int) -> Counter:
    """Accepted words of length <= max_len mapped to their number of accepting runs."""
    cap = _stack_cap(pda, max_len)
    counts: Counter = Counter()
    word: list = []
    budget = [MOVE_BUDGET * 10]
    letters = sorted({a for (_, a, _) in pda.transitions if a is not EPS}, key=str)

    def search(state, stack, eps_chain: frozenset):
        budget[0] -= 1
        if budget[0] < 0:
            raise PDAError("move budget exhausted: ε-cycle suspected")
        if len(stack) > cap:
            raise PDAError("stack grew past its cap: ε-cycle suspected")
        if state in pda.final_states:
            counts[tuple(word)] += 1
        top = stack[0] if stack else EPS
        for a in ([EPS] + letters if len(word) < max_len else [EPS]):
            for key_top in ((top, EPS) if top is not EPS else (EPS,)):
                for q2, push in pda.transitions.get((state, a, key_top), ()):
                    st2 = push + (stack[1:] if key_top is not EPS else stack)
                    if a is EPS:
                        if (q2, st2) in eps_chain:
                            continue
                        search(q2, st2, eps_chain | {(state, stack), (q2, st2)})
                    else:
                        word.append(a)
                        search(q2, st2, frozenset())
                        word.pop()

    search(pda.initial_state, (pda.initial_stack_symbol,), frozenset())
    return counts


def _word_key(w):
    return (len(w), tuple(map(str, w)))


def enumerate_language(pda: PushdownAutomaton, max_len: int) -> list[tuple]:
    """Accepted words of length <= max_len, shortest first then lexicographic."""
    return sorted(language_run_counts(pda, max_len), key=_word_key)


def is_unambiguous_upto(pda: PushdownAutomaton, max_len: int) -> bool:
    return all(n == 1 for n in language_run_counts(pda, max_len).values())


def replay(pda: PushdownAutomaton, run: Sequence[ID]) -> bool:
    """True iff each entry of ``run`` is a one-move successor of the previous one."""
    return all(b in step(pda, a) for a, b in zip(run, run[1:]))


# -- text format -----------------------------------------------------------

def _sym(x) -> str:
    return EPS_TEXT if x is EPS else str(x)


def _push_text(push: tuple) -> str:
    return " ".join(map(str, push)) if push else EPS_TEXT


def to_text(pda: PushdownAutomaton) -> str:
    lines = [
        "states: " + ", ".join(map(str, pda.states)),
        "alphabet: " + ", ".join(map(str, pda.alphabet)),
        "stack: " + ", ".join(map(str, pda.stack_symbols)),
        f"initial: {pda.initial_state}",
        f"start-symbol: {pda.initial_stack_symbol}",
        "final: " + ", ".join(str(q) for q in pda.states if q in pda.final_states),
        "transitions:",
    ]
    for q, a, x, q2, push in pda.rows():
        lines.append(f"{q}, {_sym(a)}, {_sym(x)} -> {q2}, {_push_text(push)}")
    return "\n".join(lines) + "\n"


def _items(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def from_text(text: str) -> PushdownAutomaton:
    header: dict[str, str] = {}
    rows = []
    in_rows = False
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if in_rows:
            try:
                lhs, rhs = line.split("->")
                q, a, x = (t.strip() for t in lhs.split(","))
                q2, push = (t.strip() for t in rhs.split(",", 1))
            except ValueError:
                raise ValueError(f"malformed transition row: {raw!r}") from None
            a = EPS if a in (EPS_TEXT, "eps") else a
            x = EPS if x in (EPS_TEXT, "eps") else x
            push = () if push in (EPS_TEXT, "eps", "") else tuple(push.split())
            rows.append((q, a, x, q2, push))
        elif line == "transitions:":
            in_rows = True
        else:
            key, _, val = line.partition(":")
            header[key.strip()] = val.strip()
    missing = {"states", "alphabet", "stack", "initial", "start-symbol", "final"} - header.keys()
    if missing:
        raise ValueError("missing header fields: " + ", ".join(sorted(missing)))
    return make_pda(
        rows,
        initial_state=header["initial"],
        initial_stack_symbol=header["start-symbol"],
        final_states=_items(header["final"]),
        states=_items(header["states"]),
        alphabet=_items(header["alphabet"]),
        stack_symbols=_items(header["stack"]),
    )


def to_dot(pda: PushdownAutomaton, name: str = "pda") -> str:
    out = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=point];']
    for q in pda.states:
        shape = "doublecircle" if q in pda.final_states else "circle"
        out.append(f'  "{q}" [shape={shape}];')
    out.append(f'  __start -> "{pda.initial_state}";')
    for q, a, x, q2, push in pda.rows():
        label = f"{_sym(a)}, {_sym(x)} / {_push_text(push)}"
        out.append(f'  "{q}" -> "{q2}" [label="{label}"];')
    out.append("}")
    return "\n".join(out) + "\n"
