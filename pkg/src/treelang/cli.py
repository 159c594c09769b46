"""Command-line interface.

Exit status: 0 on success, 1 when a verification or validation fails,
2 on malformed input or usage errors.  Failures print one line
``error: <reason>`` on stderr.
"""

from __future__ import annotations

import argparse
import os
import sys
from collections import Counter

from . import builders, contraction, dyck, morphism, pda, series, trees, verify

BUDGET_ENV = "TREELANG_MAX_EDGES"
DEFAULT_BUDGET = 13


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    pass


def _budget() -> int:
    raw = os.environ.get(BUDGET_ENV, str(DEFAULT_BUDGET))
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None


def _enforce_budget(n: int) -> None:
    if n > _budget():
        raise UsageError(f"enumeration of {n} edges exceeds budget {_budget()} (set {BUDGET_ENV})")


def _tree(word: str) -> trees.PlanarRootedTree:
    word = "" if word in ("ε", "-", "''") else word
    if "," in word or word.startswith("parent:"):
        t = trees.parse_parents(word)
        if not trees.validate(t):
            raise UsageError(f"not a depth-first parent sequence: {word!r}")
        return t
    try:
        return dyck.dyck_to_planar_tree(word)
    except dyck.NotDyckError as exc:
        raise UsageError(str(exc)) from None


def _mword(text: str) -> morphism.MorphismWord:
    try:
        return morphism.MorphismWord.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _tokenize(text: str, alphabet) -> tuple:
    """Split ``text`` into alphabet symbols (spaces optional, longest match first)."""
    if text.strip() in ("", "ε"):
        return ()
    symbols = sorted(map(str, alphabet), key=len, reverse=True)
    out = []
    for chunk in text.split():
        i = 0
        while i < len(chunk):
            sym = next((s for s in symbols if chunk.startswith(s, i)), None)
            if sym is None:
                raise UsageError(f"cannot read {chunk[i:]!r} with the automaton's alphabet")
            out.append(sym)
            i += len(sym)
    return tuple(out)


def _word_text(word) -> str:
    return " ".join(map(str, word)) if word else "ε"


# -- subcommands -------------------------------------------------------------

def cmd_enumerate(args) -> None:
    if args.what == "trees":
        n = args.edges
        _enforce_budget(n)
        words = dyck.enumerate_dyck(n)
        if args.cls == "planar":
            print("word,parent")
            for w in words:
                t = dyck.dyck_to_planar_tree(w)
                print(f"{w or 'ε'},{str(t)[len('parent: '):].replace(',', ' ')}")
            return
        canon = trees.canonical_rooted if args.cls == "rooted" else trees.canonical_unrooted
        counts: Counter = Counter()
        first: dict = {}
        for w in words:
            code = canon(dyck.dyck_to_planar_tree(w))
            counts[code] += 1
            first.setdefault(code, w)
        print("class,multiplicity,representative")
        for code in sorted(counts):
            print(f"{code},{counts[code]},{first[code] or 'ε'}")
        print(f"# {len(counts)} classes, {sum(counts.values())} words")
    else:
        if not (args.source and args.target):
            raise UsageError("enumerate contractions needs --source and --target")
        source, target = _tree(args.source), _tree(args.target)
        _enforce_budget(source.n_edges)
        for c in contraction.enumerate_planar_contractions(source, target):
            print(",".join(map(str, c.vertex_map)) + "  " + str(morphism.encode(c)))


def cmd_encode(args) -> None:
    source, target = _tree(args.source), _tree(args.target)
    try:
        vm = tuple(int(x) for x in args.map.split(","))
    except ValueError:
        raise UsageError(f"malformed vertex map {args.map!r}") from None
    bad = contraction.planar_violation(vm, source, target)
    if bad is not None:
        raise CheckFailed(f"not a planar contraction: {bad}")
    word = morphism.encode(contraction.Contraction(source, target, vm))
    print(word.compact() if args.compact else str(word))


def cmd_decode(args) -> None:
    target = _tree(args.target)
    try:
        c = morphism.decode(_mword(args.word), target)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"source: {dyck.planar_tree_to_dyck(c.source) or 'ε'}")
    print("map: " + ",".join(map(str, c.vertex_map)))
    bad = contraction.planar_violation(c.vertex_map, c.source, c.target)
    print("planar-contraction: " + ("yes" if bad is None else f"no ({bad})"))
    if bad is not None:
        raise CheckFailed(f"not a planar contraction: {bad}")


def _load(path: str) -> pda.PushdownAutomaton:
    try:
        with open(path, encoding="utf-8") as fh:
            return pda.from_text(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_pda(args) -> None:
    if args.action == "build":
        if args.catalan:
            P = builders.build_catalan_pda()
        else:
            if args.tree is None:
                raise UsageError("pda build needs --tree or --catalan")
            tree = _tree(args.tree)
            if args.pattern:
                try:
                    P = builders.build_ideal_pda([_mword(p) for p in args.pattern], tree)
                except ValueError as exc:
                    raise UsageError(str(exc)) from None
            else:
                P = builders.build_tree_pda(tree)
        text = pda.to_dot(P) if args.format == "dot" else pda.to_text(P)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return

    P = _load(args.input)
    if args.action == "run":
        word = _tokenize(args.word, P.alphabet)
        runs = pda.accepting_runs(P, word)
        if args.trace:
            for r, run in enumerate(runs, 1):
                print(f"run {r}:")
                for id_ in run:
                    print(f"  {id_}")
        print(f"accepted: {'yes' if runs else 'no'}")
        print(f"runs: {len(runs)}")
        if not runs:
            raise CheckFailed("word rejected")
    elif args.action == "lang":
        for w in pda.enumerate_language(P, args.max_len):
            print(_word_text(w))
    elif args.action == "check-unambiguous":
        counts = pda.language_run_counts(P, args.max_len)
        bad = sorted((w for w, k in counts.items() if k != 1), key=pda._word_key)
        print(f"words: {len(counts)}")
        print(f"ambiguous: {len(bad)}")
        if bad:
            raise CheckFailed(f"ambiguous word: {_word_text(bad[0])} ({counts[bad[0]]} runs)")


STATS = {
    "trivial": series.TRIVIAL,
    "edges": series.EDGES,
    "starnorm": series.STAR_NORM,
    "subtrees": series.SUBTREES,
    "confspace": series.CONFIGURATION,
}
FORMULAS = {
    "trivial": series.catalan_series,
    "starnorm": series.star_norm_series,
    "confspace": series.configuration_series,
}


def cmd_series(args) -> None:
    name, order, l = args.stat, args.order, args.leaf_bound
    if l is not None and l < 2:
        raise UsageError("--leaf-bound must be at least 2")
    if name == "kl":
        if l is None:
            raise UsageError("--stat kl needs --leaf-bound")
        stat = series.kl_statistic(l)
    elif l is not None:
        if name != "subtrees":
            raise UsageError("--leaf-bound applies to subtrees and kl only")
        stat = series.s_l(l)
    else:
        stat = STATS[name]
    if args.method == "formula" or (args.method == "auto" and name in FORMULAS and l is None):
        if name not in FORMULAS or l is not None:
            raise UsageError(f"no generating-function formula for {name}")
        s = FORMULAS[name](order)
    else:
        _enforce_budget(order)
        s = series.hilbert_dyck(stat, order)

    if args.csv:
        print("n,coefficient")
        for n, c in enumerate(s.coeffs):
            label = "0 (single vertex)" if n == 0 else str(n)
            print(f"{label},{c}")
    else:
        print(",".join(map(str, s.coeffs)))

    if args.guess:
        try:
            d_t, d_F = (int(x) for x in args.guess.split(","))
        except ValueError:
            raise UsageError(f"--guess expects dT,dF, got {args.guess!r}") from None
        try:
            eq = series.guess_algebraic(s, d_t, d_F, args.holdout)
        except series.TruncationError as exc:
            raise UsageError(str(exc)) from None
        print("equation: " + (str(eq) if eq is not None else "none found"))


def cmd_verify(args) -> None:
    results = verify.run(args.suite)
    failed = 0
    for crit, ok, detail in results:
        print(f"[{'PASS' if ok else 'FAIL'}] {crit.number:2d} {crit.title}: {detail}")
        failed += not ok
    print(f"{len(results) - failed}/{len(results)} criteria passed")
    if failed:
        raise CheckFailed(f"{failed} criteria failed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="treelang", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list trees or contractions")
    p.add_argument("what", choices=["trees", "contractions"])
    p.add_argument("--edges", type=int, default=3)
    p.add_argument("--class", dest="cls", choices=["planar", "rooted", "unrooted"], default="planar")
    p.add_argument("--source")
    p.add_argument("--target")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("encode", help="morphism word of a planar contraction")
    p.add_argument("--source", required=True, help="Dyck word of the bigger tree")
    p.add_argument("--target", required=True, help="Dyck word of the target tree")
    p.add_argument("--map", required=True, help="comma-separated images of source vertices")
    p.add_argument("--compact", action="store_true")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="source tree and vertex map of a morphism word")
    p.add_argument("--target", required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("pda", help="build, run and inspect automata")
    p.add_argument("action", choices=["build", "run", "lang", "check-unambiguous"])
    p.add_argument("--tree")
    p.add_argument("--catalan", action="store_true")
    p.add_argument("--pattern", action="append")
    p.add_argument("--format", choices=["text", "dot"], default="text")
    p.add_argument("--out")
    p.add_argument("--in", dest="input")
    p.add_argument("--word", default="")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--max-len", type=int, default=8)
    p.set_defaults(func=cmd_pda)

    p = sub.add_parser("series", help="coefficients of a Hilbert-Dyck series")
    p.add_argument("--stat", choices=sorted(STATS) + ["kl"], default="trivial")
    p.add_argument("--leaf-bound", type=int)
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--method", choices=["auto", "enumerate", "formula"], default="auto")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--guess")
    p.add_argument("--holdout", type=int, default=5)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--suite", choices=["all", "paper-examples", "oracles"], default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "pda" and args.action != "build" and not args.input:
        parser.error(f"pda {args.action} needs --in")
    try:
        args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CheckFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except pda.PDAError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
