"""Acceptance checks shared by ``treelang verify`` and the test suite.

Each check raises ``AssertionError`` with a short reason on failure and
returns a one-line summary on success.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from importlib import resources
from math import comb
from typing import Callable

from . import builders, contraction, dyck, flats, morphism, pda, series, trees

WORKED_SOURCE = "uuuudduuuudduudddddd"
WORKED_ENCODED = "u0u0u0u0d0d0u0u0u0u0d0d0u1u1d1d1d0d0d0d0"
SECTION_EXAMPLE = "u0u0d0u1u1d1d1d0"
PATTERN_EXAMPLE = "u0d0u1u1d1d1"
GOLDEN_EQUATION = "starnorm_equation.txt"


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    suites: tuple
    check: Callable[[], str]


def worked_contraction() -> contraction.Contraction:
    source = dyck.dyck_to_planar_tree(WORKED_SOURCE)
    edge = dyck.dyck_to_planar_tree("ud")
    vm = tuple(1 if v in (9, 10) else 0 for v in range(source.n_vertices))
    return contraction.Contraction(source, edge, vm)


def _catalan_counts() -> str:
    start = time.perf_counter()
    for n in range(13):
        got = len(dyck.enumerate_dyck(n))
        assert got == dyck.catalan(n) == comb(2 * n, n) // (n + 1), f"n={n}: {got}"
    assert dyck.catalan(12) == 208012
    elapsed = time.perf_counter() - start
    assert elapsed < 30, f"took {elapsed:.1f}s"
    return f"c_0..c_12 match, c_12 = 208012 ({elapsed:.1f}s)"


def _roundtrips() -> str:
    total = 0
    for n in range(9):
        for w in dyck.enumerate_dyck(n):
            t = dyck.dyck_to_planar_tree(w)
            assert trees.validate(t), w
            assert dyck.planar_tree_to_dyck(t) == w, w
            assert dyck.dyck_to_planar_tree(dyck.planar_tree_to_dyck(t)) == t, w
            total += 1
    return f"{total} words round-trip both ways"


def _catalan_pda() -> str:
    P = builders.build_catalan_pda()
    counts = pda.language_run_counts(P, 16)
    expected = {tuple(w) for n in range(9) for w in dyck.enumerate_dyck(n)}
    assert set(counts) == expected, "language differs from Dyck words"
    assert all(v == 1 for v in counts.values()), "some word has several runs"
    return f"{len(expected)} Dyck words up to length 16, one run each"


def _contraction_words(target, max_edges):
    out = []
    for n in range(max_edges + 1):
        for w in dyck.enumerate_dyck(n):
            src = dyck.dyck_to_planar_tree(w)
            out.extend(contraction.enumerate_planar_contractions(src, target))
    return out


def _tree_pda_language() -> str:
    start = time.perf_counter()
    total = 0
    for n in range(4):
        for tw in dyck.enumerate_dyck(n):
            T = dyck.dyck_to_planar_tree(tw)
            counts = pda.language_run_counts(builders.build_tree_pda(T), 10)
            brute = {morphism.encode(c).tokens for c in _contraction_words(T, 5)}
            assert set(counts) == brute, f"tree {tw or 'ε'}: language mismatch"
            assert all(v == 1 for v in counts.values()), f"tree {tw or 'ε'}: ambiguous"
            total += len(brute)
    return f"9 trees, {total} words, unambiguous ({time.perf_counter() - start:.1f}s)"


def _worked_encoding() -> str:
    c = worked_contraction()
    assert contraction.planar_violation(c.vertex_map, c.source, c.target) is None
    w = morphism.encode(c)
    assert w.compact() == WORKED_ENCODED, w.compact()
    edge = c.target
    P = builders.build_tree_pda(edge)
    assert len(pda.accepting_runs(P, w.tokens)) == 1, "worked word not uniquely accepted"
    small = morphism.MorphismWord.parse(SECTION_EXAMPLE)
    secs = dict(morphism.sections(small, edge))
    spelled = {k: "".join(small.tokens[i] for i in v) for k, v in secs.items()}
    assert spelled == {"initial": "u0u0d0u1", "e1,u": "u1d1d1", "e1,d": "d0"}, spelled
    return "20-letter word reproduced; sections u0u0d0u1 | u1d1d1 | d0"


def _length_law() -> str:
    total = 0
    for n in range(4):
        for tw in dyck.enumerate_dyck(n):
            T = dyck.dyck_to_planar_tree(tw)
            for c in _contraction_words(T, 5):
                assert len(morphism.encode(c)) == 2 * c.source.n_edges
                total += 1
    return f"length = 2 * source edges for {total} contractions"


def _pattern_pda() -> str:
    edge = dyck.dyck_to_planar_tree("ud")
    p = morphism.MorphismWord.parse(PATTERN_EXAMPLE)
    P = builders.build_pattern_pda(p, edge)
    counts = pda.language_run_counts(P, 12)
    brute = {w.tokens for w in morphism.language_LT(edge, 6) if morphism.strong_contains(w, p)}
    assert set(counts) == brute, "pattern language differs from brute-force filter"
    assert all(v == 1 for v in counts.values()), "pattern automaton is ambiguous"
    return f"{len(brute)} words up to length 12, one run each"


def _s2_closed_form() -> str:
    s = series.s_l_series(2, 10)
    for n in range(11):
        assert s[n] == series.binomial_path_formula(n), f"n={n}: {s[n]}"
    return "1 + sum n*C(n+2,2) t^n through n = 10"


def _star_norm_decomposition() -> str:
    order = 10
    brute = series.hilbert_dyck(series.CONFIGURATION, order)
    stars = series.hilbert_dyck(series.STAR_NORM, order)
    n_cn = series.CoefficientSeries(tuple(n * dyck.catalan(n) for n in range(order + 1)))
    assert brute == n_cn + stars, "edges + star-norm does not split"
    assert series.catalan_series(order).theta() == n_cn, "t d/dt Catalan mismatch"
    assert series.star_norm_series(order) == stars, "generating function disagrees"
    return "b_n = n c_n + a_n and n c_n = [t^n] t C'(t) for n <= 10"


def _catalan_closed_form() -> str:
    assert series.catalan_closed_form_check(12)
    eq = series.guess_algebraic(series.catalan_series(8), 1, 2, 3)
    assert eq is not None and eq.as_dict() == {(1, 2): 1, (0, 1): -1, (0, 0): 1}, str(eq)
    return f"closed form to order 12; guessed {eq}"


def _flat_bijection() -> str:
    seen = 0
    for n in range(7):
        for w in dyck.enumerate_dyck(n):
            T = dyck.dyck_to_planar_tree(w)
            g = flats.cone(T)
            assert flats.corank1_flat_count(g) == trees.subtree_count(T), w
            assert flats.rank1_flat_count(g) == 2 * T.n_edges + 1, w
            assert flats.kl1_formula(T) >= 0, w
            seen += 1
    assert flats.kl1_formula(dyck.dyck_to_planar_tree("ud")) == 0
    return f"{seen} planar trees (every tree with <= 6 edges)"


def _multiplicity() -> str:
    for n in range(11):
        mult = dyck.p_multiplicity(n)
        assert sum(mult.values()) == dyck.catalan(n), f"n={n}"
        if n >= 1:
            path = trees.canonical_unrooted(dyck.dyck_to_planar_tree("u" * n + "d" * n))
            assert mult[path] == n, f"path multiplicity at n={n}: {mult[path]}"
    return "sum p_T = c_n and p_path = n for n <= 10"


def golden_equation_text() -> str:
    return resources.files("treelang.data").joinpath(GOLDEN_EQUATION).read_text()


def star_norm_certificate() -> series.AlgebraicEquation | None:
    d_t, d_F, holdout = 6, 4, 5
    s = series.star_norm_series((d_t + 1) * (d_F + 1) + holdout - 1)
    return series.guess_algebraic(s, d_t, d_F, holdout)


def render_certificate(eq: series.AlgebraicEquation) -> str:
    return f"bounds: 6,4\nholdout: 5\nfound: {eq.d_t},{eq.d_F}\nequation: {eq}\n"


def _star_norm_certificate() -> str:
    start = time.perf_counter()
    eq = star_norm_certificate()
    elapsed = time.perf_counter() - start
    assert eq is not None, "no equation found within bounds (6,4)"
    assert elapsed < 60, f"took {elapsed:.1f}s"
    assert render_certificate(eq) == golden_equation_text(), "certificate differs from golden file"
    return f"{eq} ({elapsed:.2f}s)"


CRITERIA = [
    Criterion(1, "Catalan counts", ("oracles",), _catalan_counts),
    Criterion(2, "bijection round-trips", ("oracles",), _roundtrips),
    Criterion(3, "Catalan automaton", ("paper-examples",), _catalan_pda),
    Criterion(4, "tree automaton language", ("oracles",), _tree_pda_language),
    Criterion(5, "worked encoding example", ("paper-examples",), _worked_encoding),
    Criterion(6, "word length law", ("oracles",), _length_law),
    Criterion(7, "pattern automaton", ("paper-examples",), _pattern_pda),
    Criterion(8, "s_2 closed form", ("paper-examples",), _s2_closed_form),
    Criterion(9, "star-norm decomposition", ("oracles",), _star_norm_decomposition),
    Criterion(10, "Catalan closed form", ("paper-examples",), _catalan_closed_form),
    Criterion(11, "flat bijection", ("oracles",), _flat_bijection),
    Criterion(12, "multiplicity law", ("oracles",), _multiplicity),
    Criterion(13, "star-norm certificate", ("oracles",), _star_norm_certificate),
]


def select(suite: str = "all") -> list[Criterion]:
    if suite == "all":
        return list(CRITERIA)
    return [c for c in CRITERIA if suite in c.suites]


def run(suite: str = "all") -> list[tuple[Criterion, bool, str]]:
    out = []
    for crit in select(suite):
        try:
            out.append((crit, True, crit.check()))
        except AssertionError as exc:
            out.append((crit, False, str(exc) or "assertion failed"))
    return out
