"""Exact truncated power series of tree statistics summed over Dyck words.

Coefficient ``n`` always counts trees with ``n`` edges, starting at the
single vertex (``n = 0``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, gcd
from typing import Callable, Sequence

from . import trees
from .dyck import catalan, dyck_to_planar_tree, enumerate_dyck
from .linalg import nullspace
from .trees import PlanarRootedTree


class TruncationError(ValueError):
    pass


@dataclass(frozen=True)
class CoefficientSeries:
    coeffs: tuple

    @classmethod
    def of(cls, values: Sequence) -> "CoefficientSeries":
        return cls(tuple(values))

    @classmethod
    def zero(cls, order: int) -> "CoefficientSeries":
        return cls((0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "CoefficientSeries":
        return cls((1,) + (0,) * order)

    @classmethod
    def t(cls, order: int) -> "CoefficientSeries":
        return cls(tuple(1 if i == 1 else 0 for i in range(order + 1)))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def _check(self, other: "CoefficientSeries") -> None:
        if len(other.coeffs) != len(self.coeffs):
            raise TruncationError(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        if isinstance(other, int):
            other = CoefficientSeries.one(self.order).scale(other)
        self._check(other)
        return CoefficientSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other if isinstance(other, CoefficientSeries) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        n = len(self.coeffs)
        a, b = self.coeffs, other.coeffs
        return CoefficientSeries(tuple(sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)))

    __rmul__ = __mul__

    def scale(self, c) -> "CoefficientSeries":
        return CoefficientSeries(tuple(c * x for x in self.coeffs))

    def __pow__(self, k: int) -> "CoefficientSeries":
        out = CoefficientSeries.one(self.order)
        for _ in range(k):
            out = out * self
        return out

    def reciprocal(self) -> "CoefficientSeries":
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("constant term is zero")
        lead = Fraction(1) / a[0]
        inv = [lead]
        for k in range(1, len(a)):
            inv.append(-lead * sum(a[i] * inv[k - i] for i in range(1, k + 1)))
        return CoefficientSeries(tuple(_simplify(x) for x in inv))

    def derivative(self) -> "CoefficientSeries":
        """d/dt; the result is known to one order less."""
        return CoefficientSeries(tuple(k * self.coeffs[k] for k in range(1, len(self.coeffs))))

    def theta(self) -> "CoefficientSeries":
        """t * d/dt at the same order."""
        return CoefficientSeries(tuple(k * c for k, c in enumerate(self.coeffs)))

    def shift_down(self) -> "CoefficientSeries":
        """(F - F(0)) / t, known to one order less."""
        return CoefficientSeries(self.coeffs[1:])

    def substitute_scalar(self, c) -> "CoefficientSeries":
        """F(c*t)."""
        return CoefficientSeries(tuple(x * c ** k for k, x in enumerate(self.coeffs)))

    def truncate(self, order: int) -> "CoefficientSeries":
        if order > self.order:
            raise TruncationError(f"cannot extend order {self.order} to {order}")
        return CoefficientSeries(self.coeffs[: order + 1])

    def to_list(self) -> list:
        return list(self.coeffs)


def _simplify(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


# -- statistics --------------------------------------------------------------

@dataclass(frozen=True)
class TreeStatistic:
    name: str
    evaluate: Callable[[PlanarRootedTree], int]
    dependence: str = "unrooted"  # planar | rooted | unrooted

    def __call__(self, tree: PlanarRootedTree) -> int:
        return self.evaluate(tree)


TRIVIAL = TreeStatistic("trivial", lambda t: 1)
EDGES = TreeStatistic("edges", lambda t: t.n_edges)
STAR_NORM = TreeStatistic("starnorm", trees.star_norm)
SUBTREES = TreeStatistic("subtrees", trees.subtree_count)
CONFIGURATION = TreeStatistic("confspace", lambda t: t.n_edges + trees.star_norm(t))


def s_l(l: int) -> TreeStatistic:
    """Subtree count when the tree has at most ``l`` leaves, else zero."""
    if l < 2:
        raise ValueError("leaf bound must be at least 2")

    def f(t):
        return trees.subtree_count(t) if trees.leaf_count(t) <= l else 0

    return TreeStatistic(f"s_{l}", f)


def kl_statistic(l: int) -> TreeStatistic:
    def f(t):
        if trees.leaf_count(t) > l:
            return 0
        return trees.subtree_count(t) - (2 * t.n_edges + 1)

    return TreeStatistic(f"kl_{l}", f)


def hilbert_dyck(stat: Callable[[PlanarRootedTree], int], order: int) -> CoefficientSeries:
    """Coefficient n = sum of ``stat`` over the planar trees of all Dyck words with n edges."""
    return CoefficientSeries(tuple(
        sum(stat(dyck_to_planar_tree(w)) for w in enumerate_dyck(n))
        for n in range(order + 1)
    ))


def catalan_series(order: int) -> CoefficientSeries:
    return CoefficientSeries(tuple(catalan(n) for n in range(order + 1)))


def star_norm_series(order: int) -> CoefficientSeries:
    """Sum of star-norms over all Dyck words, from a pointed-tree decomposition.

    With ``C`` the Catalan series and ``x = tC``: a root with ``r`` children
    contributes ``C(r,2) x^r``, and a non-root vertex with ``j`` children sits
    at the end of a spine of ``h >= 1`` edges, each with a forest on either
    side, contributing ``(tC^2)^h * C(j+1,2) x^j``.  Summing gives
    ``x^2/(1-x)^3 + tC^2/(1-tC^2) * x/(1-x)^3``.
    """
    C = catalan_series(order)
    t = CoefficientSeries.t(order)
    x = t * C
    inv_cube = (1 - x).reciprocal() ** 3
    spine = t * C * C
    return x * x * inv_cube + spine * (1 - spine).reciprocal() * x * inv_cube


def configuration_series(order: int) -> CoefficientSeries:
    """n * c_n + a_n: edge count plus star-norm, summed over Dyck words."""
    return catalan_series(order).theta() + star_norm_series(order)


def s_l_series(l: int, order: int) -> CoefficientSeries:
    return hilbert_dyck(s_l(l), order)


def kl_module_series(l: int, order: int) -> CoefficientSeries:
    return hilbert_dyck(kl_statistic(l), order)


def sqrt_one_minus_4t(order: int) -> CoefficientSeries:
    """Binomial series of sqrt(1 - 4t) with exact rational coefficients."""
    coeffs = []
    binom = Fraction(1)  # binomial(1/2, k)
    for k in range(order + 1):
        coeffs.append(_simplify(binom * (-4) ** k))
        binom = binom * (Fraction(1, 2) - k) / (k + 1)
    return CoefficientSeries(tuple(coeffs))


def catalan_closed_form(order: int) -> CoefficientSeries:
    """(1 - sqrt(1 - 4t)) / (2t) expanded to the given order."""
    numerator = 1 - sqrt_one_minus_4t(order + 1)
    return CoefficientSeries(tuple(_simplify(Fraction(c) / 2) for c in numerator.shift_down().coeffs))


def catalan_closed_form_check(order: int) -> bool:
    return catalan_closed_form(order).coeffs == hilbert_dyck(TRIVIAL, order).coeffs


# -- algebraic equation guessing --------------------------------------------

@dataclass(frozen=True)
class AlgebraicEquation:
    """P(t, F) = sum of coeffs[(i, j)] * t^i * F^j, integer coefficients."""
    coeffs: tuple  # ((i, j, c), ...) in canonical order, c != 0
    d_t: int
    d_F: int

    def as_dict(self) -> dict:
        return {(i, j): c for i, j, c in self.coeffs}

    def residual(self, series: CoefficientSeries) -> CoefficientSeries:
        n = len(series)
        powers = _powers(series.coeffs, self.d_F, n)
        out = [0] * n
        for i, j, c in self.coeffs:
            for m in range(i, n):
                out[m] += c * powers[j][m - i]
        return CoefficientSeries(tuple(out))

    def __str__(self) -> str:
        parts = []
        for i, j, c in self.coeffs:
            mono = "*".join(filter(None, [
                "" if i == 0 else ("t" if i == 1 else f"t^{i}"),
                "" if j == 0 else ("F" if j == 1 else f"F^{j}"),
            ]))
            mag = abs(c)
            body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text + " = 0"


def _monomials(d_t: int, d_F: int) -> list[tuple[int, int]]:
    """Canonical order: F-degree descending, then t-degree descending."""
    return [(i, j) for j in range(d_F, -1, -1) for i in range(d_t, -1, -1)]


def _powers(coeffs: Sequence, d_F: int, n: int) -> list[list]:
    one = [1] + [0] * (n - 1)
    out = [one]
    for _ in range(d_F):
        prev = out[-1]
        out.append([sum(prev[i] * coeffs[k - i] for i in range(k + 1)) for k in range(n)])
    return out


def _primitive(vec: Sequence[Fraction]) -> tuple[int, ...]:
    den = 1
    for x in vec:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints] if g else ints
    lead = next((x for x in ints if x), 0)
    return tuple(-x for x in ints) if lead < 0 else tuple(ints)


def fit_equation(series: CoefficientSeries, d_t: int, d_F: int,
                 holdout: int) -> AlgebraicEquation | None:
    """Equation with exactly these degree bounds, validated on held-out terms, or None."""
    n = len(series)
    n_fit = n - holdout
    monos = _monomials(d_t, d_F)
    if n_fit < len(monos):
        raise TruncationError(f"need at least {len(monos) + holdout} coefficients, have {n}")
    powers = _powers(series.coeffs, d_F, n)
    rows = []
    for m in range(n_fit):
        rows.append([powers[j][m - i] if m >= i else 0 for i, j in monos])
    candidates = []
    for vec in nullspace(rows, len(monos)):
        ints = _primitive(vec)
        eq = AlgebraicEquation(
            tuple((i, j, c) for (i, j), c in zip(monos, ints) if c), d_t, d_F)
        if not any(eq.residual(series).coeffs):
            candidates.append((ints, eq))
    if not candidates:
        return None
    return min(candidates, key=lambda pair: pair[0])[1]


def guess_algebraic(series: CoefficientSeries, d_t: int, d_F: int,
                    holdout: int) -> AlgebraicEquation | None:
    """First validated equation in increasing total degree with bounds up to (d_t, d_F)."""
    need = (d_t + 1) * (d_F + 1) + holdout
    if len(series) < need:
        raise TruncationError(f"need at least {need} coefficients, have {len(series)}")
    pairs = sorted(product(range(d_t + 1), range(1, d_F + 1)),
                   key=lambda p: (p[0] + p[1], p[1], p[0]))
    for a, b in pairs:
        eq = fit_equation(series, a, b, holdout)
        if eq is not None:
            return eq
    return None


def binomial_path_formula(n: int) -> int:
    """Closed form of the s_2 coefficient: 1 at n = 0, else n * C(n+2, 2)."""
    return 1 if n == 0 else n * comb(n + 2, 2)
