"""Exact rational growth series from the clique polynomial.

The reciprocal growth series of a right-angled Coxeter group is the clique
polynomial evaluated at -t/(1+t); clearing denominators gives an integer
rational function whose Taylor coefficients count elements per length.  BFS
sphere counts are the ground truth the series is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .graph import L, L_PLUS, SimpleGraph, has_induced, is_clique


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients in ascending degree, normalized."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = list(self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(int(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(self[k] + other[k] for k in range(n)))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial(tuple(c * a for a in self.coefficients))

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coefficients)})"


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    num = num[:]
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    while len(num) >= len(den) and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) < len(den):
            break
        c = num[-1] / den[-1]
        k = len(num) - len(den)
        q[k] = c
        for i, d in enumerate(den):
            num[k + i] -= c * d
        num.pop()
    while num and num[-1] == 0:
        num.pop()
    return q, num


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return a


def _content(coeffs: Sequence[int]) -> int:
    from math import gcd

    g = 0
    for c in coeffs:
        g = gcd(g, abs(c))
    return g or 1


@dataclass(frozen=True)
class RationalSeries:
    """numerator/denominator in lowest terms, denominator(0) > 0."""

    numerator: IntPolynomial
    denominator: IntPolynomial

    def __post_init__(self):
        num, den = self.numerator, self.denominator
        if den.is_zero() or den[0] == 0:
            raise ValueError("denominator must be invertible at 0")
        nf = [Fraction(c) for c in num.coefficients]
        df = [Fraction(c) for c in den.coefficients]
        if nf:
            g = _poly_gcd(nf, df)
            if len(g) > 1:
                nf, _ = _poly_divmod(nf, g)
                df, _ = _poly_divmod(df, g)
        # clear denominators, strip integer content, make den(0) positive
        from math import lcm

        mult = 1
        for c in nf + df:
            mult = lcm(mult, c.denominator)
        ni = [int(c * mult) for c in nf]
        di = [int(c * mult) for c in df]
        g = _content(ni + di)
        ni = [c // g for c in ni]
        di = [c // g for c in di]
        if di[0] < 0:
            ni = [-c for c in ni]
            di = [-c for c in di]
        object.__setattr__(self, "numerator", IntPolynomial(tuple(ni)))
        object.__setattr__(self, "denominator", IntPolynomial(tuple(di)))

    def __repr__(self) -> str:
        return (
            f"RationalSeries({list(self.numerator.coefficients)}, "
            f"{list(self.denominator.coefficients)})"
        )


def clique_polynomial(g: SimpleGraph) -> IntPolynomial:
    """Coefficient of x^k counts the k-cliques (1 for the empty clique)."""
    counts = [1]
    for k in range(1, len(g.vertices) + 1):
        n = sum(1 for s in combinations(g.vertices, k) if is_clique(g, s))
        if n == 0:
            break
        counts.append(n)
    return IntPolynomial(tuple(counts))


def growth_series(g: SimpleGraph) -> RationalSeries:
    """Length generating series of the group, as a reduced rational function.

    Substituting -t/(1+t) into the clique polynomial and clearing (1+t)
    powers yields numerator (1+t)^D over an alternating-sum denominator,
    where D is the largest clique size.
    """
    c = clique_polynomial(g)
    d = c.degree
    one_plus_t = IntPolynomial((1, 1))
    minus_t = IntPolynomial((0, -1))
    # precompute (1+t)^j
    powers = [IntPolynomial((1,))]
    for _ in range(d):
        powers.append(powers[-1] * one_plus_t)
    den = IntPolynomial(())
    tk = IntPolynomial((1,))
    for k in range(d + 1):
        den = den + (tk * powers[d - k]).scale(c[k])
        tk = tk * minus_t
    return RationalSeries(powers[d], den)


def series_coefficients(s: RationalSeries, n: int) -> list[int]:
    """First n+1 Taylor coefficients by the denominator's linear recurrence."""
    num, den = s.numerator, s.denominator
    d0 = Fraction(den[0])
    coeffs: list[Fraction] = []
    for k in range(n + 1):
        acc = Fraction(num[k])
        for j in range(1, min(k, den.degree) + 1):
            acc -= den[j] * coeffs[k - j]
        coeffs.append(acc / d0)
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ValueError(f"non-integer series coefficient {c}")
        out.append(int(c))
    return out


class GrowthDisagreementError(RuntimeError):
    """Numeric growth estimate contradicts the graph criterion: a bug."""


def growth_type(g: SimpleGraph, n: int = 30, threshold: Fraction = Fraction(21, 20)) -> dict:
    """Classify growth as polynomial or exponential, with evidence.

    The graph criterion (an induced 3-anticlique or near-anticlique forces
    free subgroups, hence exponential growth) is authoritative; the numeric
    cross-check compares the tail coefficient ratio c_n/c_{n-1} against the
    threshold and any disagreement is raised as a hard error.
    """
    if n < 20:
        raise ValueError("probe depth must be at least 20")
    series = growth_series(g)
    coeffs = series_coefficients(series, n)
    graph_exponential = has_induced(g, L) or has_induced(g, L_PLUS)
    if coeffs[n] == 0:
        numeric_exponential = False
        ratio = Fraction(0)
    else:
        ratio = Fraction(coeffs[n], coeffs[n - 1]) if coeffs[n - 1] else Fraction(coeffs[n])
        numeric_exponential = ratio > threshold
    if numeric_exponential != graph_exponential:
        raise GrowthDisagreementError(
            f"numeric ratio {ratio} vs graph criterion "
            f"{'exponential' if graph_exponential else 'polynomial'}"
        )
    return {
        "type": "exponential" if graph_exponential else "polynomial",
        "c_n": coeffs[n],
        "ratio": ratio,
        "probe_depth": n,
        "graph_criterion_exponential": graph_exponential,
    }
