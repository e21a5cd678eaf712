from fractions import Fraction

import pytest

from racg.growth import (
    GrowthDisagreementError,
    IntPolynomial,
    RationalSeries,
    clique_polynomial,
    growth_series,
    growth_type,
    series_coefficients,
)
from racg.words import sphere_sizes
from racg.corpus import clique, dinf, named_corpus

CORPUS = named_corpus()


def test_polynomial_normalization():
    assert IntPolynomial((1, 2, 0, 0)).coefficients == (1, 2)
    assert IntPolynomial(()).is_zero()
    p = IntPolynomial((1, 1))
    assert (p * p).coefficients == (1, 2, 1)


def test_clique_polynomial_k23():
    # 5 vertices, 6 edges, no triangles
    assert clique_polynomial(CORPUS["k23"]).coefficients == (1, 5, 6)


def test_clique_polynomial_triangle():
    assert clique_polynomial(clique(3)).coefficients == (1, 3, 3, 1)


def test_dinf_series_reduces():
    s = growth_series(dinf())
    assert s.numerator.coefficients == (1, 1)
    assert s.denominator.coefficients == (1, -1)


def test_k23_series():
    s = growth_series(CORPUS["k23"])
    assert s.numerator.coefficients == (1, 2, 1)
    assert s.denominator.coefficients == (1, -3, 2)
    assert series_coefficients(s, 3) == [1, 5, 14, 32]


def test_rational_series_reduction_and_sign():
    # common factor (1+t) cancels, content 2 strips out
    s = RationalSeries(IntPolynomial((2, 4, 2)), IntPolynomial((2, 0, -2)))
    assert s.numerator.coefficients == (1, 1)
    assert s.denominator.coefficients == (1, -1)
    # constant sign of the denominator at 0 is normalized to positive
    s = RationalSeries(IntPolynomial((1, 1)), IntPolynomial((-1, 1)))
    assert s.denominator.coefficients[0] > 0
    with pytest.raises(ValueError):
        RationalSeries(IntPolynomial((1,)), IntPolynomial((0, 1)))


def test_series_matches_bfs_small():
    for name in ("dinf", "p3", "c4", "c5", "l", "k23_plus", "k4"):
        g = CORPUS[name]
        coeffs = series_coefficients(growth_series(g), 6)
        assert coeffs == sphere_sizes(g, 6)


def test_finite_group_coefficients_vanish():
    coeffs = series_coefficients(growth_series(clique(3)), 10)
    assert sum(coeffs) == 8  # |Z2^3|
    assert coeffs[4:] == [0] * 7


def test_growth_type():
    assert growth_type(CORPUS["c4"])["type"] == "polynomial"
    assert growth_type(CORPUS["l"])["type"] == "exponential"
    assert growth_type(CORPUS["k23"])["type"] == "exponential"
    assert growth_type(clique(4))["type"] == "polynomial"
    with pytest.raises(ValueError):
        growth_type(CORPUS["c4"], n=5)
