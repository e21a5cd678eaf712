"""Exact growth series from the clique polynomial, cross-checked by BFS."""

from racg import SimpleGraph, clique_polynomial, growth_series, growth_type, series_coefficients, sphere_sizes

k23 = SimpleGraph(
    ["a1", "a2", "b1", "b2", "b3"],
    [(a, b) for a in ("a1", "a2") for b in ("b1", "b2", "b3")],
)

c = clique_polynomial(k23)
print("clique polynomial:", list(c.coefficients))
s = growth_series(k23)
print("growth series:", list(s.numerator.coefficients), "/", list(s.denominator.coefficients))
coeffs = series_coefficients(s, 10)
print("coefficients:", coeffs)
assert coeffs == sphere_sizes(k23, 10)
print("matches BFS sphere sizes up to length 10")
print("growth type:", growth_type(k23)["type"])

dinf = SimpleGraph(["u", "v"], [])
s = growth_series(dinf)
print("\nD-infinity series:", list(s.numerator.coefficients), "/", list(s.denominator.coefficients))
print("growth type:", growth_type(dinf)["type"])
