"""Boundary decompositions and conjugate-parabolic intersections.

Every element splits as l * c * r with l in W_Gamma1, r in W_Gamma2 and a
center with no Gamma1 descent on the left and no Gamma2 descent on the
right; lengths add up. Conjugating a special subgroup and intersecting with
itself lands back in a conjugated special subgroup, computed here in closed
form and checked against brute force on a ball.
"""

from racg import (
    SimpleGraph,
    ball,
    conjugate_parabolic_intersection,
    format_word,
    lcr_decompose,
    parse_word,
    support,
)

g = SimpleGraph.from_text(
    """
vertices: a1 a2 b1 b2 b3
edge: a1 b1
edge: a1 b2
edge: a1 b3
edge: a2 b1
edge: a2 b2
edge: a2 b3
"""
)

x = parse_word(g, "a1 b3 a2 b1")
dec = lcr_decompose(x, {"a1", "b1"}, {"a2", "b1"})
print("x =", format_word(x))
print("left   =", format_word(dec.left))
print("center =", format_word(dec.center))
print("right  =", format_word(dec.right))
assert dec.recombined() == x

g1 = frozenset({"a1", "a2", "b1"})
res = conjugate_parabolic_intersection(parse_word(g, "b2 a1 b3"), g1)
print("\nW_g1 cap x W_g1 x^-1 = h W_core h^-1 with")
print("h    =", format_word(res.conjugator_h))
print("core =", sorted(res.core))
print("d    =", format_word(res.minimal_rep_d))

# brute-force confirmation on a small ball
h = res.conjugator_h
xx = parse_word(g, "b2 a1 b3")
for y in ball(g, 3):
    if support(y) <= g1:
        brute = support(xx.inverse() * y * xx) <= g1
        formula = support(h.inverse() * y * h) <= res.core
        assert brute == formula
print("membership predicates agree on ball(3)")
