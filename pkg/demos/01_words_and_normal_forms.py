"""Words, normal forms and balls in a right-angled Coxeter group.

The group of the 4-cycle c1-c2-c3-c4 is D-infinity x D-infinity: opposite
vertices generate the two infinite dihedral factors and adjacent vertices
commute.
"""

from racg import SimpleGraph, ball, format_word, normal_form, parse_word, sphere_sizes

g = SimpleGraph.from_text(
    """
vertices: c1 c2 c3 c4
edge: c1 c2
edge: c2 c3
edge: c3 c4
edge: c4 c1
"""
)

print("generators square to e:", format_word(parse_word(g, "c1 c1")))

# adjacent letters commute, opposite ones do not
x = normal_form(g, ("c2", "c1"))
print("c2 c1 normalizes to:", format_word(x))
y = normal_form(g, ("c3", "c1", "c3", "c1"))
print("c3 c1 c3 c1 stays rigid:", format_word(y), "length", len(y))

# the ball of radius 3 and the sphere sizes (quadratic growth)
print("sphere sizes up to 6:", sphere_sizes(g, 6))
print("ball of radius 2:")
for el in ball(g, 2):
    print("  ", format_word(el))
