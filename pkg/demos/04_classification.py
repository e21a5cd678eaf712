"""Classification with certified witnesses.

The two decisive induced patterns: a 3-anticlique (or its one-edge variant)
makes the group non-amenable; a complete bipartite K_{2,3} (or its one-edge
variant) embeds Z x F2 and destroys strong solidity.
"""

import json

from racg import SimpleGraph, classify, format_word

k23_plus = SimpleGraph(
    ["a1", "a2", "b1", "b2", "b3"],
    [(a, b) for a in ("a1", "a2") for b in ("b1", "b2", "b3")] + [("b1", "b2")],
)

cls = classify(k23_plus)
print("amenable:", cls.amenable)
print("strongly solid:", cls.strongly_solid)
print("contains Z x F2:", cls.contains_ZxF2)
print("hyperbolic:", cls.hyperbolic)

w = cls.witnesses
z, x, y = w.zxf2_triple
print("\nZ x F2 witness: z =", format_word(z), "| x =", format_word(x), "| y =", format_word(y))
vs, shape = w.special_subgroup
print("special subgroup on", sorted(vs), "of shape", shape)

print("\nfull JSON record:")
print(json.dumps(cls.to_json_dict(k23_plus), indent=2, sort_keys=True))
