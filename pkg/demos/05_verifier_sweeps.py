"""Running the exhaustive identity verifiers from Python.

Each verifier returns the number of cases checked and the counterexamples
found (none, on these graphs). The same sweeps are available on the command
line as `racg verify <suite> <graph-or-dir>`.
"""

from racg.corpus import named_corpus
from racg.verify import (
    verify_combinatorics,
    verify_condition_nest,
    verify_inner_product,
    verify_intersection,
    verify_lcr_unique,
)

g = named_corpus()["k23"]

for fn, kwargs in (
    (verify_combinatorics, {"radius": 3}),
    (verify_condition_nest, {"g_radius": 3, "uv_radius": 2}),
    (verify_inner_product, {"radius": 2}),
    (verify_intersection, {"radius": 3}),
    (verify_lcr_unique, {"radius": 4}),
):
    rep = fn(g, **kwargs)
    status = "ok" if not rep["mismatches"] else f"{len(rep['mismatches'])} mismatches"
    print(f"{rep['name']:<15} checked={rep['checked']:>8}  {status}")
