"""Exhaustive desk-scale verifiers for the word-combinatorial identities.

Each verifier sweeps a bounded search space and returns a report with the
number of cases checked and a list of counterexample records (empty list =
the identity holds on the swept range).  Sweeps are deterministic; records
are emitted in sort order of the search loops.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .graph import SimpleGraph, link, star
from .parabolic import (
    conjugate_parabolic_intersection,
    in_V,
    lcr_decompose,
    normalize_tuple_to_V,
)
from .words import (
    Element,
    ball,
    format_word,
    identity,
    left_descents,
    reduce_word,
    right_descents,
    support,
)


def _report(name: str, checked: int, mismatches: list[dict]) -> dict:
    return {"name": name, "checked": checked, "mismatches": mismatches}


# -- conjugation identity: u^-1 w u' landing in a parabolic ----------------


def verify_combinatorics(g: SimpleGraph, radius: int = 4) -> dict:
    """If u, u' carry no g1-descent on the left and no g2-descent on the
    right, w lies in W_g1, and u^-1 w u' lies in W_g2, then w is supported in
    g1 ∩ g2, u equals u', and u commutes with w.

    Quantification over all subgraph pairs (g1, g2) reduces to the minimal
    admissible pair: g1 = support(w) and g2 = support(u^-1 w u') witness the
    hypotheses whenever any pair does, and the conclusions are monotone, so
    the sweep runs over element triples only.
    """
    elems = ball(g, radius)
    supp = {x: support(x) for x in elems}
    ldesc = {x: left_descents(x) for x in elems}
    rdesc = {x: right_descents(x) for x in elems}
    inv_letters = {x: x.letters[::-1] for x in elems}
    checked = 0
    mismatches: list[dict] = []
    for u in elems:
        lu, ru = ldesc[u], rdesc[u]
        ui = inv_letters[u]
        for w in elems:
            sw = supp[w]
            if sw & lu:
                continue  # no admissible g1
            p = reduce_word(g, ui + w.letters)
            for u2 in elems:
                if sw & ldesc[u2]:
                    continue
                q = reduce_word(g, p + u2.letters)
                sq = frozenset(q)
                if sq & (ru | rdesc[u2]):
                    continue  # no admissible g2
                checked += 1
                ok = sw <= sq and u == u2 and u * w == w * u
                if not ok:
                    mismatches.append(
                        {
                            "w": format_word(w),
                            "u": format_word(u),
                            "u_prime": format_word(u2),
                            "g1": sorted(sw),
                            "g2": sorted(sq),
                        }
                    )
    return _report("combinatorics", checked, mismatches)


# -- gamma-pair families -----------------------------------------------------


def all_subset_pairs(g: SimpleGraph) -> list[tuple[frozenset, frozenset]]:
    from itertools import combinations

    subsets = [frozenset()]
    for k in range(1, len(g.vertices) + 1):
        subsets.extend(frozenset(s) for s in combinations(g.vertices, k))
    return [(a, b) for a in subsets for b in subsets]


def representative_pairs(g: SimpleGraph) -> list[tuple[frozenset, frozenset]]:
    """A small deterministic family of subgraph pairs covering the shapes
    that matter: empty, full, links, stars and singletons."""
    vs = g.vertices
    full = frozenset(vs)
    empty = frozenset()
    v0, vlast = vs[0], vs[-1]
    v1 = vs[1] if len(vs) > 1 else vs[0]
    pairs = [
        (empty, empty),
        (empty, full),
        (full, empty),
        (full, full),
        (star(g, v0), frozenset({v0})),
        (frozenset({v0}), frozenset({v0})),
        (frozenset({v0}), frozenset({vlast})),
        (link(g, {v0}), link(g, {v1})),
        (link(g, {v0}), frozenset({v0})),
        (link(g, {vlast}), star(g, v1)),
    ]
    seen = []
    for p in pairs:
        if p not in seen:
            seen.append(p)
    return seen


def gamma_pairs(g: SimpleGraph, exhaustive_max_vertices: int = 3):
    if len(g.vertices) <= exhaustive_max_vertices:
        return all_subset_pairs(g)
    return representative_pairs(g)


# -- nested conditional expectation on basis vectors -----------------------


def verify_condition_nest(
    g: SimpleGraph,
    g_radius: int = 4,
    uv_radius: int = 3,
    pairs: Optional[Sequence[tuple[frozenset, frozenset]]] = None,
) -> dict:
    """Sweep the two-sided nested expectation identity on basis vectors.

    On lambda_h basis vectors every conditional expectation keeps or kills
    the vector, so both sides stay word-level: the left side is the support
    test on v^-1 h u, the right side conjugates by the boundary decomposition
    factors when the centers of u and v agree.
    """
    if pairs is None:
        pairs = gamma_pairs(g)
    basis = ball(g, g_radius)
    uv = ball(g, uv_radius)
    supp = {x: support(x) for x in basis}
    checked = 0
    mismatches: list[dict] = []

    def record(h, u, v, g1, g2, lhs, rhs):
        mismatches.append(
            {
                "g": format_word(h),
                "u": format_word(u),
                "v": format_word(v),
                "g1": sorted(g1),
                "g2": sorted(g2),
                "lhs": "0" if lhs is None else " ".join(lhs) or "e",
                "rhs": "0" if rhs is None else " ".join(rhs) or "e",
            }
        )

    for g1, g2 in pairs:
        in_g1 = [h for h in basis if supp[h] <= g1]
        n_outside = len(basis) - len(in_g1)
        decs = {x: lcr_decompose(x, g1, g2) for x in uv}
        for v in uv:
            vdec = decs[v]
            vinv = v.inverse().letters
            vl_inv = vdec.left.inverse().letters
            vr_inv = vdec.right.inverse().letters
            for u in uv:
                udec = decs[u]
                if udec.center != vdec.center:
                    # right side vanishes; the left side vanishes too when
                    # E_g1 kills h, which covers every h outside W_g1
                    checked += n_outside
                    for h in in_g1:
                        checked += 1
                        t = reduce_word(g, vinv + h.letters + u.letters)
                        if frozenset(t) <= g2:
                            record(h, u, v, g1, g2, t, None)
                    continue
                inner = g1 & g2 & link(g, support(udec.center))
                ul, ur = udec.left.letters, udec.right.letters
                boundary_trivial = vl_inv == vinv and not vr_inv and ul == u.letters and not ur
                for h in basis:
                    checked += 1
                    if supp[h] <= g1:
                        t = reduce_word(g, vinv + h.letters + u.letters)
                        lhs = t if frozenset(t) <= g2 else None
                    else:
                        t = None
                        lhs = None
                    if boundary_trivial and t is not None:
                        s = t  # same reduction as the left side
                    else:
                        s = reduce_word(g, vl_inv + h.letters + ul)
                    if frozenset(s) <= inner:
                        rhs = s if boundary_trivial else reduce_word(g, vr_inv + s + ur)
                    else:
                        rhs = None
                    same = (lhs is None and rhs is None) or (
                        lhs is not None
                        and rhs is not None
                        and (lhs == rhs or Element(g, lhs) == Element(g, rhs))
                    )
                    if not same:
                        record(h, u, v, g1, g2, lhs, rhs)
    return _report("condition-nest", checked, mismatches)


# -- delta identity for fully nested expectations ---------------------------


def link_family(g: SimpleGraph, n: Optional[int] = None) -> list[frozenset]:
    """The first n vertex links whose intersection is empty (default: all)."""
    links = [link(g, {v}) for v in g.vertices]
    if n is None:
        n = len(links)
    if n < 2 or n > len(links):
        raise ValueError(f"need between 2 and {len(links)} links")
    chosen = links[:n]
    meet = frozenset(g.vertices)
    for s in chosen:
        meet &= s
    if meet:
        raise ValueError(f"chosen links intersect in {sorted(meet)}")
    return chosen


def candidate_tuples(
    g: SimpleGraph,
    gammas: Sequence[frozenset],
    component_radius: int = 1,
    extra_radius: int = 2,
    cap: int = 60,
) -> list[tuple[Element, ...]]:
    """Deterministic family of V-tuples: every tuple over the small ball,
    plus tuples with one larger component, normalized into V."""
    from itertools import product

    n = len(gammas)
    small = ball(g, component_radius)
    out: list[tuple[Element, ...]] = []
    seen = set()

    def add(tup):
        if tup not in seen and in_V(tup, gammas, g):
            seen.add(tup)
            out.append(tup)

    for tup in product(small, repeat=n - 1):
        add(tuple(tup))
        if len(out) >= cap:
            return out
    e = identity(g)
    for x in ball(g, extra_radius):
        for i in range(n - 1):
            raw = [e] * (n - 1)
            raw[i] = x
            tup, _, _ = normalize_tuple_to_V(raw, gammas, g)
            add(tup)
            if len(out) >= cap:
                return out
    return out


def verify_inner_product(
    g: SimpleGraph,
    n: Optional[int] = None,
    radius: int = 3,
    tuples: Optional[Sequence[tuple[Element, ...]]] = None,
) -> dict:
    """delta identity: the fully nested expectation along trivially
    intersecting links sends lambda_h to delta_{u,v} * trace * lambda_e."""
    gammas = link_family(g, n)
    if tuples is None:
        tuples = candidate_tuples(g, gammas)
    basis = ball(g, radius)
    e = identity(g)
    checked = 0
    mismatches: list[dict] = []
    for u_tuple in tuples:
        u_inv = None
        for v_tuple in tuples:
            same = u_tuple == v_tuple
            v_invs = [v.inverse().letters for v in v_tuple]
            for h in basis:
                checked += 1
                # basis-level nesting: expectation keeps or kills the word
                t = h.letters if support(h) <= gammas[0] else None
                for i in range(len(gammas) - 1):
                    if t is None:
                        break
                    t = reduce_word(g, v_invs[i] + t + u_tuple[i].letters)
                    if not frozenset(t) <= gammas[i + 1]:
                        t = None
                want = () if (same and h == e) else None
                if t != want:
                    mismatches.append(
                        {
                            "g": format_word(h),
                            "u": [format_word(x) for x in u_tuple],
                            "v": [format_word(x) for x in v_tuple],
                            "got": "0" if t is None else " ".join(t) or "e",
                            "want": "0" if want is None else "e",
                        }
                    )
    return _report("inner-product", checked, mismatches)


# -- conjugate parabolic intersections --------------------------------------


def verify_intersection(g: SimpleGraph, radius: int = 4) -> dict:
    """Formula vs brute force for W_g1 ∩ x W_g1 x^-1 = h W_core h^-1.

    Both sets live inside W_g1, so restricted to the ball the equality is a
    pointwise equivalence of two membership predicates over y in W_g1:
    x^-1 y x supported in g1  <=>  h^-1 y h supported in the core.
    """
    from itertools import combinations

    elems = ball(g, radius)
    supp = {y: support(y) for y in elems}
    conj_cache: dict[tuple[Element, Element], frozenset] = {}

    def conj_support(a: Element, y: Element) -> frozenset:
        key = (a, y)
        got = conj_cache.get(key)
        if got is None:
            got = frozenset(
                reduce_word(g, a.letters[::-1] + y.letters + a.letters)
            )
            conj_cache[key] = got
        return got

    subsets = [frozenset()]
    for k in range(1, len(g.vertices) + 1):
        subsets.extend(frozenset(s) for s in combinations(g.vertices, k))
    checked = 0
    mismatches: list[dict] = []
    for g1 in subsets:
        members = [y for y in elems if supp[y] <= g1]
        for x in elems:
            res = conjugate_parabolic_intersection(x, g1)
            h, core, d = res.conjugator_h, res.core, res.minimal_rep_d
            # sanity on the minimal representative
            if left_descents(d) & g1 or right_descents(d) & g1:
                mismatches.append(
                    {"x": format_word(x), "g1": sorted(g1), "error": "d has g1 descents"}
                )
                continue
            for y in members:
                checked += 1
                brute = conj_support(x, y) <= g1
                formula = conj_support(h, y) <= core
                if brute != formula:
                    mismatches.append(
                        {
                            "x": format_word(x),
                            "y": format_word(y),
                            "g1": sorted(g1),
                            "h": format_word(h),
                            "core": sorted(core),
                            "d": format_word(d),
                            "brute": brute,
                            "formula": formula,
                        }
                    )
    return _report("intersection", checked, mismatches)


# -- uniqueness of the boundary decomposition center ------------------------


def _order_smallest(g, cands):
    return min(cands, key=g.index.__getitem__)


def _order_largest(g, cands):
    return max(cands, key=g.index.__getitem__)


def _order_seeded(seed):
    import random

    def pick(g, cands):
        rng = random.Random(f"{seed}:{','.join(sorted(cands))}")
        return rng.choice(sorted(cands))

    return pick


STRIP_ORDERS = [_order_smallest, _order_largest, _order_seeded(1), _order_seeded(2)]


def verify_lcr_unique(
    g: SimpleGraph,
    radius: int = 5,
    pairs: Optional[Sequence[tuple[frozenset, frozenset]]] = None,
) -> dict:
    """The center of the boundary decomposition is independent of the order
    in which descents are stripped."""
    if pairs is None:
        pairs = gamma_pairs(g)
    elems = ball(g, radius)
    checked = 0
    mismatches: list[dict] = []
    for g1, g2 in pairs:
        for x in elems:
            centers = {
                lcr_decompose(x, g1, g2, order=order).center for order in STRIP_ORDERS
            }
            checked += 1
            if len(centers) != 1:
                mismatches.append(
                    {
                        "x": format_word(x),
                        "g1": sorted(g1),
                        "g2": sorted(g2),
                        "centers": sorted(format_word(c) for c in centers),
                    }
                )
    return _report("lcr-unique", checked, mismatches)


VERIFIERS = {
    "combinatorics": verify_combinatorics,
    "condition-nest": verify_condition_nest,
    "inner-product": verify_inner_product,
    "intersection": verify_intersection,
    "lcr-unique": verify_lcr_unique,
}
