"""Graph-side classification of the Coxeter group with certified witnesses.

Every decided property comes straight from an induced-pattern scan:
  * amenable        <=> no induced 3-anticlique (L) and no L-plus
  * contains Z x F2 <=> induced K_{2,3} or K_{2,3}-plus
  * strongly solid  <=> not contains Z x F2
  * hyperbolic      <=> no induced 4-cycle
Witness words (free pairs, commuting triples) are searched and certified to
bounded depth before being emitted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .graph import (
    C4,
    K23,
    K23_PLUS,
    L,
    L_PLUS,
    GraphError,
    SimpleGraph,
    center_clique,
    find_induced,
    link,
    star,
)
from .words import Element, format_word, generator, identity, normal_form

SHAPE_K23 = "Dinf x (Z2 * Z2 * Z2)"
SHAPE_K23_PLUS = "Dinf x (Z2 * (Z2 x Z2))"

DEFAULT_FREENESS_DEPTH = 8


@dataclass(frozen=True)
class WitnessBundle:
    f2_pair: Optional[tuple[Element, Element]]
    f2_depth: int
    zxf2_triple: Optional[tuple[Element, Element, Element]]
    pattern_embedding: Optional[tuple[str, dict[str, str]]]
    special_subgroup: Optional[tuple[frozenset, str]]


@dataclass(frozen=True)
class AfpDecomposition:
    """W = W_{star(v)} amalgamated over W_{link(v)} with W_{graph minus v}."""

    vertex: str
    g1: frozenset
    g2: frozenset
    amalgam: frozenset


@dataclass(frozen=True)
class Classification:
    amenable: bool
    contains_F2: bool
    strongly_solid: bool
    contains_ZxF2: bool
    hyperbolic: bool
    center_clique: frozenset
    product_split: tuple[frozenset, frozenset]
    afp_decompositions: tuple[AfpDecomposition, ...]
    witnesses: Optional[WitnessBundle]

    def to_json_dict(self, graph: SimpleGraph) -> dict:
        out = {
            "amenable": self.amenable,
            "contains_F2": self.contains_F2,
            "strongly_solid": self.strongly_solid,
            "contains_ZxF2": self.contains_ZxF2,
            "hyperbolic": self.hyperbolic,
            "center_clique": graph.sorted(self.center_clique),
            "product_split": [
                graph.sorted(self.product_split[0]),
                graph.sorted(self.product_split[1]),
            ],
            "afp_decompositions": [
                {
                    "vertex": d.vertex,
                    "g1": graph.sorted(d.g1),
                    "g2": graph.sorted(d.g2),
                    "amalgam": graph.sorted(d.amalgam),
                }
                for d in self.afp_decompositions
            ],
        }
        if self.witnesses is not None:
            w = self.witnesses
            out["witnesses"] = {
                "f2_pair": (
                    [format_word(w.f2_pair[0]), format_word(w.f2_pair[1])]
                    if w.f2_pair
                    else None
                ),
                "f2_depth": w.f2_depth,
                "zxf2_triple": (
                    [format_word(t) for t in w.zxf2_triple] if w.zxf2_triple else None
                ),
                "pattern_embedding": (
                    {
                        "pattern": w.pattern_embedding[0],
                        "map": dict(sorted(w.pattern_embedding[1].items())),
                    }
                    if w.pattern_embedding
                    else None
                ),
                "special_subgroup": (
                    {
                        "vertices": graph.sorted(w.special_subgroup[0]),
                        "shape": w.special_subgroup[1],
                    }
                    if w.special_subgroup
                    else None
                ),
            }
        return out


def certify_free(x: Element, y: Element, depth: int) -> bool:
    """Bounded freeness certificate.

    True iff no nonempty freely reduced word in x, y and their inverses of
    syllable length at most ``depth`` evaluates to the identity.  A True
    result certifies the absence of relations up to that depth only.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    g = x.graph
    gens = [x, y, x.inverse(), y.inverse()]
    e = identity(g)
    # DFS over freely reduced syllable sequences, products built incrementally
    stack = [(e, -1, 0)]
    while stack:
        prod, last, n = stack.pop()
        if n > 0 and prod == e:
            return False
        if n >= depth:
            continue
        for i, s in enumerate(gens):
            if last >= 0 and i == (last + 2) % 4:
                continue  # immediate inverse: not freely reduced
            stack.append((prod * s, i, n + 1))
    return True


def _search_free_pair(
    g: SimpleGraph, letters: list[str], depth: int, max_len: int = 4
) -> Optional[tuple[Element, Element]]:
    """First ShortLex pair of words over ``letters`` certified free."""
    words = []
    for n in range(1, max_len + 1):
        for combo in product(letters, repeat=n):
            x = normal_form(g, combo)
            if len(x) == n and x not in words:
                words.append(x)
    for x in words:
        for y in words:
            if x == y:
                continue
            if certify_free(x, y, depth):
                return x, y
    return None


def f2_witness(
    g: SimpleGraph, depth: int = DEFAULT_FREENESS_DEPTH
) -> Optional[tuple[Element, Element]]:
    """A certified free pair, when the group is non-amenable.

    With an induced 3-anticlique v,u,w the pair (u v, w v) is free; with
    only the one-edge pattern available, a bounded ShortLex search over the
    three vertices finds a certified pair (the anticlique pair can fail when
    two of the letters commute).
    """
    emb = find_induced(g, L)
    if emb is not None:
        v, u, w = emb["x1"], emb["x2"], emb["x3"]
        pair = (
            normal_form(g, (u, v)),
            normal_form(g, (w, v)),
        )
        if not certify_free(pair[0], pair[1], depth):
            raise AssertionError("anticlique pair failed its freeness certificate")
        return pair
    emb = find_induced(g, L_PLUS)
    if emb is None:
        return None
    letters = [emb["x1"], emb["x2"], emb["x3"]]
    pair = _search_free_pair(g, g.sorted(letters), depth)
    if pair is None:
        raise AssertionError("no certified free pair found in the one-edge pattern")
    return pair


def zxf2_witness(
    g: SimpleGraph, depth: int = DEFAULT_FREENESS_DEPTH
) -> Optional[tuple[Element, Element, Element]]:
    """(z, x, y) with z of infinite order commuting with a certified free pair."""
    emb = find_induced(g, K23) or find_induced(g, K23_PLUS)
    if emb is None:
        return None
    a1, a2 = emb["a1"], emb["a2"]
    bs = [emb["b1"], emb["b2"], emb["b3"]]
    z = normal_form(g, (a1, a2))
    sub = g.induced(bs)
    subpair = f2_witness(sub, depth)
    if subpair is None:
        raise AssertionError("no free pair inside the 3-vertex side")
    x = normal_form(g, subpair[0].letters)
    y = normal_form(g, subpair[1].letters)
    # certify before emission
    if x * z != z * x or y * z != z * y:
        raise AssertionError("z fails to commute with the free pair")
    if not certify_free(x, y, depth):
        raise AssertionError("free pair failed its certificate")
    zk = identity(g)
    for _ in range(10):
        zk = zk * z
        if zk.is_identity():
            raise AssertionError("z has finite order")
    return z, x, y


def special_subgroup_witness(g: SimpleGraph) -> Optional[tuple[frozenset, str]]:
    """The 5 vertices of a found bipartite pattern, with its group shape tag."""
    emb = find_induced(g, K23)
    if emb is not None:
        return frozenset(emb.values()), SHAPE_K23
    emb = find_induced(g, K23_PLUS)
    if emb is not None:
        return frozenset(emb.values()), SHAPE_K23_PLUS
    return None


def afp_decompositions(g: SimpleGraph) -> tuple[AfpDecomposition, ...]:
    """One amalgamated free product split per vertex: star(v) against the rest."""
    out = []
    for v in g.vertices:
        g1 = star(g, v)
        g2 = frozenset(g.vertices) - {v}
        out.append(AfpDecomposition(vertex=v, g1=g1, g2=g2, amalgam=g1 & g2))
    return tuple(out)


def classify(
    g: SimpleGraph,
    witnesses: bool = True,
    freeness_depth: int = DEFAULT_FREENESS_DEPTH,
) -> Classification:
    if not g.vertices:
        raise GraphError("empty graph")
    amenable = not (find_induced(g, L) or find_induced(g, L_PLUS))
    contains_zxf2 = bool(find_induced(g, K23) or find_induced(g, K23_PLUS))
    hyperbolic = find_induced(g, C4) is None
    gamma_prime = center_clique(g)
    bundle = None
    if witnesses:
        emb = None
        for name in (K23, K23_PLUS, L, L_PLUS):
            m = find_induced(g, name)
            if m is not None:
                emb = (name, m)
                break
        bundle = WitnessBundle(
            f2_pair=f2_witness(g, freeness_depth) if not amenable else None,
            f2_depth=freeness_depth,
            zxf2_triple=zxf2_witness(g, freeness_depth) if contains_zxf2 else None,
            pattern_embedding=emb,
            special_subgroup=special_subgroup_witness(g) if contains_zxf2 else None,
        )
    return Classification(
        amenable=amenable,
        contains_F2=not amenable,
        strongly_solid=not contains_zxf2,
        contains_ZxF2=contains_zxf2,
        hyperbolic=hyperbolic,
        center_clique=gamma_prime,
        product_split=(gamma_prime, frozenset(g.vertices) - gamma_prime),
        afp_decompositions=afp_decompositions(g),
        witnesses=bundle,
    )
