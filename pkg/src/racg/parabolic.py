"""Special (parabolic) subgroups: membership, boundary decompositions,
minimal double-coset representatives and conjugate-parabolic intersections.

All stripping is deterministic: the ShortLex-smallest available descent is
removed first, so every function here returns the same value on every run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graph import SimpleGraph, link
from .words import (
    Element,
    element_link,
    generator,
    identity,
    left_descents,
    right_descents,
    support,
)


def is_member(x: Element, lam: Iterable[str]) -> bool:
    """True iff x lies in the special subgroup generated by ``lam``."""
    lam = x.graph.check_subset(lam)
    return support(x) <= lam


def _smallest(g: SimpleGraph, letters: frozenset) -> Optional[str]:
    return min(letters, key=g.index.__getitem__) if letters else None


def _strip_left(x: Element, allowed: frozenset, order=None) -> tuple[list[str], Element]:
    """Remove left descents lying in ``allowed`` until none remain.

    ``order`` picks which descent goes first (default: ShortLex-smallest);
    the stripped letters multiply back on the left in the returned order.
    """
    g = x.graph
    taken: list[str] = []
    while True:
        cands = left_descents(x) & allowed
        if not cands:
            return taken, x
        a = (order or _smallest)(g, cands)
        taken.append(a)
        x = generator(g, a) * x


def _strip_right(x: Element, allowed: frozenset, order=None) -> tuple[Element, list[str]]:
    g = x.graph
    taken: list[str] = []
    while True:
        cands = right_descents(x) & allowed
        if not cands:
            return x, taken
        a = (order or _smallest)(g, cands)
        taken.insert(0, a)
        x = x * generator(g, a)


@dataclass(frozen=True)
class LcrDecomposition:
    """x = left * center * right with additive lengths; the center carries no
    left descent in g1 and no right descent in g2 and is unique."""

    left: Element
    center: Element
    right: Element
    g1: frozenset
    g2: frozenset

    def recombined(self) -> Element:
        return self.left * self.center * self.right


def lcr_decompose(x: Element, g1: Iterable[str], g2: Iterable[str], order=None) -> LcrDecomposition:
    """Split off the maximal g1-prefix and g2-suffix of ``x``.

    Alternates left and right stripping to a joint fixpoint; each removed
    letter shortens the element by one, so lengths add up.
    """
    g = x.graph
    g1 = g.check_subset(g1)
    g2 = g.check_subset(g2)
    left_letters: list[str] = []
    right_letters: list[str] = []
    c = x
    while True:
        ls, c = _strip_left(c, g1, order=order)
        left_letters.extend(ls)
        c, rs = _strip_right(c, g2, order=order)
        right_letters[:0] = rs
        if not ls and not rs:
            break
    return LcrDecomposition(
        left=Element(g, tuple(left_letters)),
        center=c,
        right=Element(g, tuple(right_letters)),
        g1=g1,
        g2=g2,
    )


def min_double_coset_rep(x: Element, g1: Iterable[str]) -> Element:
    """The unique shortest element of the double coset W_g1 * x * W_g1."""
    return lcr_decompose(x, g1, g1).center


@dataclass(frozen=True)
class ParabolicIntersection:
    """W_g1 ∩ x W_g1 x^{-1} = conjugator_h W_core conjugator_h^{-1}."""

    conjugator_h: Element
    core: frozenset
    minimal_rep_d: Element


def conjugate_parabolic_intersection(x: Element, g1: Iterable[str]) -> ParabolicIntersection:
    """Constructive intersection of a parabolic with its conjugate.

    Writes x = h d r with h, r in W_g1 and d the both-sided minimal
    representative; the core is the set of g1-generators commuting with
    every letter of d (all of g1 when d is trivial).
    """
    g = x.graph
    g1 = g.check_subset(g1)
    dec = lcr_decompose(x, g1, g1)
    d = dec.center
    if d.is_identity():
        core = g1
    else:
        core = g1 & link(g, support(d))
    return ParabolicIntersection(conjugator_h=dec.left, core=core, minimal_rep_d=d)


# -- normalization into the tuple set V ------------------------------------


def _right_window(
    gammas: Sequence[frozenset], vs: Sequence[Element], i: int, g: SimpleGraph
) -> frozenset:
    """Letters allowed to leave v_i on the right: common to all later graphs
    and commuting with all later tuple components."""
    allowed = frozenset(g.vertices)
    for gamma in gammas[i + 1 :]:
        allowed &= gamma
    for w in vs[i + 1 :]:
        allowed &= element_link(w)
    return allowed


def in_V(vs: Sequence[Element], gammas: Sequence[frozenset], g: SimpleGraph) -> bool:
    """Membership in V: no left descent in the own graph, no right descent
    movable past the later factors."""
    if len(vs) != len(gammas) - 1:
        raise ValueError("need one tuple component fewer than graphs")
    for i, v in enumerate(vs):
        if left_descents(v) & gammas[i]:
            return False
        if right_descents(v) & _right_window(gammas, vs, i, g):
            return False
    return True


def normalize_tuple_to_V(
    vs: Sequence[Element], gammas: Sequence[Iterable[str]], g: SimpleGraph
) -> tuple[tuple[Element, ...], tuple[Element, ...], Element]:
    """Rewrite a tuple into V, returning the absorbed boundary parts.

    Two passes iterated to a fixpoint: a left pass stripping descents that
    belong to the own graph, then a right pass (last index first) stripping
    letters that commute past all later components.  Per index i the
    original component equals absorbed_left[i] * v_i * r_i; the r_i combine,
    in index order, into the single returned absorbed-right element.
    """
    gammas = [g.check_subset(gamma) for gamma in gammas]
    n = len(gammas)
    if n < 2:
        raise ValueError("need at least two graphs")
    if len(vs) != n - 1:
        raise ValueError("need one tuple component fewer than graphs")
    vs = list(vs)
    absorbed_left = [identity(g)] * (n - 1)
    rights = [identity(g)] * (n - 1)
    while True:
        changed = False
        for i in range(n - 1):
            ls, vs[i] = _strip_left(vs[i], gammas[i])
            if ls:
                absorbed_left[i] = absorbed_left[i] * Element(g, tuple(ls))
                changed = True
        for i in range(n - 2, -1, -1):
            allowed = _right_window(gammas, vs, i, g)
            vs[i], rs = _strip_right(vs[i], allowed)
            if rs:
                rights[i] = Element(g, tuple(rs)) * rights[i]
                changed = True
        if not changed:
            break
    absorbed_right = identity(g)
    for r in rights:
        absorbed_right = absorbed_right * r
    assert in_V(vs, gammas, g)
    return tuple(vs), tuple(absorbed_left), absorbed_right
