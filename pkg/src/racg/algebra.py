"""Rational group-algebra vectors on W and conditional expectations.

Vectors are finitely supported functions Element -> Fraction in the lambda
basis.  Everything is exact; no floating point.  The two check functions at
the bottom sweep basis vectors through the nested-expectation identities and
report mismatches.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .graph import SimpleGraph
from .parabolic import in_V, lcr_decompose
from .words import (
    Element,
    GraphMismatchError,
    ball,
    element_link,
    format_word,
    identity,
    support,
)


@dataclass(frozen=True)
class GroupAlgebraVector:
    """Finitely supported rational function on the group (lambda basis)."""

    graph: SimpleGraph
    terms: Mapping[Element, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for g, c in self.terms.items():
            if g.graph != self.graph:
                raise GraphMismatchError("term over a different graph")
            c = Fraction(c)
            if c != 0:
                clean[g] = c
        object.__setattr__(self, "terms", clean)

    # -- linear structure --------------------------------------------------

    def __add__(self, other: "GroupAlgebraVector") -> "GroupAlgebraVector":
        self._check(other)
        terms = dict(self.terms)
        for g, c in other.terms.items():
            terms[g] = terms.get(g, Fraction(0)) + c
        return GroupAlgebraVector(self.graph, terms)

    def __sub__(self, other: "GroupAlgebraVector") -> "GroupAlgebraVector":
        return self + other.scale(-1)

    def scale(self, c) -> "GroupAlgebraVector":
        c = Fraction(c)
        return GroupAlgebraVector(self.graph, {g: c * v for g, v in self.terms.items()})

    def __mul__(self, other: "GroupAlgebraVector") -> "GroupAlgebraVector":
        """Convolution product via Element multiplication."""
        self._check(other)
        terms: dict[Element, Fraction] = {}
        for g1, c1 in self.terms.items():
            for g2, c2 in other.terms.items():
                g = g1 * g2
                terms[g] = terms.get(g, Fraction(0)) + c1 * c2
        return GroupAlgebraVector(self.graph, terms)

    def adjoint(self) -> "GroupAlgebraVector":
        # rational (real) coefficients: adjoint just inverts the group elements
        return GroupAlgebraVector(
            self.graph, {g.inverse(): c for g, c in self.terms.items()}
        )

    def trace(self) -> Fraction:
        return self.terms.get(identity(self.graph), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "GroupAlgebraVector") -> None:
        if self.graph != other.graph:
            raise GraphMismatchError("vectors over different graphs")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupAlgebraVector)
            and self.graph == other.graph
            and dict(self.terms) == dict(other.terms)
        )

    def __repr__(self) -> str:
        if not self.terms:
            return "GroupAlgebraVector(0)"
        parts = [
            f"{c}*[{format_word(g)}]"
            for g, c in sorted(self.terms.items(), key=lambda t: t[0].sort_key())
        ]
        return "GroupAlgebraVector(" + " + ".join(parts) + ")"


def lam(g: Element, coeff=1) -> GroupAlgebraVector:
    """Basis vector c * lambda_g."""
    return GroupAlgebraVector(g.graph, {g: Fraction(coeff)})


def zero(graph: SimpleGraph) -> GroupAlgebraVector:
    return GroupAlgebraVector(graph, {})


def algebra_multiply(x: GroupAlgebraVector, y: GroupAlgebraVector) -> GroupAlgebraVector:
    return x * y


def adjoint(x: GroupAlgebraVector) -> GroupAlgebraVector:
    return x.adjoint()


def trace(x: GroupAlgebraVector) -> Fraction:
    return x.trace()


def expect(x: GroupAlgebraVector, lam_set: Iterable[str]) -> GroupAlgebraVector:
    """Conditional expectation onto the special subalgebra of ``lam_set``:
    keeps exactly the terms supported in the subgroup."""
    lam_set = x.graph.check_subset(lam_set)
    return GroupAlgebraVector(
        x.graph, {g: c for g, c in x.terms.items() if support(g) <= lam_set}
    )


# -- nested-expectation verifiers -------------------------------------------


def condition_nest_report(
    graph: SimpleGraph,
    g1: Iterable[str],
    g2: Iterable[str],
    v: Element,
    u: Element,
    radius: int,
    basis: Sequence[Element] | None = None,
) -> list[dict]:
    """Check the two-sided nested expectation identity on basis vectors.

    For each basis element g: the left side is E_g2(v^* E_g1(g) u); the
    right side vanishes unless the boundary decompositions of u and v share
    their center, and otherwise conjugates an expectation onto
    g1 ∩ g2 ∩ Link(center) by the boundary factors.  Returns one record per
    mismatch (empty list = identity holds).
    """
    g1 = graph.check_subset(g1)
    g2 = graph.check_subset(g2)
    vdec = lcr_decompose(v, g1, g2)
    udec = lcr_decompose(u, g1, g2)
    if basis is None:
        basis = ball(graph, radius)
    mismatches = []
    vinv = lam(v.inverse())
    uvec = lam(u)
    inner_set = g1 & g2 & element_link(udec.center)
    vl_inv = lam(vdec.left.inverse())
    ul = lam(udec.left)
    vr_inv = lam(vdec.right.inverse())
    ur = lam(udec.right)
    for x in basis:
        lhs = expect(vinv * expect(lam(x), g1) * uvec, g2)
        if udec.center != vdec.center:
            rhs = zero(graph)
        else:
            rhs = vr_inv * expect(vl_inv * lam(x) * ul, inner_set) * ur
        if lhs != rhs:
            mismatches.append(
                {
                    "g": format_word(x),
                    "u": format_word(u),
                    "v": format_word(v),
                    "g1": sorted(g1),
                    "g2": sorted(g2),
                    "lhs": repr(lhs),
                    "rhs": repr(rhs),
                }
            )
    return mismatches


#: alias: the report doubles as the check (empty list = identity holds)
condition_nest_check = condition_nest_report


class HypothesisError(ValueError):
    """A precondition of the delta-identity sweep fails (not a mismatch)."""


def iterated_expectation_report(
    graph: SimpleGraph,
    gammas: Sequence[Iterable[str]],
    u_tuple: Sequence[Element],
    v_tuple: Sequence[Element],
    radius: int,
    basis: Sequence[Element] | None = None,
) -> list[dict]:
    """Check the nested expectation map against delta_{u,v} * trace.

    Requires the graphs to intersect trivially and both tuples to lie in V;
    violations raise HypothesisError.  On each basis vector the fully nested
    expectation E_{gamma_n}(... v_1^* E_{gamma_1}(x) u_1 ...) must equal
    delta_{u,v} * trace(x) * lambda_e.
    """
    gammas = [graph.check_subset(gamma) for gamma in gammas]
    meet = frozenset(graph.vertices)
    for gamma in gammas:
        meet &= gamma
    if meet:
        raise HypothesisError(f"graphs intersect in {sorted(meet)}")
    for name, tup in (("u", u_tuple), ("v", v_tuple)):
        if not in_V(tup, gammas, graph):
            raise HypothesisError(f"tuple {name} is not in V")
    if basis is None:
        basis = ball(graph, radius)
    same = tuple(u_tuple) == tuple(v_tuple)
    mismatches = []
    for x in basis:
        y = expect(lam(x), gammas[0])
        for i in range(len(gammas) - 1):
            y = expect(lam(v_tuple[i].inverse()) * y * lam(u_tuple[i]), gammas[i + 1])
        want = lam(identity(graph), lam(x).trace()) if same else zero(graph)
        if y != want:
            mismatches.append(
                {
                    "g": format_word(x),
                    "u": [format_word(t) for t in u_tuple],
                    "v": [format_word(t) for t in v_tuple],
                    "got": repr(y),
                    "want": repr(want),
                }
            )
    return mismatches


#: alias matching condition_nest_check: empty report means the delta
#: identity holds on the swept basis
iterated_expectation_check = iterated_expectation_report
