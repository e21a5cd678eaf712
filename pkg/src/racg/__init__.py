"""Right-angled Coxeter groups from finite simple graphs.

Vertices are involutive generators; an edge means the two generators
commute.  The package computes normal forms, special (parabolic) subgroup
decompositions, exact rational growth series and the graph-side
classification of the group, and ships exhaustive verifiers for the
word-combinatorial identities behind the classification.
"""

from .graph import (
    GraphError,
    GraphParseError,
    SimpleGraph,
    UnknownVertexError,
    center_clique,
    find_induced,
    has_induced,
    is_clique,
    link,
    star,
)
from .words import (
    BudgetExceededError,
    Element,
    GraphMismatchError,
    ball,
    format_word,
    generator,
    identity,
    inverse,
    left_descents,
    length,
    multiply,
    normal_form,
    parse_word,
    right_descents,
    sphere_sizes,
    support,
)
from .parabolic import (
    LcrDecomposition,
    ParabolicIntersection,
    conjugate_parabolic_intersection,
    in_V,
    is_member,
    lcr_decompose,
    min_double_coset_rep,
    normalize_tuple_to_V,
)
from .algebra import GroupAlgebraVector, expect, lam, trace, zero
from .growth import (
    GrowthDisagreementError,
    IntPolynomial,
    RationalSeries,
    clique_polynomial,
    growth_series,
    growth_type,
    series_coefficients,
)
from .classify import (
    Classification,
    WitnessBundle,
    certify_free,
    classify,
    f2_witness,
    special_subgroup_witness,
    zxf2_witness,
)

__version__ = "0.1.0"
