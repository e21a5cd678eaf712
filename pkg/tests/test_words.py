from itertools import product

import pytest

from racg.graph import PATTERNS, K23, SimpleGraph
from racg.words import (
    BudgetExceededError,
    Element,
    GraphMismatchError,
    ball,
    format_word,
    generator,
    identity,
    left_descents,
    normal_form,
    parse_word,
    reduce_word,
    right_descents,
    sphere_sizes,
    support,
)
from racg.corpus import dinf, named_corpus, path

from oracles import brute_ball, commutation_class, element_matrix, words_equal


def test_generators_are_involutions():
    g = PATTERNS[K23]
    for v in g.vertices:
        assert (generator(g, v) * generator(g, v)).is_identity()


def test_edges_mean_commutation():
    g = path(3)  # p1 - p2 - p3
    a, b, c = (generator(g, v) for v in ("p1", "p2", "p3"))
    assert a * b == b * a
    assert b * c == c * b
    assert a * c != c * a


def test_reduce_matches_representation():
    g = path(3)
    for n in range(5):
        for w in product(g.vertices, repeat=n):
            r = reduce_word(g, w)
            assert words_equal(g, w, r)


def test_normal_form_constant_on_commutation_class():
    g = named_corpus()["c5"]
    for n in range(4):
        for w in product(g.vertices, repeat=n):
            r = reduce_word(g, w)
            forms = {normal_form(g, u).letters for u in commutation_class(g, r)}
            assert len(forms) == 1


def test_normal_form_separates_elements():
    # words are equal in the group iff their normal forms coincide
    g = named_corpus()["l_plus"]
    by_matrix = {}
    for n in range(5):
        for w in product(g.vertices, repeat=n):
            by_matrix.setdefault(element_matrix(normal_form(g, w)), set()).add(
                normal_form(g, w)
            )
    for elems in by_matrix.values():
        assert len(elems) == 1


def test_inverse_and_pow():
    g = named_corpus()["k23"]
    x = normal_form(g, ("a1", "b1", "a2"))
    assert (x * x.inverse()).is_identity()
    assert x**0 == identity(g)
    assert x**2 == x * x
    assert x**-1 == x.inverse()


def test_descents():
    g = path(3)
    x = normal_form(g, ("p1", "p2"))  # adjacent, hence commuting letters
    assert left_descents(x) == {"p1", "p2"}
    assert right_descents(x) == {"p1", "p2"}
    w = normal_form(g, ("p1", "p3"))  # non-adjacent: order is rigid
    assert left_descents(w) == {"p1"}
    assert right_descents(w) == {"p3"}
    y = normal_form(g, ("p1", "p3", "p1"))  # p1, p3 do not commute: length 3
    assert len(y) == 3
    assert left_descents(y) == {"p1"}
    assert right_descents(y) == {"p1"}
    z = normal_form(g, ("p3", "p2", "p3"))  # no reduction possible? p2-p3 edge
    assert z == normal_form(g, ("p2",))


def test_support_is_invariant():
    g = named_corpus()["c4"]
    x = normal_form(g, ("c1", "c3", "c2"))
    assert support(x) == {"c1", "c2", "c3"}


def test_ball_matches_brute_force():
    for name in ("dinf", "p3", "c4", "l"):
        g = named_corpus()[name]
        brute = brute_ball(g, 4)
        b = ball(g, 4)
        assert len(b) == len(brute)
        # each element's matrix appears at its length
        for x in b:
            assert brute[element_matrix(x)] == len(x)


def test_ball_sorted_and_deduplicated():
    g = named_corpus()["k23"]
    b = ball(g, 3)
    assert b == sorted(set(b), key=Element.sort_key)


def test_sphere_sizes_k23():
    assert sphere_sizes(PATTERNS[K23], 2) == [1, 5, 14]


def test_ball_cap():
    g = dinf()
    with pytest.raises(BudgetExceededError):
        ball(g, 10, cap=5)


def test_graph_mismatch():
    g1, g2 = dinf(), path(2)
    with pytest.raises(GraphMismatchError):
        identity(g1) * identity(g2)


def test_parse_and_format():
    g = path(3)
    assert format_word(parse_word(g, "p1 p2")) == "p1 p2"
    assert parse_word(g, "e").is_identity()
    assert format_word(identity(g)) == "e"
    # a vertex literally named "e" wins over the identity token
    h = SimpleGraph(["e", "f"], [])
    assert parse_word(h, "e") == generator(h, "e")
