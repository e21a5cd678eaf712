from itertools import combinations

import pytest

from racg.graph import (
    C4,
    K23,
    K23_PLUS,
    L,
    L_PLUS,
    GraphError,
    GraphParseError,
    PATTERNS,
    SimpleGraph,
    UnknownVertexError,
    center_clique,
    find_induced,
    has_induced,
    is_clique,
    link,
    star,
)
from racg.corpus import named_corpus

from oracles import induced_embeddings


def test_vertex_order_default_sorted():
    g = SimpleGraph(["c", "a", "b"], [("a", "c")])
    assert g.vertices == ("a", "b", "c")
    assert g.adjacent("a", "c") and not g.adjacent("a", "b")


def test_explicit_order():
    g = SimpleGraph(["a", "b"], [], order=["b", "a"])
    assert g.vertices == ("b", "a")


def test_rejects_bad_input():
    with pytest.raises(GraphError):
        SimpleGraph(["a", "a"], [])
    with pytest.raises(GraphError):
        SimpleGraph(["a"], [("a", "a")])
    with pytest.raises(UnknownVertexError):
        SimpleGraph(["a"], [("a", "b")])


def test_text_roundtrip():
    for g in named_corpus().values():
        assert SimpleGraph.from_text(g.to_text()) == g


def test_parse_errors_carry_line_numbers():
    with pytest.raises(GraphParseError) as e:
        SimpleGraph.from_text("vertices: a b\nedge: a\n")
    assert e.value.lineno == 2
    with pytest.raises(GraphParseError) as e:
        SimpleGraph.from_text("# comment\nedge: a b\n")
    assert e.value.lineno == 2
    with pytest.raises(GraphParseError) as e:
        SimpleGraph.from_text("vertices: a b\nwhat: ever\n")
    assert e.value.lineno == 2


def test_parse_comments_and_order():
    g = SimpleGraph.from_text("# hi\nvertices: a b c\n\nedge: a b\norder: c b a\n")
    assert g.vertices == ("c", "b", "a")
    assert g.adjacent("a", "b")


def test_link_and_star():
    g = PATTERNS[K23]
    assert link(g, {"a1"}) == {"b1", "b2", "b3"}
    assert link(g, {"a1", "a2"}) == {"b1", "b2", "b3"}
    assert link(g, {"a1", "b1"}) == frozenset()
    assert link(g, set()) == frozenset(g.vertices)
    assert star(g, "a1") == {"a1", "b1", "b2", "b3"}


def test_is_clique():
    g = PATTERNS[K23_PLUS]
    assert is_clique(g, set())
    assert is_clique(g, {"a1"})
    assert is_clique(g, {"a1", "b1", "b2"})
    assert not is_clique(g, {"a1", "a2"})


def test_center_clique_is_clique_on_corpus():
    for g in named_corpus().values():
        assert is_clique(g, center_clique(g))


def test_center_clique_examples():
    assert center_clique(PATTERNS[K23]) == frozenset()
    assert center_clique(SimpleGraph(["a", "b"], [("a", "b")])) == {"a", "b"}
    # cone point over a path
    g = SimpleGraph(["x", "p", "q"], [("x", "p"), ("x", "q")])
    assert center_clique(g) == {"x"}


def test_find_induced_matches_brute_force():
    for g in named_corpus().values():
        for pattern in (L, L_PLUS, K23, K23_PLUS, C4):
            found = find_induced(g, pattern)
            all_embs = induced_embeddings(g, pattern)
            assert (found is not None) == bool(all_embs)
            if found is not None:
                assert found in all_embs


def test_find_induced_self():
    for pattern, p in PATTERNS.items():
        emb = find_induced(p, pattern)
        assert emb == {v: v for v in p.vertices}


def test_link_of_bad_subgraph_is_clique():
    # when no bipartite pattern embeds, any subset generating a free-ish
    # subgroup must have a clique link
    for g in named_corpus().values():
        if has_induced(g, K23) or has_induced(g, K23_PLUS):
            continue
        vs = g.vertices
        for k in range(3, len(vs) + 1):
            for lam in combinations(vs, k):
                sub = g.induced(lam)
                if has_induced(sub, L) or has_induced(sub, L_PLUS):
                    assert is_clique(g, link(g, lam))
