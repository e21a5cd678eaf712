from racg.classify import (
    SHAPE_K23,
    SHAPE_K23_PLUS,
    certify_free,
    classify,
    f2_witness,
    special_subgroup_witness,
    zxf2_witness,
)
from racg.graph import star
from racg.words import generator, normal_form
from racg.corpus import clique, full_corpus, named_corpus

CORPUS = named_corpus()


def test_table_k23():
    cls = classify(CORPUS["k23"])
    assert not cls.amenable and cls.contains_F2
    assert cls.contains_ZxF2 and not cls.strongly_solid
    assert not cls.hyperbolic  # a1-b1-a2-b2 is an induced 4-cycle


def test_table_c4():
    cls = classify(CORPUS["c4"])
    assert cls.amenable and cls.strongly_solid and not cls.hyperbolic


def test_table_c5():
    cls = classify(CORPUS["c5"])
    assert not cls.amenable and cls.strongly_solid and cls.hyperbolic


def test_table_cliques():
    for m in range(1, 5):
        cls = classify(clique(m))
        assert cls.amenable and cls.strongly_solid
        assert cls.center_clique == frozenset(clique(m).vertices)


def test_dichotomy_exclusive_on_corpus():
    for g in full_corpus().values():
        cls = classify(g, witnesses=False)
        assert cls.strongly_solid != cls.contains_ZxF2
        if cls.amenable:
            assert cls.strongly_solid


def test_certify_free_detects_relations():
    g = CORPUS["l"]
    x = generator(g, "x1")
    y = generator(g, "x2")
    assert not certify_free(x, y, 2)  # x^2 = e already at depth 2
    u = normal_form(g, ("x2", "x1"))
    w = normal_form(g, ("x3", "x1"))
    assert certify_free(u, w, 8)


def test_f2_witness_on_l_plus():
    g = CORPUS["l_plus"]
    pair = f2_witness(g)
    assert pair is not None
    assert certify_free(pair[0], pair[1], 8)


def test_f2_witness_absent_when_amenable():
    assert f2_witness(CORPUS["c4"]) is None


def test_zxf2_witness_certified():
    for name in ("k23", "k23_plus"):
        z, x, y = zxf2_witness(CORPUS[name])
        assert x * z == z * x and y * z == z * y
        assert certify_free(x, y, 8)


def test_special_subgroup_shapes():
    vs, shape = special_subgroup_witness(CORPUS["k23"])
    assert len(vs) == 5 and shape == SHAPE_K23
    g_plus = CORPUS["k23_plus"]
    vs, shape = special_subgroup_witness(g_plus)
    assert shape in (SHAPE_K23, SHAPE_K23_PLUS)
    assert special_subgroup_witness(CORPUS["c5"]) is None


def test_zxf2_closed_under_b_side_edges():
    # adding an edge between two degree-2 vertices of a found bipartite
    # pattern turns it into the one-extra-edge pattern: containment persists
    g = CORPUS["k23"]
    cls = classify(g, witnesses=False)
    assert cls.contains_ZxF2
    for u, v in (("b1", "b2"), ("b1", "b3"), ("b2", "b3")):
        assert classify(g.with_edge(u, v), witnesses=False).contains_ZxF2


def test_afp_decompositions():
    g = CORPUS["p3"]
    cls = classify(g, witnesses=False)
    assert len(cls.afp_decompositions) == 3
    for dec in cls.afp_decompositions:
        assert dec.g1 == star(g, dec.vertex)
        assert dec.g2 == frozenset(g.vertices) - {dec.vertex}
        assert dec.amalgam == dec.g1 & dec.g2
        assert dec.g1 | dec.g2 == frozenset(g.vertices)


def test_product_split():
    g = CORPUS["k23_plus"]
    cls = classify(g, witnesses=False)
    assert cls.product_split[0] == cls.center_clique
    assert cls.product_split[0] | cls.product_split[1] == frozenset(g.vertices)
    assert not (cls.product_split[0] & cls.product_split[1])


def test_json_dict_shape():
    g = CORPUS["k23"]
    d = classify(g).to_json_dict(g)
    assert d["strongly_solid"] is False
    assert d["witnesses"]["zxf2_triple"] is not None
    assert d["witnesses"]["special_subgroup"]["shape"] == SHAPE_K23
