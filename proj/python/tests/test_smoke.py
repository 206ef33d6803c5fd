import pytest

import graphpoly as gp


def test_ids_and_classes():
    ids = gp.polynomial_ids()
    assert len(ids) == 18
    assert "covered_C" in ids and "char_adj" in ids
    assert gp.class_names() == ["all", "forests", "trees", "planar"]


def test_compute_accepts_text_and_graphs():
    assert gp.compute("dom", "A_") == "x^2 + 2*x"
    p5 = gp.Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5)])
    assert gp.compute("char_adj", p5) == "x^5 - 4*x^3 + 3*x"
    assert gp.compute("chromatic", gp.Graph("Bw")) == "x^3 - 3*x^2 + 2*x"
    value = gp.compute_json("dom", "A_")
    assert value["variables"] == ["x"]


def test_graph_roundtrip():
    g = gp.Graph("DhC")
    assert (g.order, g.size) == (5, 4)
    assert gp.Graph(g.graph6()).is_isomorphic(g)
    assert repr(g) == "Graph('DhC')"


def test_enumeration_counts():
    assert len(gp.enumerate_class("all", 5)) == 34
    assert len(gp.enumerate_class("trees", 8)) == 23
    assert len(gp.enumerate_class("all", 10, max_edges=9)) == 1808


def test_uniqueness_ratio():
    r = gp.uniqueness_ratio("char_adj", "trees", 8)
    assert r["class_size_unlabeled"] == 23
    assert r["unique_unlabeled"] == 21


def test_mates():
    hat = gp.Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (2, 4)])
    cert = gp.stem_toggle(hat)
    assert cert["equal"] and cert["nonisomorphic"]
    assert gp.stem_toggle("DhC") is None
    star = gp.Graph(5, [(1, 2), (1, 3), (1, 4), (1, 5)])
    c4k1 = gp.Graph(5, [(1, 2), (2, 3), (3, 4), (4, 1)])
    assert gp.verify_mate(star, c4k1, "char_adj")["equal"]
    assert not gp.verify_mate(star, c4k1, "dom")["equal"]
    (tree, u, v), = gp.find_pseudosimilar_trees(9, "cospectral")
    assert gp.Graph(tree).order == 9 and u != v


def test_audit_and_pendants():
    audit = gp.dp_chain_audit("all", 5)
    assert audit["ok"]
    freq = gp.pendant_frequency("A_", 1, "trees", 30, 200, 7)
    assert freq == gp.pendant_frequency("A_", 1, "trees", 30, 200, 7)
    assert freq["samples"] == 200


def test_errors():
    with pytest.raises(ValueError):
        gp.compute("hosoya", "A_")
    with pytest.raises(ValueError):
        gp.Graph("not graph6 ~~")
    with pytest.raises(gp.ResourceError):
        gp.enumerate_class("all", 10)
    with pytest.raises(gp.NotSupportedError):
        gp.pendant_frequency("A_", 1, "forests", 20, 10, 1)


def test_cli_in_process():
    code, out, err = gp.run_cli(["compute", "--poly", "dom"], "A_\n")
    assert (code, out, err) == (0, "x^2 + 2*x\n", "")
    code, _, err = gp.run_cli(["enumerate", "--class", "all", "--n", "10"])
    assert code == 2 and err.startswith("error: ")
