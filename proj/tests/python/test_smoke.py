from fractions import Fraction

import pytest

import joints


def complete(n):
    return joints.Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def test_graph_basics():
    g = joints.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.edge_count == 3
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.has_edge(2, 1)
    assert g.degrees() == [1, 2, 2, 1]
    assert g.neighbors(1) == [0, 2]


def test_errors_carry_their_kind():
    with pytest.raises(joints.JointsError) as info:
        joints.Graph(3, [(0, 0)])
    assert info.value.kind == "SelfLoop"
    with pytest.raises(ValueError):
        joints.gnm(10, 46, 1)


def test_turan():
    assert joints.turan_number(5, 3) == 8
    assert joints.turan_min_degree(5, 3) == 3
    t = joints.turan_graph(5, 3)
    assert t.edge_count == 8
    assert joints.is_turan_graph(t, 3)


def test_cliques_are_exact_python_ints():
    assert joints.count_cliques(complete(4), 3) == 4
    big = joints.count_cliques(complete(70), 35)
    assert big == 112186277816662845432
    assert joints.clique_spectrum(complete(4)) == [4, 6, 4, 1]
    assert joints.find_clique(complete(5), 3) == [0, 1, 2]
    assert joints.edge_clique_count(complete(5), 0, 1, 4) == 3
    rows = joints.moon_moser_report(complete(4))
    assert rows[0]["lhs"] == Fraction(-1) and rows[0]["holds"]


def test_joints():
    assert joints.jointsize(complete(4), 3) == (2, (0, 1))
    assert joints.jointsize(joints.turan_graph(6, 2), 3) == (0, None)
    cert = joints.extract_joint(complete(4), 3, (0, 1), 10)
    assert cert["size"] == "2" and cert["cliques"] == [[0, 1, 2], [0, 1, 3]]
    g = joints.turan_plus_edges(300, 2, 1, 7)
    found = joints.find_large_joint(g, 2)
    assert found["size"] == "150"
    assert found["bound"]["numerator"] == "75" and found["bound"]["denominator"] == "32"
    assert found["certificate_valid"]
    assert joints.tightness_ratio(9, 3) == 729
    out = joints.thexj_reduce(g, 2)
    assert out["tagged_property_holds"] and out["n_prime"] > 225


def test_stability():
    g = joints.turan_graph_plus_edge(300, 2)
    report = joints.check_stability(g, 2, Fraction(1, 10000))
    assert report["branch"] == "JointBranch"
    report = joints.check_stability(joints.turan_graph(300, 2), 2, "1/10000")
    assert report["branch"] == "ChromaticBranch"
    with pytest.raises(joints.JointsError) as info:
        joints.check_stability(g, 2, "1/100")
    assert info.value.kind == "HypothesisViolated"


def test_inequalities():
    assert joints.intersection_sums(3, [[0, 1], [1, 2], [0, 1, 2]]) == [7, 5, 1]
    assert joints.typms_lower_bound(7, 3, 2) == 5
    ourb = joints.eval_bound("ourb", n=300, r=2)
    assert (ourb["numerator"], ourb["denominator"]) == ("75", "32")
    assert joints.eval_bound("lekd", n=9, r=3)["numerator"] == "1"
    assert "mindg" in joints.bound_names()
    with pytest.raises(joints.JointsError):
        joints.eval_bound("lok", n=3, r=2)


def test_generators_and_edge_lists(tmp_path):
    a = joints.gnm(20, 50, 3)
    assert a == joints.gnm(20, 50, 3)
    assert a.edge_count == 50
    path = tmp_path / "g.txt"
    joints.save_edge_list(a, str(path))
    assert joints.load_edge_list(str(path)) == a
    assert joints.parse_edge_list(joints.format_edge_list(a)) == a
    assert joints.turan_perturbed(12, 3, 2, 1, 5).edge_count == joints.turan_number(12, 3) - 1
