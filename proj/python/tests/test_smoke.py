import pytest

import tgraph


def test_sequence_statistics():
    assert tgraph.h("100") == 2
    assert tgraph.h("") == 0
    assert tgraph.r("0010") == 3
    assert tgraph.is_subsequence("0011", "00111")
    assert not tgraph.is_subsequence("110", "101")


def test_invariants():
    rep = tgraph.invariants("011", [2])
    assert rep["n"] == 4
    assert rep["nu"] == 2
    assert rep["psi"] == 4
    assert rep["hamiltonian"]
    assert rep["kcore"] == {2: 4}


def test_build_and_recognize():
    order, edges = tgraph.build_graph("111")
    assert order == 4
    assert len(edges) == 6
    assert tgraph.recognize(order, edges) == "111"
    with pytest.raises(tgraph.Error, match="NotThreshold"):
        tgraph.recognize(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def test_distributions_are_exact_python_ints():
    d = tgraph.distribution(4, "matching")
    assert d == {"n": 4, "denominator": 8, "counts": {0: 1, 1: 4, 2: 3}}
    big = tgraph.distribution(80, "degeneracy")
    assert big["denominator"] == 2**79
    assert sum(big["counts"].values()) == 2**79
    closed = tgraph.distribution(9, "kcore", 2)
    assert closed["counts"][1] == closed["counts"][2] == 0
    nonzero = {v: c for v, c in closed["counts"].items() if c}
    assert tgraph.exhaustive(9, "kcore", 2)["counts"] == nonzero
    with pytest.raises(tgraph.Error):
        tgraph.distribution(2, "cycle")
    with pytest.raises(ValueError):
        tgraph.distribution(4, "girth")


def test_sampling_is_seeded():
    a = tgraph.sample(6, 50, 7)
    assert a == tgraph.sample(6, 50, 7)
    assert all(len(s) == 5 for s in a)
    mc = tgraph.monte_carlo(5, 5000, 3, "h", workers=2)
    assert mc["total"] == 5000
    assert mc == tgraph.monte_carlo(5, 5000, 3, "h", workers=1)


def test_uniformity_and_verify():
    res = tgraph.uniformity_test(4, 8000, 11)
    assert res["df"] == 7
    assert sum(res["observed"]) == 8000
    assert not res["reject"]
    report = tgraph.verify(6, 2)
    assert report["passed"]
    assert report["failures"] == []
