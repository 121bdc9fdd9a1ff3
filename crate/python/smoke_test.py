"""Quick check that the compiled extension loads and agrees with known answers.

Build it first:  pip install --no-build-isolation ./crates/python
"""

import toeplitz


def main():
    g = toeplitz.ToeplitzGraph(30, [5, 10, 15])
    assert g.n == 30 and g.offsets == [5, 10, 15]
    assert g.edge_count() == 60

    claw = g.classify_claw_free()
    assert claw["claw_free"] and claw["rule"] == "Cocoonery"
    assert not g.classify_line_graph()["is_line"]

    comps = g.components()
    assert comps["component_count"] == 5
    assert all(c["target"]["order"] == 6 for c in comps["components"])

    bad = toeplitz.ToeplitzGraph(12, [1, 5, 6]).classify_claw_free(witness=True)
    assert not bad["claw_free"]
    assert bad["witness"] == (6, [1, 5, 12])

    line = toeplitz.ToeplitzGraph(10, [3, 6]).classify_line_graph()
    assert line["is_line"]
    assert line["component_multiset"] == [["K3", 2], ["Diamond", 1]]

    assert toeplitz.ToeplitzGraph(13, [1, 2]).cycle_decomposition() is None
    assert toeplitz.ToeplitzGraph(12, [4, 8]).cycle_decomposition() == {"cycles": 4, "length": 3}

    claw_graph = toeplitz.Graph(4, [(1, 2), (1, 3), (1, 4)])
    assert claw_graph.find_claw() == (1, [2, 3, 4])
    assert claw_graph.line_graph_root() is None
    assert toeplitz.Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).find_hole() is not None

    try:
        toeplitz.ToeplitzGraph(5, [5])
    except toeplitz.ToeplitzError:
        pass
    else:
        raise AssertionError("offset equal to n must be rejected")

    try:
        toeplitz.ToeplitzGraph(80, [3, 5]).classify_line_graph()
    except toeplitz.BoundExceeded:
        pass
    else:
        raise AssertionError("expected the line-graph oracle bound to be hit")

    explanation = toeplitz.ToeplitzGraph(12, [4, 8]).explain()
    assert explanation["claw_free"]["trace"]["steps"][0]["rule"] == "K1Paths"

    print("smoke test passed")


if __name__ == "__main__":
    main()
