"""Smoke test for the beergraph extension module.

Build with `maturin develop` in crates/py, or copy the cdylib built by
`cargo build -p beergraph-py --features extension-module` next to this file
as beergraph.so.
"""

import beergraph

G15 = "000001000101001110011011011111"


def main():
    g = beergraph.ProperIntervalGraph(G15)
    assert len(g) == 15
    assert g.dist(13, 3) == 2

    assert g.beer_index([6]).beer_dist(13, 3) == 3
    two = g.beer_index([6, 8])
    assert two.beer_dist(13, 3) == 2
    assert two.beer_path(13, 3) == [13, 8, 3]
    compact = g.compact_index([6, 8], delta=3)
    assert compact.beer_dist(13, 3) == 2
    assert compact.delta == 3

    star = beergraph.IntervalGraph("00101011", rights=[2, 3, 4, 1])
    assert not star.is_proper()
    assert star.neighbours(1) == [2, 3, 4]
    assert star.beer_index([4]).beer_path(2, 3) == [2, 1, 4, 1, 3]

    assert beergraph.weighted_counts(4) == [1, 2, 7, 32, 166]
    assert beergraph.composition_weights(5)[1:] == [2, 7, 24, 82, 280]

    kind, endpoints, rights, beers = beergraph.parse_graph_file(f"kind: proper\nendpoints: {G15}\nbeer: 6 8\n")
    assert (kind, endpoints, beers) == ("proper", G15, [6, 8])

    try:
        beergraph.ProperIntervalGraph("0110")
    except ValueError:
        pass
    else:
        raise AssertionError("unbalanced string accepted")
    print("smoke test passed")


if __name__ == "__main__":
    main()
