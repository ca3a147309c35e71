"""Recompute the hand-checkable example values from the brute-force oracle only.

The printed values are frozen into the example tests under tests/; rerun this after any
change to the example timelines.
"""
from graphtimeline.oracle import (
    brute_connected,
    brute_exists,
    brute_forall,
    brute_forexists,
    brute_triangles,
    brute_two_edge_connected,
    replay,
)
from graphtimeline.timeline import parse_timeline
from graphtimeline.triangles import StaticGraph

TL1 = "timeline 3 4\ninit 1 2\n- 1 2\n+ 1 3\n+ 2 3\n"
TL2 = "timeline 3 4\ninit 1 2\ninit 1 3\ninit 2 3\n- 1 2\n+ 1 2\n- 2 3\n"


def main() -> None:
    tl1, tl2 = parse_timeline(TL1), parse_timeline(TL2)
    print("TL1 versions", [sorted(e) for e in replay(tl1)])
    print("TL2 versions", [sorted(e) for e in replay(tl2)])
    print("TL1 forall(1,3,3,4)", brute_forall(tl1, 1, 3, 3, 4))
    print("TL1 forall(1,2,1,4)", brute_forall(tl1, 1, 2, 1, 4))
    print("TL1 forall(1,2,1,1)", brute_forall(tl1, 1, 2, 1, 1))
    print("TL1 exists(1,2,1,4)", brute_exists(tl1, 1, 2, 1, 4))
    print("TL1 exists(1,2,2,3)", brute_exists(tl1, 1, 2, 2, 3))
    print("TL1 exists(2,3,1,3)", brute_exists(tl1, 2, 3, 1, 3))
    print("TL1 exists(1,2,1,3)", brute_exists(tl1, 1, 2, 1, 3))
    print("TL1 connected(1,3,@3)", brute_connected(tl1, 1, 3, 3))
    print("TL1 connected(2,3,@3)", brute_connected(tl1, 2, 3, 3))
    print("TL1 connected(1,2,@1)", brute_connected(tl1, 1, 2, 1))
    print("TL1 connected(1,2,@2)", brute_connected(tl1, 1, 2, 2))
    print("TL2 2ecc(1,3,@1)", brute_two_edge_connected(tl2, 1, 3, 1))
    print("TL2 2ecc(1,3,@2)", brute_two_edge_connected(tl2, 1, 3, 2))
    print("TL2 forexists(1,3,1,1)", brute_forexists(tl2, 1, 3, 1, 1))
    print("TL2 forexists(1,3,1,3)", brute_forexists(tl2, 1, 3, 1, 3))
    print("TL2 forexists(1,3,3,3)", brute_forexists(tl2, 1, 3, 3, 3))
    print("K3 triangles", brute_triangles(StaticGraph.build(3, [(1, 2), (2, 3), (1, 3)])))
    print("C4 triangles", brute_triangles(StaticGraph.build(4, [(1, 2), (2, 3), (3, 4), (1, 4)])))


if __name__ == "__main__":
    main()
