"""Smoke test for the `pcc` extension module.

Build and install first:  pip install --no-build-isolation ./crates/python
Then run:                  python python/smoke_test.py
"""

import itertools

import pcc


def check(cond, what):
    if not cond:
        raise SystemExit(f"FAIL: {what}")
    print(f"ok   {what}")


def main():
    p4 = pcc.Graph.generate("path", n=4)
    check(p4.n == 4 and p4.m == 3, "P4 has 4 vertices and 3 edges")
    check(p4.edges == [(0, 1), (1, 2), (2, 3)], "P4 edge order")
    check(pcc.Graph.from_edge_list(p4.to_edge_list()) == p4, "edge-list round trip")

    check(pcc.verify(p4, [1, 2, 1], ell=2) == (0, 3), "1,2,1 on P4 fails at (0, 3)")
    check(pcc.verify(p4, [1, 2, 3], ell=2) is None, "1,2,3 on P4 verifies")
    check(pcc.find_path(p4, [1, 2, 3], 0, 3, ell=2) == [0, 1, 2, 3], "witness path")
    check(not pcc.is_distance_proper([1, 2, 1], 2), "window rule")

    c4 = pcc.Graph.generate("cycle", n=4)
    found = pcc.min_colors_exact(c4, 2)
    check(found is not None and found[0] == 2, "exact pc_{1,2}(C4) = 2")
    check(pcc.verify(c4, found[1], 2) is None, "exact witness verifies")

    w = pcc.color_wheel(9)
    w9 = pcc.Graph.generate("wheel", n=9)
    check(w.num_colors == 3 and pcc.verify(w9, w.colors, 2) is None, "W9 three colors")
    check(pcc.prove_lower_bound(w9, 2, 2) is True, "W9 needs three colors")

    tree = pcc.Graph.generate("random_tree", n=10, seed=7)
    r = pcc.color_tree(tree, 2)
    check(r.num_colors == pcc.sigma2_prime(tree) - 1, "tree uses sigma2' - 1 colors")
    check(pcc.verify(tree, r.colors, 2) is None, "tree coloring verifies")

    k = pcc.color_complete_bipartite(2, 5, 2)
    check(k.claimed == 3 and pcc.verify(pcc.Graph.generate("complete_bipartite", m=2, n=5), k.colors, 2) is None,
          "K_{2,5} three colors")
    check(pcc.balanced_split([2, 3, 3, 4]) is not None, "balanced split exists")

    q3 = pcc.Graph.generate("hypercube", t=3)
    check(pcc.verify(q3, pcc.color_hypercube(3, 2).colors, 2) is None, "Q3 coloring verifies")

    g = pcc.Graph.generate("random_2connected", n=9, m=14, seed=3)
    base, ears = pcc.ear_decomposition(g)
    check(len(base) >= 3 and pcc.is_2_connected(g), "ear decomposition")
    r = pcc.color_2connected(g)
    check(r.num_colors <= 5 and pcc.verify(g, r.colors, 2) is None, "2-connected at most five colors")

    h = pcc.Graph.generate("cycle", n=5)
    r = pcc.color_join(p4, h)
    check(pcc.verify(p4.join(h), r.colors, 2) is None, "join verifies")
    r = pcc.color_cartesian(p4, h)
    check(r.num_colors == 3 and pcc.verify(p4.cartesian(h), r.colors, 2) is None, "cartesian three colors")

    for alpha in itertools.permutations(range(1, 5)):
        r = pcc.color_permutation_graph(p4, [0, 1, 2, 3], list(alpha), 2)
        assert pcc.verify(p4.permutation_graph(list(alpha)), r.colors, 2) is None, alpha
    check(True, "all 24 permutation graphs of P4 verify")

    try:
        pcc.color_tree(c4, 2)
    except ValueError:
        check(True, "non-tree raises ValueError")
    else:
        check(False, "non-tree raises ValueError")
    print("smoke test passed")


if __name__ == "__main__":
    main()
