"""The Eulerian-cycle-with-priorities solver on a standalone instance.

Usage: python3 demos/priority_eulerian.py

This is the engine under problems 3 and 4, shown without any trees: a
directed multigraph, a root, and priority edges that must be their node's
first departure.  One solution is found greedily along a spanning tree
oriented toward the root, the exact count comes from a determinant, and
the enumerator streams every solution in a fixed order.
"""

from posheap import (
    Multigraph,
    count_ecp,
    demote_priorities,
    enumerate_ecp,
    is_valid_cycle,
    solve_ecp,
)


def show(g, f, r):
    total = count_ecp(g, f, r)
    print("priority %-20s -> %d cycle(s)" % (sorted(f) or "(none)", total))
    seen = 0
    for c in enumerate_ecp(g, f, r):
        assert is_valid_cycle(g, f, r, c)
        print("   " + " ".join("%s>%s" % e for e in c))
        seen += 1
    assert seen == total  # the count and the stream agree by construction
    sol = solve_ecp(g, f, r)
    assert (sol is not None) == (total > 0)


def main() -> int:
    # three copies of r->x, two ways back, and a detour through y
    g = Multigraph([("r", "x", 3), ("x", "r", 2), ("x", "y", 1), ("y", "r", 1)])
    print("edges: %s\n" % ["%s>%s x%d" % (u, v, g.gamma[(u, v)]) for u, v in g.edges()])

    # unconstrained, then forcing x to leave toward y first
    show(g, frozenset(), "r")
    show(g, frozenset({("x", "y")}), "r")

    # marking y's only out-edge adds nothing; demotion removes it
    f = frozenset({("x", "y"), ("y", "r")})
    print("\ndemote %s -> %s" % (sorted(f), sorted(demote_priorities(g, f))))
    show(g, f, "r")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
