"""Eulerian cycles with priority edges on directed multigraphs.

An instance is a directed multigraph g (edge multiplicities gamma >= 1, no
self-loops), a start node r, and a priority set f of edges with multiplicity
1, at most one per tail node.  A cycle from r that uses every edge exactly
gamma times "respects" f when no departure from a node u precedes the
priority edge out of u.  Parallel copies of an edge are indistinguishable:
cycles are compared as sequences of edges, not of copies.

solve_ecp finds one respecting cycle (or reports none), count_ecp counts
them all exactly, enumerate_ecp streams every one of them without
duplicates.  Counting is BEST-theorem style, adjusted for priorities by
removing priority edges from both the free orderings and the spanning-tree
sum; the arborescence total is a weighted matrix-tree determinant evaluated
fraction-free over Python ints, so counts are exact at any size.
"""

from math import factorial

from dataclasses import dataclass


class Multigraph:
    """Directed multigraph with integer edge multiplicities.

    Construction order is preserved and is the tie-breaking order for every
    deterministic choice downstream.  Instances are frozen after __init__ by
    convention; nothing in this package mutates them.
    """

    __slots__ = ("nodes", "node_index", "gamma", "out", "inn")

    def __init__(self, edges, nodes=()):
        # local bindings keep the per-edge loop cheap on large graphs
        node_list = self.nodes = []
        node_index = self.node_index = {}
        gamma = self.gamma = {}
        out = self.out = {}
        inn = self.inn = {}
        for u in nodes:
            if u not in node_index:
                node_index[u] = len(node_list)
                node_list.append(u)
                out[u] = []
                inn[u] = []
        for u, v, g in edges:
            if u == v:
                raise ValueError("self-loop %r is not allowed" % (u,))
            if g < 1:
                raise ValueError("multiplicity must be >= 1, got %r" % (g,))
            e = (u, v)
            if e in gamma:
                raise ValueError("duplicate edge %r" % (e,))
            for w in e:
                if w not in node_index:
                    node_index[w] = len(node_list)
                    node_list.append(w)
                    out[w] = []
                    inn[w] = []
            gamma[e] = g
            out[u].append(e)
            inn[v].append(e)

    def edges(self):
        return list(self.gamma)

    def total_multiplicity(self) -> int:
        return sum(self.gamma.values())

    def active_nodes(self):
        """Nodes touching at least one edge, in node order."""
        return [v for v in self.nodes if self.out[v] or self.inn[v]]


@dataclass(frozen=True)
class EulerCycle:
    """A cycle as the sequence of edges traversed, starting at start."""

    start: object
    arcs: tuple

    def __len__(self):
        return len(self.arcs)

    def __iter__(self):
        return iter(self.arcs)


@dataclass(frozen=True)
class OrientedTree:
    """One chosen out-edge per non-sink node, all paths leading to sink."""

    sink: object
    out_edge: dict


def check_priorities(g: Multigraph, f):
    """Raise ValueError unless f is a well-formed priority set for g."""
    tails = set()
    for e in f:
        if e not in g.gamma:
            raise ValueError("priority edge %r is not an edge" % (e,))
        if g.gamma[e] != 1:
            raise ValueError("priority edge %r must have multiplicity 1" % (e,))
        if e[0] in tails:
            raise ValueError("two priority edges leave node %r" % (e[0],))
        tails.add(e[0])


def demote_priorities(g: Multigraph, f):
    """Drop priority from every edge that is its tail's only out-edge.

    Such an edge is trivially the first departure whenever the node departs
    at all, so dropping it changes no answers.  Single pass.
    """
    return frozenset(e for e in f if len(g.out[e[0]]) > 1)


def check_eulerian(g: Multigraph, r) -> bool:
    """True iff an Eulerian cycle from r exists, ignoring priorities.

    Balance (in-multiplicity equals out-multiplicity everywhere) plus
    connectivity of the edge-touching nodes, which must include r unless the
    graph has no edges at all.
    """
    if not g.gamma:
        return True
    active = g.active_nodes()
    balance = {}
    for e, m in g.gamma.items():
        balance[e[0]] = balance.get(e[0], 0) + m
        balance[e[1]] = balance.get(e[1], 0) - m
    if any(balance.values()):
        return False
    if r not in g.node_index or not (g.out[r] or g.inn[r]):
        return False
    seen = {r}
    stack = [r]
    while stack:
        v = stack.pop()
        for e in g.out[v]:
            if e[1] not in seen:
                seen.add(e[1])
                stack.append(e[1])
        for e in g.inn[v]:
            if e[0] not in seen:
                seen.add(e[0])
                stack.append(e[0])
    return len(seen) == len(active)


def oriented_spanning_tree(g: Multigraph, sink) -> OrientedTree | None:
    """Pick one out-edge per node so that every node reaches sink.

    Breadth-first from sink over reversed edges; choices are deterministic
    in construction order.  None if any node of g cannot reach sink.
    """
    if sink not in g.node_index:
        return None
    choice = _tree_toward(g.nodes, g.inn, sink)
    if choice is None:
        return None
    return OrientedTree(sink, choice)


def _tree_toward(nodes, inn, sink):
    # BFS on reversed arcs; inn[w] lists arcs (u, w).
    choice = {}
    seen = {sink}
    queue = [sink]
    qi = 0
    while qi < len(queue):
        w = queue[qi]
        qi += 1
        for e in inn.get(w, ()):
            u = e[0]
            if u not in seen:
                seen.add(u)
                choice[u] = e
                queue.append(u)
    if len(seen) != len(nodes):
        return None
    return choice


def is_valid_cycle(g: Multigraph, f, r, cycle: EulerCycle) -> bool:
    """Independent validator: chained at r, exact edge counts, respects f.

    Shares no state with the solver or the enumerator; tests lean on it.
    """
    if cycle.start != r:
        return False
    at = r
    used = {}
    first_departure = {}
    for e in cycle.arcs:
        if e not in g.gamma or e[0] != at:
            return False
        if e[0] not in first_departure:
            first_departure[e[0]] = e
        used[e] = used.get(e, 0) + 1
        at = e[1]
    if at != r:
        return False
    if used != g.gamma and (used or g.gamma):
        return False
    for e in f:
        # Nothing out of e's tail may precede e.  Tails that never depart
        # cannot occur here because e itself must be used.
        if first_departure.get(e[0]) != e:
            return False
    return True


def _out_sans(g: Multigraph, f, active):
    """Out-adjacency restricted to active nodes, priority edges removed."""
    if not f:
        return {v: g.out[v] for v in active}
    return {v: [e for e in g.out[v] if e not in f] for v in active}


def _inn_sans(g: Multigraph, f, active):
    """In-adjacency restricted to active nodes, priority edges removed."""
    if not f:
        return {v: g.inn[v] for v in active}
    return {v: [e for e in g.inn[v] if e not in f] for v in active}


def solve_ecp(g: Multigraph, f, r) -> EulerCycle | None:
    """One respecting Eulerian cycle from r, or None if none exists.

    Walk from r taking the unused priority edge first when the current node
    has one, otherwise the next unused non-tree edge, and the spanning-tree
    edge only as last resort.  The tree is oriented toward r and avoids
    priority edges, which is exactly what makes the greedy walk complete.
    """
    check_priorities(g, f)
    f = demote_priorities(g, f)
    if not g.gamma:
        return EulerCycle(r, ())
    if not check_eulerian(g, r):
        return None
    active = g.active_nodes()
    tree = _tree_toward(active, _inn_sans(g, f, active), r)
    if tree is None:
        return None

    prio = {e[0]: e for e in f}
    remaining = dict(g.gamma)
    scan = {}
    ptr = {}
    for v in active:
        hv = tree.get(v)
        scan[v] = [e for e in g.out[v] if e != hv]
        ptr[v] = 0

    arcs = []
    append = arcs.append
    prio_get = prio.get
    tree_get = tree.get
    total = g.total_multiplicity()
    v = r
    for _ in range(total):
        e = prio_get(v)
        if e is None or remaining[e] != 1:
            e = None
            lst = scan[v]
            i = ptr[v]
            m = len(lst)
            while i < m and remaining[lst[i]] == 0:
                i += 1
            ptr[v] = i
            if i < m:
                e = lst[i]
            else:
                hv = tree_get(v)
                if hv is not None and remaining[hv] > 0:
                    e = hv
        if e is None:
            return None
        remaining[e] -= 1
        append(e)
        v = e[1]
    if v != r:
        return None
    return EulerCycle(r, tuple(arcs))


def count_ecp(g: Multigraph, f, r) -> int:
    """Exact number of respecting Eulerian cycles from r.

    BEST-style product over the priority-free graph: free departure
    orderings per node (parallel copies collapsed) times the weighted count
    of arborescences toward r, the latter via the matrix-tree determinant.
    """
    check_priorities(g, f)
    f = demote_priorities(g, f)
    if not g.gamma:
        return 1
    if not check_eulerian(g, r):
        return 0
    active = g.active_nodes()
    out2 = _out_sans(g, f, active)

    deg = {v: sum(g.gamma[e] for e in out2[v]) for v in active}
    # After demotion every edge-touching node keeps a priority-free
    # out-edge, so degrees are positive whenever balance held.
    num = deg[r]
    den = 1
    for v in active:
        num *= factorial(deg[v] - 1)
        for e in out2[v]:
            den *= factorial(g.gamma[e])
    trees = _arborescence_sum(active, out2, g.gamma, r)
    if trees == 0:
        return 0
    total = num * trees
    assert total % den == 0, "count lost exactness, which cannot happen"
    return total // den


def _arborescence_sum(active, out2, gamma, r):
    """Sum over arborescences toward r of the product of edge weights."""
    idx = {v: i for i, v in enumerate(active)}
    size = len(active)
    lap = [[0] * size for _ in range(size)]
    for v in active:
        i = idx[v]
        for e in out2[v]:
            w = gamma[e]
            lap[i][i] += w
            lap[i][idx[e[1]]] -= w
    ri = idx[r]
    minor = [
        [lap[i][j] for j in range(size) if j != ri]
        for i in range(size)
        if i != ri
    ]
    value = _det_bareiss(minor)
    assert value >= 0
    return value


def _det_bareiss(m):
    """Exact integer determinant, fraction-free Bareiss elimination."""
    size = len(m)
    if size == 0:
        return 1
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for i in range(k + 1, size):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[size - 1][size - 1]


def enumerate_ecp(g: Multigraph, f, r):
    """Yield every respecting Eulerian cycle from r exactly once.

    Cycles decompose uniquely into (arborescence of last exits, free
    departure orderings per node), so the stream walks all arborescences
    toward r that avoid priority edges, and for each one all per-node
    orderings with the tree edge's final copy pinned last and the priority
    edge pinned first.  Emission order is fixed; solutions are yielded one
    at a time with working state linear in the graph size.
    """
    check_priorities(g, f)
    f = demote_priorities(g, f)
    if not g.gamma:
        yield EulerCycle(r, ())
        return
    if not check_eulerian(g, r):
        return
    active = g.active_nodes()
    out2 = _out_sans(g, f, active)
    inn2 = _inn_sans(g, f, active)
    prio = {e[0]: e for e in f}
    total = g.total_multiplicity()

    for tree in _arborescences(active, inn2, r):
        makers = []
        for v in active:
            makers.append(_sequence_maker(v, out2[v], g.gamma, prio.get(v), tree.get(v)))
        gens = [mk() for mk in makers]
        current = [next(gn) for gn in gens]
        while True:
            cycle = _materialize(active, current, r, total)
            yield cycle
            k = len(gens) - 1
            while k >= 0:
                nxt = next(gens[k], None)
                if nxt is not None:
                    current[k] = nxt
                    break
                gens[k] = makers[k]()
                current[k] = next(gens[k])
                k -= 1
            if k < 0:
                break


def _sequence_maker(v, out_edges, gamma, prio_edge, tree_edge):
    """Restartable stream of full departure sequences for node v.

    Each sequence starts with the priority edge when v has one, ends with
    the tree edge when v is not the start, and permutes the remaining edge
    copies freely, duplicates collapsed, in out-edge order.
    """
    items = []
    for e in out_edges:
        c = gamma[e] - (1 if e == tree_edge else 0)
        if c > 0:
            items.append((e, c))
    head = (prio_edge,) if prio_edge is not None else ()
    tail = (tree_edge,) if tree_edge is not None else ()

    def make():
        for middle in _multiset_perms(items):
            yield head + middle + tail

    return make


def _multiset_perms(items):
    """Distinct permutations of [(value, count), ...] in item order."""
    total = sum(c for _, c in items)
    counts = [c for _, c in items]
    values = [v for v, _ in items]
    chosen = []

    def rec():
        if len(chosen) == total:
            yield tuple(chosen)
            return
        for i in range(len(values)):
            if counts[i]:
                counts[i] -= 1
                chosen.append(values[i])
                yield from rec()
                chosen.pop()
                counts[i] += 1

    return rec()


def _materialize(active, sequences, r, total):
    """Replay per-node departure sequences into the cycle they spell."""
    seq_of = dict(zip(active, sequences))
    ptr = {v: 0 for v in active}
    arcs = []
    v = r
    for _ in range(total):
        e = seq_of[v][ptr[v]]
        ptr[v] += 1
        arcs.append(e)
        v = e[1]
    assert v == r
    return EulerCycle(r, tuple(arcs))


def _arborescences(active, inn2, r):
    """All arborescences toward r, as dicts node -> chosen out-edge.

    Classic include/exclude enumeration over frontier edges with a
    reachability prune, so each tree is produced exactly once and dead
    branches are cut early.  Works on the reversed adjacency (inn2 lists
    arcs (u, w) by head w).
    """
    n_active = len(active)
    if r not in set(active):
        return
    tree = {}
    tree_nodes = {r}
    tree_order = [r]
    deleted = set()

    def extendable():
        reached = set(tree_nodes)
        stack = list(tree_nodes)
        while stack:
            w = stack.pop()
            for e in inn2.get(w, ()):
                if e in deleted:
                    continue
                u = e[0]
                if u not in reached:
                    reached.add(u)
                    stack.append(u)
        return len(reached) == n_active

    def pick():
        for w in tree_order:
            for e in inn2.get(w, ()):
                if e not in deleted and e[0] not in tree_nodes:
                    return e
        return None

    def rec():
        if len(tree_nodes) == n_active:
            yield dict(tree)
            return
        e = pick()
        if e is None:
            return
        u = e[0]
        tree[u] = e
        tree_nodes.add(u)
        tree_order.append(u)
        yield from rec()
        tree_order.pop()
        tree_nodes.remove(u)
        del tree[u]
        deleted.add(e)
        if extendable():
            yield from rec()
        deleted.remove(e)

    if extendable():
        yield from rec()
