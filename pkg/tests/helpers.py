"""Naive reference implementations the tests trust over the package.

Everything here goes straight from a definition, with no sharing of code or
ideas with the real implementations: quadratic scans, exhaustive
backtracking.  Slow on purpose.
"""

from itertools import product


def naive_heap(text: str):
    """(parent, label, node_string, links) by the defining shortest-new-prefix rule."""
    by_string = {"": 0}
    parent = {}
    label = {}
    node_string = {0: ""}
    for i in range(1, len(text) + 1):
        suffix = text[i - 1 :]
        for d in range(1, len(suffix) + 1):
            w = suffix[:d]
            if w not in by_string:
                by_string[w] = i
                parent[i] = by_string[w[:-1]]
                label[i] = w[-1]
                node_string[i] = w
                break
        else:
            raise AssertionError("no fresh prefix; text must be invalid: %r" % text)
    links = {i: by_string[node_string[i][1:]] for i in range(1, len(text) + 1)}
    return parent, label, node_string, links


def all_valid_texts(letters: str, max_len: int):
    """Every text over letters, length 0..max_len, whose last letter is unique."""
    yield ""
    for n in range(1, max_len + 1):
        for tup in product(letters, repeat=n):
            if tup[-1] not in tup[:-1]:
                yield "".join(tup)


def brute_ecp_cycles(gamma: dict, f, r, cap: int = 500000):
    """All Eulerian arc sequences from r that respect the priorities.

    gamma maps (u, v) to multiplicity.  A node's priority edge, if any, must
    be its first departure.  Exhaustive backtracking; raises if the search
    would overrun cap leaves (so a miscooked test fails instead of hanging).
    """
    out = {}
    for (u, v), m in gamma.items():
        assert u != v and m >= 1
        out.setdefault(u, []).append((u, v))
    for u in out:
        out[u].sort(key=repr)
    prio = {}
    for u, v in f:
        assert gamma.get((u, v), 0) == 1
        assert u not in prio
        prio[u] = (u, v)
    remaining = dict(gamma)
    total = sum(gamma.values())
    found = []
    seq = []
    departed = set()

    def rec(at):
        if len(found) >= cap:
            raise AssertionError("brute-force cap hit")
        if len(seq) == total:
            if at == r:
                found.append(tuple(seq))
            return
        first = at not in departed
        if first and at in prio and remaining.get(prio[at], 0) > 0:
            choices = [prio[at]]
        else:
            choices = [e for e in out.get(at, ()) if remaining[e] > 0]
        if first:
            departed.add(at)
        for e in choices:
            remaining[e] -= 1
            seq.append(e)
            rec(e[1])
            seq.pop()
            remaining[e] += 1
        if first:
            departed.discard(at)

    rec(r)
    return found


def random_walk_instance(rng, max_nodes: int = 5, max_steps: int = 8):
    """Eulerian-by-construction instance: a random closed walk plus legal priorities."""
    k = rng.randint(1, max_nodes)
    r = 0
    gamma = {}
    at = r
    for _ in range(rng.randint(0, max_steps)):
        if k == 1:
            break
        nxt = rng.randrange(k)
        if nxt == at:
            nxt = (at + 1) % k
        gamma[(at, nxt)] = gamma.get((at, nxt), 0) + 1
        at = nxt
    if at != r:
        gamma[(at, r)] = gamma.get((at, r), 0) + 1
    return gamma, random_priorities(rng, gamma), r


def random_priorities(rng, gamma: dict):
    """Legal priority set: at most one multiplicity-1 out-edge per tail."""
    by_tail = {}
    for (u, v), m in gamma.items():
        if m == 1:
            by_tail.setdefault(u, []).append((u, v))
    f = set()
    for u, singles in by_tail.items():
        if rng.random() < 0.5:
            f.add(rng.choice(singles))
    return f


def random_soup(rng, max_nodes: int = 5, max_arcs: int = 8):
    """Arbitrary arc soup; usually not Eulerian at all."""
    k = rng.randint(1, max_nodes)
    gamma = {}
    for _ in range(rng.randint(0, max_arcs)):
        u, v = rng.randrange(k), rng.randrange(k)
        if u != v:
            gamma[(u, v)] = gamma.get((u, v), 0) + 1
    return gamma, random_priorities(rng, gamma), 0
