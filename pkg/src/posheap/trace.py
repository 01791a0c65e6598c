"""From a sketch to the multigraph whose Eulerian cycles spell its texts.

A full heap walks its text: hop to the link target of the current node,
descend one tree edge to the node of the next position, repeat.  Flattening
that walk gives a closed trail through the tree that uses every link once
and tree edges with definite multiplicities.  Those multiplicities are
forced by flow balance alone, so they can be recomputed from the bare tree
plus links; the resulting "trace graph" turns text recovery into finding an
Eulerian cycle that leaves every branching node through its link first.
"""

from dataclasses import dataclass, field

from .ecp import Multigraph
from .errors import LinkInconsistent, NegativeSigma, NoSuchChild
from .sketch import HeapSketch, _require_labeled


def reconstruct_suffix_links(s: HeapSketch) -> dict:
    """Recover the unique link map a labeled tree admits.

    Depth-1 nodes link to the root; deeper, the link of a c-child is the
    c-child of the parent's link.  Raises NoSuchChild when that child is
    missing, which proves no text produced this tree.  Needs labels and
    distinct sibling labels.
    """
    _require_labeled(s)
    index = {}
    for u, v, letter in s.edge_list:
        bucket = index.get(u)
        if bucket is None:
            bucket = index[u] = {}
        if letter in bucket:
            raise ValueError("sibling labels must be distinct per parent")
        bucket[letter] = v
    empty = {}
    links = {}
    root = s.root
    for u, v, letter in s.edge_list:  # parent-first order
        if u == root:
            links[v] = root
        else:
            t = index.get(links[u], empty).get(letter)
            if t is None:
                raise NoSuchChild(
                    "link target of %r needs a %r-child of %r" % (v, letter, links[u])
                )
            links[v] = t
    return links


def compute_sigma(s: HeapSketch, links: dict) -> dict:
    """Tree-edge multiplicities forced by flow balance.

    For the edge e into node v: sigma(e) = 1 - (links arriving at v) +
    (sigma of edges leaving v).  Unique bottom-up; a negative value raises
    NegativeSigma and proves the instance invalid.
    """
    for v in s.parent:
        if v not in links:
            raise ValueError("link map must be total on non-root nodes")
    arriving = {}
    for v in links.values():
        arriving[v] = arriving.get(v, 0) + 1
    sigma = {}
    leaving = {}
    for u, v, _ in reversed(s.edge_list):  # children before parents
        value = 1 - arriving.get(v, 0) + leaving.get(v, 0)
        if value < 0:
            raise NegativeSigma("edge into %r would need multiplicity %d" % (v, value))
        sigma[(u, v)] = value
        leaving[u] = leaving.get(u, 0) + value
    return sigma


@dataclass(frozen=True)
class TraceGraph:
    """Tree edges with positive multiplicity plus all link arcs.

    priority marks the link arcs that must be taken before any other
    departure from their tail; links classifies arcs for text readout;
    labels carries the tree-edge letters when the sketch had any.
    """

    graph: Multigraph
    root: object
    priority: frozenset
    links: frozenset
    labels: dict = field(default_factory=dict)
    sigma: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.links)


def build_trace_graph(s: HeapSketch, links: dict, sigma: dict) -> TraceGraph:
    """Assemble the trace graph; zero-multiplicity edges are dropped.

    A link arc gets priority iff its tail still has an outgoing tree edge
    after the drop (a node whose link is its only way out needs no
    constraint).  Edge order, and therefore every deterministic choice
    later, follows sketch document order.
    """
    arcs = []
    has_tree_out = set()
    for u, v, _ in s.edge_list:
        m = sigma[(u, v)]
        if m > 0:
            arcs.append((u, v, m))
            has_tree_out.add(u)
    link_arcs = []
    for v in s.nodes():
        if v in links:
            link_arcs.append((v, links[v]))
    arcs.extend((u, v, 1) for u, v in link_arcs)
    graph = Multigraph(arcs, nodes=s.nodes())
    priority = frozenset((u, v) for u, v in link_arcs if u in has_tree_out)
    labels = {}
    if s.is_labeled:
        for u, v, letter in s.edge_list:
            if sigma[(u, v)] > 0:
                labels[(u, v)] = letter
    return TraceGraph(
        graph=graph,
        root=s.root,
        priority=priority,
        links=frozenset(link_arcs),
        labels=labels,
        sigma=dict(sigma),
    )


def read_text_from_cycle(tg: TraceGraph, cycle) -> tuple:
    """Spell the text and the node numbering a cycle encodes.

    The i-th tree-arc occurrence carries letter i of the text; the tail of
    the i-th link occurrence is the node of position i; the root is node 0.
    """
    letters = []
    numbering = {tg.root: 0}
    position = 0
    for e in cycle.arcs:
        if e in tg.links:
            position += 1
            numbering[e[0]] = position
        else:
            letters.append(tg.labels[e])
    text = "".join(letters)
    assert len(text) == position == tg.n
    return text, numbering


def propagate_labels(s: HeapSketch, assignment: dict) -> HeapSketch:
    """Label a link-annotated shape from a root-edge assignment.

    Every deeper edge copies the label of the edge between the link targets
    of its endpoints, top-down by depth.  LinkInconsistent when the link map
    is not total on non-root nodes, touches the root, skips a depth level,
    or points between non-adjacent nodes.
    """
    links = s.links or {}
    if s.root in links:
        raise LinkInconsistent("the root cannot carry a link")
    for v in s.parent:
        if v not in links:
            raise LinkInconsistent("node %r has no link" % (v,))
        if s.depth[links[v]] != s.depth[v] - 1:
            raise LinkInconsistent("link of %r does not rise exactly one level" % (v,))

    roots = s.children[s.root]
    if set(assignment) != set(roots):
        raise ValueError("assignment must cover exactly the root's children")
    if len(set(assignment.values())) != len(roots):
        raise ValueError("assignment letters must be distinct")

    labels = {}
    for u, v, _ in sorted(s.edge_list, key=lambda t: s.depth[t[1]]):
        if u == s.root:
            labels[v] = assignment[v]
        else:
            su, sv = links[u], links[v]
            if s.parent.get(sv) != su:
                raise LinkInconsistent(
                    "links of %r and %r are not joined by an edge" % (u, v)
                )
            labels[v] = labels[sv]
    return s.with_labels(labels)
