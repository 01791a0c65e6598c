"""Recovering source texts from partially erased position heaps.

Four variants, numbered the way the CLI exposes them, by what the input
sketch still carries:

  1  numbers and labels   the text is forced letter by letter
  2  numbers only         labels follow from any injective root assignment
  3  labels only          links, multiplicities and an Eulerian cycle
  4  links only           root assignment propagates labels, then as in 3

Every solve path verifies by rebuilding the heap of the candidate text and
comparing against the input at the right strictness; counts are only
reported once the canonical solution has verified.  Each problem also has
counting and streaming enumeration variants (except 1, whose answer is
unique when it exists).
"""

from dataclasses import dataclass
from enum import Enum
from itertools import permutations, product
from math import factorial

from .ecp import count_ecp, enumerate_ecp, solve_ecp
from .errors import (
    AlphabetTooSmall,
    InvalidText,
    LinkInconsistent,
    NegativeSigma,
    NoSuchChild,
)
from .heap import Alphabet, build_position_heap, is_valid_text
from .sketch import HeapSketch, label_iso_map, numbered_shape_equal, tree_equal
from .trace import (
    build_trace_graph,
    compute_sigma,
    propagate_labels,
    read_text_from_cycle,
    reconstruct_suffix_links,
)


class ProblemKind(Enum):
    """Which annotation layers the input still has."""

    NUMBERED_LABELED = 1
    NUMBERED = 2
    LABELED = 3
    LINKS_ONLY = 4

    @classmethod
    def for_sketch(cls, s: HeapSketch):
        if s.is_numbered and s.is_labeled:
            return cls.NUMBERED_LABELED
        if s.is_numbered:
            return cls.NUMBERED
        if s.is_labeled:
            return cls.LABELED
        return cls.LINKS_ONLY


@dataclass(frozen=True)
class Inferred:
    """A recovered text plus the annotations the input was missing."""

    text: str
    numbering: dict
    labels: dict


def _falling(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out


# --- problem 1: numbers and labels present ----------------------------------


def _first_letters(s: HeapSketch, labels: dict) -> dict:
    """Per node, the first letter on its root path (roots get their own)."""
    first = {}
    for u, v, _ in s.edge_list:
        first[v] = labels[v] if u == s.root else first[u]
    return first


def _text_by_numbers(s: HeapSketch, first: dict) -> str:
    byn = s.node_by_number()
    return "".join(first[byn[i]] for i in range(1, s.n + 1))


def infer_p1(s: HeapSketch) -> Inferred | None:
    """The unique candidate text, or None if the sketch lies about itself."""
    if not (s.is_numbered and s.is_labeled):
        raise ValueError("problem 1 needs numbering and labels")
    text = _text_by_numbers(s, _first_letters(s, s.label))
    if not is_valid_text(text):
        return None
    built = build_position_heap(text)
    if not tree_equal(built.to_sketch(labeled=True, links=False), s, respect_numbers=True):
        return None
    return Inferred(text, dict(s.numbering), dict(s.label))


# --- problem 2: numbers only -------------------------------------------------


def _root_anchor_positions(s: HeapSketch):
    """For each position 1..n, the index of the root child above its node."""
    roots = s.children[s.root]
    slot = {c: i for i, c in enumerate(roots)}
    anchor = {}
    for u, v, _ in s.edge_list:
        anchor[v] = slot[v] if u == s.root else anchor[u]
    byn = s.node_by_number()
    return roots, [anchor[byn[i]] for i in range(1, s.n + 1)]


def _p2_check(s: HeapSketch, alphabet: Alphabet):
    if not s.is_numbered:
        raise ValueError("problem 2 needs a numbering")
    k = len(s.children[s.root])
    if k > len(alphabet):
        raise AlphabetTooSmall("root has %d children, alphabet only %d letters" % (k, len(alphabet)))
    return k


def infer_p2(s: HeapSketch, alphabet: Alphabet) -> Inferred | None:
    """Canonical root assignment (alphabet order along child order)."""
    k = _p2_check(s, alphabet)
    roots, anchors = _root_anchor_positions(s)
    letters = alphabet.letters[:k]
    text = "".join(letters[a] for a in anchors)
    if not is_valid_text(text):
        return None
    built = build_position_heap(text)
    if not numbered_shape_equal(built.to_sketch(labeled=False, links=False), s):
        return None
    byn = s.node_by_number()
    labels = {byn[i]: built.label[i] for i in range(1, s.n + 1)}
    return Inferred(text, dict(s.numbering), labels)


def count_p2(s: HeapSketch, alphabet: Alphabet) -> int:
    """Falling factorial |a|!/(|a|-k)!; any one valid labeling implies all.

    Relabeling letters bijectively commutes with heap construction, so
    validity cannot depend on which distinct letters the roots get.
    """
    k = _p2_check(s, alphabet)
    if infer_p2(s, alphabet) is None:
        return 0
    return _falling(len(alphabet), k)


def enum_p2(s: HeapSketch, alphabet: Alphabet):
    """All texts, one per injective root assignment, lexicographic."""
    k = _p2_check(s, alphabet)
    if infer_p2(s, alphabet) is None:
        return
    _, anchors = _root_anchor_positions(s)
    first = True
    for chosen in permutations(alphabet.letters, k):
        text = "".join(chosen[a] for a in anchors)
        if first:
            built = build_position_heap(text)
            assert numbered_shape_equal(built.to_sketch(labeled=False, links=False), s)
            first = False
        yield text


# --- problem 3: labels only --------------------------------------------------


def _p3_trace(s: HeapSketch):
    """Labeled sketch -> trace graph, or None when any stage rejects it."""
    if s.n > 0 and not s.is_labeled:
        raise ValueError("problem 3 needs labels")
    try:
        links = reconstruct_suffix_links(s)
        sigma = compute_sigma(s, links)
    except (NoSuchChild, NegativeSigma):
        return None
    except ValueError:
        # duplicate sibling labels; nothing else can raise here on a
        # labeled sketch since reconstructed links are always total
        return None
    return build_trace_graph(s, links, sigma)


def _match_p3(s: HeapSketch, text: str):
    """Rebuild the heap of text and return the label iso onto s, or None."""
    if not is_valid_text(text):
        return None
    built = build_position_heap(text)
    iso = label_iso_map(built.to_sketch(numbered=False, labeled=True, links=False), s)
    if iso is None:
        return None
    return built, iso


def _solve_p3(s: HeapSketch, verify: bool = True):
    """(trace graph, Inferred | None) for a labeled sketch."""
    tg = _p3_trace(s)
    if tg is None:
        return None, None
    cycle = solve_ecp(tg.graph, tg.priority, tg.root)
    if cycle is None:
        return tg, None
    text, numbering = read_text_from_cycle(tg, cycle)
    if verify and _match_p3(s, text) is None:
        return tg, None
    return tg, Inferred(text, numbering, dict(s.label))


def infer_p3(s: HeapSketch, verify: bool = True) -> Inferred | None:
    """One source text for a labeled tree, or None.

    verify controls the closing cross-check that rebuilds the answer's heap
    and matches it against s.  The reconstruction itself already proves the
    answer on any tree the earlier stages accepted, so callers that re-check
    results on their own may pass verify=False to save one build pass.
    """
    return _solve_p3(s, verify=verify)[1]


def count_p3(s: HeapSketch) -> int:
    tg, found = _solve_p3(s)
    if found is None:
        return 0
    return count_ecp(tg.graph, tg.priority, tg.root)


def enum_p3(s: HeapSketch):
    """Every text whose heap matches s up to node identity, streamed."""
    tg, found = _solve_p3(s)
    if found is None:
        return
    first = True
    for cycle in enumerate_ecp(tg.graph, tg.priority, tg.root):
        text, _numbering = read_text_from_cycle(tg, cycle)
        if first:
            if _match_p3(s, text) is None:
                raise RuntimeError("enumerated text failed verification: %r" % text)
            first = False
        yield text


# --- problem 4: links only ---------------------------------------------------


def _p4_canonical(s: HeapSketch, alphabet: Alphabet):
    """Propagate the canonical assignment; None when links reject it."""
    if s.links is None:
        raise ValueError("problem 4 needs a link map")
    roots = s.children[s.root]
    if len(roots) > len(alphabet):
        raise AlphabetTooSmall(
            "root has %d children, alphabet only %d letters" % (len(roots), len(alphabet))
        )
    assignment = {c: alphabet.letters[i] for i, c in enumerate(roots)}
    try:
        return propagate_labels(s, assignment)
    except LinkInconsistent:
        return None


def _match_p4(s: HeapSketch, labeled: HeapSketch, text: str):
    """Problem-3 match plus the links must agree under the iso."""
    matched = _match_p3(labeled, text)
    if matched is None:
        return None
    built, iso = matched
    for v in range(1, built.n + 1):
        if s.links.get(iso[v]) != iso[built.slink[v]]:
            return None
    return iso


def infer_p4(s: HeapSketch, alphabet: Alphabet) -> Inferred | None:
    labeled = _p4_canonical(s, alphabet)
    if labeled is None:
        return None
    tg, found = _solve_p3(labeled)
    if found is None:
        return None
    if _match_p4(s, labeled, found.text) is None:
        return None
    return Inferred(found.text, found.numbering, dict(labeled.label))


def _shape_code(s: HeapSketch, top) -> str:
    """Canonical parenthesis code of the subtree under top, labels ignored."""
    code = {}
    stack = [(top, False)]
    while stack:
        v, done = stack.pop()
        if done:
            code[v] = "(" + "".join(sorted(code[c] for c in s.children[v])) + ")"
        else:
            stack.append((v, True))
            stack.extend((c, False) for c in s.children[v])
    return code[top]


def _root_symmetries(s: HeapSketch, labeled0: HeapSketch, alphabet: Alphabet):
    """Root-child permutations that extend to shape+link automorphisms.

    Tested by relabeling: rho qualifies iff permuting the canonical root
    letters by rho propagates to a labeled tree isomorphic to the canonical
    one.  Candidates only need trying within groups of equal subtree shape.
    """
    roots = s.children[s.root]
    assignment0 = {c: alphabet.letters[i] for i, c in enumerate(roots)}
    groups = {}
    for c in roots:
        groups.setdefault(_shape_code(s, c), []).append(c)
    group_lists = list(groups.values())
    symmetries = []
    for combo in product(*(permutations(g) for g in group_lists)):
        rho = {}
        for original, permuted in zip(group_lists, combo):
            rho.update(zip(original, permuted))
        relabeled = propagate_labels(s, {c: assignment0[rho[c]] for c in roots})
        if tree_equal(relabeled, labeled0, respect_numbers=False):
            symmetries.append(rho)
    return symmetries


def count_p4(s: HeapSketch, alphabet: Alphabet) -> int:
    """Distinct texts: cycle count times assignments, symmetry collapsed.

    Assignments related by a shape+link automorphism induce isomorphic
    labeled trees and therefore spell the same texts, so the assignment
    factor divides by the number of such automorphisms at the root.
    """
    labeled = _p4_canonical(s, alphabet)
    if labeled is None:
        return 0
    tg, found = _solve_p3(labeled)
    if found is None or _match_p4(s, labeled, found.text) is None:
        return 0
    base = count_ecp(tg.graph, tg.priority, tg.root)
    k = len(s.children[s.root])
    sym = len(_root_symmetries(s, labeled, alphabet))
    total = base * _falling(len(alphabet), k)
    assert total % sym == 0
    return total // sym


def enum_p4(s: HeapSketch, alphabet: Alphabet):
    """Distinct texts, streamed: orbit-minimal assignments times cycles."""
    labeled0 = _p4_canonical(s, alphabet)
    if labeled0 is None:
        return
    _tg, found = _solve_p3(labeled0)
    if found is None or _match_p4(s, labeled0, found.text) is None:
        return
    symmetries = _root_symmetries(s, labeled0, alphabet)
    roots = s.children[s.root]
    k = len(roots)
    links = dict(s.links)
    sigma = compute_sigma(s, links)
    first = True
    for chosen in permutations(alphabet.letters, k):
        base = tuple(alphabet.index(c) for c in chosen)
        pi = dict(zip(roots, chosen))
        minimal = True
        for rho in symmetries:
            acted = tuple(alphabet.index(pi[rho[c]]) for c in roots)
            if acted < base:
                minimal = False
                break
        if not minimal:
            continue
        labeled = propagate_labels(s, pi)
        tg = build_trace_graph(labeled, links, sigma)
        for cycle in enumerate_ecp(tg.graph, tg.priority, tg.root):
            text, _numbering = read_text_from_cycle(tg, cycle)
            if first:
                if _match_p4(s, labeled, text) is None:
                    raise RuntimeError("enumerated text failed verification: %r" % text)
                first = False
            yield text
