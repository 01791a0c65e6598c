"""Brute-force reference answers for small instances.

Scans every candidate text over the alphabet and keeps the ones whose
freshly built heap matches the input sketch under the matching rule of the
problem variant.  Deliberately knows nothing about suffix-link
reconstruction, multiplicities or Eulerian cycles, so it can sit on the
other side of a differential test from the real solvers.
"""

from itertools import product

from .errors import CapExceeded, UnlabeledInput
from .heap import Alphabet, build_position_heap, is_valid_text
from .sketch import HeapSketch, label_iso_map, numbered_shape_equal, tree_equal

_WORK_CAP = 10**7


def _shape_codes(s: HeapSketch) -> dict:
    """Label-free canonical parenthesis code per subtree."""
    codes = {}
    stack = [(s.root, False)]
    while stack:
        v, done = stack.pop()
        if done:
            codes[v] = "(" + "".join(sorted(codes[c] for c in s.children[v])) + ")"
        else:
            stack.append((v, True))
            stack.extend((c, False) for c in s.children[v])
    return codes


def _link_iso_exists(x: HeapSketch, y: HeapSketch) -> bool:
    """Root-preserving tree isomorphism that also carries links onto links.

    Plain backtracking over shape-compatible sibling matchings; link
    consistency is checked once a full mapping is on the table.
    """
    if x.n != y.n:
        return False
    cx, cy = _shape_codes(x), _shape_codes(y)
    if cx[x.root] != cy[y.root]:
        return False
    mapping = {x.root: y.root}
    taken = {y.root}
    order = [v for v in x.nodes() if v != x.root]

    def final_ok() -> bool:
        return all(mapping[x.links[v]] == y.links.get(mapping[v]) for v in x.links)

    def extend(i: int) -> bool:
        if i == len(order):
            return final_ok()
        v = order[i]
        for w in y.children[mapping[x.parent[v]]]:
            if w in taken or cy[w] != cx[v]:
                continue
            mapping[v] = w
            taken.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            taken.discard(w)
        return False

    return extend(0)


def _matches(built, s: HeapSketch, kind: int) -> bool:
    if kind == 1:
        return tree_equal(built.to_sketch(labeled=True, links=False), s, respect_numbers=True)
    if kind == 2:
        return numbered_shape_equal(built.to_sketch(labeled=False, links=False), s)
    if kind == 3:
        bs = built.to_sketch(numbered=False, labeled=True, links=False)
        return label_iso_map(bs, s) is not None
    if kind == 4:
        bs = built.to_sketch(numbered=False, labeled=False, links=True)
        return _link_iso_exists(bs, s)
    raise ValueError("unknown problem kind %r" % kind)


def text_matches(text: str, s: HeapSketch, kind: int) -> bool:
    """True iff the heap of text matches s under the given problem's rule."""
    return is_valid_text(text) and _matches(build_position_heap(text), s, kind)


def brute_force_texts(s: HeapSketch, kind: int, alphabet: Alphabet | None = None, max_len: int = 10):
    """All texts of length s.n whose heap matches s, in lexicographic order.

    kind selects the matching rule: 1 exact numbered+labeled, 2 numbered
    shape, 3 labeled tree up to node identity, 4 shape plus links up to
    node identity.  Raises CapExceeded rather than starting a scan that
    cannot finish.
    """
    if alphabet is None:
        if not s.is_labeled and s.n > 0:
            raise UnlabeledInput("cannot derive an alphabet without labels")
        alphabet = Alphabet("".join(sorted(set(s.label.values())))) if s.n else Alphabet("a")
    if s.n > max_len:
        raise CapExceeded("tree has %d positions, brute-force cap is %d" % (s.n, max_len))
    if len(alphabet) ** s.n > _WORK_CAP:
        raise CapExceeded("%d^%d candidate texts is over the scan budget" % (len(alphabet), s.n))
    if kind in (1, 2) and not s.is_numbered:
        raise ValueError("problem %d needs a numbering" % kind)
    if kind == 3 and s.n > 0 and not s.is_labeled:
        raise UnlabeledInput("problem 3 needs labels")
    if kind == 4 and s.links is None:
        raise ValueError("problem 4 needs a link map")

    found = []
    for letters in product(alphabet.letters, repeat=s.n):
        text = "".join(letters)
        if not is_valid_text(text):
            continue
        if _matches(build_position_heap(text), s, kind):
            found.append(text)
    return found


def canonical_code(s: HeapSketch) -> str:
    """Canonical string of a labeled tree: children sorted by letter."""
    codes = {}
    stack = [(s.root, False)]
    while stack:
        v, done = stack.pop()
        if done:
            inner = "".join(sorted(s.label[c] + codes[c] for c in s.children[v]))
            codes[v] = "(" + inner + ")"
        else:
            stack.append((v, True))
            stack.extend((c, False) for c in s.children[v])
    return codes[s.root]


def random_valid_text(rng, alphabet: Alphabet, length: int) -> str:
    """Uniform-ish text with the end-letter rule honored by construction.

    The final letter is reserved up front and the prefix drawn from the
    rest, so it is not a uniform draw over all valid texts; good enough
    for fuzzing.
    """
    if length == 0:
        return ""
    if length > 1 and len(alphabet) < 2:
        raise ValueError("need at least two letters for texts this long")
    letters = alphabet.letters
    last = rng.choice(letters)
    rest = [c for c in letters if c != last]
    return "".join(rng.choice(rest) for _ in range(length - 1)) + last
