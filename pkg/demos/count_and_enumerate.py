"""Count and list the texts consistent with three erasure levels.

Usage: python3 demos/count_and_enumerate.py [text] [alphabet]

Takes one tree and strips it three ways: numbers only (which texts share
this numbered shape?), labels only (which texts have an isomorphic labeled
tree?), links only (same question knowing just the suffix links).  Counts
are exact; the listings below each count come from the streaming
enumerators and always match it.
"""

import sys
from itertools import islice

from posheap import (
    Alphabet,
    build_position_heap,
    count_p2,
    count_p3,
    count_p4,
    enum_p2,
    enum_p3,
    enum_p4,
)

SHOW = 12


def section(title, count, texts):
    print("%s: %d text(s)" % (title, count))
    shown = list(islice(texts, SHOW))
    for t in shown:
        print("  %s" % t)
    if count > len(shown):
        print("  ... %d more" % (count - len(shown)))
    print()


def main() -> int:
    text = sys.argv[1] if len(sys.argv) > 1 else "abaababc"
    alphabet = Alphabet(sys.argv[2] if len(sys.argv) > 2 else "abc")
    heap = build_position_heap(text)
    print("text %r over alphabet %r\n" % (text, alphabet.letters))

    numbered = heap.to_sketch(numbered=True, labeled=False, links=False)
    section("numbers only", count_p2(numbered, alphabet), enum_p2(numbered, alphabet))

    labeled = heap.to_sketch(numbered=False, labeled=True, links=False)
    section("labels only", count_p3(labeled), enum_p3(labeled))

    linked = heap.to_sketch(numbered=False, labeled=False, links=True)
    section("links only", count_p4(linked, alphabet), enum_p4(linked, alphabet))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
