"""Build the position heap of a text and print it two ways.

Usage: python3 demos/build_and_render.py [text]

Prints the PHT document (the package's interchange format) followed by a
Graphviz rendering.  Pipe the second half into `dot -Tpng` to get the
picture: solid arrows are tree edges, dashed arrows are the suffix links.
"""

import sys

from posheap import build_position_heap, export_dot, write_pht


def main() -> int:
    text = sys.argv[1] if len(sys.argv) > 1 else "abaababc"
    heap = build_position_heap(text)
    sketch = heap.to_sketch(numbered=True, labeled=True, links=True)

    print("# %d positions, %d nodes" % (heap.n, heap.n + 1))
    print(write_pht(sketch))
    print(export_dot(sketch, name="heap"))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
