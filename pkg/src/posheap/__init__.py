"""Position heaps with suffix links, and source-text recovery from partial ones.

Build side: build_position_heap gives the heap of a text in linear time,
suffix links included.  Recovery side: a HeapSketch is a rooted tree that
kept only some annotations (numbers, edge labels, links), and the infer,
count and enum families answer which source texts could have produced it.
"""

from .dot import export_dot
from .ecp import (
    EulerCycle,
    Multigraph,
    check_eulerian,
    count_ecp,
    demote_priorities,
    enumerate_ecp,
    is_valid_cycle,
    solve_ecp,
)
from .errors import (
    AlphabetTooSmall,
    CapExceeded,
    FormatError,
    InvalidText,
    LinkInconsistent,
    NegativeSigma,
    NoSuchChild,
    PosheapError,
    UnknownLetter,
    UnlabeledInput,
)
from .heap import Alphabet, PositionHeap, build_position_heap, is_valid_text
from .infer import (
    Inferred,
    ProblemKind,
    count_p2,
    count_p3,
    count_p4,
    enum_p2,
    enum_p3,
    enum_p4,
    infer_p1,
    infer_p2,
    infer_p3,
    infer_p4,
)
from .oracle import brute_force_texts, canonical_code, random_valid_text, text_matches
from .pht import parse_pht, write_pht
from .sketch import HeapSketch, label_iso_map, numbered_shape_equal, tree_equal
from .trace import (
    TraceGraph,
    build_trace_graph,
    compute_sigma,
    propagate_labels,
    read_text_from_cycle,
    reconstruct_suffix_links,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AlphabetTooSmall",
    "CapExceeded",
    "EulerCycle",
    "FormatError",
    "HeapSketch",
    "Inferred",
    "InvalidText",
    "LinkInconsistent",
    "Multigraph",
    "NegativeSigma",
    "NoSuchChild",
    "PosheapError",
    "PositionHeap",
    "ProblemKind",
    "TraceGraph",
    "UnknownLetter",
    "UnlabeledInput",
    "brute_force_texts",
    "build_position_heap",
    "build_trace_graph",
    "canonical_code",
    "check_eulerian",
    "count_ecp",
    "count_p2",
    "count_p3",
    "count_p4",
    "demote_priorities",
    "enum_p2",
    "enum_p3",
    "enum_p4",
    "enumerate_ecp",
    "export_dot",
    "infer_p1",
    "infer_p2",
    "infer_p3",
    "infer_p4",
    "is_valid_cycle",
    "is_valid_text",
    "label_iso_map",
    "numbered_shape_equal",
    "parse_pht",
    "propagate_labels",
    "random_valid_text",
    "read_text_from_cycle",
    "reconstruct_suffix_links",
    "solve_ecp",
    "text_matches",
    "tree_equal",
    "compute_sigma",
    "write_pht",
]
