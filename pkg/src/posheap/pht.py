"""Plain-text interchange format for heap sketches (PHT).

One directive per line; '#' starts a comment; blank lines are ignored.
Sections, in order:

    pht 1
    flags numbered=yes labeled=yes links=no
    alphabet abc            # optional
    root r
    edge r u a              # parent child letter ('-' when labels are off)
    edge u v b
    num r 0                 # only when numbered=yes, one line per node
    num u 1
    slink u r               # only when links=yes, one line per non-root node

Node ids are opaque tokens: no whitespace, no '#', and not the reserved
'-'.  Parents must be declared before their children.  The parser is
strict about flag/content agreement so a file cannot silently claim
annotations it does not carry.
"""

from .errors import FormatError, UnknownLetter
from .heap import Alphabet
from .sketch import HeapSketch

_FLAG_NAMES = ("numbered", "labeled", "links")


def _check_id(token: str, lineno: int) -> str:
    if token == "-" or "#" in token:
        raise FormatError("bad node id %r" % token, lineno)
    return token


def _check_letter(token: str, lineno: int) -> str:
    try:
        Alphabet(token)
    except UnknownLetter:
        raise FormatError("bad edge letter %r" % token, lineno) from None
    if len(token) != 1:
        raise FormatError("edge letter must be one symbol, got %r" % token, lineno)
    return token


def _parse_flags(args, lineno: int) -> dict:
    flags = {}
    for token in args:
        name, eq, value = token.partition("=")
        if name not in _FLAG_NAMES or not eq or value not in ("yes", "no"):
            raise FormatError("bad flag %r" % token, lineno)
        if name in flags:
            raise FormatError("flag %r given twice" % name, lineno)
        flags[name] = value == "yes"
    missing = [name for name in _FLAG_NAMES if name not in flags]
    if missing:
        raise FormatError("missing flags: %s" % ", ".join(missing), lineno)
    return flags


def parse_pht(text: str) -> HeapSketch:
    """Parse PHT source into a HeapSketch; FormatError carries the line."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((lineno, stripped.split()))
    if not lines:
        raise FormatError("empty input, expected 'pht 1' header")
    if lines[0][1] != ["pht", "1"]:
        raise FormatError("expected header 'pht 1'", lines[0][0])
    if len(lines) < 2 or lines[1][1][0] != "flags":
        raise FormatError("expected a flags line after the header")
    flags = _parse_flags(lines[1][1][1:], lines[1][0])

    alphabet_letters = None
    alphabet_line = None
    root = None
    declared = set()
    edges = []
    numbering = {}
    links = {}

    for lineno, tokens in lines[2:]:
        word, args = tokens[0], tokens[1:]
        if word == "alphabet":
            if len(args) != 1:
                raise FormatError("alphabet takes one token of letters", lineno)
            if alphabet_letters is not None:
                raise FormatError("alphabet given twice", lineno)
            alphabet_letters, alphabet_line = args[0], lineno
        elif word == "root":
            if len(args) != 1:
                raise FormatError("root takes one node id", lineno)
            if root is not None:
                raise FormatError("root given twice", lineno)
            root = _check_id(args[0], lineno)
            declared.add(root)
        elif word == "edge":
            if len(args) != 3:
                raise FormatError("edge takes parent, child and letter", lineno)
            if root is None:
                raise FormatError("edge before root", lineno)
            parent = _check_id(args[0], lineno)
            child = _check_id(args[1], lineno)
            if parent not in declared:
                raise FormatError("unknown parent %r" % parent, lineno)
            if child in declared:
                raise FormatError("node %r declared twice" % child, lineno)
            if flags["labeled"]:
                letter = _check_letter(args[2], lineno)
            elif args[2] != "-":
                raise FormatError("labeled=no but edge carries a letter", lineno)
            else:
                letter = None
            declared.add(child)
            edges.append((parent, child, letter))
        elif word == "num":
            if not flags["numbered"]:
                raise FormatError("num line but numbered=no", lineno)
            if len(args) != 2:
                raise FormatError("num takes a node id and a number", lineno)
            node = args[0]
            if node not in declared:
                raise FormatError("unknown node %r" % node, lineno)
            if node in numbering:
                raise FormatError("node %r numbered twice" % node, lineno)
            try:
                value = int(args[1])
            except ValueError:
                raise FormatError("bad number %r" % args[1], lineno) from None
            if value < 0:
                raise FormatError("numbers must not be negative", lineno)
            numbering[node] = value
        elif word == "slink":
            if not flags["links"]:
                raise FormatError("slink line but links=no", lineno)
            if len(args) != 2:
                raise FormatError("slink takes two node ids", lineno)
            tail, head = args
            if tail not in declared or head not in declared:
                raise FormatError("slink endpoints must be declared nodes", lineno)
            if tail == root:
                raise FormatError("the root cannot carry a link", lineno)
            if tail in links:
                raise FormatError("node %r linked twice" % tail, lineno)
            links[tail] = head
        else:
            raise FormatError("unknown directive %r" % word, lineno)

    if root is None:
        raise FormatError("missing root line")
    if flags["numbered"] and len(numbering) != len(declared):
        raise FormatError("numbered=yes but %d of %d nodes have numbers" % (len(numbering), len(declared)))
    if flags["links"] and len(links) != len(declared) - 1:
        raise FormatError("links=yes but %d of %d non-root nodes have links" % (len(links), len(declared) - 1))

    alphabet = None
    if alphabet_letters is not None:
        try:
            alphabet = Alphabet(alphabet_letters)
        except UnknownLetter as exc:
            raise FormatError(str(exc), alphabet_line) from None
        for _, child, letter in edges:
            if letter is not None and letter not in alphabet:
                raise FormatError("edge letter %r is outside the declared alphabet" % letter)

    try:
        return HeapSketch(
            root,
            edges,
            numbering=numbering if flags["numbered"] else None,
            links=links if flags["links"] else None,
            alphabet=alphabet,
        )
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def write_pht(s: HeapSketch) -> str:
    """Serialize a sketch in canonical section order.

    Node ids are written with str(); they must stay distinct and printable
    as PHT tokens after that.
    """
    names = {}
    for node in s.nodes():
        name = str(node)
        if name == "-" or "#" in name or not name or any(c.isspace() for c in name):
            raise ValueError("node id %r cannot be written as a PHT token" % name)
        names[node] = name
    if len(set(names.values())) != len(names):
        raise ValueError("node ids collide when written as strings")

    out = ["pht 1"]
    out.append(
        "flags numbered=%s labeled=%s links=%s"
        % tuple("yes" if flag else "no" for flag in (s.is_numbered, s.is_labeled, s.has_links))
    )
    if s.alphabet is not None:
        out.append("alphabet %s" % s.alphabet.letters)
    out.append("root %s" % names[s.root])
    for parent, child, letter in s.edge_list:
        out.append("edge %s %s %s" % (names[parent], names[child], letter if letter is not None else "-"))
    if s.is_numbered:
        for node in s.nodes():
            out.append("num %s %d" % (names[node], s.numbering[node]))
    if s.has_links:
        for node in s.nodes():
            if node in s.links:
                out.append("slink %s %s" % (names[node], names[s.links[node]]))
    return "\n".join(out) + "\n"
