"""Read and write graphs as DIMACS .col text or graph6 strings.

Both directions are exact: writing then reading reproduces the adjacency and
order bit for bit.  Parse failures raise GraphParseError with the offending
line or character position in the message.
"""

from __future__ import annotations

from pathlib import Path

from .graphs import Graph

FORMATS = ("dimacs", "graph6")

_EXTENSIONS = {
    ".col": "dimacs",
    ".dimacs": "dimacs",
    ".g6": "graph6",
    ".graph6": "graph6",
}

# Largest order the 4-byte graph6 size form can carry.
_GRAPH6_MAX_N = 258047


class GraphParseError(ValueError):
    """Malformed graph text; the message carries the position."""


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.edge_count}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_dimacs(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise GraphParseError(f"line {lineno}: second problem line")
            if len(fields) != 4 or fields[1] != "edge":
                raise GraphParseError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n = int(fields[2])
                int(fields[3])
            except ValueError:
                raise GraphParseError(f"line {lineno}: non-integer counts") from None
            if n < 0:
                raise GraphParseError(f"line {lineno}: negative order")
        elif fields[0] == "e":
            if n is None:
                raise GraphParseError(f"line {lineno}: edge before problem line")
            if len(fields) != 3:
                raise GraphParseError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphParseError(f"line {lineno}: non-integer endpoints") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(
                    f"line {lineno}: endpoint out of range 1..{n}"
                )
            if u == v:
                raise GraphParseError(f"line {lineno}: loop at vertex {u}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphParseError(f"line {lineno}: unknown record {fields[0]!r}")
    if n is None:
        raise GraphParseError("missing 'p edge' problem line")
    return Graph(n, edges)


def _pair_stream(n: int):
    """graph6 bit order: column v, rows 0..v-1, for v = 1..n-1."""
    for v in range(1, n):
        for u in range(v):
            yield u, v


def write_graph6(g: Graph) -> str:
    if g.n > _GRAPH6_MAX_N:
        raise ValueError(f"graph6 here covers order <= {_GRAPH6_MAX_N}, got {g.n}")
    if g.n <= 62:
        head = chr(63 + g.n)
    else:
        head = "~" + "".join(
            chr(63 + (g.n >> shift & 63)) for shift in (12, 6, 0)
        )
    body = []
    group = 0
    filled = 0
    for u, v in _pair_stream(g.n):
        group = group << 1 | (g.rows[u] >> v & 1)
        filled += 1
        if filled == 6:
            body.append(chr(63 + group))
            group = 0
            filled = 0
    if filled:
        body.append(chr(63 + (group << (6 - filled))))
    return head + "".join(body)


def read_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if "\n" in text.strip():
        raise GraphParseError("expected a single graph6 line")
    if not line:
        raise GraphParseError("empty graph6 string")
    if line[0] == "~":
        if len(line) < 4:
            raise GraphParseError("char 1: truncated extended size")
        if line[1] == "~":
            raise GraphParseError("char 2: 8-byte size form not supported")
        n = 0
        for pos, ch in enumerate(line[1:4], start=2):
            if not 63 <= ord(ch) <= 126:
                raise GraphParseError(f"char {pos}: byte out of graph6 range")
            n = n << 6 | (ord(ch) - 63)
        body = line[4:]
    else:
        if not 63 <= ord(line[0]) <= 126:
            raise GraphParseError("char 1: byte out of graph6 range")
        n = ord(line[0]) - 63
        body = line[1:]
    need_bits = n * (n - 1) // 2
    need_chars = (need_bits + 5) // 6
    if len(body) != need_chars:
        raise GraphParseError(
            f"body has {len(body)} chars, order {n} needs {need_chars}"
        )
    bits = 0
    for pos, ch in enumerate(body, start=1):
        if not 63 <= ord(ch) <= 126:
            raise GraphParseError(f"body char {pos}: byte out of graph6 range")
        bits = bits << 6 | (ord(ch) - 63)
    pad = need_chars * 6 - need_bits
    if pad and bits & ((1 << pad) - 1):
        raise GraphParseError("non-zero padding bits")
    bits >>= pad
    edges = []
    for k, (u, v) in enumerate(_pair_stream(n)):
        if bits >> (need_bits - 1 - k) & 1:
            edges.append((u, v))
    return Graph(n, edges)


def _detect_format(path: Path, fmt: str | None) -> str:
    if fmt is not None:
        if fmt not in FORMATS:
            raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
        return fmt
    ext = path.suffix.lower()
    if ext not in _EXTENSIONS:
        raise ValueError(
            f"cannot infer format from {path.name!r}; pass fmt or use one of "
            f"{sorted(_EXTENSIONS)}"
        )
    return _EXTENSIONS[ext]


def dumps(g: Graph, fmt: str) -> str:
    if fmt == "dimacs":
        return write_dimacs(g)
    if fmt == "graph6":
        return write_graph6(g) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def loads(text: str, fmt: str) -> Graph:
    if fmt == "dimacs":
        return read_dimacs(text)
    if fmt == "graph6":
        return read_graph6(text)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    p = Path(path)
    kind = _detect_format(p, fmt)
    return loads(p.read_text(), kind)


def write_graph(g: Graph, path: str | Path, fmt: str | None = None) -> None:
    p = Path(path)
    kind = _detect_format(p, fmt)
    p.write_text(dumps(g, kind))
