"""Edge-list and graph6 (short form) codecs.

Edge-list format:
    # optional comment lines
    n m
    u v        (exactly m lines, 0 <= u < v < n, no duplicates)

graph6 short form (n <= 62): first byte n+63, then ceil(n(n-1)/2 / 6) bytes
of 63+6-bit groups over the upper triangle in column order, zero-padded.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from typing import Literal

from spectral_parity.exceptions import GraphParseError
from spectral_parity.graphs.graph import MAX_ORDER, Graph

GraphFormat = Literal["edgelist", "graph6"]

GRAPH6_MAX_ORDER = 62
GRAPH6_HEADER = ">>graph6<<"


def detect_format(text: str) -> GraphFormat:
    """Digit or '#' as first non-blank character means edge list, anything else graph6."""
    stripped = text.lstrip()
    if not stripped:
        raise GraphParseError("Empty graph input", line=1)
    first = stripped[0]
    return "edgelist" if first.isdigit() or first == "#" else "graph6"


def parse_graph(text: str, fmt: GraphFormat | None = None) -> Graph:
    """
    Parse a single graph from text.

    Args:
        text: Edge-list or graph6 text
        fmt: Force a format (default: auto-detect by first byte)

    Returns:
        Parsed Graph

    Raises:
        GraphParseError: On malformed input, with line/byte position
    """
    fmt = fmt or detect_format(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    lines = [line for line in text.splitlines() if line.strip()]
    if len(lines) != 1:
        raise GraphParseError(f"Expected one graph6 line, found {len(lines)}", line=1)
    return parse_graph6(lines[0], line=1)


def serialize_graph(G: Graph, fmt: GraphFormat = "edgelist") -> str:
    """Canonical text for a graph; parse_graph(serialize_graph(G, fmt), fmt) == G."""
    if fmt == "edgelist":
        return format_edge_list(G)
    if fmt == "graph6":
        return format_graph6(G)
    raise ValueError(f"Unknown graph format: {fmt!r}")


def _parse_int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError as e:
        raise GraphParseError(f"{what} is not an integer: {token!r}", line=line) from e


def parse_edge_list(text: str) -> Graph:
    """
    Parse the edge-list format.

    Raises:
        GraphParseError: Malformed header, wrong edge count, loops, duplicates,
            u >= v, or vertex index >= n

    Example:
        >>> parse_edge_list("3 2\\n0 1\\n1 2").edges()
        [(0, 1), (1, 2)]
    """
    header: tuple[int, int] | None = None
    rows: list[int] = []
    seen = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 2:
                raise GraphParseError(f"Header must be 'n m', got {line!r}", line=line_no)
            n = _parse_int(tokens[0], line_no, "Order n")
            m = _parse_int(tokens[1], line_no, "Edge count m")
            if n < 1:
                raise GraphParseError(f"Order must be >= 1, got {n}", line=line_no)
            if n > MAX_ORDER:
                raise GraphParseError(
                    f"Order {n} exceeds the supported maximum of {MAX_ORDER}", line=line_no
                )
            if m < 0 or m > n * (n - 1) // 2:
                raise GraphParseError(f"Edge count {m} impossible for order {n}", line=line_no)
            header = (n, m)
            rows = [0] * n
            continue
        n, m = header
        if len(tokens) != 2:
            raise GraphParseError(f"Edge line must be 'u v', got {line!r}", line=line_no)
        u = _parse_int(tokens[0], line_no, "Endpoint u")
        v = _parse_int(tokens[1], line_no, "Endpoint v")
        if u == v:
            raise GraphParseError(f"Loop edge ({u}, {v})", line=line_no)
        if not (0 <= u < v):
            raise GraphParseError(f"Edge must satisfy 0 <= u < v, got ({u}, {v})", line=line_no)
        if v >= n:
            raise GraphParseError(f"Vertex index {v} >= n = {n}", line=line_no)
        if rows[u] >> v & 1:
            raise GraphParseError(f"Duplicate edge ({u}, {v})", line=line_no)
        seen += 1
        if seen > m:
            raise GraphParseError(f"More than the declared {m} edges", line=line_no)
        rows[u] |= 1 << v
        rows[v] |= 1 << u

    if header is None:
        raise GraphParseError("Missing 'n m' header", line=1)
    if seen != header[1]:
        raise GraphParseError(f"Declared {header[1]} edges but found {seen}")
    return Graph(header[0], tuple(rows))


def format_edge_list(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.order} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines)


def parse_graph6(text: str, line: int | None = None) -> Graph:
    """
    Decode one graph6 string (short form only).

    Raises:
        GraphParseError: Bad order byte, long form, byte out of range,
            length mismatch, or nonzero padding

    Example:
        >>> parse_graph6("C~").edge_count
        6
    """
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER) :]
    if not data:
        raise GraphParseError("Empty graph6 string", line=line, byte=0)

    codes = [ord(ch) for ch in data]
    if codes[0] == 126:
        raise GraphParseError(
            f"graph6 long form (n > {GRAPH6_MAX_ORDER}) is not supported", line=line, byte=0
        )
    n = codes[0] - 63
    if not 1 <= n <= GRAPH6_MAX_ORDER:
        raise GraphParseError(f"Invalid graph6 order byte {data[0]!r}", line=line, byte=0)

    bit_count = n * (n - 1) // 2
    expected = 1 + (bit_count + 5) // 6
    if len(codes) != expected:
        raise GraphParseError(
            f"graph6 length mismatch for n={n}: expected {expected} bytes, got {len(codes)}",
            line=line,
            byte=min(len(codes), expected),
        )

    bits = []
    for position, code in enumerate(codes[1:], start=1):
        if not 63 <= code <= 126:
            raise GraphParseError(
                f"graph6 byte {chr(code)!r} outside '?'..'~'", line=line, byte=position
            )
        value = code - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[bit_count:]):
        raise GraphParseError("Nonzero graph6 padding bits", line=line, byte=len(codes) - 1)

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def format_graph6(G: Graph) -> str:
    if G.order > GRAPH6_MAX_ORDER:
        raise ValueError(f"graph6 short form supports n <= {GRAPH6_MAX_ORDER}, got {G.order}")
    bits = [int(G.has_edge(i, j)) for j in range(1, G.order) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    chars = [chr(G.order + 63)]
    for start in range(0, len(bits), 6):
        value = 0
        for bit in bits[start : start + 6]:
            value = (value << 1) | bit
        chars.append(chr(value + 63))
    return "".join(chars)


def read_graph6_stream(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """
    Yield (line number, graph) for every non-blank graph6 line.

    Raises:
        GraphParseError: On the first malformed line, with its line number
    """
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line == GRAPH6_HEADER:
            continue
        yield line_no, parse_graph6(line, line=line_no)
