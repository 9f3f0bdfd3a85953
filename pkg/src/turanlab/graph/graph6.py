"""graph6 / sparse6 interchange.

Input is validated byte by byte first so that malformed strings are
reported with an offset; the bit-level codec itself is networkx's.
"""

from __future__ import annotations

import networkx as nx

from turanlab.errors import Graph6DecodeError
from turanlab.graph.core import Graph, check_order


GRAPH6_HEADER = ">>graph6<<"
SPARSE6_HEADER = ">>sparse6<<"

_MIN_CHAR = 63
_MAX_CHAR = 126
_SHORT_ORDER_LIMIT = 62
_MEDIUM_ORDER_LIMIT = 258047


def _strip(text: str, header: str) -> tuple[str, int]:
    """Drop trailing whitespace and the optional header; return (payload, offset)."""
    text = text.rstrip()
    if text.startswith(header):
        return text[len(header) :], len(header)
    return text, 0


def _check_charset(payload: str, base: int, *, allow_colon: bool = False) -> None:
    for index, char in enumerate(payload):
        code = ord(char)
        if allow_colon and index == 0 and char == ":":
            continue
        if not _MIN_CHAR <= code <= _MAX_CHAR:
            raise Graph6DecodeError(
                f"character {char!r} outside the printable range 63..126",
                offset=base + index,
                text=payload,
            )


def _read_order(payload: str, base: int) -> tuple[int, int]:
    """Decode the vertex-count prefix; return (n, index of the first data byte)."""
    if not payload:
        raise Graph6DecodeError("missing vertex count", offset=base)

    values = [ord(c) - _MIN_CHAR for c in payload]
    if values[0] != _MAX_CHAR - _MIN_CHAR:
        return values[0], 1

    if len(values) > 1 and values[1] == _MAX_CHAR - _MIN_CHAR:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(values) < start + width:
        raise Graph6DecodeError("truncated vertex count", offset=base + len(values))

    n = 0
    for value in values[start : start + width]:
        n = n << 6 | value
    minimum = _SHORT_ORDER_LIMIT + 1 if width == 3 else _MEDIUM_ORDER_LIMIT + 1
    if n < minimum:
        raise Graph6DecodeError(
            f"vertex count {n} written in a longer form than needed", offset=base
        )
    return n, start + width


def graph6_decode(text: str) -> Graph:
    """Decode a graph6 string (header optional) into a :class:`Graph`."""
    payload, base = _strip(text, GRAPH6_HEADER)
    _check_charset(payload, base)
    n, data_start = _read_order(payload, base)
    check_order(n)

    bit_count = n * (n - 1) // 2
    expected = (bit_count + 5) // 6
    data = payload[data_start:]
    if len(data) < expected:
        raise Graph6DecodeError(
            f"truncated adjacency data: expected {expected} bytes, found {len(data)}",
            offset=base + len(payload),
        )
    if len(data) > expected:
        raise Graph6DecodeError(
            "trailing data after adjacency bits", offset=base + data_start + expected
        )
    padding = expected * 6 - bit_count
    if expected and (ord(data[-1]) - _MIN_CHAR) & ((1 << padding) - 1):
        raise Graph6DecodeError(
            "non-zero padding bits in last byte", offset=base + len(payload) - 1
        )

    decoded = nx.from_graph6_bytes(payload.encode("ascii"))
    return Graph.from_networkx(decoded)


def graph6_encode(g: Graph) -> str:
    """Encode ``g`` as standard graph6 without header or newline."""
    encoded: bytes = nx.to_graph6_bytes(g.to_networkx(), header=False)
    return encoded.rstrip(b"\n").decode("ascii")


def sparse6_decode(text: str) -> Graph:
    """Decode a sparse6 string (header optional); loops and multi-edges are rejected."""
    payload, base = _strip(text, SPARSE6_HEADER)
    if not payload.startswith(":"):
        raise Graph6DecodeError("sparse6 payload must start with ':'", offset=base)
    _check_charset(payload, base, allow_colon=True)
    n, _ = _read_order(payload[1:], base + 1)
    check_order(n)

    try:
        decoded = nx.from_sparse6_bytes(payload.encode("ascii"))
    except (nx.NetworkXError, ValueError, IndexError) as exc:
        raise Graph6DecodeError(f"invalid sparse6 data: {exc}", offset=base) from exc

    if decoded.is_multigraph() or nx.number_of_selfloops(decoded):
        raise Graph6DecodeError("sparse6 input is not a simple graph", offset=base)
    return Graph.from_networkx(decoded)


def sparse6_encode(g: Graph) -> str:
    encoded: bytes = nx.to_sparse6_bytes(g.to_networkx(), header=False)
    return encoded.rstrip(b"\n").decode("ascii")


__all__ = [
    "GRAPH6_HEADER",
    "SPARSE6_HEADER",
    "graph6_decode",
    "graph6_encode",
    "sparse6_decode",
    "sparse6_encode",
]
