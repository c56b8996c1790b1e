"""graph6 line codec.

Implements the published graph6 format exactly: the vertex count as one byte
(``chr(n + 63)`` for n <= 62) or a ``~``-prefixed 18-bit group for larger n,
followed by the upper triangle of the adjacency matrix in column order
(x01, x02, x12, x03, ...), packed big-endian into 6-bit groups offset by 63.
Padding bits past the triangle must be zero.

Only bare one-graph-per-line payloads are handled here; the optional
``>>graph6<<`` file header is the ingestion layer's problem.
"""

from __future__ import annotations

import io
from typing import Iterable, Iterator

from .errors import Graph6Error
from .graph import MAX_VERTICES, Graph

_HEADER = ">>graph6<<"


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line into a Graph.

    Raises Graph6Error (with the byte offset of the defect) for malformed
    length bytes, out-of-range data bytes, truncated or overlong payloads,
    nonzero padding bits, or vertex counts above 64.
    """
    s = line.rstrip("\r\n")
    if not s:
        raise Graph6Error("empty graph6 line", 0)
    if s.startswith(_HEADER):
        raise Graph6Error("unexpected >>graph6<< header on data line", 0)
    data = s.encode("ascii", errors="replace")
    vals = []
    for k, byte in enumerate(data):
        x = byte - 63
        if not 0 <= x <= 63:
            raise Graph6Error(f"byte {byte!r} outside graph6 range", k)
        vals.append(x)

    if vals[0] <= 62:
        n = vals[0]
        head = 1
    else:  # '~' prefix: 18-bit (or, doubled, 36-bit) vertex count
        if len(vals) >= 2 and vals[1] == 63:
            raise Graph6Error("vertex count beyond the 64-vertex cap", 1)
        if len(vals) < 4:
            raise Graph6Error("truncated long-form vertex count", len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        head = 4
        if n <= 62:
            raise Graph6Error("long-form count used for a small graph", 1)
    if n > MAX_VERTICES:
        raise Graph6Error(f"{n} vertices exceeds the {MAX_VERTICES}-vertex cap", 0)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(vals) - head != nbytes:
        raise Graph6Error(
            f"expected {nbytes} data bytes for n={n}, got {len(vals) - head}",
            min(head + nbytes, len(data)),
        )
    acc = 0
    for x in vals[head:]:
        acc = (acc << 6) | x
    pad = nbytes * 6 - nbits
    if pad and acc & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", len(data) - 1)
    acc >>= pad

    rows = [0] * n
    idx = nbits - 1
    for col in range(1, n):
        for row in range(col):
            if acc >> idx & 1:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            idx -= 1
    return Graph(n, rows)


def write_graph6(g: Graph) -> str:
    """Encode a Graph as a graph6 line (no trailing newline).

    parse_graph6(write_graph6(g)) reproduces g with the same labeling.
    """
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", chr((n >> 12) + 63), chr(((n >> 6) & 63) + 63), chr((n & 63) + 63)]
    acc = 0
    nbits = 0
    for col in range(1, n):
        colbit = 1 << col
        for row in range(col):
            acc = (acc << 1) | (1 if g.adj[row] & colbit else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def iter_graph6_lines(fh: io.TextIOBase) -> Iterator[tuple[int, Graph]]:
    """Yield (line_number, Graph) pairs, skipping blank lines.

    A leading ``>>graph6<<`` header line is tolerated and skipped; defects
    re-raise as Graph6Error annotated with the line number.
    """
    for lineno, raw in enumerate(fh, start=1):
        s = raw.strip()
        if not s:
            continue
        if lineno == 1 and s.startswith(_HEADER):
            s = s[len(_HEADER):]
            if not s:
                continue
        try:
            yield lineno, parse_graph6(s)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}", exc.offset) from exc


def read_graph6_file(path) -> list[Graph]:
    with open(path, "r", encoding="ascii") as fh:
        return [g for _, g in iter_graph6_lines(fh)]


def write_graph6_file(path, graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(write_graph6(g))
            fh.write("\n")
            count += 1
    return count
