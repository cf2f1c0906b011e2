"""planar_code binary I/O and a human-readable rotation text format.

planar_code layout (as emitted by the usual plane-graph generators): an
optional 15-byte ASCII header ">>planar_code<<", then one record per graph.
A record is the vertex count n (single byte, so n <= 255), followed by each
vertex's neighbor list in clockwise rotation order, 1-based, terminated by a
zero byte.  A record therefore occupies exactly 1 + sum(deg) + n bytes.

Vertex numbering is 1-based on the wire and 0-based in PlaneGraph.  Reading
validates every record structurally and then through the genus-zero check of
``build_plane_graph``; writing preserves stored rotation order, so
write(read(data)) reproduces well-formed input byte for byte.
"""
from __future__ import annotations

import io
from typing import BinaryIO, Iterable, Iterator

from .plane import GraphError, PlaneGraph, build_plane_graph

HEADER = b">>planar_code<<"


class MalformedRecord(GraphError):
    """Record truncated or containing out-of-range bytes."""


class UnsupportedOrder(GraphError):
    """Graph order does not fit the single-byte planar_code field."""


def read_planar_code(source: bytes | BinaryIO) -> Iterator[PlaneGraph]:
    """Yield PlaneGraphs from planar_code bytes or a binary stream.

    Raises:
        MalformedRecord: structural damage (truncation, bad neighbor byte).
        NotPlanar: structurally fine but not a connected sphere embedding.
    """
    stream = io.BytesIO(source) if isinstance(source, (bytes, bytearray)) else source
    first = stream.read(1)
    if first == b"":
        return
    if first == HEADER[:1]:
        rest = stream.read(len(HEADER) - 1)
        if first + rest != HEADER:
            raise MalformedRecord("bad header")
        first = stream.read(1)
    while first != b"":
        n = first[0]
        if n == 0:
            raise MalformedRecord("record with n = 0")
        rot: list[list[int]] = []
        for v in range(n):
            lst: list[int] = []
            while True:
                b = stream.read(1)
                if b == b"":
                    raise MalformedRecord(f"truncated record (vertex {v + 1})")
                x = b[0]
                if x == 0:
                    break
                if x > n:
                    raise MalformedRecord(f"neighbor {x} out of range (n={n})")
                lst.append(x - 1)
            rot.append(lst)
        yield build_plane_graph(rot)
        first = stream.read(1)


def load_planar_code(source: bytes | BinaryIO) -> list[PlaneGraph]:
    return list(read_planar_code(source))


def graph_record(g: PlaneGraph) -> bytes:
    """The planar_code record of one graph (no header)."""
    if g.n > 255:
        raise UnsupportedOrder(f"n={g.n} exceeds the single-byte order field")
    out = bytearray([g.n])
    for v in range(g.n):
        for w in g.neighbors(v):
            out.append(w + 1)
        out.append(0)
    return bytes(out)


def write_planar_code(graphs: Iterable[PlaneGraph],
                      sink: BinaryIO | None = None,
                      header: bool = True) -> bytes:
    """Serialize graphs to planar_code; returns the bytes, optionally writing them."""
    out = bytearray()
    if header:
        out += HEADER
    for g in graphs:
        out += graph_record(g)
    data = bytes(out)
    if sink is not None:
        sink.write(data)
    return data


def read_rotation_text(text: str) -> PlaneGraph:
    """Parse the text rotation format: one "v: n1 n2 ... nk" line per vertex.

    Numbering is 1-based as written; '#' starts a comment; blank lines are
    skipped.  Vertices may appear in any order but must be exactly 1..n.
    """
    rows: dict[int, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, tail = line.partition(":")
        try:
            v = int(head)
            nbrs = [int(tok) for tok in tail.split()]
        except ValueError:
            raise MalformedRecord(f"line {lineno}: cannot parse {raw!r}")
        if v in rows:
            raise MalformedRecord(f"line {lineno}: vertex {v} listed twice")
        rows[v] = nbrs
    if not rows:
        raise MalformedRecord("no vertex lines found")
    n = len(rows)
    if sorted(rows) != list(range(1, n + 1)):
        raise MalformedRecord("vertex labels must be exactly 1..n")
    for v, nbrs in rows.items():
        for w in nbrs:
            if not 1 <= w <= n:
                raise MalformedRecord(f"vertex {v}: neighbor {w} out of range")
    return build_plane_graph([[w - 1 for w in rows[v]] for v in range(1, n + 1)])


def write_rotation_text(g: PlaneGraph) -> str:
    lines = [f"# plane graph: n={g.n} m={g.m} f={g.face_count}"]
    for v in range(g.n):
        nbrs = " ".join(str(w + 1) for w in g.neighbors(v))
        lines.append(f"{v + 1}: {nbrs}")
    return "\n".join(lines) + "\n"
