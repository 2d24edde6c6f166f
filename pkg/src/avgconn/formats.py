"""graph6 and multigraph edge-list text formats.

Edge-list layout: a header line ``n m`` (m = number of distinct pairs), then
one line ``u v mult`` per pair, 0-based, pairs in ascending order.  Blank
lines and ``#`` comments are ignored on input.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

import networkx as nx

from .graph import GraphError, MultiGraph


class ParseError(GraphError):
    def __init__(self, msg: str, line: int, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {msg}")
        self.line = line
        self.column = column


def to_graph6(g: MultiGraph) -> str:
    if not g.is_simple():
        raise GraphError("graph6 cannot represent parallel edges; use the edge-list format")
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(uv for uv, _ in g.pairs)
    return nx.to_graph6_bytes(h, header=False).decode("ascii").strip()


def from_graph6(text: str) -> MultiGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    h = nx.from_graph6_bytes(s.encode("ascii"))
    return MultiGraph(h.number_of_nodes(), h.edges())


def read_graph6_stream(lines: Iterable[str]) -> Iterator[MultiGraph]:
    for no, line in enumerate(lines, 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            yield from_graph6(s)
        except (nx.NetworkXError, ValueError) as exc:
            raise ParseError(f"bad graph6 record: {exc}", no) from exc


def to_edgelist(g: MultiGraph) -> str:
    lines = [f"{g.n} {len(g.pairs)}"]
    lines += [f"{u} {v} {c}" for (u, v), c in g.pairs]
    return "\n".join(lines) + "\n"


def _int(tok: str, line: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", line, col) from None


def _tokens(raw: str) -> list[tuple[str, int]]:
    out = []
    i = 0
    while i < len(raw):
        if raw[i].isspace():
            i += 1
            continue
        j = i
        while j < len(raw) and not raw[j].isspace():
            j += 1
        out.append((raw[i:j], i + 1))
        i = j
    return out


def from_edgelist(text: str) -> MultiGraph:
    header = None
    edges = []
    seen = set()
    last = None
    for no, raw in enumerate(text.splitlines(), 1):
        raw = raw.split("#", 1)[0]
        toks = _tokens(raw)
        if not toks:
            continue
        if header is None:
            if len(toks) != 2:
                raise ParseError("header must be 'n m'", no, toks[0][1])
            n, m = (_int(t, no, c) for t, c in toks)
            if n < 0 or m < 0:
                raise ParseError("negative count in header", no)
            header = (n, m)
            continue
        if len(toks) != 3:
            raise ParseError("edge line must be 'u v mult'", no, toks[0][1])
        u, v, c = (_int(t, no, col) for t, col in toks)
        n = header[0]
        for val, (_, col) in zip((u, v), toks):
            if not 0 <= val < n:
                raise ParseError(f"vertex {val} out of range 0..{n - 1}", no, col)
        if u == v:
            raise ParseError("loops are not allowed", no, toks[0][1])
        if c < 1:
            raise ParseError("multiplicity must be at least 1", no, toks[2][1])
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"pair {key} listed twice", no, toks[0][1])
        if last is not None and key < last:
            raise ParseError("pairs must be listed in ascending order", no, toks[0][1])
        seen.add(key)
        last = key
        edges.append((u, v, c))
    if header is None:
        raise ParseError("empty input", 1)
    if len(edges) != header[1]:
        raise ParseError(f"header announces {header[1]} pairs, found {len(edges)}", 1)
    return MultiGraph(header[0], edges)


def detect_format(text: str) -> str:
    for raw in text.splitlines():
        s = raw.split("#", 1)[0].strip()
        if not s:
            continue
        toks = s.split()
        if s.startswith(">>graph6<<"):
            return "graph6"
        if len(toks) == 2 and all(t.lstrip("-").isdigit() for t in toks):
            return "edgelist"
        return "graph6"
    return "edgelist"


def parse_graph(text: str, fmt: str | None = None) -> MultiGraph:
    fmt = fmt or detect_format(text)
    if fmt == "edgelist":
        return from_edgelist(text)
    if fmt == "graph6":
        recs = [ln for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
        if len(recs) != 1:
            raise ParseError(f"expected exactly one graph6 record, found {len(recs)}", 1)
        try:
            return from_graph6(recs[0])
        except (nx.NetworkXError, ValueError) as exc:
            raise ParseError(f"bad graph6 record: {exc}", 1) from exc
    raise GraphError(f"unknown format {fmt!r}")


def format_graph(g: MultiGraph, fmt: str | None = None) -> str:
    """graph6 for simple graphs, edge list otherwise (unless fmt forces one)."""
    if fmt is None:
        fmt = "graph6" if g.is_simple() else "edgelist"
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "edgelist":
        return to_edgelist(g)
    raise GraphError(f"unknown format {fmt!r}")


def read_graph(fp: TextIO, fmt: str | None = None) -> MultiGraph:
    return parse_graph(fp.read(), fmt)
