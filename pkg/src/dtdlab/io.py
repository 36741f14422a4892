"""graph6 and JSON edge-list interchange."""

from __future__ import annotations

import json
from typing import Iterable, Iterator, TextIO

from .graph import MAX_ORDER, Graph, GraphError, graph_from_edges

HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def emit_graph6(g: Graph) -> str:
    """graph6 string (no header, no newline)."""
    out = [_encode_order(g.n)]
    acc = width = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            width += 1
            if width == 6:
                out.append(chr(acc + 63))
                acc = width = 0
    if width:
        out.append(chr((acc << (6 - width)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise GraphError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise GraphError("graph6 string contains characters outside '?'..'~'")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise GraphError(f"graph6 order exceeds {MAX_ORDER}")
        if len(s) < 4:
            raise GraphError("truncated graph6 order field")
        n = 0
        for c in s[1:4]:
            n = (n << 6) | (ord(c) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"graph6 order {n} outside 1..{MAX_ORDER}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise GraphError(f"graph6 body has {len(body)} characters, expected {need}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (ord(body[k // 6]) - 63) >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return graph_from_edges(n, edges)


def read_graph6_stream(fh: TextIO) -> Iterator[Graph]:
    for line in fh:
        line = line.strip()
        if line:
            yield parse_graph6(line)


def write_graph6_stream(graphs: Iterable[Graph], fh: TextIO) -> None:
    for g in graphs:
        fh.write(emit_graph6(g) + "\n")


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def graph_from_json(data: dict | str) -> Graph:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        n = int(data["n"])
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed edge-list JSON: {exc}") from exc
    return graph_from_edges(n, edges)


def parse_edge_shorthand(text: str) -> Graph:
    """Parse ``"n:u-v,u-v,..."``, e.g. ``"4:0-1,1-2,2-3,3-0"``."""
    head, _, tail = text.partition(":")
    try:
        n = int(head)
        edges = []
        for item in filter(None, (t.strip() for t in tail.split(","))):
            u, v = item.split("-")
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise GraphError(f"malformed edge shorthand {text!r}") from exc
    return graph_from_edges(n, edges)
