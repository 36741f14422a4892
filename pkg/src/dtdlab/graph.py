"""Immutable simple graphs on at most 64 vertices, stored as neighbor bitsets.

Vertices are dense 0-based indices. Every surgery returns a fresh graph; the
ones that renumber vertices also return the old->new index map.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64

#: distance between vertices in different components
INF = math.inf


class GraphError(ValueError):
    """Raised for malformed graphs or surgeries that do not apply."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class VertexSet:
    """A set of vertex indices of a graph of order ``n``, held as one bitmask."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.n:
            raise GraphError(f"vertex set {self.bits:#x} has bits outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, indices: Iterable[int]) -> "VertexSet":
        indices = list(indices)
        for i in indices:
            if not 0 <= i < n:
                raise GraphError(f"vertex {i} out of range for order {n}")
        return cls(mask_of(indices), n)

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(0, n)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls((1 << n) - 1, n)

    def __iter__(self) -> Iterator[int]:
        return bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.bits >> v & 1)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits | other.bits, self.n)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & other.bits, self.n)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & ~other.bits, self.n)

    def to_list(self) -> list[int]:
        return list(bits(self.bits))

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()}, n={self.n})"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with ``adj[v]`` the neighbor bitmask of ``v``."""

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 1..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        for v, nb in enumerate(self.adj):
            if nb >> self.n or nb < 0:
                raise GraphError(f"vertex {v} has neighbors outside the vertex range")
            if nb >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels length does not match order")

    # basic queries ---------------------------------------------------------

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def size(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        adj = [0] * self.n
        for u, v in self.edges():
            adj[perm[u]] |= 1 << perm[v]
            adj[perm[v]] |= 1 << perm[u]
        return Graph(self.n, tuple(adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def graph_from_edges(n: int, edges: Iterable[Sequence[int]], labels: Sequence[str] | None = None) -> Graph:
    """Build the simple graph on ``n`` vertices; repeated edges collapse."""
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside 1..{MAX_ORDER}")
    adj = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), tuple(labels) if labels is not None else None)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return graph_from_edges(g.n + h.n, g.edges() + [(u + shift, v + shift) for u, v in h.edges()])


# distances -----------------------------------------------------------------


class DistanceMatrix:
    """All-pairs hop distances; ``INF`` marks pairs in different components."""

    __slots__ = ("_d",)

    def __init__(self, rows: Sequence[Sequence[float]]):
        self._d = tuple(tuple(r) for r in rows)

    def __getitem__(self, v: int) -> tuple[float, ...]:
        return self._d[v]

    def __len__(self) -> int:
        return len(self._d)

    def rows(self) -> tuple[tuple[float, ...], ...]:
        return self._d


def bfs_layers(g: Graph, source: int) -> list[int]:
    """Bitmask of the vertices at each distance 0, 1, 2, ... from ``source``."""
    seen = frontier = 1 << source
    layers = [frontier]
    while True:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)
        frontier = nxt


def distance_matrix(g: Graph) -> DistanceMatrix:
    rows = []
    for s in range(g.n):
        row = [INF] * g.n
        for d, layer in enumerate(bfs_layers(g, s)):
            for v in bits(layer):
                row[v] = d
        rows.append(row)
    return DistanceMatrix(rows)


def second_neighborhoods(g: Graph) -> tuple[int, ...]:
    """For each vertex, the bitmask of vertices at distance exactly 2."""
    out = []
    for v in range(g.n):
        reach = 0
        for u in bits(g.adj[v]):
            reach |= g.adj[u]
        out.append(reach & ~g.adj[v] & ~(1 << v))
    return tuple(out)


# structural predicates ------------------------------------------------------


def component_mask(g: Graph, v: int, within: int | None = None) -> int:
    """Vertices reachable from ``v`` using only vertices in ``within``."""
    allowed = g.all_mask if within is None else within
    seen = frontier = 1 << v
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return component_mask(g, 0) == g.all_mask


def components(g: Graph) -> list[int]:
    left = g.all_mask
    out = []
    while left:
        low = left & -left
        comp = component_mask(g, low.bit_length() - 1)
        out.append(comp)
        left &= ~comp
    return out


def min_degree(g: Graph) -> int:
    return min(g.degrees())


def max_degree(g: Graph) -> int:
    return max(g.degrees())


def has_isolated_vertex(g: Graph) -> bool:
    return any(nb == 0 for nb in g.adj)


def is_bridge(g: Graph, u: int, v: int) -> bool:
    """True iff removing edge uv separates u from v."""
    if not g.has_edge(u, v):
        raise GraphError(f"{(u, v)} is not an edge")
    return not component_mask(delete_edge(g, (u, v)), u) >> v & 1


def is_claw_free(g: Graph) -> bool:
    """No induced K_{1,3}: no vertex has three pairwise non-adjacent neighbors."""
    for c in range(g.n):
        nb = g.neighbors(c)
        if len(nb) < 3:
            continue
        for a, b, d in combinations(nb, 3):
            if not (g.adj[a] >> b & 1 or g.adj[a] >> d & 1 or g.adj[b] >> d & 1):
                return False
    return True


# surgeries -----------------------------------------------------------------


def _norm_edge(g: Graph, e: Sequence[int]) -> tuple[int, int]:
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"{(u, v)} is not an edge of the graph")
    return u, v


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = _norm_edge(g, e)
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj), g.labels)


def add_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = e
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"cannot add edge {(u, v)}")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj), g.labels)


def induced(g: Graph, s: VertexSet | int) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``s``, renumbered densely; returns (graph, old->new)."""
    keep = s.bits if isinstance(s, VertexSet) else s
    if keep & ~g.all_mask:
        raise GraphError("vertex set has bits outside the graph")
    order = list(bits(keep))
    if not order:
        raise GraphError("cannot induce on the empty set")
    index = {old: new for new, old in enumerate(order)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    labels = tuple(g.labels[v] for v in order) if g.labels else None
    return graph_from_edges(len(order), edges, labels), index


def delete_vertices(g: Graph, vs: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    drop = mask_of(vs)
    if drop & ~g.all_mask:
        raise GraphError("vertex to delete is not in the graph")
    return induced(g, g.all_mask & ~drop)


def delete_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} not in graph of order {g.n}")
    return delete_vertices(g, [v])


def subdivide_edge(g: Graph, e: Sequence[int], k: int) -> Graph:
    """Replace edge uv by a path through ``k`` new vertices numbered n..n+k-1.

    The new vertices run from the ``u`` end to the ``v`` end.
    """
    u, v = _norm_edge(g, e)
    if k < 0:
        raise GraphError("subdivision count must be non-negative")
    if g.n + k > MAX_ORDER:
        raise GraphError(f"subdivision would exceed {MAX_ORDER} vertices")
    if k == 0:
        return g
    edges = [f for f in g.edges() if set(f) != {u, v}]
    chain = [u, *range(g.n, g.n + k), v]
    edges += list(zip(chain, chain[1:]))
    return graph_from_edges(g.n + k, edges)


def add_pendant(g: Graph, v: int) -> tuple[Graph, int]:
    """G^v: attach a new leaf to ``v``; the leaf gets index ``g.n``."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} not in graph of order {g.n}")
    if g.n + 1 > MAX_ORDER:
        raise GraphError(f"pendant would exceed {MAX_ORDER} vertices")
    return graph_from_edges(g.n + 1, g.edges() + [(v, g.n)]), g.n


def identify(graphs: Sequence[tuple[Graph, int]]) -> Graph:
    """Glue rooted graphs by merging all roots into one vertex, which gets index 0.

    Non-root vertices follow in input order, each graph's vertices in their
    original relative order.
    """
    edges: list[tuple[int, int]] = []
    nxt = 1
    for h, root in graphs:
        index = {root: 0}
        for w in range(h.n):
            if w != root:
                index[w] = nxt
                nxt += 1
        edges += [(index[a], index[b]) for a, b in h.edges()]
    return graph_from_edges(nxt, edges)
