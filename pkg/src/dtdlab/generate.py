"""Isomorph-free small-graph enumeration and seeded random sampling.

Enumeration is canonical augmentation by vertex addition. A graph G on k
vertices is accepted from parent P = G - v only if v lies in the canonical
orbit m(G): the orbit of the canonically first vertex among those of maximum
(degree, sorted neighbor degrees). Per parent, neighborhoods are taken up to
the action of Aut(P). Together these give one representative per class.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .canon import canonical_labeling, orbits
from .graph import Graph, GraphError, bits, components, is_claw_free, is_connected, min_degree

MAX_ENUM_ORDER = 9


def _vertex_key(adj: tuple[int, ...], deg: list[int], v: int) -> tuple:
    return (deg[v], sorted(deg[u] for u in bits(adj[v])))


def _accept(g: Graph, v: int) -> bool:
    """Whether the new vertex v lies in the canonical orbit m(g)."""
    adj = g.adj
    deg = [a.bit_count() for a in adj]
    keys = [_vertex_key(adj, deg, u) for u in range(g.n)]
    top = max(keys)
    if keys[v] != top:
        return False
    tied = [u for u in range(g.n) if keys[u] == top]
    if len(tied) == 1:
        return True
    lab = canonical_labeling(g)
    tied_set = set(tied)
    chosen = next(u for u in lab.order if u in tied_set)
    orb = orbits(g.n, lab.generators)
    return orb[chosen] == orb[v]


def _subset_reps(k: int, gens) -> list[int]:
    """One subset of range(k) per orbit of the group generated by ``gens``."""
    total = 1 << k
    if not gens:
        return list(range(total))
    images = []
    for p in gens:
        img = [0] * total
        for x in range(1, total):
            low = x & -x
            img[x] = img[x ^ low] | 1 << p[low.bit_length() - 1]
        images.append(img)
    seen = bytearray(total)
    reps = []
    for x in range(total):
        if seen[x]:
            continue
        reps.append(x)
        seen[x] = 1
        stack = [x]
        while stack:
            y = stack.pop()
            for img in images:
                z = img[y]
                if not seen[z]:
                    seen[z] = 1
                    stack.append(z)
    return reps


def _extend(p: Graph, x: int) -> Graph:
    k = p.n
    adj = list(p.adj)
    for u in bits(x):
        adj[u] |= 1 << k
    adj.append(x)
    return Graph(k + 1, tuple(adj))


def _children(p: Graph, final_min2_connected: bool) -> Iterator[Graph]:
    k = p.n
    deg = p.degrees()
    if final_min2_connected:
        if k and min(deg) == 0:
            return
        forced = 0
        for u in range(k):
            if deg[u] == 1:
                forced |= 1 << u
        comps = components(p)
    gens = canonical_labeling(p).generators
    for x in _subset_reps(k, gens):
        size = x.bit_count()
        if final_min2_connected:
            if size < 2 or forced & ~x:
                continue
            if any(not (c & x) for c in comps):
                continue
        # the new vertex must have maximum degree to be canonical
        if any(deg[u] + (x >> u & 1) > size for u in range(k)):
            continue
        g = _extend(p, x)
        if _accept(g, k):
            yield g


def enumerate_all(n: int) -> list[Graph]:
    """All graphs of order n up to isomorphism (n <= MAX_ENUM_ORDER - 1 is cheap)."""
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise GraphError(f"internal enumerator supports 1..{MAX_ENUM_ORDER}")
    level = [Graph(1, (0,))]
    for _ in range(n - 1):
        level = [c for p in level for c in _children(p, False)]
    return level


def enumerate_connected_min2(n: int) -> Iterator[Graph]:
    """Connected graphs of order n with minimum degree >= 2, one per class."""
    if not 3 <= n <= MAX_ENUM_ORDER:
        raise GraphError(f"internal enumerator supports 3 <= n <= {MAX_ENUM_ORDER}; use a graph6 stream beyond")
    for p in enumerate_all(n - 1):
        yield from _children(p, True)


# sampling -------------------------------------------------------------------

CONSTRAINTS = ("connected", "min-degree-2", "claw-free", "no-isolated")


@dataclass(frozen=True)
class SamplerConfig:
    seed: int
    count: int
    min_order: int
    max_order: int
    constraints: tuple[str, ...] = ("connected", "min-degree-2")
    edge_factor: float = 2.5
    budget: int = 10_000

    def __post_init__(self) -> None:
        bad = [c for c in self.constraints if c not in CONSTRAINTS]
        if bad:
            raise ValueError(f"unknown constraints {bad}")
        if not 1 <= self.min_order <= self.max_order <= 64:
            raise ValueError("bad order range")


class SamplerExhausted(RuntimeError):
    """The rejection budget ran out before a graph meeting the constraints was drawn."""


def satisfies(g: Graph, constraints) -> bool:
    for c in constraints:
        if c == "connected" and not is_connected(g):
            return False
        if c == "min-degree-2" and min_degree(g) < 2:
            return False
        if c == "no-isolated" and min_degree(g) < 1:
            return False
        if c == "claw-free" and not is_claw_free(g):
            return False
    return True


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def sample_graphs(cfg: SamplerConfig) -> Iterator[Graph]:
    """Reproducible stream; raises SamplerExhausted when a draw burns the budget."""
    rng = random.Random(cfg.seed)
    for _ in range(cfg.count):
        n = rng.randint(cfg.min_order, cfg.max_order)
        p = min(1.0, cfg.edge_factor / n)
        for _ in range(cfg.budget):
            g = random_graph(rng, n, p)
            if satisfies(g, cfg.constraints):
                yield g
                break
        else:
            raise SamplerExhausted(f"no graph of order {n} met {cfg.constraints} in {cfg.budget} draws")
