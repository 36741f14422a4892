"""Canonical labeling by partition refinement and individualization.

The search tree is the usual one: refine an ordered partition to an
equitable one, individualize each vertex of the first smallest non-singleton
cell in turn, recurse. A leaf is a discrete partition, i.e. an ordering of
the vertices; its certificate is the adjacency relabeled by that ordering and
the canonical form is the largest certificate. Two leaves with equal
certificates differ by an automorphism; those automorphisms prune sibling
branches and are returned as generators of the automorphism group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, bfs_layers
from .io import emit_graph6


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical encoding; equal bytes iff isomorphic graphs."""

    bytes: bytes

    def __str__(self) -> str:
        return self.bytes.decode("ascii")


@dataclass(frozen=True)
class Labeling:
    order: tuple[int, ...]  # order[i] = original vertex placed at position i
    certificate: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]

    def relabel_map(self) -> list[int]:
        """perm[v] = canonical index of original vertex v."""
        perm = [0] * len(self.order)
        for i, v in enumerate(self.order):
            perm[v] = i
        return perm


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                a = adj[v]
                key = tuple((a & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                for key in sorted(groups):
                    out.append(groups[key])
        cells = out
        if not changed:
            return cells


def _initial_cells(g: Graph) -> list[list[int]]:
    groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(g.n):
        layers = bfs_layers(g, v)
        key = tuple(m.bit_count() for m in layers)
        groups.setdefault(key, []).append(v)
    return [groups[k] for k in sorted(groups)]


def _certificate(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        r = 0
        for u in bits(adj[v]):
            r |= 1 << pos[u]
        rows.append(r)
    return tuple(rows)


def _orbits(n: int, gens: list[tuple[int, ...]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in gens:
        for v in range(n):
            a, b = find(v), find(p[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def orbits(n: int, gens) -> list[int]:
    """Orbit representative (least element) of each vertex under ``gens``."""
    return _orbits(n, list(gens))


def canonical_labeling(g: Graph) -> Labeling:
    adj = g.adj
    n = g.n
    if n == 0:
        return Labeling((), (), ())
    first: list[int] | None = None
    first_cert: tuple[int, ...] | None = None
    first_fixed: tuple[int, ...] = ()
    best: list[int] | None = None
    best_cert: tuple[int, ...] | None = None
    gens: list[tuple[int, ...]] = []

    def automorphism(ref: list[int], order: list[int]) -> None:
        perm = [0] * n
        for a, b in zip(ref, order):
            perm[a] = b
        p = tuple(perm)
        if p != tuple(range(n)):
            gens.append(p)

    def search(cells: list[list[int]], fixed: tuple[int, ...]) -> int:
        """Explore a node; returns the depth to resume at (len(fixed) = keep going)."""
        nonlocal first, first_cert, first_fixed, best, best_cert
        depth = len(fixed)
        if len(cells) == n:
            order = [c[0] for c in cells]
            cert = _certificate(adj, order)
            if first is None:
                first, first_cert, first_fixed = order, cert, fixed
                best, best_cert = order, cert
                return depth
            if cert == first_cert:
                automorphism(first, order)
                # everything below the common ancestor with the first leaf is
                # the image of an explored subtree
                common = 0
                while common < depth and fixed[common] == first_fixed[common]:
                    common += 1
                return common
            if cert == best_cert:
                automorphism(best, order)
            elif cert > best_cert:
                best, best_cert = order, cert
            return depth
        target = min(range(len(cells)), key=lambda i: (len(cells[i]) if len(cells[i]) > 1 else n + 1, i))
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if tried:
                stab = [p for p in gens if all(p[x] == x for x in fixed)]
                if stab:
                    orb = _orbits(n, stab)
                    if any(orb[v] == orb[t] for t in tried):
                        continue
            tried.append(v)
            split = cells[:target] + [[v], [u for u in cell if u != v]] + cells[target + 1:]
            resume = search(_refine(adj, split), fixed + (v,))
            if resume < depth:
                return resume
        return depth

    search(_refine(adj, _initial_cells(g)), ())
    return Labeling(tuple(best), best_cert, tuple(gens))


def canonical_graph(g: Graph) -> Graph:
    lab = canonical_labeling(g)
    return g.relabel(lab.relabel_map())


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(emit_graph6(canonical_graph(g)).encode("ascii"))


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """Vertex map phi with uv in E(g) iff phi(u)phi(v) in E(h), or None."""
    if g.n != h.n or g.size != h.size or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    lg, lh = canonical_labeling(g), canonical_labeling(h)
    if lg.certificate != lh.certificate:
        return None
    phi = [0] * g.n
    for a, b in zip(lg.order, lh.order):
        phi[a] = b
    # the certificates match, so this cannot fail; keep the check cheap and explicit
    for u, v in g.edges():
        if not h.has_edge(phi[u], phi[v]):
            raise AssertionError("canonical labeling produced an inconsistent map")
    return phi


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def automorphism_generators(g: Graph) -> tuple[tuple[int, ...], ...]:
    return canonical_labeling(g).generators


def from_canonical(form: CanonicalForm) -> Graph:
    from .io import parse_graph6

    return parse_graph6(form.bytes.decode("ascii"))


__all__ = [
    "CanonicalForm",
    "Labeling",
    "canonical_labeling",
    "canonical_graph",
    "canonical_form",
    "find_isomorphism",
    "are_isomorphic",
    "automorphism_generators",
    "orbits",
    "from_canonical",
]
