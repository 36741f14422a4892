"""Exact disjunctive total domination by branch and bound over bitsets.

A vertex is DT-dominated by S when it has a neighbor in S (totally dominated)
or has at least two vertices of S at distance exactly 2 (disjunctively
dominated). Membership in S by itself does nothing for a vertex.

Every query here reduces to one searcher that minimizes |S| subject to

* ``dtd_targets`` -- vertices that must be DT-dominated,
* ``total_targets`` -- vertices that must be totally dominated,
* ``include`` / ``exclude`` -- forced memberships.

Minimum sets are reported by their colex-least representative: among all
minimum sets, the one whose bitmask is numerically smallest.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional

from .graph import (
    Graph,
    GraphError,
    VertexSet,
    add_pendant,
    bits,
    component_mask,
    delete_edge,
    has_isolated_vertex,
    is_connected,
    min_degree,
    second_neighborhoods,
)


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Mode(str, Enum):
    TOTAL = "totally-dominated"
    DISJUNCTIVE = "disjunctively-dominated-only"
    NONE = "undominated"


@dataclass(frozen=True)
class SolveConstraints:
    must_include: VertexSet | None = None
    must_exclude: VertexSet | None = None
    target_cardinality: int | None = None

    def masks(self, n: int) -> tuple[int, int]:
        inc = self.must_include.bits if self.must_include is not None else 0
        exc = self.must_exclude.bits if self.must_exclude is not None else 0
        if inc >> n or exc >> n:
            raise GraphError("constraint sets do not fit the graph")
        if inc & exc:
            raise GraphError("must_include and must_exclude overlap")
        return inc, exc


@dataclass(frozen=True)
class SolveCertificate:
    """Outcome of a minimization; ``value is None`` means no admissible set exists."""

    value: Optional[int]
    witness: Optional[VertexSet]
    modes: tuple[Mode, ...] = field(default=())

    @property
    def feasible(self) -> bool:
        return self.value is not None

    def to_dict(self) -> dict:
        if not self.feasible:
            return {"value": None, "witness": None, "modes": None, "feasible": False}
        return {
            "value": self.value,
            "witness": self.witness.to_list(),
            "modes": [m.value for m in self.modes],
            "feasible": True,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


INFEASIBLE = SolveCertificate(None, None, ())


class Searcher:
    """Branch-and-bound minimizer for one graph and one pair of target sets."""

    def __init__(self, g: Graph, dtd_targets: int | None = None, total_targets: int = 0):
        self.g = g
        self.n = g.n
        self.full = g.all_mask
        self.nbr = g.adj
        self.n2 = second_neighborhoods(g)
        self.reach = tuple(a | b for a, b in zip(self.nbr, self.n2))
        self.dtd_targets = self.full if dtd_targets is None else dtd_targets
        self.total_targets = total_targets
        self.nodes = 0

    # state helpers -----------------------------------------------------------

    def _state(self, s: int) -> tuple[int, int, int]:
        tot = one = two = 0
        nbr, n2 = self.nbr, self.n2
        for c in bits(s):
            tot |= nbr[c]
            two |= one & n2[c]
            one |= n2[c]
        return tot, one, two

    def satisfies(self, s: int) -> bool:
        tot, _, two = self._state(s)
        return not (self.total_targets & ~tot) and not (self.dtd_targets & ~(tot | two))

    def possible(self, include: int, exclude: int) -> bool:
        """Whether any admissible set exists (the set of all allowed vertices)."""
        return self.satisfies(self.full & ~exclude | include)

    # decision search -------------------------------------------------------

    def decide(self, k: int, include: int = 0, exclude: int = 0) -> Optional[int]:
        """Some admissible set of size <= k, or None."""
        if include & exclude:
            return None
        size = include.bit_count()
        if size > k:
            return None
        tot, one, two = self._state(include)
        return self._dfs(include, size, tot, one, two, exclude, k)

    def _dfs(self, s: int, cnt: int, tot: int, one: int, two: int, excl: int, k: int) -> Optional[int]:
        self.nodes += 1
        need_t = self.total_targets & ~tot
        need_d = self.dtd_targets & ~(tot | two) & ~need_t
        if not (need_t | need_d):
            return s
        r = k - cnt
        if r <= 0:
            return None
        nbr, n2, reach = self.nbr, self.n2, self.reach
        allowed = self.full & ~s & ~excl

        best_cand = 0
        best_count = 1 << 30
        m = need_t
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            cand = nbr[v] & allowed
            c = cand.bit_count()
            if c == 0:
                return None
            if c < best_count:
                best_cand, best_count = cand, c
        m = need_d
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            if one & low:
                cand = reach[v] & allowed
                if not cand:
                    return None
            else:
                close = nbr[v] & allowed
                far = n2[v] & allowed
                if not close and (r < 2 or far.bit_count() < 2):
                    return None
                cand = close | far
            c = cand.bit_count()
            if c < best_count:
                best_cand, best_count = cand, c

        # credit bound: a needy vertex wants 2 credits (1 if it already has one
        # vertex of S at distance 2); a new vertex gives 2 to each needy neighbor
        # (capped at the need) and 1 to each needy vertex at distance 2.
        needy = need_t | need_d
        half = need_d & one
        total_need = 2 * needy.bit_count() - half.bit_count()
        if r == 1:
            for u in bits(best_cand):
                if 2 * (nbr[u] & needy).bit_count() - (nbr[u] & half).bit_count() + (n2[u] & need_d).bit_count() >= total_need:
                    break
            else:
                return None
        else:
            gains = []
            m = allowed
            while m:
                low = m & -m
                m ^= low
                u = low.bit_length() - 1
                nu = nbr[u]
                gains.append(2 * (nu & needy).bit_count() - (nu & half).bit_count() + (n2[u] & need_d).bit_count())
            if len(gains) > r:
                gains.sort(reverse=True)
                gains = gains[:r]
            if sum(gains) < total_need:
                return None

        m = best_cand
        while m:
            low = m & -m
            m ^= low
            c = low.bit_length() - 1
            nc = n2[c]
            found = self._dfs(s | low, cnt + 1, tot | nbr[c], one | nc, two | (one & nc), excl, k)
            if found is not None:
                return found
            excl |= low
        return None

    def iter_minimum_sets(self, k: int, include: int = 0, exclude: int = 0) -> Iterator[int]:
        """Every admissible set of size k, assuming none smaller exists.

        Each set is produced once: a branch fixes the first chosen dominator
        of some undominated vertex and excludes the earlier candidates.
        """
        if include & exclude or include.bit_count() > k:
            return
        stack = [(include, exclude)]
        while stack:
            s, excl = stack.pop()
            cnt = s.bit_count()
            tot, one, two = self._state(s)
            need_t = self.total_targets & ~tot
            need_d = self.dtd_targets & ~(tot | two) & ~need_t
            if not (need_t | need_d):
                if cnt == k:
                    yield s
                continue
            if cnt >= k:
                continue
            allowed = self.full & ~s & ~excl
            pivot = lowest(need_t) if need_t else lowest(need_d)
            cand = (self.nbr[pivot] if need_t else self.reach[pivot]) & allowed
            branches = []
            for c in bits(cand):
                branches.append((s | 1 << c, excl))
                excl |= 1 << c
            stack.extend(reversed(branches))

    # optimization ----------------------------------------------------------

    def lower_bound(self, include: int) -> int:
        needy = self.dtd_targets | self.total_targets
        if not needy:
            return include.bit_count()
        best_gain = max(
            2 * (self.nbr[u] & needy).bit_count() + (self.n2[u] & self.dtd_targets & ~self.total_targets).bit_count()
            for u in range(self.n)
        )
        if best_gain == 0:
            return include.bit_count()
        lb = -(-2 * needy.bit_count() // best_gain)
        return max(lb, include.bit_count(), 1)

    def minimum(self, include: int = 0, exclude: int = 0, cap: int | None = None) -> Optional[tuple[int, int]]:
        """(value, colex-least witness) or None when infeasible or above ``cap``."""
        if include & exclude or not self.possible(include, exclude):
            return None
        top = self.n if cap is None else min(cap, self.n)
        k = self.lower_bound(include)
        while k <= top:
            found = self.decide(k, include, exclude)
            if found is not None:
                k = found.bit_count()
                return k, self.colex_least(k, include, exclude, found)
            k += 1
        return None

    def colex_least(self, k: int, include: int, exclude: int, hint: int) -> int:
        """Numerically smallest admissible k-set, given one admissible set ``hint``.

        Decides vertices from the highest index down, excluding whenever some
        admissible set of size <= k still exists.
        """
        current = hint
        for v in range(self.n - 1, -1, -1):
            bit = 1 << v
            if include & bit or exclude & bit:
                continue
            if not current & bit:
                exclude |= bit
                continue
            alt = self.decide(k, include, exclude | bit)
            if alt is None:
                include |= bit
            else:
                exclude |= bit
                current = alt
        return current


# public API -----------------------------------------------------------------


def _vs_mask(g: Graph, s: VertexSet | int) -> int:
    if isinstance(s, VertexSet):
        if s.n != g.n:
            raise GraphError("vertex set belongs to a graph of a different order")
        return s.bits
    if s & ~g.all_mask:
        raise GraphError("vertex set has bits outside the graph")
    return s


def dt_dominated(g: Graph, s: VertexSet | int) -> int:
    """Bitmask of the vertices DT-dominated by ``s``."""
    tot, _, two = Searcher(g)._state(_vs_mask(g, s))
    return tot | two


def is_dtd_set(g: Graph, s: VertexSet | int) -> bool:
    return dt_dominated(g, s) == g.all_mask


def is_td_set(g: Graph, s: VertexSet | int) -> bool:
    m = _vs_mask(g, s)
    tot = 0
    for c in bits(m):
        tot |= g.adj[c]
    return tot == g.all_mask


def domination_modes(g: Graph, s: VertexSet | int) -> tuple[Mode, ...]:
    tot, _, two = Searcher(g)._state(_vs_mask(g, s))
    out = []
    for v in range(g.n):
        if tot >> v & 1:
            out.append(Mode.TOTAL)
        elif two >> v & 1:
            out.append(Mode.DISJUNCTIVE)
        else:
            out.append(Mode.NONE)
    return tuple(out)


def _certificate(g: Graph, result: Optional[tuple[int, int]]) -> SolveCertificate:
    if result is None:
        return INFEASIBLE
    value, w = result
    return SolveCertificate(value, VertexSet(w, g.n), domination_modes(g, w))


def dtd_number(g: Graph, constraints: SolveConstraints | None = None) -> SolveCertificate:
    """Minimum DTD-set; infeasible iff no set meets the constraints."""
    inc, exc = (constraints or SolveConstraints()).masks(g.n)
    cap = constraints.target_cardinality if constraints else None
    return _certificate(g, Searcher(g).minimum(inc, exc, cap))


def dtd_value(g: Graph) -> Optional[int]:
    return dtd_number(g).value


def td_number(g: Graph) -> SolveCertificate:
    return _certificate(g, Searcher(g, dtd_targets=0, total_targets=g.all_mask).minimum())


def ndtd_number(g: Graph, v: int) -> SolveCertificate:
    """Minimum NDTD-set of G^v: contains the pendant v' and DT-dominates V(G).

    The witness and modes refer to G^v, whose pendant has index ``g.n``.
    """
    gv, leaf = add_pendant(g, v)
    searcher = Searcher(gv, dtd_targets=g.all_mask)
    return _certificate(gv, searcher.minimum(include=1 << leaf))


def ndtd_dominates_pendant_exists(g: Graph, v: int) -> bool:
    """Whether some minimum NDTD-set of G^v also DT-dominates the pendant."""
    base = ndtd_number(g, v)
    if not base.feasible:
        raise GraphError("no NDTD-set exists")
    gv, leaf = add_pendant(g, v)
    return Searcher(gv).decide(base.value, include=1 << leaf) is not None


def good_vertices(g: Graph) -> VertexSet:
    """Vertices lying in at least one minimum DTD-set."""
    searcher = Searcher(g)
    base = searcher.minimum()
    if base is None:
        raise GraphError("graph has no DTD-set")
    k, w = base
    good = w
    for v in range(g.n):
        if good >> v & 1:
            continue
        found = searcher.decide(k, include=1 << v)
        if found is not None:
            good |= found
    return VertexSet(good, g.n)


def good_edges(g: Graph) -> list[tuple[int, int]]:
    """Edges whose both ends lie together in some minimum DTD-set."""
    searcher = Searcher(g)
    base = searcher.minimum()
    if base is None:
        raise GraphError("graph has no DTD-set")
    k, w = base
    witnessed: set[tuple[int, int]] = set()

    def mark(s: int) -> None:
        for u in bits(s):
            for x in bits(g.adj[u] & s):
                if u < x:
                    witnessed.add((u, x))

    mark(w)
    for e in g.edges():
        if e in witnessed:
            continue
        found = searcher.decide(k, include=(1 << e[0]) | (1 << e[1]))
        if found is not None:
            mark(found)
    return [e for e in g.edges() if e in witnessed]


def bad_edges(g: Graph) -> list[tuple[int, int]]:
    good = set(good_edges(g))
    return [e for e in g.edges() if e not in good]


# minimality notions ---------------------------------------------------------


def is_edge_minimal(g: Graph) -> bool:
    """Connected, min degree >= 2, and no edge can go while keeping both."""
    if g.n < 3 or not is_connected(g) or min_degree(g) < 2:
        return False
    deg = g.degrees()
    for u, v in g.edges():
        if deg[u] == 2 or deg[v] == 2:
            continue
        if not _bridge(g, u, v):
            return False
    return True


def _bridge(g: Graph, u: int, v: int) -> bool:
    h = delete_edge(g, (u, v))
    return not component_mask(h, u) >> v & 1


def is_half_minimal(g: Graph) -> bool:
    if not is_edge_minimal(g):
        return False
    return 2 * dtd_number(g).value >= g.n - 1


class OutOfScopeWarning(UserWarning):
    """A predicate was evaluated outside the class of graphs it is defined for."""


def special_vertex_check(g: Graph, v: int) -> tuple[bool, bool]:
    """(is_special, in_scope); in_scope is False when g is not edge-minimal."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} not in graph")
    deg = g.degrees()
    special = all(deg[u] == 2 or _bridge(g, u, v) for u in bits(g.adj[v]))
    return special, is_edge_minimal(g)


def is_special_vertex(g: Graph, v: int) -> bool:
    special, in_scope = special_vertex_check(g, v)
    if not in_scope:
        import warnings

        warnings.warn("special vertices are defined for edge-minimal graphs only", OutOfScopeWarning, stacklevel=2)
    return special


def special_vertices(g: Graph) -> VertexSet:
    return VertexSet.of(g.n, [v for v in range(g.n) if special_vertex_check(g, v)[0]])


def requires_no_isolated(g: Graph) -> None:
    if has_isolated_vertex(g):
        raise GraphError("graph has an isolated vertex")
