"""Closed forms for cycles, paths and keys, and the known upper bounds."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .engine import Searcher, dtd_number
from .families import key, key_leaf
from .graph import delete_vertices


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def dtd_cycle(n: int) -> int:
    if n < 3:
        raise ValueError("cycle formula needs n >= 3")
    if n % 5 == 0:
        return 2 * n // 5
    return _ceil(Fraction(2 * (n + 1), 5))


def dtd_path(n: int) -> int:
    if n < 2:
        raise ValueError("path formula needs n >= 2")
    base = _ceil(Fraction(2 * (n + 1), 5))
    return base + 1 if n % 5 == 1 else base


STAR = "star"  # some minimum set contains the leaf y
DAGGER = "dagger"  # some minimum set S has S - {x} DT-dominating G - y
DOUBLE_DAGGER = "double-dagger"  # gamma_td(G - {x, y}) = gamma_td(G) - 2

# formula ids: value as a function of n = r + s
_FORMULAS = {
    "2n/5": lambda n: Fraction(2 * n, 5),
    "2(n-1)/5": lambda n: Fraction(2 * (n - 1), 5),
    "ceil 2n/5": lambda n: _ceil(Fraction(2 * n, 5)),
    "ceil 2(n+1)/5": lambda n: _ceil(Fraction(2 * (n + 1), 5)),
    "ceil 2(n-1)/5": lambda n: _ceil(Fraction(2 * (n - 1), 5)),
}

_S, _D, _DD = STAR, DAGGER, DOUBLE_DAGGER
_ROW_1 = (
    ("ceil 2(n+1)/5", {_S, _D}), ("ceil 2n/5", {_S}), ("ceil 2(n-1)/5", set()),
    ("ceil 2n/5", {_D}), ("ceil 2(n+1)/5", {_S, _D, _DD}),
)
#: KEY_TABLE[r % 5][s % 5] = (formula id, printed flags); r = 4 is not covered
KEY_TABLE = (
    (("2n/5", {_S}), ("2(n-1)/5", set()), ("ceil 2n/5", {_D}), ("ceil 2n/5", {_S, _D, _DD}), ("ceil 2n/5", {_S, _D})),
    _ROW_1,
    (
        ("ceil 2(n+1)/5", {_S, _D, _DD}), ("ceil 2n/5", {_S, _D}), ("ceil 2(n-1)/5", {_S}),
        ("ceil 2n/5", set()), ("ceil 2(n+1)/5", {_D}),
    ),
    _ROW_1,
    (
        ("ceil 2(n+1)/5", {_S}), ("ceil 2n/5", {_S}), ("ceil 2(n-1)/5", set()),
        ("ceil 2n/5", {_D}), ("ceil 2(n+1)/5", {_S, _D, _DD}),
    ),
)


@dataclass(frozen=True)
class KeyEntry:
    value: int
    flags: frozenset[str]
    source: str  # "table" or "solver"


def key_cell(r: int, s: int) -> tuple[str, frozenset[str]]:
    if r == 4:
        raise ValueError("the table does not cover r = 4")
    formula, flags = KEY_TABLE[r % 5][s % 5]
    return formula, frozenset(flags)


def dtd_key(r: int, s: int) -> KeyEntry:
    """gamma_td of L_{r,s}: tabulated for r != 4, solved (with flags) for r = 4."""
    if r < 3 or s < 1:
        raise ValueError("keys need r >= 3 and s >= 1")
    if r == 4:
        flags = key_flags(r, s)
        return KeyEntry(dtd_number(key(r, s)).value, frozenset(f for f, ok in flags.items() if ok), "solver")
    formula, flags = key_cell(r, s)
    value = _FORMULAS[formula](r + s)
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise AssertionError(f"non-integral table value at ({r}, {s})")
        value = int(value)
    return KeyEntry(value, flags, "table")


def key_flags(r: int, s: int) -> dict[str, bool]:
    """Which of star / dagger / double-dagger hold on L_{r,s}, by constrained solves.

    The dagger is split by the leaf's membership, as printed: with the star
    ("star+dagger") a witnessing set contains y, without it ("dagger") it
    avoids y. Keys below ``DAGGER`` report whether either variant holds.
    """
    g = key(r, s)
    y, x = key_leaf(r, s)
    full = Searcher(g)
    gamma = full.minimum()[0]
    star = full.decide(gamma, include=1 << y) is not None
    # S - {x} must DT-dominate every vertex but y. The leaf itself may stay in
    # the set and still count for the vertices at distance 2 from it.
    others = Searcher(g, dtd_targets=g.all_mask & ~(1 << y))

    def dagger_with(y_in: bool) -> bool:
        inc = 1 << y if y_in else 0
        exc = 0 if y_in else 1 << y
        return any(
            others.satisfies(s_mask & ~(1 << x))
            for s_mask in full.iter_minimum_sets(gamma, include=inc, exclude=exc)
        )

    dag_in = dagger_with(True)
    dag_out = dagger_with(False)
    core, _ = delete_vertices(g, [x, y])
    double = False
    if core.n and min(core.degrees()) >= 1:
        double = dtd_number(core).value == gamma - 2
    return {STAR: star, "star+dagger": dag_in, "dagger-without-leaf": dag_out, DAGGER: dag_in or dag_out, DOUBLE_DAGGER: double}


def printed_flags_witnessed(r: int, s: int) -> dict[str, bool]:
    """For each flag printed in the table cell, whether a constrained solve witnesses it.

    A printed dagger is read together with the star in the same cell: with a
    star it needs a witnessing set containing y, alone it needs one avoiding y.
    """
    _, printed = key_cell(r, s)
    got = key_flags(r, s)
    out = {}
    if STAR in printed:
        out[STAR] = got[STAR]
    if DAGGER in printed:
        out[DAGGER] = got["star+dagger"] if STAR in printed else got["dagger-without-leaf"]
    if DOUBLE_DAGGER in printed:
        out[DOUBLE_DAGGER] = got[DOUBLE_DAGGER]
    return out


# upper bounds -----------------------------------------------------------------


@dataclass(frozen=True)
class Bound:
    value: int  # integer floor of ``exact``
    exact: Fraction
    rule: str


def dtd_upper_bound(n: int, delta: int, connected: bool, claw_free: bool) -> Optional[Bound]:
    """Tightest applicable known bound on gamma_td, or None."""
    options = []
    if connected and n >= 8:
        options.append((Fraction(2 * (n - 1), 3), "2(n-1)/3"))
    if connected and claw_free and n > 14:
        options.append((Fraction(4 * n, 7), "4n/7"))
    if connected and delta >= 2 and n >= 13:
        options.append((Fraction(n - 1, 2), "(n-1)/2"))
    if connected and delta >= 2 and n >= 8:
        options.append((Fraction(n, 2), "n/2"))
    if not options:
        return None
    exact, rule = min(options)
    return Bound(exact.numerator // exact.denominator, exact, rule)


__all__ = [
    "dtd_cycle", "dtd_path", "dtd_key", "KeyEntry", "KEY_TABLE", "key_cell", "key_flags",
    "printed_flags_witnessed", "dtd_upper_bound", "Bound", "STAR", "DAGGER", "DOUBLE_DAGGER",
]
