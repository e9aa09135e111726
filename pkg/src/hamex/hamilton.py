"""Exact Hamiltonicity deciders, Bondy-Chvatal closure and deficiency sets."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from ._backend import core
from .errors import PreconditionError
from .graph import Graph


class HamProperty(enum.Enum):
    CYCLE = "cycle"
    PATH = "path"
    CONNECTED = "connected"

    @classmethod
    def parse(cls, text: str) -> HamProperty:
        aliases = {"hc": "connected", "h-c": "connected", "c": "cycle", "p": "path"}
        text = text.strip().lower()
        try:
            return cls(aliases.get(text, text))
        except ValueError:
            raise ValueError(f"unknown property {text!r}; use cycle, path or hc") from None

    @property
    def code(self) -> int:
        return _CODES[self]

    def holds(self, g: Graph) -> bool:
        return has_property(g, self)


_CODES = {HamProperty.CYCLE: 0, HamProperty.PATH: 1, HamProperty.CONNECTED: 2}


def has_hamilton_cycle(g: Graph) -> bool:
    """False for n < 3."""
    return core.ham_cycle(g.adj)


def has_hamilton_path(g: Graph) -> bool:
    return core.ham_path(g.adj)


def has_hamilton_uv_path(g: Graph, u: int, v: int) -> bool:
    return core.ham_uv_path(g.adj, u, v)


def is_hamilton_connected(g: Graph) -> bool:
    """Every pair of distinct vertices is joined by a spanning path.

    n = 1 is vacuously true; n = 2 needs the single edge.
    """
    return core.ham_connected(g.adj)


def has_property(g: Graph, prop: HamProperty) -> bool:
    if prop is HamProperty.CYCLE:
        return core.ham_cycle(g.adj)
    if prop is HamProperty.PATH:
        return core.ham_path(g.adj)
    return core.ham_connected(g.adj)


def closure(g: Graph, t: int) -> Graph:
    """Repeatedly join non-adjacent u, v with d(u) + d(v) >= t."""
    return Graph(g.n, core.closure(g.adj, t))


@dataclass(frozen=True)
class DeficiencySet:
    s: int
    members: tuple[int, ...]
    bound: int
    mode: HamProperty

    @property
    def mask(self) -> int:
        m = 0
        for v in self.members:
            m |= 1 << v
        return m


def deficiency_range(n: int, mode: HamProperty) -> range:
    """Legal s for the degree-deficiency witness of each property."""
    if mode is HamProperty.CYCLE:
        return range(1, (n - 1) // 2 + 1)
    if mode is HamProperty.PATH:
        return range(1, n // 2 + 1)
    return range(2, n // 2 + 1)


def find_deficiency_set(g: Graph, mode: HamProperty) -> DeficiencySet | None:
    """Smallest s admitting a degree-deficient witness set, or None.

    cycle: s vertices of degree <= s; path: s vertices of degree <= s-1;
    connected: s-1 vertices of degree <= s (requires minimum degree >= 2).
    Witnesses are taken by ascending degree, then label; ``members`` is
    reported in ascending label order.

    A returned set says nothing about the property itself. ``None`` does:
    the property must then hold.
    """
    deg = g.degrees()
    if mode is HamProperty.CONNECTED and min(deg) < 2:
        raise PreconditionError("connected mode needs minimum degree >= 2")
    ranked = sorted(range(g.n), key=lambda v: (deg[v], v))
    for s in deficiency_range(g.n, mode):
        if mode is HamProperty.CYCLE:
            size, bound = s, s
        elif mode is HamProperty.PATH:
            size, bound = s, s - 1
        else:
            size, bound = s - 1, s
        picked = [v for v in ranked if deg[v] <= bound][:size]
        if len(picked) == size:
            return DeficiencySet(s, tuple(sorted(picked)), bound, mode)
    return None
