"""Simple undirected graphs on vertices 0..n-1 with bitset adjacency rows.

Graphs are immutable values. Every operation here returns a new graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 62


class GraphError(ValueError):
    """Invalid graph construction (bad endpoint, self-loop, order)."""


class Graph6Error(ValueError):
    """Malformed graph6 record."""


def bits(x: int) -> Iterator[int]:
    """Yield the set bit positions of ``x`` in ascending order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def pair_index(i: int, j: int) -> int:
    """Position of the pair {i, j} in graph6 column order (0,1),(0,2),(1,2),..."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def min_degree(self) -> int:
        return min(self.degrees())

    @property
    def max_degree(self) -> int:
        return max(self.degrees())

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def mask(self) -> int:
        """Edge mask; bit ``pair_index(i, j)`` is set iff ij is an edge."""
        m = 0
        for u, v in self.edges():
            m |= 1 << pair_index(u, v)
        return m

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise GraphError(f"self-loop at {u}")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def add_edges(self, pairs: Iterable[tuple[int, int]]) -> Graph:
        adj = list(self.adj)
        for u, v in pairs:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        adj = [0] * self.n
        for u in range(self.n):
            row = 0
            for v in bits(self.adj[u]):
                row |= 1 << perm[v]
            adj[perm[u]] = row
        return Graph(self.n, tuple(adj))

    def induced_connected(self, verts: int) -> bool:
        if not verts:
            return True
        seen = frontier = verts & -verts
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nb = self.adj[low.bit_length() - 1] & verts & ~seen
            seen |= nb
            frontier |= nb
        return seen == verts

    def is_connected(self) -> bool:
        return self.induced_connected(self.full)

    def components(self) -> int:
        left, count = self.full, 0
        while left:
            seen = frontier = left & -left
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                nb = self.adj[low.bit_length() - 1] & ~seen
                seen |= nb
                frontier |= nb
            left &= ~seen
            count += 1
        return count

    def is_independent(self, verts: Iterable[int]) -> bool:
        vs = 0
        for v in verts:
            vs |= 1 << v
        return all(not (self.adj[v] & vs) for v in bits(vs))

    def is_subgraph_of(self, other: Graph) -> bool:
        return self.n == other.n and all(a & ~b == 0 for a, b in zip(self.adj, other.adj))

    def to_graph6(self) -> str:
        return to_graph6(self)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, g6={to_graph6(self)!r})" if self.n <= MAX_ORDER else f"Graph(n={self.n})"


def build(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside 1..{MAX_ORDER}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint out of range in ({u}, {v}) for n={n}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def from_mask(n: int, mask: int) -> Graph:
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> idx & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(adj))


def _check_order(n: int) -> None:
    if n > MAX_ORDER:
        raise GraphError(f"order {n} exceeds {MAX_ORDER}")


def join(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    _check_order(n)
    gall, hall = g.full, h.full << g.n
    adj = [row | hall for row in g.adj] + [(row << g.n) | gall for row in h.adj]
    return Graph(n, tuple(adj))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    _check_order(g.n + h.n)
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def kelmans(g: Graph, x: int, y: int) -> Graph:
    """G[x -> y]: move every neighbour of x that y does not already see over to y.

    Edge xy, if present, stays; so do edges from x to common neighbours.
    """
    if x == y:
        raise GraphError("Kelmans operation needs distinct vertices")
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise GraphError(f"vertex out of range: ({x}, {y})")
    moved = g.adj[x] & ~g.adj[y] & ~(1 << y)
    if not moved:
        return g
    adj = list(g.adj)
    swap = (1 << x) | (1 << y)
    for z in bits(moved):
        adj[z] ^= swap
    adj[x] &= ~moved
    adj[y] |= moved
    return Graph(g.n, tuple(adj))


# -- named graphs -----------------------------------------------------------

def empty(n: int) -> Graph:
    return build(n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    _check_order(n)
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    return build(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return join(empty(a), empty(b))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build(10, outer + spokes + inner)


# -- graph6 -----------------------------------------------------------------

def to_graph6(g: Graph) -> str:
    """Short-form graph6 (n <= 62), no header."""
    n = g.n
    if n > MAX_ORDER:
        raise Graph6Error(f"graph6 short form supports n <= {MAX_ORDER}, got {n}")
    out = [chr(63 + n)]
    acc = nacc = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(63 + acc))
                acc = nacc = 0
    if nacc:
        out.append(chr(63 + (acc << (6 - nacc))))
    return "".join(out)


def from_graph6(data: str | bytes) -> Graph:
    if isinstance(data, bytes):
        data = data.decode("ascii", errors="replace")
    s = data.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 record")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} at offset {pos} outside 63..126")
    n = ord(s[0]) - 63
    if n > MAX_ORDER:
        raise Graph6Error("long-form graph6 (n > 62) is not supported")
    if n == 0:
        raise Graph6Error("graph6 record with zero vertices")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[1:]
    if len(body) < need:
        raise Graph6Error(f"truncated bit section: need {need} bytes, got {len(body)}")
    if len(body) > need:
        raise Graph6Error(f"trailing bytes: need {need}, got {len(body)}")
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[idx // 6]) - 63
            if byte >> (5 - idx % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(adj))


# -- isomorphism ------------------------------------------------------------

def _colors(g: Graph) -> list[tuple]:
    deg = g.degrees()
    return [(deg[v], tuple(sorted(deg[u] for u in bits(g.adj[v])))) for v in range(g.n)]


def invariant_key(g: Graph) -> tuple:
    """Isomorphism invariant used to bucket graphs before pairwise testing."""
    return (g.n, g.edge_count(), tuple(sorted(_colors(g))))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking over degree-compatible assignments."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    cg, ch = _colors(g), _colors(h)
    if sorted(cg) != sorted(ch):
        return False
    n = g.n
    # place constrained vertices first: rare colour, then high degree
    freq: dict[tuple, int] = {}
    for c in cg:
        freq[c] = freq.get(c, 0) + 1
    order = sorted(range(n), key=lambda v: (freq[cg[v]], -cg[v][0], v))
    targets = {c: [w for w in range(n) if ch[w] == c] for c in set(cg)}
    image = [-1] * n
    used = 0

    def extend(pos: int) -> bool:
        nonlocal used
        if pos == n:
            return True
        v = order[pos]
        for w in targets[cg[v]]:
            if used >> w & 1:
                continue
            ok = True
            for u in order[:pos]:
                if bool(g.adj[v] >> u & 1) != bool(h.adj[w] >> image[u] & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used |= 1 << w
                if extend(pos + 1):
                    return True
                used &= ~(1 << w)
                image[v] = -1
        return False

    return extend(0)

