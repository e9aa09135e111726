"""Pure-Python kernels. Same functions and semantics as the compiled ``_core``.

Adjacency is passed as a sequence of int bitsets, one row per vertex.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import ConvergenceError

NAME = "python"

PROP_CYCLE, PROP_PATH, PROP_CONNECTED = 0, 1, 2
PARAM_EDGES, PARAM_CLIQUES, PARAM_RHO, PARAM_Q = 0, 1, 2, 3


def _connected(adj, verts: int) -> bool:
    if not verts:
        return True
    seen = frontier = verts & -verts
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        nb = adj[low.bit_length() - 1] & verts & ~seen
        seen |= nb
        frontier |= nb
    return seen == verts


def _hc_dfs(adj, cur: int, unvisited: int, startbit: int) -> bool:
    if not unvisited:
        return bool(adj[cur] & startbit)
    avail = unvisited | (1 << cur) | startbit
    w = unvisited
    while w:
        low = w & -w
        w ^= low
        if (adj[low.bit_length() - 1] & avail).bit_count() < 2:
            return False
    if not _connected(adj, unvisited | (1 << cur)):
        return False
    cand = adj[cur] & unvisited
    while cand:
        low = cand & -cand
        cand ^= low
        if _hc_dfs(adj, low.bit_length() - 1, unvisited ^ low, startbit):
            return True
    return False


def ham_cycle(adj) -> bool:
    n = len(adj)
    if n < 3:
        return False
    full = (1 << n) - 1
    if any(row.bit_count() < 2 for row in adj) or not _connected(adj, full):
        return False
    return _hc_dfs(adj, 0, full & ~1, 1)


def _hp_dfs(adj, cur: int, unvisited: int) -> bool:
    if not unvisited:
        return True
    avail = unvisited | (1 << cur)
    ends = 0
    w = unvisited
    while w:
        low = w & -w
        w ^= low
        d = (adj[low.bit_length() - 1] & avail).bit_count()
        if d == 0:
            return False
        if d == 1:
            ends += 1
            if ends > 1:
                return False
    if not _connected(adj, avail):
        return False
    cand = adj[cur] & unvisited
    while cand:
        low = cand & -cand
        cand ^= low
        if _hp_dfs(adj, low.bit_length() - 1, unvisited ^ low):
            return True
    return False


def ham_path(adj) -> bool:
    n = len(adj)
    if n == 1:
        return True
    full = (1 << n) - 1
    if not _connected(adj, full):
        return False
    leaves = 0
    for v, row in enumerate(adj):
        if row.bit_count() == 1:
            leaves |= 1 << v
    if leaves.bit_count() > 2:
        return False
    starts = leaves or full
    while starts:
        low = starts & -starts
        starts ^= low
        if _hp_dfs(adj, low.bit_length() - 1, full ^ low):
            return True
    return False


def _hpp_dfs(adj, cur: int, unvisited: int, tbit: int) -> bool:
    if unvisited == tbit:
        return bool(adj[cur] & tbit)
    avail = unvisited | (1 << cur)
    target = tbit.bit_length() - 1
    if not adj[target] & avail:
        return False
    w = unvisited & ~tbit
    while w:
        low = w & -w
        w ^= low
        if (adj[low.bit_length() - 1] & avail).bit_count() < 2:
            return False
    if not _connected(adj, avail):
        return False
    cand = adj[cur] & unvisited & ~tbit
    while cand:
        low = cand & -cand
        cand ^= low
        if _hpp_dfs(adj, low.bit_length() - 1, unvisited ^ low, tbit):
            return True
    return False


def ham_uv_path(adj, u: int, v: int) -> bool:
    n = len(adj)
    if u == v:
        return n == 1
    full = (1 << n) - 1
    return _hpp_dfs(adj, u, full & ~(1 << u), 1 << v)


def ham_connected(adj) -> bool:
    n = len(adj)
    if n == 1:
        return True
    if n == 2:
        return bool(adj[0] & 2)
    if n >= 4 and min(row.bit_count() for row in adj) < 3:
        return False
    if not ham_cycle(adj):
        return False
    full = (1 << n) - 1
    for u in range(n):
        for v in range(u + 1, n):
            if not _hpp_dfs(adj, u, full & ~(1 << u), 1 << v):
                return False
    return True


def _cliques(adj, cand: int, need: int) -> int:
    if need == 0:
        return 1
    if need == 1:
        return cand.bit_count()
    total = 0
    while cand:
        low = cand & -cand
        cand ^= low
        total += _cliques(adj, cand & adj[low.bit_length() - 1], need - 1)
    return total


def clique_count(adj, k: int) -> int:
    return _cliques(adj, (1 << len(adj)) - 1, k)


def closure(adj, t: int) -> tuple:
    adj = list(adj)
    n = len(adj)
    deg = [row.bit_count() for row in adj]
    changed = True
    while changed:
        changed = False
        for u in range(n):
            for v in range(u + 1, n):
                if not adj[u] >> v & 1 and deg[u] + deg[v] >= t:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
                    deg[u] += 1
                    deg[v] += 1
                    changed = True
    return tuple(adj)


def _matrix(adj, signless: bool) -> np.ndarray:
    n = len(adj)
    a = np.zeros((n, n))
    for u, row in enumerate(adj):
        for v in range(n):
            if row >> v & 1:
                a[u, v] = 1.0
        if signless:
            a[u, u] = row.bit_count()
    return a


def _largest(a: np.ndarray) -> float:
    try:
        return float(np.linalg.eigvalsh(a)[-1])
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(str(exc)) from exc


def spectral_radius(adj, tol: float = 1e-12) -> float:
    # LAPACK symmetric solver; accuracy is machine precision, far below tol
    return _largest(_matrix(adj, False))


def signless_radius(adj, tol: float = 1e-12) -> float:
    return _largest(_matrix(adj, True))


def _bound(adj, n: int, m: int, pkind: int) -> float:
    deg = [row.bit_count() for row in adj]
    if pkind == PARAM_RHO:
        # Stanley: rho <= (-1 + sqrt(1 + 8m)) / 2; also rho <= max degree
        return min(max(deg), (math.sqrt(1 + 8 * m) - 1) / 2)
    # Anderson-Morley: q <= max over edges uv of d(u) + d(v)
    best = 0
    for u in range(n):
        w = adj[u] >> (u + 1)
        v = u + 1
        while w:
            if w & 1:
                best = max(best, deg[u] + deg[v])
            w >>= 1
            v += 1
    return float(best)


def _has_property(adj, prop: int) -> bool:
    if prop == PROP_CYCLE:
        return ham_cycle(adj)
    if prop == PROP_PATH:
        return ham_path(adj)
    return ham_connected(adj)


def scan(n: int, prop: int, k: int, pkind: int, pk: int, threshold: float,
         lo: int, hi: int, tol: float = 1e-12):
    """Classify edge masks lo..hi-1 on n vertices.

    Candidates are graphs with minimum degree >= k that lack the property.
    Returns (population, candidates, masks, values) where masks/values hold the
    candidates whose parameter value is >= threshold. Spectral values are only
    computed when a cheap upper bound reaches the threshold.
    """
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    masks: list[int] = []
    values: list = []
    candidates = 0
    for mask in range(lo, hi):
        adj = [0] * n
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            i, j = pairs[low.bit_length() - 1]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        if min(row.bit_count() for row in adj) < k:
            continue
        if _has_property(adj, prop):
            continue
        candidates += 1
        if pkind == PARAM_EDGES:
            val = mask.bit_count()
        elif pkind == PARAM_CLIQUES:
            val = clique_count(adj, pk)
        else:
            if _bound(adj, n, mask.bit_count(), pkind) < threshold:
                continue
            val = spectral_radius(adj, tol) if pkind == PARAM_RHO else signless_radius(adj, tol)
        if val >= threshold:
            masks.append(mask)
            values.append(val)
    return hi - lo, candidates, masks, values
