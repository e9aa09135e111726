# cython: language_level=3
"""Compiled kernels on 64-bit adjacency rows. Mirrors ``_pycore`` exactly."""
from libc.math cimport sqrt, fabs
from libc.stdint cimport uint64_t

from .errors import ConvergenceError

ctypedef uint64_t u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

NAME = "compiled"

PROP_CYCLE, PROP_PATH, PROP_CONNECTED = 0, 1, 2
PARAM_EDGES, PARAM_CLIQUES, PARAM_RHO, PARAM_Q = 0, 1, 2, 3

cdef enum:
    MAXN = 62
    MAXSWEEPS = 100
    MAXPAIRS = 1891


cdef inline int popc(u64 x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(u64 x) noexcept nogil:
    return __builtin_ctzll(x)


cdef inline u64 bit(int v) noexcept nogil:
    return (<u64>1) << v


cdef int _load(object adj, u64* rows) except -1:
    cdef Py_ssize_t n = len(adj)
    cdef Py_ssize_t i
    if n < 1 or n > MAXN:
        raise ValueError(f"order {n} outside 1..{MAXN}")
    for i in range(n):
        rows[i] = <u64>adj[i]
    return <int>n


cdef bint _connected(const u64* adj, u64 verts) noexcept nogil:
    cdef u64 seen, frontier, nb
    cdef int v
    if verts == 0:
        return True
    seen = verts & (~verts + 1)
    frontier = seen
    while frontier:
        v = ctz(frontier)
        frontier &= frontier - 1
        nb = adj[v] & verts & ~seen
        seen |= nb
        frontier |= nb
    return seen == verts


cdef bint _hc_dfs(const u64* adj, int cur, u64 unvisited, u64 startbit) noexcept nogil:
    cdef u64 avail, w, cand
    cdef int v
    if unvisited == 0:
        return (adj[cur] & startbit) != 0
    avail = unvisited | bit(cur) | startbit
    w = unvisited
    while w:
        v = ctz(w)
        w &= w - 1
        if popc(adj[v] & avail) < 2:
            return False
    if not _connected(adj, unvisited | bit(cur)):
        return False
    cand = adj[cur] & unvisited
    while cand:
        v = ctz(cand)
        cand &= cand - 1
        if _hc_dfs(adj, v, unvisited & ~bit(v), startbit):
            return True
    return False


cdef bint _ham_cycle(const u64* adj, int n) noexcept nogil:
    cdef int v
    cdef u64 full
    if n < 3:
        return False
    full = bit(n) - 1
    for v in range(n):
        if popc(adj[v]) < 2:
            return False
    if not _connected(adj, full):
        return False
    return _hc_dfs(adj, 0, full & ~(<u64>1), 1)


cdef bint _hp_dfs(const u64* adj, int cur, u64 unvisited) noexcept nogil:
    cdef u64 avail, w, cand
    cdef int v, d, ends = 0
    if unvisited == 0:
        return True
    avail = unvisited | bit(cur)
    w = unvisited
    while w:
        v = ctz(w)
        w &= w - 1
        d = popc(adj[v] & avail)
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
        v = ctz(cand)
        cand &= cand - 1
        if _hp_dfs(adj, v, unvisited & ~bit(v)):
            return True
    return False


cdef bint _ham_path(const u64* adj, int n) noexcept nogil:
    cdef u64 full, leaves = 0, starts
    cdef int v
    if n == 1:
        return True
    full = bit(n) - 1
    if not _connected(adj, full):
        return False
    for v in range(n):
        if popc(adj[v]) == 1:
            leaves |= bit(v)
    if popc(leaves) > 2:
        return False
    starts = leaves if leaves else full
    while starts:
        v = ctz(starts)
        starts &= starts - 1
        if _hp_dfs(adj, v, full & ~bit(v)):
            return True
    return False


cdef bint _hpp_dfs(const u64* adj, int cur, u64 unvisited, int target) noexcept nogil:
    cdef u64 avail, w, cand, tbit = bit(target)
    cdef int v
    if unvisited == tbit:
        return (adj[cur] & tbit) != 0
    avail = unvisited | bit(cur)
    if (adj[target] & avail) == 0:
        return False
    w = unvisited & ~tbit
    while w:
        v = ctz(w)
        w &= w - 1
        if popc(adj[v] & avail) < 2:
            return False
    if not _connected(adj, avail):
        return False
    cand = adj[cur] & unvisited & ~tbit
    while cand:
        v = ctz(cand)
        cand &= cand - 1
        if _hpp_dfs(adj, v, unvisited & ~bit(v), target):
            return True
    return False


cdef bint _ham_connected(const u64* adj, int n) noexcept nogil:
    cdef int u, v
    cdef u64 full
    if n == 1:
        return True
    if n == 2:
        return (adj[0] & 2) != 0
    if n >= 4:
        for v in range(n):
            if popc(adj[v]) < 3:
                return False
    if not _ham_cycle(adj, n):
        return False
    full = bit(n) - 1
    for u in range(n):
        for v in range(u + 1, n):
            if not _hpp_dfs(adj, u, full & ~bit(u), v):
                return False
    return True


cdef long long _cliques(const u64* adj, u64 cand, int need) noexcept nogil:
    cdef long long total = 0
    cdef int v
    if need == 0:
        return 1
    if need == 1:
        return popc(cand)
    while cand:
        v = ctz(cand)
        cand &= cand - 1
        total += _cliques(adj, cand & adj[v], need - 1)
    return total


cdef void _closure(u64* adj, int n, int t) noexcept nogil:
    cdef int deg[MAXN]
    cdef int u, v
    cdef bint changed = True
    for u in range(n):
        deg[u] = popc(adj[u])
    while changed:
        changed = False
        for u in range(n):
            for v in range(u + 1, n):
                if not (adj[u] >> v) & 1 and deg[u] + deg[v] >= t:
                    adj[u] |= bit(v)
                    adj[v] |= bit(u)
                    deg[u] += 1
                    deg[v] += 1
                    changed = True


cdef double _jacobi_max(double* a, int n, double tol, bint* ok) noexcept nogil:
    """Cyclic Jacobi; stops once the off-diagonal Frobenius norm is <= tol/2.

    By Weyl, the largest diagonal entry is then within tol/2 of the largest
    eigenvalue.
    """
    cdef int sweep, p, q, r
    cdef double off, apq, app, aqq, theta, t, c, s, x, y, best
    ok[0] = False
    if n == 1:
        ok[0] = True
        return a[0]
    for sweep in range(MAXSWEEPS):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += a[p * n + q] * a[p * n + q]
        if 2.0 * off <= 0.25 * tol * tol:
            ok[0] = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p * n + q]
                if fabs(apq) < 1e-300:
                    continue
                app = a[p * n + p]
                aqq = a[q * n + q]
                theta = (aqq - app) / (2.0 * apq)
                if fabs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                    if theta < 0:
                        t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for r in range(n):
                    x = a[r * n + p]
                    y = a[r * n + q]
                    a[r * n + p] = c * x - s * y
                    a[r * n + q] = s * x + c * y
                for r in range(n):
                    x = a[p * n + r]
                    y = a[q * n + r]
                    a[p * n + r] = c * x - s * y
                    a[q * n + r] = s * x + c * y
                a[p * n + q] = 0.0
                a[q * n + p] = 0.0
    best = a[0]
    for p in range(1, n):
        if a[p * n + p] > best:
            best = a[p * n + p]
    return best


cdef double _radius(const u64* adj, int n, bint signless, double tol, bint* ok) noexcept nogil:
    cdef double a[MAXN * MAXN]
    cdef int u, v
    for u in range(n):
        for v in range(n):
            a[u * n + v] = 1.0 if (adj[u] >> v) & 1 else 0.0
        if signless:
            a[u * n + u] = popc(adj[u])
    return _jacobi_max(a, n, tol, ok)


# -- Python surface -------------------------------------------------------

def ham_cycle(adj):
    cdef u64 rows[MAXN]
    cdef int n = _load(adj, rows)
    return _ham_cycle(rows, n)


def ham_path(adj):
    cdef u64 rows[MAXN]
    cdef int n = _load(adj, rows)
    return _ham_path(rows, n)


def ham_uv_path(adj, int u, int v):
    cdef u64 rows[MAXN]
    cdef int n = _load(adj, rows)
    if u == v:
        return n == 1
    return _hpp_dfs(rows, u, (bit(n) - 1) & ~bit(u), v)


def ham_connected(adj):
    cdef u64 rows[MAXN]
    cdef int n = _load(adj, rows)
    return _ham_connected(rows, n)


def clique_count(adj, int k):
    cdef u64 rows[MAXN]
    cdef int n = _load(adj, rows)
    return _cliques(rows, bit(n) - 1, k)


def closure(adj, int t):
    cdef u64 rows[MAXN]
    cdef int n = _load(adj, rows)
    cdef int v
    _closure(rows, n, t)
    return tuple([rows[v] for v in range(n)])


def spectral_radius(adj, double tol=1e-12):
    cdef u64 rows[MAXN]
    cdef int n = _load(adj, rows)
    cdef bint ok
    cdef double val = _radius(rows, n, False, tol, &ok)
    if not ok:
        raise ConvergenceError(f"Jacobi did not reach tol={tol} in {MAXSWEEPS} sweeps")
    return val


def signless_radius(adj, double tol=1e-12):
    cdef u64 rows[MAXN]
    cdef int n = _load(adj, rows)
    cdef bint ok
    cdef double val = _radius(rows, n, True, tol, &ok)
    if not ok:
        raise ConvergenceError(f"Jacobi did not reach tol={tol} in {MAXSWEEPS} sweeps")
    return val


cdef double _bound(const u64* adj, int n, int m, int pkind) noexcept nogil:
    cdef int deg[MAXN]
    cdef int u, v, best = 0
    cdef u64 w
    cdef double stanley
    for u in range(n):
        deg[u] = popc(adj[u])
        if deg[u] > best:
            best = deg[u]
    if pkind == 2:
        stanley = (sqrt(1.0 + 8.0 * m) - 1.0) / 2.0
        return stanley if stanley < best else <double>best
    best = 0
    for u in range(n):
        w = adj[u] & ~(bit(u + 1) - 1)
        while w:
            v = ctz(w)
            w &= w - 1
            if deg[u] + deg[v] > best:
                best = deg[u] + deg[v]
    return <double>best


def scan(int n, int prop, int k, int pkind, int pk, double threshold,
         u64 lo, u64 hi, double tol=1e-12):
    """See ``_pycore.scan``."""
    cdef int pi[MAXPAIRS]
    cdef int pj[MAXPAIRS]
    cdef u64 rows[MAXN]
    cdef u64 mask, rest
    cdef int i, j, idx, v, m
    cdef bint ok, has
    cdef long long candidates = 0
    cdef double val
    cdef long long ival
    if n < 1 or n > 11:
        raise ValueError("exhaustive scans support 1 <= n <= 11")
    idx = 0
    for j in range(1, n):
        for i in range(j):
            pi[idx] = i
            pj[idx] = j
            idx += 1
    masks = []
    values = []
    mask = lo
    while mask < hi:
        for v in range(n):
            rows[v] = 0
        rest = mask
        while rest:
            idx = ctz(rest)
            rest &= rest - 1
            rows[pi[idx]] |= bit(pj[idx])
            rows[pj[idx]] |= bit(pi[idx])
        ok = True
        for v in range(n):
            if popc(rows[v]) < k:
                ok = False
                break
        if ok:
            if prop == 0:
                has = _ham_cycle(rows, n)
            elif prop == 1:
                has = _ham_path(rows, n)
            else:
                has = _ham_connected(rows, n)
            if not has:
                candidates += 1
                if pkind == 0 or pkind == 1:
                    ival = popc(mask) if pkind == 0 else _cliques(rows, bit(n) - 1, pk)
                    if ival >= threshold:
                        masks.append(mask)
                        values.append(ival)
                else:
                    m = popc(mask)
                    if _bound(rows, n, m, pkind) >= threshold:
                        val = _radius(rows, n, pkind == 3, tol, &ok)
                        if not ok:
                            raise ConvergenceError("Jacobi did not converge during scan")
                        if val >= threshold:
                            masks.append(mask)
                            values.append(val)
        mask += 1
    return hi - lo, candidates, masks, values
