"""Kelmans reductions of a property-failing graph onto an extremal family member.

Pipeline: deficiency set S -> algorithm1 (make S independent) -> relabel ->
algorithm2 (pack S-neighbourhoods into the first r vertices of T) -> host.
Every step is a Kelmans operation, so any parameter that is monotone under
Kelmans moves and edge additions is non-decreasing along
G, Gamma, Gamma*, host.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreconditionError
from .families import FamilySpec, build_family, family_value
from .graph import Graph, from_graph6, kelmans, to_graph6
from .hamilton import HamProperty, find_deficiency_set, has_property
from .parameters import EPS_CMP, EIG_TOL, ParameterId


class ReductionError(RuntimeError):
    """A step that the underlying lemmas guarantee failed; indicates a bug."""


@dataclass(frozen=True)
class KelmansStep:
    source: int
    target: int
    stage: str  # "algo1" or "algo2"

    def __post_init__(self):
        if self.source == self.target:
            raise ValueError("Kelmans step needs distinct vertices")


def _check_partition(n: int, S: Sequence[int], T: Sequence[int]) -> None:
    if sorted(list(S) + list(T)) != list(range(n)):
        raise PreconditionError("S and T must partition the vertex set")


def algorithm1(g: Graph, S: Sequence[int], T: Sequence[int]) -> tuple[Graph, list[KelmansStep]]:
    """Make S independent. For each edge u_i u_j (i < j), move u_i onto the
    first v_t in T that u_j does not see."""
    _check_partition(g.n, S, T)
    if len(S) > len(T):
        raise PreconditionError("|S| must not exceed |T|")
    tmask = sum(1 << v for v in T)
    earlier = 0
    for i, u in enumerate(S):
        if i and (g.adj[u] & (tmask | earlier)).bit_count() > len(T):
            raise PreconditionError(f"u_{i + 1}={u} has more than |T| neighbours in T and earlier S")
        earlier |= 1 << u
    gamma, steps = g, []
    for i, ui in enumerate(S):
        for uj in S[i + 1:]:
            if not gamma.adj[ui] >> uj & 1:
                continue
            for v in T:
                if not gamma.adj[uj] >> v & 1:
                    gamma = kelmans(gamma, ui, v)
                    steps.append(KelmansStep(ui, v, "algo1"))
                    break
            else:
                raise PreconditionError(f"no vertex of T is free of {uj}")
    return gamma, steps


def algorithm2(gamma: Graph, S: Sequence[int], T: Sequence[int], r: int) -> tuple[Graph, list[KelmansStep]]:
    """Push every S-neighbourhood into {v_1..v_r}. For each edge u_i v_j with
    j > r, move v_j onto the first v_t (t <= r) that u_i does not see."""
    _check_partition(gamma.n, S, T)
    if not gamma.is_independent(S):
        raise PreconditionError("S must be independent")
    deg = gamma.degrees()
    if S and r != max(deg[u] for u in S):
        raise PreconditionError(f"r={r} is not the maximum degree over S")
    if S and gamma.adj[S[0]] != sum(1 << v for v in T[:r]):
        raise PreconditionError("N(u_1) must be exactly {v_1, ..., v_r}")
    star, steps = gamma, []
    for u in S:
        for vj in T[r:]:
            if not star.adj[u] >> vj & 1:
                continue
            for vt in T[:r]:
                if not star.adj[u] >> vt & 1:
                    star = kelmans(star, vj, vt)
                    steps.append(KelmansStep(vj, vt, "algo2"))
                    break
            else:
                raise PreconditionError(f"{u} already sees all of v_1..v_r")
    return star, steps


def host_index(prop: HamProperty, s: int) -> int:
    # the H-C witness has s-1 vertices of degree <= s; its host is indexed by s-1
    return s - 1 if prop is HamProperty.CONNECTED else s


@dataclass(frozen=True)
class ReductionCertificate:
    prop: HamProperty
    k: int
    s: int
    S: tuple[int, ...]
    relabeling: tuple[int, ...]
    steps: tuple[KelmansStep, ...]
    g: Graph
    gamma: Graph
    gamma_star: Graph
    r: int
    host: FamilySpec
    parameter: ParameterId
    chain: tuple

    def orders(self) -> tuple[list[int], list[int]]:
        """(S order, T order) used by algorithm2, read off the host embedding."""
        a, b, _ = self.host.blocks
        inv = [0] * self.g.n
        for v, pos in enumerate(self.relabeling):
            inv[pos] = v
        return inv[a:a + b], inv[:a] + inv[a + b:]

    def to_json(self) -> dict:
        return {
            "property": self.prop.value,
            "k": self.k,
            "s": self.s,
            "S": list(self.S),
            "relabeling": list(self.relabeling),
            "steps": [[st.source, st.target, st.stage] for st in self.steps],
            "G": to_graph6(self.g),
            "gamma": to_graph6(self.gamma),
            "gamma_star": to_graph6(self.gamma_star),
            "r": self.r,
            "host": self.host.to_json(),
            "parameter": str(self.parameter),
            "chain": list(self.chain),
        }

    @classmethod
    def from_json(cls, data: dict) -> ReductionCertificate:
        return cls(
            prop=HamProperty.parse(data["property"]),
            k=int(data["k"]),
            s=int(data["s"]),
            S=tuple(data["S"]),
            relabeling=tuple(data["relabeling"]),
            steps=tuple(KelmansStep(a, b, c) for a, b, c in data["steps"]),
            g=from_graph6(data["G"]),
            gamma=from_graph6(data["gamma"]),
            gamma_star=from_graph6(data["gamma_star"]),
            r=int(data["r"]),
            host=FamilySpec.from_json(data["host"]),
            parameter=ParameterId.parse(data["parameter"]),
            chain=tuple(data["chain"]),
        )


def reduce(g: Graph, prop: HamProperty, k: int, param: ParameterId, tol: float = EIG_TOL) -> ReductionCertificate:
    if k < 1:
        raise PreconditionError("k must be >= 1")
    if prop is HamProperty.CONNECTED and k < 2:
        raise PreconditionError("the Hamiltonian-connected reduction needs k >= 2")
    if g.min_degree < k:
        raise PreconditionError(f"minimum degree {g.min_degree} < k={k}")
    if has_property(g, prop):
        raise PreconditionError(f"graph has the {prop.value} property; nothing to reduce")
    ds = find_deficiency_set(g, prop)
    if ds is None:
        raise ReductionError(f"no deficiency set in a graph lacking the {prop.value} property")
    S = list(ds.members)
    T = [v for v in range(g.n) if not ds.mask >> v & 1]
    gamma, steps1 = algorithm1(g, S, T)

    gdeg = gamma.degrees()
    u1 = min(S, key=lambda v: (-gdeg[v], v))
    r = gdeg[u1]
    S2 = [u1] + [v for v in S if v != u1]
    near = gamma.neighbors(u1)
    T2 = near + [v for v in T if not gamma.adj[u1] >> v & 1]
    star, steps2 = algorithm2(gamma, S2, T2, r)

    host = FamilySpec(prop, g.n, host_index(prop, ds.s))
    a, b, _ = host.blocks
    if b != len(S) or r > a:
        raise ReductionError("host family does not fit the reduced graph")
    perm = [0] * g.n
    for pos, v in enumerate(T2[:a]):
        perm[v] = pos
    for pos, v in enumerate(S2):
        perm[v] = a + pos
    for pos, v in enumerate(T2[a:]):
        perm[v] = a + b + pos
    chain = (param.evaluate(g, tol), param.evaluate(gamma, tol), param.evaluate(star, tol),
             family_value(param, host, tol))
    return ReductionCertificate(prop, k, ds.s, tuple(sorted(S)), tuple(perm), tuple(steps1 + steps2),
                                g, gamma, star, r, host, param, chain)


def certificate_problems(cert: ReductionCertificate, params: ParameterId | Iterable[ParameterId] | None = None,
                         tol: float = EPS_CMP) -> list[str]:
    """Replay a certificate from scratch and list every violated invariant."""
    problems: list[str] = []
    g, n = cert.g, cert.g.n
    if sorted(cert.relabeling) != list(range(n)):
        return ["relabeling is not a permutation"]
    try:
        expect = host_index(cert.prop, cert.s)
        if cert.host.prop is not cert.prop or cert.host.n != n or cert.host.s != expect:
            problems.append("host spec does not match property and deficiency index")
        a, b, _ = cert.host.blocks
    except Exception as exc:  # malformed host
        return [f"bad host: {exc}"]
    smask = sum(1 << v for v in cert.S)
    if len(cert.S) != b or smask.bit_count() != b or any(not 0 <= v < n for v in cert.S):
        return ["S does not match the host's independent set size"]
    S_order, T_order = cert.orders()
    if sorted(S_order) != sorted(cert.S):
        problems.append("relabeling does not place S on the host's independent set")

    h = g
    stage = "algo1"
    for i, st in enumerate(cert.steps):
        if st.stage not in ("algo1", "algo2") or (stage == "algo2" and st.stage == "algo1"):
            problems.append(f"step {i} out of stage order")
            break
        if st.stage == "algo2" and stage == "algo1":
            if h != cert.gamma:
                problems.append("replayed algorithm1 steps do not give gamma")
            stage = "algo2"
        src_in_s = smask >> st.source & 1
        if st.stage == "algo1" and (not src_in_s or smask >> st.target & 1):
            problems.append(f"step {i}: algorithm1 moves S onto T only")
        if st.stage == "algo2" and (src_in_s or smask >> st.target & 1):
            problems.append(f"step {i}: algorithm2 moves within T only")
        try:
            h = kelmans(h, st.source, st.target)
        except Exception as exc:
            problems.append(f"step {i}: {exc}")
            return problems
    if stage == "algo1" and h != cert.gamma:
        problems.append("replayed algorithm1 steps do not give gamma")
    if h != cert.gamma_star:
        problems.append("replayed steps do not give gamma_star")

    if not cert.gamma.is_independent(cert.S):
        problems.append("S not independent in gamma")
    if not cert.gamma_star.is_independent(cert.S):
        problems.append("S not independent in gamma_star")
    d1, d2 = cert.gamma.degrees(), cert.gamma_star.degrees()
    if any(d1[u] != d2[u] for u in cert.S):
        problems.append("algorithm2 changed a degree inside S")
    if cert.S and cert.r != max(d1[u] for u in cert.S):
        problems.append("r is not the maximum S-degree in gamma")
    front = sum(1 << v for v in T_order[:cert.r])
    if any(cert.gamma_star.adj[u] & ~front for u in cert.S):
        problems.append("an S-neighbourhood escapes v_1..v_r")
    if not cert.gamma_star.relabel(cert.relabeling).is_subgraph_of(build_family(cert.host)):
        problems.append("gamma_star is not a subgraph of the host")

    if params is None:
        params = [cert.parameter]
    elif isinstance(params, ParameterId):
        params = [params]
    for p in params:
        vals = [p.evaluate(cert.g), p.evaluate(cert.gamma), p.evaluate(cert.gamma_star),
                family_value(p, cert.host)]
        for x, y in zip(vals, vals[1:]):
            if p.compare(x, y, tol) > 0:
                problems.append(f"{p} chain decreases: {vals}")
                break
        if p == cert.parameter:
            if len(cert.chain) != 4 or any(p.compare(x, y, tol) != 0 for x, y in zip(vals, cert.chain)):
                problems.append(f"stored {p} chain {list(cert.chain)} != recomputed {vals}")
            elif any(p.compare(x, y, tol) > 0 for x, y in zip(cert.chain, cert.chain[1:])):
                problems.append(f"stored {p} chain decreases")
    return problems


def verify_certificate(cert: ReductionCertificate, params: ParameterId | Iterable[ParameterId] | None = None,
                       tol: float = EPS_CMP) -> bool:
    """True iff the replay reproduces every graph and all invariants hold.

    ``params`` defaults to the certificate's own parameter; pass several to
    check their chains against a single replay.
    """
    try:
        return not certificate_problems(cert, params, tol)
    except Exception:
        return False
