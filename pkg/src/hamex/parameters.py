"""Graph parameters (e, N_k, rho, q) and the feasibility-axiom checker."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from ._backend import core
from .errors import PreconditionError
from .graph import Graph, kelmans, to_graph6

EPS_CMP = 1e-9
EIG_TOL = 1e-10
P1_MARGIN = 1e-10


def edge_count(g: Graph) -> int:
    return g.edge_count()


def clique_count(g: Graph, k: int) -> int:
    """Number of k-vertex complete subgraphs (0 when k > n)."""
    if k < 1:
        raise ValueError("clique size must be >= 1")
    if k > g.n:
        return 0
    return core.clique_count(g.adj, k)


def _check_tol(tol: float) -> None:
    if not tol > 0 or math.isnan(tol):
        raise ValueError(f"tolerance must be positive, got {tol}")


def spectral_radius(g: Graph, tol: float = EIG_TOL) -> float:
    """Largest adjacency eigenvalue, accurate to ``tol`` (ConvergenceError otherwise)."""
    _check_tol(tol)
    return core.spectral_radius(g.adj, min(tol, 1e-12))


def signless_laplacian_radius(g: Graph, tol: float = EIG_TOL) -> float:
    """Largest eigenvalue of Q = A + D."""
    _check_tol(tol)
    return core.signless_radius(g.adj, min(tol, 1e-12))


@dataclass(frozen=True)
class ParameterId:
    kind: str
    k: int | None = None

    KINDS = ("e", "nk", "rho", "q")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown parameter kind {self.kind!r}")
        if self.kind == "nk":
            if self.k is None or self.k < 2:
                raise ValueError("clique_count needs k >= 2")
        elif self.k is not None:
            raise ValueError(f"{self.kind} takes no k")

    @classmethod
    def parse(cls, text: str) -> ParameterId:
        text = text.strip().lower()
        aliases = {"edge_count": "e", "edges": "e", "spectral_radius": "rho",
                   "signless_laplacian_radius": "q"}
        text = aliases.get(text, text)
        if text.startswith(("nk:", "clique_count:")):
            k = text.split(":", 1)[1]
            if not k.isdigit():
                raise ValueError(f"bad clique size in {text!r}")
            return cls("nk", int(k))
        if text == "nk":
            raise ValueError("clique parameter needs a size, e.g. nk:3")
        return cls(text)

    def __str__(self) -> str:
        return f"nk:{self.k}" if self.kind == "nk" else self.kind

    @property
    def exact(self) -> bool:
        """Integer-valued parameters compare exactly; spectral ones with a tolerance."""
        return self.kind in ("e", "nk")

    @property
    def code(self) -> int:
        return self.KINDS.index(self.kind)

    def evaluate(self, g: Graph, tol: float = EIG_TOL) -> int | float:
        if self.kind == "e":
            return g.edge_count()
        if self.kind == "nk":
            return clique_count(g, self.k)
        if self.kind == "rho":
            return spectral_radius(g, tol)
        return signless_laplacian_radius(g, tol)

    def compare(self, a: float, b: float, eps: float = EPS_CMP) -> int:
        """Three-way comparison: exact for integer parameters, within eps otherwise."""
        if self.exact:
            return (a > b) - (a < b)
        if abs(a - b) <= eps:
            return 0
        return 1 if a > b else -1


EDGE_COUNT = ParameterId("e")
SPECTRAL_RADIUS = ParameterId("rho")
SIGNLESS_RADIUS = ParameterId("q")


def clique_param(k: int) -> ParameterId:
    return ParameterId("nk", k)


@dataclass
class FeasibilityReport:
    parameter: ParameterId
    population: str
    strict: bool
    tol: float
    graphs: int = 0
    p1_strict_holds: bool = True
    p1_weak_holds: bool = True
    p2_holds: bool = True
    counterexample_count: int = 0
    # (graph6, operation, before, after, axiom)
    counterexamples: list[tuple] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        p1 = self.p1_strict_holds if self.strict else self.p1_weak_holds
        return p1 and self.p2_holds

    def to_json(self) -> dict:
        return {
            "parameter": str(self.parameter),
            "population": self.population,
            "strict": self.strict,
            "tol": self.tol,
            "graphs": self.graphs,
            "p1_strict_holds": self.p1_strict_holds,
            "p1_weak_holds": self.p1_weak_holds,
            "p2_holds": self.p2_holds,
            "passed": self.passed,
            "counterexample_count": self.counterexample_count,
            "counterexamples": [
                {"graph": g6, "operation": op, "before": b, "after": a, "axiom": ax}
                for g6, op, b, a, ax in self.counterexamples
            ],
        }


def check_feasibility(param: ParameterId, population: Iterable[Graph], strict_p1: bool = True,
                      tol: float = P1_MARGIN, description: str = "", limit: int | None = 200
                      ) -> FeasibilityReport:
    """Test (P1) edge addition and (P2) Kelmans monotonicity on every graph.

    Strict P1 needs after - before > tol for spectral parameters (> for
    integers); weak P1 and P2 need after >= before - tol. Counterexamples are
    sorted by (n, graph6, operation) and truncated to ``limit``.
    """
    report = FeasibilityReport(param, description, strict_p1, tol)
    spectral = not param.exact
    found: list[tuple] = []
    eig_tol = min(tol, 1e-12)
    for g in population:
        if spectral and not g.is_connected():
            raise PreconditionError(f"{to_graph6(g)} is disconnected; spectral feasibility is for connected graphs")
        report.graphs += 1
        base = param.evaluate(g, eig_tol)
        g6 = None
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if g.adj[u] >> v & 1:
                    continue
                after = param.evaluate(g.add_edge(u, v), eig_tol)
                diff = after - base
                strict_ok = diff > 0 if param.exact else diff > tol
                weak_ok = diff >= 0 if param.exact else diff >= -tol
                if not strict_ok:
                    report.p1_strict_holds = False
                    g6 = g6 or to_graph6(g)
                    found.append((g.n, g6, f"add {u}-{v}", base, after, "P1-strict" if weak_ok else "P1"))
                if not weak_ok:
                    report.p1_weak_holds = False
        for x in range(g.n):
            for y in range(g.n):
                if x == y:
                    continue
                h = kelmans(g, x, y)
                after = base if h is g else param.evaluate(h, eig_tol)
                ok = after >= base if param.exact else after >= base - tol
                if not ok:
                    report.p2_holds = False
                    g6 = g6 or to_graph6(g)
                    found.append((g.n, g6, f"kelmans {x}->{y}", base, after, "P2"))
    if report.graphs == 0:
        raise PreconditionError("empty population")
    found.sort(key=lambda r: (r[0], r[1], r[2]))
    report.counterexample_count = len(found)
    report.counterexamples = [r[1:] for r in (found if limit is None else found[:limit])]
    return report
