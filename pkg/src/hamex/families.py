"""Extremal families K_a v (bK_1 u K_c) and their closed-form parameters.

Vertex layout of every family graph: the join clique first, then the
independent set, then the remaining clique.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from math import comb

from .graph import Graph, complete, disjoint_union, empty, join
from .hamilton import HamProperty
from .parameters import EIG_TOL, ParameterId


class FamilyRangeError(ValueError):
    """Family index outside its legal range, or an empty index range."""


def legal_range(prop: HamProperty, n: int) -> range:
    if prop is HamProperty.CYCLE:
        return range(1, (n - 1) // 2 + 1)
    if prop is HamProperty.PATH:
        return range(2, n // 2 + 1)
    return range(1, n // 2)


def min_degree_range(prop: HamProperty, n: int, k: int) -> range:
    """Family indices whose members have minimum degree >= k."""
    full = legal_range(prop, n)
    start = {HamProperty.CYCLE: k, HamProperty.PATH: k + 1, HamProperty.CONNECTED: k - 1}[prop]
    return range(max(start, full.start), full.stop)


@dataclass(frozen=True)
class FamilySpec:
    prop: HamProperty
    n: int
    s: int

    def __post_init__(self):
        if self.s not in legal_range(self.prop, self.n):
            r = legal_range(self.prop, self.n)
            raise FamilyRangeError(
                f"s={self.s} outside {self.prop.value} range [{r.start}, {r.stop - 1}] for n={self.n}")

    @property
    def blocks(self) -> tuple[int, int, int]:
        """(join clique, independent set, remaining clique) sizes."""
        n, s = self.n, self.s
        if self.prop is HamProperty.CYCLE:
            return s, s, n - 2 * s
        if self.prop is HamProperty.PATH:
            return s - 1, s, n - 2 * s + 1
        return s + 1, s, n - 2 * s - 1

    @property
    def min_degree(self) -> int:
        return self.blocks[0]

    def label(self) -> str:
        a, b, c = self.blocks
        return f"K_{a} v ({b}K_1 u K_{c})"

    def to_json(self) -> dict:
        return {"property": self.prop.value, "n": self.n, "s": self.s}

    @classmethod
    def from_json(cls, data: dict) -> FamilySpec:
        return cls(HamProperty.parse(data["property"]), int(data["n"]), int(data["s"]))


def build_family(spec: FamilySpec) -> Graph:
    a, b, c = spec.blocks
    rest = empty(b)
    if c > 0:
        rest = disjoint_union(rest, complete(c))
    return join(complete(a), rest) if a > 0 else rest


def family_edge_count(spec: FamilySpec) -> int:
    a, b, c = spec.blocks
    return comb(a, 2) + comb(c, 2) + a * (b + c)


def family_clique_count(spec: FamilySpec, k: int) -> int:
    """Cliques live in the clique K_{a+c}, or use one independent vertex plus k-1 join vertices.

    For the cycle family this is C(n-s, k) + s*C(s, k-1).
    """
    if k < 1:
        raise ValueError("clique size must be >= 1")
    a, b, c = spec.blocks
    return comb(a + c, k) + b * comb(a, k - 1)


def alt_clique_formula(n: int, s: int, k: int) -> int:
    """s*C(s-1, k-1) + C(n-s, k), a variant quoted for the cycle family.

    It undercounts that family (it is the path-family count); kept so reports
    can flag where the two disagree.
    """
    return s * comb(s - 1, k - 1) + comb(n - s, k)


def family_value(param: ParameterId, spec: FamilySpec, tol: float = EIG_TOL) -> int | float:
    if param.kind == "e":
        return family_edge_count(spec)
    if param.kind == "nk":
        return family_clique_count(spec, param.k)
    return param.evaluate(build_family(spec), tol)


@dataclass(frozen=True)
class FamilyMax:
    s_star: int
    value: int | float
    per_s: dict[int, int | float]


def family_max(param: ParameterId, n: int, k: int, prop: HamProperty, tol: float = EIG_TOL) -> FamilyMax:
    """Maximise the parameter over family members with minimum degree >= k.

    Ties go to the smallest s.
    """
    rng = min_degree_range(prop, n, k)
    if len(rng) == 0:
        raise FamilyRangeError(f"no {prop.value} family member on n={n} has minimum degree >= {k}")
    per_s = {s: family_value(param, FamilySpec(prop, n, s), tol) for s in rng}
    best = rng.start
    for s in rng:
        if param.compare(per_s[s], per_s[best], tol) > 0:
            best = s
    return FamilyMax(best, per_s[best], per_s)


def erdos_threshold(n: int, k: int) -> int:
    """max{C(n-k, 2) + k^2, C(n-h, 2) + h^2} with h = floor((n-1)/2)."""
    h = (n - 1) // 2
    if not 1 <= k <= h:
        raise FamilyRangeError(f"k={k} outside [1, {h}] for n={n}")
    return max(comb(n - k, 2) + k * k, comb(n - h, 2) + h * h)


def quotient_spectral_radius(n: int, s: int) -> float:
    """Perron root of the 3x3 quotient of the cycle family's equitable partition.

    Newton's method from above the largest root of the (real-rooted)
    characteristic polynomial converges monotonically to that root.
    """
    FamilySpec(HamProperty.CYCLE, n, s)
    c = n - 2 * s
    m = [[s - 1, s, c], [s, 0, 0], [s, 0, c - 1]]
    # det(xI - M) = x^3 - tr x^2 + (sum of principal 2-minors) x - det
    tr = m[0][0] + m[1][1] + m[2][2]
    minors = (m[0][0] * m[1][1] - m[0][1] * m[1][0]
              + m[0][0] * m[2][2] - m[0][2] * m[2][0]
              + m[1][1] * m[2][2] - m[1][2] * m[2][1])
    det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
           - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
           + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))

    def p(x):
        return ((x - tr) * x + minors) * x - det

    def dp(x):
        return (3 * x - 2 * tr) * x + minors

    x = float(n)  # above every eigenvalue (row sums are n - 1)
    for _ in range(200):
        step = p(x) / dp(x)
        x -= step
        if abs(step) < 1e-15 * max(1.0, x):
            break
    return x


def family_table_csv(param: ParameterId, n: int, k: int, prop: HamProperty, tol: float = EIG_TOL) -> str:
    fm = family_max(param, n, k, prop, tol)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["property", "n", "k", "s", "parameter", "value"])
    for s, v in fm.per_s.items():
        w.writerow([prop.value, n, k, s, str(param), v])
    return buf.getvalue()
