"""Exhaustive and streamed graph populations plus the extremal-verification harness.

A sweep filters a population down to candidates (minimum degree >= k and the
property fails), maximises a parameter over them and compares the result with
the family maximum. Labeled exhaustive sweeps run inside the compiled core over
chunks of the edge-mask range; chunk results are merged deterministically so
reports are byte-identical across runs and worker counts.
"""
from __future__ import annotations

import csv
import io
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from ._backend import core
from .families import FamilyMax, FamilySpec, build_family, erdos_threshold, family_max, min_degree_range
from .graph import Graph, Graph6Error, are_isomorphic, from_graph6, from_mask, invariant_key, to_graph6
from .hamilton import HamProperty, has_property
from .parameters import ParameterId

EXHAUSTIVE_CEILING = 7
FLAGGED_CEILING = 8
CHUNKS = 64
MAX_LISTED = 50


class SweepError(ValueError):
    """Invalid sweep specification or unusable population source."""


def _pairs(n: int) -> int:
    return n * (n - 1) // 2


def enumerate_labeled(n: int, allow_n8: bool = False) -> Iterator[Graph]:
    """All 2^C(n,2) labeled graphs in edge-mask order (bit i <-> i-th pair in graph6 order)."""
    _check_exhaustive(n, allow_n8)
    for mask in range(1 << _pairs(n)):
        yield from_mask(n, mask)


def _check_exhaustive(n: int, allow_n8: bool) -> None:
    ceiling = FLAGGED_CEILING if allow_n8 else EXHAUSTIVE_CEILING
    if not 1 <= n <= ceiling:
        hint = " (n = 8 needs allow_n8)" if n == FLAGGED_CEILING else ""
        raise SweepError(f"exhaustive enumeration supports 1 <= n <= {ceiling}, got {n}{hint}")


def connected_graphs(nmax: int, nmin: int = 1) -> Iterator[Graph]:
    """Every connected labeled graph with nmin <= n <= nmax, by order then mask."""
    for n in range(nmin, nmax + 1):
        for g in enumerate_labeled(n):
            if g.is_connected():
                yield g


def ingest_graph6(path: str | os.PathLike) -> Iterator[Graph]:
    """Parse a newline-delimited graph6 file; blank lines are skipped, orders must agree."""
    order = None
    with open(path, "rb") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line:
                continue
            try:
                g = from_graph6(line)
            except Graph6Error as exc:
                raise Graph6Error(f"{path}:{lineno}: {exc}") from None
            if order is None:
                order = g.n
            elif g.n != order:
                raise Graph6Error(f"{path}:{lineno}: order {g.n} differs from earlier order {order}")
            yield g


@dataclass(frozen=True)
class SweepSpec:
    n: int
    k: int
    prop: HamProperty
    parameter: ParameterId
    source: str = "exhaustive"  # or "graph6:<path>"
    tol: float = 1e-8
    allow_n8: bool = False

    def __post_init__(self):
        if not self.tol > 0:
            raise SweepError(f"tol must be positive, got {self.tol}")
        if self.k < 1:
            raise SweepError("k must be >= 1")
        if self.prop is HamProperty.CONNECTED and self.k < 2:
            raise SweepError("Hamiltonian-connected sweeps need k >= 2")
        if self.n < 3:
            raise SweepError(f"n={self.n} too small for any family member")
        if len(min_degree_range(self.prop, self.n, self.k)) == 0:
            raise SweepError(f"empty {self.prop.value} family range for n={self.n}, k={self.k}")
        if self.source == "exhaustive":
            _check_exhaustive(self.n, self.allow_n8)
        elif not self.source.startswith("graph6:") or len(self.source) == len("graph6:"):
            raise SweepError(f"unknown source {self.source!r}")

    @property
    def path(self) -> str | None:
        return self.source[len("graph6:"):] if self.source.startswith("graph6:") else None

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "property": self.prop.value, "parameter": str(self.parameter),
                "source": self.source, "tol": self.tol}


@dataclass
class SweepReport:
    spec: SweepSpec
    population_size: int
    candidates: int
    max_value: int | float | None
    argmax: list[str]
    family: FamilyMax
    match: bool
    counterexamples: list[str]
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "spec": self.spec.to_json(),
            "population_size": self.population_size,
            "candidates": self.candidates,
            "max_value": self.max_value,
            "argmax": list(self.argmax),
            "family": {"s_star": self.family.s_star, "value": self.family.value,
                       "per_s": {str(s): v for s, v in self.family.per_s.items()}},
            "match": self.match,
            "counterexamples": list(self.counterexamples),
        }
        out.update(self.extra)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"


CSV_FIELDS = ["n", "k", "property", "parameter", "source", "population_size", "candidates",
              "max_value", "s_star", "family_value", "argmax_classes", "match"]


def csv_summary(reports: list[SweepReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in reports:
        w.writerow([r.spec.n, r.spec.k, r.spec.prop.value, str(r.spec.parameter), r.spec.source,
                    r.population_size, r.candidates, r.max_value, r.family.s_star, r.family.value,
                    len(r.argmax), r.match])
    return buf.getvalue()


def default_jobs() -> int:
    env = os.environ.get("HAMEX_JOBS")
    if env:
        try:
            jobs = int(env)
        except ValueError:
            raise SweepError(f"HAMEX_JOBS must be an integer, got {env!r}") from None
        if jobs < 1:
            raise SweepError("HAMEX_JOBS must be >= 1")
        return jobs
    return os.cpu_count() or 1


def _scan_chunk(args):
    n, prop, k, pkind, pk, threshold, lo, hi, tol, floor, slack = args
    pop, cand, masks, vals = core.scan(n, prop, k, pkind, pk, threshold, lo, hi, tol)
    if masks:
        cut = min(floor, max(vals) - slack)
        kept = [(m, v) for m, v in zip(masks, vals) if v >= cut]
        masks, vals = [m for m, _ in kept], [v for _, v in kept]
    return pop, cand, masks, vals


def _exhaustive_hits(spec: SweepSpec, floor: float, slack: float, prefilter: bool, jobs: int):
    """(population, candidates, [(value, graph)]) with every candidate valued >= min(floor, max - slack)."""
    total = 1 << _pairs(spec.n)
    step = max(1, -(-total // CHUNKS))
    p = spec.parameter
    threshold = floor if prefilter else -math.inf
    eig_tol = min(spec.tol, 1e-12)
    tasks = [(spec.n, spec.prop.code, spec.k, p.code, p.k or 0, threshold, lo, min(lo + step, total),
              eig_tol, floor, slack) for lo in range(0, total, step)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_scan_chunk, tasks))
    else:
        results = [_scan_chunk(t) for t in tasks]
    pop = sum(r[0] for r in results)
    cand = sum(r[1] for r in results)
    hits = [(v, from_mask(spec.n, m)) for r in results for m, v in zip(r[2], r[3])]
    return pop, cand, hits


def _stream_hits(spec: SweepSpec, floor: float, slack: float):
    p = spec.parameter
    pop = cand = 0
    hits = []
    eig_tol = min(spec.tol, 1e-12)
    for g in ingest_graph6(spec.path):
        if g.n != spec.n:
            raise SweepError(f"stream graph of order {g.n} in a sweep for n={spec.n}")
        pop += 1
        if g.min_degree < spec.k or has_property(g, spec.prop):
            continue
        cand += 1
        hits.append((p.evaluate(g, eig_tol), g))
    if hits:
        cut = min(floor, max(v for v, _ in hits) - slack)
        hits = [(v, g) for v, g in hits if v >= cut]
    return pop, cand, hits


def iso_classes(graphs: list[Graph]) -> list[Graph]:
    """One representative (smallest graph6) per isomorphism class, sorted by graph6."""
    buckets: dict[tuple, list[Graph]] = {}
    for g in sorted(graphs, key=to_graph6):
        reps = buckets.setdefault(invariant_key(g), [])
        if not any(are_isomorphic(g, h) for h in reps):
            reps.append(g)
    return sorted((g for reps in buckets.values() for g in reps), key=to_graph6)


def _run(spec: SweepSpec, prefilter: bool, jobs: int | None, need_family_shape: bool) -> SweepReport:
    p = spec.parameter
    fam = family_max(p, spec.n, spec.k, spec.prop, min(spec.tol, 1e-12))
    slack = 0 if p.exact else spec.tol
    floor = fam.value - slack
    if spec.path is None:
        jobs = default_jobs() if jobs is None else jobs
        pop, cand, hits = _exhaustive_hits(spec, floor, slack, prefilter, jobs)
        if cand and not hits:
            # every candidate sits below the family value: recover the true maximum
            pop, cand, hits = _exhaustive_hits(spec, floor, slack, False, jobs)
    else:
        pop, cand, hits = _stream_hits(spec, floor, slack)

    if not hits:
        return SweepReport(spec, pop, cand, None, [], fam, False, [], {"note": "no candidates"})
    best = max(v for v, _ in hits)
    top = [g for v, g in hits if p.compare(v, best, spec.tol) == 0]
    argmax = iso_classes(top)
    over = [g for v, g in hits if p.compare(v, fam.value, spec.tol) > 0]
    counter = [to_graph6(g) for g in iso_classes(over)[:MAX_LISTED]]

    value_ok = p.compare(best, fam.value, spec.tol) == 0
    shape_ok = True
    if need_family_shape:
        members = [build_family(FamilySpec(spec.prop, spec.n, s))
                   for s in min_degree_range(spec.prop, spec.n, spec.k)]
        shape_ok = all(any(are_isomorphic(g, h) for h in members) for g in argmax)
    report = SweepReport(spec, pop, cand, best, [to_graph6(g) for g in argmax], fam,
                         value_ok and shape_ok, counter)
    if over:
        report.extra["counterexample_count"] = len(iso_classes(over))
    return report


def verify_theorem(spec: SweepSpec, prefilter: bool = True, jobs: int | None = None) -> SweepReport:
    """match iff the maximum equals the family maximum (within tol) and every
    argmax class is a family member with minimum degree >= k."""
    return _run(spec, prefilter, jobs, True)


def verify_erdos(n: int, k: int, allow_n8: bool = False, jobs: int | None = None,
                 source: str = "exhaustive") -> SweepReport:
    """Edge-count sweep for non-Hamiltonian graphs checked against the Erdos threshold too."""
    h = (n - 1) // 2
    if not 1 <= k <= h:
        raise SweepError(f"k={k} outside [1, {h}] for n={n}")
    spec = SweepSpec(n, k, HamProperty.CYCLE, ParameterId("e"), source, allow_n8=allow_n8)
    report = verify_theorem(spec, jobs=jobs)
    threshold = erdos_threshold(n, k)
    report.extra["threshold"] = threshold
    holds = report.max_value is not None and report.max_value <= threshold
    report.extra["threshold_holds"] = holds
    report.extra["threshold_attained"] = report.max_value == threshold
    report.match = report.match and holds and report.max_value == threshold
    return report


def verify_weak_bound(spec: SweepSpec, prefilter: bool = True, jobs: int | None = None) -> SweepReport:
    """Upper bound only: match iff max <= family max + tol.

    ``endpoint_max`` records whether the family maximum over s is reached at
    an end of the min-degree range.
    """
    if spec.parameter.kind != "nk":
        raise SweepError("weak-bound sweeps take a clique-count parameter")
    report = _run(spec, prefilter, jobs, False)
    p = spec.parameter
    report.match = report.max_value is not None and p.compare(report.max_value, report.family.value, spec.tol) <= 0
    rng = min_degree_range(spec.prop, spec.n, spec.k)
    ends = {rng.start, rng[-1]}
    report.extra["endpoint_max"] = any(
        p.compare(report.family.per_s[s], report.family.value, spec.tol) == 0 for s in ends)
    return report


def write_report(report: SweepReport, path: str | os.PathLike) -> None:
    Path(path).write_text(report.dumps(), encoding="utf-8")
