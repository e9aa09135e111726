"""Compare the compiled core with the pure-Python fallback on the hot kernels.

    python benchmarks/bench_core.py [--repeat 3]
"""
from __future__ import annotations

import argparse
import random
import time

from hamex import _pycore

try:
    from hamex import _core
except ImportError:
    _core = None


def _random_adj(rng: random.Random, n: int, p: float) -> list[int]:
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def _workloads():
    rng = random.Random(7)
    graphs = [_random_adj(rng, rng.randint(8, 11), rng.choice([0.3, 0.5, 0.7])) for _ in range(300)]
    return {
        "ham_cycle x300": lambda c: [c.ham_cycle(a) for a in graphs],
        "ham_connected x300": lambda c: [c.ham_connected(a) for a in graphs],
        "clique_count(4) x300": lambda c: [c.clique_count(a, 4) for a in graphs],
        "spectral_radius x300": lambda c: [c.spectral_radius(a, 1e-12) for a in graphs],
        "scan n=6 cycle e": lambda c: c.scan(6, 0, 1, 0, 0, 11, 0, 1 << 15, 1e-12),
        "scan n=6 cycle rho": lambda c: c.scan(6, 0, 1, 2, 0, 4.0, 0, 1 << 15, 1e-12),
    }


def _best(fn, backend, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn(backend)
        times.append(time.perf_counter() - t)
    return min(times)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _core is None:
        print("compiled core not built; only the fallback is timed")
    print(f"{'kernel':<24}{'python s':>12}{'compiled s':>12}{'speedup':>10}")
    for name, fn in _workloads().items():
        py = _best(fn, _pycore, args.repeat)
        if _core is None:
            print(f"{name:<24}{py:>12.4f}{'-':>12}{'-':>10}")
            continue
        if fn(_pycore) != fn(_core) and "spectral" not in name and "rho" not in name:
            raise SystemExit(f"backends disagree on {name}")
        cy = _best(fn, _core, args.repeat)
        print(f"{name:<24}{py:>12.4f}{cy:>12.4f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
