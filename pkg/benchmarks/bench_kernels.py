"""Compare the compiled and pure-Python universal-coloring kernels.

Run as: python3 benchmarks/bench_kernels.py

Each case runs the full for-all-colorings scan on both backends, asserts
identical results, and reports wall times and the speedup.
"""

import time

from ufw.largeness import pattern_configs
from ufw.largeness.kernels import _compiled, first_uncovered_coloring

CASES = [
    ("Ramsey K6, r=2 (covered)", ("clique", 2, 3), 2, 6),
    ("Ramsey K5, r=2 (avoidable)", ("clique", 2, 3), 2, 5),
    ("van der Waerden [9], 3-AP, r=2 (covered)", ("ap", 3), 2, 9),
    ("van der Waerden [10], 3-AP, r=3 (avoidable)", ("ap", 3), 3, 10),
    ("Schur [5], r=2 (covered)", ("fs", 2), 2, 5),
    ("Hales-Jewett {0,1}^4, r=2", ("line", 2), 2, 4),
]


def run_case(name, pattern, r, size):
    domain, configs = pattern_configs(pattern, size)
    results = {}
    times = {}
    for backend in ("compiled", "python"):
        t0 = time.perf_counter()
        results[backend] = first_uncovered_coloring(domain, r, configs, backend=backend)
        times[backend] = time.perf_counter() - t0
    assert results["compiled"] == results["python"], (name, results)
    speedup = times["python"] / max(times["compiled"], 1e-9)
    print(
        "%-45s domain=%3d configs=%4d  compiled %8.4fs  python %8.4fs  x%.1f"
        % (name, domain, len(configs), times["compiled"], times["python"], speedup)
    )


def main():
    if _compiled is None:
        raise SystemExit("compiled kernel unavailable; rebuild with Cython installed")
    for case in CASES:
        run_case(*case)


if __name__ == "__main__":
    main()
