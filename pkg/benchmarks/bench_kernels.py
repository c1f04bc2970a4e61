"""Time the numba kernels against the pure-numpy/Python fallbacks.

    python benchmarks/bench_kernels.py [--repeat 3]

The first jit call is made before timing so compilation is not counted.
"""

import argparse
import time

import numpy as np

from contcolor import kernels
from contcolor.antichains import complete_graph, kneser_graph
from contcolor.graphs import cycle_graph, petersen_graph
from contcolor.order import homomorphism_search


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def hom(G, H, injective):
    return lambda: homomorphism_search(G, H, injective=injective).status


def cases():
    # exhaustive colorings: an odd cycle forces the full 2^(n-1) sweep
    c17 = cycle_graph(17).edge_array()
    eu, ev = kernels._split(c17)
    p = petersen_graph().edge_array()
    pu, pv = kernels._split(p)
    yield "2-coloring C17", lambda: kernels.two_colorable_jit(17, eu, ev), lambda: kernels._two_colorable_numpy(17, eu, ev)
    yield "3-coloring Petersen", lambda: kernels.colorable_jit(10, pu, pv, 3), lambda: kernels._colorable_numpy(10, pu, pv, 3)
    for name, G, H, inj in (
        ("hom K(6,2) -> K(5,2)", kneser_graph(6, 2), kneser_graph(5, 2), False),
        ("hom K(7,2) -> K4", kneser_graph(7, 2), complete_graph(4), False),
        ("hom K(8,3) -> K(6,2)", kneser_graph(8, 3), kneser_graph(6, 2), False),
        ("inj C9 -> Petersen", cycle_graph(9), petersen_graph(), True),
    ):
        yield name, ("jit", G, H, inj), ("py", G, H, inj)


def run_case(case, repeat):
    if callable(case):
        return best_of(case, repeat)
    path, G, H, inj = case
    kernels.USE_NUMBA = path == "jit"
    try:
        return best_of(hom(G, H, inj), repeat)
    finally:
        kernels.USE_NUMBA = kernels.numba is not None and not kernels.DISABLED


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.numba is None:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"{'case':<24}{'jit (s)':>12}{'fallback (s)':>14}{'speedup':>10}  agree")
    for name, fast, slow in cases():
        run_case(fast, 1)  # warm up / compile
        tj, rj = run_case(fast, args.repeat)
        tp, rp = run_case(slow, args.repeat)
        agree = bool(np.asarray(rj == rp).all())
        print(f"{name:<24}{tj:>12.4f}{tp:>14.4f}{tp / max(tj, 1e-9):>9.1f}x  {agree}")


if __name__ == "__main__":
    main()
