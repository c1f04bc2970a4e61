import os
import random
import subprocess
import sys

import numpy as np
import pytest

from contcolor import kernels
from contcolor.antichains import chromatic_number, kneser_graph
from contcolor.graphs import FiniteGraph, cycle_graph, petersen_graph
from contcolor.order import homomorphism_search
from oracles import brute_colorable


def _random_graph(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return n, np.array(edges, dtype=np.int64).reshape(-1, 2)


def test_exhaustive_paths_agree():
    rng = random.Random(11)
    for _ in range(60):
        n, E = _random_graph(rng, rng.randint(1, 9), rng.choice((0.2, 0.4, 0.6)))
        eu, ev = kernels._split(E)
        two = kernels._two_colorable_numpy(n, eu, ev)
        assert two == bool(kernels.two_colorable_jit(n, eu, ev)) == kernels._two_colorable_loop(n, eu, ev)
        for c in (1, 2, 3):
            expected = brute_colorable(range(n), [tuple(e) for e in E.tolist()], c)
            assert kernels._colorable_numpy(n, eu, ev, c) == expected
            assert bool(kernels.colorable_jit(n, eu, ev, c)) == expected
        assert two == brute_colorable(range(n), [tuple(e) for e in E.tolist()], 2)


def test_numpy_chunking():
    n, E = 12, cycle_graph(12).edge_array()
    eu, ev = kernels._split(E)
    assert kernels._two_colorable_numpy(n, eu, ev, chunk=64)
    assert not kernels._colorable_numpy(5, *kernels._split(cycle_graph(5).edge_array()), 2, chunk=4)


@pytest.mark.parametrize(
    "G,H,injective",
    [
        (cycle_graph(5), petersen_graph(), True),
        (cycle_graph(3), petersen_graph(), True),
        (kneser_graph(6, 2), kneser_graph(5, 2), False),
        (kneser_graph(5, 2), kneser_graph(6, 2), False),
    ],
)
def test_backtracking_paths_agree(monkeypatch, G, H, injective):
    fast = homomorphism_search(G, H, injective=injective)
    monkeypatch.setattr(kernels, "USE_NUMBA", False)
    slow = homomorphism_search(G, H, injective=injective)
    assert (fast.status, fast.mapping, fast.nodes) == (slow.status, slow.mapping, slow.nodes)


def test_chromatic_number_on_fallback(monkeypatch):
    monkeypatch.setattr(kernels, "USE_NUMBA", False)
    assert chromatic_number(kneser_graph(5, 2), 5).value == 3
    assert kernels.exhaustive_two_colorable(6, cycle_graph(6).edge_array())


def test_env_flag_selects_fallback():
    code = "from contcolor import kernels; print(kernels.DISABLED, kernels.USE_NUMBA)"
    env = dict(os.environ, CONTCOLOR_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["True", "False"]
    env["CONTCOLOR_DISABLE_NUMBA"] = "0"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split()[0] == "False"


def test_empty_graph():
    E = FiniteGraph([0], []).edge_array()
    assert kernels.exhaustive_two_colorable(1, E) and kernels.exhaustive_colorable(1, E, 1)
