"""Search kernels over integer arrays.

Each kernel has a numba-compiled path and a pure-numpy/Python fallback.  The
fallback is used when numba is missing or ``CONTCOLOR_DISABLE_NUMBA`` is set
to a non-empty value other than ``0``.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

DISABLED = os.environ.get("CONTCOLOR_DISABLE_NUMBA", "") not in ("", "0")
USE_NUMBA = numba is not None and not DISABLED

FOUND, EXHAUSTED, OVER_BUDGET = 1, 0, -1


def _njit(fn):
    return numba.njit(cache=True)(fn) if numba is not None else fn


# -------------------------------------------------------------- exhaustive


def _two_colorable_loop(n, eu, ev):
    # vertex 0 is pinned to color 0
    if n <= 1:
        return True
    m = eu.shape[0]
    for mask in range(1 << (n - 1)):
        full = mask << 1
        ok = True
        for e in range(m):
            if ((full >> eu[e]) & 1) == ((full >> ev[e]) & 1):
                ok = False
                break
        if ok:
            return True
    return False


def _two_colorable_numpy(n, eu, ev, chunk=1 << 16):
    if n <= 1:
        return True
    total = 1 << (n - 1)
    for start in range(0, total, chunk):
        full = np.arange(start, min(total, start + chunk), dtype=np.int64) << 1
        a = (full[:, None] >> eu[None, :]) & 1
        b = (full[:, None] >> ev[None, :]) & 1
        if np.any(np.all(a != b, axis=1)):
            return True
    return False


def _colorable_loop(n, eu, ev, c):
    if n == 0:
        return True
    if c == 0:
        return False
    colors = np.zeros(n, dtype=np.int64)
    m = eu.shape[0]
    while True:
        ok = True
        for e in range(m):
            if colors[eu[e]] == colors[ev[e]]:
                ok = False
                break
        if ok:
            return True
        # odometer over vertices 1..n-1; vertex 0 stays 0
        i = n - 1
        while i >= 1:
            colors[i] += 1
            if colors[i] < c:
                break
            colors[i] = 0
            i -= 1
        if i < 1:
            return False


def _colorable_numpy(n, eu, ev, c, chunk=1 << 16):
    if n == 0:
        return True
    if c == 0:
        return False
    total = c ** (n - 1)
    powers = c ** np.arange(n - 1, dtype=np.int64)
    for start in range(0, total, chunk):
        codes = np.arange(start, min(total, start + chunk), dtype=np.int64)
        digits = np.zeros((codes.shape[0], n), dtype=np.int64)
        digits[:, 1:] = (codes[:, None] // powers[None, :]) % c
        if np.any(np.all(digits[:, eu] != digits[:, ev], axis=1)):
            return True
    return False


# ------------------------------------------------------------ backtracking


def _backtrack_hom(order, prev_ptr, prev_idx, adj_h, allowed, injective, budget):
    """Depth-first search for a homomorphism G -> H.

    ``order`` lists G's vertices; ``prev_idx[prev_ptr[p]:prev_ptr[p+1]]`` are
    the G-neighbours of ``order[p]`` placed earlier.  Returns (status,
    mapping, nodes).  Candidates are tried in increasing H index, so the
    first map found is the lexicographically least one in this order.
    """
    ng = order.shape[0]
    nh = adj_h.shape[0]
    mapping = np.full(ng, -1, dtype=np.int64)
    if ng == 0:
        return FOUND, mapping, 0
    used = np.zeros(nh, dtype=np.bool_)
    cand = np.full(ng, -1, dtype=np.int64)
    nodes = 0
    pos = 0
    while pos >= 0:
        u = order[pos]
        if mapping[u] >= 0:
            if injective:
                used[mapping[u]] = False
            mapping[u] = -1
        h = cand[pos] + 1
        found = False
        while h < nh:
            if allowed[u, h] and not (injective and used[h]):
                ok = True
                for t in range(prev_ptr[pos], prev_ptr[pos + 1]):
                    if not adj_h[h, mapping[prev_idx[t]]]:
                        ok = False
                        break
                if ok:
                    found = True
                    break
            h += 1
        if found:
            nodes += 1
            if nodes > budget:
                return OVER_BUDGET, mapping, nodes
            cand[pos] = h
            mapping[u] = h
            if injective:
                used[h] = True
            pos += 1
            if pos == ng:
                return FOUND, mapping, nodes
            cand[pos] = -1
        else:
            cand[pos] = -1
            pos -= 1
    return EXHAUSTED, mapping, nodes


two_colorable_jit = _njit(_two_colorable_loop)
colorable_jit = _njit(_colorable_loop)
backtrack_hom_jit = _njit(_backtrack_hom)
backtrack_hom_py = _backtrack_hom


def exhaustive_two_colorable(n: int, edges: np.ndarray) -> bool:
    eu, ev = _split(edges)
    if USE_NUMBA:
        return bool(two_colorable_jit(n, eu, ev))
    return _two_colorable_numpy(n, eu, ev)


def exhaustive_colorable(n: int, edges: np.ndarray, c: int) -> bool:
    eu, ev = _split(edges)
    if USE_NUMBA:
        return bool(colorable_jit(n, eu, ev, c))
    return _colorable_numpy(n, eu, ev, c)


def backtrack_hom(order, prev_ptr, prev_idx, adj_h, allowed, injective: bool, budget: int):
    fn = backtrack_hom_jit if USE_NUMBA else backtrack_hom_py
    status, mapping, nodes = fn(order, prev_ptr, prev_idx, adj_h, allowed, injective, budget)
    return int(status), mapping, int(nodes)


def _split(edges: np.ndarray):
    e = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    return np.ascontiguousarray(e[:, 0]), np.ascontiguousarray(e[:, 1])
