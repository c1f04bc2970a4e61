"""Independent brute-force oracles.

Nothing here calls the search code under test; the oracles only read the
plain data of presentations and graphs.
"""

from __future__ import annotations

from itertools import permutations, product
from math import lcm


def brute_two_coloring(vertices, edges):
    """All-assignments 2-coloring for small graphs; returns a coloring or None."""
    vertices = list(vertices)
    for bits in product((0, 1), repeat=len(vertices)):
        col = dict(zip(vertices, bits))
        if all(col[u] != col[v] for u, v in edges):
            return col
    return None


def brute_colorable(vertices, edges, c):
    vertices = list(vertices)
    for cols in product(range(c), repeat=len(vertices)):
        col = dict(zip(vertices, cols))
        if all(col[u] != col[v] for u, v in edges):
            return True
    return False


def brute_injective_hom(G, H):
    """Try every injective map; tiny graphs only."""
    gv, hv = list(G.vertices), list(H.vertices)
    hedges = {frozenset(e) for e in H.edges}
    for image in permutations(hv, len(gv)):
        m = dict(zip(gv, image))
        if all(frozenset((m[u], m[v])) in hedges for u, v in (tuple(e) for e in G.edges)):
            return m
    return None


# ------------------------------------------------------------------ Sigma_p


def sigma_p_data(p):
    """Orbit lengths and raw connector anchors straight from the tuple p.

    Orbit i has length lambda_i.  Connector i < l joins orbits i and i+1 with
    both anchors 0 (in the direction given by eps_i); the closing connector
    runs from orbit l to orbit 0 and lands m steps early, i.e. its right
    anchor is -m.
    """
    lengths = list(p.lambdas)
    conns = []
    for i, e in enumerate(p.epsilons):
        a, b = (i, i + 1) if e == 0 else (i + 1, i)
        conns.append((a, 0, b, 0))
    conns.append((p.l, 0, 0, (-p.m) % lengths[0]))
    return lengths, conns


def _shift_exists(lam1, r1, lam2, r2):
    # is there an integer s with s = r1 mod lam1 and s = r2 mod lam2
    return any(s % lam2 == r2 % lam2 for s in range(r1 % lam1, lcm(lam1, lam2) + lam1, lam1))


def _image_ok(la, ca, lb, cb, pi, d, t, e):
    """Can connector ca be carried onto cb with direction e, for some shift s?

    f^k z goes to f^(e*k + s) z'.  With e = +1 the right tail of z (points
    tending to a_R + r) goes to the right tail of z', tending to b_R + r + s,
    and continuity asks for d_R (a_R + r) + t_R.  With e = -1 it meets the
    left tail of z' and tends to b_L - r + s.  Either way d must equal e on
    orbits of length >= 3 and s = d*a + t - b at both ends.
    """
    L, aL, R, aR = ca
    L2, bL, R2, bR = cb
    if e > 0:
        if (pi[L], pi[R]) != (L2, R2):
            return False
        ends = ((L, aL, bL), (R, aR, bR))
    else:
        if (pi[L], pi[R]) != (R2, L2):
            return False
        ends = ((L, aL, bR), (R, aR, bL))
    needs = []
    for x, a, b in ends:
        lam = la[x]
        if lam >= 3 and d[x] != e:
            return False
        needs.append((lam, (d[x] * a + t[x] - b) % lam))
    (l1, r1), (l2, r2) = needs
    return _shift_exists(l1, r1, l2, r2)


def brute_sigma_p_equivalent(p, q) -> bool:
    la, ca = sigma_p_data(p)
    lb, cb = sigma_p_data(q)
    if sorted(la) != sorted(lb) or len(ca) != len(cb):
        return False
    n = len(la)
    for pi in permutations(range(n)):
        if any(la[i] != lb[pi[i]] for i in range(n)):
            continue
        for d in product((1, -1), repeat=n):
            if any(la[i] <= 2 and d[i] == -1 for i in range(n)):
                continue
            for t in product(*(range(x) for x in la)):
                for sigma in permutations(range(len(cb))):
                    if all(
                        any(_image_ok(la, ca[i], lb, cb[sigma[i]], pi, d, t, e) for e in (1, -1))
                        for i in range(len(ca))
                    ):
                        return True
    return False


# -------------------------------------------------------------------- X_nu


def x_nu_by_clauses(kappa, nu, K):
    """Vertex and edge sets of X_nu on blocks k < K, clause by clause.

    Points are (letter, exponent) for e^x (e+)^inf and ("lim", e) for e^inf.
    """
    S = [0]
    for k in range(K + 1):
        S.append(S[-1] + nu(k))

    def b0(k, j):
        return (0, 2 + j + S[k])

    def be(e, k, j):
        return (e, 2 + j + S[k])

    V = {("lim", e) for e in range(2 * kappa - 1)} | {(0, 1)}
    for k in range(K):
        for j in range(nu(k)):
            V.add(b0(k, j))
            letters = range(1, kappa) if k % 2 else range(kappa, 2 * kappa - 1)
            V |= {be(e, k, j) for e in letters}
    E = set()
    low, high = range(kappa), [0] + list(range(kappa, 2 * kappa - 1))
    E |= {frozenset({("lim", a), ("lim", b)}) for a in low for b in low if a != b}
    E |= {frozenset({("lim", a), ("lim", b)}) for a in high for b in high if a != b}
    E.add(frozenset({("lim", 0), (0, 1)}))
    E |= {frozenset({(0, 1), be(e, 0, 0)}) for e in range(kappa, 2 * kappa - 1)}
    for k in range(K):
        for j in range(nu(k)):
            if k % 2 == 0:
                grp = [0] + list(range(kappa, 2 * kappa - 1))
            else:
                grp = list(range(kappa))
            E |= {frozenset({be(a, k, j), be(b, k, j)}) for a in grp for b in grp if a != b}
    for k in range(K):
        if 2 * k + 1 < K:
            for j in range(nu(2 * k + 1)):
                for e in range(1, kappa):
                    E.add(frozenset({b0(2 * k, nu(2 * k) - 1 + j), be(e, 2 * k + 1, j)}))
        if 2 * k + 2 < K:
            for j in range(nu(2 * k + 2)):
                for e in range(kappa, 2 * kappa - 1):
                    E.add(frozenset({b0(2 * k + 1, nu(2 * k + 1) - 1 + j), be(e, 2 * k + 2, j)}))
    return V, E


def tail_equivalent_brute(nu, mu, horizon=60, shifts=20):
    """Agreement of nu(l+n) and mu(m+n) on a long window for small l, m."""
    return any(
        all(nu(l + n) == mu(m + n) for n in range(horizon)) for l in range(shifts) for m in range(shifts)
    )
